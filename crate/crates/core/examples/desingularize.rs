//! Resolving a singular fan by stellar subdivisions, then a regular
//! triangulation of a polyhedron through its lifted fan.
//!
//!     cargo run --example desingularize

use ratvol::fan::desingularize_logged;
use ratvol::{regular_triangulation, Cone, IntVec, Polyhedron, RatPoint, Simplex, SimplicialFan};

fn main() {
    let cone = Cone::new(vec![IntVec::from_i64(&[1, 0, 0]), IntVec::from_i64(&[0, 1, 0]), IntVec::from_i64(&[1, 1, 3])]).unwrap();
    println!("cone multiplicity {}", cone.multiplicity());
    let (fan, log) = desingularize_logged(&SimplicialFan::from_maximal(3, [cone]));
    for step in &log {
        let m: Vec<String> = step.replaced.iter().map(|r| r.multiplicity.to_string()).collect();
        println!("  ray {} replaces cones of multiplicity [{}]", step.ray, m.join(", "));
    }
    println!("{} maximal cones, regular: {}", fan.maximal().len(), fan.is_regular());

    let p = Polyhedron::from_simplex(
        Simplex::new(vec![RatPoint::from_ints(&[0, 0]), RatPoint::from_ints(&[2, 0]), RatPoint::from_fracs(&[(0, 1), (3, 2)])])
            .unwrap(),
    );
    let t = regular_triangulation(&p);
    println!("regular triangulation of {}: {} triangles", p.simplexes()[0], t.maximal().len());
}
