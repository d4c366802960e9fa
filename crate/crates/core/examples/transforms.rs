//! Integer affine maps with unimodular linear part preserve every λ_d.
//!
//!     cargo run --example transforms

use ratvol::transforms::{embed, random_unimodular};
use ratvol::{lambda_vector, GnMap, IntMat, IntVec, Polyhedron, RatPoint, Simplex};

fn main() {
    let p = Polyhedron::from_simplex(
        Simplex::new(vec![RatPoint::from_fracs(&[(1, 3), (0, 1)]), RatPoint::from_ints(&[1, 1]), RatPoint::from_fracs(&[(0, 1), (1, 2)])])
            .unwrap(),
    );
    let show = |p: &Polyhedron| lambda_vector(p).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    println!("P = {}  λ = ({})", p.simplexes()[0], show(&p));
    for seed in 0..3 {
        let g = random_unimodular(2, seed, 6, 3);
        let q = g.apply_polyhedron(&p);
        println!("γ_{seed}(P) = {}  λ = ({})", q.simplexes()[0], show(&q));
    }
    println!("P in one more dimension: λ = ({})", show(&embed(&p)));
    match GnMap::new(IntMat::from_i64(2, 2, &[2, 0, 0, 1]), IntVec::from_i64(&[0, 0])) {
        Ok(_) => unreachable!(),
        Err(e) => println!("diag(2, 1): {e}"),
    }
}
