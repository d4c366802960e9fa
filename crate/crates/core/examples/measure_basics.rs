//! λ vectors of a few shapes, with the Lebesgue volume and a Monte Carlo
//! estimate for the full-dimensional ones.
//!
//!     cargo run --example measure_basics [FILE.json]

use num_traits::ToPrimitive;
use ratvol::io::read_polyhedron_file;
use ratvol::measure::{lebesgue_volume_of, monte_carlo_volume};
use ratvol::{lambda_vector, Polyhedron, RatPoint, Simplex};

fn report(name: &str, p: &Polyhedron) {
    let l: Vec<String> = lambda_vector(p).iter().map(|x| x.to_string()).collect();
    println!("{name}: λ = ({})", l.join(", "));
    if p.dim() == Some(p.ambient_dim()) {
        let exact = lebesgue_volume_of(p.canonical());
        let mc = monte_carlo_volume(p, 100_000, 1).unwrap();
        println!("  volume {exact} ≈ {:.5}, Monte Carlo {:.5} ± {:.5}", exact.0.to_f64().unwrap(), mc.estimate, mc.std_error);
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let (file, _) = read_polyhedron_file(path.as_ref()).expect("readable polyhedron file");
        report(&path, &file.to_polyhedron().expect("valid polyhedron"));
        return;
    }
    let seg = |a: (i64, i64), b: (i64, i64)| {
        Polyhedron::from_simplex(Simplex::new(vec![RatPoint::from_fracs(&[a]), RatPoint::from_fracs(&[b])]).unwrap())
    };
    report("[0, 1]", &seg((0, 1), (1, 1)));
    report("[1/5, 2/5]", &seg((1, 5), (2, 5)));
    report("{1/5}", &Polyhedron::from_simplex(Simplex::point(RatPoint::from_fracs(&[(1, 5)]))));
    let diag = Simplex::new(vec![RatPoint::from_ints(&[0, 0]), RatPoint::from_fracs(&[(1, 2), (1, 2)])]).unwrap();
    report("segment to (1/2, 1/2)", &Polyhedron::from_simplex(diag));
    let tet = Simplex::new(vec![
        RatPoint::from_ints(&[0, 0, 0]),
        RatPoint::from_fracs(&[(1, 2), (0, 1), (0, 1)]),
        RatPoint::from_fracs(&[(0, 1), (1, 2), (0, 1)]),
        RatPoint::from_ints(&[0, 0, 1]),
    ])
    .unwrap();
    report("tetrahedron", &Polyhedron::from_simplex(tet));
}
