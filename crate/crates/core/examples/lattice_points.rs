//! Half-open parallelepipeds, homogeneous coordinates and the regularity test.
//!
//!     cargo run --example lattice_points

use ratvol::lattice::{gcd_maximal_minors, lattice_points_half_open, smith_normal_form};
use ratvol::{den, homogeneous, IntMat, IntVec, RatPoint};

fn main() {
    let p = RatPoint::from_fracs(&[(2, 3), (-1, 4)]);
    println!("x = {p}, den(x) = {}, x̃ = {}", den(&p), homogeneous(&p));

    let gens = vec![IntVec::from_i64(&[1, 0, 1]), IntVec::from_i64(&[1, 3, 1]), IntVec::from_i64(&[0, 1, 2])];
    let m = IntMat::from_rows(&gens, 3);
    println!("gcd of maximal minors: {}", gcd_maximal_minors(&m));
    let snf = smith_normal_form(&m);
    println!("invariant factors: {:?}", snf.invariant_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for pt in lattice_points_half_open(&gens).unwrap() {
        let mu: Vec<String> = pt.coefficients.iter().map(|c| c.to_string()).collect();
        println!("  {}  μ = ({})", pt.point, mu.join(", "));
    }
}
