//! On one affine subspace, λ and the Hausdorff measure differ by a constant.
//!
//!     cargo run --example proportionality

use ratvol::measure::{hausdorff_sq, kappa_sq, kappa_sq_with};
use ratvol::polyhedron::affine_hull;
use ratvol::{lambda, Polyhedron, RatPoint, Simplex};

fn main() {
    let segs = [
        [(0, 1), (0, 1), (1, 1), (2, 1)],
        [(1, 3), (2, 3), (2, 3), (4, 3)],
        [(-1, 2), (-1, 1), (3, 1), (6, 1)],
    ];
    for s in segs {
        let t = Simplex::new(vec![RatPoint::from_fracs(&[s[0], s[1]]), RatPoint::from_fracs(&[s[2], s[3]])]).unwrap();
        let l = lambda(&Polyhedron::from_simplex(t.clone()), 1);
        println!("{t}: λ₁ = {l}, ℋ² = {}, λ₁²/ℋ² = {}", hausdorff_sq(&t).value, kappa_sq_with(&t).unwrap());
    }
    let line = affine_hull(&Simplex::new(vec![RatPoint::from_ints(&[0, 0]), RatPoint::from_ints(&[1, 2])]).unwrap());
    println!("κ² of the line y = 2x: {}", kappa_sq(&line).unwrap());
}
