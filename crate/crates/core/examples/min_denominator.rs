//! Least denominators of affine subspaces and their equal-denominator simplexes.
//!
//!     cargo run --example min_denominator

use num_bigint::BigInt;
use ratvol::polyhedron::{equal_denominator_simplex, min_denominator};
use ratvol::{AffineSubspace, IntVec};

fn main() {
    let cases: [(usize, Vec<(Vec<i64>, i64)>); 4] = [
        (1, vec![(vec![2], -1)]),
        (2, vec![(vec![3, 3], -1)]),
        (3, vec![(vec![2, 4, 6], -3)]),
        (3, vec![(vec![1, 1, 0], -1), (vec![0, 2, 3], -1)]),
    ];
    for (n, eqs) in cases {
        let f = AffineSubspace::from_equations(n, eqs.iter().map(|(a, t)| (IntVec::from_i64(a), BigInt::from(*t))).collect())
            .unwrap();
        let shown: Vec<String> = eqs.iter().map(|(a, t)| format!("{a:?}·x = {}", -t)).collect();
        println!("F: {}", shown.join(", "));
        println!("  dim {}, d_F = {}", f.dim(), min_denominator(&f).unwrap());
        println!("  equal-denominator simplex {}", equal_denominator_simplex(&f).unwrap());
    }
}
