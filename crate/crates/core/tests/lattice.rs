mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use common::*;
use ratvol::lattice::{
    dehomogenize, gcd_maximal_minors, integer_solvable, lattice_points_half_open, primitive, smith_normal_form,
};
use ratvol::{den, homogeneous, IntMat, IntVec, RatPoint};

fn int_rows(k: usize, n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), k)
}

fn gens_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|n| (1..=n).prop_flat_map(move |k| int_rows(k, n)))
}

fn frac_point() -> impl Strategy<Value = Vec<(i64, i64)>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec((-20i64..=20, 1i64..=12), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parallelepiped_matches_brute_force(gens in gens_strategy()) {
        prop_assume!(minor_gcd(&gens) != 0);
        let iv: Vec<IntVec> = gens.iter().map(|g| IntVec::from_i64(g)).collect();
        let fast: BTreeSet<Vec<i64>> =
            lattice_points_half_open(&iv).unwrap().iter().map(|p| to_i64(&p.point)).collect();
        let slow: BTreeSet<Vec<i64>> = brute_parallelepiped(&gens).into_iter().collect();
        prop_assert_eq!(fast.len() as i128, minor_gcd(&gens));
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn minor_gcd_matches_enumeration(k in 1usize..=3, extra in 0usize..=3, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = k + extra;
        let rows: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        let iv: Vec<IntVec> = rows.iter().map(|r| IntVec::from_i64(r)).collect();
        let g = gcd_maximal_minors(&IntMat::from_rows(&iv, n));
        prop_assert_eq!(g, BigInt::from(minor_gcd(&rows)));
    }

    #[test]
    fn smith_form_round_trip(rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| int_rows(r, c))) {
        let n = rows[0].len();
        let m = IntMat::from_rows(&rows.iter().map(|r| IntVec::from_i64(r)).collect::<Vec<_>>(), n);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        prop_assert!(f.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn homogeneous_is_primitive(coords in frac_point()) {
        let p = RatPoint::from_fracs(&coords);
        let h = homogeneous(&p);
        prop_assert!(h.is_primitive());
        prop_assert_eq!(h.height(), &den(&p));
        prop_assert_eq!(&den(&p), &lcm_den(&p));
        prop_assert_eq!(dehomogenize(&h).unwrap(), p);
    }

    #[test]
    fn primitive_is_scale_invariant(v in prop::collection::vec(-9i64..=9, 1..=4), k in 1i64..=7) {
        let v = IntVec::from_i64(&v);
        prop_assume!(!v.is_zero());
        let p = primitive(&v).unwrap();
        prop_assert!(p.is_primitive());
        prop_assert_eq!(primitive(&v.scale(&BigInt::from(k))).unwrap(), p);
    }

    #[test]
    fn integer_solvability_matches_oracle(a in int_rows(2, 3), b in prop::collection::vec(-6i64..=6, 2)) {
        let m = IntMat::from_rows(&a.iter().map(|r| IntVec::from_i64(r)).collect::<Vec<_>>(), 3);
        let bb: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
        prop_assert_eq!(integer_solvable(&m, &bb), int_solvable(&a, &b));
    }
}

#[test]
fn zero_ray_has_no_primitive() {
    assert!(primitive(&IntVec::from_i64(&[0, 0])).is_err());
}

#[test]
fn dependent_generators_rejected() {
    let gens = [IntVec::from_i64(&[1, 2]), IntVec::from_i64(&[2, 4])];
    assert!(lattice_points_half_open(&gens).is_err());
}

#[test]
fn known_parallelepiped() {
    // (1,0), (1,2): index 2, the extra point is (1,1)
    let gens = [IntVec::from_i64(&[1, 0]), IntVec::from_i64(&[1, 2])];
    let pts: Vec<Vec<i64>> = lattice_points_half_open(&gens).unwrap().iter().map(|p| to_i64(&p.point)).collect();
    assert_eq!(pts, vec![vec![0, 0], vec![1, 1]]);
}
