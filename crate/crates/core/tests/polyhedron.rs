mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::*;
use ratvol::polyhedron::{
    closure_of_difference, equal_denominator_simplex, height_reduction, intersection, min_denominator,
    triangulate_union, union, AffineSubspace,
};
use ratvol::sample::{random_point_in_box, random_polyhedron, trial_rng, PolyConfig};
use ratvol::{rat, Error, IntVec, Polyhedron, Rat, RatPoint, Simplex};

fn config(n: usize) -> PolyConfig {
    PolyConfig { ambient_dim: n, max_simplex_dim: n, max_simplexes: 3, max_den: 3, coord_range: 2 }
}

fn in_any(p: &Polyhedron, x: &RatPoint) -> bool {
    p.simplexes().iter().any(|s| in_simplex(s, x))
}

fn sample(rng: &mut ratvol::sample::TrialRng, n: usize) -> RatPoint {
    let lo = vec![rat(-1, 2); n];
    let hi = vec![rat(5, 2); n];
    random_point_in_box(rng, &lo, &hi, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn union_triangulation_covers_inputs(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = trial_rng(seed, 0);
        let p = random_polyhedron(&mut rng, &config(n));
        let c = triangulate_union(n, p.simplexes()).unwrap();
        prop_assert!(c.validate().is_ok());
        for v in c.vertices() {
            prop_assert!(in_any(&p, &v));
        }
        for _ in 0..60 {
            let x = sample(&mut rng, n);
            let covered = c.maximal().iter().any(|s| in_simplex(s, &x));
            prop_assert_eq!(covered, in_any(&p, &x), "point {}", x);
        }
    }

    #[test]
    fn booleans_match_pointwise(seed in any::<u64>(), n in 1usize..=2) {
        let mut rng = trial_rng(seed, 1);
        let p = random_polyhedron(&mut rng, &config(n));
        let q = random_polyhedron(&mut rng, &config(n));
        let u = union(&p, &q).unwrap();
        let i = intersection(&p, &q).unwrap();
        let d = closure_of_difference(&p, &q).unwrap();
        for _ in 0..60 {
            let x = sample(&mut rng, n);
            let (a, b) = (in_any(&p, &x), in_any(&q, &x));
            prop_assert_eq!(in_any(&u, &x), a || b);
            prop_assert_eq!(in_any(&i, &x), a && b);
            if a && !b {
                prop_assert!(in_any(&d, &x));
            }
            if !a {
                prop_assert!(!in_any(&d, &x));
            }
        }
    }

    #[test]
    fn min_denominator_matches_oracle(
        eqs in (1usize..=3).prop_flat_map(|n| prop::collection::vec((prop::collection::vec(-3i64..=3, n), -6i64..=6), 1..=n))
    ) {
        let n = eqs[0].0.len();
        let f = AffineSubspace::from_equations(
            n,
            eqs.iter().map(|(a, t)| (IntVec::from_i64(a), BigInt::from(*t))).collect(),
        );
        match f {
            Ok(f) => {
                let d = min_denominator(&f).unwrap();
                let own: Vec<(Vec<i64>, i64)> =
                    f.equations().iter().map(|(a, t)| (to_i64(a), i64::try_from(t).unwrap())).collect();
                prop_assert_eq!(d.clone(), BigInt::from(min_denominator_oracle(&own)));
                let s = equal_denominator_simplex(&f).unwrap();
                prop_assert_eq!(s.dim(), f.dim());
                for v in s.vertices() {
                    prop_assert!(f.contains(v));
                    prop_assert_eq!(lcm_den(v), d.clone());
                }
            }
            Err(e) => {
                prop_assert_eq!(e, Error::EmptySubspace);
                // the oracle agrees there is no rational solution
                let a: Vec<Vec<Q>> = eqs.iter().map(|(r, _)| r.iter().map(|&x| q(x)).collect()).collect();
                let b: Vec<Q> = eqs.iter().map(|(_, t)| q(-t)).collect();
                prop_assert!(solve(&a, &b).is_none());
            }
        }
    }
}

#[test]
fn half_line_has_denominator_two() {
    // 2x = 1
    let f = AffineSubspace::from_equations(1, vec![(IntVec::from_i64(&[2]), BigInt::from(-1))]).unwrap();
    assert_eq!(min_denominator(&f).unwrap(), BigInt::from(2));
    assert_eq!(equal_denominator_simplex(&f).unwrap().vertices(), &[RatPoint::from_fracs(&[(1, 2)])]);
}

#[test]
fn denominators_of_lines() {
    // 3y = x + 1 contains (2, 1) so d_F = 1
    let f = AffineSubspace::from_equations(2, vec![(IntVec::from_i64(&[1, -3]), BigInt::from(1))]).unwrap();
    assert_eq!(min_denominator(&f).unwrap(), BigInt::from(1));
    // 3x + 3y = 1 has no integer point
    let g = AffineSubspace::from_equations(2, vec![(IntVec::from_i64(&[3, 3]), BigInt::from(-1))]).unwrap();
    assert_eq!(min_denominator(&g).unwrap(), BigInt::from(3));
}

#[test]
fn height_reduction_needs_positive_heights() {
    let basis = [IntVec::from_i64(&[1, 0]), IntVec::from_i64(&[0, -1])];
    assert_eq!(height_reduction(&basis), Err(Error::NotGraphPositioned));
}

#[test]
fn overlapping_segments_union() {
    let a = Simplex::new(vec![RatPoint::from_ints(&[0]), RatPoint::from_ints(&[2])]).unwrap();
    let b = Simplex::new(vec![RatPoint::from_ints(&[1]), RatPoint::from_ints(&[3])]).unwrap();
    let c = triangulate_union(1, &[a, b]).unwrap();
    let mut ends: Vec<Rat> = c.maximal().iter().flat_map(|s| s.vertices().iter().map(|v| v.coords()[0].clone())).collect();
    ends.sort();
    ends.dedup();
    assert_eq!(ends, vec![rat(0, 1), rat(1, 1), rat(2, 1), rat(3, 1)]);
}
