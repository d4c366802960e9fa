//! The rational measures `λ_d` and the exact measures used to cross-check
//! them: determinant volume, squared Hausdorff measure and `κ_A²`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fan::regular_triangulation;
use crate::lattice::{den, Rat};
use crate::linalg;
use crate::polyhedron::{affine_hull, equal_denominator_simplex, same_support, AffineSubspace, Polyhedron};
use crate::simplicial::{den_simplex, is_regular, maximal_simplexes, Complex, Simplex};

/// An exact nonnegative measure value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeasureValue(pub Rat);

impl MeasureValue {
    pub fn zero() -> Self {
        MeasureValue(Rat::zero())
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(ℋᵐ)²` of an m-simplex, rational even when `ℋᵐ` is not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HausdorffSq {
    pub value: Rat,
    pub dim: usize,
}

impl HausdorffSq {
    /// Floating-point square root; approximate.
    pub fn approx_measure(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// `Σ 1/(i!·den(T))` over the maximal `i`-simplexes of a regular complex.
pub fn lambda_of_complex(delta: &Complex, i: usize) -> Result<MeasureValue> {
    let maximal = delta.maximal();
    if !maximal.iter().all(|s| is_regular(s)) {
        return Err(Error::NonRegularTriangulation);
    }
    Ok(sum_over(&maximal, i))
}

/// The sum for maximal simplexes already known to be regular, where den(T)
/// is the product of the vertex denominators.
fn sum_over(maximal: &[&Simplex], i: usize) -> MeasureValue {
    let fact = factorial(i);
    let total = maximal
        .iter()
        .filter(|t| t.dim() == i)
        .map(|t| Rat::new(BigInt::one(), &fact * t.vertices().iter().map(den).product::<BigInt>()))
        .sum();
    MeasureValue(total)
}

/// `λ(n, i, P, Δ)` for a regular triangulation `Δ` of `P`.
pub fn lambda_given(p: &Polyhedron, delta: &Complex, i: usize) -> Result<MeasureValue> {
    let maximal = delta.maximal();
    if !maximal.iter().all(|s| is_regular(s)) {
        return Err(Error::NonRegularTriangulation);
    }
    if delta.ambient_dim() != p.ambient_dim() || !same_support(p, delta) {
        return Err(Error::SupportMismatch);
    }
    Ok(sum_over(&maximal, i))
}

/// `λ_d(P)`, via the regular triangulation from fan desingularization.
pub fn lambda(p: &Polyhedron, d: usize) -> MeasureValue {
    sum_over(&regular_triangulation(p).maximal(), d)
}

/// `[λ_0(P), …, λ_n(P)]` from a single regular triangulation.
pub fn lambda_vector(p: &Polyhedron) -> Vec<MeasureValue> {
    let delta = regular_triangulation(p);
    let maximal = delta.maximal();
    (0..=p.ambient_dim()).map(|d| sum_over(&maximal, d)).collect()
}

fn edge_vectors(s: &Simplex) -> Vec<Vec<Rat>> {
    let v0 = &s.vertices()[0];
    s.vertices()[1..].iter().map(|v| v.sub(v0)).collect()
}

/// `|det(x₁−x₀, …, xₙ−x₀)| / n!` for a full-dimensional simplex.
pub fn lebesgue_volume(s: &Simplex) -> Result<MeasureValue> {
    if s.dim() != s.ambient_dim() {
        return Err(Error::NotFullDimensional);
    }
    let det = linalg::det(&edge_vectors(s)).abs();
    Ok(MeasureValue(det / Rat::from_integer(factorial(s.dim()))))
}

/// Sum of determinant volumes over the top simplexes of a triangulation.
pub fn lebesgue_volume_of(c: &Complex) -> MeasureValue {
    let n = c.ambient_dim();
    MeasureValue(
        maximal_simplexes(c, n)
            .members
            .iter()
            .map(|s| lebesgue_volume(s).expect("full-dimensional").0)
            .sum(),
    )
}

/// `det(Gram)/(m!)²` for an m-simplex; 1 for a point.
pub fn hausdorff_sq(s: &Simplex) -> HausdorffSq {
    let m = s.dim();
    if m == 0 {
        return HausdorffSq { value: Rat::one(), dim: 0 };
    }
    let e = edge_vectors(s);
    let gram: Vec<Vec<Rat>> = e.iter().map(|a| e.iter().map(|b| linalg::dot(a, b)).collect()).collect();
    let f = factorial(m);
    HausdorffSq { value: linalg::det(&gram) / Rat::from_integer(&f * &f), dim: m }
}

/// `λ_m(t)²·ℋ²(t2) = λ_m(t2)²·ℋ²(t)` for two m-simplexes with one affine hull.
pub fn proportionality_check(t: &Simplex, t2: &Simplex) -> Result<bool> {
    let (a, b) = (affine_hull(t), affine_hull(t2));
    if t.dim() != t2.dim() || !a.same_as(&b) {
        return Err(Error::DifferentAffineHulls);
    }
    let m = t.dim();
    let l1 = lambda(&Polyhedron::from_simplex(t.clone()), m).0;
    let l2 = lambda(&Polyhedron::from_simplex(t2.clone()), m).0;
    Ok(&l1 * &l1 * hausdorff_sq(t2).value == &l2 * &l2 * hausdorff_sq(t).value)
}

/// `κ_A² = λ_m(T)² / ℋ²(T)` for the equal-denominator simplex `T` of `A`.
pub fn kappa_sq(a: &AffineSubspace) -> Result<Rat> {
    let t = equal_denominator_simplex(a)?;
    kappa_sq_with(&t)
}

/// `λ_m(T)² / ℋ²(T)` for a given m-simplex `T`.
pub fn kappa_sq_with(t: &Simplex) -> Result<Rat> {
    let m = t.dim();
    let l = if is_regular(t) {
        Rat::new(BigInt::one(), factorial(m) * den_simplex(t)?)
    } else {
        lambda(&Polyhedron::from_simplex(t.clone()), m).0
    };
    Ok(&l * &l / hausdorff_sq(t).value)
}

/// Hit-or-miss volume estimate with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

impl MonteCarloEstimate {
    /// Whether `exact` lies within `k` standard errors (plus rounding slack).
    pub fn agrees_with(&self, exact: f64, k: f64) -> bool {
        (self.estimate - exact).abs() <= k * self.std_error + 1e-12
    }
}

/// Uniform sampling over the bounding box of a full-dimensional polyhedron.
/// Membership is tested in floating point.
pub fn monte_carlo_volume(p: &Polyhedron, samples: usize, seed: u64) -> Result<MonteCarloEstimate> {
    if p.is_empty() {
        return Ok(MonteCarloEstimate { estimate: 0.0, std_error: 0.0 });
    }
    let n = p.ambient_dim();
    if p.dim() != Some(n) {
        return Err(Error::ZeroVolumeTarget);
    }
    let tops: Vec<FloatSimplex> =
        maximal_simplexes(p.canonical(), n).members.iter().map(FloatSimplex::new).collect();
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for s in p.simplexes() {
        for v in s.vertices() {
            for (i, c) in v.coords().iter().enumerate() {
                let x = c.to_f64().unwrap();
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
    }
    let box_vol: f64 = lo.iter().zip(&hi).map(|(a, b)| b - a).product();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    let mut x = vec![0.0; n];
    for _ in 0..samples {
        for i in 0..n {
            x[i] = rng.gen_range(lo[i]..=hi[i]);
        }
        if tops.iter().any(|t| t.contains(&x)) {
            hits += 1;
        }
    }
    let frac = hits as f64 / samples as f64;
    Ok(MonteCarloEstimate {
        estimate: box_vol * frac,
        std_error: box_vol * (frac * (1.0 - frac) / samples as f64).sqrt(),
    })
}

/// Full-dimensional simplex with a precomputed inverse edge matrix.
struct FloatSimplex {
    origin: Vec<f64>,
    inverse: Vec<Vec<f64>>,
}

impl FloatSimplex {
    fn new(s: &Simplex) -> Self {
        let edges = edge_vectors(s);
        let n = edges.len();
        // columns are edges; invert exactly, then round
        let cols: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| edges[j][i].clone()).collect()).collect();
        let inv = linalg::inverse(&cols).expect("full-dimensional simplex");
        FloatSimplex {
            origin: s.vertices()[0].coords().iter().map(|c| c.to_f64().unwrap()).collect(),
            inverse: inv.iter().map(|r| r.iter().map(|c| c.to_f64().unwrap()).collect()).collect(),
        }
    }

    fn contains(&self, x: &[f64]) -> bool {
        let d: Vec<f64> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        let mut sum = 0.0;
        for row in &self.inverse {
            let c: f64 = row.iter().zip(&d).map(|(a, b)| a * b).sum();
            if c < -1e-12 {
                return false;
            }
            sum += c;
        }
        sum <= 1.0 + 1e-12
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, IntVec, RatPoint};
    use crate::simplicial::{farey_blow_up, standard_triangulation};

    fn simplex(v: &[&[(i64, i64)]]) -> Simplex {
        Simplex::new(v.iter().map(|c| RatPoint::from_fracs(c)).collect()).unwrap()
    }

    fn unit_square() -> Polyhedron {
        Polyhedron::from_complex(standard_triangulation(&[IntVec::from_i64(&[1, 0]), IntVec::from_i64(&[0, 1])]).unwrap())
    }

    #[test]
    fn lambda_given_examples() {
        let seg = simplex(&[&[(0, 1)], &[(1, 1)]]);
        let p = Polyhedron::from_simplex(seg.clone());
        let delta = Complex::from_maximal(1, [seg.clone()]);
        assert_eq!(lambda_given(&p, &delta, 1).unwrap().0, rat(1, 1));
        let blown = farey_blow_up(&delta, &seg).unwrap();
        assert_eq!(lambda_given(&p, &blown, 1).unwrap().0, rat(1, 1));

        let pt = simplex(&[&[(1, 5)]]);
        let pp = Polyhedron::from_simplex(pt.clone());
        assert_eq!(lambda_given(&pp, &Complex::from_maximal(1, [pt]), 0).unwrap().0, rat(1, 5));
    }

    #[test]
    fn lambda_given_rejects() {
        let long = simplex(&[&[(0, 1)], &[(2, 1)]]);
        let p = Polyhedron::from_simplex(long.clone());
        let e = lambda_given(&p, &Complex::from_maximal(1, [long]), 1).unwrap_err();
        assert_eq!(e.to_string(), "λ requires a regular triangulation");
        let short = Complex::from_maximal(1, [simplex(&[&[(0, 1)], &[(1, 1)]])]);
        assert_eq!(lambda_given(&p, &short, 1).unwrap_err(), Error::SupportMismatch);
    }

    #[test]
    fn lambda_examples() {
        let p = Polyhedron::from_simplex(simplex(&[&[(1, 5)], &[(2, 5)]]));
        assert_eq!(lambda(&p, 1).0, rat(1, 5));
        assert_eq!(lambda(&unit_square(), 2).0, rat(1, 1));
        let tri = Polyhedron::from_simplex(simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]));
        assert_eq!(lambda(&tri, 2).0, rat(1, 2));
        assert_eq!(lambda(&tri, 1).0, rat(0, 1));
        assert_eq!(lambda(&tri, 5).0, rat(0, 1));
        assert_eq!(lambda(&Polyhedron::empty(2), 0).0, rat(0, 1));
    }

    #[test]
    fn lebesgue_examples() {
        let t = simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(lebesgue_volume(&t).unwrap().0, rat(1, 2));
        assert_eq!(lebesgue_volume(&simplex(&[&[(0, 1)], &[(2, 1)]])).unwrap().0, rat(2, 1));
        let sheared = simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(1, 1), (1, 1)]]);
        assert_eq!(lebesgue_volume(&sheared).unwrap().0, rat(1, 2));
        let e = lebesgue_volume(&simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)]])).unwrap_err();
        assert_eq!(e.to_string(), "Lebesgue volume needs full dimension");
    }

    #[test]
    fn hausdorff_examples() {
        let diag = simplex(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(hausdorff_sq(&diag).value, rat(2, 1));
        assert_eq!(hausdorff_sq(&simplex(&[&[(3, 7), (1, 2)]])).value, rat(1, 1));
        assert_eq!(hausdorff_sq(&simplex(&[&[(0, 1)], &[(1, 1)]])).value, rat(1, 1));
    }

    #[test]
    fn proportionality_examples() {
        let t = simplex(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let t2 = simplex(&[&[(1, 1), (0, 1)], &[(-1, 1), (2, 1)]]);
        assert!(proportionality_check(&t, &t2).unwrap());
        assert!(proportionality_check(&t, &t).unwrap());
        let shifted = simplex(&[&[(2, 1), (-1, 1)], &[(1, 1), (0, 1)]]);
        assert!(proportionality_check(&t, &shifted).unwrap());
        let other = simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (1, 1)]]);
        assert_eq!(proportionality_check(&t, &other).unwrap_err(), Error::DifferentAffineHulls);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_sq(&AffineSubspace::whole(3)).unwrap(), rat(1, 1));
        let line = affine_hull(&simplex(&[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]));
        assert_eq!(kappa_sq(&line).unwrap(), rat(1, 2));
        let fifth = affine_hull(&simplex(&[&[(1, 5)]]));
        assert_eq!(kappa_sq(&fifth).unwrap(), rat(1, 25));
    }

    #[test]
    fn monte_carlo_examples() {
        let sq = monte_carlo_volume(&unit_square(), 100_000, 7).unwrap();
        assert_eq!(sq.estimate, 1.0);
        let tri = Polyhedron::from_simplex(simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]));
        let est = monte_carlo_volume(&tri, 100_000, 7).unwrap();
        assert!(est.agrees_with(0.5, 3.0), "{est:?}");
        assert_eq!(monte_carlo_volume(&Polyhedron::empty(2), 10, 1).unwrap().estimate, 0.0);
        let seg = Polyhedron::from_simplex(simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)]]));
        assert_eq!(monte_carlo_volume(&seg, 10, 1).unwrap_err(), Error::ZeroVolumeTarget);
    }
}
