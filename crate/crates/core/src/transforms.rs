//! The group `Gₙ` of affine maps `x ↦ Ux + b` with `U ∈ GL(n, ℤ)` and
//! `b ∈ ℤⁿ`, acting on points, simplexes, complexes and polyhedra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{IntMat, IntVec, Rat, RatPoint};
use crate::polyhedron::Polyhedron;
use crate::simplicial::{Complex, Simplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnMap {
    matrix: IntMat,
    shift: IntVec,
}

impl GnMap {
    pub fn new(matrix: IntMat, shift: IntVec) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != shift.len() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), got: shift.len() });
        }
        let det = matrix.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(GnMap { matrix, shift })
    }

    pub fn identity(n: usize) -> Self {
        GnMap { matrix: IntMat::identity(n), shift: IntVec::zero(n) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn shift(&self) -> &IntVec {
        &self.shift
    }

    pub fn apply(&self, p: &RatPoint) -> RatPoint {
        let mut y = self.matrix.mul_vec(p.coords());
        for (c, b) in y.iter_mut().zip(self.shift.entries()) {
            *c += Rat::from_integer(b.clone());
        }
        RatPoint::new(y)
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.apply(v)).collect()).expect("affine bijection")
    }

    pub fn apply_complex(&self, c: &Complex) -> Complex {
        Complex::from_maximal(c.ambient_dim(), c.maximal().into_iter().map(|s| self.apply_simplex(s)))
    }

    pub fn apply_polyhedron(&self, p: &Polyhedron) -> Polyhedron {
        Polyhedron::new(p.ambient_dim(), p.simplexes().iter().map(|s| self.apply_simplex(s)).collect())
            .expect("dimension preserved")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GnMap) -> GnMap {
        let matrix = self.matrix.mul(&other.matrix);
        let moved = self.matrix.mul_vec(&other.shift.to_rats());
        let shift = IntVec::new(
            moved
                .iter()
                .zip(self.shift.entries())
                .map(|(a, b)| a.to_integer() + b)
                .collect(),
        );
        GnMap { matrix, shift }
    }

    pub fn inverse(&self) -> GnMap {
        let n = self.dim();
        let rows: Vec<Vec<Rat>> =
            (0..n).map(|r| self.matrix.row(r).to_rats()).collect();
        let inv = crate::linalg::inverse(&rows).expect("unimodular");
        let mut m = IntMat::zeros(n, n);
        for (r, row) in inv.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                m.set(r, c, x.to_integer());
            }
        }
        let moved = m.mul_vec(&self.shift.to_rats());
        let shift = IntVec::new(moved.iter().map(|x| -x.to_integer()).collect());
        GnMap { matrix: m, shift }
    }
}

/// A seeded random element of `Gₙ`: `steps` elementary row operations
/// (add or subtract a row, swap, negate) applied to the identity, and a shift
/// with entries in `[-max_shift, max_shift]`.
pub fn random_unimodular(n: usize, seed: u64, steps: usize, max_shift: i64) -> GnMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unimodular_with(n, &mut rng, steps, max_shift)
}

pub fn random_unimodular_with<R: Rng>(n: usize, rng: &mut R, steps: usize, max_shift: i64) -> GnMap {
    let mut m = IntMat::identity(n);
    if n > 0 {
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            match rng.gen_range(0..4) {
                0 | 1 if i != j => {
                    let sign = if rng.gen_bool(0.5) { BigInt::one() } else { -BigInt::one() };
                    for c in 0..n {
                        let v = m.get(i, c) + &sign * m.get(j, c);
                        m.set(i, c, v);
                    }
                }
                2 if i != j => {
                    for c in 0..n {
                        let a = m.get(i, c).clone();
                        let b = m.get(j, c).clone();
                        m.set(i, c, b);
                        m.set(j, c, a);
                    }
                }
                _ => {
                    for c in 0..n {
                        let v = -m.get(i, c);
                        m.set(i, c, v);
                    }
                }
            }
        }
    }
    let shift = IntVec::new(
        (0..n)
            .map(|_| if max_shift > 0 { BigInt::from(rng.gen_range(-max_shift..=max_shift)) } else { BigInt::zero() })
            .collect(),
    );
    GnMap { matrix: m, shift }
}

/// `P × {0} ⊆ ℝⁿ⁺¹`.
pub fn embed(p: &Polyhedron) -> Polyhedron {
    let lift = |v: &RatPoint| v.extended(Rat::zero());
    Polyhedron::new(
        p.ambient_dim() + 1,
        p.simplexes()
            .iter()
            .map(|s| Simplex::new(s.vertices().iter().map(lift).collect()).expect("independence preserved"))
            .collect(),
    )
    .expect("uniform dimension")
}
