//! Rational affine subspaces, their least denominator, and the
//! height-reduction construction of equal-denominator regular simplexes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::convex;
use crate::error::{Error, Result};
use crate::lattice::{
    dehomogenize, integer_kernel, primitive, smith_normal_form, IntMat, IntVec, Rat, RatPoint,
};
use crate::linalg;
use crate::simplicial::Simplex;

/// `{x ∈ ℝⁿ : aᵢ·x + tᵢ = 0}` kept together with a point and primitive
/// direction vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspace {
    ambient_dim: usize,
    equations: Vec<(IntVec, BigInt)>,
    basis_point: RatPoint,
    directions: Vec<IntVec>,
}

impl AffineSubspace {
    pub fn whole(n: usize) -> Self {
        let directions = (0..n)
            .map(|i| IntVec::new((0..n).map(|j| BigInt::from((i == j) as i64)).collect()))
            .collect();
        AffineSubspace { ambient_dim: n, equations: Vec::new(), basis_point: RatPoint::origin(n), directions }
    }

    /// Solution set of the integer equations `a·x + t = 0`.
    pub fn from_equations(n: usize, equations: Vec<(IntVec, BigInt)>) -> Result<Self> {
        for (a, _) in &equations {
            if a.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: a.len() });
            }
        }
        let rows: Vec<Vec<Rat>> = equations.iter().map(|(a, _)| a.to_rats()).collect();
        let rhs: Vec<Rat> = equations.iter().map(|(_, t)| -Rat::from_integer(t.clone())).collect();
        let (x0, null) = linalg::solve_affine(&rows, &rhs, n).ok_or(Error::EmptySubspace)?;
        let directions = null.iter().map(|v| linalg::to_primitive_int(v)).collect();
        let equations = equations.into_iter().filter(|(a, _)| !a.is_zero()).collect();
        Ok(AffineSubspace { ambient_dim: n, equations, basis_point: RatPoint::new(x0), directions })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn equations(&self) -> &[(IntVec, BigInt)] {
        &self.equations
    }

    pub fn basis_point(&self) -> &RatPoint {
        &self.basis_point
    }

    pub fn directions(&self) -> &[IntVec] {
        &self.directions
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.equations.iter().all(|(a, t)| {
            let s: Rat = a.to_rats().iter().zip(p.coords()).map(|(x, y)| x * y).sum();
            (s + Rat::from_integer(t.clone())).is_zero()
        })
    }

    /// Same point set as `other`.
    pub fn same_as(&self, other: &AffineSubspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.contains(&self.basis_point)
            && self.directions.iter().all(|d| {
                let p = RatPoint::new(
                    self.basis_point.coords().iter().zip(d.to_rats()).map(|(x, y)| x + y).collect(),
                );
                other.contains(&p)
            })
    }

    /// A basis of the lattice `ℤⁿ⁺¹ ∩ F*`, where `F*` is the linear span of
    /// the homogeneous correspondents of the points of `F`.
    pub fn lifted_lattice_basis(&self) -> Vec<IntVec> {
        let rows: Vec<IntVec> = self
            .equations
            .iter()
            .map(|(a, t)| {
                let mut e = a.entries().to_vec();
                e.push(t.clone());
                IntVec::new(e)
            })
            .collect();
        integer_kernel(&IntMat::from_rows(&rows, self.ambient_dim + 1))
    }

    /// A lattice basis of `ℤⁿ⁺¹ ∩ F*` in which every vector has positive
    /// height: the homogeneous correspondents of the vertices of a regular
    /// simplex spanning `F`.
    pub fn positive_height_basis(&self) -> Vec<IntVec> {
        let mut basis = self.lifted_lattice_basis();
        let pivot = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.height().is_zero())
            .min_by(|(_, a), (_, b)| a.height().abs().cmp(&b.height().abs()).then_with(|| a.cmp(b)))
            .map(|(i, _)| i)
            .expect("a nonempty subspace lifts to vectors of nonzero height");
        if basis[pivot].height().is_negative() {
            basis[pivot] = basis[pivot].scale(&BigInt::from(-1));
        }
        let w = basis[pivot].clone();
        let hw = w.height().clone();
        for (i, b) in basis.iter_mut().enumerate() {
            if i == pivot || b.height().is_positive() {
                continue;
            }
            // smallest k with height(b + k·w) > 0
            let k = (-b.height()).div_floor(&hw) + 1;
            *b = b.add(&w.scale(&k));
        }
        basis
    }
}

/// The affine hull of a simplex.
pub fn affine_hull(s: &Simplex) -> AffineSubspace {
    let n = s.ambient_dim();
    let v0 = s.vertices()[0].clone();
    let hrep = convex::simplex_hrep(s.vertices());
    let equations = hrep.equations.into_iter().map(|h| (h.normal, h.offset)).collect();
    let directions = s.vertices()[1..]
        .iter()
        .map(|v| linalg::to_primitive_int(&v.sub(&v0)))
        .collect();
    AffineSubspace { ambient_dim: n, equations, basis_point: v0, directions }
}

/// Replaces a top-height vector `u` by `u − v` for a lower-height `v` until
/// all heights agree. The sum of heights strictly decreases at each step.
///
/// Top-height ties go to the lexicographically least vector; the subtracted
/// vector is one of least height, again lexicographically least on ties.
pub fn height_reduction(basis: &[IntVec]) -> Result<Vec<IntVec>> {
    let Some(first) = basis.first() else {
        return Err(Error::NotLatticeBasis);
    };
    let cols = first.len();
    if basis.iter().any(|b| b.len() != cols) {
        return Err(Error::NotLatticeBasis);
    }
    if basis.iter().any(|b| !b.height().is_positive()) {
        return Err(Error::NotGraphPositioned);
    }
    let snf = smith_normal_form(&IntMat::from_rows(basis, cols));
    let factors = snf.invariant_factors();
    if factors.len() != basis.len() || !factors.iter().all(One::is_one) {
        return Err(Error::NotLatticeBasis);
    }
    let mut b = basis.to_vec();
    loop {
        let top_h = b.iter().map(|v| v.height().clone()).max().unwrap();
        let low_h = b.iter().map(|v| v.height().clone()).min().unwrap();
        if top_h == low_h {
            return Ok(b);
        }
        let top = (0..b.len()).filter(|&i| *b[i].height() == top_h).min_by(|&i, &j| b[i].cmp(&b[j])).unwrap();
        let low = (0..b.len()).filter(|&i| *b[i].height() == low_h).min_by(|&i, &j| b[i].cmp(&b[j])).unwrap();
        b[top] = b[top].sub(&b[low]);
    }
}

/// The least denominator of a rational point of `F`.
pub fn min_denominator(f: &AffineSubspace) -> Result<BigInt> {
    let reduced = height_reduction(&f.positive_height_basis())?;
    Ok(reduced[0].height().clone())
}

/// A regular simplex spanning `F` whose vertices all have denominator `d_F`.
pub fn equal_denominator_simplex(f: &AffineSubspace) -> Result<Simplex> {
    let reduced = height_reduction(&f.positive_height_basis())?;
    let verts = reduced
        .iter()
        .map(|v| dehomogenize(&primitive(v)?))
        .collect::<Result<Vec<_>>>()?;
    Simplex::new(verts)
}
