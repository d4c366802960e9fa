//! Exact convex polytopes in halfspace form with brute-force vertex
//! enumeration. Sized for the small dimensions this crate works in.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::{combinations, IntVec, Rat, RatPoint};
use crate::linalg;

/// The affine function `x ↦ a·x + b` with integer data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub normal: IntVec,
    pub offset: BigInt,
}

impl Hyperplane {
    /// Builds the form from rational data, scaled by a positive factor so the
    /// integer coefficients are coprime.
    pub fn from_rational(normal: &[Rat], offset: &Rat) -> Self {
        let mut all = normal.to_vec();
        all.push(offset.clone());
        let v = linalg::to_primitive_int(&all);
        let mut e = v.entries().to_vec();
        let offset = e.pop().unwrap();
        Hyperplane { normal: IntVec::new(e), offset }
    }

    pub fn eval(&self, p: &RatPoint) -> Rat {
        let s: Rat = self
            .normal
            .entries()
            .iter()
            .zip(p.coords())
            .map(|(a, x)| x * Rat::from_integer(a.clone()))
            .sum();
        s + Rat::from_integer(self.offset.clone())
    }

    pub fn sign_at(&self, p: &RatPoint) -> i8 {
        linalg::sign(&self.eval(p))
    }

    /// Orientation-free representative: first nonzero normal entry positive.
    pub fn unoriented(&self) -> Hyperplane {
        let flip = self.normal.entries().iter().find(|e| !e.is_zero()).map_or(false, |e| e.is_negative());
        if flip {
            Hyperplane {
                normal: self.normal.scale(&BigInt::from(-1)),
                offset: -self.offset.clone(),
            }
        } else {
            self.clone()
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.normal.is_zero()
    }

    fn normal_rats(&self) -> Vec<Rat> {
        self.normal.to_rats()
    }
}

/// Halfspace description `{x : eᵢ(x) = 0, hⱼ(x) ≥ 0}`.
#[derive(Clone, Debug, Default)]
pub struct Polytope {
    pub dim: usize,
    pub equations: Vec<Hyperplane>,
    pub inequalities: Vec<Hyperplane>,
}

impl Polytope {
    pub fn new(dim: usize) -> Self {
        Polytope { dim, equations: Vec::new(), inequalities: Vec::new() }
    }

    pub fn intersect(&self, other: &Polytope) -> Polytope {
        let mut out = self.clone();
        out.equations.extend(other.equations.iter().cloned());
        out.inequalities.extend(other.inequalities.iter().cloned());
        out
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.equations.iter().all(|e| e.eval(p).is_zero())
            && self.inequalities.iter().all(|h| !h.eval(p).is_negative())
    }

    /// Vertices in lexicographic order. The polytope must be bounded.
    pub fn vertices(&self) -> Vec<RatPoint> {
        let n = self.dim;
        let a: Vec<Vec<Rat>> = self.equations.iter().map(Hyperplane::normal_rats).collect();
        let b: Vec<Rat> = self.equations.iter().map(|e| -Rat::from_integer(e.offset.clone())).collect();
        let Some((x0, basis)) = linalg::solve_affine(&a, &b, n) else {
            return Vec::new();
        };
        let origin = RatPoint::new(x0.clone());
        let k = basis.len();
        if k == 0 {
            return if self.contains(&origin) { vec![origin] } else { Vec::new() };
        }
        // restrict inequalities to the flat x = x0 + Σ yᵢ·basisᵢ
        let reduced: Vec<(Vec<Rat>, Rat)> = self
            .inequalities
            .iter()
            .map(|h| {
                let nr = h.normal_rats();
                let coeffs: Vec<Rat> = basis.iter().map(|col| linalg::dot(&nr, col)).collect();
                (coeffs, h.eval(&origin))
            })
            .filter(|(c, _)| c.iter().any(|x| !x.is_zero()))
            .collect();
        let all_ok = |y: &[Rat]| {
            reduced.iter().all(|(c, c0)| !(linalg::dot(c, y) + c0).is_negative())
        };
        let mut out = BTreeSet::new();
        for combo in combinations(reduced.len(), k) {
            let rows: Vec<Vec<Rat>> = combo.iter().map(|&i| reduced[i].0.clone()).collect();
            let rhs: Vec<Rat> = combo.iter().map(|&i| -reduced[i].1.clone()).collect();
            let Some((y, null)) = linalg::solve_affine(&rows, &rhs, k) else { continue };
            if !null.is_empty() || !all_ok(&y) {
                continue;
            }
            let x: Vec<Rat> = (0..n)
                .map(|i| &x0[i] + basis.iter().zip(&y).map(|(col, yi)| &col[i] * yi).sum::<Rat>())
                .collect();
            out.insert(RatPoint::new(x));
        }
        // Inequality constraints were dropped only when constant on the flat;
        // a violated constant one means the polytope is empty.
        if self.inequalities.iter().any(|h| h.eval(&origin).is_negative() && {
            let nr = h.normal_rats();
            basis.iter().all(|col| linalg::dot(&nr, col).is_zero())
        }) {
            return Vec::new();
        }
        out.into_iter().collect()
    }
}

/// Affine dimension of a finite point set; -1 for the empty set.
pub fn affine_dim(points: &[RatPoint]) -> isize {
    let Some(first) = points.first() else { return -1 };
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| p.sub(first)).collect();
    linalg::rank(&diffs) as isize
}

/// Halfspace description of the simplex with the given affinely independent
/// vertices: the equations of its affine hull, and for every vertex `vᵢ` the
/// barycentric coordinate function `λᵢ ≥ 0`, extended to the ambient space so
/// that it is constant along directions orthogonal to the hull.
pub fn simplex_hrep(vertices: &[RatPoint]) -> Polytope {
    let n = vertices[0].dim();
    let m = vertices.len() - 1;
    let v0 = &vertices[0];
    let dirs: Vec<Vec<Rat>> = vertices[1..].iter().map(|v| v.sub(v0)).collect();
    let mut poly = Polytope::new(n);

    for a in linalg::nullspace(&dirs, n) {
        let b = -linalg::dot(&a, v0.coords());
        poly.equations.push(Hyperplane::from_rational(&a, &b));
    }
    if m == 0 {
        return poly;
    }
    let gram: Vec<Vec<Rat>> =
        dirs.iter().map(|d| dirs.iter().map(|e| linalg::dot(d, e)).collect()).collect();
    let ginv = linalg::inverse(&gram).expect("affinely independent vertices");
    let mut sum_normal = vec![Rat::zero(); n];
    let mut sum_offset = Rat::zero();
    for i in 0..m {
        let normal: Vec<Rat> = (0..n)
            .map(|c| (0..m).map(|k| &ginv[k][i] * &dirs[k][c]).sum())
            .collect();
        let offset = -linalg::dot(&normal, v0.coords());
        for c in 0..n {
            sum_normal[c] += &normal[c];
        }
        sum_offset += &offset;
        poly.inequalities.push(Hyperplane::from_rational(&normal, &offset));
    }
    // λ₀ = 1 − Σ λᵢ
    let n0: Vec<Rat> = sum_normal.iter().map(|x| -x.clone()).collect();
    let o0 = Rat::from_integer(1.into()) - sum_offset;
    poly.inequalities.insert(0, Hyperplane::from_rational(&n0, &o0));
    poly
}

/// gcd-normalised integer hyperplane through no particular point; used for
/// deduplication keys.
pub(crate) fn hyperplane_key(h: &Hyperplane) -> Hyperplane {
    let g = h.normal.entries().iter().fold(h.offset.abs(), |g, e| g.gcd(e));
    if g.is_zero() {
        return h.clone();
    }
    Hyperplane {
        normal: IntVec::new(h.normal.entries().iter().map(|e| e / &g).collect()),
        offset: &h.offset / &g,
    }
    .unoriented()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<RatPoint> {
        v.iter().map(|c| RatPoint::from_ints(c)).collect()
    }

    #[test]
    fn triangle_hrep_round_trip() {
        let t = pts(&[&[0, 0], &[0, 1], &[1, 0]]);
        let p = simplex_hrep(&t);
        assert!(p.equations.is_empty());
        assert_eq!(p.inequalities.len(), 3);
        assert_eq!(p.vertices(), t);
    }

    #[test]
    fn segment_in_plane_hrep() {
        let s = pts(&[&[1, 0], &[0, 1]]);
        let p = simplex_hrep(&s);
        assert_eq!(p.equations.len(), 1);
        assert_eq!(p.vertices(), vec![s[1].clone(), s[0].clone()]);
        assert!(p.contains(&RatPoint::from_fracs(&[(1, 2), (1, 2)])));
        assert!(!p.contains(&RatPoint::from_ints(&[2, -1])));
    }

    #[test]
    fn triangle_intersection_is_diagonal() {
        let a = simplex_hrep(&pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        let b = simplex_hrep(&pts(&[&[1, 1], &[1, 0], &[0, 1]]));
        assert_eq!(a.intersect(&b).vertices(), pts(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn disjoint_is_empty() {
        let a = simplex_hrep(&pts(&[&[0], &[1]]));
        let b = simplex_hrep(&pts(&[&[2], &[3]]));
        assert!(a.intersect(&b).vertices().is_empty());
    }

    #[test]
    fn affine_dim_counts() {
        assert_eq!(affine_dim(&[]), -1);
        assert_eq!(affine_dim(&pts(&[&[0, 0]])), 0);
        assert_eq!(affine_dim(&pts(&[&[0, 0], &[1, 1], &[2, 2]])), 1);
    }
}
