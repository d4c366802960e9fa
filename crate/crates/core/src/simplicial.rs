//! Rational simplexes and simplicial complexes, blow-ups and Farey mediants.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::convex::{self, Polytope};
use crate::error::{Error, Result};
use crate::lattice::{self, gcd_maximal_minors, homogeneous, IntMat, IntVec, Rat, RatPoint};
use crate::linalg;

/// A rational simplex, stored as its lexicographically sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<RatPoint>,
}

impl Simplex {
    /// Builds a simplex; fails on mixed dimensions or affine dependence.
    pub fn new(mut vertices: Vec<RatPoint>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::AffinelyDependent);
        };
        let n = first.dim();
        if let Some(bad) = vertices.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.dim() });
        }
        vertices.sort();
        let m = vertices.len() - 1;
        if convex::affine_dim(&vertices) != m as isize {
            return Err(Error::AffinelyDependent);
        }
        Ok(Simplex { vertices })
    }

    /// Caller guarantees sorted, affinely independent vertices.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<RatPoint>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn point(p: RatPoint) -> Self {
        Simplex { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Homogeneous correspondents of the vertices, in vertex order.
    pub fn lifted_vertices(&self) -> Vec<IntVec> {
        self.vertices.iter().map(homogeneous).collect()
    }

    /// Barycentric coordinates of `p`, or `None` if `p` is off the affine hull.
    pub fn barycentric(&self, p: &RatPoint) -> Option<Vec<Rat>> {
        let v0 = &self.vertices[0];
        if self.dim() == 0 {
            return (p == v0).then(|| vec![Rat::one()]);
        }
        let dirs: Vec<Vec<Rat>> = self.vertices[1..].iter().map(|v| v.sub(v0)).collect();
        let c = linalg::solve_in_span(&dirs, &p.sub(v0))?;
        let rest: Rat = c.iter().sum();
        let mut out = vec![Rat::one() - rest];
        out.extend(c);
        Some(out)
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.barycentric(p).map_or(false, |b| b.iter().all(|x| !x.is_negative()))
    }

    pub fn has_vertex(&self, p: &RatPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    /// Halfspace description (affine hull equations plus barycentric bounds).
    pub fn hrep(&self) -> Polytope {
        convex::simplex_hrep(&self.vertices)
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.has_vertex(v))
    }

    pub fn centroid(&self) -> RatPoint {
        centroid(&self.vertices)
    }

    pub(crate) fn bbox(&self) -> (Vec<Rat>, Vec<Rat>) {
        bbox(&self.vertices)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn centroid(points: &[RatPoint]) -> RatPoint {
    let n = points[0].dim();
    let k = Rat::from_integer(BigInt::from(points.len()));
    RatPoint::new(
        (0..n).map(|i| points.iter().map(|p| p.coords()[i].clone()).sum::<Rat>() / &k).collect(),
    )
}

pub(crate) fn bbox(points: &[RatPoint]) -> (Vec<Rat>, Vec<Rat>) {
    let n = points[0].dim();
    let lo = (0..n).map(|i| points.iter().map(|p| &p.coords()[i]).min().unwrap().clone()).collect();
    let hi = (0..n).map(|i| points.iter().map(|p| &p.coords()[i]).max().unwrap().clone()).collect();
    (lo, hi)
}

pub(crate) fn bboxes_overlap(a: &(Vec<Rat>, Vec<Rat>), b: &(Vec<Rat>, Vec<Rat>)) -> bool {
    (0..a.0.len()).all(|i| a.0[i] <= b.1[i] && b.0[i] <= a.1[i])
}

/// All nonempty faces, `2^(m+1) − 1` of them.
pub fn faces(s: &Simplex) -> BTreeSet<Simplex> {
    subsets(&s.vertices).into_iter().map(|vertices| Simplex { vertices }).collect()
}

pub(crate) fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let k = items.len();
    (1u64..(1u64 << k))
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).map(|i| items[i].clone()).collect())
        .collect()
}

/// Whether the homogeneous correspondents extend to a basis of ℤⁿ⁺¹.
pub fn is_regular(s: &Simplex) -> bool {
    let gens = s.lifted_vertices();
    gcd_maximal_minors(&IntMat::from_rows(&gens, s.ambient_dim() + 1)).is_one()
}

/// Product of the vertex denominators of a regular simplex.
pub fn den_simplex(s: &Simplex) -> Result<BigInt> {
    if !is_regular(s) {
        return Err(Error::DenominatorOfNonRegular);
    }
    Ok(s.vertices.iter().map(lattice::den).product())
}

/// The point whose homogeneous correspondent is the sum of those of the
/// vertices of a regular simplex.
pub fn farey_mediant(s: &Simplex) -> Result<RatPoint> {
    if !is_regular(s) {
        return Err(Error::MediantOfNonRegular);
    }
    let n = s.ambient_dim();
    let sum = s.lifted_vertices().iter().fold(IntVec::zero(n + 1), |acc, v| acc.add(v));
    lattice::dehomogenize(&sum)
}

/// A finite simplicial complex in ℝⁿ, stored with all of its faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    ambient_dim: usize,
    simplexes: BTreeSet<Simplex>,
}

impl Complex {
    pub fn empty(ambient_dim: usize) -> Self {
        Complex { ambient_dim, simplexes: BTreeSet::new() }
    }

    /// The face closure of the given simplexes. No intersection check.
    pub fn from_maximal<I: IntoIterator<Item = Simplex>>(ambient_dim: usize, simplexes: I) -> Self {
        let mut set = BTreeSet::new();
        for s in simplexes {
            debug_assert_eq!(s.ambient_dim(), ambient_dim);
            if set.contains(&s) {
                continue;
            }
            set.extend(faces(&s));
        }
        Complex { ambient_dim, simplexes: set }
    }

    pub(crate) fn from_set(ambient_dim: usize, simplexes: BTreeSet<Simplex>) -> Self {
        Complex { ambient_dim, simplexes }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simplexes(&self) -> &BTreeSet<Simplex> {
        &self.simplexes
    }

    pub fn len(&self) -> usize {
        self.simplexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplexes.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplexes.iter().map(Simplex::dim).max()
    }

    /// Members that are a face of no other member.
    pub fn maximal(&self) -> Vec<&Simplex> {
        let mut covered: HashSet<Vec<&RatPoint>> = HashSet::new();
        for s in &self.simplexes {
            for i in 0..s.vertices.len() {
                if s.dim() > 0 {
                    covered.insert(s.vertices.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v).collect());
                }
            }
        }
        self.simplexes.iter().filter(|s| !covered.contains(&s.vertices.iter().collect::<Vec<_>>())).collect()
    }

    pub fn vertices(&self) -> Vec<RatPoint> {
        self.simplexes.iter().filter(|s| s.dim() == 0).map(|s| s.vertices[0].clone()).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.maximal().into_iter().all(is_regular)
    }

    /// Whether `p` lies in the support.
    pub fn contains_point(&self, p: &RatPoint) -> bool {
        self.maximal().into_iter().any(|s| s.contains(p))
    }

    /// Checks face closure and that maximal members meet in common faces.
    pub fn validate(&self) -> Result<()> {
        for s in &self.simplexes {
            if s.ambient_dim() != self.ambient_dim {
                return Err(Error::InvalidComplex(format!("{s} has the wrong ambient dimension")));
            }
            for f in faces(s) {
                if !self.simplexes.contains(&f) {
                    return Err(Error::InvalidComplex(format!("face {f} of {s} missing")));
                }
            }
        }
        let maximal = self.maximal();
        let boxes: Vec<_> = maximal.iter().map(|s| s.bbox()).collect();
        let hreps: Vec<_> = maximal.iter().map(|s| s.hrep()).collect();
        for i in 0..maximal.len() {
            for j in i + 1..maximal.len() {
                if !bboxes_overlap(&boxes[i], &boxes[j]) {
                    continue;
                }
                let meet = hreps[i].intersect(&hreps[j]).vertices();
                if let Some(v) = meet.iter().find(|v| !(maximal[i].has_vertex(v) && maximal[j].has_vertex(v))) {
                    return Err(Error::InvalidComplex(format!(
                        "{} and {} meet at {v}, outside a common face",
                        maximal[i], maximal[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Stellar replacement shared by complexes and fans: every member containing
/// the center is replaced by the joins of its faces that miss the center.
pub(crate) fn stellar<T: Ord + Clone>(
    members: &BTreeSet<Vec<T>>,
    contains_center: impl Fn(&[T]) -> bool,
    center: &T,
) -> BTreeSet<Vec<T>> {
    let mut out = BTreeSet::new();
    let mut hit = Vec::new();
    for m in members {
        if contains_center(m) {
            hit.push(m);
        } else {
            out.insert(m.clone());
        }
    }
    out.insert(vec![center.clone()]);
    for m in hit {
        for f in subsets(m) {
            if f.contains(center) || contains_center(&f) {
                continue;
            }
            let mut j = f;
            let pos = j.binary_search(center).unwrap_err();
            j.insert(pos, center.clone());
            out.insert(j);
        }
    }
    out
}

/// The blow-up of `c` at `p`.
///
/// If `p` is already a vertex the complex comes back unchanged.
pub fn blow_up(c: &Complex, p: &RatPoint) -> Result<Complex> {
    if p.dim() != c.ambient_dim {
        return Err(Error::DimensionMismatch { expected: c.ambient_dim, got: p.dim() });
    }
    let near = |v: &[RatPoint]| {
        (0..p.dim()).all(|i| {
            let x = &p.coords()[i];
            v.iter().any(|w| &w.coords()[i] <= x) && v.iter().any(|w| &w.coords()[i] >= x)
        })
    };
    let holds_center = |v: &[RatPoint]| near(v) && Simplex { vertices: v.to_vec() }.contains(p);
    let hit: Vec<&Simplex> = c.simplexes.iter().filter(|s| holds_center(&s.vertices)).collect();
    if hit.is_empty() {
        return Err(Error::CenterOutsideSupport);
    }
    // the members missing p stay; only the star is rebuilt
    let mut simplexes = c.simplexes.clone();
    for s in &hit {
        simplexes.remove(*s);
    }
    simplexes.insert(Simplex::point(p.clone()));
    for s in hit {
        for f in subsets(&s.vertices) {
            if f.contains(p) || holds_center(&f) {
                continue;
            }
            let mut j = f;
            let pos = j.binary_search(p).unwrap_err();
            j.insert(pos, p.clone());
            simplexes.insert(Simplex { vertices: j });
        }
    }
    Ok(Complex { ambient_dim: c.ambient_dim, simplexes })
}

/// Blow-up at the Farey mediant of `t`, a member of the regular complex `c`.
pub fn farey_blow_up(c: &Complex, t: &Simplex) -> Result<Complex> {
    let m = farey_mediant(t)?;
    blow_up(c, &m)
}

/// The maximal `i`-simplexes of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSelection {
    pub i: usize,
    pub members: BTreeSet<Simplex>,
}

pub fn maximal_simplexes(c: &Complex, i: usize) -> MaximalSelection {
    MaximalSelection {
        i,
        members: c.maximal().into_iter().filter(|s| s.dim() == i).cloned().collect(),
    }
}

/// The subcomplex generated by the maximal `i`-simplexes.
pub fn dimensional_part(c: &Complex, i: usize) -> Complex {
    Complex::from_maximal(c.ambient_dim, maximal_simplexes(c, i).members)
}

/// The standard triangulation of the parallelepiped spanned by `basis`:
/// one simplex `conv(0, w_π(1), w_π(1)+w_π(2), …)` per permutation π.
pub fn standard_triangulation(basis: &[IntVec]) -> Result<Complex> {
    let Some(first) = basis.first() else {
        return Err(Error::NotUnimodularBasis);
    };
    let n = first.len();
    if basis.iter().any(|b| b.len() != n) {
        return Err(Error::NotUnimodularBasis);
    }
    if !gcd_maximal_minors(&IntMat::from_rows(basis, n)).is_one() {
        return Err(Error::NotUnimodularBasis);
    }
    let mut simplexes = Vec::new();
    for perm in permutations(basis.len()) {
        let mut acc = IntVec::zero(n);
        let mut verts = vec![RatPoint::origin(n)];
        for &k in &perm {
            acc = acc.add(&basis[k]);
            verts.push(RatPoint::new(acc.to_rats()));
        }
        simplexes.push(Simplex::new(verts)?);
    }
    Ok(Complex::from_maximal(n, simplexes))
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}
