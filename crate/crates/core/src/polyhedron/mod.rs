//! Rational polyhedra as finite unions of rational simplexes, with exact
//! boolean operations.

mod affine;
mod refine;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

pub use affine::{
    affine_hull, equal_denominator_simplex, height_reduction, min_denominator, AffineSubspace,
};

use crate::error::{Error, Result};
use crate::lattice::{Rat, RatPoint};
use crate::simplicial::{Complex, Simplex};
use refine::{intersection_components, meets_properly, relative_interior_point, Arrangement};

/// A rational polyhedron in ℝⁿ: the pointwise union of finitely many closed
/// rational simplexes. Not necessarily convex or connected.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    ambient_dim: usize,
    simplexes: Vec<Simplex>,
    canonical: OnceLock<Complex>,
}

impl Polyhedron {
    pub fn new(ambient_dim: usize, simplexes: Vec<Simplex>) -> Result<Self> {
        if let Some(s) = simplexes.iter().find(|s| s.ambient_dim() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: s.ambient_dim() });
        }
        Ok(Polyhedron { ambient_dim, simplexes, canonical: OnceLock::new() })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Polyhedron { ambient_dim, simplexes: Vec::new(), canonical: OnceLock::new() }
    }

    pub fn from_simplex(s: Simplex) -> Self {
        Polyhedron { ambient_dim: s.ambient_dim(), simplexes: vec![s], canonical: OnceLock::new() }
    }

    /// The support of a complex; the complex becomes the canonical
    /// triangulation as is.
    pub fn from_complex(c: Complex) -> Self {
        let simplexes = c.maximal().into_iter().cloned().collect();
        let canonical = OnceLock::new();
        let n = c.ambient_dim();
        let _ = canonical.set(c);
        Polyhedron { ambient_dim: n, simplexes, canonical }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simplexes(&self) -> &[Simplex] {
        &self.simplexes
    }

    pub fn is_empty(&self) -> bool {
        self.simplexes.is_empty()
    }

    /// Dimension, `None` for the empty polyhedron.
    pub fn dim(&self) -> Option<usize> {
        self.simplexes.iter().map(Simplex::dim).max()
    }

    /// A triangulation of the support, computed once.
    pub fn canonical(&self) -> &Complex {
        self.canonical.get_or_init(|| {
            triangulate_union(self.ambient_dim, &self.simplexes).expect("dimensions checked on construction")
        })
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.simplexes.iter().any(|s| s.contains(p))
    }
}

/// A simplicial complex whose support is the union of `simplexes`.
///
/// Groups of simplexes that already meet pairwise in common faces are kept as
/// they are. Any group with an improper overlap is refined by the hyperplane
/// arrangement of its members and every cell is given a pulling
/// triangulation, so no vertices beyond the cell vertices appear.
pub fn triangulate_union(ambient_dim: usize, simplexes: &[Simplex]) -> Result<Complex> {
    if let Some(s) = simplexes.iter().find(|s| s.ambient_dim() != ambient_dim) {
        return Err(Error::DimensionMismatch { expected: ambient_dim, got: s.ambient_dim() });
    }
    let inputs = reduce_inputs(simplexes);
    let mut out = Vec::new();
    for comp in intersection_components(&inputs) {
        let members: Vec<&Simplex> = comp.iter().map(|&i| &inputs[i]).collect();
        let proper = members
            .iter()
            .enumerate()
            .all(|(i, a)| members[i + 1..].iter().all(|b| meets_properly(a, b)));
        if proper {
            out.extend(members.into_iter().cloned());
            continue;
        }
        let mut arr = Arrangement::of_simplexes(members.iter().copied());
        let mut cells = BTreeSet::new();
        for s in &members {
            cells.extend(arr.split(s));
        }
        for cell in &cells {
            out.extend(arr.triangulate(cell));
        }
    }
    Ok(Complex::from_maximal(ambient_dim, out))
}

/// Drops duplicates and inputs that are faces of other inputs.
fn reduce_inputs(simplexes: &[Simplex]) -> Vec<Simplex> {
    let set: BTreeSet<&Simplex> = simplexes.iter().collect();
    set.iter()
        .filter(|s| !set.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t)))
        .map(|s| (*s).clone())
        .collect()
}

/// Faces of the common refinement of `p` and `q`, filtered by membership.
fn select_faces(p: &Polyhedron, q: &Polyhedron, keep: impl Fn(bool, bool) -> bool) -> Complex {
    let n = p.ambient_dim;
    let mut inputs: Vec<Simplex> = Vec::new();
    let mut from_p: Vec<bool> = Vec::new();
    for s in p.canonical().maximal() {
        inputs.push(s.clone());
        from_p.push(true);
    }
    for s in q.canonical().maximal() {
        inputs.push(s.clone());
        from_p.push(false);
    }
    let mut out = Vec::new();
    for comp in intersection_components(&inputs) {
        let has_p = comp.iter().any(|&i| from_p[i]);
        let has_q = comp.iter().any(|&i| !from_p[i]);
        if !(has_p && has_q) {
            if keep(has_p, has_q) {
                out.extend(comp.iter().map(|&i| inputs[i].clone()));
            }
            continue;
        }
        let members: Vec<&Simplex> = comp.iter().map(|&i| &inputs[i]).collect();
        let mut arr = Arrangement::of_simplexes(members.iter().copied());
        let mut cells = BTreeSet::new();
        for s in &members {
            cells.extend(arr.split(s));
        }
        let mut all = BTreeSet::new();
        for cell in &cells {
            arr.all_faces(cell, &mut all);
        }
        for face in &all {
            let x = relative_interior_point(face);
            let in_p = comp.iter().any(|&i| from_p[i] && inputs[i].contains(&x));
            let in_q = comp.iter().any(|&i| !from_p[i] && inputs[i].contains(&x));
            if keep(in_p, in_q) {
                out.extend(arr.triangulate(face));
            }
        }
    }
    Complex::from_maximal(n, out)
}

fn check_same_dim(p: &Polyhedron, q: &Polyhedron) -> Result<()> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim, got: q.ambient_dim });
    }
    Ok(())
}

pub fn intersection(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_same_dim(p, q)?;
    Ok(Polyhedron::from_complex(select_faces(p, q, |a, b| a && b)))
}

pub fn union(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_same_dim(p, q)?;
    let mut s = p.simplexes.clone();
    s.extend(q.simplexes.iter().cloned());
    Polyhedron::new(p.ambient_dim, s)
}

/// The closure of `p ∖ q`.
pub fn closure_of_difference(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_same_dim(p, q)?;
    Ok(Polyhedron::from_complex(select_faces(p, q, |a, b| a && !b)))
}

/// Whether the support of `c` equals `p` as a point set.
pub fn same_support(p: &Polyhedron, c: &Complex) -> bool {
    if let Some(answer) = refined_support(p, c) {
        return answer;
    }
    let d = Polyhedron::from_complex(c.clone());
    select_faces(p, &d, |a, b| a != b).is_empty()
}

/// Support test for the usual case where every maximal simplex of `c` lies in
/// one maximal simplex of `p`'s canonical complex. Inside such an S of
/// dimension k, take the k-simplexes of `c` it contains. If each facet of one
/// is either on the boundary of S and belongs to no other, or is shared with
/// exactly one other lying on the opposite side, they cover S a constant
/// number of times, and the volume sum fixes that number. `None` when some
/// simplex of `c` straddles.
fn refined_support(p: &Polyhedron, c: &Complex) -> Option<bool> {
    let outer = p.canonical().maximal();
    let mut pieces: Vec<Vec<(&Simplex, Vec<Vec<Rat>>)>> = vec![Vec::new(); outer.len()];
    for t in c.maximal() {
        let (i, bary) = outer.iter().enumerate().find_map(|(i, s)| {
            let b: Vec<Vec<Rat>> = t.vertices().iter().map(|v| s.barycentric(v)).collect::<Option<_>>()?;
            b.iter().flatten().all(|x| !x.is_negative()).then_some((i, b))
        })?;
        if t.dim() == outer[i].dim() {
            pieces[i].push((t, bary));
        }
    }
    Some(outer.iter().zip(&pieces).all(|(s, ps)| covers_once(s.dim(), ps)))
}

fn covers_once(k: usize, pieces: &[(&Simplex, Vec<Vec<Rat>>)]) -> bool {
    if k == 0 {
        return pieces.len() == 1;
    }
    // affine coordinates in S: drop the first barycentric coordinate
    let aff = |b: &Vec<Rat>| b[1..].to_vec();
    let mut volume = Rat::zero();
    let mut facets: HashMap<Vec<&RatPoint>, Vec<Ordering>> = HashMap::new();
    for (t, bary) in pieces {
        let pts: Vec<Vec<Rat>> = bary.iter().map(aff).collect();
        let edges: Vec<Vec<Rat>> = pts[1..].iter().map(|x| sub(x, &pts[0])).collect();
        volume += crate::linalg::det(&edges).abs();
        for drop in 0..=k {
            let idx: Vec<usize> = (0..=k).filter(|&j| j != drop).collect();
            let on_boundary = (0..=k).any(|j| idx.iter().all(|&v| bary[v][j].is_zero()));
            let mut rows: Vec<Vec<Rat>> = idx[1..].iter().map(|&v| sub(&pts[v], &pts[idx[0]])).collect();
            rows.push(sub(&pts[drop], &pts[idx[0]]));
            let side = crate::linalg::det(&rows).cmp(&Rat::zero());
            let key: Vec<&RatPoint> = idx.iter().map(|&v| &t.vertices()[v]).collect();
            let entry = facets.entry(key).or_default();
            if on_boundary {
                // marks a boundary facet; a second piece on it is an overlap
                entry.push(Ordering::Equal);
            }
            entry.push(side);
        }
    }
    let consistent = facets.values().all(|sides| match sides.as_slice() {
        [Ordering::Equal, _] => true,
        [a, b] => a != b && *a != Ordering::Equal && *b != Ordering::Equal,
        _ => false,
    });
    consistent && volume.is_one()
}

fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
