//! Simplicial cones and fans in ℤⁿ⁺¹, stellar subdivision and
//! desingularization.
//!
//! A rational complex in ℝⁿ lifts to a fan by taking, for every simplex, the
//! cone spanned by the homogeneous correspondents of its vertices. Resolving
//! the singular cones of that fan and slicing back at height one yields a
//! regular triangulation of the same support.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::{self, gcd_maximal_minors, lattice_points_half_open, primitive, IntMat, IntVec, Rat};
use crate::linalg;
use crate::polyhedron::Polyhedron;
use crate::simplicial::{self, Complex, Simplex};

/// A rational simplicial cone given by primitive, linearly independent,
/// sorted generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    generators: Vec<IntVec>,
}

impl Cone {
    pub fn new(generators: Vec<IntVec>) -> Result<Self> {
        let mut gens = generators
            .iter()
            .map(primitive)
            .collect::<Result<Vec<_>>>()?;
        gens.sort();
        gens.dedup();
        if gens.len() != generators.len() {
            return Err(Error::AffinelyDependent);
        }
        let rats: Vec<Vec<Rat>> = gens.iter().map(IntVec::to_rats).collect();
        if linalg::rank(&rats) != gens.len() {
            return Err(Error::AffinelyDependent);
        }
        Ok(Cone { generators: gens })
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Index of the generated sublattice inside the lattice of the span.
    pub fn multiplicity(&self) -> BigInt {
        let cols = self.generators[0].len();
        gcd_maximal_minors(&IntMat::from_rows(&self.generators, cols))
    }

    pub fn is_regular(&self) -> bool {
        self.multiplicity().is_one()
    }

    /// Nonnegative coordinates of `v` in the generators, if `v` lies in the cone.
    pub fn coordinates(&self, v: &IntVec) -> Option<Vec<Rat>> {
        let rats: Vec<Vec<Rat>> = self.generators.iter().map(IntVec::to_rats).collect();
        let c = linalg::solve_in_span(&rats, &v.to_rats())?;
        c.iter().all(|x| !x.is_negative()).then_some(c)
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.coordinates(v).is_some()
    }
}

/// A face-closed set of simplicial cones meeting in common faces. The zero
/// cone is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFan {
    ambient_dim: usize,
    cones: BTreeSet<Cone>,
}

impl SimplicialFan {
    pub fn empty(ambient_dim: usize) -> Self {
        SimplicialFan { ambient_dim, cones: BTreeSet::new() }
    }

    pub fn from_maximal<I: IntoIterator<Item = Cone>>(ambient_dim: usize, cones: I) -> Self {
        let mut set = BTreeSet::new();
        for c in cones {
            for f in simplicial::subsets(&c.generators) {
                set.insert(Cone { generators: f });
            }
        }
        SimplicialFan { ambient_dim, cones: set }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cones(&self) -> &BTreeSet<Cone> {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn maximal(&self) -> Vec<&Cone> {
        let mut covered = BTreeSet::new();
        for c in &self.cones {
            for i in 0..c.generators.len() {
                if c.generators.len() > 1 {
                    let mut g = c.generators.clone();
                    g.remove(i);
                    covered.insert(g);
                }
            }
        }
        self.cones.iter().filter(|c| !covered.contains(&c.generators)).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.maximal().into_iter().all(Cone::is_regular)
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.maximal().into_iter().any(|c| c.contains(v))
    }

    /// Largest multiplicity over all cones; 1 for a regular fan.
    pub fn max_multiplicity(&self) -> BigInt {
        self.maximal().into_iter().map(Cone::multiplicity).max().unwrap_or_else(BigInt::one)
    }
}

/// The cone spanned by the homogeneous correspondents of the vertices.
pub fn cone_of_simplex(s: &Simplex) -> Cone {
    let mut gens = s.lifted_vertices();
    gens.sort();
    Cone { generators: gens }
}

pub fn lift(c: &Complex) -> SimplicialFan {
    SimplicialFan {
        ambient_dim: c.ambient_dim() + 1,
        cones: c.simplexes().iter().map(cone_of_simplex).collect(),
    }
}

/// Slices every cone at height one.
pub fn unlift(f: &SimplicialFan) -> Result<Complex> {
    let n = f.ambient_dim.saturating_sub(1);
    let mut set = BTreeSet::new();
    for c in &f.cones {
        let verts = c.generators.iter().map(lattice::dehomogenize).collect::<Result<Vec<_>>>()?;
        set.insert(Simplex::new(verts)?);
    }
    Ok(Complex::from_set(n, set))
}

/// Star subdivision of `f` at the ray through `ray`.
pub fn stellar_subdivision(f: &SimplicialFan, ray: &IntVec) -> Result<SimplicialFan> {
    let r = primitive(ray)?;
    if !f.contains(&r) {
        return Err(Error::RayOutsideSupport);
    }
    Ok(stellar_unchecked(f, &r))
}

fn stellar_unchecked(f: &SimplicialFan, r: &IntVec) -> SimplicialFan {
    let members: BTreeSet<Vec<IntVec>> = f.cones.iter().map(|c| c.generators.clone()).collect();
    let out = simplicial::stellar(&members, |g| Cone { generators: g.to_vec() }.contains(r), r);
    SimplicialFan {
        ambient_dim: f.ambient_dim,
        cones: out.into_iter().map(|generators| Cone { generators }).collect(),
    }
}

/// One cone replaced during a stellar step, with the multiplicities of its
/// full-dimensional children.
#[derive(Clone, Debug)]
pub struct ReplacedCone {
    pub cone: Cone,
    pub multiplicity: BigInt,
    pub child_multiplicities: Vec<BigInt>,
}

/// Record of one stellar subdivision performed by [`desingularize`].
#[derive(Clone, Debug)]
pub struct StellarStep {
    pub ray: IntVec,
    /// The singular cone whose parallelepiped supplied the ray.
    pub target: Cone,
    pub replaced: Vec<ReplacedCone>,
}

/// Regular subdivision of `f` with the same support.
pub fn desingularize(f: &SimplicialFan) -> SimplicialFan {
    desingularize_logged(f).0
}

/// [`desingularize`] plus the list of stellar steps taken.
///
/// Each step picks a singular cone of minimal dimension (then maximal
/// multiplicity, then least in the canonical order) and subdivides the whole
/// fan at the nonzero point of its half-open parallelepiped with the least
/// coefficient sum, ties broken lexicographically. Every replaced cone's
/// children have strictly smaller multiplicity; this is asserted.
pub fn desingularize_logged(f: &SimplicialFan) -> (SimplicialFan, Vec<StellarStep>) {
    let mut state = Resolution::new(f);
    let mut log = Vec::new();
    while let Some((_, Reverse(_), target)) = state.queue.pop_first() {
        let points = lattice_points_half_open(&target.generators).expect("cone generators are independent");
        let best = points
            .into_iter()
            .filter(|p| !p.point.is_zero())
            .min_by(|a, b| a.coefficient_sum().cmp(&b.coefficient_sum()).then_with(|| a.point.cmp(&b.point)))
            .expect("singular cone has a nonzero parallelepiped point");
        // A zero coefficient would put the point in a smaller singular face,
        // which would have been picked first; so the ray is interior to the
        // target and the cones containing it are exactly its star.
        assert!(best.coefficients.iter().all(|m| m.is_positive()));
        let ray = best.point;
        let replaced = state.subdivide(&target, &ray);
        log.push(StellarStep { ray, target, replaced });
    }
    let fan = SimplicialFan { ambient_dim: f.ambient_dim, cones: state.mult.into_keys().collect() };
    (fan, log)
}

/// Working state of [`desingularize_logged`]: the cones with their
/// multiplicities, an index from generators to cones, and the singular cones
/// ordered by selection priority.
struct Resolution {
    mult: HashMap<Cone, BigInt>,
    by_generator: HashMap<IntVec, HashSet<Cone>>,
    queue: BTreeSet<(usize, Reverse<BigInt>, Cone)>,
}

impl Resolution {
    fn new(f: &SimplicialFan) -> Self {
        let mut r = Resolution { mult: HashMap::new(), by_generator: HashMap::new(), queue: BTreeSet::new() };
        for c in &f.cones {
            r.insert(c.clone());
        }
        r
    }

    fn insert(&mut self, c: Cone) -> BigInt {
        if let Some(m) = self.mult.get(&c) {
            return m.clone();
        }
        let m = c.multiplicity();
        if !m.is_one() {
            self.queue.insert((c.dim(), Reverse(m.clone()), c.clone()));
        }
        for g in &c.generators {
            self.by_generator.entry(g.clone()).or_default().insert(c.clone());
        }
        self.mult.insert(c, m.clone());
        m
    }

    fn remove(&mut self, c: &Cone) -> BigInt {
        let m = self.mult.remove(c).expect("cone present");
        self.queue.remove(&(c.dim(), Reverse(m.clone()), c.clone()));
        for g in &c.generators {
            if let Some(set) = self.by_generator.get_mut(g) {
                set.remove(c);
            }
        }
        m
    }

    /// Stellar subdivision at `ray`, interior to `target`.
    fn subdivide(&mut self, target: &Cone, ray: &IntVec) -> Vec<ReplacedCone> {
        let has_target = |g: &[IntVec]| target.generators.iter().all(|t| g.contains(t));
        let star: Vec<Cone> = self.by_generator[&target.generators[0]]
            .iter()
            .filter(|c| has_target(&c.generators))
            .cloned()
            .collect();
        let mut star_mult = Vec::with_capacity(star.len());
        for c in &star {
            star_mult.push(self.remove(c));
        }
        self.insert(Cone { generators: vec![ray.clone()] });
        let mut replaced = Vec::with_capacity(star.len());
        for (c, parent) in star.into_iter().zip(star_mult) {
            let mut children = Vec::new();
            for face in simplicial::subsets(&c.generators) {
                if has_target(&face) {
                    continue;
                }
                let full = face.len() + 1 == c.generators.len();
                let mut g = face;
                let pos = g.binary_search(ray).unwrap_err();
                g.insert(pos, ray.clone());
                let m = self.insert(Cone { generators: g });
                if full {
                    assert!(m < parent, "stellar step failed to lower multiplicity of {c:?}");
                    children.push(m);
                }
            }
            replaced.push(ReplacedCone { cone: c, multiplicity: parent, child_multiplicities: children });
        }
        replaced
    }
}

/// A regular complex whose support is exactly `p`: triangulate, lift,
/// desingularize, slice back.
pub fn regular_triangulation(p: &Polyhedron) -> Complex {
    let fan = desingularize(&lift(p.canonical()));
    unlift(&fan).expect("lifted fans are graph-positioned")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RatPoint;

    fn iv(e: &[i64]) -> IntVec {
        IntVec::from_i64(e)
    }

    fn cone(g: &[&[i64]]) -> Cone {
        Cone::new(g.iter().map(|v| iv(v)).collect()).unwrap()
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Simplex {
        Simplex::new(vec![RatPoint::from_fracs(&[a]), RatPoint::from_fracs(&[b])]).unwrap()
    }

    #[test]
    fn cones_of_simplexes() {
        assert_eq!(cone_of_simplex(&seg((0, 1), (1, 1))).generators(), &[iv(&[0, 1]), iv(&[1, 1])]);
        assert_eq!(cone_of_simplex(&seg((1, 5), (2, 5))).generators(), &[iv(&[1, 5]), iv(&[2, 5])]);
        let p = Simplex::point(RatPoint::from_fracs(&[(1, 2), (1, 3)]));
        assert_eq!(cone_of_simplex(&p).generators(), &[iv(&[3, 2, 6])]);
    }

    #[test]
    fn lift_examples() {
        let c = Complex::from_maximal(1, [seg((0, 1), (1, 1))]);
        let f = lift(&c);
        let expect: BTreeSet<Cone> =
            [cone(&[&[0, 1]]), cone(&[&[1, 1]]), cone(&[&[0, 1], &[1, 1]])].into_iter().collect();
        assert_eq!(f.cones(), &expect);
        assert!(lift(&Complex::empty(2)).is_empty());

        let sq = simplicial::standard_triangulation(&[iv(&[1, 0]), iv(&[0, 1])]).unwrap();
        let f = lift(&sq);
        let tops = f.maximal();
        assert_eq!(tops.len(), 2);
        let shared: Vec<_> =
            tops[0].generators().iter().filter(|g| tops[1].generators().contains(g)).collect();
        assert_eq!(shared.len(), 2);
    }

    #[test]
    fn unlift_examples() {
        let c = Complex::from_maximal(1, [seg((0, 1), (1, 1))]);
        assert_eq!(unlift(&lift(&c)).unwrap(), c);
        let f = SimplicialFan::from_maximal(2, [cone(&[&[1, 5], &[2, 5]])]);
        assert_eq!(unlift(&f).unwrap(), Complex::from_maximal(1, [seg((1, 5), (2, 5))]));
        let f = SimplicialFan::from_maximal(2, [cone(&[&[1, 2]])]);
        assert_eq!(unlift(&f).unwrap(), Complex::from_maximal(1, [Simplex::point(RatPoint::from_fracs(&[(1, 2)]))]));
        let bad = SimplicialFan::from_maximal(2, [cone(&[&[1, 0]])]);
        assert_eq!(unlift(&bad).unwrap_err().to_string(), "cone not graph-positioned");
    }

    #[test]
    fn stellar_examples() {
        let f = SimplicialFan::from_maximal(2, [cone(&[&[0, 1], &[2, 1]])]);
        let g = stellar_subdivision(&f, &iv(&[1, 1])).unwrap();
        let tops: BTreeSet<Cone> = g.maximal().into_iter().cloned().collect();
        let expect: BTreeSet<Cone> =
            [cone(&[&[0, 1], &[1, 1]]), cone(&[&[1, 1], &[2, 1]])].into_iter().collect();
        assert_eq!(tops, expect);

        assert_eq!(stellar_subdivision(&f, &iv(&[2, 1])).unwrap(), f);
        assert_eq!(stellar_subdivision(&f, &iv(&[-1, 1])).unwrap_err(), Error::RayOutsideSupport);
    }

    #[test]
    fn stellar_three_dim_interior_point() {
        let f = SimplicialFan::from_maximal(3, [cone(&[&[1, 0, 1], &[0, 1, 1], &[-1, -1, 1]])]);
        let pts = lattice_points_half_open(f.maximal()[0].generators()).unwrap();
        assert_eq!(pts.len(), 3);
        let interior = pts.iter().find(|p| p.point == iv(&[0, 0, 1])).unwrap();
        assert!(interior.coefficients.iter().all(|c| c.is_positive()));
        let g = stellar_subdivision(&f, &interior.point).unwrap();
        assert_eq!(g.maximal().len(), 3);
        assert!(g.is_regular());
    }

    #[test]
    fn desingularize_examples() {
        let reg = lift(&Complex::from_maximal(1, [seg((0, 1), (1, 1))]));
        assert_eq!(desingularize(&reg), reg);

        let f = SimplicialFan::from_maximal(2, [cone(&[&[0, 1], &[2, 1]])]);
        let d = desingularize(&f);
        let tops: BTreeSet<Cone> = d.maximal().into_iter().cloned().collect();
        let expect: BTreeSet<Cone> =
            [cone(&[&[0, 1], &[1, 1]]), cone(&[&[1, 1], &[2, 1]])].into_iter().collect();
        assert_eq!(tops, expect);

        let f = lift(&Complex::from_maximal(1, [seg((1, 5), (2, 5))]));
        let (d, log) = desingularize_logged(&f);
        assert!(d.is_regular());
        assert!(!log.is_empty());
        let c = unlift(&d).unwrap();
        let total: Rat = c
            .maximal()
            .into_iter()
            .map(|s| Rat::new(BigInt::one(), simplicial::den_simplex(s).unwrap()))
            .sum();
        assert_eq!(total, crate::lattice::rat(1, 5));
    }

    #[test]
    fn regular_triangulation_of_long_segment() {
        let p = Polyhedron::from_simplex(seg((0, 1), (2, 1)));
        let t = regular_triangulation(&p);
        let tops: BTreeSet<Simplex> = t.maximal().into_iter().cloned().collect();
        let expect: BTreeSet<Simplex> = [seg((0, 1), (1, 1)), seg((1, 1), (2, 1))].into_iter().collect();
        assert_eq!(tops, expect);

        let pt = Polyhedron::from_simplex(Simplex::point(RatPoint::from_fracs(&[(1, 5)])));
        assert_eq!(regular_triangulation(&pt), pt.canonical().clone());
    }

    #[test]
    fn multiplicity_of_lower_dim_cone() {
        // span of (2,0,1),(0,2,1): index 2 in its saturated lattice
        assert_eq!(cone(&[&[2, 0, 1], &[0, 2, 1]]).multiplicity(), BigInt::from(2));
        assert!(cone(&[&[1, 0, 1], &[0, 1, 1]]).is_regular());
    }
}
