//! Seeded generators for randomized checks: rational points and simplexes,
//! polyhedra, regular simplexes, affine subspaces and singular fans.
//!
//! All generators take an explicit RNG so that independent trials can draw
//! from derived streams of one seed (see [`trial_rng`]).

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex::affine_dim;
use crate::fan::{lift, Cone, SimplicialFan};
use crate::lattice::{dehomogenize, homogeneous, IntMat, IntVec, Rat, RatPoint};
use crate::polyhedron::{AffineSubspace, Polyhedron};
use crate::simplicial::{farey_blow_up, farey_mediant, Complex, Simplex};
use crate::transforms::random_unimodular_with;

pub type TrialRng = ChaCha8Rng;

/// The RNG for trial `trial` of a run seeded with `seed`; streams of
/// different trials are independent.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Shape of random rational polyhedra.
#[derive(Clone, Copy, Debug)]
pub struct PolyConfig {
    pub ambient_dim: usize,
    /// Largest simplex dimension; capped at `ambient_dim`.
    pub max_simplex_dim: usize,
    pub max_simplexes: usize,
    pub max_den: i64,
    /// Coordinates are drawn from `[0, coord_range]`.
    pub coord_range: i64,
}

impl PolyConfig {
    pub fn new(ambient_dim: usize) -> Self {
        PolyConfig { ambient_dim, max_simplex_dim: ambient_dim, max_simplexes: 2, max_den: 3, coord_range: 2 }
    }
}

pub fn random_rat<R: Rng>(rng: &mut R, max_den: i64, range: i64) -> Rat {
    let q = rng.gen_range(1..=max_den.max(1));
    let p = rng.gen_range(0..=range * q);
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize, max_den: i64, range: i64) -> RatPoint {
    RatPoint::new((0..n).map(|_| random_rat(rng, max_den, range)).collect())
}

/// A random `k`-simplex in ℝⁿ, redrawn until affinely independent.
pub fn random_simplex<R: Rng>(rng: &mut R, n: usize, k: usize, max_den: i64, range: i64) -> Simplex {
    assert!(k <= n);
    loop {
        let v: Vec<RatPoint> = (0..=k).map(|_| random_point(rng, n, max_den, range)).collect();
        if affine_dim(&v) == k as isize {
            return Simplex::new(v).expect("independent");
        }
    }
}

pub fn random_polyhedron<R: Rng>(rng: &mut R, cfg: &PolyConfig) -> Polyhedron {
    let n = cfg.ambient_dim;
    let count = rng.gen_range(1..=cfg.max_simplexes.max(1));
    let top = cfg.max_simplex_dim.min(n);
    let simplexes = (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=top);
            random_simplex(rng, n, k, cfg.max_den, cfg.coord_range)
        })
        .collect();
    Polyhedron::new(n, simplexes).expect("uniform dimension")
}

/// A random full-dimensional polyhedron: every simplex has dimension `n`.
pub fn random_full_polyhedron<R: Rng>(rng: &mut R, cfg: &PolyConfig) -> Polyhedron {
    let n = cfg.ambient_dim;
    let count = rng.gen_range(1..=cfg.max_simplexes.max(1));
    let simplexes = (0..count).map(|_| random_simplex(rng, n, n, cfg.max_den, cfg.coord_range)).collect();
    Polyhedron::new(n, simplexes).expect("uniform dimension")
}

/// Applies `steps` Farey blow-ups at randomly chosen simplexes of dimension
/// at least one.
pub fn random_farey_chain<R: Rng>(rng: &mut R, delta: &Complex, steps: usize) -> Complex {
    let mut c = delta.clone();
    for _ in 0..steps {
        let candidates: Vec<&Simplex> = c.simplexes().iter().filter(|s| s.dim() >= 1).collect();
        let Some(t) = candidates.choose(rng) else { break };
        let t = (*t).clone();
        c = farey_blow_up(&c, &t).expect("regular member");
    }
    c
}

/// A regular `k`-simplex in ℝⁿ with an integer vertex, built from the
/// standard simplex by Farey moves followed by a random element of `Gₙ`.
/// Returns the simplex and its integer vertex.
pub fn random_regular_simplex<R: Rng>(rng: &mut R, n: usize, k: usize, moves: usize) -> (Simplex, RatPoint) {
    assert!(k <= n);
    let mut verts: Vec<RatPoint> = (0..=k)
        .map(|i| {
            let mut c = vec![0i64; n];
            if i > 0 {
                c[i - 1] = 1;
            }
            RatPoint::from_ints(&c)
        })
        .collect();
    // vertex 0 stays integral
    for _ in 0..moves {
        if k == 0 {
            break;
        }
        let size = rng.gen_range(2..=k + 1);
        let mut idx: Vec<usize> = (0..=k).collect();
        idx.shuffle(rng);
        let face: Vec<usize> = idx[..size].to_vec();
        let Some(&replace) = face.iter().filter(|&&i| i != 0).collect::<Vec<_>>().choose(rng).copied() else {
            continue;
        };
        let f = Simplex::new(face.iter().map(|&i| verts[i].clone()).collect()).expect("face");
        verts[replace] = farey_mediant(&f).expect("regular face");
    }
    let g = random_unimodular_with(n, rng, 3 * n, 2);
    let base = g.apply(&verts[0]);
    let s = Simplex::new(verts.iter().map(|v| g.apply(v)).collect()).expect("regular");
    (s, base)
}

/// Another regular simplex with the same affine hull as the regular simplex
/// `t`: a random change of basis of the lattice spanned by the homogeneous
/// correspondents, kept at positive heights.
pub fn random_same_hull<R: Rng>(rng: &mut R, t: &Simplex, steps: usize) -> Simplex {
    let mut basis: Vec<IntVec> = t.vertices().iter().map(homogeneous).collect();
    let k = basis.len();
    if k > 1 {
        for _ in 0..steps {
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..k);
            if i == j {
                continue;
            }
            let cand = if rng.gen_bool(0.5) { basis[i].add(&basis[j]) } else { basis[i].sub(&basis[j]) };
            if cand.height().is_positive() {
                basis[i] = cand;
            }
        }
    }
    let verts = basis.iter().map(|b| dehomogenize(b).expect("positive height")).collect();
    Simplex::new(verts).expect("basis of the same lattice")
}

/// The first `j` rows of a random unimodular matrix.
pub fn random_partial_basis<R: Rng>(rng: &mut R, n: usize, j: usize) -> Vec<IntVec> {
    let g = random_unimodular_with(n, rng, 3 * n, 0);
    (0..j).map(|r| g.matrix().row(r)).collect()
}

/// A random nonempty rational affine subspace given by small integer
/// equations.
pub fn random_affine_subspace<R: Rng>(rng: &mut R, n: usize) -> AffineSubspace {
    loop {
        let codim = rng.gen_range(0..=n);
        let eqs: Vec<(IntVec, BigInt)> = (0..codim)
            .map(|_| {
                let a = IntVec::new((0..n).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect());
                (a, BigInt::from(rng.gen_range(-6..=6)))
            })
            .collect();
        if let Ok(f) = AffineSubspace::from_equations(n, eqs) {
            return f;
        }
    }
}

/// A random rational point of `f`: the base point plus rational multiples
/// of the directions with denominators up to `max_den`.
pub fn random_point_in<R: Rng>(rng: &mut R, f: &AffineSubspace, max_den: i64) -> RatPoint {
    let mut coords = f.basis_point().coords().to_vec();
    for d in f.directions() {
        let c = random_rat(rng, max_den, 4) - Rat::from_integer(BigInt::from(2));
        for (x, y) in coords.iter_mut().zip(d.to_rats()) {
            *x += &c * y;
        }
    }
    RatPoint::new(coords)
}

/// A random simplicial fan in ℝⁿ with at least one singular cone: either a
/// single cone with small integer generators, or the lift of a random
/// rational complex.
pub fn random_singular_fan<R: Rng>(rng: &mut R, n: usize) -> SimplicialFan {
    loop {
        let fan = if rng.gen_bool(0.5) {
            let k = rng.gen_range(2..=n);
            let gens: Vec<IntVec> =
                (0..k).map(|_| IntVec::new((0..n).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect())).collect();
            match Cone::new(gens) {
                Ok(c) => SimplicialFan::from_maximal(n, [c]),
                Err(_) => continue,
            }
        } else {
            let cfg = PolyConfig { ambient_dim: n - 1, max_simplex_dim: n - 1, max_simplexes: 2, max_den: if n >= 4 { 2 } else { 3 }, coord_range: 1 };
            lift(random_polyhedron(rng, &cfg).canonical())
        };
        if !fan.is_regular() {
            return fan;
        }
    }
}

/// A uniformly random point in the box `[lo, hi]` with denominators up to
/// `max_den`.
pub fn random_point_in_box<R: Rng>(rng: &mut R, lo: &[Rat], hi: &[Rat], max_den: i64) -> RatPoint {
    RatPoint::new(
        lo.iter()
            .zip(hi)
            .map(|(a, b)| {
                let q = rng.gen_range(1..=max_den);
                let t = Rat::new(BigInt::from(rng.gen_range(0..=q)), BigInt::from(q));
                a + (b - a) * t
            })
            .collect(),
    )
}

/// A random integer vector with entries in `[-range, range]`.
pub fn random_int_vec<R: Rng>(rng: &mut R, n: usize, range: i64) -> IntVec {
    IntVec::new((0..n).map(|_| BigInt::from(rng.gen_range(-range..=range))).collect())
}

/// Whether the rows form part of a lattice basis.
pub fn is_partial_basis(rows: &[IntVec]) -> bool {
    rows.first().map_or(true, |r| {
        crate::lattice::gcd_maximal_minors(&IntMat::from_rows(rows, r.len())).is_one()
    })
}
