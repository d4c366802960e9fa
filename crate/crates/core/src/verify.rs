//! Randomized property suite behind `ratvol verify`.
//!
//! Trial `t` of property `k` draws from its own stream derived from the seed,
//! so reports do not depend on scheduling. Properties run on worker threads.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::fan::{desingularize_logged, lift, regular_triangulation, unlift};
use crate::io::{complex_dump, PolyhedronFile, PropertyResult};
use crate::lattice::{
    den, gcd_maximal_minors, homogeneous, lattice_points_half_open, primitive, smith_normal_form,
    integer_solvable, IntMat, IntVec, Rat, RatPoint,
};
use crate::measure::{
    kappa_sq, kappa_sq_with, lambda, lambda_of_complex, lebesgue_volume_of, monte_carlo_volume,
    proportionality_check,
};
use crate::polyhedron::{
    affine_hull, equal_denominator_simplex, height_reduction, intersection, min_denominator, union,
    Polyhedron,
};
use crate::sample::*;
use crate::simplicial::{
    bbox, den_simplex, dimensional_part, farey_blow_up, farey_mediant, is_regular, standard_triangulation,
    Complex, Simplex,
};
use crate::transforms::{embed, random_unimodular_with};

type Outcome = std::result::Result<(), Value>;

/// Run options.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    /// Test hook: perturbs every λ value by a non-invariant amount.
    pub corrupt_lambda: bool,
}

/// Per-trial state handed to a property check.
pub struct Ctx<'a> {
    pub rng: TrialRng,
    pub trial: usize,
    corpus: &'a [Polyhedron],
    corrupt: bool,
}

impl Ctx<'_> {
    fn lambda(&self, p: &Polyhedron, d: usize) -> Rat {
        let v = lambda(p, d).0;
        if !self.corrupt {
            return v;
        }
        let shift = p.canonical().vertices().first().map(|x| x.coords()[0].abs()).unwrap_or_else(Rat::zero);
        v + shift
    }

    fn lambda_vector(&self, p: &Polyhedron, top: usize) -> Vec<Rat> {
        (0..=top).map(|d| self.lambda(p, d)).collect()
    }

    /// A corpus polyhedron on even trials when a corpus is given, otherwise
    /// a random one in dimension 1 to 3.
    fn polyhedron(&mut self) -> Polyhedron {
        if !self.corpus.is_empty() && self.trial % 2 == 0 {
            return self.corpus[(self.trial / 2) % self.corpus.len()].clone();
        }
        let n = self.rng.gen_range(1..=3);
        self.random_polyhedron(n)
    }

    fn random_polyhedron(&mut self, n: usize) -> Polyhedron {
        random_polyhedron(&mut self.rng, &poly_config(n))
    }
}

/// Polyhedron shape used throughout the suite; smaller in higher dimension.
pub fn poly_config(n: usize) -> PolyConfig {
    match n {
        0..=1 => PolyConfig { ambient_dim: n, max_simplex_dim: n, max_simplexes: 3, max_den: 12, coord_range: 2 },
        2 => PolyConfig { ambient_dim: 2, max_simplex_dim: 2, max_simplexes: 2, max_den: 4, coord_range: 2 },
        _ => PolyConfig { ambient_dim: n, max_simplex_dim: n, max_simplexes: 2, max_den: 2, coord_range: 1 },
    }
}

fn pj(p: &Polyhedron) -> Value {
    serde_json::to_value(PolyhedronFile::from_polyhedron(p)).unwrap()
}

fn sj(s: &Simplex) -> Value {
    serde_json::to_value(PolyhedronFile::from_simplexes(s.ambient_dim(), [s])).unwrap()
}

fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn ensure(ok: bool, payload: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(payload())
    }
}

/// A point with coordinates in `[-range, range]` and denominators up to
/// `max_den`.
fn signed_point(rng: &mut TrialRng, n: usize, max_den: i64, range: i64) -> RatPoint {
    let p = random_point(rng, n, max_den, 2 * range);
    RatPoint::new(p.coords().iter().map(|c| c - Rat::from_integer(BigInt::from(range))).collect())
}

fn sample_in_bbox(rng: &mut TrialRng, points: &[RatPoint], count: usize) -> Vec<RatPoint> {
    let (lo, hi) = bbox(points);
    (0..count).map(|_| random_point_in_box(rng, &lo, &hi, 7)).collect()
}

fn random_regular_complex(rng: &mut TrialRng) -> Complex {
    let n = rng.gen_range(1..=3);
    let j = rng.gen_range(1..=n);
    let b = random_partial_basis(rng, n, j);
    let c = standard_triangulation(&b).expect("partial basis");
    let steps = rng.gen_range(0..=4);
    random_farey_chain(rng, &c, steps)
}

fn check_homogeneous(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=4);
    let p = signed_point(&mut ctx.rng, n, 12, 3);
    let h = homogeneous(&p);
    ensure(h.is_primitive() && *h.height() == den(&p), || json!({ "point": p.to_string() }))
}

fn check_primitive(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=4);
    let v = random_int_vec(&mut ctx.rng, n, 6);
    if v.is_zero() {
        return ensure(primitive(&v).is_err(), || json!({ "vector": v.to_string() }));
    }
    let k = BigInt::from(ctx.rng.gen_range(1..=9));
    let p = primitive(&v).unwrap();
    ensure(primitive(&v.scale(&k)).unwrap() == p && primitive(&p).unwrap() == p, || {
        json!({ "vector": v.to_string(), "k": k.to_string() })
    })
}

fn check_smith(ctx: &mut Ctx) -> Outcome {
    let r = ctx.rng.gen_range(1..=4);
    let c = ctx.rng.gen_range(1..=4);
    let rows: Vec<IntVec> = (0..r).map(|_| random_int_vec(&mut ctx.rng, c, 4)).collect();
    let m = IntMat::from_rows(&rows, c);
    let s = smith_normal_form(&m);
    let f = s.invariant_factors();
    let diag_ok = (0..r).all(|i| (0..c).all(|j| i == j || s.d.get(i, j).is_zero()));
    let chain_ok = f.iter().all(|x| x.is_positive()) && f.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
    let ok = s.u.mul(&m).mul(&s.v) == s.d && s.u.is_unimodular() && s.v.is_unimodular() && diag_ok && chain_ok;
    ensure(ok, || json!({ "rows": rows.iter().map(|x| x.to_string()).collect::<Vec<_>>() }))
}

fn check_parallelepiped(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let k = ctx.rng.gen_range(1..=n);
    let gens: Vec<IntVec> = (0..k).map(|_| random_int_vec(&mut ctx.rng, n, 3)).collect();
    let Ok(points) = lattice_points_half_open(&gens) else {
        return Ok(());
    };
    let g = gcd_maximal_minors(&IntMat::from_rows(&gens, n));
    let ok = BigInt::from(points.len()) == g && (g.is_one() == (points.len() == 1));
    ensure(ok, || json!({ "generators": gens.iter().map(|x| x.to_string()).collect::<Vec<_>>() }))
}

fn check_farey(ctx: &mut Ctx) -> Outcome {
    let c = random_regular_complex(&mut ctx.rng);
    let cands: Vec<&Simplex> = c.simplexes().iter().filter(|s| s.dim() >= 1).collect();
    let t = cands[ctx.rng.gen_range(0..cands.len())].clone();
    let m = farey_mediant(&t).unwrap();
    let payload = || json!({ "complex": complex_dump(&c), "simplex": sj(&t) });
    let sum: BigInt = t.vertices().iter().map(den).sum();
    ensure(den(&m) == sum, payload)?;
    let blown = farey_blow_up(&c, &t).unwrap();
    ensure(blown.is_regular() && blown.validate().is_ok(), payload)?;
    // 1/den(T) = Σ 1/den(S_u)
    let dt = den_simplex(&t).unwrap();
    let parts: Rat = (0..t.vertices().len())
        .map(|u| {
            let mut v = t.vertices().to_vec();
            v[u] = m.clone();
            let s = Simplex::new(v).unwrap();
            let ds = den_simplex(&s).unwrap();
            debug_assert_eq!(&ds * den(&t.vertices()[u]), &dt * den(&m));
            Rat::new(BigInt::one(), ds)
        })
        .sum();
    ensure(parts == Rat::new(BigInt::one(), dt), payload)?;
    let pts = sample_in_bbox(&mut ctx.rng, &c.vertices(), 20);
    ensure(pts.iter().all(|x| c.contains_point(x) == blown.contains_point(x)), payload)
}

fn check_regular_oracle(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let k = ctx.rng.gen_range(0..=n);
    let verts: Vec<RatPoint> = (0..=k).map(|_| signed_point(&mut ctx.rng, n, 4, 2)).collect();
    let Ok(s) = Simplex::new(verts) else { return Ok(()) };
    let pts = lattice_points_half_open(&s.lifted_vertices()).unwrap();
    ensure(is_regular(&s) == (pts.len() == 1), || json!({ "simplex": sj(&s) }))
}

fn check_desingularize(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(2..=3);
    let f = random_singular_fan(&mut ctx.rng, n);
    let (out, log) = desingularize_logged(&f);
    let payload = || json!({ "cones": f.maximal().iter().map(|c| c.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() });
    ensure(out.is_regular(), payload)?;
    let decreasing = log
        .iter()
        .all(|s| s.replaced.iter().all(|r| r.child_multiplicities.iter().all(|m| *m < r.multiplicity)));
    ensure(decreasing, payload)?;
    let inputs = f.maximal();
    let refines = out.maximal().iter().all(|c| inputs.iter().any(|i| c.generators().iter().all(|g| i.contains(g))));
    ensure(refines, payload)?;
    let ok = (0..50).all(|_| {
        let v = random_int_vec(&mut ctx.rng, n, 4);
        f.contains(&v) == out.contains(&v)
    });
    ensure(ok, payload)
}

fn check_lift_unlift(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let c = p.canonical();
    let fan = lift(c);
    let back = unlift(&fan).unwrap();
    ensure(&back == c && lift(&back) == fan, || json!({ "polyhedron": pj(&p) }))
}

fn check_triangulate_support(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    if p.is_empty() {
        return Ok(());
    }
    let c = p.canonical();
    let payload = || json!({ "polyhedron": pj(&p) });
    ensure(c.validate().is_ok(), payload)?;
    let verts: Vec<RatPoint> = p.simplexes().iter().flat_map(|s| s.vertices().iter().cloned()).collect();
    let mut pts = sample_in_bbox(&mut ctx.rng, &verts, 40);
    pts.extend(p.simplexes().iter().map(Simplex::centroid));
    ensure(pts.iter().all(|x| p.contains(x) == c.contains_point(x)), payload)
}

fn check_min_denominator(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let f = random_affine_subspace(&mut ctx.rng, n);
    let d = min_denominator(&f).unwrap();
    let basis = f.lifted_lattice_basis();
    let payload = |y: &RatPoint| json!({ "equations": eqs(&f), "point": y.to_string(), "d_F": d.to_string() });
    for _ in 0..10 {
        let mut v = IntVec::zero(n + 1);
        for b in &basis {
            v = v.add(&b.scale(&BigInt::from(ctx.rng.gen_range(-5..=5))));
        }
        if v.height().is_zero() {
            continue;
        }
        if v.height().is_negative() {
            v = v.scale(&BigInt::from(-1));
        }
        let y = crate::lattice::dehomogenize(&v).unwrap();
        ensure(f.contains(&y) && den(&y).is_multiple_of(&d), || payload(&y))?;
    }
    Ok(())
}

fn eqs(f: &crate::polyhedron::AffineSubspace) -> Value {
    Value::Array(f.equations().iter().map(|(a, t)| json!([a.to_string(), t.to_string()])).collect())
}

fn check_height_reduction(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let f = random_affine_subspace(&mut ctx.rng, n);
    let b = f.positive_height_basis();
    let r = height_reduction(&b).unwrap();
    let cols = n + 1;
    let (mb, mr) = (IntMat::from_rows(&b, cols), IntMat::from_rows(&r, cols));
    let same_factors = smith_normal_form(&mb).invariant_factors() == smith_normal_form(&mr).invariant_factors();
    let spans = |m: &IntMat, vs: &[IntVec]| vs.iter().all(|v| integer_solvable(&m.transpose(), v.entries()));
    let ok = same_factors && spans(&mb, &r) && spans(&mr, &b) && r.iter().all(|v| v.height() == r[0].height());
    ensure(ok, || json!({ "equations": eqs(&f) }))
}

fn check_equal_denominator(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let f = random_affine_subspace(&mut ctx.rng, n);
    let d = min_denominator(&f).unwrap();
    let s = equal_denominator_simplex(&f).unwrap();
    let ok = is_regular(&s)
        && s.dim() == f.dim()
        && s.vertices().iter().all(|v| f.contains(v) && den(v) == d);
    ensure(ok, || json!({ "equations": eqs(&f), "simplex": sj(&s) }))
}

fn check_independence(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let n = p.ambient_dim();
    let delta = regular_triangulation(&p);
    let base: Vec<Rat> = (0..=n).map(|d| lambda_of_complex(&delta, d).unwrap().0).collect();
    for _ in 0..3 {
        let steps = ctx.rng.gen_range(1..=4);
        let refined = random_farey_chain(&mut ctx.rng, &delta, steps);
        let v: Vec<Rat> = (0..=n).map(|d| lambda_of_complex(&refined, d).unwrap().0).collect();
        ensure(v == base, || json!({ "polyhedron": pj(&p), "expected": rats(&base), "got": rats(&v) }))?;
    }
    Ok(())
}

fn check_dimensional_part(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let n = p.ambient_dim();
    let d = ctx.rng.gen_range(0..=n);
    let part = Polyhedron::new(n, dimensional_part(p.canonical(), d).maximal().into_iter().cloned().collect()).unwrap();
    let (a, b) = (ctx.lambda(&p, d), ctx.lambda(&part, d));
    ensure(a == b && ctx.lambda(&Polyhedron::empty(n), d).is_zero(), || {
        json!({ "polyhedron": pj(&p), "d": d, "lambda": a.to_string(), "part": b.to_string() })
    })
}

fn check_valuation(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let n = p.ambient_dim();
    let q = ctx.random_polyhedron(n);
    let low = p.dim().unwrap_or(0).max(q.dim().unwrap_or(0));
    let d = ctx.rng.gen_range(low..=n);
    let u = union(&p, &q).unwrap();
    let i = intersection(&p, &q).unwrap();
    let lhs = ctx.lambda(&p, d) + ctx.lambda(&q, d);
    let rhs = ctx.lambda(&u, d) + ctx.lambda(&i, d);
    ensure(lhs == rhs, || json!({ "p": pj(&p), "q": pj(&q), "d": d, "lhs": lhs.to_string(), "rhs": rhs.to_string() }))
}

fn check_conservativity(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let e = embed(&p);
    let top = p.ambient_dim() + 1;
    let (a, b) = (ctx.lambda_vector(&p, top), ctx.lambda_vector(&e, top));
    ensure(a == b, || json!({ "polyhedron": pj(&p), "lambda": rats(&a), "embedded": rats(&b) }))
}

fn check_pyramid(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let k = ctx.rng.gen_range(1..=n);
    let moves = ctx.rng.gen_range(0..=4);
    let (t, apex) = random_regular_simplex(&mut ctx.rng, n, k, moves);
    let base = Simplex::new(t.vertices().iter().filter(|v| **v != apex).cloned().collect()).unwrap();
    let lk = ctx.lambda(&Polyhedron::from_simplex(t.clone()), k);
    let lb = ctx.lambda(&Polyhedron::from_simplex(base), k - 1);
    ensure(lk == lb / Rat::from_integer(BigInt::from(k)), || json!({ "simplex": sj(&t), "apex": apex.to_string() }))
}

fn check_normalization(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let j = ctx.rng.gen_range(1..=n);
    let b = random_partial_basis(&mut ctx.rng, n, j);
    let parts = standard_triangulation(&b).unwrap().maximal().into_iter().cloned().collect();
    let p = Polyhedron::new(n, parts).unwrap();
    let l = ctx.lambda(&p, j);
    ensure(l.is_one(), || json!({ "basis": b.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "lambda": l.to_string() }))
}

fn check_lebesgue(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let p = random_full_polyhedron(&mut ctx.rng, &poly_config(n));
    let l = ctx.lambda(&p, n);
    let v = lebesgue_volume_of(p.canonical()).0;
    let payload = || json!({ "polyhedron": pj(&p), "lambda": l.to_string(), "volume": v.to_string() });
    ensure(l == v, payload)?;
    if ctx.trial < 10 {
        let mc = monte_carlo_volume(&p, 100_000, ctx.rng.gen()).unwrap();
        ensure(mc.agrees_with(num_traits::ToPrimitive::to_f64(&v).unwrap(), 3.0), payload)?;
    }
    Ok(())
}

fn check_proportionality(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let m = ctx.rng.gen_range(0..=n);
    let moves = ctx.rng.gen_range(0..=4);
    let (t, _) = random_regular_simplex(&mut ctx.rng, n, m, moves);
    let t2 = random_same_hull(&mut ctx.rng, &t, 6);
    let payload = || json!({ "t": sj(&t), "t2": sj(&t2) });
    ensure(proportionality_check(&t, &t2).unwrap_or(false), payload)?;
    let k = kappa_sq(&affine_hull(&t)).unwrap();
    ensure(kappa_sq_with(&t).unwrap() == k && kappa_sq_with(&t2).unwrap() == k, payload)
}

fn check_invariance(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let n = p.ambient_dim();
    let g = random_unimodular_with(n, &mut ctx.rng, 3 * n, 5);
    let q = g.apply_polyhedron(&p);
    let (a, b) = (ctx.lambda_vector(&p, n), ctx.lambda_vector(&q, n));
    ensure(a == b, || json!({ "polyhedron": pj(&p), "image": pj(&q), "lambda": rats(&a), "image_lambda": rats(&b) }))
}

fn check_denominator_preservation(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=4);
    let g = random_unimodular_with(n, &mut ctx.rng, 3 * n, 5);
    let x = signed_point(&mut ctx.rng, n, 12, 3);
    ensure(den(&g.apply(&x)) == den(&x), || json!({ "point": x.to_string() }))
}

fn check_regularity_preservation(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=3);
    let k = ctx.rng.gen_range(0..=n);
    let s = random_simplex(&mut ctx.rng, n, k, 4, 2);
    let g = random_unimodular_with(n, &mut ctx.rng, 3 * n, 5);
    ensure(is_regular(&s) == is_regular(&g.apply_simplex(&s)), || json!({ "simplex": sj(&s) }))
}

fn check_group_laws(ctx: &mut Ctx) -> Outcome {
    let n = ctx.rng.gen_range(1..=4);
    let g = random_unimodular_with(n, &mut ctx.rng, 3 * n, 5);
    let h = random_unimodular_with(n, &mut ctx.rng, 3 * n, 5);
    let x = signed_point(&mut ctx.rng, n, 12, 3);
    let ok = g.compose(&h).apply(&x) == g.apply(&h.apply(&x)) && g.inverse().apply(&g.apply(&x)) == x;
    ensure(ok, || json!({ "point": x.to_string() }))
}

fn check_round_trip(ctx: &mut Ctx) -> Outcome {
    let p = ctx.polyhedron();
    let c = regular_triangulation(&p);
    let text = complex_dump(&c).to_string();
    let back = PolyhedronFile::parse(&text).ok().and_then(|f| f.to_complex().ok());
    ensure(back.as_ref() == Some(&c), || json!({ "polyhedron": pj(&p) }))
}

/// A named property check.
pub struct Property {
    pub name: &'static str,
    pub check: fn(&mut Ctx) -> Outcome,
}

pub fn properties() -> Vec<Property> {
    macro_rules! props {
        ($($name:literal => $f:ident),* $(,)?) => { vec![$(Property { name: $name, check: $f }),*] };
    }
    props![
        "homogeneous_primitive" => check_homogeneous,
        "primitive_scale_invariant" => check_primitive,
        "smith_round_trip" => check_smith,
        "parallelepiped_count" => check_parallelepiped,
        "farey_blow_up" => check_farey,
        "regularity_oracle" => check_regular_oracle,
        "desingularize" => check_desingularize,
        "lift_unlift" => check_lift_unlift,
        "triangulate_union_support" => check_triangulate_support,
        "min_denominator_divides" => check_min_denominator,
        "height_reduction_lattice" => check_height_reduction,
        "equal_denominator_simplex" => check_equal_denominator,
        "triangulation_independence" => check_independence,
        "dimensional_part" => check_dimensional_part,
        "invariance" => check_invariance,
        "valuation" => check_valuation,
        "conservativity" => check_conservativity,
        "pyramid" => check_pyramid,
        "normalization" => check_normalization,
        "lebesgue_agreement" => check_lebesgue,
        "proportionality" => check_proportionality,
        "denominator_preservation" => check_denominator_preservation,
        "regularity_preservation" => check_regularity_preservation,
        "group_laws" => check_group_laws,
        "dump_round_trip" => check_round_trip,
    ]
}

pub fn run_property(k: usize, prop: &Property, corpus: &[Polyhedron], opts: &VerifyOptions) -> PropertyResult {
    for trial in 0..opts.trials {
        let stream = ((k as u64) << 32) | trial as u64;
        let mut ctx = Ctx { rng: trial_rng(opts.seed, stream), trial, corpus, corrupt: opts.corrupt_lambda };
        if let Err(payload) = (prop.check)(&mut ctx) {
            return PropertyResult {
                name: prop.name.to_string(),
                trials: trial + 1,
                passed: false,
                counterexample: Some(json!({ "trial": trial, "instance": payload })),
            };
        }
    }
    PropertyResult { name: prop.name.to_string(), trials: opts.trials, passed: true, counterexample: None }
}

/// Runs every property for `opts.trials` trials, one worker per property.
pub fn run_suite(corpus: &[Polyhedron], opts: &VerifyOptions) -> Vec<PropertyResult> {
    let props = properties();
    std::thread::scope(|scope| {
        let handles: Vec<_> = props
            .iter()
            .enumerate()
            .map(|(k, p)| scope.spawn(move || run_property(k, p, corpus, opts)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("property worker panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_run_nothing() {
        let r = run_suite(&[], &VerifyOptions { seed: 1, trials: 0, corrupt_lambda: false });
        assert!(r.iter().all(|p| p.passed && p.trials == 0));
    }

    #[test]
    fn corruption_breaks_invariance() {
        let opts = VerifyOptions { seed: 42, trials: 10, corrupt_lambda: true };
        let props = properties();
        let k = props.iter().position(|p| p.name == "invariance").unwrap();
        let r = run_property(k, &props[k], &[], &opts);
        assert!(!r.passed);
        assert!(r.counterexample.is_some());
    }
}
