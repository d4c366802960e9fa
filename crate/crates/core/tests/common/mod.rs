//! Independent oracles for the integration and acceptance tests. None of
//! these call into the library's lattice or linear algebra code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use ratvol::{RatPoint, Simplex};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Gaussian elimination: a solution of `A x = b`, if any.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

pub fn det_q(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        _ => (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_i128(&minor)
            })
            .sum(),
    }
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut c in choose(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of the maximal minors of a `k × n` matrix (`k ≤ n`), by enumeration.
pub fn minor_gcd(rows: &[Vec<i64>]) -> i128 {
    let k = rows.len();
    let n = rows[0].len();
    choose(n, k).into_iter().fold(0i128, |g, cols| {
        let m: Vec<Vec<i128>> = rows.iter().map(|r| cols.iter().map(|&c| r[c] as i128).collect()).collect();
        g.gcd(&det_i128(&m))
    })
}

/// Integer points of the half-open parallelepiped of `gens`, found by
/// scanning its bounding box.
pub fn brute_parallelepiped(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gens[0].len();
    let lo: Vec<i64> = (0..n).map(|c| gens.iter().map(|g| g[c].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|c| gens.iter().map(|g| g[c].max(0)).sum()).collect();
    let cols: Vec<Vec<Q>> = (0..n).map(|c| gens.iter().map(|g| q(g[c])).collect()).collect();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let b: Vec<Q> = x.iter().map(|&v| q(v)).collect();
        if let Some(mu) = solve(&cols, &b) {
            if mu.iter().all(|m| !m.is_negative() && *m < Q::one()) {
                out.push(x.clone());
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            x[i] += 1;
            if x[i] <= hi[i] {
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Whether `A y = b` has an integer solution: rank condition plus equality
/// of the gcds of the `r × r` minors of `A` and `[A | b]`.
pub fn int_solvable(a: &[Vec<i64>], b: &[i64]) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let cols = a[0].len();
    let aq: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let bq: Vec<Q> = b.iter().map(|&x| q(x)).collect();
    if solve(&aq, &bq).is_none() {
        return false;
    }
    let ab: Vec<Vec<i64>> = a.iter().zip(b).map(|(r, x)| r.iter().copied().chain([*x]).collect()).collect();
    let rank = (1..=rows.min(cols)).rev().find(|&r| minors_gcd(a, r) != 0).unwrap_or(0);
    rank == 0 || minors_gcd(a, rank) == minors_gcd(&ab, rank)
}

fn minors_gcd(m: &[Vec<i64>], r: usize) -> i128 {
    let cols = m[0].len();
    let mut g = 0i128;
    for rs in choose(m.len(), r) {
        for cs in choose(cols, r) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
            g = g.gcd(&det_i128(&sub));
        }
    }
    g
}

/// Least `q` such that `{a·x + t = 0}` has a point in `(1/q)ℤⁿ`.
pub fn min_denominator_oracle(eqs: &[(Vec<i64>, i64)]) -> i64 {
    let a: Vec<Vec<i64>> = eqs.iter().map(|(r, _)| r.clone()).collect();
    (1..).find(|&d| int_solvable(&a, &eqs.iter().map(|(_, t)| -t * d).collect::<Vec<_>>())).unwrap()
}

pub fn lcm_den(p: &RatPoint) -> BigInt {
    p.coords().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// `|det(edges)|/n!` computed from scratch.
pub fn det_volume(s: &Simplex) -> Q {
    let v = s.vertices();
    let edges: Vec<Vec<Q>> = v[1..].iter().map(|x| x.coords().iter().zip(v[0].coords()).map(|(a, b)| a - b).collect()).collect();
    let f: i64 = (1..=edges.len() as i64).product();
    det_q(&edges).abs() / q(f)
}

/// Barycentric membership test, independent of the library's H-reps.
pub fn in_simplex(s: &Simplex, p: &RatPoint) -> bool {
    let v = s.vertices();
    let n = p.dim();
    // Σ λᵢ vᵢ = p, Σ λᵢ = 1
    let mut rows: Vec<Vec<Q>> = (0..n).map(|c| v.iter().map(|x| x.coords()[c].clone()).collect()).collect();
    rows.push(vec![Q::one(); v.len()]);
    let mut b: Vec<Q> = p.coords().to_vec();
    b.push(Q::one());
    solve(&rows, &b).is_some_and(|l| l.iter().all(|x| !x.is_negative()))
}

/// Exact membership in a simplicial cone with small integer generators.
pub struct ConeOracle {
    gens: Vec<Vec<i128>>,
    /// Coordinates used for the square system and its adjugate.
    cols: Vec<usize>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

impl ConeOracle {
    pub fn new(gens: &[Vec<i64>]) -> Self {
        let k = gens.len();
        let n = gens[0].len();
        let g: Vec<Vec<i128>> = gens.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let (cols, det) = choose(n, k)
            .into_iter()
            .map(|cs| {
                let m: Vec<Vec<i128>> = (0..k).map(|i| cs.iter().map(|&c| g[i][c]).collect()).collect();
                let d = det_i128(&m);
                (cs, d)
            })
            .find(|(_, d)| *d != 0)
            .expect("independent generators");
        // M[r][i] = g_i[cols[r]]; solve M c = v restricted to cols
        let m: Vec<Vec<i128>> = cols.iter().map(|&c| (0..k).map(|i| g[i][c]).collect()).collect();
        let adj: Vec<Vec<i128>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let minor: Vec<Vec<i128>> = (0..k)
                            .filter(|&r| r != j)
                            .map(|r| (0..k).filter(|&c| c != i).map(|c| m[r][c]).collect())
                            .collect();
                        let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                        s * det_i128(&minor)
                    })
                    .collect()
            })
            .collect();
        ConeOracle { gens: g, cols, adj, det }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let k = self.gens.len();
        let vs: Vec<i128> = self.cols.iter().map(|&c| v[c] as i128).collect();
        // det·c = adj·v
        let dc: Vec<i128> = (0..k).map(|i| (0..k).map(|j| self.adj[i][j] * vs[j]).sum()).collect();
        if dc.iter().any(|x| x.signum() * self.det.signum() < 0) {
            return false;
        }
        // v must equal Σ cᵢ gᵢ in every coordinate
        (0..v.len()).all(|c| {
            let s: i128 = (0..k).map(|i| dc[i] * self.gens[i][c]).sum();
            s == self.det * v[c] as i128
        })
    }
}

pub fn to_i64(v: &ratvol::IntVec) -> Vec<i64> {
    v.entries().iter().map(|x| x.to_i64().expect("small entries")).collect()
}
