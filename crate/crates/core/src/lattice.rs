//! Exact integer and rational linear algebra on lattices.
//!
//! Everything here works with arbitrary-precision integers. Points of ℚⁿ are
//! [`RatPoint`]s, integer vectors are [`IntVec`]s and integer matrices are
//! row-major [`IntMat`]s.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// A point of ℚⁿ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatPoint(Vec<Rat>);

impl RatPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatPoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatPoint(coords.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    /// Builds a point from `(numerator, denominator)` pairs.
    pub fn from_fracs(coords: &[(i64, i64)]) -> Self {
        RatPoint(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        RatPoint(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn sub(&self, other: &RatPoint) -> Vec<Rat> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Appends one coordinate.
    pub fn extended(&self, value: Rat) -> RatPoint {
        let mut c = self.0.clone();
        c.push(value);
        RatPoint(c)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An integer vector; houses homogeneous correspondents and cone generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zero(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Last entry; the "height" of a lifted vector.
    pub fn height(&self) -> &BigInt {
        self.0.last().expect("height of an empty vector")
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, e| g.gcd(e))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn to_rats(&self) -> Vec<Rat> {
        self.0.iter().map(|e| Rat::from_integer(e.clone())).collect()
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Row-major integer matrix. Zero rows or columns are allowed internally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Stacks vectors as rows. All rows must share a length; `cols` is used
    /// when the list is empty.
    pub fn from_rows(rows: &[IntVec], cols: usize) -> Self {
        let cols = rows.first().map_or(cols, IntVec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r.entries().iter().cloned());
        }
        IntMat { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMat { rows, cols, data: entries.iter().map(|&e| BigInt::from(e)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> IntVec {
        IntVec(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> IntVec {
        IntVec((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| v[c].clone() * Rat::from_integer(self.get(r, c).clone()))
                    .sum()
            })
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        bareiss_det(self.rows, self.data.clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

fn bareiss_det(n: usize, mut a: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * &a[n * n - 1]
}

/// Least common denominator of the coordinates; 1 for integer points.
pub fn den(p: &RatPoint) -> BigInt {
    p.coords().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
}

/// The homogeneous correspondent `den(p)·(p₁,…,pₙ,1)`.
pub fn homogeneous(p: &RatPoint) -> IntVec {
    let d = den(p);
    let mut out: Vec<BigInt> =
        p.coords().iter().map(|c| (c * Rat::from_integer(d.clone())).to_integer()).collect();
    out.push(d);
    IntVec(out)
}

/// Inverse of [`homogeneous`] for vectors of positive height.
pub fn dehomogenize(v: &IntVec) -> Result<RatPoint> {
    let h = v.height();
    if !h.is_positive() {
        return Err(Error::NotGraphPositioned);
    }
    let n = v.len() - 1;
    Ok(RatPoint((0..n).map(|i| Rat::new(v.0[i].clone(), h.clone())).collect()))
}

/// The primitive vector on the ray of `v`.
pub fn primitive(v: &IntVec) -> Result<IntVec> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroRay);
    }
    Ok(IntVec(v.0.iter().map(|e| e / &g).collect()))
}

/// gcd of the absolute values of all maximal minors.
///
/// Small cases enumerate the minors directly. Above size 4 the matrix is
/// reduced by unimodular column operations (extended-gcd elimination), which
/// preserve every determinantal divisor, until it is lower triangular.
pub fn gcd_maximal_minors(m: &IntMat) -> BigInt {
    let m = if m.rows() > m.cols() { m.transpose() } else { m.clone() };
    let k = m.rows();
    if k == 0 {
        return BigInt::one();
    }
    if k <= 4 {
        let mut g = BigInt::zero();
        for cols in combinations(m.cols(), k) {
            let mut data = Vec::with_capacity(k * k);
            for r in 0..k {
                for &c in &cols {
                    data.push(m.get(r, c).clone());
                }
            }
            g = g.gcd(&bareiss_det(k, data));
            if g.is_one() {
                break;
            }
        }
        g
    } else {
        let (_, h) = column_echelon(&m);
        (0..k).fold(BigInt::one(), |acc, i| acc * h.get(i, i)).abs()
    }
}

/// Reduces `m` (rows ≤ cols) by unimodular column operations to lower
/// triangular form `m·V = [H | 0]`. Returns `(V, m·V)`.
fn column_echelon(m: &IntMat) -> (IntMat, IntMat) {
    let mut a = m.clone();
    let mut v = IntMat::identity(m.cols());
    let mut pivot_col = 0;
    for r in 0..a.rows() {
        if pivot_col >= a.cols() {
            break;
        }
        loop {
            // smallest nonzero entry in row r among columns >= pivot_col
            let best = (pivot_col..a.cols())
                .filter(|&c| !a.get(r, c).is_zero())
                .min_by(|&x, &y| a.get(r, x).abs().cmp(&a.get(r, y).abs()));
            let Some(best) = best else { break };
            a.swap_cols(pivot_col, best);
            v.swap_cols(pivot_col, best);
            let mut done = true;
            for c in pivot_col + 1..a.cols() {
                if a.get(r, c).is_zero() {
                    continue;
                }
                let q = -a.get(r, c).div_floor(a.get(r, pivot_col));
                a.add_col(c, pivot_col, &q);
                v.add_col(c, pivot_col, &q);
                if !a.get(r, c).is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (v, a)
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Result of [`smith_normal_form`]: `u · m · v = d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Nonzero diagonal entries d₀ | d₁ | ⋯.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let mut a = m.clone();
    let mut u = IntMat::identity(m.rows());
    let mut v = IntMat::identity(m.cols());
    let (rows, cols) = (m.rows(), m.cols());

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if pivot.map_or(true, |(pi, pj)| x.abs() < a.get(pi, pj).abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SmithForm { u, d: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pull an offending row into the pivot row
            let p = a.get(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d: a, v }
}

/// Integer basis of `{x ∈ ℤ^cols : m·x = 0}`. The basis is saturated.
pub fn integer_kernel(m: &IntMat) -> Vec<IntVec> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols()).map(|c| snf.v.col(c)).collect()
}

/// A lattice point of a half-open parallelepiped together with its
/// coordinates `μᵢ ∈ [0, 1)` in the generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParallelepipedPoint {
    pub point: IntVec,
    pub coefficients: Vec<Rat>,
}

impl ParallelepipedPoint {
    pub fn coefficient_sum(&self) -> Rat {
        self.coefficients.iter().sum()
    }
}

/// All integer points `Σ μᵢ gᵢ` with `0 ≤ μᵢ < 1`, sorted lexicographically.
///
/// Enumerates residues of the generated lattice inside the saturated lattice
/// of its span via the Smith form; the count equals
/// [`gcd_maximal_minors`] of the generator matrix.
pub fn lattice_points_half_open(gens: &[IntVec]) -> Result<Vec<ParallelepipedPoint>> {
    let Some(first) = gens.first() else {
        return Ok(vec![ParallelepipedPoint { point: IntVec::zero(0), coefficients: vec![] }]);
    };
    let g = IntMat::from_rows(gens, first.len());
    let snf = smith_normal_form(&g);
    let factors = snf.invariant_factors();
    if factors.len() < gens.len() {
        return Err(Error::DegenerateParallelepiped);
    }
    let k = gens.len();
    let n = first.len();
    // With L the largest invariant factor, ν = (digitᵢ/dᵢ) and μ = νU mod 1
    // become integers scaled by L: Lμⱼ = Σᵢ digitᵢ·(L/dᵢ)·Uᵢⱼ mod L.
    let l = factors[k - 1].clone();
    let w: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let s = &l / &factors[i];
            (0..k).map(|j| (&s * snf.u.get(i, j)).mod_floor(&l)).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![BigInt::zero(); k];
    let mut scaled = vec![BigInt::zero(); k];
    loop {
        let point: Vec<BigInt> = (0..n)
            .map(|c| {
                let s: BigInt = (0..k).map(|i| &scaled[i] * &gens[i].0[c]).sum();
                debug_assert!(s.is_multiple_of(&l));
                s / &l
            })
            .collect();
        let coefficients = scaled.iter().map(|m| Rat::new(m.clone(), l.clone())).collect();
        out.push(ParallelepipedPoint { point: IntVec(point), coefficients });

        // mixed-radix increment of the digits, updating Lμ incrementally
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < factors[i] {
                for (sj, wj) in scaled.iter_mut().zip(&w[i]) {
                    *sj = (&*sj + wj).mod_floor(&l);
                }
                break;
            }
            // digit i wraps: subtract (dᵢ − 1) steps
            let back = &factors[i] - 1u32;
            for (sj, wj) in scaled.iter_mut().zip(&w[i]) {
                *sj = (&*sj - wj * &back).mod_floor(&l);
            }
            digits[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Whether the integer system `m·x = b` has a solution `x ∈ ℤ^cols`.
pub fn integer_solvable(m: &IntMat, b: &[BigInt]) -> bool {
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let c: Vec<BigInt> =
        (0..m.rows()).map(|i| (0..m.rows()).map(|k| snf.u.get(i, k) * &b[k]).sum()).collect();
    c.iter().enumerate().all(|(i, ci)| match factors.get(i) {
        Some(d) => ci.is_multiple_of(d),
        None => ci.is_zero(),
    })
}
