//! Closed-form evaluators for the parallel-diagonal counts: the k = 0 cases,
//! their k >= 1 refinements, the parity dispatcher [`f`], and the binomial
//! alternative [`barry`].
//!
//! Conventions, with C_i the i-th Catalan number:
//!
//! * `f01_even(m)`: triangulations of the 2m-gon with no diagonal parallel
//!   to a side, e.g. the side 0-1 (direction classes with odd endpoint sum).
//! * `f02_even(m)`: same polygon, classes with even endpoint sum, e.g. the
//!   class of the segment 0-2.
//! * `f01_odd(m)`: the (2m+1)-gon, where all direction classes agree.
//! * the `_k` variants count triangulations with exactly `k` such diagonals.
//!
//! The `k >= 1` counts are composition sums: the `k` parallel diagonals cut
//! the polygon into `k + 1` independently triangulated regions, so the count
//! is a sum over ordered region-size tuples of per-region factors. Those
//! sums are evaluated here as coefficients of truncated power-series
//! products, cached process-wide; the literal composition sums are kept in
//! the tests as an independent cross-check.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, Zero};

use crate::catalan::{binomial, catalan, pow2};
use crate::polygon::{CountedClass, DirectionClass, KHistogram, Vertex};
use crate::Error;

/// Triangulations of the 2m-gon with no diagonal parallel to side 0-1:
/// `2 * C_{2m-3}`. Panics for `m < 2`.
pub fn f01_even(m: u32) -> BigUint {
    assert!(m >= 2, "f01_even needs half-size >= 2, got {m}");
    catalan(2 * m - 3) * 2u32
}

/// Triangulations of the 2m-gon with no diagonal parallel to segment 0-2:
/// `C_{2m-1} + 2*C_{2m-2} - 2^{2m-1}*C_{m-1}`. Panics for `m < 2`.
pub fn f02_even(m: u32) -> BigUint {
    assert!(m >= 2, "f02_even needs half-size >= 2, got {m}");
    let positive = catalan(2 * m - 1) + catalan(2 * m - 2) * 2u32;
    positive
        .checked_sub(&(pow2(2 * u64::from(m) - 1) * catalan(m - 1)))
        .expect("f02_even is a count; the subtraction cannot underflow")
}

/// Triangulations of the (2m+1)-gon with no diagonal in a fixed direction
/// class: `2^{2m-1}*C_{m-1} - C_{2m-1}`. Panics for `m < 1`.
pub fn f01_odd(m: u32) -> BigUint {
    assert!(m >= 1, "f01_odd needs half-size >= 1, got {m}");
    let positive = pow2(2 * u64::from(m) - 1) * catalan(m - 1);
    positive
        .checked_sub(&catalan(2 * m - 1))
        .expect("f01_odd is a count; the subtraction cannot underflow")
}

/// Triangulations of the 2m-gon with exactly `k >= 1` diagonals parallel to
/// side 0-1: sum over compositions `i_1 + ... + i_{k+1} = m - 1` (positive
/// parts) of `2^{k+1} * prod C_{2i_j - 1}`. Zero when `k > m - 2`.
pub fn f01_even_k(m: u32, k: u32) -> BigUint {
    assert!(m >= 2, "f01_even_k needs half-size >= 2, got {m}");
    assert!(k >= 1, "f01_even_k needs k >= 1; the k = 0 case is f01_even");
    pow2(u64::from(k) + 1) * even_power_coeff(k + 1, m - 1)
}

/// Triangulations of the 2m-gon with exactly `k >= 1` diagonals parallel to
/// segment 0-2: sum over compositions of `m` into `k + 1` positive parts of
/// `f01_odd(i_1) * f01_odd(i_2) * prod_{j>=3} f01_even(i_j + 1)`. The two
/// distinguished regions are the odd polygons around vertices 0 and m. Zero
/// when `k > m - 1`.
pub fn f02_even_k(m: u32, k: u32) -> BigUint {
    assert!(m >= 2, "f02_even_k needs half-size >= 2, got {m}");
    assert!(k >= 1, "f02_even_k needs k >= 1; the k = 0 case is f02_even");
    pow2(u64::from(k) - 1) * odd2_even_coeff(k - 1, m)
}

/// Triangulations of the (2m+1)-gon with exactly `k >= 1` class diagonals:
/// sum over compositions of `m` into `k + 1` positive parts of
/// `f01_odd(i_1) * prod_{j>=2} f01_even(i_j + 1)`. Zero when `k > m - 1`.
pub fn f01_odd_k(m: u32, k: u32) -> BigUint {
    assert!(m >= 1, "f01_odd_k needs half-size >= 1, got {m}");
    assert!(k >= 1, "f01_odd_k needs k >= 1; the k = 0 case is f01_odd");
    pow2(u64::from(k)) * odd_even_coeff(k, m)
}

/// A count request: triangulations of the `n`-gon with exactly `k` diagonals
/// parallel to the segment `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountQuery {
    pub n: u32,
    pub x: Vertex,
    pub y: Vertex,
    pub k: u32,
}

/// Evaluates a [`CountQuery`] by closed form.
///
/// The count depends only on the parity of `n` and of `x + y`: odd `n`
/// collapses every direction class to one family, even `n` splits classes by
/// the parity of the endpoint sum.
pub fn f(query: &CountQuery) -> Result<BigUint, Error> {
    let CountQuery { n, x, y, k } = *query;
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    for label in [x, y] {
        if label >= n {
            return Err(Error::VertexOutOfRange { label, n });
        }
    }
    if x == y {
        return Err(Error::DegenerateSegment);
    }
    let m = n / 2;
    let value = if n % 2 == 1 {
        match k {
            0 => f01_odd(m),
            _ => f01_odd_k(m, k),
        }
    } else if (x + y) % 2 == 1 {
        match k {
            0 => f01_even(m),
            _ => f01_even_k(m, k),
        }
    } else {
        match k {
            0 => f02_even(m),
            _ => f02_even_k(m, k),
        }
    };
    Ok(value)
}

/// The two direction-class families of an even polygon, keyed by their
/// simplest representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyClass {
    /// Classes containing a side, e.g. the class of segment 0-1.
    Class01,
    /// Classes of even endpoint sum, e.g. the class of segment 0-2.
    Class02,
}

/// Closed-form k-histogram for the given family, shaped exactly like the
/// enumeration result of [`crate::polygon::histogram`].
pub fn family_histogram(n: u32, family: FamilyClass) -> Result<KHistogram, Error> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    let y: Vertex = match family {
        FamilyClass::Class01 => 1,
        FamilyClass::Class02 => 2,
    };
    let mut counts = BTreeMap::new();
    for k in 0..=n - 3 {
        let value = f(&CountQuery { n, x: 0, y, k })?;
        if !value.is_zero() {
            counts.insert(k, value);
        }
    }
    Ok(KHistogram::new(
        n,
        CountedClass::ParallelTo(DirectionClass::new(n, y % n)),
        counts,
    ))
}

/// Binomial alternative for the 0-parallel counts of the 0-2 family:
/// `(1/m) * sum_{k=0}^{m} binom(4m, k) * binom(3m-k-2, m-k-1)`, which equals
/// `f02_even(m + 1)`. The division is asserted exact. Panics for `m < 1`.
pub fn barry(m: u32) -> BigUint {
    assert!(m >= 1, "barry needs m >= 1, got {m}");
    let m64 = u64::from(m);
    let mut sum = BigUint::zero();
    for k in 0..=m64 {
        sum += binomial(4 * m64, k as i64) * binomial(3 * m64 - k - 2, m64 as i64 - k as i64 - 1);
    }
    let quotient = &sum / m;
    assert_eq!(&quotient * m, sum, "barry sum must be divisible by m");
    quotient
}

/// Variant of [`f02_even_k`] with the composition total lowered to `m - 1`.
///
/// Wrong on purpose: region-size accounting forces the total `m`, and this
/// variant disagrees with the enumeration oracle already at the hexagon
/// (`m=3, k=1` yields 1 where the oracle counts 6). Kept as a negative
/// control for the cross-validation suite.
pub fn f02_even_k_shifted_sum(m: u32, k: u32) -> BigUint {
    assert!(m >= 2, "needs half-size >= 2, got {m}");
    assert!(k >= 1, "needs k >= 1");
    let mut sum = BigUint::zero();
    for comp in compositions(m - 1, k + 1) {
        let mut term = f01_odd(comp[0]) * f01_odd(comp[1]);
        for &i in &comp[2..] {
            term *= f01_even(i + 1);
        }
        sum += term;
    }
    sum
}

/// Variant of [`f02_even_k`] whose odd-region factor uses `2^{i-1}` in place
/// of `2^{2i-1}`.
///
/// Wrong on purpose: the lowered exponent makes the factor negative for
/// `i >= 2` (hence the signed return type), and the value disagrees with the
/// enumeration oracle already at the square (`m=2, k=1` yields 0 where the
/// oracle counts 1). Kept as a negative control for the cross-validation
/// suite.
pub fn f02_even_k_low_exponent(m: u32, k: u32) -> BigInt {
    assert!(m >= 2, "needs half-size >= 2, got {m}");
    assert!(k >= 1, "needs k >= 1");
    let low_odd = |i: u32| -> BigInt {
        BigInt::from(pow2(u64::from(i) - 1) * catalan(i - 1)) - BigInt::from(catalan(2 * i - 1))
    };
    let mut sum = BigInt::zero();
    for comp in compositions(m, k + 1) {
        let mut term = low_odd(comp[0]) * low_odd(comp[1]);
        for &i in &comp[2..] {
            term *= BigInt::from(f01_even(i + 1));
        }
        sum += term;
    }
    sum
}

/// Ordered tuples of `parts` positive integers summing to `total`, in
/// lexicographic order. Empty when no such tuple exists; the single empty
/// tuple when `total == parts == 0`.
pub(crate) fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, parts_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts_left == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if remaining < parts_left {
            return;
        }
        for v in 1..=remaining - (parts_left - 1) {
            cur.push(v);
            rec(remaining - v, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::with_capacity(parts as usize), &mut out);
    out
}

/// `[z^t]` of `g^j` where `g = sum_{i>=1} C_{2i-1} z^i`; zero for `t < j`.
/// Requires `j >= 1`.
pub(crate) fn even_power_coeff(j: u32, t: u32) -> BigUint {
    assert!(j >= 1);
    if t < j {
        return BigUint::zero();
    }
    with_series(t as usize, j as usize, 0, |c| {
        c.even_pows[j as usize - 1][t as usize].clone()
    })
}

/// `[z^t]` of `o * g^k` where `o = sum_{i>=1} f01_odd(i) z^i`; zero for
/// `t < k + 1`.
pub(crate) fn odd_even_coeff(k: u32, t: u32) -> BigUint {
    if t < k + 1 {
        return BigUint::zero();
    }
    with_series(t as usize, 0, k as usize, |c| {
        c.odd_even_pows[k as usize][t as usize].clone()
    })
}

/// `[z^t]` of `o^2 * g^k`; zero for `t < k + 2`.
pub(crate) fn odd2_even_coeff(k: u32, t: u32) -> BigUint {
    if t < k + 2 {
        return BigUint::zero();
    }
    with_series(t as usize, 0, k as usize, |c| {
        c.odd2_even_pows[k as usize][t as usize].clone()
    })
}

/// Truncated series products shared across the process. Coefficients above
/// the truncation degree are never stored, so a degree increase rebuilds the
/// power tables from scratch; power-index growth at a fixed degree extends
/// them incrementally.
struct SeriesCache {
    deg: usize,
    g: Vec<BigUint>,
    o: Vec<BigUint>,
    even_pows: Vec<Vec<BigUint>>,      // even_pows[j] = g^{j+1}
    odd_even_pows: Vec<Vec<BigUint>>,  // odd_even_pows[k] = o * g^k
    odd2_even_pows: Vec<Vec<BigUint>>, // odd2_even_pows[k] = o^2 * g^k
}

impl SeriesCache {
    fn new() -> Self {
        SeriesCache {
            deg: 0,
            g: vec![BigUint::zero()],
            o: vec![BigUint::zero()],
            even_pows: Vec::new(),
            odd_even_pows: Vec::new(),
            odd2_even_pows: Vec::new(),
        }
    }

    fn ensure(&mut self, deg: usize, pow_g: usize, pow_k: usize) {
        if deg > self.deg {
            self.deg = deg;
            self.g = base_series(deg, |i| catalan(2 * i - 1));
            self.o = base_series(deg, f01_odd);
            let keep = (
                self.even_pows.len(),
                self.odd_even_pows.len(),
                self.odd2_even_pows.len(),
            );
            self.even_pows.clear();
            self.odd_even_pows.clear();
            self.odd2_even_pows.clear();
            self.grow(keep.0.max(pow_g), keep.1.max(pow_k + 1), keep.2.max(pow_k + 1));
        } else {
            self.grow(pow_g, pow_k + 1, pow_k + 1);
        }
    }

    fn grow(&mut self, even_len: usize, odd_len: usize, odd2_len: usize) {
        while self.even_pows.len() < even_len {
            let next = match self.even_pows.last() {
                None => self.g.clone(),
                Some(prev) => conv(prev, &self.g, self.deg),
            };
            self.even_pows.push(next);
        }
        while self.odd_even_pows.len() < odd_len {
            let next = match self.odd_even_pows.last() {
                None => self.o.clone(),
                Some(prev) => conv(prev, &self.g, self.deg),
            };
            self.odd_even_pows.push(next);
        }
        while self.odd2_even_pows.len() < odd2_len {
            let next = match self.odd2_even_pows.last() {
                None => conv(&self.o, &self.o, self.deg),
                Some(prev) => conv(prev, &self.g, self.deg),
            };
            self.odd2_even_pows.push(next);
        }
    }
}

fn base_series(deg: usize, coeff: impl Fn(u32) -> BigUint) -> Vec<BigUint> {
    let mut series = Vec::with_capacity(deg + 1);
    series.push(BigUint::zero());
    for i in 1..=deg as u32 {
        series.push(coeff(i));
    }
    series
}

fn conv(a: &[BigUint], b: &[BigUint], deg: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate().take(deg + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(deg + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

static CACHE: OnceLock<RwLock<SeriesCache>> = OnceLock::new();

fn with_series<T>(deg: usize, pow_g: usize, pow_k: usize, read: impl FnOnce(&SeriesCache) -> T) -> T {
    let lock = CACHE.get_or_init(|| RwLock::new(SeriesCache::new()));
    {
        let cache = lock.read().unwrap();
        if cache.deg >= deg
            && cache.even_pows.len() >= pow_g
            && cache.odd_even_pows.len() > pow_k
            && cache.odd2_even_pows.len() > pow_k
        {
            return read(&cache);
        }
    }
    let mut cache = lock.write().unwrap();
    cache.ensure(deg, pow_g, pow_k);
    read(&cache)
}
