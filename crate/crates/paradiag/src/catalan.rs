//! Exact Catalan numbers over big integers, plus the binomial and
//! power-of-two helpers the rest of the crate leans on.
//!
//! Values are memoized in a process-wide table; every division performed
//! anywhere in this module is asserted to be exact.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();

fn table() -> &'static RwLock<Vec<BigUint>> {
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// Runs `f` over the first `len` Catalan numbers, growing the shared table
/// first if it is still too short. Readers never block each other.
fn with_prefix<R>(len: usize, f: impl FnOnce(&[BigUint]) -> R) -> R {
    let lock = table();
    {
        let guard = lock.read().unwrap();
        if guard.len() >= len {
            return f(&guard[..len]);
        }
    }
    let mut guard = lock.write().unwrap();
    while guard.len() < len {
        let i = guard.len() as u64 - 1;
        let num = guard.last().unwrap() * (2 * (2 * i + 1));
        let den = BigUint::from(i + 2);
        let rem = &num % &den;
        assert!(rem.is_zero(), "C_{} ratio step must divide exactly", i + 1);
        guard.push(num / den);
    }
    f(&guard[..len])
}

/// The n-th Catalan number, `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigUint {
    with_prefix(n as usize + 1, |t| t[n as usize].clone())
}

/// `[C_0, C_1, ..., C_n]`.
pub fn catalan_table(n_max: u32) -> Vec<BigUint> {
    with_prefix(n_max as usize + 1, |t| t.to_vec())
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

pub fn pow4(e: u64) -> BigUint {
    BigUint::one() << (2 * e)
}

/// `binom(n, k)`, with the usual convention that out-of-range `k` gives 0.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        let den = BigUint::from(i + 1);
        let rem = &acc % &den;
        assert!(rem.is_zero(), "partial binomial products are integers");
        acc /= den;
    }
    acc
}
