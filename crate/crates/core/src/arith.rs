//! Small integer helpers. Decorations are machine integers; every product
//! that can grow goes through `mul`, which reports overflow instead of wrapping.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// gcd of a list; gcd of the empty list is 0.
pub fn gcd_all<I: IntoIterator<Item = i64>>(it: I) -> i64 {
    it.into_iter().fold(0, gcd)
}

pub fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or_else(|| Error::compute(format!("integer overflow in {a}*{b}")))
}

pub fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or_else(|| Error::compute(format!("integer overflow in {a}+{b}")))
}

/// Exact division, failing when `d` does not divide `n`.
pub fn div_exact(n: i64, d: i64) -> Result<i64> {
    if d == 0 || n % d != 0 {
        return Err(Error::compute(format!("{n} is not divisible by {d}")));
    }
    Ok(n / d)
}

/// Inverse of `a` modulo `m` (m >= 1). `None` if not invertible.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a.rem_euclid(m)).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

pub fn divisors(k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            out.push(d);
            if d * d != k {
                out.push(k / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut res = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            res -= res / p;
        }
        p += 1;
    }
    if n > 1 {
        res -= res / n;
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(gcd_all([12, 18, 8]), 2);
        assert_eq!(gcd_all([]), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert!(mul(i64::MAX, 2).is_err());
        assert!(div_exact(7, 2).is_err());
    }
}
