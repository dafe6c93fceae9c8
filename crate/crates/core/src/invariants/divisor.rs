//! Divisors on pairs of roots of unity: Λ(m;n,ν), Ξ^(d), Ω^(d) and projections.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{euler_phi, gcd};
use crate::error::{Error, Result};

use super::cyclo::CycloPoly;

/// e^{2πi p/q}, stored reduced with 0 ≤ p < q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    pub p: u64,
    pub q: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { p: 0, q: 1 };

    /// The root e^{2πi num/den} for any integer num and den ≥ 1.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den >= 1, "root of unity needs a positive denominator");
        let p = num.rem_euclid(den);
        let g = gcd(p, den);
        RootOfUnity { p: (p / g) as u64, q: (den / g) as u64 }
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn pow(&self, k: i64) -> Self {
        RootOfUnity::new((self.p as i128 * k as i128).rem_euclid(self.q as i128) as i64, self.q as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "1")
        } else {
            write!(f, "e({}/{})", self.p, self.q)
        }
    }
}

/// Finite formal sum of pairs (λ, ξ).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiDivisor {
    terms: BTreeMap<(RootOfUnity, RootOfUnity), i64>,
}

impl BiDivisor {
    pub fn zero() -> Self {
        BiDivisor::default()
    }

    pub fn unit(l: RootOfUnity, x: RootOfUnity) -> Self {
        let mut d = BiDivisor::zero();
        d.add_term(l, x, 1);
        d
    }

    /// (1,1)
    pub fn one_one() -> Self {
        BiDivisor::unit(RootOfUnity::ONE, RootOfUnity::ONE)
    }

    pub fn add_term(&mut self, l: RootOfUnity, x: RootOfUnity, k: i64) {
        if k == 0 {
            return;
        }
        let slot = self.terms.entry((l, x)).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.terms.remove(&(l, x));
        }
    }

    pub fn add(&self, other: &BiDivisor) -> BiDivisor {
        self.add_scaled(other, 1)
    }

    pub fn add_scaled(&self, other: &BiDivisor, k: i64) -> BiDivisor {
        let mut out = self.clone();
        for (&(l, x), &c) in &other.terms {
            out.add_term(l, x, c * k);
        }
        out
    }

    pub fn scale(&self, k: i64) -> BiDivisor {
        BiDivisor::zero().add_scaled(self, k)
    }

    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (RootOfUnity, RootOfUnity, i64)> + '_ {
        self.terms.iter().map(|(&(l, x), &k)| (l, x, k))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&k| k >= 0)
    }

    pub fn mult(&self, l: RootOfUnity, x: RootOfUnity) -> i64 {
        self.terms.get(&(l, x)).copied().unwrap_or(0)
    }

    /// Part sitting over ξ = 1.
    pub fn ver_one_part(&self) -> BiDivisor {
        let mut out = BiDivisor::zero();
        for (l, x, k) in self.terms() {
            if x == RootOfUnity::ONE {
                out.add_term(l, x, k);
            }
        }
        out
    }

    pub fn hor_charpoly(&self) -> Result<CycloPoly> {
        project(self.terms().map(|(l, _, k)| (l, k)))
    }

    pub fn ver_charpoly(&self) -> Result<CycloPoly> {
        project(self.terms().map(|(_, x, k)| (x, k)))
    }
}

impl fmt::Display for BiDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(l, x, k)| if k == 1 { format!("({l},{x})") } else { format!("{k}({l},{x})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Collects a multiset of roots into a cyclotomic product; fails unless every
/// primitive root of a given order occurs equally often.
fn project(it: impl Iterator<Item = (RootOfUnity, i64)>) -> Result<CycloPoly> {
    let mut by_root: BTreeMap<RootOfUnity, i64> = BTreeMap::new();
    for (r, k) in it {
        *by_root.entry(r).or_insert(0) += k;
    }
    let mut by_order: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    for (r, k) in by_root {
        if k != 0 {
            by_order.entry(r.q).or_default().push(k);
        }
    }
    let mut out = CycloPoly::one();
    for (q, ks) in by_order {
        if ks.len() as u64 != euler_phi(q) || ks.iter().any(|&k| k != ks[0]) {
            return Err(Error::compute(format!("roots of order {q} are not Galois-stable in the divisor")));
        }
        out = out.mul(&CycloPoly::phi(q, ks[0]));
    }
    Ok(out)
}

/// Λ(m;n,ν): all pairs with λ^m = 1 and λ^n ξ^ν = 1, each once.
pub fn lambda_div(m: i64, n: i64, nu: i64) -> Result<BiDivisor> {
    if m < 1 || nu < 1 || n < 0 {
        return Err(Error::pre(format!("Λ({m};{n},{nu}) needs m, ν ≥ 1 and n ≥ 0")));
    }
    let mut d = BiDivisor::zero();
    for p in 0..m {
        // ξ = e((−n·p/m + k)/ν) = e((k·m − n·p)/(m·ν))
        for k in 0..nu {
            let num = (k as i128 * m as i128 - n as i128 * p as i128).rem_euclid((m * nu) as i128) as i64;
            d.add_term(RootOfUnity::new(p, m), RootOfUnity::new(num, m * nu), 1);
        }
    }
    Ok(d)
}

/// Ξ^(d): (λ,ξ) ↦ Σ_{α^d=ξ} (λ,α).
pub fn xi_d(div: &BiDivisor, d: i64) -> Result<BiDivisor> {
    if d < 1 {
        return Err(Error::pre("Ξ^(d) needs d ≥ 1"));
    }
    let mut out = BiDivisor::zero();
    for (l, x, k) in div.terms() {
        let q = x.q as i64 * d;
        for s in 0..d {
            out.add_term(l, RootOfUnity::new(x.p as i64 + s * x.q as i64, q), k);
        }
    }
    Ok(out)
}

/// Ω^(d): (λ,ξ) ↦ (λ,ξ^d).
pub fn omega_d(div: &BiDivisor, d: i64) -> Result<BiDivisor> {
    if d < 1 {
        return Err(Error::pre("Ω^(d) needs d ≥ 1"));
    }
    let mut out = BiDivisor::zero();
    for (l, x, k) in div.terms() {
        out.add_term(l, x.pow(d), k);
    }
    Ok(out)
}

/// Σ_{ξ^d=1} (1,ξ)
pub fn vertical_cycle(d: i64) -> BiDivisor {
    let mut out = BiDivisor::zero();
    for k in 0..d {
        out.add_term(RootOfUnity::ONE, RootOfUnity::new(k, d), 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> RootOfUnity {
        RootOfUnity::new(p, q)
    }

    #[test]
    fn lambda_with_nu_one() {
        let d = lambda_div(4, 3, 1).unwrap();
        for p in 0..4 {
            assert_eq!(d.mult(r(p, 4), r(-3 * p, 4)), 1);
        }
        assert_eq!(d.total(), 4);
    }

    #[test]
    fn lambda_222() {
        let d = lambda_div(2, 2, 2).unwrap();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(d.mult(r(a, 2), r(b, 2)), 1);
        }
        assert_eq!(d.total(), 4);
    }

    #[test]
    fn xi_of_one() {
        let d = xi_d(&BiDivisor::one_one(), 2).unwrap();
        assert_eq!(d, BiDivisor::one_one().add(&BiDivisor::unit(RootOfUnity::ONE, r(1, 2))));
        assert_eq!(xi_d(&d, 1).unwrap(), d);
    }

    #[test]
    fn projections() {
        let d = lambda_div(6, 4, 3).unwrap();
        assert_eq!(d.hor_charpoly().unwrap(), CycloPoly::tk(6, 3));
        assert_eq!(d.ver_charpoly().unwrap(), CycloPoly::tk(9, 2));
    }
}
