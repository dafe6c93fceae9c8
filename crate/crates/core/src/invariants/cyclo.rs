//! Products of cyclotomic polynomials, stored as exponent maps d ↦ e_d.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divisors, euler_phi};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloPoly {
    exps: BTreeMap<u64, i64>,
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut p, mut mu) = (n, 2u64, 1i64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

impl CycloPoly {
    pub fn one() -> Self {
        CycloPoly::default()
    }

    /// Φ_d^e.
    pub fn phi(d: u64, e: i64) -> Self {
        let mut p = CycloPoly::one();
        p.add_exp(d, e);
        p
    }

    /// (t^k − 1)^e.
    pub fn tk(k: u64, e: i64) -> Self {
        let mut p = CycloPoly::one();
        p.mul_tk(k, e);
        p
    }

    fn add_exp(&mut self, d: u64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&d);
        }
    }

    pub fn mul_tk(&mut self, k: u64, e: i64) {
        assert!(k >= 1, "t^0 - 1 is not a cyclotomic product");
        for d in divisors(k) {
            self.add_exp(d, e);
        }
    }

    pub fn mul(&self, other: &CycloPoly) -> CycloPoly {
        let mut out = self.clone();
        for (&d, &e) in &other.exps {
            out.add_exp(d, e);
        }
        out
    }

    pub fn div(&self, other: &CycloPoly) -> CycloPoly {
        self.mul(&other.pow(-1))
    }

    pub fn pow(&self, k: i64) -> CycloPoly {
        CycloPoly { exps: self.exps.iter().filter(|_| k != 0).map(|(&d, &e)| (d, e * k)).collect() }
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.exps.get(&d).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exps
    }

    /// Multiplicity of the root 1.
    pub fn mult_at_one(&self) -> i64 {
        self.exponent(1)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|(&d, &e)| e * euler_phi(d) as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }

    /// Exponents a_k with ∏ (t^k − 1)^{a_k} equal to self (Möbius inversion).
    pub fn tk_form(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        let top = self.exps.keys().copied().max().unwrap_or(0);
        for k in 1..=top {
            let a: i64 = self
                .exps
                .iter()
                .filter(|(&d, _)| d % k == 0)
                .map(|(&d, &e)| mobius(d / k) * e)
                .sum();
            if a != 0 {
                out.insert(k, a);
            }
        }
        out
    }

    /// Coefficients c_0..c_deg of the expanded polynomial.
    pub fn expand(&self) -> Result<Vec<BigInt>> {
        if !self.is_polynomial() {
            return Err(Error::compute(format!("cannot expand {self}: negative exponent")));
        }
        let mut num = vec![BigInt::one()];
        let mut den = vec![BigInt::one()];
        for (k, a) in self.tk_form() {
            let target = if a > 0 { &mut num } else { &mut den };
            for _ in 0..a.abs() {
                *target = mul_tk_poly(target, k as usize);
            }
        }
        divide_exact(&num, &den)
    }
}

fn mul_tk_poly(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + k];
    for (i, c) in p.iter().enumerate() {
        out[i + k] += c;
        out[i] -= c;
    }
    out
}

/// Long division by a polynomial with leading coefficient ±1.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let dl = den.len() - 1;
    let lead = &den[dl];
    if num.len() < den.len() {
        return Err(Error::compute("cyclotomic quotient is not a polynomial"));
    }
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dl];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dl] * lead; // lead is ±1, so this is the quotient
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::compute("cyclotomic quotient is not a polynomial"));
    }
    Ok(q)
}

fn factor(k: u64, a: i64, out: &mut Vec<String>) {
    let base = if k == 1 { "(t-1)".to_string() } else { format!("(t^{k}-1)") };
    out.push(if a == 1 { base } else { format!("{base}^{a}") });
}

/// Renders as a ratio of (t^k − 1) powers, e.g. "(t^10-1)^2 (t-1) / (t^5-1)^2".
impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let form = self.tk_form();
        let (mut num, mut den) = (Vec::new(), Vec::new());
        for (&k, &a) in form.iter().rev() {
            if a > 0 {
                factor(k, a, &mut num);
            } else {
                factor(k, -a, &mut den);
            }
        }
        let num = if num.is_empty() { "1".to_string() } else { num.join(" ") };
        match den.len() {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num} / {}", den[0]),
            _ => write!(f, "{num} / ({})", den.join(" ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_expansions() {
        assert_eq!(CycloPoly::tk(1, 1).expand().unwrap(), ints(&[-1, 1]));
        assert_eq!(CycloPoly::tk(3, 1).div(&CycloPoly::tk(1, 1)).expand().unwrap(), ints(&[1, 1, 1]));
        assert!(CycloPoly::tk(1, -1).expand().is_err());
    }

    #[test]
    fn display_and_degree() {
        let p = CycloPoly::tk(3, 4).mul(&CycloPoly::tk(1, 7));
        assert_eq!(p.to_string(), "(t^3-1)^4 (t-1)^7");
        assert_eq!(p.degree(), 19);
        assert_eq!(p.mult_at_one(), 11);
        let q = CycloPoly::tk(10, 2).mul(&CycloPoly::tk(1, 1)).div(&CycloPoly::tk(5, 2));
        assert_eq!(q.to_string(), "(t^10-1)^2 (t-1) / (t^5-1)^2");
        assert_eq!(q.degree(), 11);
        assert_eq!(CycloPoly::one().to_string(), "1");
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
