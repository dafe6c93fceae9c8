//! Hirzebruch–Jung continued fractions and decorated strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{self, gcd};
use crate::error::{Error, Result};
use crate::graph::{PlumbGraph, Sign};

/// Parameters of the string of x^a y^b + z^c decorated by the monomial x^i y^j z^k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HJSpec {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl HJSpec {
    pub fn new(a: i64, b: i64, c: i64, i: i64, j: i64, k: i64) -> Self {
        HJSpec { a, b, c, i, j, k }
    }
}

/// Multiplicities along a string: left arrow, interior vertices, right arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultSystem {
    pub left: i64,
    pub inner: Vec<i64>,
    pub right: i64,
}

impl MultSystem {
    fn combine(parts: &[(i64, &MultSystem)]) -> Result<MultSystem> {
        let lin = |f: &dyn Fn(&MultSystem) -> i64| -> Result<i64> {
            parts.iter().try_fold(0i64, |acc, (c, s)| arith::add(acc, arith::mul(*c, f(s))?))
        };
        let n = parts[0].1.inner.len();
        let mut inner = Vec::with_capacity(n);
        for t in 0..n {
            inner.push(lin(&|s: &MultSystem| s.inner[t])?);
        }
        Ok(MultSystem { left: lin(&|s| s.left)?, inner, right: lin(&|s| s.right)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// No interior vertices: a single edge between the two ends.
    Degenerate,
    /// Interior vertices with continued-fraction entries k_1..k_s.
    Chain(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HJString {
    pub spec: HJSpec,
    pub lambda: i64,
    pub m1: i64,
    pub shape: Shape,
    pub z: MultSystem,
    pub x: MultSystem,
    pub y: MultSystem,
    pub combined: MultSystem,
    pub sign: Sign,
}

impl HJString {
    pub fn is_degenerate(&self) -> bool {
        matches!(self.shape, Shape::Degenerate)
    }

    pub fn entries(&self) -> &[i64] {
        match &self.shape {
            Shape::Degenerate => &[],
            Shape::Chain(v) => v,
        }
    }

    /// The string as a plumbing chain between two arrows carrying `system`.
    /// Euler numbers are −k_i for + strings and +k_i for ⊖ strings.
    pub fn chain_graph(&self, system: &MultSystem) -> PlumbGraph {
        let mut g = PlumbGraph::new();
        let s = self.sign.value();
        let left = g.add_arrow("L", Some(system.left));
        let mut prev = left;
        for (t, k) in self.entries().iter().enumerate() {
            let v = g.add_vertex(format!("s{}", t + 1), Some(-s * k), 0, Some(system.inner[t]));
            g.add_edge(prev, v, self.sign);
            prev = v;
        }
        let right = g.add_arrow("R", Some(system.right));
        g.add_edge(prev, right, self.sign);
        g
    }
}

/// p/q = k_1 − 1/(k_2 − ⋯ − 1/k_s) with every k_i ≥ 2.
pub fn minus_cf(p: i64, q: i64) -> Result<Vec<i64>> {
    if q <= 0 || q >= p {
        return Err(Error::pre(format!("minus_cf needs 0 < q < p, got {p}/{q}")));
    }
    let d = gcd(p, q);
    let (mut p, mut q) = (p / d, q / d);
    let mut out = Vec::new();
    while q != 0 {
        let k = (p + q - 1) / q;
        out.push(k);
        let r = k * q - p;
        p = q;
        q = r;
    }
    Ok(out)
}

/// Evaluates k_1 − 1/(k_2 − ⋯ − 1/k_s) exactly.
pub fn cf_value(entries: &[i64]) -> Result<BigRational> {
    if entries.is_empty() {
        return Err(Error::pre("empty continued fraction"));
    }
    if let Some(k) = entries.iter().find(|&&k| k < 1) {
        return Err(Error::pre(format!("continued fraction entry {k} < 1")));
    }
    let mut v = BigRational::from_integer(BigInt::from(*entries.last().unwrap()));
    for &k in entries[..entries.len() - 1].iter().rev() {
        if v.is_zero() {
            return Err(Error::compute("zero denominator in continued fraction"));
        }
        v = BigRational::from_integer(BigInt::from(k)) - v.recip();
    }
    Ok(v)
}

/// Returns (λ, m₁): λ ∈ [0, c/(a,c)) with b + λ·a/(a,c) ≡ 0 mod c/(a,c), m₁ = (b + λ·a/(a,c))/(c/(a,c)).
pub fn hj_lambda(a: i64, b: i64, c: i64) -> Result<(i64, i64)> {
    if c < 1 || a < 0 || b < 0 {
        return Err(Error::pre(format!("string parameters out of range: a={a}, b={b}, c={c}")));
    }
    let g = gcd(a, c);
    let (a1, c1) = (a / g, c / g);
    if c1 == 1 {
        return Ok((0, b));
    }
    let inv = arith::inv_mod(a1, c1)
        .ok_or_else(|| Error::compute(format!("no solution for the string congruence with a={a}, c={c}")))?;
    let lambda = ((-(b % c1)).rem_euclid(c1) as i128 * inv as i128 % c1 as i128) as i64;
    let num = arith::add(b, arith::mul(lambda, a1)?)?;
    Ok((lambda, arith::div_exact(num, c1)?))
}

fn recurse(m0: i64, m1: i64, entries: &[i64]) -> Result<Vec<i64>> {
    // returns m_0, m_1, …, m_{s+1}
    let mut m = vec![m0, m1];
    for (t, &k) in entries.iter().enumerate() {
        let next = arith::mul(k, m[t + 1])? - m[t];
        m.push(next);
    }
    Ok(m)
}

fn system_from(m: &[i64]) -> MultSystem {
    MultSystem { left: m[0], inner: m[1..m.len() - 1].to_vec(), right: m[m.len() - 1] }
}

/// Builds Str(a,b;c|i,j;k) (sign +) or Str⊖ (sign −).
pub fn str_string(spec: HJSpec, sign: Sign) -> Result<HJString> {
    let HJSpec { a, b, c, i, j, k } = spec;
    if i < 0 || j < 0 || k < 0 {
        return Err(Error::pre("string exponents must be non-negative"));
    }
    let (lambda, m1) = hj_lambda(a, b, c)?;
    let ac = gcd(a, c);
    let bc = gcd(b, c);
    let (a1, c1) = (a / ac, c / ac);
    let (z, x, y, shape) = if lambda == 0 {
        (
            MultSystem { left: a1, inner: vec![], right: b / bc },
            MultSystem { left: c1, inner: vec![], right: 0 },
            MultSystem { left: 0, inner: vec![], right: c / bc },
            Shape::Degenerate,
        )
    } else {
        let g2 = gcd(lambda, c1);
        let entries = minus_cf(c1 / g2, lambda / g2)?;
        let zm = recurse(a1, m1, &entries)?;
        if *zm.last().unwrap() != b / bc {
            return Err(Error::compute(format!("z-recursion of string {spec:?} does not close")));
        }
        let xm = recurse(c1, lambda, &entries)?;
        if *xm.last().unwrap() != 0 {
            return Err(Error::compute(format!("x-recursion of string {spec:?} does not close")));
        }
        let ym = recurse(0, ac, &entries)?;
        let cb = c / bc;
        if *ym.last().unwrap() != cb {
            return Err(Error::compute(format!("y-recursion of string {spec:?} does not close")));
        }
        // λ̃ from its own congruence, cross-checked against the recursion
        let s = entries.len();
        let lt = match arith::inv_mod(b / bc, cb) {
            Some(inv) => ((-(a % cb)).rem_euclid(cb) as i128 * inv as i128 % cb as i128) as i64,
            None => return Err(Error::compute("no solution for the y-side congruence")),
        };
        if ym[s] != lt || arith::add(a, arith::mul(lt, b / bc)?)? != arith::mul(zm[s], cb)? {
            return Err(Error::compute(format!("y-side seed mismatch for string {spec:?}")));
        }
        (system_from(&zm), system_from(&xm), system_from(&ym), Shape::Chain(entries))
    };
    let combined = MultSystem::combine(&[(i, &x), (j, &y), (k, &z)])?;
    Ok(HJString { spec, lambda, m1, shape, z, x, y, combined, sign })
}

/// true iff the value of `entries` equals p/q.
pub fn cf_equals(entries: &[i64], p: i64, q: i64) -> bool {
    match cf_value(entries) {
        Ok(v) => v == BigRational::new(BigInt::from(p), BigInt::from(q)),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cf_examples() {
        assert_eq!(minus_cf(7, 5).unwrap(), vec![2, 2, 3]);
        assert_eq!(minus_cf(2, 1).unwrap(), vec![2]);
        assert_eq!(minus_cf(6, 4).unwrap(), vec![2, 2]);
        assert!(minus_cf(3, 3).is_err());
        assert!(minus_cf(3, 0).is_err());
        assert!(cf_equals(&[2, 2, 3], 7, 5));
        assert!(cf_equals(&[3], 3, 1));
        assert!(cf_equals(&[2, 4], 7, 4));
        assert!(cf_value(&[1, 1, 1]).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(hj_lambda(1, 3, 6).unwrap(), (3, 1));
        assert_eq!(hj_lambda(2, 3, 6).unwrap(), (0, 1));
        assert_eq!(hj_lambda(1, 1, 2).unwrap(), (1, 1));
    }

    #[test]
    fn strings_from_examples() {
        let s = str_string(HJSpec::new(1, 2, 6, 0, 0, 1), Sign::Minus).unwrap();
        assert_eq!(s.entries(), &[2, 2]);
        assert_eq!(s.combined.inner, vec![1, 1]);
        let d = str_string(HJSpec::new(0, 2, 1, 1, 1, 0), Sign::Plus).unwrap();
        assert!(d.is_degenerate());
        let one = str_string(HJSpec::new(1, 3, 6, 0, 0, 1), Sign::Minus).unwrap();
        assert_eq!(one.entries(), &[2]);
        assert_eq!(one.combined.inner, vec![1]);
    }

    #[test]
    fn non_coprime_seed_is_reduced() {
        // gcd(λ, c/(a,c)) = (b,c) = 2 here
        let s = str_string(HJSpec::new(7, 14, 4, 0, 0, 1), Sign::Plus).unwrap();
        assert_eq!(s.lambda, 2);
        assert_eq!(s.entries(), &[2]);
        assert_eq!(s.z.inner, vec![7]);
        assert_eq!(s.x.inner, vec![2]);
        assert_eq!(s.y.inner, vec![1]);
    }
}
