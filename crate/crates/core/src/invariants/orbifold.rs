//! Orbifold Euler number of a star-shaped plumbing graph.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::PlumbGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldEuler {
    pub e: BigRational,
    pub centre: usize,
    /// Euler numbers of each leg, read from the centre outward.
    pub legs: Vec<Vec<i64>>,
}

impl OrbifoldEuler {
    pub fn negative_definite(&self) -> bool {
        self.e.is_negative()
    }
}

/// 1 / [c₁ − 1/(c₂ − …)]
fn leg_term(leg: &[i64]) -> Result<BigRational> {
    let mut x: Option<BigRational> = None;
    for &c in leg.iter().rev() {
        let c = BigRational::from_integer(BigInt::from(c));
        x = Some(match x {
            None => c,
            Some(t) if t.is_zero() => return Err(Error::compute("zero denominator along a leg")),
            Some(t) => c - t.recip(),
        });
    }
    match x {
        Some(t) if t.is_zero() => Err(Error::compute("zero denominator along a leg")),
        Some(t) => Ok(t.recip()),
        None => Ok(BigRational::zero()),
    }
}

/// e = e₀ − Σ_legs 1/[c₁ − 1/(c₂ − …)].
///
/// On a tree every ⊖-edge can be cleared by R0a without touching Euler
/// numbers, so signs are ignored here.
pub fn orbifold_euler(g: &PlumbGraph) -> Result<OrbifoldEuler> {
    let not_star = |why: &str| Error::pre(format!("not star-shaped: {why}"));
    if g.arrows().next().is_some() || g.n_dash() > 0 {
        return Err(not_star("arrows present"));
    }
    let verts: Vec<usize> = g.vertices().collect();
    if verts.is_empty() {
        return Err(not_star("empty graph"));
    }
    if !g.is_connected() || g.edges.len() + 1 != verts.len() || g.edges.iter().any(|e| e.is_loop()) {
        return Err(not_star("not a tree"));
    }
    let hubs: Vec<usize> = verts.iter().copied().filter(|&v| g.delta(v) >= 3).collect();
    let centre = match hubs.as_slice() {
        [] => verts[0],
        [c] => *c,
        _ => return Err(not_star("more than one node of degree ≥ 3")),
    };
    let euler = |v: usize| g.euler(v).ok_or_else(|| Error::pre(format!("missing euler number on {}", g.nodes[v].id)));
    let mut legs = Vec::new();
    let mut e = BigRational::from_integer(BigInt::from(euler(centre)?));
    for k in g.incident(centre) {
        let (mut prev, mut cur) = (centre, g.edges[k].other(centre));
        let mut leg = Vec::new();
        loop {
            if g.genus(cur) != 0 {
                return Err(not_star("leg vertex of positive genus"));
            }
            leg.push(euler(cur)?);
            let next: Vec<usize> = g
                .incident(cur)
                .into_iter()
                .map(|k| g.edges[k].other(cur))
                .filter(|&u| u != prev)
                .collect();
            match next.as_slice() {
                [] => break,
                [u] => (prev, cur) = (cur, *u),
                _ => return Err(not_star("branching leg")),
            }
        }
        e -= leg_term(&leg)?;
        legs.push(leg);
    }
    Ok(OrbifoldEuler { e, centre, legs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn star(centre: i64, legs: &[&[i64]]) -> PlumbGraph {
        let mut g = PlumbGraph::new();
        let c = g.add_vertex("c", Some(centre), 0, None);
        for (i, leg) in legs.iter().enumerate() {
            let mut prev = c;
            for (k, &x) in leg.iter().enumerate() {
                let v = g.add_vertex(format!("l{i}.{k}"), Some(x), 0, None);
                g.add_edge(prev, v, Sign::Plus);
                prev = v;
            }
        }
        g
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn e8() {
        let g = star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]]);
        let o = orbifold_euler(&g).unwrap();
        assert_eq!(o.e, q(-1, 30));
        assert!(o.negative_definite());
    }

    #[test]
    fn single_vertex() {
        assert_eq!(orbifold_euler(&star(-3, &[])).unwrap().e, q(-3, 1));
    }

    #[test]
    fn zero_denominator() {
        assert!(orbifold_euler(&star(-2, &[&[0]])).is_err());
        assert!(orbifold_euler(&star(-2, &[&[1, 1]])).is_err());
    }
}
