//! Normal forms outside the reduced move set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::graph::{PlumbGraph, Sign};
use crate::hj::minus_cf;

/// The closed 3-manifold of a graph: arrowheads deleted, multiplicities dropped.
pub fn closed(g: &PlumbGraph) -> PlumbGraph {
    let mut out = g.strip_arrows();
    out.clear_mults();
    out
}

/// Vertices of a linear genus-0 graph without arrows, in path order.
fn path_order(g: &PlumbGraph) -> Option<Vec<usize>> {
    if g.arrows().next().is_some() || g.n_dash() > 0 || g.nodes.is_empty() {
        return None;
    }
    let n = g.nodes.len();
    if g.edges.len() + 1 != n || !g.is_connected() || g.edges.iter().any(|e| e.is_loop()) {
        return None;
    }
    if (0..n).any(|v| g.genus(v) != 0 || g.delta(v) > 2 || g.euler(v).is_none()) {
        return None;
    }
    let start = (0..n).find(|&v| g.delta(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.incident(cur).into_iter().map(|k| g.edges[k].other(cur)).find(|&u| u != prev) {
        order.push(next);
        (prev, cur) = (cur, next);
    }
    Some(order)
}

/// Lens-space normal form of a linear graph: the chain −k₁, …, −k_s with
/// p/q = [k₁, …, k_s], every k_i ≥ 2 (S²×S¹ as a single 0-vertex, S³ as a
/// single −1-vertex). Edge signs on a tree are immaterial. None when the
/// graph is not a chain or a continued fraction hits a zero denominator.
pub fn chain_normal_form(g: &PlumbGraph) -> Option<PlumbGraph> {
    let order = path_order(g)?;
    let mut x: Option<BigRational> = None;
    for &v in order.iter().rev() {
        let e = BigRational::from_integer(BigInt::from(g.euler(v)?));
        x = Some(match x {
            None => e,
            Some(t) if t.is_zero() => return None,
            Some(t) => e - t.recip(),
        });
    }
    let x = x?;
    let mut out = PlumbGraph::new();
    if x.is_zero() {
        out.add_vertex("v0", Some(0), 0, None);
        return Some(out);
    }
    let p = x.numer().abs();
    let den = x.denom().clone();
    // x < 0: L(p, den); x > 0: the orientation-reversed L(p, −den)
    let q = if x.is_negative() { den.mod_floor(&p) } else { (-den).mod_floor(&p) };
    let (p, q) = (p.to_i64()?, q.to_i64()?);
    let ks = if p == 1 { vec![1] } else { minus_cf(p, q).ok()? };
    let mut prev = None;
    for (i, k) in ks.into_iter().enumerate() {
        let v = out.add_vertex(format!("v{i}"), Some(-k), 0, None);
        if let Some(u) = prev {
            out.add_edge(u, v, Sign::Plus);
        }
        prev = Some(v);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(eulers: &[i64]) -> PlumbGraph {
        let mut g = PlumbGraph::new();
        for (k, &e) in eulers.iter().enumerate() {
            g.add_vertex(format!("v{k}"), Some(e), 0, None);
            if k > 0 {
                g.add_edge(k - 1, k, Sign::Minus);
            }
        }
        g
    }

    fn eulers(g: &PlumbGraph) -> Vec<i64> {
        g.vertices().map(|v| g.euler(v).unwrap()).collect()
    }

    #[test]
    fn dual_chains() {
        let n = chain_normal_form(&chain(&[3, 2, 2, 2, 2, 2, 3])).unwrap();
        assert_eq!(eulers(&n), vec![-2, -8, -2]);
        let n = chain_normal_form(&chain(&[-2, -8, -2])).unwrap();
        assert_eq!(eulers(&n), vec![-2, -8, -2]);
        assert_eq!(eulers(&chain_normal_form(&chain(&[-4])).unwrap()), vec![-4]);
        assert_eq!(eulers(&chain_normal_form(&chain(&[0])).unwrap()), vec![0]);
    }
}
