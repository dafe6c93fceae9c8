//! Exact isomorphism of small decorated plumbing graphs.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::{PlumbGraph, Sign};

use super::signature::invariant_signature;

/// Largest node count (vertices plus arrowheads) for which isomorphism is searched.
pub const ISO_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Isomorphic,
    /// Invariant signatures agree; no isomorphism was found or the graphs are too large to search.
    SignatureEqual,
    Different,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Label {
    arrow: bool,
    euler: Option<i64>,
    genus: i64,
    dashes: usize,
    mult: Option<i64>,
}

fn labels(g: &PlumbGraph, with_mults: bool) -> Vec<Label> {
    (0..g.nodes.len())
        .map(|v| Label {
            arrow: g.is_arrow(v),
            euler: g.euler(v),
            genus: g.genus(v),
            dashes: g.dash_count(v),
            mult: if with_mults { g.mult(v) } else { None },
        })
        .collect()
}

type EdgeCount = HashMap<(usize, usize, Sign), usize>;

fn edge_counts(g: &PlumbGraph) -> EdgeCount {
    let mut m = HashMap::new();
    for e in &g.edges {
        *m.entry((e.a.min(e.b), e.a.max(e.b), e.sign)).or_insert(0) += 1;
    }
    m
}

fn count(m: &EdgeCount, x: usize, y: usize, s: Sign) -> usize {
    m.get(&(x.min(y), x.max(y), s)).copied().unwrap_or(0)
}

/// Decoration-preserving isomorphism (multiplicities compared when both graphs
/// carry them). `None` when a graph exceeds [`ISO_LIMIT`] nodes.
pub fn isomorphic(a: &PlumbGraph, b: &PlumbGraph) -> Option<bool> {
    if a.nodes.len() > ISO_LIMIT || b.nodes.len() > ISO_LIMIT {
        return None;
    }
    if a.nodes.len() != b.nodes.len() || a.edges.len() != b.edges.len() || a.dashes.len() != b.dashes.len() {
        return Some(false);
    }
    let with_mults = a.has_mults() && b.has_mults();
    let (la, lb) = (labels(a, with_mults), labels(b, with_mults));
    let (ca, cb) = (edge_counts(a), edge_counts(b));
    let mut map = vec![usize::MAX; a.nodes.len()];
    let mut used = vec![false; b.nodes.len()];
    Some(extend(0, &la, &lb, &ca, &cb, &mut map, &mut used))
}

fn extend(
    k: usize,
    la: &[Label],
    lb: &[Label],
    ca: &EdgeCount,
    cb: &EdgeCount,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == la.len() {
        return true;
    }
    for y in 0..lb.len() {
        if used[y] || lb[y] != la[k] {
            continue;
        }
        let fits = (0..=k).all(|x| {
            let yx = if x == k { y } else { map[x] };
            [Sign::Plus, Sign::Minus].iter().all(|&s| count(ca, k, x, s) == count(cb, y, yx, s))
        });
        if !fits {
            continue;
        }
        map[k] = y;
        used[y] = true;
        if extend(k + 1, la, lb, ca, cb, map, used) {
            return true;
        }
        used[y] = false;
        map[k] = usize::MAX;
    }
    false
}

pub fn compare(a: &PlumbGraph, b: &PlumbGraph) -> Result<Comparison> {
    if !invariant_signature(a)?.equivalent(&invariant_signature(b)?) {
        return Ok(Comparison::Different);
    }
    Ok(match isomorphic(a, b) {
        Some(true) => Comparison::Isomorphic,
        _ => Comparison::SignatureEqual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(order: &[i64]) -> PlumbGraph {
        let mut g = PlumbGraph::new();
        let c = g.add_vertex("c", Some(-1), 0, None);
        for (k, &e) in order.iter().enumerate() {
            let v = g.add_vertex(format!("l{k}"), Some(e), 0, None);
            g.add_edge(c, v, Sign::Plus);
        }
        g
    }

    #[test]
    fn relabelled_star() {
        assert_eq!(isomorphic(&star(&[-2, -3, -5]), &star(&[-5, -2, -3])), Some(true));
        assert_eq!(isomorphic(&star(&[-2, -3, -5]), &star(&[-2, -3, -7])), Some(false));
        assert_eq!(isomorphic(&star(&[-2; 12]), &star(&[-2; 12])), None);
    }
}
