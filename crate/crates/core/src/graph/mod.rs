//! Both graph flavours: the decorated input graph Γ_C and plumbing graphs.

mod gammac;
mod plumb;

pub use gammac::{compatible, GEdge, GKind, GNode, GammaCGraph, Leg, Star, Triple, ValidationReport};
pub use plumb::{Dash, MultCheck, PEdge, PKind, PNode, PlumbGraph, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GraphStats {
    /// number of independent cycles of the vertex subgraph
    pub c: i64,
    pub g_sum: i64,
    pub n_w: usize,
    pub n_ew: usize,
    pub n_a: usize,
}

impl GraphStats {
    pub(crate) fn from_parts(
        n_nodes: usize,
        verts: &[usize],
        ww: &[(usize, usize)],
        g_sum: i64,
        n_a: usize,
    ) -> Self {
        let comps = components(n_nodes, ww)
            .into_iter()
            .filter(|c| verts.contains(&c[0]))
            .count();
        GraphStats {
            c: ww.len() as i64 - verts.len() as i64 + comps as i64,
            g_sum,
            n_w: verts.len(),
            n_ew: ww.len(),
            n_a,
        }
    }
}

/// Connected components (each sorted, ordered by smallest member) of a graph on `0..n`.
pub fn components(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}
