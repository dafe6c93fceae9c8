//! Transversal-type bookkeeping per branch of Γ².

use crate::arith::gcd_all;
use crate::graph::GammaCGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutEdge {
    pub edge: usize,
    pub nu: i64,
    /// d(e) = ν / d_j
    pub d_e: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalData {
    pub vertices: Vec<usize>,
    pub d_j: i64,
    pub cutting_edges: Vec<CutEdge>,
    /// #TΣ_j = Σ d(e)
    pub n_branches: i64,
    pub gluing_tori: usize,
}

pub fn transversal_data(g: &GammaCGraph) -> Vec<TransversalData> {
    g.branches()
        .into_iter()
        .map(|vs| {
            let d_j = gcd_all(vs.iter().map(|&v| g.triple(v).nu));
            let cutting_edges: Vec<CutEdge> = (0..g.edges.len())
                .filter(|&k| g.is_cutting(k) && (vs.contains(&g.edges[k].a) || vs.contains(&g.edges[k].b)))
                .map(|k| {
                    let e = g.edges[k];
                    let inner = if vs.contains(&e.a) { e.a } else { e.b };
                    let nu = g.triple(inner).nu;
                    CutEdge { edge: k, nu, d_e: nu / d_j }
                })
                .collect();
            TransversalData {
                n_branches: cutting_edges.iter().map(|c| c.d_e).sum(),
                gluing_tori: cutting_edges.len(),
                vertices: vs,
                d_j,
                cutting_edges,
            }
        })
        .collect()
}
