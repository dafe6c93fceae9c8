//! The pieces ∂₁F (graph G₁) and ∂₂F (graphs G₂,ⱼ).

use crate::covering::Proj;
use crate::error::{Error, Result};
use crate::graph::{GammaCGraph, PlumbGraph, Sign};

use super::main_alg::MainOutput;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G1Mode {
    /// cutting edges become arrows of multiplicity 0
    Resolution,
    /// cutting edges become dash-arrows, the other arrows stay
    Boundary,
    /// every arrow becomes a dash-arrow, multiplicities dropped
    BoundaryMinusVg,
}

/// Turns the given arrows into dash-arrows on their neighbours (whose euler
/// numbers become irrelevant). An arrow glued to another arrow is replaced by a
/// fresh vertex carrying the dash-arrow.
fn dash_out(g: &PlumbGraph, which: &[usize]) -> PlumbGraph {
    let mut out = g.clone();
    let mut doomed = Vec::new();
    for &a in which {
        if doomed.contains(&a) {
            continue;
        }
        let e = out.incident(a)[0];
        let u = out.edges[e].other(a);
        let id = out.nodes[a].id.clone();
        if !out.is_arrow(u) {
            out.add_dash(id, u);
            out.set_euler(u, None);
            doomed.push(a);
        } else {
            let vid = out.fresh_id(&format!("{id}*"));
            let v = out.add_vertex(vid, None, 0, None);
            out.add_dash(id, v);
            doomed.push(a);
            if which.contains(&u) {
                let uid = out.nodes[u].id.clone();
                out.add_dash(uid, v);
                doomed.push(u);
            } else {
                out.add_edge(v, u, Sign::Plus);
            }
        }
    }
    out.remove_nodes(&doomed);
    out
}

/// G₁ from a graph satisfying Assumption A (Assumption B is not needed: Γ¹ has no 2-edges).
pub fn extract_g1(g: &GammaCGraph, mode: G1Mode) -> Result<PlumbGraph> {
    g.check_valid()?;
    if !g.validate().assumption_a_violations.is_empty() {
        return Err(Error::pre("G1 needs Assumption A; blow up first"));
    }
    let mut p = PlumbGraph::new();
    let mut at = vec![usize::MAX; g.nodes.len()];
    for v in 0..g.nodes.len() {
        if !g.in_gamma1(v) {
            continue;
        }
        at[v] = if g.is_arrow(v) {
            p.add_arrow(g.nodes[v].id.clone(), Some(1))
        } else {
            p.add_vertex(format!("{}#0", g.nodes[v].id), None, g.genus(v), Some(g.triple(v).nu))
        };
    }
    let mut cuts = Vec::new();
    for (k, e) in g.edges.iter().enumerate() {
        let (ia, ib) = (g.in_gamma1(e.a), g.in_gamma1(e.b));
        if ia && ib {
            p.add_edge(at[e.a], at[e.b], Sign::Plus);
        } else if g.is_cutting(k) {
            let v1 = if ia { e.a } else { e.b };
            let c = p.add_arrow(p.fresh_id(&format!("cut{k}")), Some(0));
            p.add_edge(at[v1], c, Sign::Plus);
            cuts.push(c);
        }
    }
    let p = p.solve_euler_numbers()?;
    Ok(match mode {
        G1Mode::Resolution => p,
        G1Mode::Boundary => dash_out(&p, &cuts),
        G1Mode::BoundaryMinusVg => {
            let all: Vec<usize> = p.arrows().collect();
            let mut q = dash_out(&p, &all);
            q.clear_mults();
            q
        }
    })
}

/// G₂,ⱼ per branch of Γ², from the Main-Algorithm output over `g` (the graph it ran on).
pub fn extract_g2(g: &GammaCGraph, out: &MainOutput) -> Result<Vec<PlumbGraph>> {
    if out.base.len() != g.nodes.len() {
        return Err(Error::pre("extract_g2 needs the Main-Algorithm output of this very graph"));
    }
    let mut p = out.graph.clone();
    for (k, e) in g.edges.iter().enumerate() {
        if !g.is_cutting(k) {
            continue;
        }
        if out.data.n_e[k] != 1 {
            return Err(Error::compute(format!("cutting edge {k} is covered by {} strings", out.data.n_e[k])));
        }
        let x = if g.in_gamma1(e.a) { e.b } else { e.a };
        let w = out.copies[x][0];
        let id = p.fresh_id(&format!("cut{k}"));
        p.add_dash(id, w);
        p.set_euler(w, None);
    }
    let branches = g.branches();
    let branch_of = |v: usize| branches.iter().position(|b| b.contains(&v));
    let owner: Vec<Option<usize>> = out
        .projection
        .iter()
        .map(|pr| match *pr {
            Proj::Node(v) => branch_of(v),
            Proj::String(e, _) => {
                let ed = g.edges[e];
                match (branch_of(ed.a), branch_of(ed.b)) {
                    (Some(a), Some(b)) if a == b => Some(a),
                    _ => None,
                }
            }
        })
        .collect();
    Ok((0..branches.len())
        .map(|j| {
            let keep: Vec<usize> = (0..owner.len()).filter(|&v| owner[v] == Some(j)).collect();
            p.subgraph(&keep)
        })
        .collect())
}
