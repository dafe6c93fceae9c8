//! Extra blow-ups making an input graph satisfy Assumptions A and B.

use crate::graph::{GammaCGraph, Triple};

/// Inserts a (2;n,ν) vertex into every 2-edge whose ends both have m = 1
/// (arrowheads count as m = 1). A loop becomes two edges to the new vertex.
pub fn blowup_assumption_a(g: &GammaCGraph) -> GammaCGraph {
    let bad: Vec<usize> = g.validate().assumption_a_violations;
    if bad.is_empty() {
        return g.clone();
    }
    let mut out = GammaCGraph { nodes: g.nodes.clone(), edges: Vec::new() };
    for (k, e) in g.edges.iter().enumerate() {
        if !bad.contains(&k) {
            out.edges.push(*e);
            continue;
        }
        let t = if g.is_arrow(e.a) { g.triple(e.b) } else { g.triple(e.a) };
        let id = out.fresh_id(&format!("A{k}"));
        let mid = out.add_vertex(id, 2, t.n, t.nu, 0);
        out.add_edge(e.a, mid, 2);
        out.add_edge(mid, e.b, 2);
    }
    out
}

/// Replaces every vanishing 2-edge (m;0,ν)—(m';0,ν) by
/// (m;0,ν) —1— (m;m+m',ν) —2— (m';m+m',ν) —1— (m';0,ν).
pub fn blowup_assumption_b(g: &GammaCGraph) -> GammaCGraph {
    let bad: Vec<usize> = g.validate().assumption_b_violations;
    if bad.is_empty() {
        return g.clone();
    }
    let mut out = GammaCGraph { nodes: g.nodes.clone(), edges: Vec::new() };
    for (k, e) in g.edges.iter().enumerate() {
        if !bad.contains(&k) {
            out.edges.push(*e);
            continue;
        }
        let (x, y): (Triple, Triple) = (g.triple(e.a), g.triple(e.b));
        let (nu, s) = (x.nu, x.m + y.m);
        let ia = out.fresh_id(&format!("B{k}a"));
        let va = out.add_vertex(ia, x.m, s, nu, 0);
        let ib = out.fresh_id(&format!("B{k}b"));
        let vb = out.add_vertex(ib, y.m, s, nu, 0);
        out.add_edge(e.a, va, 1);
        out.add_edge(va, vb, 2);
        out.add_edge(vb, e.b, 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_on_loop() {
        let mut g = GammaCGraph::new();
        let v = g.add_vertex("v", 1, 0, 1, 0);
        g.add_edge(v, v, 2);
        let h = blowup_assumption_a(&g);
        assert_eq!(h.nodes.len(), 2);
        assert_eq!(h.triple(1), Triple::new(2, 0, 1));
        assert_eq!(h.edges.len(), 2);
        assert!(h.validate().assumption_a_violations.is_empty());
    }

    #[test]
    fn b_on_cylinder_edge() {
        let mut g = GammaCGraph::new();
        let a = g.add_vertex("a", 5, 0, 1, 0);
        let b = g.add_vertex("b", 10, 0, 1, 0);
        g.add_edge(a, b, 2);
        let h = blowup_assumption_b(&g);
        assert_eq!(h.triple(2), Triple::new(5, 15, 1));
        assert_eq!(h.triple(3), Triple::new(10, 15, 1));
        assert!(h.validate().is_clean());
    }

    #[test]
    fn b_with_arrow() {
        let mut g = GammaCGraph::new();
        let a = g.add_vertex("a", 3, 0, 1, 0);
        let r = g.add_arrow("r");
        g.add_edge(a, r, 2);
        let h = blowup_assumption_b(&g);
        assert_eq!(h.triple(3), Triple::new(1, 4, 1));
        assert!(h.validate().is_clean());
        assert!(h.check_valid().is_ok());
    }
}
