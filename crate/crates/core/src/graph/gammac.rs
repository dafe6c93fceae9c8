use std::collections::HashMap;

use crate::arith::gcd;
use crate::error::{Error, Result};

use super::{components, GraphStats};

/// The weight triple (m;n,ν) of a node. Arrowheads carry (1;0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub m: i64,
    pub n: i64,
    pub nu: i64,
}

impl Triple {
    pub const ARROW: Triple = Triple { m: 1, n: 0, nu: 1 };

    pub fn new(m: i64, n: i64, nu: i64) -> Self {
        Triple { m, n, nu }
    }

    /// gcd(m, n)
    pub fn mn(&self) -> i64 {
        gcd(self.m, self.n)
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};{},{})", self.m, self.n, self.nu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GKind {
    Vertex { t: Triple, genus: i64 },
    Arrow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GNode {
    pub id: String,
    pub kind: GKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GEdge {
    pub a: usize,
    pub b: usize,
    pub w: u8,
}

impl GEdge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// Decorated input graph: triples, genera, 1/2-weighted edges and arrowheads.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaCGraph {
    pub nodes: Vec<GNode>,
    pub edges: Vec<GEdge>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub assumption_a_violations: Vec<usize>,
    pub assumption_b_violations: Vec<usize>,
    pub compatibility_errors: Vec<usize>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.assumption_a_violations.is_empty()
            && self.assumption_b_violations.is_empty()
            && self.compatibility_errors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub edge: usize,
    pub far: usize,
    pub weight: u8,
    pub far_triple: Triple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub s: usize,
    pub t: usize,
    pub legs: Vec<Leg>,
}

impl Star {
    pub fn one_legs(&self) -> impl Iterator<Item = &Leg> {
        self.legs.iter().filter(|l| l.weight == 1)
    }

    pub fn two_legs(&self) -> impl Iterator<Item = &Leg> {
        self.legs.iter().filter(|l| l.weight == 2)
    }
}

/// The compatibility predicate for an edge with end weights `x`, `y`.
pub fn compatible(x: Triple, y: Triple, w: u8) -> bool {
    if w != 1 && w != 2 {
        return false;
    }
    if x.m != y.m && ((x.n, x.nu) != (y.n, y.nu) || w != 2) {
        return false;
    }
    if (x.n, x.nu) != (y.n, y.nu) && (x.m != y.m || w != 1) {
        return false;
    }
    true
}

impl GammaCGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, m: i64, n: i64, nu: i64, genus: i64) -> usize {
        self.nodes.push(GNode {
            id: id.into(),
            kind: GKind::Vertex { t: Triple::new(m, n, nu), genus },
        });
        self.nodes.len() - 1
    }

    pub fn add_arrow(&mut self, id: impl Into<String>) -> usize {
        self.nodes.push(GNode { id: id.into(), kind: GKind::Arrow });
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize, w: u8) -> usize {
        self.edges.push(GEdge { a, b, w });
        self.edges.len() - 1
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn is_arrow(&self, v: usize) -> bool {
        matches!(self.nodes[v].kind, GKind::Arrow)
    }

    pub fn triple(&self, v: usize) -> Triple {
        match self.nodes[v].kind {
            GKind::Vertex { t, .. } => t,
            GKind::Arrow => Triple::ARROW,
        }
    }

    pub fn genus(&self, v: usize) -> i64 {
        match self.nodes[v].kind {
            GKind::Vertex { genus, .. } => genus,
            GKind::Arrow => 0,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&v| !self.is_arrow(v))
    }

    pub fn arrows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&v| self.is_arrow(v))
    }

    /// Incident edge indices (a loop is listed once).
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].a == v || self.edges[e].b == v)
            .collect()
    }

    /// δ_v: number of edge ends at v, loops counted twice.
    pub fn delta(&self, v: usize) -> i64 {
        self.edges
            .iter()
            .map(|e| (e.a == v) as i64 + (e.b == v) as i64)
            .sum()
    }

    /// Edge joins two non-arrowheads.
    pub fn is_ww(&self, e: usize) -> bool {
        let ed = self.edges[e];
        !self.is_arrow(ed.a) && !self.is_arrow(ed.b)
    }

    /// A weight-2 edge whose end middle weights are both zero.
    pub fn is_vanishing(&self, e: usize) -> bool {
        let ed = self.edges[e];
        ed.w == 2 && self.triple(ed.a).n == 0 && self.triple(ed.b).n == 0
    }

    /// Structural checks: decorations in range, unique ids, arrows with one edge, connectivity.
    pub fn check_structure(&self) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(Error::invalid("empty graph"));
        }
        let mut seen = HashMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if seen.insert(n.id.as_str(), i).is_some() {
                return Err(Error::invalid(format!("duplicate id {}", n.id)));
            }
            if let GKind::Vertex { t, genus } = n.kind {
                if t.m < 1 || t.nu < 1 || t.n < 0 || genus < 0 {
                    return Err(Error::invalid(format!("vertex {} has out-of-range weights {t}", n.id)));
                }
                if t.m >= 2 && genus != 0 {
                    return Err(Error::invalid(format!("vertex {} has m>=2 and nonzero genus", n.id)));
                }
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.a >= self.nodes.len() || e.b >= self.nodes.len() {
                return Err(Error::invalid(format!("edge {k} has a dangling endpoint")));
            }
            if e.w != 1 && e.w != 2 {
                return Err(Error::invalid(format!("edge {k} has weight {}", e.w)));
            }
        }
        for a in self.arrows() {
            if self.delta(a) != 1 {
                return Err(Error::invalid(format!(
                    "arrowhead {} must have exactly one incident edge",
                    self.nodes[a].id
                )));
            }
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        if components(self.nodes.len(), &pairs).len() != 1 {
            return Err(Error::invalid("graph is not connected"));
        }
        Ok(())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        for (k, e) in self.edges.iter().enumerate() {
            let (x, y) = (self.triple(e.a), self.triple(e.b));
            if !compatible(x, y, e.w) {
                rep.compatibility_errors.push(k);
            }
            if e.w == 2 && x.m == 1 && y.m == 1 {
                rep.assumption_a_violations.push(k);
            }
            if self.is_vanishing(k) {
                rep.assumption_b_violations.push(k);
            }
        }
        rep
    }

    /// Structural check plus compatibility; the error names the first offending edge.
    pub fn check_valid(&self) -> Result<()> {
        self.check_structure()?;
        let rep = self.validate();
        if let Some(&k) = rep.compatibility_errors.first() {
            let e = self.edges[k];
            return Err(Error::invalid(format!(
                "edge {} -- {} (w={}) violates weight compatibility",
                self.nodes[e.a].id, self.nodes[e.b].id, e.w
            )));
        }
        Ok(())
    }

    pub fn stats(&self) -> GraphStats {
        let ww: Vec<(usize, usize)> = (0..self.edges.len())
            .filter(|&e| self.is_ww(e))
            .map(|e| (self.edges[e].a, self.edges[e].b))
            .collect();
        let verts: Vec<usize> = self.vertices().collect();
        GraphStats::from_parts(self.nodes.len(), &verts, &ww, verts.iter().map(|&v| self.genus(v)).sum(), self.arrows().count())
    }

    pub fn star_of(&self, v: usize) -> Star {
        let mut legs = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            if e.a == v && e.b == v {
                for _ in 0..2 {
                    legs.push(Leg { edge: k, far: v, weight: e.w, far_triple: self.triple(v) });
                }
            } else if e.a == v || e.b == v {
                let far = e.other(v);
                legs.push(Leg { edge: k, far, weight: e.w, far_triple: self.triple(far) });
            }
        }
        let s = legs.iter().filter(|l| l.weight == 1).count();
        let t = legs.len() - s;
        Star { s, t, legs }
    }

    /// Vertices of Γ¹ (m = 1, including arrowheads) and Γ² (m ≥ 2).
    pub fn in_gamma1(&self, v: usize) -> bool {
        self.triple(v).m == 1
    }

    /// 2-edges joining Γ¹ and Γ².
    pub fn is_cutting(&self, e: usize) -> bool {
        let ed = self.edges[e];
        ed.w == 2 && (self.in_gamma1(ed.a) != self.in_gamma1(ed.b))
    }

    /// Connected components of Γ², ordered by their lowest vertex index.
    pub fn branches(&self) -> Vec<Vec<usize>> {
        let inside: Vec<usize> = self.vertices().filter(|&v| !self.in_gamma1(v)).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !self.in_gamma1(e.a) && !self.in_gamma1(e.b))
            .map(|e| (e.a, e.b))
            .collect();
        components(self.nodes.len(), &pairs)
            .into_iter()
            .filter(|c| inside.contains(&c[0]))
            .collect()
    }

    /// Unicolored: all W–W edges have one weight, none of them vanishing.
    pub fn is_unicolored_on(&self, edges: &[usize]) -> bool {
        let ww: Vec<usize> = edges.iter().copied().filter(|&e| self.is_ww(e)).collect();
        if ww.iter().any(|&e| self.is_vanishing(e)) {
            return false;
        }
        ww.windows(2).all(|p| self.edges[p[0]].w == self.edges[p[1]].w)
    }

    /// Almost unicolored: the non-vanishing W–W edges have one weight.
    pub fn is_almost_unicolored_on(&self, edges: &[usize]) -> bool {
        let ww: Vec<usize> = edges
            .iter()
            .copied()
            .filter(|&e| self.is_ww(e) && !self.is_vanishing(e))
            .collect();
        ww.windows(2).all(|p| self.edges[p[0]].w == self.edges[p[1]].w)
    }

    pub fn is_unicolored(&self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        self.is_unicolored_on(&all)
    }

    pub fn is_almost_unicolored(&self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        self.is_almost_unicolored_on(&all)
    }

    /// Fresh id not yet used in the graph, derived from `base`.
    pub fn fresh_id(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}'{k}"))
            .find(|c| self.index_of(c).is_none())
            .unwrap()
    }
}
