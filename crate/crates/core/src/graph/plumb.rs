use std::collections::HashSet;

use crate::arith;
use crate::error::{Error, Result};

use super::{components, GraphStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_value(self.value() * other.value())
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PKind {
    Vertex {
        euler: Option<i64>,
        genus: i64,
        mult: Option<i64>,
    },
    Arrow {
        mult: Option<i64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PNode {
    pub id: String,
    pub kind: PKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PEdge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

impl PEdge {
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

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dash {
    pub id: String,
    pub at: usize,
}

/// Oriented plumbing graph with optional multiplicity system and dash-arrows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlumbGraph {
    pub nodes: Vec<PNode>,
    pub edges: Vec<PEdge>,
    pub dashes: Vec<Dash>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCheck {
    pub ok: bool,
    pub failures: Vec<usize>,
}

impl PlumbGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, euler: Option<i64>, genus: i64, mult: Option<i64>) -> usize {
        self.nodes.push(PNode { id: id.into(), kind: PKind::Vertex { euler, genus, mult } });
        self.nodes.len() - 1
    }

    pub fn add_arrow(&mut self, id: impl Into<String>, mult: Option<i64>) -> usize {
        self.nodes.push(PNode { id: id.into(), kind: PKind::Arrow { mult } });
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize, sign: Sign) -> usize {
        self.edges.push(PEdge { a, b, sign });
        self.edges.len() - 1
    }

    pub fn add_dash(&mut self, id: impl Into<String>, at: usize) {
        self.dashes.push(Dash { id: id.into(), at });
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn is_arrow(&self, v: usize) -> bool {
        matches!(self.nodes[v].kind, PKind::Arrow { .. })
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&v| !self.is_arrow(v))
    }

    pub fn arrows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&v| self.is_arrow(v))
    }

    pub fn euler(&self, v: usize) -> Option<i64> {
        match self.nodes[v].kind {
            PKind::Vertex { euler, .. } => euler,
            PKind::Arrow { .. } => None,
        }
    }

    pub fn genus(&self, v: usize) -> i64 {
        match self.nodes[v].kind {
            PKind::Vertex { genus, .. } => genus,
            PKind::Arrow { .. } => 0,
        }
    }

    pub fn mult(&self, v: usize) -> Option<i64> {
        match self.nodes[v].kind {
            PKind::Vertex { mult, .. } | PKind::Arrow { mult } => mult,
        }
    }

    pub fn set_euler(&mut self, v: usize, value: Option<i64>) {
        if let PKind::Vertex { euler, .. } = &mut self.nodes[v].kind {
            *euler = value;
        }
    }

    pub fn set_genus(&mut self, v: usize, value: i64) {
        if let PKind::Vertex { genus, .. } = &mut self.nodes[v].kind {
            *genus = value;
        }
    }

    pub fn set_mult(&mut self, v: usize, value: Option<i64>) {
        match &mut self.nodes[v].kind {
            PKind::Vertex { mult, .. } | PKind::Arrow { mult } => *mult = value,
        }
    }

    pub fn clear_mults(&mut self) {
        for v in 0..self.nodes.len() {
            self.set_mult(v, None);
        }
    }

    pub fn has_mults(&self) -> bool {
        self.nodes.iter().any(|n| matches!(n.kind, PKind::Vertex { mult: Some(_), .. } | PKind::Arrow { mult: Some(_) }))
    }

    /// Incident edge indices, loops listed once.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].touches(v)).collect()
    }

    /// Number of edge ends at v, loops counted twice.
    pub fn delta(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.a == v) as usize + (e.b == v) as usize).sum()
    }

    pub fn dash_count(&self, v: usize) -> usize {
        self.dashes.iter().filter(|d| d.at == v).count()
    }

    pub fn n_dash(&self) -> usize {
        self.dashes.len()
    }

    pub fn is_ww(&self, e: usize) -> bool {
        let ed = self.edges[e];
        !self.is_arrow(ed.a) && !self.is_arrow(ed.b)
    }

    pub fn stats(&self) -> GraphStats {
        let verts: Vec<usize> = self.vertices().collect();
        let ww: Vec<(usize, usize)> = (0..self.edges.len())
            .filter(|&e| self.is_ww(e))
            .map(|e| (self.edges[e].a, self.edges[e].b))
            .collect();
        GraphStats::from_parts(
            self.nodes.len(),
            &verts,
            &ww,
            verts.iter().map(|&v| self.genus(v)).sum(),
            self.arrows().count(),
        )
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        components(self.nodes.len(), &pairs)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn check_structure(&self) -> Result<()> {
        let mut ids = HashSet::new();
        for n in &self.nodes {
            if !ids.insert(n.id.as_str()) {
                return Err(Error::invalid(format!("duplicate id {}", n.id)));
            }
            match n.kind {
                PKind::Vertex { genus, mult, .. } => {
                    if genus < 0 || mult.is_some_and(|m| m < 0) {
                        return Err(Error::invalid(format!("vertex {} has a negative decoration", n.id)));
                    }
                }
                PKind::Arrow { mult } => {
                    if mult.is_some_and(|m| m < 0) {
                        return Err(Error::invalid(format!("arrow {} has a negative multiplicity", n.id)));
                    }
                }
            }
        }
        for d in &self.dashes {
            if !ids.insert(d.id.as_str()) {
                return Err(Error::invalid(format!("duplicate id {}", d.id)));
            }
            if d.at >= self.nodes.len() || self.is_arrow(d.at) {
                return Err(Error::invalid(format!("dash-arrow {} must sit on a vertex", d.id)));
            }
            if self.euler(d.at).is_some() {
                return Err(Error::invalid(format!(
                    "vertex {} supports a dash-arrow and must have no euler number",
                    self.nodes[d.at].id
                )));
            }
        }
        for e in &self.edges {
            if e.a >= self.nodes.len() || e.b >= self.nodes.len() {
                return Err(Error::invalid("edge with dangling endpoint"));
            }
        }
        for a in self.arrows() {
            if self.delta(a) != 1 {
                return Err(Error::invalid(format!(
                    "arrow {} must have exactly one incident edge",
                    self.nodes[a].id
                )));
            }
        }
        Ok(())
    }

    /// Σ ε·m over non-loop edges at v (requires all neighbour multiplicities).
    fn neighbour_sum(&self, v: usize) -> Result<i64> {
        let mut sum = 0i64;
        for e in &self.edges {
            if e.is_loop() || !e.touches(v) {
                continue;
            }
            let u = e.other(v);
            let mu = self.mult(u).ok_or_else(|| {
                Error::pre(format!("missing multiplicity on {}", self.nodes[u].id))
            })?;
            sum = arith::add(sum, arith::mul(e.sign.value(), mu)?)?;
        }
        Ok(sum)
    }

    /// Checks e_w·m_w + Σ ε·m = 0 at every vertex without dash-arrows (loops excluded).
    pub fn check_multiplicity_system(&self) -> Result<MultCheck> {
        let mut failures = Vec::new();
        for v in self.vertices() {
            if self.dash_count(v) > 0 {
                continue;
            }
            let id = &self.nodes[v].id;
            let e = self.euler(v).ok_or_else(|| Error::pre(format!("missing euler number on {id}")))?;
            let m = self.mult(v).ok_or_else(|| Error::pre(format!("missing multiplicity on {id}")))?;
            let total = arith::add(arith::mul(e, m)?, self.neighbour_sum(v)?)?;
            if total != 0 {
                failures.push(v);
            }
        }
        Ok(MultCheck { ok: failures.is_empty(), failures })
    }

    /// Fills every absent euler number from the multiplicity relation; present ones are verified.
    pub fn solve_euler_numbers(&self) -> Result<PlumbGraph> {
        let mut out = self.clone();
        for v in self.vertices() {
            if self.dash_count(v) > 0 {
                continue;
            }
            let id = &self.nodes[v].id;
            let m = match (self.euler(v), self.mult(v)) {
                (Some(_), None) => continue,
                (_, Some(m)) => m,
                (None, None) => return Err(Error::pre(format!("missing multiplicity on {id}"))),
            };
            let s = self.neighbour_sum(v)?;
            match self.euler(v) {
                Some(e) => {
                    if arith::add(arith::mul(e, m)?, s)? != 0 {
                        return Err(Error::compute(format!("euler number of {id} contradicts the multiplicity system")));
                    }
                }
                None => {
                    if m == 0 {
                        return Err(Error::compute(format!("vertex {id} has multiplicity 0, euler undetermined")));
                    }
                    if s % m != 0 {
                        return Err(Error::compute(format!(
                            "inconsistent multiplicity system at {id}: {} not divisible by {m}",
                            -s
                        )));
                    }
                    out.set_euler(v, Some(-s / m));
                }
            }
        }
        Ok(out)
    }

    /// Drops the given nodes (with incident edges and their dash-arrows) and reindexes.
    pub fn remove_nodes(&mut self, doomed: &[usize]) {
        let doomed: HashSet<usize> = doomed.iter().copied().collect();
        let mut map = vec![usize::MAX; self.nodes.len()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !doomed.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let mut k = 0;
        self.nodes.retain(|_| {
            let keep = !doomed.contains(&k);
            k += 1;
            keep
        });
        self.edges.retain(|e| !doomed.contains(&e.a) && !doomed.contains(&e.b));
        for e in &mut self.edges {
            e.a = map[e.a];
            e.b = map[e.b];
        }
        self.dashes.retain(|d| !doomed.contains(&d.at));
        for d in &mut self.dashes {
            d.at = map[d.at];
        }
    }

    pub fn remove_edges(&mut self, doomed: &[usize]) {
        let doomed: HashSet<usize> = doomed.iter().copied().collect();
        let mut k = 0;
        self.edges.retain(|_| {
            let keep = !doomed.contains(&k);
            k += 1;
            keep
        });
    }

    /// The induced subgraph on `keep` (edges with both ends kept, dashes on kept vertices).
    pub fn subgraph(&self, keep: &[usize]) -> PlumbGraph {
        let keep: HashSet<usize> = keep.iter().copied().collect();
        let doomed: Vec<usize> = (0..self.nodes.len()).filter(|v| !keep.contains(v)).collect();
        let mut g = self.clone();
        g.remove_nodes(&doomed);
        g
    }

    /// Connected pieces as separate graphs.
    pub fn split_components(&self) -> Vec<PlumbGraph> {
        self.components().iter().map(|c| self.subgraph(c)).collect()
    }

    /// Graph of the closed manifold: arrows and multiplicities dropped.
    pub fn strip_arrows(&self) -> PlumbGraph {
        let arrows: Vec<usize> = self.arrows().collect();
        let mut g = self.clone();
        g.remove_nodes(&arrows);
        g.clear_mults();
        g
    }

    /// Every non-dash vertex has an euler number.
    pub fn eulers_complete(&self) -> bool {
        self.vertices().all(|v| self.dash_count(v) > 0 || self.euler(v).is_some())
    }

    pub fn fresh_id(&self, base: &str) -> String {
        let taken = |c: &str| self.index_of(c).is_some() || self.dashes.iter().any(|d| d.id == c);
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|k| format!("{base}'{k}")).find(|c| !taken(c)).unwrap()
    }
}
