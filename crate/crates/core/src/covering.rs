//! Cyclic graph coverings with prescribed covering data; only the trivial
//! covering is ever built.

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::graph::{components, GammaCGraph, PlumbGraph, Sign};

/// Bare shape of a graph to be covered: node ids, which nodes are arrowheads, edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub ids: Vec<String>,
    pub arrow: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn of_gammac(g: &GammaCGraph) -> Self {
        Skeleton {
            ids: g.nodes.iter().map(|n| n.id.clone()).collect(),
            arrow: (0..g.nodes.len()).map(|v| g.is_arrow(v)).collect(),
            edges: g.edges.iter().map(|e| (e.a, e.b)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    fn is_connected(&self) -> bool {
        components(self.len(), &self.edges).len() <= 1
    }
}

/// 𝔫_v per node and 𝔫_e per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringData {
    pub n_v: Vec<i64>,
    pub n_e: Vec<i64>,
}

impl CoveringData {
    pub fn check(&self, s: &Skeleton) -> Result<()> {
        if self.n_v.len() != s.len() || self.n_e.len() != s.edges.len() {
            return Err(Error::pre("covering data does not match the graph"));
        }
        for (v, &n) in self.n_v.iter().enumerate() {
            if n < 1 || (s.arrow[v] && n != 1) {
                return Err(Error::pre(format!("bad covering index {n} at {}", s.ids[v])));
            }
        }
        for (k, &(a, b)) in s.edges.iter().enumerate() {
            let ne = self.n_e[k];
            if ne < 1 || ne % self.n_v[a] != 0 || ne % self.n_v[b] != 0 {
                return Err(Error::pre(format!(
                    "edge {} -- {}: index {ne} is not a multiple of both end indices",
                    s.ids[a], s.ids[b]
                )));
            }
        }
        Ok(())
    }
}

/// True iff every component of the subgraph spanned by vertices with 𝔫_v > 1 is a tree.
pub fn covering_unique_check(s: &Skeleton, data: &CoveringData) -> bool {
    let big = |v: usize| !s.arrow[v] && data.n_v[v] > 1;
    let pairs: Vec<(usize, usize)> = s.edges.iter().copied().filter(|&(a, b)| big(a) && big(b)).collect();
    components(s.len(), &pairs)
        .into_iter()
        .filter(|c| big(c[0]))
        .all(|c| pairs.iter().filter(|(a, _)| c.contains(a)).count() + 1 == c.len())
}

/// Number of connected components of the covering of a tree: gcd of the 𝔫_v.
pub fn component_count(s: &Skeleton, data: &CoveringData) -> Result<i64> {
    if !s.is_connected() || s.edges.len() + 1 != s.len() {
        return Err(Error::pre("component count needs a tree"));
    }
    Ok(gcd_all(data.n_v.iter().copied()))
}

/// What sits above a node of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeLift {
    Vertex { euler: Option<i64>, genus: i64, mult: Option<i64> },
    Arrow { mult: Option<i64> },
}

/// What replaces each lifted copy of an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeLift {
    Direct(Sign),
    /// Interior vertices listed from the first endpoint of the edge to the second;
    /// `signs` has one entry per segment (interior count + 1).
    Chain { signs: Vec<Sign>, mults: Vec<Option<i64>>, eulers: Vec<Option<i64>> },
}

impl EdgeLift {
    pub fn chain(sign: Sign, mults: Vec<Option<i64>>, eulers: Vec<Option<i64>>) -> Self {
        EdgeLift::Chain { signs: vec![sign; mults.len() + 1], mults, eulers }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Proj {
    Node(usize),
    /// (edge, string index)
    String(usize, i64),
}

#[derive(Clone, Debug)]
pub struct Cover {
    pub graph: PlumbGraph,
    /// Image of every node of `graph` in the base.
    pub projection: Vec<Proj>,
    /// Output node index of copy k of base node v.
    pub copies: Vec<Vec<usize>>,
}

fn copy_id(base: &str, k: i64) -> String {
    format!("{base}#{k}")
}

/// Builds the trivial covering: copies (v, 0..𝔫_v), and 𝔫_e strings per edge,
/// string i joining (a, i mod 𝔫_a) to (b, i mod 𝔫_b). A loop at v gets 𝔫_e/𝔫_v
/// closed strings at every copy.
pub fn build_trivial_cover(
    s: &Skeleton,
    data: &CoveringData,
    nodes: &[NodeLift],
    edges: &[EdgeLift],
) -> Result<Cover> {
    data.check(s)?;
    if !covering_unique_check(s, data) {
        return Err(Error::pre("covering is not unique: a cycle runs through vertices with index > 1"));
    }
    let mut g = PlumbGraph::new();
    let mut projection = Vec::new();
    let mut copies = Vec::with_capacity(s.len());
    for v in 0..s.len() {
        let mut cs = Vec::new();
        match &nodes[v] {
            NodeLift::Arrow { mult } => {
                cs.push(g.add_arrow(s.ids[v].clone(), *mult));
                projection.push(Proj::Node(v));
            }
            NodeLift::Vertex { euler, genus, mult } => {
                for k in 0..data.n_v[v] {
                    cs.push(g.add_vertex(copy_id(&s.ids[v], k), *euler, *genus, *mult));
                    projection.push(Proj::Node(v));
                }
            }
        }
        copies.push(cs);
    }
    for (k, &(a, b)) in s.edges.iter().enumerate() {
        let ne = data.n_e[k];
        let (na, nb) = (data.n_v[a], data.n_v[b]);
        for i in 0..ne {
            let from = copies[a][(i % na) as usize];
            let to = copies[b][(i % nb) as usize];
            match &edges[k] {
                EdgeLift::Direct(sign) => {
                    g.add_edge(from, to, *sign);
                }
                EdgeLift::Chain { signs, mults, eulers } => {
                    if signs.len() != mults.len() + 1 || eulers.len() != mults.len() {
                        return Err(Error::pre("malformed string lift"));
                    }
                    let mut prev = from;
                    for (pos, (m, e)) in mults.iter().zip(eulers).enumerate() {
                        let w = g.add_vertex(format!("e{k}#{i}/{pos}"), *e, 0, *m);
                        projection.push(Proj::String(k, i));
                        g.add_edge(prev, w, signs[pos]);
                        prev = w;
                    }
                    g.add_edge(prev, to, signs[mults.len()]);
                }
            }
        }
    }
    Ok(Cover { graph: g, projection, copies })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Skeleton {
        Skeleton {
            ids: (0..n).map(|i| format!("v{i}")).collect(),
            arrow: vec![false; n],
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    #[test]
    fn uniqueness() {
        let s = path(3);
        assert!(covering_unique_check(&s, &CoveringData { n_v: vec![2, 2, 2], n_e: vec![2, 2] }));
        let mut cyc = path(3);
        cyc.edges.push((2, 0));
        assert!(!covering_unique_check(&cyc, &CoveringData { n_v: vec![3; 3], n_e: vec![3; 3] }));
        assert!(covering_unique_check(&cyc, &CoveringData { n_v: vec![1; 3], n_e: vec![1; 3] }));
    }

    #[test]
    fn counts() {
        let s = path(2);
        assert_eq!(component_count(&s, &CoveringData { n_v: vec![3, 6], n_e: vec![6] }).unwrap(), 3);
        let star = Skeleton { ids: vec!["c".into(), "a".into(), "b".into()], arrow: vec![false; 3], edges: vec![(0, 1), (0, 2)] };
        let d = CoveringData { n_v: vec![2, 4, 6], n_e: vec![4, 6] };
        assert_eq!(component_count(&star, &d).unwrap(), 2);
    }

    #[test]
    fn loop_lifts_to_closed_strings() {
        let s = Skeleton { ids: vec!["v".into()], arrow: vec![false], edges: vec![(0, 0)] };
        let d = CoveringData { n_v: vec![1], n_e: vec![3] };
        let c = build_trivial_cover(
            &s,
            &d,
            &[NodeLift::Vertex { euler: None, genus: 0, mult: None }],
            &[EdgeLift::Direct(Sign::Plus)],
        )
        .unwrap();
        assert_eq!(c.graph.nodes.len(), 1);
        assert_eq!(c.graph.edges.iter().filter(|e| e.is_loop()).count(), 3);
    }
}
