//! The Collapsing Main Algorithm: vanishing 2-edges are contracted instead of blown up.

use crate::arith::{self, gcd, gcd_all};
use crate::covering::{build_trivial_cover, CoveringData, EdgeLift, NodeLift, Skeleton};
use crate::error::{Error, Result};
use crate::graph::{components, GammaCGraph, Sign};

use super::main_alg::{edge_string, genus_from, lift_of_string, lifted_mult, n_e, n_w, ng_genus, MainOutput};

/// One maximal subgraph joined by vanishing 2-edges (possibly a single vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseRecord {
    pub members: Vec<usize>,
    pub n_gamma: i64,
    pub m_gamma: i64,
    pub g_gamma: i64,
    /// (member, number of its vanishing 2-legs ending in an arrowhead)
    pub hat_t: Vec<(usize, i64)>,
}

#[derive(Clone, Debug)]
pub struct Collapsed {
    /// Γ̂_C: one node per class plus the arrowheads, surviving edges.
    pub ghat: Skeleton,
    pub records: Vec<CollapseRecord>,
    /// Γ_C node ↦ node of Γ̂_C
    pub class_of: Vec<usize>,
    /// edges of Γ̂_C as indices into the Γ_C edge list
    pub edge_map: Vec<usize>,
    /// record index per Γ̂_C node (None on arrowheads)
    pub record_of: Vec<Option<usize>>,
}

fn multi_record(g: &GammaCGraph, members: &[usize]) -> Result<CollapseRecord> {
    let nu = g.triple(members[0]).nu;
    let mut ns = Vec::new();
    let mut hat_t = Vec::new();
    let mut total = 0i64;
    for &w in members {
        let t = g.triple(w);
        let star = g.star_of(w);
        let nwv = gcd_all(
            [t.m].into_iter().chain(star.legs.iter().map(|l| if l.weight == 1 { l.far_triple.n } else { l.far_triple.m })),
        );
        let ht = star.two_legs().filter(|l| g.is_arrow(l.far)).count() as i64;
        let mut part = arith::mul(2 - 2 * g.genus(w) - (star.s + star.t) as i64, t.m)?;
        for l in star.one_legs() {
            part += gcd(t.m, l.far_triple.n);
        }
        total = arith::add(total, part + ht)?;
        ns.push(nwv);
        hat_t.push((w, ht));
    }
    let n_gamma = gcd_all(ns);
    let label: Vec<&str> = members.iter().map(|&w| g.nodes[w].id.as_str()).collect();
    let g_gamma = genus_from(total, n_gamma, &label.join("+"))?;
    Ok(CollapseRecord { members: members.to_vec(), n_gamma, m_gamma: nu, g_gamma, hat_t })
}

/// Contracts every maximal connected subgraph of non-arrowheads joined by vanishing 2-edges.
pub fn collapse_subtrees(g: &GammaCGraph) -> Result<Collapsed> {
    g.check_valid()?;
    if !g.validate().assumption_a_violations.is_empty() {
        return Err(Error::pre("collapsing needs Assumption A; blow up first"));
    }
    let van: Vec<usize> = (0..g.edges.len()).filter(|&e| g.is_vanishing(e) && g.is_ww(e)).collect();
    if van.iter().any(|&e| g.edges[e].is_loop()) {
        return Err(Error::invalid("vanishing 2-loop"));
    }
    let pairs: Vec<(usize, usize)> = van.iter().map(|&e| (g.edges[e].a, g.edges[e].b)).collect();
    let comps = components(g.nodes.len(), &pairs);
    let mut class_of = vec![0; g.nodes.len()];
    let mut records = Vec::new();
    let mut ids = Vec::new();
    let mut arrow = Vec::new();
    let mut record_of = Vec::new();
    for c in &comps {
        let node = ids.len();
        for &v in c {
            class_of[v] = node;
        }
        if g.is_arrow(c[0]) {
            ids.push(g.nodes[c[0]].id.clone());
            arrow.push(true);
            record_of.push(None);
            continue;
        }
        let internal = van.iter().filter(|&&e| c.contains(&g.edges[e].a)).count();
        if internal + 1 != c.len() {
            return Err(Error::invalid("a vanishing subgraph is not a tree"));
        }
        let rec = if c.len() == 1 {
            let v = c[0];
            let nv = n_w(g, v);
            CollapseRecord {
                members: c.clone(),
                n_gamma: nv,
                m_gamma: lifted_mult(g, v),
                g_gamma: ng_genus(g, v, nv)?,
                hat_t: vec![(v, g.star_of(v).two_legs().filter(|l| g.is_arrow(l.far)).count() as i64)],
            }
        } else {
            multi_record(g, c)?
        };
        let label: Vec<&str> = c.iter().map(|&w| g.nodes[w].id.as_str()).collect();
        ids.push(label.join("+"));
        arrow.push(false);
        record_of.push(Some(records.len()));
        records.push(rec);
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (k, e) in g.edges.iter().enumerate() {
        if van.contains(&k) {
            continue;
        }
        let (a, b) = (class_of[e.a], class_of[e.b]);
        if a == b && !e.is_loop() {
            return Err(Error::invalid(format!(
                "edge {} -- {} lies inside a vanishing subgraph",
                g.nodes[e.a].id, g.nodes[e.b].id
            )));
        }
        edges.push((a, b));
        edge_map.push(k);
    }
    Ok(Collapsed { ghat: Skeleton { ids, arrow, edges }, records, class_of, edge_map, record_of })
}

pub fn collapsing_algorithm(g: &GammaCGraph) -> Result<MainOutput> {
    let col = collapse_subtrees(g)?;
    let s = &col.ghat;
    let mut n_v = Vec::with_capacity(s.len());
    let mut nodes = Vec::with_capacity(s.len());
    for v in 0..s.len() {
        match col.record_of[v] {
            None => {
                n_v.push(1);
                nodes.push(NodeLift::Arrow { mult: Some(1) });
            }
            Some(r) => {
                let rec = &col.records[r];
                n_v.push(rec.n_gamma);
                nodes.push(NodeLift::Vertex { euler: None, genus: rec.g_gamma, mult: Some(rec.m_gamma) });
            }
        }
    }
    let mut ne = Vec::with_capacity(s.edges.len());
    let mut lifts = Vec::with_capacity(s.edges.len());
    for &k in &col.edge_map {
        let ed = g.edges[k];
        let to_arrow = g.is_arrow(ed.a) || g.is_arrow(ed.b);
        if to_arrow && g.is_vanishing(k) {
            // w —⊖— (0)(1) —+→
            let signs = if g.is_arrow(ed.b) { vec![Sign::Minus, Sign::Plus] } else { vec![Sign::Plus, Sign::Minus] };
            ne.push(1);
            lifts.push(EdgeLift::Chain { signs, mults: vec![Some(1)], eulers: vec![Some(0)] });
        } else if to_arrow {
            ne.push(1);
            lifts.push(EdgeLift::Direct(Sign::Plus));
        } else {
            let n = n_e(g, k);
            let st = edge_string(g, k, n)?;
            let (ma, mb) = (
                col.records[col.record_of[col.class_of[ed.a]].unwrap()].m_gamma,
                col.records[col.record_of[col.class_of[ed.b]].unwrap()].m_gamma,
            );
            if st.combined.left != ma || st.combined.right != mb {
                return Err(Error::compute(format!("string ends above edge {k} disagree with the vertex multiplicities")));
            }
            ne.push(n);
            lifts.push(lift_of_string(&st));
        }
    }
    let data = CoveringData { n_v, n_e: ne };
    let cover = build_trivial_cover(s, &data, &nodes, &lifts)?;
    let graph = cover.graph.solve_euler_numbers()?;
    Ok(MainOutput { graph, base: col.ghat, data, projection: cover.projection, copies: cover.copies })
}
