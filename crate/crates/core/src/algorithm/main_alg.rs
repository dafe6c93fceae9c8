//! The Main Algorithm: Γ_C (satisfying Assumptions A and B) ↦ open-book plumbing graph G.

use crate::arith::{self, gcd, gcd_all};
use crate::covering::{build_trivial_cover, CoveringData, EdgeLift, NodeLift, Proj, Skeleton};
use crate::error::{Error, Result};
use crate::graph::{GammaCGraph, PlumbGraph, Sign};
use crate::hj::{str_string, HJSpec, HJString};

/// Output of the (collapsing) Main Algorithm together with its covering bookkeeping.
#[derive(Clone, Debug)]
pub struct MainOutput {
    pub graph: PlumbGraph,
    pub base: Skeleton,
    pub data: CoveringData,
    pub projection: Vec<Proj>,
    pub copies: Vec<Vec<usize>>,
}

/// 𝔫_w = gcd(m, n, far n of 1-legs, far m of 2-legs); 1 on arrowheads.
pub(crate) fn n_w(g: &GammaCGraph, v: usize) -> i64 {
    if g.is_arrow(v) {
        return 1;
    }
    let t = g.triple(v);
    let star = g.star_of(v);
    let legs = star.legs.iter().map(|l| if l.weight == 1 { l.far_triple.n } else { l.far_triple.m });
    gcd_all([t.m, t.n].into_iter().chain(legs))
}

/// 𝔫_e per edge: gcd(m,n,l) on 1-edges, gcd(m,m',n) on 2-edges, 1 at arrowheads.
pub(crate) fn n_e(g: &GammaCGraph, e: usize) -> i64 {
    let ed = g.edges[e];
    if g.is_arrow(ed.a) || g.is_arrow(ed.b) {
        return 1;
    }
    let (x, y) = (g.triple(ed.a), g.triple(ed.b));
    if ed.w == 1 {
        gcd_all([x.m, x.n, y.n])
    } else {
        gcd_all([x.m, y.m, x.n])
    }
}

/// Genus g̃ of the vertices above w, from 𝔫(2−2g̃) = (2−2g−s−t)(m,n) + Σ(m,n,n_i) + Σ(m,n,m_j).
pub(crate) fn ng_genus(g: &GammaCGraph, v: usize, nw: i64) -> Result<i64> {
    let t = g.triple(v);
    let star = g.star_of(v);
    let mn = t.mn();
    let mut rhs = arith::mul(2 - 2 * g.genus(v) - (star.s + star.t) as i64, mn)?;
    for l in &star.legs {
        let far = if l.weight == 1 { l.far_triple.n } else { l.far_triple.m };
        rhs += gcd(mn, far);
    }
    genus_from(rhs, nw, &g.nodes[v].id)
}

/// Solves 𝔫(2−2g) = rhs for g ≥ 0.
pub(crate) fn genus_from(rhs: i64, n: i64, what: &str) -> Result<i64> {
    let two = 2 * n - rhs;
    if two % (2 * n) != 0 || two < 0 {
        return Err(Error::compute(format!("no admissible genus above {what}: {n}(2-2g) = {rhs}")));
    }
    Ok(two / (2 * n))
}

pub fn covering_data_main(g: &GammaCGraph) -> Result<CoveringData> {
    g.check_valid()?;
    let rep = g.validate();
    if let Some(&k) = rep.assumption_b_violations.first() {
        let e = g.edges[k];
        return Err(Error::pre(format!(
            "vanishing 2-edge {} -- {}: blow up (Assumption B) or use the collapsing algorithm",
            g.nodes[e.a].id, g.nodes[e.b].id
        )));
    }
    Ok(CoveringData {
        n_v: (0..g.nodes.len()).map(|v| n_w(g, v)).collect(),
        n_e: (0..g.edges.len()).map(|e| n_e(g, e)).collect(),
    })
}

/// The string inserted above a non-arrow edge, oriented from `edges[e].a` to `.b`.
pub(crate) fn edge_string(g: &GammaCGraph, e: usize, ne: i64) -> Result<HJString> {
    let ed = g.edges[e];
    let (x, y) = (g.triple(ed.a), g.triple(ed.b));
    if ed.w == 1 {
        str_string(HJSpec::new(x.n / ne, y.n / ne, x.m / ne, x.nu, y.nu, 0), Sign::Plus)
    } else {
        if x.n == 0 {
            return Err(Error::pre("vanishing 2-edge has no string"));
        }
        str_string(HJSpec::new(x.m / ne, y.m / ne, x.n / ne, 0, 0, x.nu), Sign::Minus)
    }
}

/// m̃ = mν/gcd(m,n).
pub(crate) fn lifted_mult(g: &GammaCGraph, v: usize) -> i64 {
    let t = g.triple(v);
    t.m * t.nu / t.mn()
}

pub(crate) fn lift_of_string(s: &HJString) -> EdgeLift {
    if s.is_degenerate() {
        EdgeLift::Direct(s.sign)
    } else {
        let eu = s.entries().iter().map(|k| Some(-s.sign.value() * k)).collect();
        EdgeLift::chain(s.sign, s.combined.inner.iter().map(|&m| Some(m)).collect(), eu)
    }
}

pub fn main_algorithm(g: &GammaCGraph) -> Result<MainOutput> {
    let rep = g.validate();
    if let Some(&k) = rep.assumption_a_violations.first() {
        let e = g.edges[k];
        return Err(Error::pre(format!(
            "2-edge {} -- {} joins two m=1 ends (Assumption A)",
            g.nodes[e.a].id, g.nodes[e.b].id
        )));
    }
    let data = covering_data_main(g)?;
    let base = Skeleton::of_gammac(g);
    let mut nodes = Vec::with_capacity(g.nodes.len());
    for v in 0..g.nodes.len() {
        nodes.push(if g.is_arrow(v) {
            NodeLift::Arrow { mult: Some(1) }
        } else {
            NodeLift::Vertex { euler: None, genus: ng_genus(g, v, data.n_v[v])?, mult: Some(lifted_mult(g, v)) }
        });
    }
    let mut edges = Vec::with_capacity(g.edges.len());
    for k in 0..g.edges.len() {
        let ed = g.edges[k];
        if g.is_arrow(ed.a) || g.is_arrow(ed.b) {
            edges.push(EdgeLift::Direct(Sign::Plus));
            continue;
        }
        let s = edge_string(g, k, data.n_e[k])?;
        if s.combined.left != lifted_mult(g, ed.a) || s.combined.right != lifted_mult(g, ed.b) {
            return Err(Error::compute(format!("string ends above edge {k} disagree with the vertex multiplicities")));
        }
        edges.push(lift_of_string(&s));
    }
    let cover = build_trivial_cover(&base, &data, &nodes, &edges)?;
    let graph = cover.graph.solve_euler_numbers()?;
    Ok(MainOutput { graph, base, data, projection: cover.projection, copies: cover.copies })
}
