//! Divisors, characteristic polynomials, ranks and Jordan data read off Γ_C
//! and the plumbing graphs G, Ĝ, G₂,ⱼ.

use std::fmt;

use crate::algorithm::{blowup_assumption_a, collapse_subtrees, extract_g2, run_collapse, run_main, MainOutput};
use crate::covering::Skeleton;
use crate::error::{Error, Result};
use crate::graph::{GammaCGraph, PlumbGraph};

use super::cyclo::CycloPoly;
use super::divisor::{lambda_div, vertical_cycle, BiDivisor};
use super::matrix::intersection_data;

fn branch(g: &GammaCGraph, j: usize) -> Result<Vec<usize>> {
    let bs = g.branches();
    let n = bs.len();
    bs.into_iter()
        .nth(j)
        .ok_or_else(|| Error::pre(format!("branch index {j} out of range ({n} branches)")))
}

fn d_j(g: &GammaCGraph, vs: &[usize]) -> i64 {
    crate::arith::gcd_all(vs.iter().map(|&v| g.triple(v).nu))
}

/// Edges with both ends inside `vs`.
fn inner_edges(g: &GammaCGraph, vs: &[usize]) -> Vec<usize> {
    (0..g.edges.len())
        .filter(|&k| vs.contains(&g.edges[k].a) && vs.contains(&g.edges[k].b))
        .collect()
}

/// Div_Φ = (1,1) + Σ_w (2g_w+δ_w−2)·Λ(m_w;n_w,ν_w).
pub fn div_phi(g: &GammaCGraph) -> Result<BiDivisor> {
    let g = blowup_assumption_a(g);
    let mut d = BiDivisor::one_one();
    for w in g.vertices() {
        let t = g.triple(w);
        let k = 2 * g.genus(w) + g.delta(w) - 2;
        if k != 0 {
            d = d.add_scaled(&lambda_div(t.m, t.n, t.nu)?, k);
        }
    }
    Ok(d)
}

/// Div^Φ_j = Σ_{ξ^{d_j}=1} (1,ξ) + Σ_{w∈Γ²_j} (δ_w−2)·Λ(m_w;n_w,ν_w).
pub fn div_j(g: &GammaCGraph, j: usize) -> Result<BiDivisor> {
    let g = blowup_assumption_a(g);
    let vs = branch(&g, j)?;
    let mut d = vertical_cycle(d_j(&g, &vs));
    for &w in &vs {
        let t = g.triple(w);
        d = d.add_scaled(&lambda_div(t.m, t.n, t.nu)?, g.delta(w) - 2);
    }
    Ok(d)
}

/// Div'_j = (1,1) + Σ_{w∈Γ²_j} (δ_w−2)·Λ(m_w;n_w,ν_w/d_j).
pub fn div_prime_j(g: &GammaCGraph, j: usize) -> Result<BiDivisor> {
    let g = blowup_assumption_a(g);
    let vs = branch(&g, j)?;
    let dj = d_j(&g, &vs);
    let mut d = BiDivisor::one_one();
    for &w in &vs {
        let t = g.triple(w);
        d = d.add_scaled(&lambda_div(t.m, t.n, t.nu / dj)?, g.delta(w) - 2);
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharpolyKind {
    PhiHor,
    PhiVer,
    PhiHorOnVer1,
    JHor,
    JVer,
    JHorOnVer1,
    JPrimeHor,
    JPrimeVer,
    JPrimeHorOnVer1,
}

impl CharpolyKind {
    pub const ALL: [CharpolyKind; 9] = [
        CharpolyKind::PhiHor,
        CharpolyKind::PhiVer,
        CharpolyKind::PhiHorOnVer1,
        CharpolyKind::JHor,
        CharpolyKind::JVer,
        CharpolyKind::JHorOnVer1,
        CharpolyKind::JPrimeHor,
        CharpolyKind::JPrimeVer,
        CharpolyKind::JPrimeHorOnVer1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CharpolyKind::PhiHor => "phi-hor",
            CharpolyKind::PhiVer => "phi-ver",
            CharpolyKind::PhiHorOnVer1 => "phi-hor-on-ver1",
            CharpolyKind::JHor => "j-hor",
            CharpolyKind::JVer => "j-ver",
            CharpolyKind::JHorOnVer1 => "j-hor-on-ver1",
            CharpolyKind::JPrimeHor => "jprime-hor",
            CharpolyKind::JPrimeVer => "jprime-ver",
            CharpolyKind::JPrimeHorOnVer1 => "jprime-hor-on-ver1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        CharpolyKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Needs a branch index.
    pub fn is_branch(self) -> bool {
        !matches!(self, CharpolyKind::PhiHor | CharpolyKind::PhiVer | CharpolyKind::PhiHorOnVer1)
    }
}

impl fmt::Display for CharpolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed-form characteristic polynomials; `j` is required for the branch selectors.
pub fn charpoly(which: CharpolyKind, g: &GammaCGraph, j: Option<usize>) -> Result<CycloPoly> {
    use CharpolyKind::*;
    let g = blowup_assumption_a(g);
    let (vs, dj) = if which.is_branch() {
        let j = j.ok_or_else(|| Error::pre(format!("{which} needs a branch index")))?;
        let vs = branch(&g, j)?;
        let dj = d_j(&g, &vs);
        (vs, dj)
    } else {
        (g.vertices().collect(), 1)
    };
    let mut p = match which {
        JHor => CycloPoly::tk(1, dj),
        JVer => CycloPoly::tk(dj as u64, 1),
        _ => CycloPoly::tk(1, 1),
    };
    for &w in &vs {
        let t = g.triple(w);
        let mn = t.mn();
        let k = if which.is_branch() { g.delta(w) - 2 } else { 2 * g.genus(w) + g.delta(w) - 2 };
        let (base, exp) = match which {
            PhiHor | JHor => (t.m, t.nu * k),
            PhiVer | JVer => (t.m * t.nu / mn, mn * k),
            PhiHorOnVer1 | JHorOnVer1 | JPrimeHorOnVer1 => (mn, k),
            JPrimeHor => (t.m, t.nu * k / dj),
            JPrimeVer => (t.m * t.nu / (dj * mn), mn * k),
        };
        p.mul_tk(base as u64, exp);
    }
    if !p.is_polynomial() {
        return Err(Error::compute(format!("{which}: negative exponent in {p}")));
    }
    Ok(p)
}

/// Which piece of the cover P_𝔥 is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhVariant {
    Full,
    Hat,
    Branch(usize),
    BranchHat(usize),
}

/// (t−1)·∏_e (t^{𝔫_e}−1) / ∏_w (t^{𝔫_w}−1) over the non-arrowheads of `keep`.
fn p_h_of(base: &Skeleton, n_v: &[i64], n_e: &[i64], keep: &dyn Fn(usize) -> bool) -> CycloPoly {
    let mut p = CycloPoly::tk(1, 1);
    for (k, &(a, b)) in base.edges.iter().enumerate() {
        if !base.arrow[a] && !base.arrow[b] && keep(a) && keep(b) {
            p.mul_tk(n_e[k] as u64, 1);
        }
    }
    for v in 0..base.len() {
        if !base.arrow[v] && keep(v) {
            p.mul_tk(n_v[v] as u64, -1);
        }
    }
    p
}

fn p_h_main(out: &MainOutput) -> CycloPoly {
    p_h_of(&out.base, &out.data.n_v, &out.data.n_e, &|_| true)
}

pub fn p_h_cover(g: &GammaCGraph, variant: PhVariant) -> Result<CycloPoly> {
    match variant {
        PhVariant::Full => Ok(p_h_main(&run_main(g)?.1)),
        PhVariant::Hat => Ok(p_h_main(&run_collapse(g)?.1)),
        PhVariant::Branch(j) => {
            let (gab, out) = run_main(g)?;
            let vs = branch(&gab, j)?;
            Ok(p_h_of(&out.base, &out.data.n_v, &out.data.n_e, &|v| vs.contains(&v)))
        }
        PhVariant::BranchHat(j) => {
            let (ga, out) = run_collapse(g)?;
            let vs = branch(&ga, j)?;
            let col = collapse_subtrees(&ga)?;
            let classes: Vec<usize> = vs.iter().map(|&v| col.class_of[v]).collect();
            Ok(p_h_of(&out.base, &out.data.n_v, &out.data.n_e, &|v| classes.contains(&v)))
        }
    }
}

/// Rank, eigenvalue-1 and Jordan-block data; every value computed from the graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank_h1_boundary: i64,
    pub rank_h1_minus_vg: i64,
    pub rank_h1_partial2j: Vec<i64>,
    pub geneig1_phi: i64,
    pub geneig1_j: Vec<i64>,
    pub jordan2_phi: i64,
    pub jordan2_j: Vec<i64>,
}

struct GData {
    g2: i64,
    c: i64,
    n_a: i64,
    n_dash: i64,
    corank_a: i64,
    corank_ai: i64,
}

fn gdata(p: &PlumbGraph) -> Result<GData> {
    let s = p.stats();
    let d = intersection_data(p)?;
    Ok(GData {
        g2: 2 * s.g_sum,
        c: s.c,
        n_a: s.n_a as i64,
        n_dash: p.n_dash() as i64,
        corank_a: d.corank_a as i64,
        corank_ai: d.corank_ai as i64,
    })
}

/// G along the blow-up path, the G₂,ⱼ list and the prime divisors, checked against each other.
pub fn rank_report(g: &GammaCGraph) -> Result<RankReport> {
    let (gab, out) = run_main(g)?;
    let g2s = extract_g2(&gab, &out)?;
    rank_report_from(g, &out.graph, &g2s)
}

pub fn rank_report_from(g: &GammaCGraph, big: &PlumbGraph, g2s: &[PlumbGraph]) -> Result<RankReport> {
    let d = gdata(big)?;
    let geneig1_phi = d.g2 + 2 * d.c + d.n_a - 1;
    let side = div_phi(g)?.ver_one_part().total();
    if side != geneig1_phi {
        return Err(Error::compute(format!(
            "eigenvalue-1 rank of M_Φ,ver: divisor gives {side}, graph G gives {geneig1_phi}"
        )));
    }
    let mut r = RankReport {
        rank_h1_boundary: d.g2 + d.c + d.corank_a,
        rank_h1_minus_vg: d.g2 + d.c + d.corank_ai,
        rank_h1_partial2j: Vec::new(),
        geneig1_phi,
        geneig1_j: Vec::new(),
        jordan2_phi: d.c - d.corank_ai + d.n_a,
        jordan2_j: Vec::new(),
    };
    for (j, p) in g2s.iter().enumerate() {
        let e = gdata(p)?;
        let gen = e.g2 + 2 * e.c + e.n_dash - 1;
        let side = div_prime_j(g, j)?.ver_one_part().total();
        if side != gen {
            return Err(Error::compute(format!(
                "eigenvalue-1 rank of M'_{},ver: divisor gives {side}, graph G_2,{} gives {gen}",
                j + 1,
                j + 1
            )));
        }
        r.rank_h1_partial2j.push(e.g2 + e.c + e.corank_ai);
        r.geneig1_j.push(gen);
        r.jordan2_j.push(e.c - e.corank_ai + e.n_dash);
    }
    Ok(r)
}

/// Which graph the exact formula was evaluated on, and why it applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryStatus {
    Exact { hat: bool, reason: String },
    /// P = (t−1)^N / Q · product, with Q | p_h, Q(1) ≠ 0 and N = n_base + deg Q.
    Conditional { product: CycloPoly, p_h: CycloPoly, n_base: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCharpoly {
    /// The exact polynomial, or the known product factor when conditional.
    pub poly: CycloPoly,
    pub status: BoundaryStatus,
}

impl BoundaryCharpoly {
    pub fn is_exact(&self) -> bool {
        matches!(self.status, BoundaryStatus::Exact { .. })
    }
}

/// ∏_w (t^{(m_w,n_w)}−1)^{2g_w+δ_w−2}
fn vertex_product(g: &GammaCGraph) -> CycloPoly {
    let mut p = CycloPoly::one();
    for w in g.vertices() {
        p.mul_tk(g.triple(w).mn() as u64, 2 * g.genus(w) + g.delta(w) - 2);
    }
    p
}

fn exact(corank_a: i64, n_a: i64, p_h: &CycloPoly, product: &CycloPoly) -> Result<CycloPoly> {
    let p = CycloPoly::tk(1, 2 + corank_a - n_a).div(p_h).mul(product);
    if !p.is_polynomial() {
        return Err(Error::compute(format!("boundary characteristic polynomial has a negative exponent: {p}")));
    }
    Ok(p)
}

/// Characteristic polynomial of the monodromy on H₁(∂F).
///
/// Tries the blow-up path G first (Γ_C unicolored, c(G)=0, corank(A,I)_G=#A,
/// or the branch-wise conditions for every j), then the collapsing path Ĝ
/// (almost unicolored, c(Ĝ)=0, corank(A,I)_Ĝ=#A, or every Γ²_j almost unicolored).
pub fn charpoly_boundary(g: &GammaCGraph) -> Result<BoundaryCharpoly> {
    let (gab, out) = run_main(g)?;
    let product = vertex_product(&gab);
    let big = gdata(&out.graph)?;
    let ph = p_h_main(&out);

    let mut reason = None;
    if gab.is_unicolored() {
        reason = Some("Γ_C unicolored".to_string());
    } else if big.c == 0 {
        reason = Some("c(G)=0".to_string());
    } else if big.corank_ai == big.n_a {
        reason = Some("corank(A,I)_G=#A".to_string());
    } else {
        let g2s = extract_g2(&gab, &out)?;
        let branches = gab.branches();
        let mut all = true;
        for (vs, p) in branches.iter().zip(&g2s) {
            let e = gdata(p)?;
            let ok = gab.is_unicolored_on(&inner_edges(&gab, vs)) || e.c == 0 || e.corank_ai == e.n_dash;
            all &= ok;
        }
        if all {
            reason = Some("branch conditions for every j".to_string());
        }
    }
    if let Some(reason) = reason {
        let poly = exact(big.corank_a, big.n_a, &ph, &product)?;
        return Ok(BoundaryCharpoly { poly, status: BoundaryStatus::Exact { hat: false, reason } });
    }

    let (ga, hout) = run_collapse(g)?;
    let hat = gdata(&hout.graph)?;
    let hph = p_h_main(&hout);
    let reason = if ga.is_almost_unicolored() {
        Some("Γ_C almost unicolored")
    } else if hat.c == 0 {
        Some("c(Ĝ)=0")
    } else if hat.corank_ai == big.n_a {
        Some("corank(A,I)_Ĝ=#A")
    } else if ga.branches().iter().all(|vs| ga.is_almost_unicolored_on(&inner_edges(&ga, vs))) {
        Some("every Γ²_j almost unicolored")
    } else {
        None
    };
    if let Some(reason) = reason {
        let poly = exact(hat.corank_a, big.n_a, &hph, &product)?;
        return Ok(BoundaryCharpoly { poly, status: BoundaryStatus::Exact { hat: true, reason: reason.to_string() } });
    }
    Ok(BoundaryCharpoly {
        poly: product.clone(),
        status: BoundaryStatus::Conditional { product, p_h: hph, n_base: 2 + hat.corank_a - big.n_a - hat.c },
    })
}
