//! Γ_C (or plumbing graphs directly) from combinatorial singularity data:
//! cylinders, projective curves, line arrangements, f̃(x^a y^b, z).

use std::collections::BTreeMap;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::format::{header, parse_plumb, perr, Fields};
use crate::graph::{GammaCGraph, PlumbGraph, Sign};

/// Γ_C of a cylinder f'(x,y) from an embedded resolution graph of f':
/// (m) becomes (m;0,1), every edge gets weight 2, euler numbers are dropped.
pub fn build_cylinder(res: &PlumbGraph) -> Result<GammaCGraph> {
    if res.vertices().next().is_none() {
        return Err(Error::pre("resolution graph has no vertex: smooth germ, nothing to build"));
    }
    let mut g = GammaCGraph::new();
    for (v, node) in res.nodes.iter().enumerate() {
        if res.is_arrow(v) {
            g.add_arrow(node.id.clone());
        } else {
            let m = res
                .mult(v)
                .ok_or_else(|| Error::pre(format!("vertex {} carries no multiplicity", node.id)))?;
            g.add_vertex(node.id.clone(), m, 0, 1, res.genus(v));
        }
    }
    for e in &res.edges {
        g.add_edge(e.a, e.b, 2);
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveComponent {
    pub id: String,
    pub degree: i64,
    pub genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub id: String,
    /// Embedded resolution graph of the local curve germ, arrows = local branches.
    pub local: PlumbGraph,
    /// local arrow id ↦ global component id
    pub branch_map: BTreeMap<String, String>,
}

/// A projective plane curve: degree, irreducible components and singular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub degree: i64,
    pub components: Vec<CurveComponent>,
    pub points: Vec<SingularPoint>,
}

impl CurveData {
    /// Format:
    ///
    /// ```text
    /// curve 1
    /// degree 5
    /// component C d=5 g=0
    /// point P
    ///   vertex a e=-4 m=3      # local resolution, plumbing-format lines
    ///   arrow r m=1
    ///   edge a r s=+
    ///   branch r C
    /// end
    /// ```
    pub fn parse(text: &str) -> Result<CurveData> {
        let mut degree = None;
        let mut components = Vec::new();
        let mut points = Vec::new();
        let mut open: Option<(usize, String, String, BTreeMap<String, String>)> = None;
        for (n, t) in header(text, "curve")? {
            if let Some((start, id, body, map)) = open.as_mut() {
                match t[0] {
                    "end" => {
                        let local = parse_plumb(&format!("plumb 1\n{body}")).map_err(|e| match e {
                            Error::Parse { line, msg } => perr(*start + line - 1, msg),
                            other => other,
                        })?;
                        points.push(SingularPoint { id: id.clone(), local, branch_map: std::mem::take(map) });
                        open = None;
                    }
                    "branch" if t.len() == 3 => {
                        if map.insert(t[1].to_string(), t[2].to_string()).is_some() {
                            return Err(perr(n, format!("branch {} mapped twice", t[1])));
                        }
                        body.push('\n');
                    }
                    _ => {
                        body.push_str(&t.join(" "));
                        body.push('\n');
                    }
                }
                continue;
            }
            match t[0] {
                "degree" if t.len() == 2 => {
                    degree = Some(t[1].parse::<i64>().map_err(|_| perr(n, "degree is not an integer"))?);
                }
                "component" if t.len() >= 2 => {
                    let f = Fields::new(n, &t[2..], &["d", "g"])?;
                    components.push(CurveComponent {
                        id: t[1].to_string(),
                        degree: f.req_int("d")?,
                        genus: f.int("g")?.unwrap_or(0),
                    });
                }
                "point" if t.len() == 2 => open = Some((n, t[1].to_string(), String::new(), BTreeMap::new())),
                _ => return Err(perr(n, format!("unrecognised line '{}'", t.join(" ")))),
            }
        }
        if open.is_some() {
            return Err(perr(0, "point block without 'end'"));
        }
        let degree = degree.ok_or_else(|| perr(0, "missing 'degree' line"))?;
        let data = CurveData { degree, components, points };
        data.check()?;
        Ok(data)
    }

    pub fn check(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(Error::invalid("curve degree must be positive"));
        }
        let total: i64 = self.components.iter().map(|c| c.degree).sum();
        if total != self.degree {
            return Err(Error::invalid(format!("component degrees sum to {total}, not {}", self.degree)));
        }
        for c in &self.components {
            if c.degree < 1 || c.genus < 0 {
                return Err(Error::invalid(format!("component {}: bad degree or genus", c.id)));
            }
        }
        for p in &self.points {
            for a in p.local.arrows() {
                let id = &p.local.nodes[a].id;
                match p.branch_map.get(id) {
                    None => return Err(Error::invalid(format!("point {}: branch {id} is not mapped", p.id))),
                    Some(c) if !self.components.iter().any(|x| &x.id == c) => {
                        return Err(Error::invalid(format!("point {}: unknown component {c}", p.id)))
                    }
                    _ => {}
                }
            }
            if let Some(extra) = p.branch_map.keys().find(|k| p.local.index_of(k).map_or(true, |v| !p.local.is_arrow(v))) {
                return Err(Error::invalid(format!("point {}: {extra} is not a local arrow", p.id)));
            }
            for v in p.local.vertices() {
                if p.local.mult(v).is_none() {
                    return Err(Error::invalid(format!("point {}: vertex {} has no multiplicity", p.id, p.local.nodes[v].id)));
                }
            }
        }
        Ok(())
    }
}

/// Γ_C of a homogeneous f of degree d with generic linear g.
///
/// One vertex (1;d,1)[g_λ] per component carrying d_λ arrows on 1-edges; each
/// local resolution graph keeps its shape with (m) ↦ (m;d,1) and weight-2
/// edges, its arrows being replaced by 2-edges to the matching component
/// vertex. A local arrow–arrow edge (an A₁ point drawn without vertex) becomes
/// a 2-edge or loop between component vertices; it violates Assumption A and
/// is handled by the preprocessing blow-up.
pub fn build_homogeneous(data: &CurveData) -> Result<GammaCGraph> {
    data.check()?;
    let d = data.degree;
    let mut g = GammaCGraph::new();
    let mut comp = BTreeMap::new();
    for c in &data.components {
        let v = g.add_vertex(c.id.clone(), 1, d, 1, c.genus);
        comp.insert(c.id.clone(), v);
        for k in 0..c.degree {
            let a = g.add_arrow(format!("{}>{k}", c.id));
            g.add_edge(v, a, 1);
        }
    }
    for p in &data.points {
        let l = &p.local;
        let mut at = vec![usize::MAX; l.nodes.len()];
        for v in l.vertices() {
            let id = format!("{}.{}", p.id, l.nodes[v].id);
            if g.index_of(&id).is_some() {
                return Err(Error::invalid(format!("duplicate id {id}")));
            }
            at[v] = g.add_vertex(id, l.mult(v).unwrap(), d, 1, l.genus(v));
        }
        for a in l.arrows() {
            at[a] = comp[&p.branch_map[&l.nodes[a].id]];
        }
        for e in &l.edges {
            g.add_edge(at[e.a], at[e.b], 2);
        }
    }
    Ok(g)
}

/// A line arrangement: d lines 1..=d and the multiple points, each given by its lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub lines: usize,
    pub points: Vec<Vec<usize>>,
}

impl Arrangement {
    /// Format: `arrangement 1`, `lines <d>`, then one `point <i> <j> ...` per point.
    pub fn parse(text: &str) -> Result<Arrangement> {
        let mut lines = None;
        let mut points = Vec::new();
        for (n, t) in header(text, "arrangement")? {
            let num = |s: &str| s.parse::<usize>().map_err(|_| perr(n, format!("'{s}' is not a line number")));
            match t[0] {
                "lines" if t.len() == 2 => lines = Some(num(t[1])?),
                "point" => points.push(t[1..].iter().map(|s| num(s)).collect::<Result<Vec<_>>>()?),
                _ => return Err(perr(n, format!("unrecognised line '{}'", t.join(" ")))),
            }
        }
        let a = Arrangement { lines: lines.ok_or_else(|| perr(0, "missing 'lines' line"))?, points };
        a.check()?;
        Ok(a)
    }

    /// All d lines through one point.
    pub fn pencil(d: usize) -> Self {
        Arrangement { lines: d, points: vec![(1..=d).collect()] }
    }

    /// d lines in general position.
    pub fn generic(d: usize) -> Self {
        let mut points = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                points.push(vec![i, j]);
            }
        }
        Arrangement { lines: d, points }
    }

    /// Every point lies on ≥ 2 distinct lines and every pair of lines meets in exactly one point.
    pub fn check(&self) -> Result<()> {
        let d = self.lines;
        if d < 2 {
            return Err(Error::invalid("an arrangement needs at least two lines"));
        }
        let mut seen = vec![vec![0u32; d + 1]; d + 1];
        for (k, p) in self.points.iter().enumerate() {
            if p.len() < 2 {
                return Err(Error::invalid(format!("point {} lies on fewer than two lines", k + 1)));
            }
            for (x, &i) in p.iter().enumerate() {
                if i == 0 || i > d {
                    return Err(Error::invalid(format!("point {}: no line {i}", k + 1)));
                }
                for &j in &p[x + 1..] {
                    if i == j {
                        return Err(Error::invalid(format!("point {}: line {i} listed twice", k + 1)));
                    }
                    seen[i.min(j)][i.max(j)] += 1;
                }
            }
        }
        for i in 1..=d {
            for j in i + 1..=d {
                match seen[i][j] {
                    1 => {}
                    0 => return Err(Error::invalid(format!("lines {i} and {j} meet in no listed point"))),
                    _ => return Err(Error::invalid(format!("lines {i} and {j} meet in more than one point"))),
                }
            }
        }
        Ok(())
    }
}

/// Γ_C of a line arrangement: lines (1;d,1) with one arrow each, points
/// (m_j;d,1) joined by 2-edges to their lines.
pub fn build_arrangement(a: &Arrangement) -> Result<GammaCGraph> {
    a.check()?;
    let d = a.lines as i64;
    let mut g = GammaCGraph::new();
    let mut line = vec![0];
    for i in 1..=a.lines {
        let v = g.add_vertex(format!("L{i}"), 1, d, 1, 0);
        let r = g.add_arrow(format!("r{i}"));
        g.add_edge(v, r, 1);
        line.push(v);
    }
    for (k, p) in a.points.iter().enumerate() {
        let v = g.add_vertex(format!("P{}", k + 1), p.len() as i64, d, 1, 0);
        for &i in p {
            g.add_edge(v, line[i], 2);
        }
    }
    Ok(g)
}

/// Hirzebruch expansion p/q = [k₀, k₁, …] = k₀ − 1/(k₁ − ⋯) with k₀ ≥ 1, k_{i≥1} ≥ 2.
pub fn hirzebruch(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 1 || q < 1 {
        return Err(Error::pre(format!("hirzebruch expansion needs p, q ≥ 1, got {p}/{q}")));
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q != 0 {
        let k = (p + q - 1) / q;
        out.push(k);
        (p, q) = (q, k * q - p);
    }
    Ok(out)
}

/// Star-shaped graph of ∂F for f = f̃(x^a y^b, z): centre [μ̃] with euler I,
/// I legs p_s..p₁ from a/b and I legs q_t..q₁ from b/a (listed centre outward).
pub fn build_xayb(mu_tilde: i64, i: i64, a: i64, b: i64) -> Result<PlumbGraph> {
    if a < 1 || b < 1 || gcd(a, b) != 1 {
        return Err(Error::pre(format!("a={a}, b={b} must be positive and coprime")));
    }
    if i < 0 || mu_tilde < 0 {
        return Err(Error::pre("I and μ̃ must be non-negative"));
    }
    let mut g = PlumbGraph::new();
    let c = g.add_vertex("c", Some(i), mu_tilde, None);
    for (tag, cf) in [("p", hirzebruch(a, b)?), ("q", hirzebruch(b, a)?)] {
        for k in 0..i {
            let mut prev = c;
            for s in (1..cf.len()).rev() {
                let v = g.add_vertex(format!("{tag}{k}.{s}"), Some(cf[s]), 0, None);
                g.add_edge(prev, v, Sign::Plus);
                prev = v;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions() {
        assert_eq!(hirzebruch(3, 7).unwrap(), vec![1, 2, 4]);
        assert_eq!(hirzebruch(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(hirzebruch(1, 1).unwrap(), vec![1]);
        assert_eq!(hirzebruch(5, 1).unwrap(), vec![5]);
    }

    #[test]
    fn xayb_shapes() {
        let g = build_xayb(0, 4, 3, 7).unwrap();
        assert_eq!(g.nodes.len(), 17);
        let g = build_xayb(2, 3, 1, 1).unwrap();
        assert_eq!((g.nodes.len(), g.euler(0), g.genus(0)), (1, Some(3), 2));
        assert!(build_xayb(0, 1, 2, 4).is_err());
    }

    #[test]
    fn arrangement_checks() {
        assert!(Arrangement { lines: 3, points: vec![vec![1, 2]] }.check().is_err());
        assert!(Arrangement::generic(4).check().is_ok());
        let g = build_arrangement(&Arrangement::pencil(4)).unwrap();
        assert_eq!(g.vertices().count(), 5);
        assert!(g.check_valid().is_ok());
    }

    #[test]
    fn cylinder_needs_mults() {
        let mut r = PlumbGraph::new();
        let v = r.add_vertex("v", Some(-1), 0, None);
        let a = r.add_arrow("a", Some(1));
        r.add_edge(v, a, Sign::Plus);
        assert!(build_cylinder(&r).is_err());
        r.set_mult(v, Some(2));
        let g = build_cylinder(&r).unwrap();
        assert_eq!(g.edges[0].w, 2);
    }
}
