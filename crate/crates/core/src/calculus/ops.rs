//! The individual moves. Every move returns a fresh graph; node indices of the
//! input are not preserved when a node disappears.

use crate::error::{Error, Result};
use crate::graph::{PKind, PlumbGraph, Sign};

fn fail(g: &PlumbGraph, v: usize, rule: &str, why: &str) -> Error {
    Error::pre(format!("{rule} at {}: {why}", g.nodes[v].id))
}

fn require_vertex(g: &PlumbGraph, v: usize, rule: &str) -> Result<()> {
    if v >= g.nodes.len() {
        return Err(Error::pre(format!("{rule}: no node with index {v}")));
    }
    if g.is_arrow(v) {
        return Err(fail(g, v, rule, "the node is an arrowhead"));
    }
    Ok(())
}

fn has_loop(g: &PlumbGraph, v: usize) -> bool {
    g.edges.iter().any(|e| e.is_loop() && e.a == v)
}

fn shift_euler(g: &mut PlumbGraph, v: usize, by: i64) {
    if let Some(e) = g.euler(v) {
        g.set_euler(v, Some(e + by));
    }
}

/// R0(a): reverse the signs of all non-loop edges at v. The multiplicity of v
/// would change sign, so a non-zero one is dropped.
pub fn r0a(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    require_vertex(g, v, "R0a")?;
    let mut out = g.clone();
    for e in out.edges.iter_mut() {
        if e.touches(v) && !e.is_loop() {
            e.sign = e.sign.flip();
        }
    }
    if out.mult(v).is_some_and(|m| m != 0) {
        out.set_mult(v, None);
    }
    Ok(out)
}

/// R1: blow down a ±1 vertex of genus 0 with at most two edge ends.
pub fn r1_blowdown(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    const R: &str = "R1";
    require_vertex(g, v, R)?;
    let eps = match g.euler(v) {
        Some(e @ (1 | -1)) => Sign::from_value(e),
        _ => return Err(fail(g, v, R, "euler number is not ±1")),
    };
    if g.genus(v) != 0 {
        return Err(fail(g, v, R, "genus is not 0"));
    }
    if g.dash_count(v) > 0 {
        return Err(fail(g, v, R, "the vertex supports a dash-arrow"));
    }
    if has_loop(g, v) {
        return Err(fail(g, v, R, "the vertex carries a loop"));
    }
    let inc = g.incident(v);
    let mut out = g.clone();
    match inc.len() {
        1 => {
            let u = g.edges[inc[0]].other(v);
            if g.is_arrow(u) {
                return Err(fail(g, v, R, "its only edge supports an arrowhead"));
            }
            shift_euler(&mut out, u, -eps.value());
        }
        2 => {
            let (e1, e2) = (g.edges[inc[0]], g.edges[inc[1]]);
            let (u1, u2) = (e1.other(v), e2.other(v));
            let eps0 = eps.times(e1.sign).times(e2.sign).flip();
            if u1 == u2 {
                // R1c: parallel edges become a loop
                shift_euler(&mut out, u1, -2 * eps.value());
                out.add_edge(u1, u1, eps0);
            } else {
                match (g.is_arrow(u1), g.is_arrow(u2)) {
                    (true, true) => return Err(fail(g, v, R, "both edges support arrowheads")),
                    (false, true) => shift_euler(&mut out, u1, -eps.value()),
                    (true, false) => shift_euler(&mut out, u2, -eps.value()),
                    (false, false) => {
                        shift_euler(&mut out, u1, -eps.value());
                        shift_euler(&mut out, u2, -eps.value());
                    }
                }
                out.add_edge(u1, u2, eps0);
            }
        }
        0 => return Err(fail(g, v, R, "isolated vertex")),
        _ => return Err(fail(g, v, R, "more than two edges")),
    }
    out.remove_nodes(&[v]);
    Ok(out)
}

/// The 0-vertex shared by R3 and R5: euler 0, genus 0, no arrows or dash-arrows,
/// exactly two non-loop edges, both to non-arrowheads. Returns the two edges.
fn zero_vertex(g: &PlumbGraph, v: usize, rule: &str) -> Result<(usize, usize)> {
    require_vertex(g, v, rule)?;
    if g.euler(v) != Some(0) {
        return Err(fail(g, v, rule, "euler number is not 0"));
    }
    if g.genus(v) != 0 {
        return Err(fail(g, v, rule, "genus is not 0"));
    }
    if g.dash_count(v) > 0 {
        return Err(fail(g, v, rule, "the vertex supports a dash-arrow"));
    }
    if has_loop(g, v) {
        return Err(fail(g, v, rule, "the vertex carries a loop"));
    }
    let inc = g.incident(v);
    if inc.len() != 2 {
        return Err(fail(g, v, rule, "the vertex does not have exactly two edges"));
    }
    if inc.iter().any(|&e| g.is_arrow(g.edges[e].other(v))) {
        return Err(fail(g, v, rule, "the vertex supports an arrow"));
    }
    Ok((inc[0], inc[1]))
}

/// R3: absorb a 0-vertex between two distinct vertices, merging them.
pub fn r3_absorb(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    absorb(g, v, None)
}

/// R3 with a chosen survivor (the end whose edges keep their signs).
fn absorb(g: &PlumbGraph, v: usize, survivor: Option<usize>) -> Result<PlumbGraph> {
    const R: &str = "R3";
    let (mut ea, mut eb) = zero_vertex(g, v, R)?;
    if survivor.is_some_and(|w| g.edges[eb].other(v) == w) {
        std::mem::swap(&mut ea, &mut eb);
    }
    let (i, j) = (g.edges[ea].other(v), g.edges[eb].other(v));
    if i == j {
        return Err(fail(g, v, R, "both edges go to the same vertex"));
    }
    let s = g.edges[ea].sign.times(g.edges[eb].sign).flip();
    let mut out = g.clone();
    let merged_euler = match (g.euler(i), g.euler(j)) {
        _ if g.dash_count(i) + g.dash_count(j) > 0 => None,
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    let merged_mult = match (g.mult(i), g.mult(j)) {
        (Some(a), Some(b)) if b == s.value() * a => Some(a),
        _ => None,
    };
    if let PKind::Vertex { euler, genus, mult } = &mut out.nodes[i].kind {
        *euler = merged_euler;
        *genus = g.genus(i) + g.genus(j);
        *mult = merged_mult;
    }
    for (k, e) in out.edges.iter_mut().enumerate() {
        if k == ea || k == eb || !e.touches(j) {
            continue;
        }
        if !e.is_loop() {
            e.sign = e.sign.times(s);
        }
        if e.a == j {
            e.a = i;
        }
        if e.b == j {
            e.b = i;
        }
    }
    for d in out.dashes.iter_mut() {
        if d.at == j {
            d.at = i;
        }
    }
    out.remove_nodes(&[v, j]);
    Ok(out)
}

/// R5: a 0-vertex doubly joined, with opposite signs, to one vertex becomes a handle.
pub fn r5_handle(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    const R: &str = "R5";
    let (ea, eb) = zero_vertex(g, v, R)?;
    let (i, j) = (g.edges[ea].other(v), g.edges[eb].other(v));
    if i != j {
        return Err(fail(g, v, R, "the two edges go to different vertices"));
    }
    if g.edges[ea].sign == g.edges[eb].sign {
        return Err(fail(g, v, R, "the two edges have the same sign"));
    }
    let mut out = g.clone();
    out.set_genus(i, g.genus(i) + 1);
    out.remove_nodes(&[v]);
    Ok(out)
}

/// R8: a genus-0 leaf carrying one dash-arrow is absorbed into its neighbour,
/// which inherits the dash-arrow and loses its euler number.
pub fn r8_annulus(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    const R: &str = "R8";
    require_vertex(g, v, R)?;
    if g.dash_count(v) != 1 {
        return Err(fail(g, v, R, "the vertex does not carry exactly one dash-arrow"));
    }
    if g.genus(v) != 0 {
        return Err(fail(g, v, R, "genus is not 0"));
    }
    let inc = g.incident(v);
    if inc.len() != 1 || g.edges[inc[0]].is_loop() {
        return Err(fail(g, v, R, "the vertex does not have exactly one edge"));
    }
    let u = g.edges[inc[0]].other(v);
    if g.is_arrow(u) {
        return Err(fail(g, v, R, "the vertex supports an arrow"));
    }
    let mut out = g.clone();
    for d in out.dashes.iter_mut() {
        if d.at == v {
            d.at = u;
        }
    }
    out.set_euler(u, None);
    out.remove_nodes(&[v]);
    Ok(out)
}

/// Inverse R1 on a non-loop edge between two vertices: inserts a new vertex of
/// euler `eps` with + signs on both halves (the far sign absorbs the original).
fn blow_up_edge(g: &PlumbGraph, e: usize, eps: Sign) -> PlumbGraph {
    let ed = g.edges[e];
    let mut out = g.clone();
    // ε_orig = −ε·ε₁·ε₂ with ε₁ = + gives ε₂ = −ε·ε_orig
    let s2 = eps.times(ed.sign).flip();
    let mult = match (g.mult(ed.a), g.mult(ed.b)) {
        (Some(a), Some(b)) => {
            let m = -eps.value() * (a + s2.value() * b);
            (m >= 0).then_some(m)
        }
        _ => None,
    };
    let id = out.fresh_id("bu");
    let x = out.add_vertex(id, Some(eps.value()), 0, mult);
    shift_euler(&mut out, ed.a, eps.value());
    shift_euler(&mut out, ed.b, eps.value());
    out.remove_edges(&[e]);
    out.add_edge(ed.a, x, Sign::Plus);
    out.add_edge(x, ed.b, s2);
    out
}

/// R6 (naive): deletes the pattern 0-leaf — e-vertex — Γ, where the e-vertex has
/// genus 0 and exactly one further edge into Γ. Realised as |e| blow-up/blow-down
/// pairs driving e to 0, then R3 on the middle vertex.
pub fn r6_naive(g: &PlumbGraph, v: usize) -> Result<PlumbGraph> {
    const R: &str = "R6";
    require_vertex(g, v, R)?;
    if g.euler(v) != Some(0) || g.genus(v) != 0 || g.dash_count(v) > 0 {
        return Err(fail(g, v, R, "pattern absent: not a plain 0-vertex"));
    }
    let inc = g.incident(v);
    if inc.len() != 1 || g.edges[inc[0]].is_loop() {
        return Err(fail(g, v, R, "pattern absent: the 0-vertex is not a leaf"));
    }
    let u = g.edges[inc[0]].other(v);
    if g.is_arrow(u) || g.genus(u) != 0 || g.dash_count(u) > 0 || has_loop(g, u) {
        return Err(fail(g, v, R, "pattern absent: bad middle vertex"));
    }
    let uinc = g.incident(u);
    if uinc.len() != 2 {
        return Err(fail(g, v, R, "pattern absent: the middle vertex must have exactly one edge into Γ"));
    }
    let w = uinc.iter().map(|&e| g.edges[e].other(u)).find(|&x| x != v).unwrap();
    if g.is_arrow(w) {
        return Err(fail(g, v, R, "pattern absent: Γ is empty"));
    }
    let Some(mut e) = g.euler(u) else {
        return Err(fail(g, v, R, "middle vertex has no euler number"));
    };
    let (vid, uid) = (g.nodes[v].id.clone(), g.nodes[u].id.clone());
    let mut cur = g.clone();
    while e != 0 {
        let eps = Sign::from_value(-e);
        let (vi, ui) = (cur.index_of(&vid).unwrap(), cur.index_of(&uid).unwrap());
        let edge = cur.incident(vi)[0];
        debug_assert_eq!(cur.edges[edge].other(vi), ui);
        cur = blow_up_edge(&cur, edge, eps);
        // the old 0-leaf now has euler ε: blow it down, the new vertex becomes the 0-leaf
        let vi = cur.index_of(&vid).unwrap();
        cur = r1_blowdown(&cur, vi)?;
        let x = cur.nodes.len() - 1;
        cur.nodes[x].id = vid.clone();
        e = cur.euler(cur.index_of(&uid).unwrap()).unwrap();
    }
    let ui = cur.index_of(&uid).unwrap();
    let wi = cur.index_of(&g.nodes[w].id).unwrap();
    absorb(&cur, ui, Some(wi))
}
