#![allow(dead_code)]

use milnorplumb::algorithm::{run_collapse, run_main};
use milnorplumb::builders::{build_arrangement, build_cylinder, build_homogeneous, Arrangement, CurveData};
use milnorplumb::calculus::{closed, invariant_signature, reduce_step, ReduceOptions};
use milnorplumb::fixtures;
use milnorplumb::format::{parse_gammac, parse_plumb};
use milnorplumb::graph::{GammaCGraph, PlumbGraph, Sign};
use milnorplumb::invariants::{
    intersection_data, lambda_div, omega_d, p_h_cover, xi_d, CycloPoly, PhVariant,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::HashMap;

/// Every Γ_C reachable from the fixture corpus.
pub fn corpus() -> Vec<(String, GammaCGraph)> {
    let mut out = Vec::new();
    for (name, text) in fixtures::with_ext("gc") {
        out.push((name.to_string(), parse_gammac(text).unwrap()));
    }
    for (name, text) in fixtures::with_ext("curve") {
        // the degree-10 curve is large; it gets its own acceptance check
        if name.starts_with("acirr") {
            continue;
        }
        out.push((name.to_string(), build_homogeneous(&CurveData::parse(text).unwrap()).unwrap()));
    }
    for (name, text) in fixtures::with_ext("arr") {
        out.push((name.to_string(), build_arrangement(&Arrangement::parse(text).unwrap()).unwrap()));
    }
    for (name, text) in fixtures::with_ext("pl") {
        // resolution graphs only; the open-book graphs in the corpus are not curve germs
        let p = parse_plumb(text).unwrap();
        let tree = p.is_connected() && p.edges.len() + 1 == p.nodes.len();
        let germ = p.arrows().all(|a| p.mult(a).is_some_and(|m| m > 0));
        if tree && germ && p.has_mults() && p.arrows().next().is_some() {
            out.push((name.to_string(), build_cylinder(&p).unwrap()));
        }
    }
    out
}

/// Embedded resolution graph built by blowing up: start from an ordinary
/// k-fold point, then blow up edges (vertex–vertex or vertex–arrow) and free
/// points of vertices. Multiplicities stay a solution of e·m + Σ m' = 0.
pub fn blowup_graph(k: usize, moves: &[(u8, usize)]) -> PlumbGraph {
    let mut g = PlumbGraph::new();
    let e = g.add_vertex("E0", Some(-1), 0, Some(k as i64));
    for i in 0..k {
        let a = g.add_arrow(format!("r{i}"), Some(1));
        g.add_edge(e, a, Sign::Plus);
    }
    for (n, &(kind, pick)) in moves.iter().enumerate() {
        let id = format!("E{}", n + 1);
        if kind % 2 == 0 {
            let k = pick % g.edges.len();
            let (a, b) = (g.edges[k].a, g.edges[k].b);
            let m = g.mult(a).unwrap() + g.mult(b).unwrap();
            let w = g.add_vertex(id, Some(-1), 0, Some(m));
            for v in [a, b] {
                if !g.is_arrow(v) {
                    g.set_euler(v, Some(g.euler(v).unwrap() - 1));
                }
            }
            g.edges[k].b = w;
            g.add_edge(w, b, Sign::Plus);
        } else {
            let vs: Vec<usize> = g.vertices().collect();
            let v = vs[pick % vs.len()];
            let w = g.add_vertex(id, Some(-1), 0, g.mult(v));
            g.set_euler(v, Some(g.euler(v).unwrap() - 1));
            g.add_edge(v, w, Sign::Plus);
        }
    }
    g
}

/// d lines, the first `k` through one point, the rest generic.
pub fn near_pencil(d: usize, k: usize) -> Arrangement {
    let k = k.clamp(2, d);
    let mut points = vec![(1..=k).collect::<Vec<_>>()];
    for i in 1..=d {
        for j in i + 1..=d {
            if j > k {
                points.push(vec![i, j]);
            }
        }
    }
    Arrangement { lines: d, points }
}

pub fn arb_gammac() -> impl Strategy<Value = (String, GammaCGraph)> {
    let corpus = corpus();
    let n = corpus.len();
    prop_oneof![
        (0..n).prop_map(move |i| corpus[i].clone()),
        (1usize..=3, prop::collection::vec((0u8..2, 0usize..16), 0..4)).prop_map(|(k, moves)| {
            let p = blowup_graph(k, &moves);
            (format!("cylinder k={k} {moves:?}"), build_cylinder(&p).unwrap())
        }),
        (2usize..=5, 2usize..=5).prop_map(|(d, k)| {
            let a = near_pencil(d, k);
            (format!("near-pencil d={d} k={k}"), build_arrangement(&a).unwrap())
        }),
    ]
}

pub fn arb_closed_plumb() -> impl Strategy<Value = PlumbGraph> {
    (1usize..=3, prop::collection::vec((0u8..2, 0usize..16), 0..5)).prop_map(|(k, moves)| blowup_graph(k, &moves))
}

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($c:expr, $($t:tt)*) => {
        if !$c {
            return Err(format!($($t)*));
        }
    };
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// (a) outputs of both algorithms carry a valid multiplicity system.
pub fn prop_mult_system(g: &GammaCGraph) -> Check {
    for (path, out) in [("main", e(run_main(g))?.1), ("collapse", e(run_collapse(g))?.1)] {
        let c = e(out.graph.check_multiplicity_system())?;
        ensure!(c.ok, "{path}: multiplicity system fails at {:?}", c.failures);
    }
    Ok(())
}

/// (b) every single reduction step preserves the invariant signature.
pub fn prop_steps_preserve(g: &PlumbGraph) -> Check {
    let mut cur = g.clone();
    let mut sig = e(invariant_signature(&cur))?;
    for _ in 0..200 {
        let Some((step, next)) = reduce_step(&cur, ReduceOptions::default()) else {
            return Ok(());
        };
        let s = e(invariant_signature(&next))?;
        ensure!(s.equivalent(&sig), "{} at {} changed {sig:?} into {s:?}", step.rule.name(), step.at);
        (cur, sig) = (next, s);
    }
    Err("reduction did not terminate in 200 steps".into())
}

/// (b) on both ∂F graphs of a Γ_C.
pub fn prop_reduce_gammac(g: &GammaCGraph) -> Check {
    prop_steps_preserve(&closed(&e(run_main(g))?.1.graph))?;
    prop_steps_preserve(&closed(&e(run_collapse(g))?.1.graph))
}

/// (c) Λ(m;n,ν) has mν points and projects to (t^m−1)^ν and (t^{mν/(m,n)}−1)^{(m,n)}.
pub fn prop_lambda(m: i64, n: i64, nu: i64) -> Check {
    let d = e(lambda_div(m, n, nu))?;
    ensure!(d.total() == m * nu, "total {} != {}", d.total(), m * nu);
    let g = num_integer::gcd(m, n);
    ensure!(e(d.hor_charpoly())? == CycloPoly::tk(m as u64, nu), "horizontal projection of Λ({m};{n},{nu})");
    ensure!(
        e(d.ver_charpoly())? == CycloPoly::tk((m * nu / g) as u64, g),
        "vertical projection of Λ({m};{n},{nu})"
    );
    Ok(())
}

/// (d) Ξ^(d)(Λ(m;n,ν)) = Λ(m;n,dν); also Ω^(d)∘Ξ^(d) = d·id.
pub fn prop_xi(m: i64, n: i64, nu: i64, d: i64) -> Check {
    let l = e(lambda_div(m, n, nu))?;
    let x = e(xi_d(&l, d))?;
    ensure!(x == e(lambda_div(m, n, d * nu))?, "Ξ^({d}) Λ({m};{n},{nu})");
    ensure!(e(omega_d(&x, d))? == l.scale(d), "Ω^({d})Ξ^({d}) Λ({m};{n},{nu})");
    Ok(())
}

/// (e) deg P_𝔥 = c(G) and its (t−1)-multiplicity is c(Γ_C).
pub fn prop_p_h(g: &GammaCGraph) -> Check {
    let (gab, out) = e(run_main(g))?;
    let p = e(p_h_cover(g, PhVariant::Full))?;
    let (cg, cgc) = (out.graph.stats().c, gab.stats().c);
    ensure!(p.degree() == cg, "deg P_h = {} but c(G) = {cg}", p.degree());
    ensure!(p.mult_at_one() == cgc, "P_h(1)-multiplicity {} but c(Γ_C) = {cgc}", p.mult_at_one());
    Ok(())
}

/// (f) the blow-up and collapsing paths give graphs with equal invariant signatures.
pub fn prop_paths_agree(g: &GammaCGraph) -> Check {
    let a = e(invariant_signature(&e(run_main(g))?.1.graph))?;
    let b = e(invariant_signature(&e(run_collapse(g))?.1.graph))?;
    ensure!(a.equivalent(&b), "main {a:?} vs collapse {b:?}");
    Ok(())
}

/// (g) 1 ≤ corank(A,I) − corank A ≤ #A on G.
pub fn prop_corank_gap(g: &GammaCGraph) -> Check {
    let out = e(run_main(g))?.1.graph;
    let d = e(intersection_data(&out))?;
    let n_a = d.n_arrows as i64;
    if n_a == 0 {
        return Ok(());
    }
    let gap = d.corank_ai as i64 - d.corank_a as i64;
    ensure!((1..=n_a).contains(&gap), "corank gap {gap} outside [1, {n_a}]");
    Ok(())
}

pub fn all_gammac(g: &GammaCGraph) -> Check {
    prop_mult_system(g)?;
    prop_reduce_gammac(g)?;
    prop_p_h(g)?;
    prop_paths_agree(g)?;
    prop_corank_gap(g)
}

// ---- integer polynomials for the oracles ----

pub type Poly = Vec<i128>;

pub fn pmul(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn tk(k: usize) -> Poly {
    let mut p = vec![0; k + 1];
    p[0] = -1;
    p[k] = 1;
    p
}

/// Exact division by a monic polynomial; panics on a remainder.
pub fn pdiv(num: &[i128], den: &[i128]) -> Poly {
    let mut r = num.to_vec();
    let dl = den.len() - 1;
    assert_eq!(den[dl], 1);
    let mut q = vec![0; num.len() - dl];
    for i in (0..q.len()).rev() {
        let c = r[i + dl];
        for (j, d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
        q[i] = c;
    }
    assert!(r.iter().all(|&x| x == 0), "non-zero remainder");
    q
}

pub fn big(p: &[i128]) -> Vec<BigInt> {
    p.iter().map(|&x| BigInt::from(x)).collect()
}

/// A'Campo: Δ(t) = (t−1)·∏_v (t^{m_v}−1)^{δ_v−2}, read straight from the
/// fixture text of an embedded resolution graph.
pub fn a_campo(text: &str) -> Poly {
    let mut mult = HashMap::new();
    let mut deg: HashMap<String, i64> = HashMap::new();
    for line in text.lines() {
        let t: Vec<&str> = line.split_whitespace().collect();
        match t.first() {
            Some(&"vertex") => {
                let m = t.iter().find_map(|s| s.strip_prefix("m=")).unwrap().parse::<usize>().unwrap();
                mult.insert(t[1].to_string(), m);
            }
            Some(&"edge") => {
                for v in &t[1..3] {
                    *deg.entry(v.to_string()).or_default() += 1;
                }
            }
            _ => {}
        }
    }
    let (mut num, mut den) = (tk(1), vec![1]);
    for (v, &m) in &mult {
        let k = deg.get(v).copied().unwrap_or(0) - 2;
        for _ in 0..k.abs() {
            if k > 0 {
                num = pmul(&num, &tk(m));
            } else {
                den = pmul(&den, &tk(m));
            }
        }
    }
    pdiv(&num, &den)
}

