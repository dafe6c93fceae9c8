//! The nine end-to-end acceptance checks; prints one PASS/FAIL line each.

mod common;

use std::time::Instant;

use common::*;
use milnorplumb::algorithm::{extract_g1, run_collapse, run_main, transversal_data, G1Mode};
use milnorplumb::builders::{build_arrangement, build_cylinder, build_homogeneous, build_xayb, Arrangement, CurveData};
use milnorplumb::calculus::{chain_normal_form, closed, compare, invariant_signature, reduce, Comparison};
use milnorplumb::fixtures;
use milnorplumb::format::{parse_gammac, parse_plumb};
use milnorplumb::graph::{GammaCGraph, PlumbGraph, Sign};
use milnorplumb::invariants::{
    charpoly, charpoly_boundary, cyclo_expand, div_prime_j, intersection_data, orbifold_euler, rank_report,
    BiDivisor, CharpolyKind, CycloPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;

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

fn gc(name: &str) -> GammaCGraph {
    parse_gammac(fixtures::get(name).unwrap()).unwrap()
}

fn curve(name: &str) -> GammaCGraph {
    build_homogeneous(&CurveData::parse(fixtures::get(name).unwrap()).unwrap()).unwrap()
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// ∂F graph along the blow-up path, arrows dropped, reduced.
fn reduced_boundary(g: &GammaCGraph) -> Result<PlumbGraph, String> {
    Ok(reduce(&closed(&e(run_main(g))?.1.graph)))
}

fn single_vertex(r: &PlumbGraph) -> Option<(i64, i64, Vec<Sign>)> {
    let vs: Vec<usize> = r.vertices().collect();
    if vs.len() != 1 || r.nodes.len() != 1 {
        return None;
    }
    Some((r.euler(vs[0])?, r.genus(vs[0]), r.edges.iter().map(|e| e.sign).collect()))
}

fn criterion_1() -> Check {
    let g = gc("221.gc");
    let r = reduced_boundary(&g)?;
    ensure!(single_vertex(&r) == Some((-4, 0, vec![])), "reduced graph is not a single −4 vertex:\n{r:?}");
    let g1 = e(extract_g1(&g, G1Mode::Resolution))?;
    let printed = e(parse_plumb(fixtures::get("221_G1.pl").unwrap()))?;
    ensure!(e(compare(&g1, &printed))? == Comparison::Isomorphic, "G1 differs from the printed graph");
    let t = transversal_data(&g);
    ensure!(t.len() == 1, "{} branches", t.len());
    let t = &t[0];
    ensure!(t.gluing_tori == 1, "{} gluing tori", t.gluing_tori);
    ensure!(t.cutting_edges.iter().map(|c| c.d_e).collect::<Vec<_>>() == vec![2], "d(e) = {:?}", t.cutting_edges);
    ensure!(t.n_branches == 2, "#TΣ = {}", t.n_branches);
    Ok(())
}

fn criterion_2() -> Check {
    let g = gc("xyz3.gc");
    let (_, out) = e(run_main(&g))?;
    let big = &out.graph;
    let mut eulers: Vec<i64> = big.vertices().filter_map(|v| big.euler(v)).collect();
    eulers.sort();
    ensure!(eulers == vec![-1, -1, -1, -1, -1, -1, 0, 1, 2, 2, 2], "euler multiset {eulers:?}");
    ensure!(big.arrows().count() == 1, "{} arrows", big.arrows().count());
    ensure!((0..big.nodes.len()).all(|v| big.mult(v) == Some(1)), "multiplicities are not all 1");
    let printed = e(parse_plumb(fixtures::get("xyz3_G.pl").unwrap()))?;
    ensure!(e(compare(big, &printed))? == Comparison::Isomorphic, "G is not isomorphic to the printed graph");
    let r = reduce(&closed(big));
    ensure!(single_vertex(&r) == Some((-4, 0, vec![Sign::Minus])), "reduced graph:\n{r:?}");
    let rep = e(rank_report(&g))?;
    ensure!(rep.geneig1_j == vec![1], "geneig1_j = {:?}", rep.geneig1_j);
    ensure!(e(div_prime_j(&g, 0))? == BiDivisor::one_one(), "Div'_1 = {}", e(div_prime_j(&g, 0))?);
    Ok(())
}

fn criterion_3() -> Check {
    let r = reduced_boundary(&gc("347.gc"))?;
    let o = e(orbifold_euler(&r))?;
    ensure!(o.e == BigRational::new(4.into(), 21.into()), "orbifold euler {}", o.e);
    let model = reduce(&e(build_xayb(0, 4, 3, 7))?);
    let (a, b) = (e(invariant_signature(&r))?, e(invariant_signature(&model))?);
    ensure!(a == b, "signature {a:?} vs model {b:?}");
    ensure!(orbifold_euler(&model).map(|m| m.e) == Ok(o.e.clone()), "model graph has a different orbifold euler");
    Ok(())
}

fn criterion_4() -> Check {
    let (_, out) = e(run_main(&curve("c4.curve")))?;
    let d = e(intersection_data(&out.graph))?;
    ensure!(d.torsion() == ints(&[5]), "torsion {:?}", d.torsion());
    ensure!(d.corank_a == 0, "free rank {}", d.corank_a);
    let c = out.graph.index_of("C#0").ok_or("no central vertex")?;
    let mut bare = out.graph.clone();
    bare.set_euler(c, None);
    let solved = e(bare.solve_euler_numbers())?;
    ensure!(solved.euler(c) == Some(1), "central euler {:?}", solved.euler(c));
    Ok(())
}

fn criterion_5() -> Check {
    let g = build_arrangement(&e(Arrangement::parse(fixtures::get("a3.arr").unwrap()))?).unwrap();
    let b = e(charpoly_boundary(&g))?;
    ensure!(b.is_exact(), "A3: no exact formula applies");
    ensure!(b.poly == CycloPoly::tk(3, 4).mul(&CycloPoly::tk(1, 7)), "A3 charpoly {}", b.poly);
    let (_, out) = e(run_main(&g))?;
    let c = out.graph.stats().c;
    let corank = e(intersection_data(&out.graph))?.corank_a;
    ensure!(c == 6 && corank == 5, "c(G) = {c}, corank A = {corank}");
    for d in 3..=6 {
        let g = e(build_arrangement(&Arrangement::pencil(d)))?;
        let b = e(charpoly_boundary(&g))?;
        let want = CycloPoly::tk(1, 1).mul(&CycloPoly::tk(d as u64, d as i64 - 2));
        ensure!(b.is_exact() && b.poly == want, "pencil {d}: {}", b.poly);
        let rank = e(rank_report(&g))?.rank_h1_boundary;
        ensure!(rank == ((d - 1) * (d - 1)) as i64, "pencil {d}: rank {rank}");
    }
    Ok(())
}

fn criterion_6() -> Check {
    let g = curve("acirr10.curve");
    let rep = e(rank_report(&g))?;
    ensure!(rep.rank_h1_boundary == 70, "rank H1 = {}", rep.rank_h1_boundary);
    let (_, out) = e(run_main(&g))?;
    let det = e(intersection_data(&out.graph))?.det_abs;
    ensure!(det == Some(BigInt::from(50)), "|det A| = {det:?}");
    let b = e(charpoly_boundary(&g))?;
    let want = CycloPoly::tk(1, 62).mul(&CycloPoly::tk(10, 2)).div(&CycloPoly::tk(2, 1).mul(&CycloPoly::tk(5, 2)));
    ensure!(b.is_exact() && b.poly == want, "charpoly {}", b.poly);
    ensure!(b.poly.degree() == 70 && b.poly.mult_at_one() == 61, "degree {} / eigenvalue-1 part {}", b.poly.degree(), b.poly.mult_at_one());
    Ok(())
}

fn criterion_7() -> Check {
    let g = curve("quartic27.curve");
    let r = reduced_boundary(&g)?;
    let n = chain_normal_form(&r).ok_or("reduced quartic graph is not a chain")?;
    let mut chain: Vec<i64> = n.vertices().filter_map(|v| n.euler(v)).collect();
    ensure!(n.edges.len() + 1 == chain.len(), "not a chain");
    if chain.first() > chain.last() {
        chain.reverse();
    }
    ensure!(chain == vec![-2, -8, -2], "normal form {chain:?}");
    let (_, out) = e(run_main(&g))?;
    let t = e(intersection_data(&out.graph))?.torsion();
    ensure!(t == ints(&[28]), "quartic torsion {t:?}");
    let (_, out) = e(run_main(&curve("cubic.curve")))?;
    let t = e(intersection_data(&out.graph))?.torsion();
    ensure!(t == ints(&[2, 6]), "cubic torsion {t:?}");
    Ok(())
}

fn criterion_8() -> Check {
    let text = fixtures::get("cyl.pl").unwrap();
    let g = e(build_cylinder(&e(parse_plumb(text))?))?;
    let (_, out) = e(run_collapse(&g))?;
    let h = &out.graph;
    let vs: Vec<usize> = h.vertices().collect();
    let centre: Vec<usize> = vs.iter().copied().filter(|&v| h.genus(v) == 5).collect();
    ensure!(vs.len() == 3 && centre.len() == 1, "Ĝ has {} vertices, genus-5 centres {:?}", vs.len(), centre);
    let c = centre[0];
    for v in vs.iter().copied().filter(|&v| v != c) {
        let nb: Vec<usize> = h.incident(v).into_iter().map(|k| h.edges[k].other(v)).collect();
        let ok = h.euler(v) == Some(0) && h.genus(v) == 0 && nb.len() == 2 && nb.contains(&c) && nb.iter().any(|&u| h.is_arrow(u));
        ensure!(ok, "leg vertex {} is not a 0-vertex between the centre and an arrow", h.nodes[v].id);
    }
    let rank = e(rank_report(&g))?.rank_h1_boundary;
    ensure!(rank == 11, "rank H1 = {rank}");
    let p = e(charpoly(CharpolyKind::PhiHor, &g, None))?;
    let want = CycloPoly::tk(10, 2).mul(&CycloPoly::tk(1, 1)).div(&CycloPoly::tk(5, 2));
    ensure!(p == want && p.degree() == 11, "P_Φ,hor = {p}");
    ensure!(e(cyclo_expand(&p))? == big(&a_campo(text)), "A'Campo oracle disagrees");
    Ok(())
}

fn criterion_9() -> Check {
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    runner
        .run(&arb_gammac(), |(name, g)| {
            all_gammac(&g).map_err(|m| proptest::test_runner::TestCaseError::fail(format!("{name}: {m}")))
        })
        .map_err(|err| err.to_string())?;
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    runner
        .run(&arb_closed_plumb(), |p| {
            prop_steps_preserve(&closed(&p)).map_err(proptest::test_runner::TestCaseError::fail)
        })
        .map_err(|err| err.to_string())?;
    for m in 1..=8 {
        for n in 0..=8 {
            for nu in 1..=8 {
                prop_lambda(m, n, nu)?;
                for d in 1..=6 {
                    prop_xi(m, n, nu, d)?;
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Check); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(()) => println!("criterion {n}: PASS ({:.2?})", t.elapsed()),
            Err(why) => {
                println!("criterion {n}: FAIL ({:.2?}) {}", t.elapsed(), why.replace('\n', " "));
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
