use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use milnorplumb::algorithm::{
    blowup_assumption_a, blowup_assumption_b, extract_g1, extract_g2, run_collapse, run_main, transversal_data,
    G1Mode,
};
use milnorplumb::builders::{
    build_arrangement, build_cylinder, build_homogeneous, build_xayb, Arrangement, CurveData,
};
use milnorplumb::calculus::{chain_normal_form, closed, invariant_signature, reduce_traced, ReduceOptions};
use milnorplumb::format::{parse_gammac, parse_plumb, sniff, write_gammac, write_plumb, Flavor};
use milnorplumb::graph::{GammaCGraph, PlumbGraph};
use milnorplumb::invariants::{
    charpoly, charpoly_boundary, div_phi, div_prime_j, intersection_data, orbifold_euler, rank_report,
    BoundaryStatus, CharpolyKind, CycloPoly,
};
use milnorplumb::Error;

#[derive(Parser)]
#[command(name = "milnorplumb", version, about = "Plumbing graphs and monodromy invariants of Milnor fiber boundaries")]
struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a file and run the structural checks for its format.
    Validate { file: PathBuf },
    /// Blow up violations of Assumption A or B.
    Preprocess {
        #[arg(long, value_enum)]
        assumption: Assumption,
        input: PathBuf,
        output: PathBuf,
    },
    /// Main Algorithm (after the A and B blow-ups): Γ_C ↦ G.
    MainAlg {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Collapsing Main Algorithm (after the A blow-ups): Γ_C ↦ Ĝ.
    CollapseAlg {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// G₁ or the G₂,ⱼ graphs.
    Extract {
        #[arg(long, value_enum)]
        part: Part,
        #[arg(long, value_enum, default_value = "boundary")]
        mode: Mode,
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Reduce with the oriented plumbing calculus.
    Reduce {
        #[arg(long)]
        no_r5: bool,
        /// Keep arrows and multiplicities instead of reducing the closed graph.
        #[arg(long)]
        keep_arrows: bool,
        /// Rewrite a reduced chain into its normal form.
        #[arg(long)]
        normal_form: bool,
        /// Print each applied move to stderr.
        #[arg(long)]
        trace: bool,
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Invariant signature of a plumbing graph.
    Signature { input: PathBuf },
    /// Ranks, eigenvalue-1 data and transversal data of Γ_C.
    Invariants { input: PathBuf },
    /// Closed-form characteristic polynomial.
    Charpoly {
        #[arg(long)]
        which: String,
        #[arg(long)]
        branch: Option<usize>,
        input: PathBuf,
    },
    /// Characteristic polynomial of the monodromy on H₁(∂F).
    BoundaryCharpoly { input: PathBuf },
    /// Smith normal form of the intersection matrix.
    Snf { input: PathBuf },
    /// Orbifold Euler number of a star-shaped graph.
    OrbifoldEuler { input: PathBuf },
    /// Build Γ_C (or a plumbing graph) from data.
    Build {
        #[command(subcommand)]
        what: Build,
    },
}

#[derive(Subcommand)]
enum Build {
    /// Γ_C of a cylinder from a resolution graph with multiplicities.
    Cylinder {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Γ_C of a homogeneous singularity from a curve data file.
    Homogeneous {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Γ_C of a line arrangement from an arrangement file.
    Arrangement {
        input: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Star-shaped plumbing graph of x^a y^b + z^I-type germs.
    Xayb {
        mu_tilde: i64,
        i: i64,
        a: i64,
        b: i64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Assumption {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    G1,
    G2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Resolution,
    Boundary,
    BoundaryMinusVg,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Res<T> = Result<T, Failure>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_gammac(path: &Path) -> Res<GammaCGraph> {
    let g = parse_gammac(&read(path)?)?;
    g.check_valid()?;
    Ok(g)
}

fn load_plumb(path: &Path) -> Res<PlumbGraph> {
    let g = parse_plumb(&read(path)?)?;
    g.check_structure()?;
    Ok(g)
}

fn poly(p: &CycloPoly) -> Value {
    let expanded = match p.expand() {
        Ok(c) => Value::Array(c.iter().map(|x| Value::String(x.to_string())).collect()),
        Err(_) => Value::Null,
    };
    json!({
        "factored": p.to_string(),
        "degree": p.degree(),
        "mult_at_one": p.mult_at_one(),
        "coefficients": expanded,
    })
}

fn big_list<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn signature_report(g: &PlumbGraph) -> Res<Map<String, Value>> {
    let s = invariant_signature(g)?;
    let mut r = Map::new();
    r.insert("cg".into(), json!(s.cg));
    r.insert("h1rank".into(), json!(s.h1rank));
    r.insert("h1rank_ai".into(), json!(s.h1rank_ai));
    r.insert("arrows".into(), json!(s.n_arrows));
    r.insert("dasharrows".into(), json!(s.n_dashes));
    r.insert("corank_a".into(), json!(s.corank_a));
    r.insert("det_abs".into(), json!(s.det_abs.to_string()));
    r.insert("torsion".into(), big_list(&s.torsion));
    Ok(r)
}

fn run(cli: &Cli) -> Res<Option<Map<String, Value>>> {
    let mut r = Map::new();
    match &cli.cmd {
        Cmd::Validate { file } => {
            let text = read(file)?;
            let kind = match sniff(&text) {
                Some(Flavor::GammaC) => {
                    let g = parse_gammac(&text)?;
                    g.check_valid()?;
                    let v = g.validate();
                    r.insert("assumption_a_violations".into(), json!(v.assumption_a_violations.len()));
                    r.insert("assumption_b_violations".into(), json!(v.assumption_b_violations.len()));
                    "gammaC"
                }
                Some(Flavor::Plumb) => {
                    let g = parse_plumb(&text)?;
                    g.check_structure()?;
                    if g.has_mults() {
                        let m = g.check_multiplicity_system()?;
                        r.insert("multiplicity_system".into(), json!(m.ok));
                    }
                    "plumb"
                }
                None if text.trim_start().starts_with("curve") => {
                    CurveData::parse(&text)?.check()?;
                    "curve"
                }
                None if text.trim_start().starts_with("arrangement") => {
                    Arrangement::parse(&text)?.check()?;
                    "arrangement"
                }
                None => return Err(Error::Parse { line: 1, msg: "unknown header".into() }.into()),
            };
            r.insert("format".into(), json!(kind));
            r.insert("valid".into(), json!(true));
        }
        Cmd::Preprocess { assumption, input, output } => {
            let g = load_gammac(input)?;
            let h = match assumption {
                Assumption::A => blowup_assumption_a(&g),
                Assumption::B => blowup_assumption_b(&g),
            };
            emit(Some(output), &write_gammac(&h))?;
            return Ok(None);
        }
        Cmd::MainAlg { input, o } => {
            let (_, out) = run_main(&load_gammac(input)?)?;
            emit(o.as_deref(), &write_plumb(&out.graph))?;
            return Ok(None);
        }
        Cmd::CollapseAlg { input, o } => {
            let (_, out) = run_collapse(&load_gammac(input)?)?;
            emit(o.as_deref(), &write_plumb(&out.graph))?;
            return Ok(None);
        }
        Cmd::Extract { part, mode, input, o } => {
            let g = load_gammac(input)?;
            let text = match part {
                Part::G1 => {
                    let mode = match mode {
                        Mode::Resolution => G1Mode::Resolution,
                        Mode::Boundary => G1Mode::Boundary,
                        Mode::BoundaryMinusVg => G1Mode::BoundaryMinusVg,
                    };
                    write_plumb(&extract_g1(&blowup_assumption_a(&g), mode)?)
                }
                Part::G2 => {
                    let (gab, out) = run_main(&g)?;
                    let gs = extract_g2(&gab, &out)?;
                    gs.iter()
                        .enumerate()
                        .map(|(j, p)| format!("# branch {}\n{}", j + 1, write_plumb(p)))
                        .collect::<Vec<_>>()
                        .join("\n")
                }
            };
            emit(o.as_deref(), &text)?;
            return Ok(None);
        }
        Cmd::Reduce { no_r5, keep_arrows, normal_form, trace, input, o } => {
            let g = load_plumb(input)?;
            let g = if *keep_arrows { g } else { closed(&g) };
            let (mut h, steps) = reduce_traced(&g, ReduceOptions { no_r5: *no_r5 });
            if *normal_form {
                if let Some(n) = chain_normal_form(&h) {
                    h = n;
                }
            }
            for s in steps.iter().filter(|_| *trace) {
                eprintln!("# {} at {}", s.rule.name(), s.at);
            }
            emit(o.as_deref(), &write_plumb(&h))?;
            return Ok(None);
        }
        Cmd::Signature { input } => r = signature_report(&load_plumb(input)?)?,
        Cmd::Invariants { input } => {
            let g = load_gammac(input)?;
            let rep = rank_report(&g)?;
            r.insert("rank_h1_boundary".into(), json!(rep.rank_h1_boundary));
            r.insert("rank_h1_minus_vg".into(), json!(rep.rank_h1_minus_vg));
            r.insert("rank_h1_partial2j".into(), json!(rep.rank_h1_partial2j));
            r.insert("geneig1_phi".into(), json!(rep.geneig1_phi));
            r.insert("geneig1_j".into(), json!(rep.geneig1_j));
            r.insert("jordan2_phi".into(), json!(rep.jordan2_phi));
            r.insert("jordan2_j".into(), json!(rep.jordan2_j));
            r.insert("div_phi".into(), json!(div_phi(&g)?.to_string()));
            let ga = blowup_assumption_a(&g);
            let mut primes = Vec::new();
            for j in 0..ga.branches().len() {
                primes.push(div_prime_j(&g, j)?.to_string());
            }
            r.insert("div_prime_j".into(), json!(primes));
            let tv: Vec<Value> = transversal_data(&ga)
                .iter()
                .map(|t| {
                    json!({
                        "d_j": t.d_j,
                        "gluing_tori": t.gluing_tori,
                        "d_e": t.cutting_edges.iter().map(|c| c.d_e).collect::<Vec<_>>(),
                        "transversal_branches": t.n_branches,
                    })
                })
                .collect();
            r.insert("transversal".into(), Value::Array(tv));
        }
        Cmd::Charpoly { which, branch, input } => {
            let kind = CharpolyKind::parse(which).ok_or_else(|| {
                let names: Vec<&str> = CharpolyKind::ALL.iter().map(|k| k.name()).collect();
                Failure::Usage(format!("unknown selector {which:?}; expected one of {}", names.join(", ")))
            })?;
            let j = branch.map(|b| b.saturating_sub(1));
            let p = charpoly(kind, &load_gammac(input)?, j)?;
            r.insert("which".into(), json!(kind.name()));
            r.insert("charpoly".into(), poly(&p));
        }
        Cmd::BoundaryCharpoly { input } => {
            let b = charpoly_boundary(&load_gammac(input)?)?;
            match &b.status {
                BoundaryStatus::Exact { hat, reason } => {
                    r.insert("status".into(), json!("exact"));
                    r.insert("graph".into(), json!(if *hat { "collapsed" } else { "blow-up" }));
                    r.insert("reason".into(), json!(reason));
                    r.insert("charpoly".into(), poly(&b.poly));
                }
                BoundaryStatus::Conditional { product, p_h, n_base } => {
                    r.insert("status".into(), json!("conditional"));
                    r.insert("product".into(), poly(product));
                    r.insert("p_h".into(), json!(p_h.to_string()));
                    r.insert("n_base".into(), json!(n_base));
                }
            }
        }
        Cmd::Snf { input } => {
            let d = intersection_data(&load_plumb(input)?)?;
            r.insert("invariant_factors".into(), big_list(&d.snf));
            r.insert("torsion".into(), big_list(&d.torsion()));
            r.insert("free_rank".into(), json!(d.corank_a));
            r.insert("det_abs".into(), d.det_abs.as_ref().map_or(Value::Null, |x| json!(x.to_string())));
        }
        Cmd::OrbifoldEuler { input } => {
            let o = orbifold_euler(&load_plumb(input)?)?;
            r.insert("e".into(), json!(o.e.to_string()));
            r.insert("negative_definite".into(), json!(o.negative_definite()));
            r.insert("legs".into(), json!(o.legs));
        }
        Cmd::Build { what } => {
            match what {
                Build::Cylinder { input, o } => {
                    emit(o.as_deref(), &write_gammac(&build_cylinder(&load_plumb(input)?)?))?
                }
                Build::Homogeneous { input, o } => {
                    let data = CurveData::parse(&read(input)?)?;
                    emit(o.as_deref(), &write_gammac(&build_homogeneous(&data)?))?
                }
                Build::Arrangement { input, o } => {
                    let a = Arrangement::parse(&read(input)?)?;
                    emit(o.as_deref(), &write_gammac(&build_arrangement(&a)?))?
                }
                Build::Xayb { mu_tilde, i, a, b, o } => {
                    emit(o.as_deref(), &write_plumb(&build_xayb(*mu_tilde, *i, *a, *b)?))?
                }
            }
            return Ok(None);
        }
    }
    Ok(Some(r))
}

fn human(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("factored") => human(&m["factored"]),
        Value::Array(xs) => format!("[{}]", xs.iter().map(human).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", human(v))).collect();
            format!("{{{}}}", parts.join(" "))
        }
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(r)) => {
            if cli.json {
                println!("{}", Value::Object(r));
            } else {
                for (k, v) in &r {
                    println!("{k}: {}", human(v));
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            let (code, tag) = if e.is_validation() { (2, "validation") } else { (3, "compute") };
            eprintln!("error: {tag}: {e}");
            ExitCode::from(code)
        }
    }
}
