//! `treehom`: command-line access to the generators, solvers and checks.
//!
//! Results go to stdout as JSON. Exit codes: 0 success, 1 a checked
//! property failed, 2 invalid input, 3 a size cap or search budget was hit.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use treehom::cert::{
    corollary14_arithmetic, corollary_witness_search, hyperfinite_witness_check, run_reproduction_suite, Profile,
};
use treehom::g0::{build_dense_family, check_involution, check_labels, check_prefix_determination};
use treehom::graph::{four_cycle, girth, independence_number, odd_girth, read_graph, write_graph, Girth};
use treehom::hom::{chromatic_number, find_homomorphism, fractional_chromatic_lp, HomInstance, HomOutcome};
use treehom::kneser::{
    fractional_chromatic_formula_kneser, kneser_chromatic_formula, kneser_graph_with, kneser_odd_girth_formula,
    schrijver_graph_with, schrijver_vertex_count, Family, GenOptions,
};
use treehom::rational::display;
use treehom::tree::{
    ball_labeling_graph_with, kfold_color_pipeline_ordered, sigma_circuit, sphere_capped, tree_to_ball_hom_with,
    BallGraphOptions, ReducedWord,
};
use treehom::{Error, Graph};

#[derive(Parser)]
#[command(name = "treehom", version, about = "Kneser graphs, tree homomorphisms and their certificates")]
struct Cli {
    /// Largest number of vertices (or enumerated objects) any command builds.
    #[arg(long, global = true, env = "TREEHOM_VERTEX_CAP", default_value_t = 100_000)]
    vertex_cap: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Kneser,
    Schrijver,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaArg {
    OddGirth,
    Chi,
    ChiFrac,
    SchrijverCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Chi,
    ChiFrac,
    Alpha,
    OddGirth,
    Girth,
}

#[derive(Clone, Copy, ValueEnum)]
enum G0Check {
    Involution,
    Prefix,
    Labels,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Kneser or Schrijver graph.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Output file; `.dot` selects DOT, anything else JSON. Stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a closed-form invariant of K(n,k) or K'(n,k).
    Formula {
        #[arg(long, value_enum)]
        what: FormulaArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Search for a homomorphism between two graphs.
    Hom {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute an exact invariant of a graph.
    Invariant {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        what: InvariantArg,
        /// Exit with status 1 unless the value prints exactly like this.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Build the ball-labeling graph H(d, g).
    BallGraph {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: usize,
        /// Label count; defaults to d^(2g).
        #[arg(long)]
        labels: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map the interior of a truncated d-regular tree into H(d, g).
    TreeHom {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        labels: Option<usize>,
        /// Greedy order for the tree power, comma separated.
        #[arg(long)]
        order: Option<String>,
    },
    /// k-fold (dk+1)-coloring of a graph of maximum degree d.
    Kfold {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Order for the independent-set passes, comma separated.
        #[arg(long)]
        order: Option<String>,
    },
    /// List the reduced words of length l+1.
    Sphere {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        l: usize,
    },
    /// The involution tau a_{i_l} tau^-1 and its suffix chain.
    Sigma {
        /// Comma-separated generator indices, e.g. `2,0`.
        #[arg(long)]
        tau: String,
        /// Generator count; inferred from the word when absent.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Exhaustive checks of the finite flip graph on 2^L.
    G0 {
        #[arg(long = "L")]
        l: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        check: G0Check,
        /// Largest m for the flip maps f_{i,m}.
        #[arg(long, default_value_t = 3)]
        m_max: usize,
    },
    /// Check |V(H)| <= d(d-1)^l and odd girth > 2l+1 for some l.
    Witness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        d: u64,
    },
    /// Least k with K'(2k+m, k) meeting both witness inequalities.
    WitnessSearch {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        kmax: u64,
    },
    /// Exact rational comparisons behind the measurable chromatic bounds.
    ArithCheck,
    /// Run the reproduction battery.
    Repro {
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// An outcome that is not an error but still sets the exit status.
struct Outcome {
    value: Value,
    code: u8,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, code: 0 }
    }

    fn check(value: Value, passed: bool) -> Self {
        Outcome {
            value,
            code: if passed { 0 } else { 1 },
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. } | Error::SizeLimit { .. }) => 3,
        Some(
            Error::CertificateInvalid(_)
            | Error::PaletteTooSmall { .. }
            | Error::NoHom(_)
            | Error::NotFound(_)
            | Error::Unbounded,
        ) => 1,
        _ => 2,
    }
}

fn parse_order(s: &str) -> anyhow::Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad order entry {t:?}")))
        .collect::<anyhow::Result<_>>()
        .map_err(|e| Error::BadParams(e.to_string()).into())
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    Ok(read_graph(path)?)
}

fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(l) => json!(l),
        Girth::Infinite => json!("infinite"),
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let cap = cli.vertex_cap;
    match cli.command {
        Command::Gen { family, n, k, out } => {
            let opts = GenOptions {
                vertex_cap: cap,
                ..Default::default()
            };
            let sg = match family {
                FamilyArg::Kneser => kneser_graph_with(n, k, &opts)?,
                FamilyArg::Schrijver => schrijver_graph_with(n, k, &opts)?,
            };
            let fam = match sg.family {
                Family::Kneser => "kneser",
                Family::Schrijver => "schrijver",
            };
            match out {
                Some(path) => {
                    write_graph(&sg.graph, &path)?;
                    Ok(Outcome::ok(json!({
                        "family": fam, "n": n, "k": k,
                        "vertices": sg.graph.n(), "edges": sg.graph.edge_count(),
                        "out": path.display().to_string(),
                    })))
                }
                None => Ok(Outcome::ok(serde_json::from_str(&sg.graph.to_json_string())?)),
            }
        }
        Command::Formula { what, n, k } => {
            let value = match what {
                FormulaArg::OddGirth => json!(kneser_odd_girth_formula(n, k)?),
                FormulaArg::Chi => json!(kneser_chromatic_formula(n, k)?),
                FormulaArg::ChiFrac => json!(display(&fractional_chromatic_formula_kneser(n, k)?)),
                FormulaArg::SchrijverCount => json!(schrijver_vertex_count(n, k)?.to_string()),
            };
            Ok(Outcome::ok(json!({ "value": value })))
        }
        Command::Hom { from, to, budget } => {
            let (g, h) = (load(&from)?, load(&to)?);
            let mut inst = HomInstance::new(&g, &h);
            if let Some(b) = budget {
                inst = inst.with_budget(b);
            }
            let report = find_homomorphism(&inst)?;
            let (value, certificate, code) = match report.outcome {
                HomOutcome::Found(f) => ("found", json!(f), 0),
                HomOutcome::NoHom => ("none", Value::Null, 0),
                HomOutcome::BudgetExhausted => ("budget-exhausted", Value::Null, 3),
            };
            Ok(Outcome {
                value: json!({ "value": value, "certificate": certificate, "nodes": report.nodes }),
                code,
            })
        }
        Command::Invariant { graph, what, expect } => {
            let g = load(&graph)?;
            let (value, certificate) = match what {
                InvariantArg::Chi => {
                    let r = chromatic_number(&g)?;
                    (json!(r.value), json!({ "coloring": r.coloring.color, "clique": r.clique }))
                }
                InvariantArg::ChiFrac => {
                    let c = fractional_chromatic_lp(&g)?;
                    c.verify(&g)?;
                    let weights: Vec<String> = c.weights.iter().map(display).collect();
                    let dual: Vec<String> = c.dual.iter().map(display).collect();
                    let sets: Vec<Vec<usize>> = c.sets.iter().map(|s| s.to_vec()).collect();
                    (
                        json!(display(&c.value)),
                        json!({ "sets": sets, "weights": weights, "dual": dual }),
                    )
                }
                InvariantArg::Alpha => {
                    let r = independence_number(&g)?;
                    (json!(r.size), json!(r.witness.to_vec()))
                }
                InvariantArg::OddGirth => (girth_value(odd_girth(&g)), Value::Null),
                InvariantArg::Girth => (girth_value(girth(&g)), Value::Null),
            };
            let printed = match &value {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            let passed = expect.as_ref().map_or(true, |e| e.trim() == printed);
            let mut out = json!({ "value": value, "certificate": certificate });
            if let Some(e) = expect {
                out["expected"] = json!(e);
            }
            Ok(Outcome::check(out, passed))
        }
        Command::BallGraph { d, g, labels, out } => {
            let opts = BallGraphOptions {
                n_labels: labels,
                vertex_cap: cap,
                ..Default::default()
            };
            let h = ball_labeling_graph_with(d, g, &opts)?;
            if let Some(path) = &out {
                write_graph(&h.graph, path)?;
            }
            Ok(Outcome::ok(json!({
                "d": d, "g": g, "labels": h.space.n_labels,
                "vertices": h.graph.n(), "edges": h.graph.edge_count(),
                "odd_girth": girth_value(odd_girth(&h.graph)),
                "four_cycle": four_cycle(&h.graph),
                "out": out.map(|p| p.display().to_string()),
            })))
        }
        Command::TreeHom { d, g, depth, labels, order } => {
            let opts = BallGraphOptions {
                n_labels: labels,
                vertex_cap: cap,
                greedy_order: order.as_deref().map(parse_order).transpose()?,
            };
            let hom = tree_to_ball_hom_with(d, g, depth, &opts)?;
            let images: Vec<Value> = hom
                .interior
                .iter()
                .zip(&hom.labelings)
                .map(|(v, f)| json!({ "vertex": v, "labels": f.labels }))
                .collect();
            Ok(Outcome::ok(json!({
                "d": d, "g": g, "depth": depth, "labels": hom.space.n_labels,
                "tree_vertices": hom.tree.graph.n(),
                "interior": hom.interior.len(),
                "interior_edges": hom.tree.interior_edges().count(),
                "colors_used": hom.coloring.colors_used(),
                "valid": true,
                "images": images,
            })))
        }
        Command::Kfold { graph, d, k, order } => {
            let g = load(&graph)?;
            let order = match order {
                Some(s) => parse_order(&s)?,
                None => (0..g.n()).collect(),
            };
            let c = kfold_color_pipeline_ordered(&g, d, k, &order)?;
            Ok(Outcome::ok(serde_json::to_value(&c)?))
        }
        Command::Sphere { d, l } => {
            let s = sphere_capped(d, l, cap)?;
            let words: Vec<String> = s.words.iter().map(|w| w.to_string()).collect();
            Ok(Outcome::ok(json!({ "d": d, "l": l, "count": words.len(), "words": words })))
        }
        Command::Sigma { tau, d } => {
            let tau = match d {
                Some(d) => ReducedWord::parse(d, &tau)?,
                None => tau.parse::<ReducedWord>()?,
            };
            let c = sigma_circuit(&tau)?;
            let verified = c.verify().is_ok();
            Ok(Outcome::check(
                json!({
                    "tau": tau.to_string(),
                    "sigma": c.sigma.to_string(),
                    "length": c.length(),
                    "chain": c.chain.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    "verified": verified,
                }),
                verified,
            ))
        }
        Command::G0 {
            l,
            d,
            seed,
            check,
            m_max,
        } => {
            let fam = build_dense_family(l, d, seed)?;
            let mut scans = Vec::new();
            let mut failure = None;
            match check {
                G0Check::Labels => match check_labels(&fam) {
                    Ok(counts) => scans.push(json!({ "label_counts": counts })),
                    Err(e) => failure = Some(e.to_string()),
                },
                G0Check::Involution | G0Check::Prefix => {
                    'outer: for i in 0..d {
                        for m in 0..=m_max {
                            let r = match check {
                                G0Check::Involution => check_involution(&fam, i, m),
                                _ => check_prefix_determination(&fam, i, m),
                            };
                            match r {
                                Ok(scan) => scans.push(serde_json::to_value(&scan)?),
                                Err(Error::CertificateInvalid(msg)) => {
                                    failure = Some(msg);
                                    break 'outer;
                                }
                                Err(e) => return Err(e.into()),
                            }
                        }
                    }
                }
            }
            Ok(Outcome::check(
                json!({
                    "L": l, "d": d, "seed": seed, "density_depth": fam.density_depth,
                    "scans": scans, "failure": failure,
                }),
                failure.is_none(),
            ))
        }
        Command::Witness { graph, d } => {
            let g = load(&graph)?;
            let id = graph.display().to_string();
            Ok(Outcome::ok(serde_json::to_value(&hyperfinite_witness_check(&id, &g, d))?))
        }
        Command::WitnessSearch { d, m, kmax } => Ok(Outcome::ok(serde_json::to_value(&corollary_witness_search(d, m, kmax)?)?)),
        Command::ArithCheck => {
            let r = corollary14_arithmetic();
            Ok(Outcome::check(serde_json::to_value(&r)?, r.all_hold()))
        }
        Command::Repro { profile, json } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let report = run_reproduction_suite(profile);
            eprint!("{}", report.table());
            if let Some(path) = json {
                std::fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            let passed = report.passed();
            Ok(Outcome::check(serde_json::to_value(&report)?, passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let body = serde_json::to_string_pretty(&out.value).expect("json value");
            // a closed pipe downstream is not a failure of the command
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
