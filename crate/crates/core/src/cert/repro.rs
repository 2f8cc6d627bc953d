//! The reproduction battery: every closed-form invariant and construction
//! cross-checked against an independent computation.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use super::arithmetic::corollary14_arithmetic;
use super::witness::{corollary_step, corollary_witness_search, hyperfinite_witness_check};
use crate::error::{Error, Result};
use crate::g0::{build_dense_family, check_involution, check_prefix_determination};
use crate::graph::{
    four_cycle, odd_girth, random_bounded_graph, random_forest, validate_homomorphism, Girth, Graph,
};
use crate::hom::{chromatic_number, check_fractional_bound, find_homomorphism, fractional_chromatic_lp, HomInstance, HomOutcome};
use crate::kneser::{
    binomial, canonical_kneser_coloring, kneser_chromatic_formula, kneser_graph, kneser_odd_girth_formula,
    kneser_transitivity_certificate, schrijver_graph, schrijver_vertex_count,
};
use crate::rational::{display, ratio};
use crate::tree::{
    ball_labeling_graph, kfold_color_pipeline, sigma_circuit, sphere, sphere_size, tree_to_ball_hom, truncated_tree,
    ReducedWord,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::BadParams(format!("unknown profile {other:?}, expected quick or full"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Exploratory; no outcome is asserted.
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub details: String,
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    #[serde(skip)]
    pub profile: Option<Profile>,
    pub checks: Vec<CheckOutcome>,
}

impl ReproReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  status  time(s)  details", "check");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            let _ = writeln!(out, "{:<width$}  {status:<6}  {:>7.2}  {}", c.name, c.seconds, c.details);
        }
        out
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::CertificateInvalid(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn run(name: &str, status_on_ok: Status, f: impl FnOnce() -> Result<String>) -> CheckOutcome {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f));
    let (status, details) = match result {
        Ok(Ok(details)) => (status_on_ok, details),
        Ok(Err(e)) => (Status::Fail, e.to_string()),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Fail, format!("panicked: {msg}"))
        }
    };
    CheckOutcome {
        name: name.to_string(),
        status,
        details,
        seconds: start.elapsed().as_secs_f64(),
    }
}

struct Ranges {
    girth_n: usize,
    chromatic: &'static [(usize, usize)],
    canonical_n: usize,
    schrijver_n: usize,
    lp_vertices: u64,
    forests: u64,
    bounded: u64,
    sphere_l: usize,
    sigma_l: usize,
    g0_depth: usize,
    benchmark_depth: usize,
}

const QUICK: Ranges = Ranges {
    girth_n: 10,
    chromatic: &[(5, 2), (6, 2), (7, 3)],
    canonical_n: 10,
    schrijver_n: 14,
    lp_vertices: 21,
    forests: 40,
    bounded: 10,
    sphere_l: 6,
    sigma_l: 3,
    g0_depth: 12,
    benchmark_depth: 4,
};

const FULL: Ranges = Ranges {
    girth_n: 12,
    chromatic: &[(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)],
    canonical_n: 14,
    schrijver_n: 20,
    lp_vertices: 40,
    forests: 200,
    bounded: 50,
    sphere_l: 8,
    sigma_l: 5,
    g0_depth: 16,
    benchmark_depth: 6,
};

pub fn run_reproduction_suite(profile: Profile) -> ReproReport {
    let r = match profile {
        Profile::Quick => &QUICK,
        Profile::Full => &FULL,
    };
    let checks = vec![
        run("odd-girth-formula", Status::Pass, || odd_girth_check(r)),
        run("chromatic-formula", Status::Pass, || chromatic_check(r)),
        run("schrijver", Status::Pass, || schrijver_check(r)),
        run("fractional-chromatic", Status::Pass, || fractional_check(r)),
        run("ball-labeling-graph", Status::Pass, ball_graph_check),
        run("fold-pipeline", Status::Pass, || pipeline_check(r)),
        run("word-combinatorics", Status::Pass, || words_check(r)),
        run("g0-flips", Status::Pass, || g0_check(r)),
        run("witness-certificates", Status::Pass, witness_check),
        run("arithmetic", Status::Pass, arithmetic_check),
        run("tree-to-K(6,2)-benchmark", Status::Info, || benchmark(r)),
    ];
    ReproReport {
        profile: Some(profile),
        checks,
    }
}

fn odd_girth_check(r: &Ranges) -> Result<String> {
    let mut count = 0;
    for n in 3..=r.girth_n {
        for k in 1..=5.min((n - 1) / 2) {
            let g = kneser_graph(n, k)?;
            let expected = kneser_odd_girth_formula(n as u64, k as u64)? as usize;
            let found = odd_girth(&g.graph);
            ensure(found == Girth::Finite(expected), || format!("K({n},{k}): BFS {found:?}, formula {expected}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} Kneser graphs with n <= {}", r.girth_n))
}

fn chromatic_check(r: &Ranges) -> Result<String> {
    let mut out = Vec::new();
    for &(n, k) in r.chromatic {
        let g = kneser_graph(n, k)?;
        let chi = chromatic_number(&g.graph)?;
        let expected = kneser_chromatic_formula(n as u64, k as u64)? as usize;
        ensure(chi.value == expected && chi.coloring.is_proper(&g.graph), || {
            format!("chi(K({n},{k})) = {}, formula {expected}", chi.value)
        })?;
        out.push(format!("K({n},{k})={}", chi.value));
    }
    let mut canonical = 0;
    for n in 2..=r.canonical_n {
        for k in 1..=6.min(n / 2) {
            let g = kneser_graph(n, k)?;
            let c = canonical_kneser_coloring(n, k)?;
            ensure(c.is_proper(&g.graph) && c.palette_size == n - 2 * k + 2, || {
                format!("canonical coloring of K({n},{k}) is wrong")
            })?;
            canonical += 1;
        }
    }
    Ok(format!("{}; {canonical} canonical colorings proper", out.join(" ")))
}

fn schrijver_check(r: &Ranges) -> Result<String> {
    let mut count = 0;
    for n in 3..=r.schrijver_n {
        for k in 1..=8.min((n - 1) / 2) {
            let g = schrijver_graph(n, k)?;
            let formula = schrijver_vertex_count(n as u64, k as u64)?;
            // n/k * C(n-k-1, k-1), multiplied out before dividing
            let direct = BigUint::from(n) * BigUint::from(binomial((n - k - 1) as u64, (k - 1) as u64).expect("small")) / BigUint::from(k);
            ensure(BigUint::from(g.graph.n()) == formula && formula == direct, || {
                format!("K'({n},{k}) has {} vertices, formula {formula}", g.graph.n())
            })?;
            count += 1;
        }
    }
    for k in 1..=8 {
        let g = schrijver_graph(2 * k + 1, k)?.graph;
        let is_cycle = g.n() == 2 * k + 1
            && (0..g.n()).all(|v| g.degree(v) == 2)
            && crate::graph::connected_components(&g).len() == 1;
        ensure(is_cycle, || format!("K'({},{k}) is not a cycle", 2 * k + 1))?;
    }
    for (n, k) in [(5, 2), (6, 2), (7, 2), (8, 3)] {
        let a = chromatic_number(&schrijver_graph(n, k)?.graph)?.value;
        let b = chromatic_number(&kneser_graph(n, k)?.graph)?.value;
        ensure(a == b, || format!("chi(K'({n},{k})) = {a} but chi(K({n},{k})) = {b}"))?;
    }
    Ok(format!("{count} vertex counts with n <= {}; odd cycles k <= 8; 4 chromatic pairs", r.schrijver_n))
}

/// Small named graphs used for corpus-wide checks.
pub fn standard_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    for n in 3..=9 {
        out.push((format!("C{n}"), Graph::cycle(n)?));
    }
    for n in [2, 5, 8] {
        out.push((format!("P{n}"), Graph::path(n)));
    }
    out.push(("star4".into(), Graph::star(4)));
    out.push(("K3+K1".into(), Graph::complete(3).disjoint_union(&Graph::complete(1))));
    out.push(("C5+K2".into(), Graph::cycle(5)?.disjoint_union(&Graph::complete(2))));
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
        out.push((format!("K({n},{k})"), kneser_graph(n, k)?.graph));
    }
    for (n, k) in [(7, 2), (8, 3), (9, 4)] {
        out.push((format!("K'({n},{k})"), schrijver_graph(n, k)?.graph));
    }
    for seed in 0..4 {
        out.push((format!("forest-{seed}"), random_forest(14, 3, seed)));
        out.push((format!("sparse-{seed}"), random_bounded_graph(14, 3, 5, seed)));
    }
    Ok(out)
}

fn fractional_check(r: &Ranges) -> Result<String> {
    let petersen = kneser_graph(5, 2)?;
    let cert = fractional_chromatic_lp(&petersen.graph)?;
    cert.verify(&petersen.graph)?;
    ensure(cert.value == ratio(5, 2), || format!("Petersen LP gave {}", display(&cert.value)))?;
    let mut kneser = 0;
    for n in 2..=12u64 {
        for k in 1..=n / 2 {
            if binomial(n, k).expect("small") > r.lp_vertices as u128 {
                continue;
            }
            let g = kneser_graph(n as usize, k as usize)?;
            let cert = fractional_chromatic_lp(&g.graph)?;
            cert.verify(&g.graph)?;
            ensure(cert.value == ratio(n as i64, k as i64), || {
                format!("chi*(K({n},{k})) = {}", display(&cert.value))
            })?;
            let t = kneser_transitivity_certificate(&g)?;
            let report = check_fractional_bound(&g.graph, Some(&t))?;
            ensure(report.passed(), || format!("bound report failed for K({n},{k})"))?;
            kneser += 1;
        }
    }
    let mut corpus = 0;
    for (name, g) in standard_corpus()? {
        if g.n() == 0 {
            continue;
        }
        let report = check_fractional_bound(&g, None)?;
        ensure(report.inequality_holds, || format!("chi* < 1/alpha on {name}"))?;
        corpus += 1;
    }
    Ok(format!(
        "Petersen 5/2; {kneser} Kneser graphs with C(n,k) <= {} equal n/k and 1/alpha; {corpus} corpus graphs satisfy chi* >= 1/alpha",
        r.lp_vertices
    ))
}

fn ball_graph_check() -> Result<String> {
    let mut out = Vec::new();
    for (d, expected, depth) in [(2usize, 12usize, 6usize), (3, 504, 6)] {
        let h = ball_labeling_graph(d, 1)?;
        ensure(h.graph.n() == expected, || format!("H({d},1) has {} vertices", h.graph.n()))?;
        ensure(odd_girth(&h.graph) == Girth::Finite(3), || format!("H({d},1) odd girth is not 3"))?;
        ensure(four_cycle(&h.graph).is_some(), || format!("H({d},1) has no 4-cycle"))?;
        let hom = tree_to_ball_hom(d, 1, depth)?;
        let (interior, _) = hom.tree.graph.induced_subgraph(&hom.tree.interior);
        let map = hom.indices_in(&h)?;
        ensure(validate_homomorphism(&interior, &h.graph, &map), || {
            format!("tree map into H({d},1) breaks an edge")
        })?;
        out.push(format!("H({d},1): {expected} vertices, {} interior tree vertices mapped", map.len()));
    }
    Ok(out.join("; "))
}

fn pipeline_check(r: &Ranges) -> Result<String> {
    for seed in 0..r.forests {
        let g = random_forest(10 + (seed as usize % 40), 3, seed);
        let k = 1 + (seed as usize % 3);
        let c = kfold_color_pipeline(&g, 3, k)?;
        c.coloring.validate(&g)?;
        ensure(c.coloring.palette == 3 * k + 1, || "wrong palette".into())?;
    }
    for seed in 0..r.bounded {
        let d = 3 + (seed as usize % 2);
        let k = 1 + (seed as usize / 2 % 3);
        let g = random_bounded_graph(12 + (seed as usize % 20), d, 2 * k + 1, 1000 + seed);
        let c = kfold_color_pipeline(&g, d, k)?;
        c.coloring.validate(&g)?;
    }
    Ok(format!("{} forests and {} bounded-degree graphs", r.forests, r.bounded))
}

fn all_words(d: usize, len: usize) -> Vec<ReducedWord> {
    let mut words = vec![ReducedWord::identity(d)];
    for _ in 0..len {
        words = words
            .iter()
            .flat_map(|w| (0..d as u8).filter(move |&i| w.last() != Some(i)).map(move |i| w.times_generator(i)))
            .collect();
    }
    words
}

fn words_check(r: &Ranges) -> Result<String> {
    for d in 2..=5 {
        for l in 0..=r.sphere_l {
            let s = sphere(d, l)?;
            let expected = d * (d - 1).pow(l as u32);
            ensure(s.words.len() == expected && sphere_size(d, l + 1) == BigUint::from(expected), || {
                format!("|sphere({d},{l})| = {}", s.words.len())
            })?;
        }
    }
    let mut circuits = 0;
    for d in 2..=4 {
        for l in 0..=r.sigma_l {
            for tau in all_words(d, l + 1) {
                let c = sigma_circuit(&tau)?;
                c.verify()?;
                ensure(c.length() == 2 * l + 1, || format!("sigma for {tau} has length {}", c.length()))?;
                circuits += 1;
            }
        }
    }
    Ok(format!("spheres d <= 5, l <= {}; {circuits} sigma circuits", r.sphere_l))
}

fn g0_check(r: &Ranges) -> Result<String> {
    let fam = build_dense_family(r.g0_depth, 3, 0)?;
    let mut defined = 0;
    for i in 0..3 {
        for m in 0..=3 {
            defined += check_involution(&fam, i, m)?.defined;
            check_prefix_determination(&fam, i, m)?;
        }
    }
    Ok(format!("L = {}: {defined} defined flips, all involutive and prefix-determined", r.g0_depth))
}

fn witness_check() -> Result<String> {
    for d in 3..=8u64 {
        let rep = hyperfinite_witness_check("K_d", &Graph::complete(d as usize), d);
        ensure(rep.verdict && rep.best_l == Some(0), || format!("K_{d} witness fails"))?;
    }
    let res = corollary_witness_search(3, 2, 64)?;
    let k = res.k_min;
    // independent re-evaluation: |V(K'(2k+2,k))| = (k+1)^2 against 3 * 2^(k/2 - 1)
    let size = BigUint::from(k + 1).pow(2);
    let bound = BigUint::from(3u32) << (k / 2 - 1) as usize;
    ensure(size <= bound && size.to_string() == res.certificate.vertices, || {
        format!("k_min = {k} does not re-verify")
    })?;
    ensure(1 + 2 * k.div_ceil(2) > 2 * (k / 2 - 1) + 1, || "girth inequality fails".into())?;
    ensure(k < 4 || !corollary_step(3, 2, k - 2)?.size_holds, || format!("k = {} also works", k - 2))?;
    Ok(format!("K_3..K_8 at l = 0; k_min(3,2) = {k}: {size} <= {bound}"))
}

fn arithmetic_check() -> Result<String> {
    let rep = corollary14_arithmetic();
    match rep.checks.iter().find(|c| !c.holds) {
        Some(c) => Err(fail(format!("{}: {} {} {} is false", c.name, c.lhs, c.relation, c.rhs))),
        None => Ok(format!("{} exact comparisons", rep.checks.len())),
    }
}

fn benchmark(r: &Ranges) -> Result<String> {
    let target = kneser_graph(6, 2)?;
    let tree = truncated_tree(3, r.benchmark_depth, 1)?;
    let report = find_homomorphism(&HomInstance::new(&tree.graph, &target.graph).with_budget(1_000_000))?;
    let outcome = match report.outcome {
        HomOutcome::Found(f) => {
            ensure(validate_homomorphism(&tree.graph, &target.graph, &f), || "invalid map".into())?;
            "found"
        }
        HomOutcome::NoHom => "none",
        HomOutcome::BudgetExhausted => "budget exhausted",
    };
    Ok(format!(
        "depth-{} 3-regular tree ({} vertices) -> K(6,2): {outcome} after {} nodes",
        r.benchmark_depth,
        tree.graph.n(),
        report.nodes
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes() {
        let rep = run_reproduction_suite(Profile::Quick);
        assert!(rep.passed(), "{}", rep.table());
        let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(json["checks"].as_array().unwrap().len(), rep.checks.len());
        assert!(json["checks"][0]["status"].is_string());
    }

    #[test]
    fn panics_become_failures() {
        let c = run("boom", Status::Pass, || panic!("no"));
        assert_eq!(c.status, Status::Fail);
        assert!(c.details.contains("no"));
        assert!("medium".parse::<Profile>().is_err());
    }
}
