use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{odd_girth, Girth, Graph};
use crate::kneser::{kneser_odd_girth_formula, schrijver_vertex_count};

/// `d (d-1)^l`.
pub fn size_bound(d: u64, l: usize) -> BigUint {
    BigUint::from(d) * BigUint::from(d.saturating_sub(1)).pow(l as u32)
}

/// Both hypotheses evaluated at one `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessInequalities {
    pub l: usize,
    pub vertices: String,
    /// `d (d-1)^l`.
    pub size_bound: String,
    pub size_holds: bool,
    pub odd_girth: Girth,
    /// `2l + 1`.
    pub girth_bound: usize,
    pub girth_holds: bool,
}

impl WitnessInequalities {
    fn new(vertices: &BigUint, og: Girth, d: u64, l: usize) -> Self {
        let bound = size_bound(d, l);
        let girth_holds = og.finite().map_or(true, |g| g > 2 * l + 1);
        WitnessInequalities {
            l,
            vertices: vertices.to_string(),
            size_bound: bound.to_string(),
            size_holds: *vertices <= bound,
            odd_girth: og,
            girth_bound: 2 * l + 1,
            girth_holds,
        }
    }

    pub fn both_hold(&self) -> bool {
        self.size_holds && self.girth_holds
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub graph_id: String,
    pub d: u64,
    /// Largest `l` meeting both hypotheses. When `H` is bipartite every
    /// large `l` works; then this is the least one and `unbounded` is set.
    pub best_l: Option<usize>,
    pub unbounded: bool,
    pub verdict: bool,
    /// The inequalities at `best_l`, or at `l = 0` when there is none.
    pub details: WitnessInequalities,
}

/// Scans `l = 0, 1, ..` while the odd-girth hypothesis can still hold.
pub fn hyperfinite_witness_check(graph_id: &str, h: &Graph, d: u64) -> WitnessReport {
    let vertices = BigUint::from(h.n());
    let og = odd_girth(h);
    let at = |l| WitnessInequalities::new(&vertices, og, d, l);
    let mut best = None;
    let mut unbounded = false;
    match og {
        Girth::Finite(g) => {
            for l in (0..).take_while(|&l| 2 * l + 1 < g) {
                let w = at(l);
                if w.both_hold() {
                    best = Some(w);
                }
            }
        }
        Girth::Infinite => {
            // the size bound is nondecreasing in l, and constant once d <= 2
            let limit = if d >= 3 { h.n().max(1) } else { 0 };
            best = (0..=limit).map(at).find(|w| w.size_holds);
            unbounded = best.is_some();
        }
    }
    let verdict = best.is_some();
    WitnessReport {
        graph_id: graph_id.to_string(),
        d,
        best_l: best.as_ref().map(|w| w.l),
        unbounded,
        verdict,
        details: best.unwrap_or_else(|| at(0)),
    }
}

/// One candidate `k` for `H = K'(2k+m, k)` with `l = k/m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryStep {
    pub k: u64,
    pub l: u64,
    pub vertices: String,
    pub size_bound: String,
    pub size_holds: bool,
    /// Odd girth of `K(2k+m, k)`, a lower bound for its Schrijver subgraph.
    pub odd_girth: u64,
    pub girth_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorollarySearchResult {
    pub d: u64,
    pub m: u64,
    pub k_min: u64,
    pub l_used: u64,
    pub certificate: CorollaryStep,
    /// Every `k` tried, in order, ending at `k_min`.
    pub trace: Vec<CorollaryStep>,
}

pub fn corollary_step(d: u64, m: u64, k: u64) -> Result<CorollaryStep> {
    if k == 0 || m == 0 || k % m != 0 {
        return Err(Error::BadParams(format!("k = {k} must be a positive multiple of m = {m}")));
    }
    let l = k / m - 1;
    let n = 2 * k + m;
    let vertices = schrijver_vertex_count(n, k)?;
    let bound = size_bound(d, l as usize);
    let og = kneser_odd_girth_formula(n, k)?;
    Ok(CorollaryStep {
        k,
        l,
        size_holds: vertices <= bound,
        vertices: vertices.to_string(),
        size_bound: bound.to_string(),
        odd_girth: og,
        girth_holds: og > 2 * l + 1,
    })
}

/// Least `k` (a multiple of `m`, at most `k_max`) for which `K'(2k+m, k)`
/// meets both hypotheses with `l = k/m - 1`.
pub fn corollary_witness_search(d: u64, m: u64, k_max: u64) -> Result<CorollarySearchResult> {
    if d < 3 {
        return Err(Error::BadParams(format!("the size bound needs d >= 3, got {d}")));
    }
    if m == 0 {
        return Err(Error::BadParams("m must be at least 1".into()));
    }
    let mut trace = Vec::new();
    for k in (m..=k_max).step_by(m as usize) {
        let step = corollary_step(d, m, k)?;
        let found = step.size_holds && step.girth_holds;
        trace.push(step.clone());
        if found {
            return Ok(CorollarySearchResult {
                d,
                m,
                k_min: k,
                l_used: step.l,
                certificate: step,
                trace,
            });
        }
    }
    Err(Error::NotFound(format!("no k <= {k_max} works for d = {d}, m = {m}")))
}
