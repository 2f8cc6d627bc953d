//! Backtracking homomorphism search with arc-consistency pruning.
//!
//! Each source vertex carries a domain of admissible target vertices. After
//! every decision the domains are made arc consistent: a target value `x`
//! survives in `D(u)` only if every source neighbor `w` of `u` still has some
//! value adjacent to `x`. Variables are chosen smallest domain first, ties to
//! the lowest index, and values are tried in increasing order.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{validate_homomorphism, Graph};

/// A homomorphism problem `source -> target`.
#[derive(Clone, Debug)]
pub struct HomInstance<'a> {
    pub source: &'a Graph,
    pub target: &'a Graph,
    /// Pre-assigned images; empty means none.
    pub partial: Vec<Option<usize>>,
    /// Maximum number of value assignments tried.
    pub budget: Option<u64>,
}

impl<'a> HomInstance<'a> {
    pub fn new(source: &'a Graph, target: &'a Graph) -> Self {
        HomInstance {
            source,
            target,
            partial: Vec::new(),
            budget: None,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn with_partial(mut self, partial: Vec<Option<usize>>) -> Self {
        self.partial = partial;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    Found(Vec<usize>),
    /// The whole search space was exhausted.
    NoHom,
    /// The budget ran out first; says nothing about existence.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomReport {
    pub outcome: HomOutcome,
    pub nodes: u64,
}

pub fn find_homomorphism(inst: &HomInstance<'_>) -> Result<HomReport> {
    let src = inst.source;
    let tgt = inst.target;
    let mut domains = vec![BitSet::full(tgt.n()); src.n()];
    if !inst.partial.is_empty() {
        if inst.partial.len() != src.n() {
            return Err(Error::BadParams("partial map has wrong length".into()));
        }
        for (u, img) in inst.partial.iter().enumerate() {
            if let Some(x) = *img {
                if x >= tgt.n() {
                    return Err(Error::BadParams(format!("partial image {x} out of range")));
                }
                domains[u] = BitSet::from_members(tgt.n(), [x]);
            }
        }
        for (u, v) in src.edges() {
            if let (Some(x), Some(y)) = (inst.partial[u], inst.partial[v]) {
                if !tgt.has_edge(x, y) {
                    return Err(Error::BadParams(format!("partial map breaks edge ({u},{v})")));
                }
            }
        }
    }
    let mut solver = Solver::new(src, tgt, inst.budget, false);
    let outcome = solver.run(domains);
    if let HomOutcome::Found(f) = &outcome {
        debug_assert!(validate_homomorphism(src, tgt, f));
    }
    Ok(HomReport {
        outcome,
        nodes: solver.nodes,
    })
}

/// Colors `g` with `colors` colors, exploiting that all colors are
/// interchangeable: a branch only tries colors already used by earlier
/// decisions plus the least unused one.
pub(crate) fn color_search(g: &Graph, colors: usize, budget: Option<u64>) -> HomReport {
    let target = Graph::complete(colors);
    let mut solver = Solver::new(g, &target, budget, true);
    let outcome = solver.run(vec![BitSet::full(colors); g.n()]);
    HomReport {
        outcome,
        nodes: solver.nodes,
    }
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    Budget,
}

struct Solver<'a> {
    src: &'a Graph,
    tgt: &'a Graph,
    budget: Option<u64>,
    nodes: u64,
    interchangeable: bool,
    src_nbrs: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(src: &'a Graph, tgt: &'a Graph, budget: Option<u64>, interchangeable: bool) -> Self {
        Solver {
            src,
            tgt,
            budget,
            nodes: 0,
            interchangeable,
            src_nbrs: (0..src.n()).map(|v| src.neighbors(v).to_vec()).collect(),
        }
    }

    fn run(&mut self, mut domains: Vec<BitSet>) -> HomOutcome {
        let n = self.src.n();
        if n == 0 {
            return HomOutcome::Found(Vec::new());
        }
        let mut queue: Vec<usize> = (0..n).rev().collect();
        if !self.propagate(&mut domains, &mut queue) {
            return HomOutcome::NoHom;
        }
        let mut decided = vec![false; n];
        let mut used = BitSet::new(self.tgt.n());
        match self.search(domains, &mut decided, &mut used) {
            Step::Found(f) => HomOutcome::Found(f),
            Step::Exhausted => HomOutcome::NoHom,
            Step::Budget => HomOutcome::BudgetExhausted,
        }
    }

    /// AC-3 over the source edges. Returns false on a wipe-out.
    fn propagate(&self, domains: &mut [BitSet], queue: &mut Vec<usize>) -> bool {
        let mut queued = BitSet::from_members(domains.len(), queue.iter().copied());
        while let Some(w) = queue.pop() {
            queued.remove(w);
            let mut support = BitSet::new(self.tgt.n());
            for y in domains[w].iter() {
                support.union_with(self.tgt.neighbors(y));
            }
            for &z in &self.src_nbrs[w] {
                let before = domains[z].count();
                domains[z].intersect_with(&support);
                let after = domains[z].count();
                if after == 0 {
                    return false;
                }
                if after != before && queued.insert(z) {
                    queue.push(z);
                }
            }
        }
        true
    }

    fn search(&mut self, domains: Vec<BitSet>, decided: &mut [bool], used: &mut BitSet) -> Step {
        let mut pick: Option<(usize, usize)> = None;
        for (u, d) in domains.iter().enumerate() {
            if decided[u] {
                continue;
            }
            let size = d.count();
            if pick.map_or(true, |(_, s)| size < s) {
                pick = Some((u, size));
            }
        }
        let Some((u, _)) = pick else {
            let f = domains.iter().map(|d| d.first().expect("nonempty")).collect();
            return Step::Found(f);
        };

        let mut candidates = domains[u].clone();
        if self.interchangeable {
            let mut allowed = used.clone();
            if let Some(fresh) = used.complement().first() {
                allowed.insert(fresh);
            }
            candidates.intersect_with(&allowed);
        }

        decided[u] = true;
        for x in candidates.iter() {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                decided[u] = false;
                return Step::Budget;
            }
            let mut next = domains.clone();
            next[u] = BitSet::from_members(self.tgt.n(), [x]);
            let mut queue = vec![u];
            if !self.propagate(&mut next, &mut queue) {
                continue;
            }
            let fresh = used.insert(x);
            let step = self.search(next, decided, used);
            if fresh {
                used.remove(x);
            }
            match step {
                Step::Exhausted => {}
                other => {
                    decided[u] = false;
                    return other;
                }
            }
        }
        decided[u] = false;
        Step::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::{kneser_graph, schrijver_graph};

    fn found(r: &HomReport) -> &[usize] {
        match &r.outcome {
            HomOutcome::Found(f) => f,
            other => panic!("expected a homomorphism, got {other:?}"),
        }
    }

    #[test]
    fn edgeless_source_maps_anywhere() {
        let src = Graph::empty(4);
        let tgt = Graph::empty(1);
        let r = find_homomorphism(&HomInstance::new(&src, &tgt)).unwrap();
        assert_eq!(found(&r), &[0, 0, 0, 0]);
    }

    #[test]
    fn triangle_into_k73_has_no_hom() {
        let k73 = kneser_graph(7, 3).unwrap();
        let c3 = Graph::complete(3);
        let r = find_homomorphism(&HomInstance::new(&c3, &k73.graph)).unwrap();
        assert_eq!(r.outcome, HomOutcome::NoHom);
    }

    #[test]
    fn five_cycle_into_petersen() {
        let p = kneser_graph(5, 2).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let r = find_homomorphism(&HomInstance::new(&c5, &p.graph)).unwrap();
        assert!(validate_homomorphism(&c5, &p.graph, found(&r)));

        // the explicit stable-set embedding K'(5,2) -> K(5,2)
        let s = schrijver_graph(5, 2).unwrap();
        let embed: Vec<usize> = s.vertices().iter().map(|a| p.index_of(a).unwrap()).collect();
        assert!(validate_homomorphism(&s.graph, &p.graph, &embed));
    }

    #[test]
    fn odd_cycle_obstruction() {
        for a in 1..=6 {
            for b in 1..=6 {
                let src = Graph::cycle(2 * a + 1).unwrap();
                let tgt = Graph::cycle(2 * b + 1).unwrap();
                let r = find_homomorphism(&HomInstance::new(&src, &tgt)).unwrap();
                match r.outcome {
                    HomOutcome::Found(f) => {
                        assert!(a >= b);
                        assert!(validate_homomorphism(&src, &tgt, &f));
                    }
                    HomOutcome::NoHom => assert!(a < b),
                    HomOutcome::BudgetExhausted => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn budget_is_reported_separately() {
        let src = Graph::cycle(9).unwrap();
        let tgt = Graph::cycle(11).unwrap();
        let r = find_homomorphism(&HomInstance::new(&src, &tgt).with_budget(3)).unwrap();
        assert_eq!(r.outcome, HomOutcome::BudgetExhausted);
        assert!(r.nodes > 3);
    }

    #[test]
    fn partial_maps() {
        let c4 = Graph::cycle(4).unwrap();
        let k2 = Graph::complete(2);
        let inst = HomInstance::new(&c4, &k2).with_partial(vec![Some(1), None, None, None]);
        let r = find_homomorphism(&inst).unwrap();
        assert_eq!(found(&r), &[1, 0, 1, 0]);
        let bad = HomInstance::new(&c4, &k2).with_partial(vec![Some(1), Some(1), None, None]);
        assert!(find_homomorphism(&bad).is_err());
        let short = HomInstance::new(&c4, &k2).with_partial(vec![Some(1)]);
        assert!(find_homomorphism(&short).is_err());
    }

    #[test]
    fn coloring_search_symmetry() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(color_search(&c5, 2, None).outcome, HomOutcome::NoHom);
        let r = color_search(&c5, 3, None);
        let f = found(&r);
        assert_eq!(f[0], 0);
        assert!(validate_homomorphism(&c5, &Graph::complete(3), f));
    }
}
