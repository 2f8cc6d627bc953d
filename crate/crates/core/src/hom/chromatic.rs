use super::search::{color_search, HomOutcome};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

pub const DEFAULT_CHROMATIC_BOUND: usize = 256;

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub value: usize,
    pub coloring: Coloring,
    /// Clique used as the starting lower bound.
    pub clique: Vec<usize>,
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    chromatic_number_bounded(g, DEFAULT_CHROMATIC_BOUND)
}

/// Exact chromatic number: tries `c = |clique|, |clique|+1, ...` below the
/// DSATUR upper bound, each time with a complete search into `K_c`.
pub fn chromatic_number_bounded(g: &Graph, bound: usize) -> Result<ChromaticResult> {
    if g.n() > bound {
        return Err(Error::SizeLimit { n: g.n(), bound });
    }
    if g.n() == 0 {
        return Ok(ChromaticResult {
            value: 0,
            coloring: Coloring {
                color: Vec::new(),
                palette_size: 0,
            },
            clique: Vec::new(),
        });
    }
    let clique = greedy_clique(g);
    let upper = dsatur_greedy(g);
    for c in clique.len()..upper.palette_size {
        match color_search(g, c, None).outcome {
            HomOutcome::Found(color) => {
                return Ok(ChromaticResult {
                    value: c,
                    coloring: Coloring {
                        color,
                        palette_size: c,
                    },
                    clique,
                })
            }
            HomOutcome::NoHom => {}
            HomOutcome::BudgetExhausted => unreachable!("unbudgeted search"),
        }
    }
    Ok(ChromaticResult {
        value: upper.palette_size,
        coloring: upper,
        clique,
    })
}

/// Largest clique found by growing greedily from each vertex.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for v in 0..g.n() {
        let mut clique = vec![v];
        let mut cand = g.neighbors(v).clone();
        while !cand.is_empty() {
            let w = cand
                .iter()
                .max_by_key(|&w| (g.neighbors(w).intersection_count(&cand), std::cmp::Reverse(w)))
                .expect("nonempty");
            clique.push(w);
            cand.intersect_with(g.neighbors(w));
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

/// DSATUR without backtracking; `palette_size` is the number of colors used.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<BitSet> = vec![BitSet::new(n + 1); n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].count(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex left");
        let c = seen[v].complement().first().expect("n + 1 colors suffice");
        color[v] = c;
        used = used.max(c + 1);
        for w in g.neighbors(v).iter() {
            seen[w].insert(c);
        }
    }
    Coloring {
        color,
        palette_size: used,
    }
}
