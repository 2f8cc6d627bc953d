use super::cayley::{cayley_ball_capped, DEFAULT_WORD_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The `d`-regular tree cut off at depth `R` around a root, with the vertices
/// whose radius-`g` ball lies entirely inside marked as interior.
///
/// Built as the Cayley ball of the free product, so vertices are in
/// breadth-first order and every edge carries its generator label.
#[derive(Clone, Debug)]
pub struct TruncatedTree {
    pub graph: Graph,
    pub root: usize,
    pub depth: usize,
    pub g: usize,
    pub d: usize,
    pub interior: VertexSet,
    /// Distance from the root.
    pub level: Vec<usize>,
    pub parent: Vec<Option<usize>>,
}

pub fn truncated_tree(d: usize, depth: usize, g: usize) -> Result<TruncatedTree> {
    truncated_tree_capped(d, depth, g, DEFAULT_WORD_CAP)
}

pub fn truncated_tree_capped(d: usize, depth: usize, g: usize, cap: u128) -> Result<TruncatedTree> {
    if depth < g {
        return Err(Error::BadParams(format!("depth {depth} is below the radius {g}")));
    }
    let ball = cayley_ball_capped(d, depth, cap)?;
    let n = ball.graph.n();
    let level: Vec<usize> = ball.words.iter().map(|w| w.len()).collect();
    let mut parent = vec![None; n];
    for v in 1..n {
        parent[v] = ball.graph.neighbors(v).iter().find(|&u| level[u] + 1 == level[v]);
    }
    let interior = VertexSet::from_members(n, (0..n).filter(|&v| level[v] + g <= depth));
    Ok(TruncatedTree {
        graph: ball.graph,
        root: 0,
        depth,
        g,
        d,
        interior,
        level,
        parent,
    })
}

impl TruncatedTree {
    /// Neighbors of `v` other than `from`, in increasing index order.
    pub fn children_from(&self, v: usize, from: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().filter(move |&w| Some(w) != from)
    }

    /// Edges with both ends interior.
    pub fn interior_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .filter(|&(u, v)| self.interior.contains(u) && self.interior.contains(v))
    }
}
