use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coloring, Graph, VertexSet};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default vertex bound for exact independence number search.
pub const DEFAULT_INDEPENDENCE_BOUND: usize = 64;

/// Length of a shortest cycle of some kind, or `Infinite` when there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(l) => Some(l),
            Girth::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Girth::Infinite
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(l) => write!(f, "{l}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(l) => s.serialize_u64(*l as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(usize),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(l) => Ok(Girth::Finite(l)),
            Repr::Text(t) if t == "infinite" => Ok(Girth::Infinite),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("bad girth {t:?}"))),
        }
    }
}

pub fn natural_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn check_order(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::BadOrder(n));
    }
    let mut seen = BitSet::new(n);
    for &v in order {
        if v >= n || !seen.insert(v) {
            return Err(Error::BadOrder(n));
        }
    }
    Ok(())
}

fn neighborhood(g: &Graph, set: &BitSet) -> BitSet {
    let mut out = BitSet::new(g.n());
    for v in set.iter() {
        out.union_with(g.neighbors(v));
    }
    out
}

/// Length of a shortest odd cycle.
///
/// Runs a breadth-first search on the bipartite double cover from every root:
/// the first time the root is reached with odd parity gives its shortest odd
/// closed walk, and the minimum over roots is the odd girth.
pub fn odd_girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut seen = [BitSet::new(n), BitSet::new(n)];
        seen[0].insert(root);
        let mut frontier = seen[0].clone();
        let mut dist = 0usize;
        loop {
            dist += 1;
            if dist >= best {
                break;
            }
            let parity = dist % 2;
            let mut next = neighborhood(g, &frontier);
            next.difference_with(&seen[parity]);
            if next.is_empty() {
                break;
            }
            if parity == 1 && next.contains(root) {
                best = dist;
                break;
            }
            seen[parity].union_with(&next);
            frontier = next;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Length of a shortest cycle of any parity.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Proper 2-coloring when one exists.
pub fn is_bipartite(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// `u ~ v` in the result iff `1 <= dist_G(u, v) <= r`.
pub fn power_graph(g: &Graph, r: usize) -> Graph {
    let n = g.n();
    let mut adj = Vec::with_capacity(n);
    for v in 0..n {
        let mut reach = BitSet::new(n);
        reach.insert(v);
        let mut frontier = reach.clone();
        for _ in 0..r {
            let mut next = neighborhood(g, &frontier);
            next.difference_with(&reach);
            if next.is_empty() {
                break;
            }
            reach.union_with(&next);
            frontier = next;
        }
        reach.remove(v);
        adj.push(reach);
    }
    Graph {
        n,
        adj,
        labels: Default::default(),
    }
}

/// First-fit coloring along `order`.
pub fn greedy_coloring(g: &Graph, order: &[usize], palette: usize) -> Result<Coloring> {
    let n = g.n();
    check_order(order, n)?;
    let mut color = vec![usize::MAX; n];
    let mut used = BitSet::new(g.max_degree() + 1);
    for &v in order {
        used.clear();
        for w in g.neighbors(v).iter() {
            if color[w] < used.universe() {
                used.insert(color[w]);
            }
        }
        let c = (0..).find(|&c| !used.contains(c)).expect("unbounded search");
        if c >= palette {
            return Err(Error::PaletteTooSmall { vertex: v, palette });
        }
        color[v] = c;
    }
    Ok(Coloring {
        color,
        palette_size: palette,
    })
}

/// Greedy inclusion-maximal independent subset of `active`, scanning `order`.
pub fn maximal_independent_set(g: &Graph, active: &VertexSet, order: &[usize]) -> Result<VertexSet> {
    check_order(order, g.n())?;
    let mut chosen = BitSet::new(g.n());
    let mut blocked = BitSet::new(g.n());
    for &v in order {
        if active.contains(v) && !blocked.contains(v) {
            chosen.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    Ok(chosen)
}

/// A maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    pub witness: VertexSet,
}

pub fn independence_number(g: &Graph) -> Result<IndependentSet> {
    independence_number_bounded(g, DEFAULT_INDEPENDENCE_BOUND)
}

/// Exact maximum independent set by branch and bound. The bound at each node
/// is the number of cliques in a greedy clique cover of the candidate set.
pub fn independence_number_bounded(g: &Graph, bound: usize) -> Result<IndependentSet> {
    if g.n() > bound {
        return Err(Error::SizeLimit { n: g.n(), bound });
    }
    let n = g.n();
    // non-neighbors, excluding self
    let nonadj: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut row = g.neighbors(v).complement();
            row.remove(v);
            row
        })
        .collect();
    let mut search = MisSearch {
        g,
        nonadj,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(BitSet::full(n));
    Ok(IndependentSet {
        size: search.best.len(),
        witness: BitSet::from_members(n, search.best.iter().copied()),
    })
}

struct MisSearch<'a> {
    g: &'a Graph,
    nonadj: Vec<BitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl MisSearch<'_> {
    fn expand(&mut self, mut cand: BitSet) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        // Vertices paired with the number of cliques opened so far.
        let mut ordered: Vec<(usize, usize)> = Vec::with_capacity(cand.count());
        let mut rest = cand.clone();
        let mut cliques = 0;
        while !rest.is_empty() {
            cliques += 1;
            let mut open = rest.clone();
            while let Some(v) = open.first() {
                open.intersect_with(self.g.neighbors(v));
                rest.remove(v);
                ordered.push((v, cliques));
            }
        }
        for &(v, bound) in ordered.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand.intersection(&self.nonadj[v]);
            self.expand(next);
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Checks that `f` maps every edge of `g` onto an edge of `h`.
pub fn validate_homomorphism(g: &Graph, h: &Graph, f: &[usize]) -> bool {
    f.len() == g.n() && f.iter().all(|&x| x < h.n()) && g.edges().all(|(u, v)| h.has_edge(f[u], f[v]))
}

/// Vertex sets of the connected components, each sorted, ordered by least member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        queue.push_back(s);
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for w in g.neighbors(u).iter() {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// A 4-cycle `a - b - c - d - a` on distinct vertices, if one exists.
pub fn four_cycle(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for c in a + 1..n {
            let common = g.neighbors(a).intersection(g.neighbors(c));
            let mut it = common.iter();
            if let (Some(b), Some(d)) = (it.next(), it.next()) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}
