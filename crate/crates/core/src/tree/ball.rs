//! The ball-labeling graph `H(d, g)`.
//!
//! Vertices are injective labelings of the radius-`g` ball `B` of the
//! `d`-regular tree by `{0..N-1}`, taken up to rooted automorphisms of `B`.
//! A labeling is stored in canonical form: the ball is listed in preorder
//! with the children of every node sorted by label. Because labels are
//! injective, this is the lexicographically least preorder sequence among
//! all representatives.
//!
//! Two labelings `f0, f1` are adjacent iff some labeling `F` of the tree and
//! some tree edge `v0 v1` make `F` restricted to `B(v_i, g)` isomorphic to
//! `f_i`. Only the overlap `B(v0, g) ∩ B(v1, g)` constrains `F`. Cutting the
//! edge `v0 v1` splits the overlap into two pieces, each a full
//! `(d-1)`-ary tree of depth `g-1`:
//!
//! * `A(f, c)`: the whole subtree of the root's `c`-th child;
//! * `B(f, c)`: the root with its other branches, cut at depth `g-1`.
//!
//! So `f0 ~ f1` iff there are `c, c'` with `A(f0, c) = B(f1, c')` and
//! `A(f1, c') = B(f0, c)`, compared as canonical labeled trees. Given such
//! `c, c'`, the rooted automorphisms of `f1` act independently on branch
//! `c'` and on the rest, so one representative of `f1` matches `f0` on the
//! whole overlap and `F` exists. Conversely any `F` yields such `c, c'`.
//! Labels outside the overlap are unconstrained; `F` need not be injective
//! on the union of the two balls.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::truncated::{truncated_tree_capped, TruncatedTree};
use crate::error::{cap_check, Error, Result};
use crate::graph::{greedy_coloring, natural_order, power_graph, Coloring, Graph, GraphBuilder};
use crate::kneser::DEFAULT_VERTEX_CAP;

#[derive(Clone, Debug)]
struct ShapeNode {
    depth: usize,
    /// Preorder index of the previous sibling, if any.
    prev_sibling: Option<usize>,
    children: Vec<usize>,
    /// One past the last preorder index of this node's subtree.
    end: usize,
}

/// The radius-`g` ball of the `d`-regular tree, in preorder.
#[derive(Clone, Debug)]
pub struct BallShape {
    pub d: usize,
    pub g: usize,
    nodes: Vec<ShapeNode>,
}

impl BallShape {
    pub fn new(d: usize, g: usize) -> Result<Self> {
        if d < 2 || g < 1 {
            return Err(Error::BadParams(format!("ball shape needs d >= 2, g >= 1; got d = {d}, g = {g}")));
        }
        let mut nodes = Vec::new();
        build_shape(d, g, 0, None, &mut nodes);
        Ok(BallShape { d, g, nodes })
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Order of the rooted automorphism group: `d!` at the root and
    /// `(d-1)!` at every other internal node.
    pub fn automorphism_count(&self) -> BigUint {
        let fact = |m: usize| (1..=m).fold(BigUint::from(1u32), |a, i| a * BigUint::from(i));
        self.nodes
            .iter()
            .map(|n| fact(n.children.len()))
            .fold(BigUint::from(1u32), |a, f| a * f)
    }
}

fn build_shape(d: usize, g: usize, depth: usize, prev_sibling: Option<usize>, nodes: &mut Vec<ShapeNode>) -> usize {
    let id = nodes.len();
    nodes.push(ShapeNode {
        depth,
        prev_sibling,
        children: Vec::new(),
        end: 0,
    });
    if depth < g {
        let fanout = if depth == 0 { d } else { d - 1 };
        let mut prev = None;
        for _ in 0..fanout {
            let c = build_shape(d, g, depth + 1, prev, nodes);
            nodes[id].children.push(c);
            prev = Some(c);
        }
    }
    nodes[id].end = nodes.len();
    id
}

/// A canonical injective labeling of the ball.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BallLabeling {
    pub d: usize,
    pub g: usize,
    /// Labels in canonical preorder.
    pub labels: Vec<u32>,
}

/// A nested labeled tree, used to canonicalize arbitrary representatives.
#[derive(Clone, Debug)]
pub struct LabeledNode {
    pub label: u32,
    pub children: Vec<LabeledNode>,
}

impl LabeledNode {
    fn push_canonical(mut self, out: &mut Vec<u32>) {
        out.push(self.label);
        self.children.sort_by_key(|c| c.label);
        for c in self.children {
            c.push_canonical(out);
        }
    }
}

/// All canonical labelings of one ball shape with a fixed label count.
#[derive(Clone, Debug)]
pub struct BallSpace {
    pub shape: BallShape,
    pub n_labels: usize,
}

impl BallSpace {
    pub fn new(d: usize, g: usize, n_labels: usize) -> Result<Self> {
        Ok(BallSpace {
            shape: BallShape::new(d, g)?,
            n_labels,
        })
    }

    /// The label count `d^(2g)`.
    pub fn default_labels(d: usize, g: usize) -> Result<usize> {
        u32::try_from(2 * g)
            .ok()
            .and_then(|e| d.checked_pow(e))
            .ok_or_else(|| Error::BadParams(format!("d^(2g) overflows for d = {d}, g = {g}")))
    }

    /// `N (N-1) ... (N-s+1) / |Aut|`.
    pub fn count(&self) -> BigUint {
        let s = self.shape.size();
        if self.n_labels < s {
            return BigUint::zero();
        }
        let falling = (0..s).fold(BigUint::from(1u32), |a, i| a * BigUint::from(self.n_labels - i));
        falling / self.shape.automorphism_count()
    }

    /// Canonical labelings in lexicographic order.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<BallLabeling>> {
        let count = self.count().to_u128().unwrap_or(u128::MAX);
        cap_check("ball labeling count", count, cap)?;
        let mut out = Vec::with_capacity(count as usize);
        let mut labels = vec![0u32; self.shape.size()];
        let mut used = vec![false; self.n_labels];
        self.fill(0, &mut labels, &mut used, &mut out);
        debug_assert_eq!(out.len() as u128, count);
        Ok(out)
    }

    fn fill(&self, pos: usize, labels: &mut [u32], used: &mut [bool], out: &mut Vec<BallLabeling>) {
        if pos == labels.len() {
            out.push(BallLabeling {
                d: self.shape.d,
                g: self.shape.g,
                labels: labels.to_vec(),
            });
            return;
        }
        let low = self.shape.nodes[pos]
            .prev_sibling
            .map_or(0, |p| labels[p] as usize + 1);
        for x in low..self.n_labels {
            if used[x] {
                continue;
            }
            used[x] = true;
            labels[pos] = x as u32;
            self.fill(pos + 1, labels, used, out);
            used[x] = false;
        }
    }

    /// Canonical form of a labeled ball given with children in any order.
    pub fn canonicalize(&self, root: LabeledNode) -> Result<BallLabeling> {
        let mut labels = Vec::with_capacity(self.shape.size());
        root.push_canonical(&mut labels);
        let f = BallLabeling {
            d: self.shape.d,
            g: self.shape.g,
            labels,
        };
        self.check(&f)?;
        Ok(f)
    }

    /// Shape, range, injectivity and canonical order.
    pub fn check(&self, f: &BallLabeling) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGraph(m));
        if f.d != self.shape.d || f.g != self.shape.g || f.labels.len() != self.shape.size() {
            return bad("labeling does not fit the ball shape".into());
        }
        let mut seen = vec![false; self.n_labels];
        for &x in &f.labels {
            let x = x as usize;
            if x >= self.n_labels || std::mem::replace(&mut seen[x], true) {
                return bad(format!("label {x} out of range or repeated"));
            }
        }
        for (i, node) in self.shape.nodes.iter().enumerate() {
            if let Some(p) = node.prev_sibling {
                if f.labels[p] > f.labels[i] {
                    return bad("siblings are not sorted".into());
                }
            }
        }
        Ok(())
    }

    fn root_children(&self) -> &[usize] {
        &self.shape.nodes[0].children
    }

    /// `A(f, c)`: the subtree of the root's `c`-th child.
    pub fn branch_piece(&self, f: &BallLabeling, c: usize) -> Vec<u32> {
        let start = self.root_children()[c];
        f.labels[start..self.shape.nodes[start].end].to_vec()
    }

    /// `B(f, c)`: the root and its other branches, cut at depth `g - 1`.
    pub fn rest_piece(&self, f: &BallLabeling, c: usize) -> Vec<u32> {
        let skip = self.root_children()[c];
        let skip_end = self.shape.nodes[skip].end;
        (0..self.shape.size())
            .filter(|&i| !(skip..skip_end).contains(&i) && self.shape.nodes[i].depth < self.shape.g)
            .map(|i| f.labels[i])
            .collect()
    }

    /// The adjacency relation of `H`, evaluated directly.
    pub fn adjacent(&self, f0: &BallLabeling, f1: &BallLabeling) -> bool {
        let d = self.shape.d;
        (0..d).any(|c| {
            let (a0, b0) = (self.branch_piece(f0, c), self.rest_piece(f0, c));
            (0..d).any(|c1| self.branch_piece(f1, c1) == b0 && self.rest_piece(f1, c1) == a0)
        })
    }
}

#[derive(Clone, Debug)]
pub struct BallGraphOptions {
    /// Label count; `None` means `d^(2g)`.
    pub n_labels: Option<usize>,
    pub vertex_cap: u128,
    /// Greedy order for coloring the tree power; breadth-first when `None`.
    pub greedy_order: Option<Vec<usize>>,
}

impl Default for BallGraphOptions {
    fn default() -> Self {
        BallGraphOptions {
            n_labels: None,
            vertex_cap: DEFAULT_VERTEX_CAP,
            greedy_order: None,
        }
    }
}

impl BallGraphOptions {
    fn space(&self, d: usize, g: usize) -> Result<BallSpace> {
        let n = match self.n_labels {
            Some(n) => n,
            None => BallSpace::default_labels(d, g)?,
        };
        BallSpace::new(d, g, n)
    }
}

/// `H(d, g)` with its vertices materialized.
#[derive(Clone, Debug)]
pub struct BallGraph {
    pub space: BallSpace,
    /// Sorted, so vertex ids are found by binary search.
    pub vertices: Vec<BallLabeling>,
    pub graph: Graph,
}

impl BallGraph {
    pub fn index_of(&self, f: &BallLabeling) -> Option<usize> {
        self.vertices.binary_search(f).ok()
    }
}

pub fn ball_labeling_graph(d: usize, g: usize) -> Result<BallGraph> {
    ball_labeling_graph_with(d, g, &BallGraphOptions::default())
}

pub fn ball_labeling_graph_with(d: usize, g: usize, opts: &BallGraphOptions) -> Result<BallGraph> {
    let space = opts.space(d, g)?;
    let vertices = space.enumerate(opts.vertex_cap)?;
    let mut by_pieces: HashMap<(Vec<u32>, Vec<u32>), Vec<usize>> = HashMap::new();
    for (v, f) in vertices.iter().enumerate() {
        for c in 0..d {
            by_pieces
                .entry((space.branch_piece(f, c), space.rest_piece(f, c)))
                .or_default()
                .push(v);
        }
    }
    let mut b = GraphBuilder::new(vertices.len());
    for (v, f) in vertices.iter().enumerate() {
        for c in 0..d {
            let key = (space.rest_piece(f, c), space.branch_piece(f, c));
            for &w in by_pieces.get(&key).into_iter().flatten() {
                if w > v {
                    b.add_edge(v, w)?;
                }
            }
        }
    }
    Ok(BallGraph {
        space,
        vertices,
        graph: b.build(),
    })
}

/// Ball labeling read off the tree around `x`, with labels `color`.
pub fn labeling_around(space: &BallSpace, tree: &Graph, color: &[usize], x: usize) -> Result<BallLabeling> {
    fn grow(tree: &Graph, color: &[usize], v: usize, from: Option<usize>, left: usize) -> Result<LabeledNode> {
        let label = u32::try_from(color[v]).map_err(|_| Error::BadParams("label too large".into()))?;
        let children = if left == 0 {
            Vec::new()
        } else {
            tree.neighbors(v)
                .iter()
                .filter(|&w| Some(w) != from)
                .map(|w| grow(tree, color, w, Some(v), left - 1))
                .collect::<Result<_>>()?
        };
        Ok(LabeledNode { label, children })
    }
    space.canonicalize(grow(tree, color, x, None, space.shape.g)?)
}

/// The map from the interior of a truncated tree into `H(d, g)`.
#[derive(Clone, Debug)]
pub struct TreeBallHom {
    pub tree: TruncatedTree,
    pub space: BallSpace,
    /// Greedy coloring of the distance-`2g` power of the tree.
    pub coloring: Coloring,
    /// Interior vertices, increasing.
    pub interior: Vec<usize>,
    /// Image of each interior vertex, aligned with `interior`.
    pub labelings: Vec<BallLabeling>,
}

impl TreeBallHom {
    fn image(&self, v: usize) -> Option<&BallLabeling> {
        self.interior.binary_search(&v).ok().map(|i| &self.labelings[i])
    }

    /// Every edge between interior vertices maps to an edge of `H`.
    pub fn validate(&self) -> Result<()> {
        for (u, v) in self.tree.interior_edges() {
            let (fu, fv) = (self.image(u).expect("interior"), self.image(v).expect("interior"));
            if !self.space.adjacent(fu, fv) {
                return Err(Error::CertificateInvalid(format!("tree edge ({u},{v}) maps to a non-edge")));
            }
        }
        Ok(())
    }

    /// Vertex ids in a materialized `H`, aligned with `interior`.
    pub fn indices_in(&self, h: &BallGraph) -> Result<Vec<usize>> {
        self.labelings
            .iter()
            .map(|f| {
                h.index_of(f)
                    .ok_or_else(|| Error::CertificateInvalid("labeling is not a vertex of H".into()))
            })
            .collect()
    }
}

pub fn tree_to_ball_hom(d: usize, g: usize, depth: usize) -> Result<TreeBallHom> {
    tree_to_ball_hom_with(d, g, depth, &BallGraphOptions::default())
}

/// Colors the `2g`-th power of the truncated tree greedily in breadth-first
/// order with `N` colors and sends each interior vertex to its colored
/// radius-`g` ball. Distinct vertices of one ball are within distance `2g`,
/// so the coloring is injective on balls. The result is validated.
pub fn tree_to_ball_hom_with(d: usize, g: usize, depth: usize, opts: &BallGraphOptions) -> Result<TreeBallHom> {
    let space = opts.space(d, g)?;
    let tree = truncated_tree_capped(d, depth, g, opts.vertex_cap)?;
    let power = power_graph(&tree.graph, 2 * g);
    let order = opts.greedy_order.clone().unwrap_or_else(|| natural_order(power.n()));
    let coloring = greedy_coloring(&power, &order, space.n_labels)?;
    let interior = tree.interior.to_vec();
    let labelings = interior
        .iter()
        .map(|&x| labeling_around(&space, &tree.graph, &coloring.color, x))
        .collect::<Result<Vec<_>>>()?;
    let hom = TreeBallHom {
        tree,
        space,
        coloring,
        interior,
        labelings,
    };
    hom.validate()?;
    Ok(hom)
}
