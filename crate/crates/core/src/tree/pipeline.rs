//! Multi-fold coloring of graphs of maximum degree `d` into `K(dk+1, k)`.
//!
//! Greedy maximal independent sets take scalar colors `0..d-3`. Every
//! remaining vertex then has a neighbor in each removed set, so the residual
//! graph `Y` has degree at most 2 and splits into paths and cycles. Paths
//! get scalars `d-2, d-1`. Scalar `i` stands for the block `ik..ik+k-1`.
//! Cycles are mapped into the odd cycle `C_{2k+1}`, whose vertices are the
//! stable sets `A_j = {j, j+2, .., j+2(k-1)} mod 2k+1`, shifted into the top
//! `2k+1` colors. A cycle vertex only sees removed vertices outside `Y`,
//! and those use blocks below `(d-2)k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, maximal_independent_set, natural_order, validate_homomorphism, Graph, VertexSet};
use crate::hom::FoldColoring;

/// Homomorphism `C_m -> C_q` for odd `q >= 3`.
///
/// Even `m` alternates between two adjacent targets. Odd `m >= q` runs once
/// around `C_q` and then bounces on the edge `{q-1, 0}`.
pub fn cycle_to_odd_cycle_hom(m: usize, q: usize) -> Result<Vec<usize>> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::BadParams(format!("target cycle length {q} must be odd and at least 3")));
    }
    if m < 3 {
        return Err(Error::BadParams(format!("cycle length {m} below 3")));
    }
    let f: Vec<usize> = if m % 2 == 0 {
        (0..m).map(|i| i % 2).collect()
    } else if m >= q {
        (0..m)
            .map(|i| match i.checked_sub(q) {
                None => i,
                Some(t) if t % 2 == 0 => 0,
                Some(_) => q - 1,
            })
            .collect()
    } else {
        return Err(Error::NoHom(format!("odd cycle C_{m} is shorter than C_{q}")));
    };
    let ok = validate_homomorphism(&Graph::cycle(m)?, &Graph::cycle(q)?, &f);
    debug_assert!(ok);
    if !ok {
        return Err(Error::CertificateInvalid("cycle folding is not a homomorphism".into()));
    }
    Ok(f)
}

/// How a vertex got its colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    /// Removed in the `i`-th independent set.
    Independent(usize),
    /// On a path component of the residual graph, with scalar `d-2` or `d-1`.
    Path(usize),
    /// On a cycle component, mapped to vertex `j` of `C_{2k+1}`.
    Cycle(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineColoring {
    pub d: usize,
    pub coloring: FoldColoring,
    pub layer: Vec<Layer>,
    /// Cycle components of the residual graph, each in cyclic order.
    pub cycles: Vec<Vec<usize>>,
}

fn block(i: usize, k: usize) -> Vec<usize> {
    (i * k..i * k + k).collect()
}

fn stable_set(j: usize, k: usize, offset: usize) -> Vec<usize> {
    let q = 2 * k + 1;
    let mut s: Vec<usize> = (0..k).map(|t| offset + (j + 2 * t) % q).collect();
    s.sort_unstable();
    s
}

/// Cyclic order of a component in which every vertex has degree 2, starting
/// at its least vertex and heading to that vertex's lesser neighbor.
fn cycle_order(y: &Graph, comp: &[usize]) -> Vec<usize> {
    let start = comp[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = y.neighbors(start).first().expect("degree 2");
    while cur != start {
        order.push(cur);
        let next = y.neighbors(cur).iter().find(|&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    order
}

/// Path order from the least endpoint.
fn path_order(y: &Graph, comp: &[usize]) -> Vec<usize> {
    let start = *comp.iter().find(|&&v| y.degree(v) <= 1).expect("paths have endpoints");
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = y.neighbors(cur).iter().find(|&w| Some(w) != prev) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

pub fn kfold_color_pipeline(g: &Graph, d: usize, k: usize) -> Result<PipelineColoring> {
    kfold_color_pipeline_ordered(g, d, k, &natural_order(g.n()))
}

/// As [`kfold_color_pipeline`], scanning `order` when building the
/// independent sets.
pub fn kfold_color_pipeline_ordered(g: &Graph, d: usize, k: usize, order: &[usize]) -> Result<PipelineColoring> {
    if d < 2 || k < 1 {
        return Err(Error::BadParams(format!("need d >= 2 and k >= 1, got d = {d}, k = {k}")));
    }
    if g.max_degree() > d {
        return Err(Error::DegreeTooHigh {
            found: g.max_degree(),
            allowed: d,
        });
    }
    let n = g.n();
    let mut layer = vec![None; n];
    let mut active = VertexSet::full(n);
    for i in 0..d - 2 {
        let s = maximal_independent_set(g, &active, order)?;
        for v in s.iter() {
            layer[v] = Some(Layer::Independent(i));
        }
        active.difference_with(&s);
    }

    let (y, back) = g.induced_subgraph(&active);
    assert!(y.max_degree() <= 2, "residual degree {} after removing maximal sets", y.max_degree());

    let mut cycles = Vec::new();
    for comp in connected_components(&y) {
        let all_two = comp.iter().all(|&v| y.degree(v) == 2);
        if comp.len() >= 3 && all_two {
            let cyc = cycle_order(&y, &comp);
            let m = cyc.len();
            if m % 2 == 1 && m < 2 * k + 1 {
                return Err(Error::ShortOddCycle {
                    length: m,
                    required: 2 * k + 1,
                });
            }
            let f = cycle_to_odd_cycle_hom(m, 2 * k + 1)?;
            for (pos, &v) in cyc.iter().enumerate() {
                layer[back[v]] = Some(Layer::Cycle(f[pos]));
            }
            cycles.push(cyc.into_iter().map(|v| back[v]).collect());
        } else {
            for (pos, v) in path_order(&y, &comp).into_iter().enumerate() {
                layer[back[v]] = Some(Layer::Path(d - 2 + pos % 2));
            }
        }
    }

    let layer: Vec<Layer> = layer.into_iter().map(|l| l.expect("every vertex is colored")).collect();
    let sets = layer
        .iter()
        .map(|l| match *l {
            Layer::Independent(i) | Layer::Path(i) => block(i, k),
            Layer::Cycle(j) => stable_set(j, k, (d - 2) * k),
        })
        .collect();
    let coloring = FoldColoring {
        palette: d * k + 1,
        k,
        sets,
    };
    coloring.validate(g)?;
    Ok(PipelineColoring {
        d,
        coloring,
        layer,
        cycles,
    })
}
