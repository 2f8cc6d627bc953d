use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algo::{odd_girth, Girth};
use super::{Graph, GraphBuilder};

/// Random forest on `n` vertices with maximum degree `max_degree`: each
/// vertex after the first either starts a new tree (probability `1/8`) or
/// hangs below a random earlier vertex that still has room.
pub fn random_forest(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    let mut degree = vec![0usize; n];
    for v in 1..n {
        if max_degree == 0 || rng.gen_ratio(1, 8) {
            continue;
        }
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        if let Some(&u) = open.choose(&mut rng) {
            b.add_edge(u, v).expect("fresh edge");
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    b.build()
}

/// Random graph with maximum degree `max_degree` whose odd cycles all have
/// length at least `min_odd_girth`. Candidate edges are tried in random
/// order and kept only if they respect both bounds.
pub fn random_bounded_graph(n: usize, max_degree: usize, min_odd_girth: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for (u, v) in pairs {
        if degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        edges.push((u, v));
        let g = Graph::from_edges(n, edges.iter().copied()).expect("simple");
        match odd_girth(&g) {
            Girth::Finite(l) if l < min_odd_girth => {
                edges.pop();
            }
            _ => {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}
