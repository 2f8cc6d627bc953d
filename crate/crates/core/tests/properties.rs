use std::collections::{HashSet, VecDeque};

use num_rational::BigRational;
use proptest::prelude::*;
use treehom::cert::corollary_step;
use treehom::g0::{build_dense_family, check_density, flip_map};
use treehom::graph::{
    greedy_coloring, independence_number, is_bipartite, maximal_independent_set, natural_order, odd_girth,
    power_graph, random_bounded_graph, random_forest, validate_homomorphism,
};
use treehom::hom::{
    enumerate_maximal_independent_sets, find_homomorphism, fractional_chromatic_lp, kfold_from_lp, HomInstance,
    HomOutcome,
};
use treehom::kneser::kneser_graph;
use treehom::tree::{kfold_color_pipeline, sigma_circuit, tree_to_ball_hom, Layer, ReducedWord};
use treehom::{Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

fn distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn odd_girth_infinite_iff_bipartite(g in arb_graph(14)) {
        prop_assert_eq!(odd_girth(&g).is_infinite(), is_bipartite(&g).is_some());
    }

    #[test]
    fn power_graph_joins_pairs_within_radius(g in arb_graph(12), r in 1usize..4) {
        let p = power_graph(&g, r);
        for u in 0..g.n() {
            let dist = distances(&g, u);
            for v in 0..g.n() {
                let near = u != v && dist[v].is_some_and(|x| x <= r);
                prop_assert_eq!(p.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn greedy_coloring_is_proper(g in arb_graph(16)) {
        let c = greedy_coloring(&g, &natural_order(g.n()), g.max_degree() + 1).unwrap();
        prop_assert!(c.is_proper(&g));
        prop_assert!(c.colors_used() <= g.max_degree() + 1);
    }

    #[test]
    fn maximal_sets_are_independent_and_maximal(g in arb_graph(16)) {
        let all = VertexSet::full(g.n());
        let s = maximal_independent_set(&g, &all, &natural_order(g.n())).unwrap();
        for u in s.iter() {
            for v in s.iter() {
                prop_assert!(!g.has_edge(u, v));
            }
        }
        for v in 0..g.n() {
            prop_assert!(s.contains(v) || g.neighbors(v).iter().any(|w| s.contains(w)));
        }
        for m in enumerate_maximal_independent_sets(&g).unwrap() {
            prop_assert!(m.iter().all(|u| m.iter().all(|v| !g.has_edge(u, v))));
            prop_assert!((0..g.n()).all(|v| m.contains(v) || g.neighbors(v).iter().any(|w| m.contains(w))));
        }
    }

    #[test]
    fn independence_number_matches_brute_force(g in arb_graph(14)) {
        prop_assert_eq!(independence_number(&g).unwrap().size, brute_alpha(&g));
    }

    #[test]
    fn lp_certificates_verify(g in arb_graph(10)) {
        let cert = fractional_chromatic_lp(&g).unwrap();
        prop_assert!(cert.verify(&g).is_ok());
        let alpha = brute_alpha(&g);
        prop_assert!(cert.value >= BigRational::new((g.n() as i64).into(), (alpha as i64).into()));
        let fold = kfold_from_lp(&g, &cert).unwrap();
        prop_assert!(fold.validate(&g).is_ok());
        let (a, b) = fold.ratio();
        prop_assert_eq!(BigRational::new((a as i64).into(), (b as i64).into()), cert.value);
    }

    #[test]
    fn found_homomorphisms_validate(g in arb_graph(9), h in arb_graph(5)) {
        let report = find_homomorphism(&HomInstance::new(&g, &h)).unwrap();
        match report.outcome {
            HomOutcome::Found(f) => prop_assert!(validate_homomorphism(&g, &h, &f)),
            HomOutcome::NoHom => {
                // exhaustive cross-check over all maps
                let mut f = vec![0usize; g.n()];
                let total = h.n().pow(g.n() as u32);
                let any = (0..total).any(|mut code| {
                    for x in f.iter_mut() {
                        *x = code % h.n();
                        code /= h.n();
                    }
                    validate_homomorphism(&g, &h, &f)
                });
                prop_assert!(!any);
            }
            HomOutcome::BudgetExhausted => prop_assert!(false, "no budget was set"),
        }
    }

    #[test]
    fn pipeline_on_forests(n in 1usize..80, d in 2usize..5, k in 1usize..4, seed: u64) {
        let g = random_forest(n, d, seed);
        let c = kfold_color_pipeline(&g, d, k).unwrap();
        prop_assert!(c.coloring.validate(&g).is_ok());
        prop_assert_eq!(c.coloring.palette, d * k + 1);
        prop_assert!(c.cycles.is_empty());
    }

    #[test]
    fn pipeline_on_bounded_graphs(n in 3usize..40, d in 2usize..5, k in 1usize..4, seed: u64) {
        let g = random_bounded_graph(n, d, 2 * k + 1, seed);
        let c = kfold_color_pipeline(&g, d, k).unwrap();
        prop_assert!(c.coloring.validate(&g).is_ok());
        // residual vertices have degree at most 2 among themselves
        let residual: HashSet<usize> = (0..n).filter(|&v| !matches!(c.layer[v], Layer::Independent(_))).collect();
        for &v in &residual {
            prop_assert!(g.neighbors(v).iter().filter(|w| residual.contains(w)).count() <= 2);
        }
        // cycle colors lie in the top 2k+1 slots, away from every removed block
        for cyc in &c.cycles {
            for &v in cyc {
                prop_assert!(c.coloring.sets[v].iter().all(|&x| x >= (d - 2) * k));
                for w in g.neighbors(v).iter() {
                    if let Layer::Independent(i) = c.layer[w] {
                        prop_assert!(i < d - 2);
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_is_a_reduced_palindrome(letters in proptest::collection::vec(0u8..4, 1..8)) {
        let mut tau = letters;
        tau.dedup();
        let d = 4;
        let c = sigma_circuit(&ReducedWord::new(d, tau.clone()).unwrap()).unwrap();
        let s = c.sigma.letters();
        prop_assert_eq!(s.len(), 2 * tau.len() - 1);
        prop_assert!(s.windows(2).all(|w| w[0] != w[1]));
        prop_assert!(s.iter().eq(s.iter().rev()));
        prop_assert_eq!(&s[..tau.len()], tau.as_slice());
        prop_assert!(c.verify().is_ok());
    }

    #[test]
    fn dense_families_work_for_every_seed(seed: u64, d in 2usize..4) {
        let fam = build_dense_family(14, d, seed).unwrap();
        prop_assert!(check_density(&fam).is_ok());
        for i in 0..d {
            for x in (0..1u64 << 14).step_by(37) {
                if let Some(y) = flip_map(&fam, i, 0, x) {
                    prop_assert_eq!(flip_map(&fam, i, 0, y), Some(x));
                }
            }
        }
    }

    #[test]
    fn witness_validity_is_monotone(m in 1u64..4) {
        let d = 3;
        let mut seen_valid = false;
        for k in (m..=96).step_by(m as usize) {
            let step = corollary_step(d, m, k).unwrap();
            let ok = step.size_holds && step.girth_holds;
            prop_assert!(!seen_valid || ok, "valid below k = {} but not at it", k);
            seen_valid |= ok;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn trees_map_into_ball_graphs(d in 2usize..4, depth in 1usize..8) {
        let hom = tree_to_ball_hom(d, 1, depth).unwrap();
        prop_assert!(hom.validate().is_ok());
    }
}

#[test]
fn kneser_lp_value_is_n_over_k() {
    for n in 2..=10usize {
        for k in 1..=n / 2 {
            let g = kneser_graph(n, k).unwrap();
            if g.graph.n() > 40 {
                continue;
            }
            let cert = fractional_chromatic_lp(&g.graph).unwrap();
            assert_eq!(cert.value, BigRational::new((n as i64).into(), (k as i64).into()));
        }
    }
}
