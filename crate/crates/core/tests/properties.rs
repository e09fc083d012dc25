mod common;

use locdom::graph6::{emit_graph6, parse_graph6};
use locdom::greedy::greedy_partition;
use locdom::invariants::{
    chromatic_number, clique_number, domination_number, independence_number, is_distinguishing, is_dominating,
    is_locating_dominating, is_resolving, k_domination_number, location_domination_number, metric_dimension,
    upper_domination_number,
};
use locdom::matching::maximum_matching;
use locdom::symmetry::{canonical_form, determining_number, is_determining};
use locdom::trees::tree_metric_dimension;
use locdom::twins::{are_twins, build_tilde, is_twin_free, lift_ld_set, twin_decomposition};
use locdom::{Graph, SolverConfig, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(|seq| common::prufer_tree(&seq)))
}

/// A random tree plus random chords, so always connected.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (tree(max_n), any::<u64>()).prop_map(|(t, chords)| {
        let n = t.order();
        let mut edges: Vec<_> = t.edges().collect();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if chords >> (k % 64) & 1 == 1 && k % 3 == 0 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

fn permutation(n: usize, key: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut x = key | 1;
    for i in (1..n).rev() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        p.swap(i, (x % (i as u64 + 1)) as usize);
    }
    p
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in graph(20)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.rows(), g.rows());
    }

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
        let cc = c.complement();
        prop_assert_eq!(cc.rows(), g.rows());
    }

    #[test]
    fn distances_match_floyd_warshall(g in graph(16)) {
        let d = g.distances();
        let fw = common::floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v), fw[u][v]);
            }
        }
    }

    #[test]
    fn invariant_chain(g in connected(9)) {
        let det = determining_number(&g, &cfg()).unwrap();
        let dim = metric_dimension(&g, &cfg()).unwrap();
        let lam = location_domination_number(&g, &cfg()).unwrap();
        prop_assert!(det.value <= dim.value && dim.value <= lam.value);
        prop_assert!(is_determining(&g, det.witness));
        prop_assert!(is_resolving(&g, dim.witness).unwrap());
        prop_assert!(is_locating_dominating(&g, lam.witness));
        prop_assert_eq!(dim.witness.len(), dim.value);
        prop_assert_eq!(lam.witness.len(), lam.value);
    }

    #[test]
    fn solvers_match_brute_force(g in connected(8)) {
        prop_assert_eq!(metric_dimension(&g, &cfg()).unwrap().value, common::min_size(&g, |m| common::resolves(&g, m)));
        prop_assert_eq!(location_domination_number(&g, &cfg()).unwrap().value, common::min_size(&g, |m| common::locates(&g, m)));
        prop_assert_eq!(domination_number(&g, &cfg()).unwrap().value, common::min_size(&g, |m| common::dominates(&g, m)));
        prop_assert_eq!(k_domination_number(&g, 2, &cfg()).unwrap().value, common::min_size(&g, |m| common::k_dominates(&g, m, 2)));
        prop_assert_eq!(upper_domination_number(&g, &cfg()).unwrap().value, common::max_size(&g, |m| common::minimal_dominating(&g, m)));
        prop_assert_eq!(independence_number(&g, &cfg()).unwrap().value, common::max_size(&g, |m| common::independent(&g, m)));
        prop_assert_eq!(clique_number(&g, &cfg()).unwrap().value, common::max_size(&g, |m| common::clique(&g, m)));
        prop_assert_eq!(chromatic_number(&g, &cfg()).unwrap().value, common::chromatic(&g));
        prop_assert_eq!(maximum_matching(&g).len(), common::matching_number(&g));
    }

    #[test]
    fn determining_number_matches_permutation_search(g in graph(7)) {
        prop_assert_eq!(determining_number(&g, &cfg()).unwrap().value, common::determining(&g));
    }

    #[test]
    fn predicates_agree_with_oracles(g in graph(9), mask in any::<u64>()) {
        let m = mask & VertexSet::full(g.order()).bits();
        let s = VertexSet::from_bits(m);
        prop_assert_eq!(is_dominating(&g, s), common::dominates(&g, m));
        prop_assert_eq!(is_locating_dominating(&g, s), common::locates(&g, m));
        if g.is_connected() {
            prop_assert_eq!(is_resolving(&g, s).unwrap(), common::resolves(&g, m));
        }
    }

    #[test]
    fn canonical_form_ignores_labelling(g in graph(12), key in any::<u64>()) {
        let h = g.permuted(&permutation(g.order(), key));
        prop_assert_eq!(canonical_form(&g).rows, canonical_form(&h).rows);
        prop_assert!(canonical_form(&g).graph().same_structure(&canonical_form(&h).graph()));
    }

    #[test]
    fn twin_classes_partition_the_vertices(g in graph(12)) {
        let td = twin_decomposition(&g);
        let all = td.classes.iter().fold(VertexSet::EMPTY, |a, &c| {
            assert!((a & c).is_empty());
            a | c
        });
        prop_assert_eq!(all, g.vertices());
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let same = td.class_of[u] == td.class_of[v];
                prop_assert_eq!(same, common::twins(&g, u, v));
                prop_assert_eq!(are_twins(&g, u, v), same);
            }
        }
        prop_assert_eq!(is_twin_free(&g), td.classes.len() == g.order());
        prop_assert_eq!(td.omega.len(), g.order() - td.r());
    }

    #[test]
    fn lifted_sets_locate(g in connected(9)) {
        let td = twin_decomposition(&g);
        if let Ok(tg) = build_tilde(&g, &td) {
            let ld = location_domination_number(&tg.graph, &cfg()).unwrap();
            let lifted = lift_ld_set(&g, &td, &tg, ld.witness).unwrap();
            prop_assert!(is_locating_dominating(&g, lifted));
            prop_assert!(is_twin_free(&tg.graph));
        }
    }

    #[test]
    fn greedy_partition_sets(g in connected(12), seed in any::<usize>()) {
        prop_assume!(is_twin_free(&g) && g.order() >= 2);
        let gp = greedy_partition(&g, seed % g.order()).unwrap();
        prop_assert_eq!(gp.a | gp.b | gp.c, g.vertices());
        prop_assert_eq!(gp.a.len() + gp.b.len() + gp.c.len(), g.order());
        for d in gp.distinguishing_sets() {
            prop_assert!(is_distinguishing(&g, d));
        }
        for d in gp.determining_sets() {
            prop_assert!(is_determining(&g, d));
        }
        prop_assert!(is_locating_dominating(&g, gp.ld_set(&g).unwrap()));
    }

    #[test]
    fn tree_formula_matches_search(t in tree(12)) {
        let f = tree_metric_dimension(&t).unwrap();
        prop_assert_eq!(f.value, common::min_size(&t, |m| common::resolves(&t, m)));
        prop_assert!(common::resolves(&t, f.witness.bits()));
    }
}
