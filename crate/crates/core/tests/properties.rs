mod common;

use common::*;
use proptest::prelude::*;

use qcontract::connectivity::{
    classify_cut, enumerate_cuts, is_quasi_k_connected, vertex_connectivity, CutClass,
};
use qcontract::contraction::{
    classify_contraction, contract_edge, quasi_fragments, ContractionVerdict,
};
use qcontract::graph6;
use qcontract::harness::{check_claim, Claim};
use qcontract::patterns::{
    canonical_form, canonical_graph, canonical_labeling, contains_subgraph, MatchKind,
};
use qcontract::{Edge, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

/// Graph with at least one edge, paired with an edge index.
fn graph_and_edge(max_n: usize) -> impl Strategy<Value = (Graph, Edge)> {
    (graph(max_n), any::<prop::sample::Index>())
        .prop_filter("has an edge", |(g, _)| g.edge_count() > 0)
        .prop_map(|(g, i)| {
            let edges: Vec<Edge> = g.edges().collect();
            let e = edges[i.index(edges.len())];
            (g, e)
        })
}

fn dense_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (5..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::weighted(0.75), n * (n - 1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
            },
        )
    })
}

/// `G/uv` computed on a plain adjacency matrix: drop `max(u, v)` and give
/// `min(u, v)` the union of both neighbourhoods.
fn contract_matrix(adj: &Matrix, e: Edge) -> Matrix {
    let (keep, gone) = (e.u(), e.v());
    let n = adj.len();
    let old: Vec<usize> = (0..n).filter(|&v| v != gone).collect();
    let merged = |a: usize, b: usize| {
        let join = |x: usize| if x == gone { keep } else { x };
        let (a, b) = (join(a), join(b));
        a != b && (adj[a][b] || (a == keep && adj[gone][b]) || (b == keep && adj[gone][a]))
    };
    old.iter()
        .map(|&a| old.iter().map(|&b| merged(a, b)).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn contraction_matches_matrix_model((g, e) in graph_and_edge(10)) {
        let r = contract_edge(&g, e).unwrap();
        prop_assert_eq!(r.merged_vertex, e.u());
        prop_assert_eq!(matrix(&r.graph), contract_matrix(&matrix(&g), e));
        let common = g.neighborhood(e.u()).unwrap().intersection(g.neighborhood(e.v()).unwrap()).len();
        prop_assert_eq!(r.graph.edge_count(), g.edge_count() - 1 - common);
    }

    #[test]
    fn contraction_loses_at_most_one_unit_of_connectivity((g, e) in graph_and_edge(10)) {
        let h = contract_edge(&g, e).unwrap().graph;
        prop_assert!(vertex_connectivity(&h) + 1 >= vertex_connectivity(&g));
    }

    #[test]
    fn verdict_agrees_with_direct_tests((g, e) in graph_and_edge(9), k in 2usize..=5) {
        let h = contract_edge(&g, e).unwrap().graph;
        let expected = if is_quasi_k_connected(&h, k) {
            ContractionVerdict::QuasiK
        } else if vertex_connectivity(&h) + 1 >= k {
            ContractionVerdict::ConnectedNotQuasi
        } else {
            ContractionVerdict::Below
        };
        prop_assert_eq!(classify_contraction(&g, e, k).unwrap(), expected);
    }

    #[test]
    fn quasi_sits_between_connectivity_levels(g in dense_graph(9), k in 2usize..=6) {
        let kappa = vertex_connectivity(&g);
        let quasi = is_quasi_k_connected(&g, k);
        if kappa >= k {
            prop_assert!(quasi);
        }
        if quasi {
            prop_assert!(kappa + 1 >= k);
        }
    }

    #[test]
    fn cut_classification_is_exact(g in dense_graph(9), size in 1usize..=4) {
        let adj = matrix(&g);
        let n = g.n();
        for c in enumerate_cuts(&g, size) {
            prop_assert_eq!(c.cut.len(), size);
            prop_assert!(c.separation.is_valid_in(&g));
            let alive: Vec<bool> = (0..n).map(|v| !c.cut.contains(v)).collect();
            prop_assert!(!connected_among(&adj, &alive));
            // Brute force: some split of G − T into two non-adjacent sides of size ≥ 2.
            let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            let nontrivial = (1u32..(1 << rest.len()) - 1).any(|mask| {
                let side = |v: usize| mask >> rest.iter().position(|&x| x == v).unwrap() & 1 == 1;
                let a = mask.count_ones() as usize;
                a >= 2 && rest.len() - a >= 2
                    && rest.iter().all(|&x| rest.iter().all(|&y| side(x) == side(y) || !adj[x][y]))
            });
            prop_assert_eq!(c.class == CutClass::Nontrivial, nontrivial);
        }
    }

    #[test]
    fn classify_cut_rejects_non_separators(g in dense_graph(8), bits in any::<u64>()) {
        let t = VertexSet::from_bits(bits & g.vertices().bits());
        let alive: Vec<bool> = (0..g.n()).map(|v| !t.contains(v)).collect();
        let separates = alive.iter().filter(|&&a| a).count() >= 2 && !connected_among(&matrix(&g), &alive);
        prop_assert_eq!(classify_cut(&g, t).is_some(), separates);
    }

    #[test]
    fn canonical_labeling_produces_canonical_graph(g in graph(10), seed in any::<u64>()) {
        let lab = canonical_labeling(&g);
        prop_assert_eq!(g.permute(&lab).unwrap(), canonical_graph(&g));
        let mut rng = rng(seed);
        let h = g.permute(&random_permutation(&mut rng, g.n())).unwrap();
        prop_assert_eq!(canonical_graph(&h), canonical_graph(&g));
        prop_assert_eq!(canonical_form(&g).to_graph(), canonical_graph(&g));
    }

    #[test]
    fn line_graph_counts(g in graph(9)) {
        let l = g.line_graph().unwrap();
        prop_assert_eq!(l.n(), g.edge_count());
        let expected: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.edge_count(), expected);
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn connectivity_is_label_independent(g in graph(10), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let h = g.permute(&random_permutation(&mut rng, g.n())).unwrap();
        prop_assert_eq!(vertex_connectivity(&g), vertex_connectivity(&h));
    }

    #[test]
    fn induced_subgraphs_are_found(g in graph(8), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits & g.vertices().bits() & 0x1f);
        prop_assume!(!s.is_empty());
        let p = g.induced(s).unwrap();
        let m = contains_subgraph(&g, &p, MatchKind::Induced).unwrap();
        prop_assert!(m.is_some_and(|m| m.is_valid(&g, &p, true)));
    }

    #[test]
    fn quasi_fragments_are_valid((g, e) in graph_and_edge(9), k in 3usize..=5) {
        if let Ok(fragments) = quasi_fragments(&g, e, k) {
            for f in fragments {
                prop_assert!(f.is_valid_in(&g, k));
                prop_assert!(f.cut.contains(e.u()) && f.cut.contains(e.v()));
            }
        }
    }

    #[test]
    fn wrong_connectivity_claims_are_rejected(g in graph(9)) {
        let kappa = vertex_connectivity(&g);
        let right = Claim::Connectivity { value: kappa };
        let wrong = Claim::Connectivity { value: kappa + 1 };
        prop_assert!(check_claim(&g, &right).is_ok());
        prop_assert!(check_claim(&g, &wrong).is_err());
    }
}
