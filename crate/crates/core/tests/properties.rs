//! Randomized invariants over trees and graphs drawn from Prüfer sequences.

use proptest::collection::vec;
use proptest::prelude::*;

use treebound_core::centrality::{centroid, graph_status, statuses_bfs, tree_statuses};
use treebound_core::enumerate::{canonical_code, prufer_decode};
use treebound_core::transform::{predict_centroid, relocate_leaf, status_delta, RelocationMove};
use treebound_core::{Graph, Tree};

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (3..=max_n).prop_flat_map(|n| {
        vec(0..n, n - 2)
            .prop_map(move |seq| Tree::new(n, prufer_decode(n, &seq)).expect("decode is a tree"))
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn distance_matrix_is_a_metric(t in arb_tree(12)) {
        let m = t.all_pairs_distances();
        let n = t.n();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(m.dist(u, v), m.dist(v, u));
                prop_assert_eq!(m.dist(u, v) == 0, u == v);
                for w in 0..n {
                    prop_assert!(m.dist(u, w) <= m.dist(u, v) + m.dist(v, w));
                }
            }
        }
    }

    #[test]
    fn edge_list_text_round_trips(t in arb_tree(14)) {
        let back = Graph::parse_edge_list(&t.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), t.edges());
        prop_assert_eq!(back.n(), t.n());
    }

    #[test]
    fn rerooted_statuses_match_the_bfs_oracle(t in arb_tree(14)) {
        prop_assert_eq!(tree_statuses(&t), statuses_bfs(&t));
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(
        (t, perm) in arb_tree(11).prop_flat_map(|t| {
            let n = t.n();
            (Just(t), arb_permutation(n))
        })
    ) {
        let relabeled = Tree::new(
            t.n(),
            t.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .unwrap();
        prop_assert_eq!(canonical_code(&relabeled), canonical_code(&t));
    }

    #[test]
    fn random_moves_are_predicted_and_priced_correctly(
        (t, pick) in arb_tree(10).prop_flat_map(|t| {
            let n = t.n();
            (Just(t), (0..n, 0..n))
        })
    ) {
        // Interpret the raw picks as a leaf index and a target; discard
        // invalid combinations.
        let leaves = t.leaves().unwrap();
        let b = leaves[pick.0 % leaves.len()];
        let u = pick.1;
        prop_assume!(u != b && u != t.neighbors(b)[0]);
        let m = RelocationMove { b, u };
        let after = relocate_leaf(&t, m).unwrap();
        prop_assert_eq!(after.n(), t.n());
        prop_assert_eq!(after.degree(u), t.degree(u) + 1);
        for x in centroid(&t) {
            let prediction = predict_centroid(&t, x, m).unwrap();
            prop_assert!(centroid(&after).contains(&prediction.vertex));
            let delta = status_delta(&t, x, m).unwrap();
            prop_assert_eq!(
                delta,
                graph_status(&after).0 as i64 - graph_status(&t).0 as i64
            );
        }
    }
}
