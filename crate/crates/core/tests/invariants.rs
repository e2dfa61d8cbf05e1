//! Exhaustive structural invariants at small orders.

use treebound_core::centrality::{eccentricities, graph_status, radius};
use treebound_core::enumerate::free_trees;
use treebound_core::extremal::{
    balanced_variant_count, build_balanced, build_c_star, build_comet, c_star_variant_count,
    comet_hub_positions,
};
use treebound_core::Tree;

#[test]
fn distance_matrices_are_metrics_for_all_trees_up_to_ten() {
    for n in 1..=10 {
        for t in free_trees(n).unwrap() {
            let m = t.all_pairs_distances();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(m.dist(u, v), m.dist(v, u));
                    assert_eq!(m.dist(u, v) == 0, u == v);
                    for w in 0..n {
                        assert!(m.dist(u, w) <= m.dist(u, v) + m.dist(v, w));
                    }
                }
            }
        }
    }
}

#[test]
fn centroid_is_one_vertex_or_two_adjacent_ones() {
    for n in 1..=12 {
        for t in free_trees(n).unwrap() {
            let c = treebound_core::centrality::centroid(&t);
            match c.as_slice() {
                [_] => {}
                [a, b] => assert!(t.has_edge(*a, *b), "split centroid not adjacent: {:?}", t.edges()),
                other => panic!("centroid of size {}: {:?}", other.len(), t.edges()),
            }
        }
    }
}

#[test]
fn eccentricities_lie_between_radius_and_its_double() {
    for n in 1..=10 {
        for t in free_trees(n).unwrap() {
            let (rad, _) = radius(&t);
            for ecc in eccentricities(&t) {
                assert!(rad <= ecc && ecc <= 2 * rad);
            }
        }
    }
}

#[test]
fn every_balanced_variant_has_the_same_status_and_radius() {
    for n in 3..=12 {
        for k in 2..=n - 1 {
            let reference = build_balanced(n, k, 0).unwrap();
            let (s0, r0) = (graph_status(&reference).0, radius(&reference).0);
            for variant in 1..balanced_variant_count(n, k).unwrap() {
                let t = build_balanced(n, k, variant).unwrap();
                assert_eq!(t.max_degree(), k, "B({n},{k}) variant {variant}");
                assert_eq!(graph_status(&t).0, s0, "status of B({n},{k}) variant {variant}");
                assert_eq!(radius(&t).0, r0, "radius of B({n},{k}) variant {variant}");
            }
        }
    }
}

#[test]
fn comet_radii_attain_the_bound_per_parity() {
    for n in 3..=12usize {
        for k in 2..=n - 1 {
            let spine = n - k + 1;
            if spine % 2 == 1 {
                // Odd spine length: every comet attains ceil(spine / 2).
                for hub in comet_hub_positions(n, k).unwrap() {
                    let c = build_comet(n, k, hub).unwrap();
                    assert_eq!(radius(&c).0, spine / 2 + 1, "C({n},{k}) hub {hub}");
                }
            } else {
                // Even spine length: every comet-plus-leaf attains spine / 2.
                for variant in 0..c_star_variant_count(n, k).unwrap() {
                    let c = build_c_star(n, k, variant).unwrap();
                    assert_eq!(radius(&c).0, spine / 2, "C*({n},{k}) variant {variant}");
                }
            }
        }
    }
}

#[test]
fn single_and_two_vertex_trees_behave() {
    let t1 = Tree::path(1);
    assert_eq!(graph_status(&t1), (0, vec![0]));
    assert_eq!(radius(&t1), (0, vec![0]));
    let t2 = Tree::path(2);
    assert_eq!(graph_status(&t2), (1, vec![0, 1]));
    assert_eq!(radius(&t2), (1, vec![0, 1]));
}
