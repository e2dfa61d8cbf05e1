//! Acceptance suite: one test per criterion, each printing a pass line with
//! the examined counts. Run with `cargo test --release --test acceptance --
//! --nocapture` to see the lines.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use treebound_core::centrality::{graph_status, radius};
use treebound_core::enumerate::{canonical_code, free_trees, SplitMix64};
use treebound_core::extremal::{
    build_s_comet, is_comet, is_k_balanced, radius_upper_bound, status_bounds, CometKind,
};
use treebound_core::transform::{maximize_status, minimize_status};
use treebound_core::verify::{reports_to_json, verify, verify_all, TheoremId, VerifyOptions};
use treebound_core::Tree;

fn opts(n_max: usize) -> VerifyOptions {
    VerifyOptions { n_max, seed: 1, jobs: 4 }
}

#[test]
fn criterion_1_status_and_radius_sandwich() {
    let start = Instant::now();
    let mut trees = 0;
    for theorem in [
        TheoremId::StatusLower,
        TheoremId::StatusUpper,
        TheoremId::RadiusLower,
        TheoremId::RadiusUpper,
    ] {
        let report = verify(theorem, &opts(12)).unwrap();
        assert!(
            report.passed(),
            "criterion 1 FAIL ({theorem:?}): {:?}",
            report.counterexamples.first()
        );
        trees = report.trees_examined;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 1 exceeded 60 s");
    println!(
        "criterion 1 PASS: status/radius sandwich on {trees} classes up to n=12 \
         ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_2_equality_characterizations() {
    // Exact set equality between value-extremal trees and recognized trees
    // for every (n, k) with n <= 12.
    let start = Instant::now();
    let mut cells = 0;
    for n in 3..=12 {
        let mut by_k: BTreeMap<usize, Vec<Tree>> = BTreeMap::new();
        for t in free_trees(n).unwrap() {
            by_k.entry(t.max_degree()).or_default().push(t);
        }
        for (k, trees) in by_k {
            let (s_lo, s_hi) = status_bounds(n, k).unwrap();
            let rad_hi = radius_upper_bound(n, k).unwrap();
            let broom = canonical_code(&build_s_comet(n, k).unwrap());
            let code = |t: &Tree| canonical_code(t);

            let min_status: Vec<_> =
                trees.iter().filter(|t| graph_status(t).0 == s_lo).map(code).collect();
            let balanced: Vec<_> =
                trees.iter().filter(|t| is_k_balanced(t).is_some()).map(code).collect();
            assert_eq!(min_status, balanced, "criterion 2 FAIL: status floor set at ({n},{k})");

            let max_status: Vec<_> =
                trees.iter().filter(|t| graph_status(t).0 == s_hi).map(code).collect();
            assert_eq!(max_status, vec![broom], "criterion 2 FAIL: status ceiling set at ({n},{k})");

            let max_radius: Vec<_> =
                trees.iter().filter(|t| radius(t).0 == rad_hi).map(code).collect();
            let recognized: Vec<_> = trees
                .iter()
                .filter(|t| {
                    if (n - k + 1) % 2 == 0 {
                        is_comet(t, CometKind::CStar)
                    } else {
                        is_comet(t, CometKind::Comet)
                    }
                })
                .map(code)
                .collect();
            assert_eq!(max_radius, recognized, "criterion 2 FAIL: radius ceiling set at ({n},{k})");
            cells += 1;
        }
    }
    println!(
        "criterion 2 PASS: equality characterizations over {cells} (n,k) cells \
         ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_3_proposition_soundness() {
    let start = Instant::now();
    let mut moves = 0;
    for theorem in [TheoremId::Prop1, TheoremId::Prop2] {
        let report = verify(theorem, &opts(9)).unwrap();
        assert!(
            report.passed(),
            "criterion 3 FAIL ({theorem:?}): {:?}",
            report.counterexamples.first()
        );
        moves += report.moves_examined;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "criterion 3 exceeded 120 s");
    println!(
        "criterion 3 PASS: centroid prediction and status delta on {moves} moves up to n=9 \
         ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_4_zelinka_and_branch_weight() {
    let start = Instant::now();
    let mut trees = 0;
    for theorem in [TheoremId::Zelinka, TheoremId::Lemma1, TheoremId::Inequality2] {
        let report = verify(theorem, &opts(12)).unwrap();
        assert!(
            report.passed(),
            "criterion 4 FAIL ({theorem:?}): {:?}",
            report.counterexamples.first()
        );
        trees = report.trees_examined;
    }
    println!(
        "criterion 4 PASS: median/centroid equivalence and branch-weight laws on {trees} \
         classes up to n=12 ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_5_optimizer_convergence() {
    let start = Instant::now();
    let mut runs = 0;
    for n in 3..=10 {
        for t in free_trees(n).unwrap() {
            let k = t.max_degree();
            let (s_lo, _) = status_bounds(n, k).unwrap();
            let broom = canonical_code(&build_s_comet(n, k).unwrap());

            let (min_tree, min_trace) = minimize_status(&t).unwrap();
            assert_eq!(
                graph_status(&min_tree).0,
                s_lo,
                "criterion 5 FAIL: minimizer missed the floor from {:?}",
                t.edges()
            );
            assert!(
                min_trace.iter().all(|e| e.delta_status < 0),
                "criterion 5 FAIL: non-decreasing step from {:?}",
                t.edges()
            );
            assert_eq!(min_tree.max_degree(), k);

            let (max_tree, max_trace) = maximize_status(&t).unwrap();
            assert_eq!(
                canonical_code(&max_tree),
                broom,
                "criterion 5 FAIL: maximizer missed the broom from {:?}",
                t.edges()
            );
            assert!(
                max_trace.iter().all(|e| e.delta_status > 0),
                "criterion 5 FAIL: non-increasing step from {:?}",
                t.edges()
            );
            assert_eq!(max_tree.max_degree(), k);
            runs += 1;
        }
    }
    println!(
        "criterion 5 PASS: both optimizers converged from {runs} starting trees up to n=10 \
         ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_6_monotonicity_in_the_maximum_degree() {
    let start = Instant::now();
    let report = verify(TheoremId::MonotonicityLemma, &opts(20)).unwrap();
    assert!(
        report.passed(),
        "criterion 6 FAIL: {:?}",
        report.counterexamples.first()
    );
    println!(
        "criterion 6 PASS: balanced-tree monotonicity over {} constructed trees up to n=20 \
         ({} ms)",
        report.trees_examined,
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_7_general_graph_bounds() {
    let start = Instant::now();
    let mut graphs = 0;
    for theorem in [TheoremId::GraphRadius, TheoremId::GraphStatus] {
        let report = verify(theorem, &opts(10)).unwrap();
        assert!(
            report.passed(),
            "criterion 7 FAIL ({theorem:?}): {:?}",
            report.counterexamples.first()
        );
        assert_eq!(report.trees_examined, 7000, "1000 seeded graphs per order 4..=10");
        graphs += report.trees_examined;
    }
    println!(
        "criterion 7 PASS: bound and spanning-tree checks on {graphs} seeded random graphs \
         ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_8_enumerator_against_prufer_oracle() {
    let start = Instant::now();
    for n in 1..=9 {
        let generated = free_trees(n).unwrap().count();
        let oracle = common::prufer_dedup_count(n);
        assert_eq!(generated, oracle, "criterion 8 FAIL: class count at n={n}");
    }
    // Relabeling invariance: 100 random permutations per tree.
    let mut rng = SplitMix64::new(8);
    for n in 1..=10 {
        for t in free_trees(n).unwrap() {
            let code = canonical_code(&t);
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.below(i as u64 + 1) as usize;
                    perm.swap(i, j);
                }
                let relabeled =
                    Tree::new(n, t.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
                assert_eq!(
                    canonical_code(&relabeled),
                    code,
                    "criterion 8 FAIL: relabeling changed the code of {:?}",
                    t.edges()
                );
            }
        }
    }
    println!(
        "criterion 8 PASS: enumerator matches the Prüfer dedup oracle for n=1..9 and codes \
         are relabeling-invariant up to n=10 ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_9_deterministic_reports() {
    let start = Instant::now();
    let o = opts(8);
    let first = reports_to_json(&verify_all(&o).unwrap(), &o, false);
    let second = reports_to_json(&verify_all(&o).unwrap(), &o, false);
    assert_eq!(first, second, "criterion 9 FAIL: repeated run differs");
    let serial = VerifyOptions { jobs: 1, ..o };
    let third = reports_to_json(&verify_all(&serial).unwrap(), &o, false);
    assert_eq!(first, third, "criterion 9 FAIL: job count changed the report");
    assert!(first.contains("\"elapsed_ms\": null"));
    println!(
        "criterion 9 PASS: byte-identical reports across runs and job counts ({} ms)",
        start.elapsed().as_millis()
    );
}
