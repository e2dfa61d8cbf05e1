//! Exhaustive and randomized verification of the bound theorems.
//!
//! Each theorem id names one machine-checkable statement. Tree statements
//! sweep every non-isomorphic tree up to the requested order; proposition
//! statements additionally sweep every admissible move; the monotonicity
//! grid runs over constructed balanced trees; the general-graph statements
//! draw seeded random connected graphs. Reports carry every counterexample
//! with a replayable edge list, and identical inputs produce byte-identical
//! serialized reports.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::centrality::{branch_weights, centroid, graph_status, radius, statuses_bfs};
use crate::enumerate::{
    canonical_code, free_trees, random_connected_graph, CanonicalCode, SplitMix64,
    MAX_ENUM_ORDER,
};
use crate::error::{Error, Result};
use crate::extremal::{
    build_balanced, build_s_comet, is_comet, is_k_balanced, radius_upper_bound, CometKind,
};
use crate::graph::{Graph, Tree};
use crate::spanning::{
    max_degree_spanning_tree, radius_preserving_spanning_tree, status_preserving_spanning_tree,
};
use crate::transform::{predict_centroid, relocate_leaf, status_delta, RelocationMove};

/// The verifiable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    /// rad(T) is at least the radius of a balanced tree of its order and
    /// maximum degree.
    RadiusLower,
    /// s(T) is at least the status of a balanced tree, with equality exactly
    /// on balanced trees.
    StatusLower,
    /// rad(T) is at most ceil((n - k + 1) / 2), with equality exactly on the
    /// comet kind matching the parity of n - k + 1.
    RadiusUpper,
    /// s(T) is at most the status of the broom, with equality exactly on the
    /// broom.
    StatusUpper,
    /// Median set and centroid set coincide on trees.
    Zelinka,
    /// A vertex is a centroid vertex exactly when its branch weight is at
    /// most n / 2.
    Lemma1,
    /// Every branch at a centroid vertex spans at most one more than half
    /// the remaining vertices.
    Inequality2,
    /// The predicted centroid vertex after a relocation with target != x is
    /// a centroid vertex of the result, and the closed-form status delta is
    /// exact.
    Prop1,
    /// Same with the target being the centroid vertex itself.
    Prop2,
    /// Status of balanced trees strictly decreases in the maximum degree;
    /// radius weakly decreases.
    MonotonicityLemma,
    /// Radius bounds and the radius-preserving and degree-preserving
    /// spanning trees on random connected graphs.
    GraphRadius,
    /// Status bounds and the status-preserving spanning tree on random
    /// connected graphs.
    GraphStatus,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::RadiusLower,
        TheoremId::StatusLower,
        TheoremId::RadiusUpper,
        TheoremId::StatusUpper,
        TheoremId::Zelinka,
        TheoremId::Lemma1,
        TheoremId::Inequality2,
        TheoremId::Prop1,
        TheoremId::Prop2,
        TheoremId::MonotonicityLemma,
        TheoremId::GraphRadius,
        TheoremId::GraphStatus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::RadiusLower => "RadiusLower",
            TheoremId::StatusLower => "StatusLower",
            TheoremId::RadiusUpper => "RadiusUpper",
            TheoremId::StatusUpper => "StatusUpper",
            TheoremId::Zelinka => "Zelinka",
            TheoremId::Lemma1 => "Lemma1",
            TheoremId::Inequality2 => "Inequality2",
            TheoremId::Prop1 => "Prop1",
            TheoremId::Prop2 => "Prop2",
            TheoremId::MonotonicityLemma => "MonotonicityLemma",
            TheoremId::GraphRadius => "GraphRadius",
            TheoremId::GraphStatus => "GraphStatus",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<TheoremId, String> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(&key))
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

/// A failed check: the offending tree or graph plus what went wrong.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    /// Semicolon-separated `u v` edge list, replayable through the parser.
    pub tree: String,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    /// Smallest and largest order the sweep examined.
    pub n_min: usize,
    pub n_max: usize,
    pub trees_examined: u64,
    pub moves_examined: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

#[derive(Serialize)]
struct ExaminedJson {
    trees: u64,
    moves: u64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    theorem: &'a str,
    n_max: usize,
    examined: ExaminedJson,
    counterexamples: &'a [Counterexample],
    elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn json_struct(&self, include_timing: bool) -> ReportJson<'_> {
        ReportJson {
            theorem: self.theorem.name(),
            n_max: self.n_max,
            examined: ExaminedJson { trees: self.trees_examined, moves: self.moves_examined },
            counterexamples: &self.counterexamples,
            elapsed_ms: include_timing.then_some(self.elapsed_ms),
        }
    }

    /// JSON per the report schema, keys in schema order. Timing is redacted
    /// to null unless asked for, keeping reports byte-identical across runs.
    pub fn to_json(&self, include_timing: bool) -> String {
        serde_json::to_string(&self.json_struct(include_timing)).expect("report serializes")
    }

    pub fn to_json_pretty(&self, include_timing: bool) -> String {
        serde_json::to_string_pretty(&self.json_struct(include_timing))
            .expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            n_max: 10,
            seed: 1,
            jobs: std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1),
        }
    }
}

/// Extremal values for one (n, k) cell, shared by the bound checks.
struct BoundsRow {
    rad_lo: usize,
    rad_hi: usize,
    s_lo: usize,
    s_hi: usize,
    broom_code: CanonicalCode,
}

/// Rows for k = 2..=n-1, indexed by k.
fn bounds_rows(n: usize) -> Vec<Option<BoundsRow>> {
    (0..n.max(1))
        .map(|k| {
            if k < 2 || n < 3 || k > n - 1 {
                return None;
            }
            let balanced = build_balanced(n, k, 0).expect("params valid");
            let broom = build_s_comet(n, k).expect("params valid");
            Some(BoundsRow {
                rad_lo: radius(&balanced).0,
                rad_hi: radius_upper_bound(n, k).expect("params valid"),
                s_lo: graph_status(&balanced).0,
                s_hi: graph_status(&broom).0,
                broom_code: canonical_code(&broom),
            })
        })
        .collect()
}

fn edge_list_inline(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|&(u, v)| format!("{u} {v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Runs `f` over the items on `jobs` worker threads; output order follows
/// the input order regardless of scheduling.
fn parallel_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, R)>> = Mutex::new(Vec::with_capacity(items.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                results.lock().expect("no poisoned worker").push((i, r));
            });
        }
    });
    let mut out = results.into_inner().expect("workers done");
    out.sort_by_key(|&(i, _)| i);
    out.into_iter().map(|(_, r)| r).collect()
}

/// Per-tree outcome: admissible moves examined plus any violations.
struct TreeOutcome {
    moves: u64,
    violations: Vec<String>,
}

fn check_tree(theorem: TheoremId, t: &Tree, rows: &[Option<BoundsRow>]) -> TreeOutcome {
    let n = t.n();
    let mut violations = Vec::new();
    let mut moves = 0u64;
    match theorem {
        TheoremId::RadiusLower => {
            let k = t.max_degree();
            let row = rows[k].as_ref().expect("k in range");
            let rad = radius(t).0;
            if rad < row.rad_lo {
                violations.push(format!("rad {rad} below lower bound {}", row.rad_lo));
            }
        }
        TheoremId::StatusLower => {
            let k = t.max_degree();
            let row = rows[k].as_ref().expect("k in range");
            let s = graph_status(t).0;
            if s < row.s_lo {
                violations.push(format!("status {s} below lower bound {}", row.s_lo));
            }
            let balanced = is_k_balanced(t).is_some();
            if (s == row.s_lo) != balanced {
                violations.push(format!(
                    "status {} vs bound {}: equality must hold exactly for balanced trees \
                     (balanced = {balanced})",
                    s, row.s_lo
                ));
            }
        }
        TheoremId::RadiusUpper => {
            let k = t.max_degree();
            let row = rows[k].as_ref().expect("k in range");
            let rad = radius(t).0;
            if rad > row.rad_hi {
                violations.push(format!("rad {rad} above upper bound {}", row.rad_hi));
            }
            let recognized = if (n - k + 1).is_multiple_of(2) {
                is_comet(t, CometKind::CStar)
            } else {
                is_comet(t, CometKind::Comet)
            };
            if (rad == row.rad_hi) != recognized {
                violations.push(format!(
                    "rad {} vs bound {}: equality must match the parity recognizer \
                     (recognized = {recognized})",
                    rad, row.rad_hi
                ));
            }
        }
        TheoremId::StatusUpper => {
            let k = t.max_degree();
            let row = rows[k].as_ref().expect("k in range");
            let s = graph_status(t).0;
            if s > row.s_hi {
                violations.push(format!("status {s} above upper bound {}", row.s_hi));
            }
            let is_broom = canonical_code(t) == row.broom_code;
            if (s == row.s_hi) != is_broom {
                violations.push(format!(
                    "status {} vs bound {}: equality must hold exactly for the broom \
                     (is broom = {is_broom})",
                    s, row.s_hi
                ));
            }
        }
        TheoremId::Zelinka => {
            let medians = graph_status(t).1;
            let cent = centroid(t);
            if medians != cent {
                violations.push(format!("medians {medians:?} != centroid {cent:?}"));
            }
        }
        TheoremId::Lemma1 => {
            let cent = centroid(t);
            for (v, &weight) in branch_weights(t).iter().enumerate() {
                let light = 2 * weight <= n;
                if light != cent.contains(&v) {
                    violations.push(format!(
                        "vertex {v}: branch weight {weight} vs n/2 disagrees with centroid \
                         membership"
                    ));
                }
            }
        }
        TheoremId::Inequality2 => {
            for x in centroid(t) {
                for &y in t.neighbors(x) {
                    let comp = component_size_without(t, x, y);
                    // |T'| = comp + 1 must not exceed |T \ T'| + 1 = n - comp + 1.
                    if comp + 1 > n - comp + 1 {
                        violations.push(format!(
                            "branch of size {} at centroid vertex {x} through {y} is too heavy",
                            comp + 1
                        ));
                    }
                }
            }
        }
        TheoremId::Prop1 | TheoremId::Prop2 => {
            if n < 3 {
                return TreeOutcome { moves, violations };
            }
            let s_before = *statuses_bfs(t).iter().min().expect("n >= 1") as i64;
            for x in centroid(t) {
                for b in t.leaves().expect("n >= 2") {
                    let anchor = t.neighbors(b)[0];
                    let targets: Vec<usize> = match theorem {
                        TheoremId::Prop1 => {
                            (0..n).filter(|&u| u != b && u != anchor && u != x).collect()
                        }
                        _ => (x != b && x != anchor).then_some(x).into_iter().collect(),
                    };
                    for u in targets {
                        moves += 1;
                        let m = RelocationMove { b, u };
                        let prediction = predict_centroid(t, x, m).expect("move is valid");
                        let after = relocate_leaf(t, m).expect("move is valid");
                        if !centroid(&after).contains(&prediction.vertex) {
                            violations.push(format!(
                                "x={x} move=({b},{u}): predicted centroid vertex {} not in {:?}",
                                prediction.vertex,
                                centroid(&after)
                            ));
                        }
                        let delta = status_delta(t, x, m).expect("move is valid");
                        let brute = *statuses_bfs(&after).iter().min().expect("n >= 1") as i64
                            - s_before;
                        if delta != brute {
                            violations.push(format!(
                                "x={x} move=({b},{u}): closed-form delta {delta} != {brute}"
                            ));
                        }
                    }
                }
            }
        }
        TheoremId::MonotonicityLemma | TheoremId::GraphRadius | TheoremId::GraphStatus => {
            unreachable!("not a per-tree check")
        }
    }
    TreeOutcome { moves, violations }
}

fn component_size_without(t: &Tree, removed: usize, start: usize) -> usize {
    let mut seen = vec![false; t.n()];
    seen[removed] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut size = 1;
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                size += 1;
                stack.push(w);
            }
        }
    }
    size
}

fn tree_order_range(theorem: TheoremId, n_max: usize) -> std::ops::RangeInclusive<usize> {
    match theorem {
        TheoremId::Zelinka | TheoremId::Lemma1 | TheoremId::Inequality2 => 1..=n_max,
        _ => 3..=n_max,
    }
}

fn verify_tree_theorem(theorem: TheoremId, opts: &VerifyOptions) -> Result<VerificationReport> {
    if opts.n_max > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { n: opts.n_max, cap: MAX_ENUM_ORDER });
    }
    let start = Instant::now();
    let range = tree_order_range(theorem, opts.n_max);
    let mut trees_examined = 0u64;
    let mut moves_examined = 0u64;
    let mut counterexamples = Vec::new();
    for n in range.clone() {
        let rows = bounds_rows(n);
        let trees: Vec<Tree> = free_trees(n)?.collect();
        trees_examined += trees.len() as u64;
        let outcomes = parallel_map(&trees, opts.jobs, |t| check_tree(theorem, t, &rows));
        for (t, outcome) in trees.iter().zip(outcomes) {
            moves_examined += outcome.moves;
            for details in outcome.violations {
                counterexamples.push(Counterexample { tree: edge_list_inline(t), details });
            }
        }
    }
    Ok(VerificationReport {
        theorem,
        n_min: *range.start(),
        n_max: opts.n_max,
        trees_examined,
        moves_examined,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn verify_monotonicity(opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut trees_examined = 0u64;
    let mut counterexamples = Vec::new();
    for n in 3..=opts.n_max {
        let mut status_of_k = vec![0usize; n];
        let mut radius_of_k = vec![0usize; n];
        for k in 2..=n - 1 {
            let b = build_balanced(n, k, 0)?;
            trees_examined += 1;
            status_of_k[k] = graph_status(&b).0;
            radius_of_k[k] = radius(&b).0;
        }
        for k in 2..=n - 1 {
            for l in 2..k {
                if status_of_k[k] >= status_of_k[l] {
                    counterexamples.push(Counterexample {
                        tree: format!("B({n},{k}) vs B({n},{l})"),
                        details: format!(
                            "status {} of degree {k} not strictly below {} of degree {l}",
                            status_of_k[k], status_of_k[l]
                        ),
                    });
                }
                if radius_of_k[k] > radius_of_k[l] {
                    counterexamples.push(Counterexample {
                        tree: format!("B({n},{k}) vs B({n},{l})"),
                        details: format!(
                            "radius {} of degree {k} above {} of degree {l}",
                            radius_of_k[k], radius_of_k[l]
                        ),
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        theorem: TheoremId::MonotonicityLemma,
        n_min: 3,
        n_max: opts.n_max,
        trees_examined,
        moves_examined: 0,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Graphs drawn per order for the randomized general-graph checks.
const GRAPHS_PER_ORDER: usize = 1000;
/// Largest order the randomized sweep draws from.
const GRAPH_SWEEP_MAX_ORDER: usize = 10;

fn derived_seed(seed: u64, n: usize, rep: usize) -> u64 {
    SplitMix64::new(seed ^ ((n as u64) << 40) ^ rep as u64).next_u64()
}

fn check_graph(theorem: TheoremId, g: &Graph, rows: &[Option<BoundsRow>]) -> Vec<String> {
    let mut violations = Vec::new();
    let k = g.max_degree();
    let row = rows[k].as_ref().expect("k in range");
    match theorem {
        TheoremId::GraphRadius => {
            let rad = radius(g).0;
            if rad < row.rad_lo || rad > row.rad_hi {
                violations.push(format!(
                    "rad {rad} outside [{}, {}]",
                    row.rad_lo, row.rad_hi
                ));
            }
            let cert = radius_preserving_spanning_tree(g);
            if radius(&cert.tree).0 != rad {
                violations.push(format!(
                    "radius-preserving tree has rad {} != {rad}",
                    radius(&cert.tree).0
                ));
            }
            let cert = max_degree_spanning_tree(g);
            if cert.tree.max_degree() != k {
                violations.push(format!(
                    "degree-preserving tree has max degree {} != {k}",
                    cert.tree.max_degree()
                ));
            }
        }
        TheoremId::GraphStatus => {
            let s = graph_status(g).0;
            if s < row.s_lo || s > row.s_hi {
                violations.push(format!("status {s} outside [{}, {}]", row.s_lo, row.s_hi));
            }
            let cert = status_preserving_spanning_tree(g);
            if graph_status(&cert.tree).0 != s {
                violations.push(format!(
                    "status-preserving tree has status {} != {s}",
                    graph_status(&cert.tree).0
                ));
            }
        }
        _ => unreachable!("not a graph check"),
    }
    violations
}

fn verify_graph_theorem(theorem: TheoremId, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut examined = 0u64;
    let mut counterexamples = Vec::new();
    for n in 4..=opts.n_max.min(GRAPH_SWEEP_MAX_ORDER) {
        let rows = bounds_rows(n);
        let max_extra = n * (n - 1) / 2 - (n - 1);
        let reps: Vec<usize> = (0..GRAPHS_PER_ORDER).collect();
        let results = parallel_map(&reps, opts.jobs, |&rep| {
            let mut rng = SplitMix64::new(derived_seed(opts.seed, n, rep));
            let extra = rng.below(max_extra as u64 + 1) as usize;
            let g = random_connected_graph(n, extra, rng.next_u64()).expect("params valid");
            let violations = check_graph(theorem, &g, &rows);
            (g, violations)
        });
        examined += results.len() as u64;
        for (g, violations) in results {
            for details in violations {
                counterexamples.push(Counterexample { tree: edge_list_inline(&g), details });
            }
        }
    }
    Ok(VerificationReport {
        theorem,
        n_min: 4,
        n_max: opts.n_max,
        trees_examined: examined,
        moves_examined: 0,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs one theorem's sweep at the given order cap and seed.
pub fn verify(theorem: TheoremId, opts: &VerifyOptions) -> Result<VerificationReport> {
    match theorem {
        TheoremId::MonotonicityLemma => verify_monotonicity(opts),
        TheoremId::GraphRadius | TheoremId::GraphStatus => verify_graph_theorem(theorem, opts),
        _ => verify_tree_theorem(theorem, opts),
    }
}

/// Runs every theorem, sharing one enumeration pass over the per-tree
/// statements. Reports come back in `TheoremId::ALL` order and match the
/// per-theorem runs exactly.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if opts.n_max > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { n: opts.n_max, cap: MAX_ENUM_ORDER });
    }
    let per_tree: Vec<TheoremId> = TheoremId::ALL
        .iter()
        .copied()
        .filter(|t| {
            !matches!(
                t,
                TheoremId::MonotonicityLemma | TheoremId::GraphRadius | TheoremId::GraphStatus
            )
        })
        .collect();
    let start = Instant::now();
    let mut partial: std::collections::BTreeMap<TheoremId, VerificationReport> = per_tree
        .iter()
        .map(|&theorem| {
            (
                theorem,
                VerificationReport {
                    theorem,
                    n_min: *tree_order_range(theorem, opts.n_max).start(),
                    n_max: opts.n_max,
                    trees_examined: 0,
                    moves_examined: 0,
                    counterexamples: Vec::new(),
                    elapsed_ms: 0,
                },
            )
        })
        .collect();
    for n in 1..=opts.n_max {
        let rows = bounds_rows(n);
        let trees: Vec<Tree> = free_trees(n)?.collect();
        let outcomes = parallel_map(&trees, opts.jobs, |t| {
            per_tree
                .iter()
                .filter(|&&theorem| tree_order_range(theorem, opts.n_max).contains(&n))
                .map(|&theorem| (theorem, check_tree(theorem, t, &rows)))
                .collect::<Vec<_>>()
        });
        for (t, per_theorem) in trees.iter().zip(outcomes) {
            for (theorem, outcome) in per_theorem {
                let report = partial.get_mut(&theorem).expect("initialized");
                report.trees_examined += 1;
                report.moves_examined += outcome.moves;
                for details in outcome.violations {
                    report
                        .counterexamples
                        .push(Counterexample { tree: edge_list_inline(t), details });
                }
            }
        }
    }
    let shared_elapsed = start.elapsed().as_millis() as u64;
    let mut reports = Vec::with_capacity(TheoremId::ALL.len());
    for theorem in TheoremId::ALL {
        match theorem {
            TheoremId::MonotonicityLemma | TheoremId::GraphRadius | TheoremId::GraphStatus => {
                reports.push(verify(theorem, opts)?);
            }
            _ => {
                let mut report = partial.remove(&theorem).expect("initialized");
                report.elapsed_ms = shared_elapsed;
                reports.push(report);
            }
        }
    }
    Ok(reports)
}

/// Serializes a full run: options echoed for reproducibility, then the
/// reports. Timing is redacted unless requested so fixed inputs yield
/// byte-identical output.
pub fn reports_to_json(
    reports: &[VerificationReport],
    opts: &VerifyOptions,
    include_timing: bool,
) -> String {
    #[derive(Serialize)]
    struct RunJson<'a> {
        n_max: usize,
        seed: u64,
        jobs: usize,
        reports: Vec<ReportJson<'a>>,
    }
    serde_json::to_string_pretty(&RunJson {
        n_max: opts.n_max,
        seed: opts.seed,
        jobs: opts.jobs,
        reports: reports.iter().map(|r| r.json_struct(include_timing)).collect(),
    })
    .expect("reports serialize")
}
