//! Leaf relocation: the transformation that drives every bound proof.
//!
//! Relocating a leaf changes the status by a closed-form amount that depends
//! only on distances from a centroid vertex and on the sizes of three vertex
//! sets: the branch containing the target, the branch containing the leaf,
//! and the rest. The centroid of the transformed tree is the old centroid
//! vertex or one of its neighbors, and which one is decided by the same
//! sizes. The iterative minimizer and maximizer below walk these moves until
//! the extremal families are reached.

use serde::Serialize;

use crate::centrality::{branch_weights, centroid, statuses_bfs};
use crate::enumerate::are_isomorphic;
use crate::error::{Error, Result};
use crate::extremal::{build_s_comet, is_k_balanced};
use crate::graph::{Tree, Vertex};

/// A single leaf relocation: detach leaf `b` from its neighbor and attach it
/// to `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelocationMove {
    pub b: Vertex,
    pub u: Vertex,
}

/// Which prediction rule placed the centroid of the transformed tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentroidCase {
    /// The target is the centroid vertex itself.
    AtCentroid,
    /// Leaf and target sit in the same branch at the centroid vertex.
    SameBranch,
    /// The target branch is small enough for the centroid vertex to stay.
    SmallT1,
    /// The centroid moves one step toward the target.
    LargeT1,
}

/// Predicted centroid member of the transformed tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentroidPrediction {
    pub vertex: Vertex,
    pub case: CentroidCase,
}

/// One optimizer step, serializable as {b, u, delta_status, case_tag}.
#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub b: Vertex,
    pub u: Vertex,
    pub delta_status: i64,
    pub case_tag: CentroidCase,
}

/// The three vertex sets a move is judged by, seen from centroid vertex x:
/// the branch holding the target, the branch holding the leaf, and the rest.
/// Each set includes x, so when the branches differ the sizes add up to
/// n + 2.
#[derive(Clone, Debug)]
pub struct RelocationContext {
    pub x: Vertex,
    pub t1: Vec<Vertex>,
    pub t2: Vec<Vertex>,
    pub s: Vec<Vertex>,
}

/// The explicit branch decomposition behind `predict_centroid`.
pub fn relocation_context(t: &Tree, x: Vertex, m: RelocationMove) -> Result<RelocationContext> {
    require_centroid(t, x)?;
    validate_move(t, m)?;
    if m.u == x {
        return Err(Error::InvalidParams { what: "context needs a target other than x" });
    }
    let br = branches_at(t, x);
    let (bu, bb) = (br.branch[m.u], br.branch[m.b]);
    let mut t1 = vec![x];
    let mut t2 = vec![x];
    let mut s = vec![x];
    for v in 0..t.n() {
        if v == x {
            continue;
        }
        if br.branch[v] == bu {
            t1.push(v);
        }
        if br.branch[v] == bb {
            t2.push(v);
        }
        if br.branch[v] != bu && br.branch[v] != bb {
            s.push(v);
        }
    }
    Ok(RelocationContext { x, t1, t2, s })
}

/// Branch decomposition at a fixed vertex x: every other vertex is tagged
/// with the neighbor of x whose component contains it.
struct BranchesAt {
    branch: Vec<Vertex>,
    comp: Vec<usize>,
}

fn branches_at(t: &Tree, x: Vertex) -> BranchesAt {
    let n = t.n();
    let mut branch = vec![usize::MAX; n];
    let mut comp = vec![0usize; n];
    let mut queue = std::collections::VecDeque::new();
    for &y in t.neighbors(x) {
        branch[y] = y;
        queue.push_back(y);
    }
    while let Some(v) = queue.pop_front() {
        comp[branch[v]] += 1;
        for &w in t.neighbors(v) {
            if w != x && branch[w] == usize::MAX {
                branch[w] = branch[v];
                queue.push_back(w);
            }
        }
    }
    BranchesAt { branch, comp }
}

fn validate_move(t: &Tree, m: RelocationMove) -> Result<Vertex> {
    let n = t.n();
    if m.b >= n {
        return Err(Error::VertexOutOfRange { vertex: m.b, n });
    }
    if m.u >= n {
        return Err(Error::VertexOutOfRange { vertex: m.u, n });
    }
    if n < 2 || t.degree(m.b) != 1 {
        return Err(Error::NotALeaf { vertex: m.b });
    }
    if m.u == m.b {
        return Err(Error::TargetIsSelf { vertex: m.b });
    }
    let anchor = t.neighbors(m.b)[0];
    if m.u == anchor {
        return Err(Error::TargetIsNeighbor { leaf: m.b, target: m.u });
    }
    Ok(anchor)
}

/// The tree obtained by removing the leaf edge and inserting (u, b).
pub fn relocate_leaf(t: &Tree, m: RelocationMove) -> Result<Tree> {
    let anchor = validate_move(t, m)?;
    let old = (anchor.min(m.b), anchor.max(m.b));
    let new = (m.u.min(m.b), m.u.max(m.b));
    let edges = t.edges().iter().copied().filter(|&e| e != old).chain([new]);
    Tree::new(t.n(), edges)
}

fn require_centroid(t: &Tree, x: Vertex) -> Result<()> {
    if x >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: t.n() });
    }
    let w = branch_weights(t);
    if w[x] != *w.iter().min().expect("n >= 1") {
        return Err(Error::NotACentroid { vertex: x });
    }
    Ok(())
}

/// Sizes |T1|, |T2|, |S| for a move seen from centroid vertex x, each
/// counting x itself, plus the neighbor of x toward the target.
struct MoveContext {
    t1: usize,
    t2: usize,
    s: usize,
    same_branch: bool,
    toward_target: Vertex,
}

fn move_context(t: &Tree, x: Vertex, m: RelocationMove) -> MoveContext {
    let br = branches_at(t, x);
    let bu = br.branch[m.u];
    let bb = br.branch[m.b];
    MoveContext {
        t1: br.comp[bu] + 1,
        t2: br.comp[bb] + 1,
        s: t.n() - br.comp[bu] - br.comp[bb],
        same_branch: bu == bb,
        toward_target: bu,
    }
}

/// Where the centroid of the transformed tree sits, relative to the chosen
/// centroid vertex x of the input. The returned vertex is guaranteed to be a
/// centroid vertex of `relocate_leaf(t, m)`.
pub fn predict_centroid(t: &Tree, x: Vertex, m: RelocationMove) -> Result<CentroidPrediction> {
    require_centroid(t, x)?;
    validate_move(t, m)?;
    if m.u == x {
        return Ok(CentroidPrediction { vertex: x, case: CentroidCase::AtCentroid });
    }
    let ctx = move_context(t, x, m);
    if ctx.same_branch {
        return Ok(CentroidPrediction { vertex: x, case: CentroidCase::SameBranch });
    }
    if ctx.t1 < ctx.t2 + ctx.s - 1 {
        Ok(CentroidPrediction { vertex: x, case: CentroidCase::SmallT1 })
    } else {
        Ok(CentroidPrediction { vertex: ctx.toward_target, case: CentroidCase::LargeT1 })
    }
}

/// Closed-form status change s(after) - s(before) of a move, evaluated on
/// the branch of `predict_centroid`'s case. Always equals the recomputed
/// difference of graph statuses.
pub fn status_delta(t: &Tree, x: Vertex, m: RelocationMove) -> Result<i64> {
    let prediction = predict_centroid(t, x, m)?;
    let dist = t.bfs_distances(x)?;
    let (db, du) = (dist[m.b] as i64, dist[m.u] as i64);
    Ok(match prediction.case {
        CentroidCase::AtCentroid => 1 - db,
        CentroidCase::SameBranch | CentroidCase::SmallT1 => du + 1 - db,
        CentroidCase::LargeT1 => {
            let ctx = move_context(t, x, m);
            (du - db) + (ctx.s as i64 + ctx.t2 as i64 - ctx.t1 as i64 - 1)
        }
    })
}

fn graph_status_bfs(t: &Tree) -> usize {
    *statuses_bfs(t).iter().min().expect("n >= 1")
}

/// Applies a selected move, verifying the closed-form delta against a full
/// recomputation and that the predicted vertex is a centroid vertex of the
/// result. A disagreement means a formula is wrong and aborts.
fn apply_checked(
    t: &Tree,
    x: Vertex,
    m: RelocationMove,
    trace: &mut Vec<TraceEntry>,
) -> Result<(Tree, i64)> {
    let prediction = predict_centroid(t, x, m)?;
    let delta = status_delta(t, x, m)?;
    let after = relocate_leaf(t, m)?;
    let recomputed = graph_status_bfs(&after) as i64 - graph_status_bfs(t) as i64;
    assert_eq!(
        delta, recomputed,
        "closed-form status delta diverged from recomputation for move {m:?} at centroid {x}"
    );
    assert!(
        centroid(&after).contains(&prediction.vertex),
        "predicted centroid vertex {} is not a centroid vertex after {m:?}",
        prediction.vertex
    );
    trace.push(TraceEntry { b: m.b, u: m.u, delta_status: delta, case_tag: prediction.case });
    Ok((after, delta))
}

/// True when some vertex of degree k other than `except` exists, i.e. the
/// maximum degree survives deleting a leaf attached at `except`.
fn keeps_max_degree(t: &Tree, k: usize, except: Vertex) -> bool {
    (0..t.n()).any(|v| v != except && t.degree(v) == k)
}

/// Repeatedly relocates a deepest leaf toward the centroid region until the
/// tree is balanced. Every step strictly decreases the status and preserves
/// order and maximum degree.
pub fn minimize_status(t: &Tree) -> Result<(Tree, Vec<TraceEntry>)> {
    let n = t.n();
    let k = t.max_degree();
    if n < 3 || k < 2 {
        return Err(Error::InvalidParams { what: "minimization needs n >= 3 and max degree >= 2" });
    }
    let mut cur = t.clone();
    let mut trace = Vec::new();
    while is_k_balanced(&cur).is_none() {
        let x = centroid(&cur)[0];
        let dist = cur.bfs_distances(x)?;
        let ecc = *dist.iter().max().expect("n >= 1");
        let leaves = cur.leaves()?;
        let m = if cur.degree(x) == k {
            // Deepest leaf to any vertex of degree < k within ecc(x) - 2.
            let b = leaves
                .iter()
                .copied()
                .filter(|&l| dist[l] == ecc)
                .find(|&l| keeps_max_degree(&cur, k, cur.neighbors(l)[0]));
            let u = (0..n).find(|&v| dist[v] + 2 <= ecc && cur.degree(v) < k);
            match (b, u) {
                (Some(b), Some(u)) => RelocationMove { b, u },
                _ => return Err(Error::NoProgress { status: graph_status_bfs(&cur) }),
            }
        } else {
            // Any leaf beyond distance 1 whose removal keeps the maximum
            // degree, reattached at the centroid vertex.
            let b = leaves
                .iter()
                .copied()
                .filter(|&l| dist[l] > 1)
                .find(|&l| keeps_max_degree(&cur, k, cur.neighbors(l)[0]));
            match b {
                Some(b) => RelocationMove { b, u: x },
                None => return Err(Error::NoProgress { status: graph_status_bfs(&cur) }),
            }
        };
        let (after, delta) = apply_checked(&cur, x, m, &mut trace)?;
        if delta >= 0 {
            return Err(Error::NoProgress { status: graph_status_bfs(&cur) });
        }
        debug_assert_eq!(after.max_degree(), k);
        cur = after;
    }
    Ok((cur, trace))
}

/// One maximizer step: pick the leaf pair the upper-bound argument dictates.
///
/// Writing z for a vertex of maximum degree, only leaves farther than 1 from
/// z may move, and the target is always the farther leaf of the pair. The
/// selection prefers pairs that keep the centroid vertex in place (same
/// branch first, then a small target branch); otherwise the centroid moves
/// and the configuration collapses to one of two closed forms.
fn select_maximize_move(t: &Tree, k: usize, x: Vertex) -> Result<(RelocationMove, Option<i64>)> {
    let n = t.n();
    let z = if t.degree(x) == k {
        x
    } else {
        (0..n).find(|&v| t.degree(v) == k).expect("some vertex has maximum degree")
    };
    let dist_z = t.bfs_distances(z)?;
    let dist_x = t.bfs_distances(x)?;
    let eligible: Vec<Vertex> =
        t.leaves()?.into_iter().filter(|&l| dist_z[l] > 1).collect();
    if eligible.len() < 2 {
        return Err(Error::NoProgress { status: graph_status_bfs(t) });
    }
    let br = branches_at(t, x);

    // Ordered candidate pairs (moved leaf, target), the target never nearer
    // to x, in lexicographic order.
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for &p in &eligible {
        for &q in &eligible {
            if q != p && dist_x[q] >= dist_x[p] {
                pairs.push((p, q));
            }
        }
    }

    // Both leaves in the branch holding z (when x is not z itself).
    if x != z {
        let tz = br.branch[z];
        if let Some(&(p, q)) =
            pairs.iter().find(|&&(p, q)| br.branch[p] == tz && br.branch[q] == tz)
        {
            return Ok((RelocationMove { b: p, u: q }, None));
        }
    }

    // Both leaves in some branch that is not a path; such a branch holds two
    // of them.
    if let Some(&(p, q)) = pairs.iter().find(|&&(p, q)| {
        br.branch[p] == br.branch[q] && (x == z || br.branch[p] != br.branch[z])
    }) {
        return Ok((RelocationMove { b: p, u: q }, None));
    }

    // Any pair for which the centroid vertex provably stays put.
    if let Some(&(p, q)) = pairs.iter().find(|&&(p, q)| {
        br.branch[p] == br.branch[q] || {
            let t1 = br.comp[br.branch[q]] + 1;
            let t2 = br.comp[br.branch[p]] + 1;
            let s = n - br.comp[br.branch[q]] - br.comp[br.branch[p]];
            t1 < t2 + s - 1
        }
    }) {
        return Ok((RelocationMove { b: p, u: q }, None));
    }

    // The centroid moves for every admissible pair. Distances of eligible
    // leaves from x are pairwise distinct here, so the extremes are unique,
    // and picking the farthest leaf as the target keeps the step positive:
    // the target branch covers at most half the tree, so the distance gap
    // outweighs the size terms.
    let &q = eligible.iter().max_by_key(|&&l| (dist_x[l], std::cmp::Reverse(l))).unwrap();
    let &p = eligible.iter().min_by_key(|&&l| (dist_x[l], l)).unwrap();
    let expected = if eligible.len() == 2
        && t.degree(x) == 2
        && dist_x[q] == br.comp[br.branch[q]]
        && dist_x[p] + (k - 1) == br.comp[br.branch[p]] + 1
    {
        // Two branches only, the far leaf ending a bare path and the near
        // one ending the lone long arm at z, whose other neighbors are
        // k - 2 pendants. The books balance to exactly k - 2. The near leaf
        // may instead hang between x and z, in which case the general form
        // below is the only one that applies.
        Some(k as i64 - 2)
    } else if x == z
        && t.neighbors(x).iter().all(|&y| {
            // A branch is a hanging path exactly when its far end is as deep
            // as the branch is large.
            let depth = (0..n)
                .filter(|&v| br.branch[v] == y)
                .map(|v| dist_x[v])
                .max()
                .expect("branch is nonempty");
            depth == br.comp[y]
        })
    {
        let s = n - br.comp[br.branch[q]] - br.comp[br.branch[p]];
        Some(s as i64 - 1)
    } else {
        None
    };
    Ok((RelocationMove { b: p, u: q }, expected))
}

/// Repeatedly relocates a near leaf onto a far one until the tree is the
/// broom of its order and maximum degree. Every step strictly increases the
/// status and preserves order and maximum degree.
pub fn maximize_status(t: &Tree) -> Result<(Tree, Vec<TraceEntry>)> {
    let n = t.n();
    let k = t.max_degree();
    if n < 3 {
        return Err(Error::InvalidParams { what: "maximization needs n >= 3" });
    }
    let mut trace = Vec::new();
    if k <= 2 {
        // A path already attains the maximum.
        return Ok((t.clone(), trace));
    }
    let target = build_s_comet(n, k)?;
    let mut cur = t.clone();
    while !are_isomorphic(&cur, &target) {
        let x = centroid(&cur)[0];
        let (m, expected) = select_maximize_move(&cur, k, x)?;
        let (after, delta) = apply_checked(&cur, x, m, &mut trace)?;
        if let Some(expected) = expected {
            assert_eq!(
                delta, expected,
                "case formula diverged from the general delta for move {m:?}"
            );
        }
        if delta <= 0 {
            return Err(Error::NoProgress { status: graph_status_bfs(&cur) });
        }
        debug_assert_eq!(after.max_degree(), k);
        cur = after;
    }
    Ok((cur, trace))
}
