//! Spanning-tree reductions for connected graphs.
//!
//! Distances in a spanning tree dominate distances in the graph, so radius
//! and status of the graph never exceed those of any spanning tree. Rooting
//! a breadth-first tree at a central vertex or a median preserves the
//! distances from that root, which pins radius or status to exact equality;
//! seeding with a maximum-degree vertex pins the maximum degree.

use serde::Serialize;

use crate::centrality::{graph_status, radius};
use crate::error::{Error, Result};
use crate::extremal::{is_k_balanced, radius_lower_bound, radius_upper_bound, status_bounds};
use crate::graph::{Graph, Tree, Vertex};

/// Which quantity a spanning-tree construction preserves exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Preserved {
    Radius,
    Status,
    MaxDegree,
}

/// A spanning tree together with what it preserves and the root the
/// construction grew from.
#[derive(Clone, Debug)]
pub struct SpanningCertificate {
    pub tree: Tree,
    pub preserved: Preserved,
    pub witness_vertex: Option<Vertex>,
}

/// Breadth-first spanning tree rooted at `root`, neighbors scanned in
/// ascending order. Distances from `root` are preserved.
fn bfs_tree(g: &Graph, root: Vertex) -> Tree {
    let mut parent = vec![usize::MAX; g.n()];
    let mut order = vec![root];
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX && v != root {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let edges = (0..g.n()).filter(|&v| v != root).map(|v| (parent[v], v));
    Tree::new(g.n(), edges).expect("BFS tree spans a connected graph")
}

/// A spanning tree with the same radius as the graph: the breadth-first tree
/// rooted at the smallest central vertex.
pub fn radius_preserving_spanning_tree(g: &Graph) -> SpanningCertificate {
    let (_, center) = radius(g);
    let root = center[0];
    SpanningCertificate {
        tree: bfs_tree(g, root),
        preserved: Preserved::Radius,
        witness_vertex: Some(root),
    }
}

/// A spanning tree with the same status as the graph: the shortest-path tree
/// rooted at the smallest median.
pub fn status_preserving_spanning_tree(g: &Graph) -> SpanningCertificate {
    let (_, medians) = graph_status(g);
    let root = medians[0];
    SpanningCertificate {
        tree: bfs_tree(g, root),
        preserved: Preserved::Status,
        witness_vertex: Some(root),
    }
}

/// A spanning tree with the same maximum degree as the graph: the
/// breadth-first tree rooted at the smallest maximum-degree vertex, which
/// keeps every incident edge of that vertex.
pub fn max_degree_spanning_tree(g: &Graph) -> SpanningCertificate {
    let k = g.max_degree();
    let root = (0..g.n()).find(|&v| g.degree(v) == k).expect("n >= 1");
    SpanningCertificate {
        tree: bfs_tree(g, root),
        preserved: Preserved::MaxDegree,
        witness_vertex: Some(root),
    }
}

/// Bound check of a connected graph against the extremal tree values for its
/// order and maximum degree.
#[derive(Clone, Debug, Serialize)]
pub struct GraphBoundsReport {
    pub n: usize,
    pub k: usize,
    pub radius: usize,
    pub status: usize,
    pub radius_bounds: (usize, usize),
    pub status_bounds: (usize, usize),
    pub radius_within_bounds: bool,
    pub status_within_bounds: bool,
    /// Set when the input is itself a balanced tree, in which case the lower
    /// radius bound must be tight.
    pub balanced_tree_radius_equality: Option<bool>,
    /// The status hits its upper bound, which flags the graph for
    /// comet-subtree inspection.
    pub status_at_upper_bound: bool,
}

impl GraphBoundsReport {
    pub fn all_hold(&self) -> bool {
        self.radius_within_bounds
            && self.status_within_bounds
            && self.balanced_tree_radius_equality.unwrap_or(true)
    }
}

/// Evaluates the four bound inequalities, plus the conditional statements
/// that are decidable here: radius equality when the graph is a balanced
/// tree by itself, and the flag for status equality at the top.
pub fn graph_bounds_check(g: &Graph) -> Result<GraphBoundsReport> {
    let n = g.n();
    let k = g.max_degree();
    if k < 2 || k > n - 1 {
        return Err(Error::InvalidParams {
            what: "bounds need a graph with 2 <= max degree <= n - 1",
        });
    }
    let rad_lo = radius_lower_bound(n, k)?;
    let rad_hi = radius_upper_bound(n, k)?;
    let (s_lo, s_hi) = status_bounds(n, k)?;
    let (rad, _) = radius(g);
    let (status, _) = graph_status(g);
    let balanced_tree_radius_equality = if g.is_tree_shaped() {
        let t = Tree::try_from(g.clone()).expect("tree shaped");
        is_k_balanced(&t).map(|_| rad == rad_lo)
    } else {
        None
    };
    Ok(GraphBoundsReport {
        n,
        k,
        radius: rad,
        status,
        radius_bounds: (rad_lo, rad_hi),
        status_bounds: (s_lo, s_hi),
        radius_within_bounds: rad_lo <= rad && rad <= rad_hi,
        status_within_bounds: s_lo <= status && status <= s_hi,
        balanced_tree_radius_equality,
        status_at_upper_bound: status == s_hi,
    })
}
