//! Centrality quantities: status, eccentricity, radius, center, median,
//! branch weights and the centroid.
//!
//! The status of a vertex is its distance sum over all vertices; the status
//! of a graph is the minimum over vertices and a median attains it. The
//! radius is the minimum eccentricity, attained at the center. In a tree the
//! centroid (vertices of minimum branch weight) coincides with the median
//! set, so the fast rerooting computations below double as median finders.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree, Vertex};

/// Per-vertex and graph-level centrality values.
///
/// Serializes with a stable key order for golden-file tests; `centroid` and
/// the per-vertex `branch_weight` are `null` for graphs that are not trees.
#[derive(Clone, Debug, Serialize)]
pub struct CentralityReport {
    pub n: usize,
    pub radius: usize,
    pub status: usize,
    pub center: Vec<Vertex>,
    pub medians: Vec<Vertex>,
    pub centroid: Option<Vec<Vertex>>,
    pub per_vertex: Vec<VertexReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexReport {
    pub v: Vertex,
    pub status: usize,
    pub ecc: usize,
    pub branch_weight: Option<usize>,
}

/// Rooted traversal scaffolding shared by the linear-time tree algorithms.
struct Rooted {
    order: Vec<Vertex>,
    parent: Vec<Vertex>,
    depth: Vec<usize>,
    subtree: Vec<usize>,
}

fn root_at(t: &Tree, root: Vertex) -> Rooted {
    let n = t.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    order.push(root);
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX && v != root {
                parent[v] = u;
                depth[v] = depth[u] + 1;
                order.push(v);
            }
        }
    }
    let mut subtree = vec![1usize; n];
    for &v in order.iter().rev() {
        if v != root {
            subtree[parent[v]] += subtree[v];
        }
    }
    Rooted { order, parent, depth, subtree }
}

/// Status of every vertex by BFS distance sums. Quadratic, kept as the
/// independent oracle for the rerooting formula and as the general-graph path.
pub fn statuses_bfs(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .map(|v| g.bfs_distances(v).expect("in range").iter().sum())
        .collect()
}

/// Status of every vertex of a tree via the two-pass reroot technique:
/// `s(child) = s(parent) + n - 2 * subtree(child)`.
pub fn tree_statuses(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let r = root_at(t, 0);
    let mut s = vec![0usize; n];
    s[0] = r.depth.iter().sum();
    for &v in &r.order {
        if v != 0 {
            s[v] = s[r.parent[v]] + n - 2 * r.subtree[v];
        }
    }
    s
}

/// Status of every vertex, picking the linear tree path when possible.
pub fn statuses(g: &Graph) -> Vec<usize> {
    if g.is_tree_shaped() {
        let t = Tree::try_from(g.clone()).expect("tree shaped");
        tree_statuses(&t)
    } else {
        statuses_bfs(g)
    }
}

pub fn status_of_vertex(g: &Graph, x: Vertex) -> Result<usize> {
    Ok(g.bfs_distances(x)?.iter().sum())
}

/// Minimum status together with the medians attaining it, ascending.
pub fn graph_status(g: &Graph) -> (usize, Vec<Vertex>) {
    argmin_set(&statuses(g))
}

pub fn eccentricity(g: &Graph, x: Vertex) -> Result<usize> {
    Ok(*g.bfs_distances(x)?.iter().max().expect("n >= 1"))
}

pub fn eccentricities(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .map(|v| eccentricity(g, v).expect("in range"))
        .collect()
}

/// Minimum eccentricity together with the center set, ascending.
pub fn radius(g: &Graph) -> (usize, Vec<Vertex>) {
    argmin_set(&eccentricities(g))
}

fn argmin_set(values: &[usize]) -> (usize, Vec<Vertex>) {
    let min = *values.iter().min().expect("n >= 1");
    (min, (0..values.len()).filter(|&v| values[v] == min).collect())
}

/// Branch weight of every vertex in one pass over rooted subtree sizes.
///
/// The weight of the branch at `x` through child `c` is `subtree(c)`; the
/// branch toward the parent weighs `n - subtree(x)`.
pub fn branch_weights(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let r = root_at(t, 0);
    (0..n)
        .map(|v| {
            let mut best = if v == 0 { 0 } else { n - r.subtree[v] };
            for &u in t.neighbors(v) {
                if v == 0 || u != r.parent[v] {
                    best = best.max(r.subtree[u]);
                }
            }
            best
        })
        .collect()
}

pub fn branch_weight(t: &Tree, x: Vertex) -> Result<usize> {
    if x >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: t.n() });
    }
    Ok(branch_weights(t)[x])
}

/// The centroid: all vertices of minimum branch weight, ascending.
/// Always one or two vertices, adjacent when two.
pub fn centroid(t: &Tree) -> Vec<Vertex> {
    argmin_set(&branch_weights(t)).1
}

/// Full centrality report for a graph; tree-only fields populate when the
/// edge count matches a tree.
pub fn report(g: &Graph) -> CentralityReport {
    let st = statuses(g);
    let ecc = eccentricities(g);
    let (status, medians) = argmin_set(&st);
    let (rad, center) = argmin_set(&ecc);
    let weights = if g.is_tree_shaped() {
        Some(branch_weights(&Tree::try_from(g.clone()).expect("tree shaped")))
    } else {
        None
    };
    let centroid = weights.as_ref().map(|w| argmin_set(w).1);
    CentralityReport {
        n: g.n(),
        radius: rad,
        status,
        center,
        medians,
        centroid,
        per_vertex: (0..g.n())
            .map(|v| VertexReport {
                v,
                status: st[v],
                ecc: ecc[v],
                branch_weight: weights.as_ref().map(|w| w[v]),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal;

    fn s_comet(n: usize, k: usize) -> Tree {
        extremal::build_s_comet(n, k).unwrap()
    }

    #[test]
    fn status_examples() {
        let star = Tree::star(10);
        assert_eq!(status_of_vertex(&star, 0).unwrap(), 9);
        let p5 = Tree::path(5);
        assert_eq!(status_of_vertex(&p5, 2).unwrap(), 6);
        // Broom with hub of degree 9 on 12 vertices: 8 pendant leaves plus a
        // three-vertex tail gives the hub 8*1 + 1 + 2 + 3 = 14.
        let b = s_comet(12, 9);
        assert_eq!(status_of_vertex(&b, 0).unwrap(), 8 + 1 + 2 + 3);
    }

    #[test]
    fn graph_status_examples() {
        assert_eq!(graph_status(&Tree::path(5)), (6, vec![2]));
        assert_eq!(graph_status(&Tree::path(4)), (4, vec![1, 2]));
        let b = extremal::build_balanced(10, 3, 0).unwrap();
        assert_eq!(graph_status(&b), (15, vec![0]));
    }

    #[test]
    fn radius_examples() {
        assert_eq!(radius(&Tree::star(10)), (1, vec![0]));
        assert_eq!(radius(&Tree::path(5)), (2, vec![2]));
        let c = extremal::build_comet(14, 9, 1).unwrap();
        assert_eq!(radius(&c).0, 3);
    }

    #[test]
    fn branch_weight_examples() {
        let p5 = Tree::path(5);
        assert_eq!(branch_weight(&p5, 2).unwrap(), 2);
        assert_eq!(branch_weight(&p5, 0).unwrap(), 4);
        // Degree-9 hub of the 12-vertex broom: the tail branch of 3 wins.
        let b = s_comet(12, 9);
        assert_eq!(branch_weight(&b, 0).unwrap(), 3);
        assert!(branch_weight(&p5, 9).is_err());
    }

    #[test]
    fn centroid_examples() {
        assert_eq!(centroid(&Tree::path(5)), vec![2]);
        assert_eq!(centroid(&Tree::path(4)), vec![1, 2]);
        assert_eq!(centroid(&Tree::path(1)), vec![0]);
        assert_eq!(centroid(&Tree::path(2)), vec![0, 1]);
    }

    #[test]
    fn reroot_matches_bfs_oracle() {
        for t in [
            Tree::path(9),
            Tree::star(9),
            s_comet(11, 4),
            Tree::new(8, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6), (5, 7)]).unwrap(),
        ] {
            assert_eq!(tree_statuses(&t), statuses_bfs(&t));
        }
    }

    #[test]
    fn metric_sanity() {
        for t in [Tree::path(7), Tree::star(7), s_comet(9, 4)] {
            let (rad, _) = radius(&t);
            for e in eccentricities(&t) {
                assert!(rad <= e && e <= 2 * rad);
            }
        }
    }

    #[test]
    fn report_json_key_order() {
        let json = serde_json::to_string(&report(&Tree::path(3))).unwrap();
        assert_eq!(
            json,
            "{\"n\":3,\"radius\":1,\"status\":2,\"center\":[1],\"medians\":[1],\
             \"centroid\":[1],\"per_vertex\":[\
             {\"v\":0,\"status\":3,\"ecc\":2,\"branch_weight\":2},\
             {\"v\":1,\"status\":2,\"ecc\":1,\"branch_weight\":1},\
             {\"v\":2,\"status\":3,\"ecc\":2,\"branch_weight\":2}]}"
        );
    }

    #[test]
    fn report_on_non_tree_has_null_centroid() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = report(&c4);
        assert!(r.centroid.is_none());
        assert!(r.per_vertex.iter().all(|p| p.branch_weight.is_none()));
        assert_eq!(r.radius, 2);
        assert_eq!(r.status, 4);
        assert_eq!(r.medians, vec![0, 1, 2, 3]);
    }
}
