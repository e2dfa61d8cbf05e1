//! Graph and tree representation, parsing, distances and structural queries.
//!
//! Vertices are dense ids `0..n`. Every graph is undirected, simple and
//! connected; a [`Tree`] additionally has exactly `n - 1` edges. Both are
//! immutable after construction, so they can be shared freely across threads.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected, simple, connected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(min, max)` pairs in ascending order and
/// adjacency lists are sorted, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and connectivity.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParams { what: "graph order must be >= 1" });
        }
        let mut canon: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { line_no: canon.len() + 1, vertex: u });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { line_no: 0, u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges: canon, adj };
        if let Some(unreachable) = g.first_unreachable() {
            return Err(Error::Disconnected { unreachable });
        }
        Ok(g)
    }

    /// Parses the plain edge-list format: one `u v` pair per entry, entries
    /// separated by newlines or semicolons, `#` comment lines and blank
    /// entries ignored. The order is `1 + max vertex id`; empty input denotes
    /// the one-vertex graph. Semicolons make the one-line tree streams and
    /// report counterexamples replayable directly.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut pairs: Vec<(usize, Vertex, Vertex)> = Vec::new();
        let mut line_no = 0;
        for raw_line in text.lines() {
            if raw_line.trim().starts_with('#') {
                line_no += 1;
                continue;
            }
            for raw in raw_line.split(';') {
                line_no += 1;
                let entry = raw.trim();
                if entry.is_empty() {
                    continue;
                }
                let mut it = entry.split_whitespace();
                let (a, b, rest) = (it.next(), it.next(), it.next());
                let (a, b) = match (a, b, rest) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => return Err(Error::MalformedLine { line_no, line: raw.to_string() }),
                };
                let parse = |s: &str| -> Result<usize> {
                    s.parse()
                        .map_err(|_| Error::MalformedLine { line_no, line: raw.to_string() })
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u == v {
                    return Err(Error::SelfLoop { line_no, vertex: u });
                }
                pairs.push((line_no, u, v));
            }
        }
        if pairs.is_empty() {
            // No edges: the single-vertex graph.
            return Graph::new(1, []);
        }
        let n = 1 + pairs.iter().map(|&(_, u, v)| u.max(v)).max().unwrap();
        let mut seen: Vec<(Vertex, Vertex, usize)> =
            pairs.iter().map(|&(l, u, v)| (u.min(v), u.max(v), l)).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::DuplicateEdge { line_no: w[1].2, u: w[1].0, v: w[1].1 });
        }
        Graph::new(n, pairs.into_iter().map(|(_, u, v)| (u, v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(min, max)` ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_tree_shaped(&self) -> bool {
        self.edges.len() == self.n - 1
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// Hop counts from `source` to every vertex.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<usize>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange { vertex: source, n: self.n });
        }
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            d.extend(self.bfs_distances(s).expect("source in range"));
        }
        DistanceMatrix { n: self.n, d }
    }

    /// Edge-list text: one `u v` line per canonical edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// DOT output with bare integer vertices, one edge per line in canonical
    /// order. The format is byte-stable for golden-file tests.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        if self.edges.is_empty() {
            out.push_str("  0;\n");
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A tree: a connected graph with exactly `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.0.n, self.0.edges)
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Tree {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Tree> {
        if g.is_tree_shaped() {
            Ok(Tree(g))
        } else {
            Err(Error::NotATree { n: g.n, edges: g.edges.len() })
        }
    }
}

impl Tree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Tree> {
        Graph::new(n, edges)?.try_into()
    }

    pub fn parse_edge_list(text: &str) -> Result<Tree> {
        Graph::parse_edge_list(text)?.try_into()
    }

    /// The path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Tree {
        Tree::new(n.max(1), (1..n).map(|v| (v - 1, v))).expect("path is a tree")
    }

    /// The star with hub 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Tree {
        Tree::new(n.max(1), (1..n).map(|v| (0, v))).expect("star is a tree")
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// The degree-1 vertices, ascending. Signals on the one-vertex tree,
    /// which has no leaf.
    pub fn leaves(&self) -> Result<Vec<Vertex>> {
        if self.n() == 1 {
            return Err(Error::SingletonTree);
        }
        Ok((0..self.n()).filter(|&v| self.degree(v) == 1).collect())
    }

    /// Deletes leaf `b`, relabeling vertices above `b` down by one.
    pub fn remove_leaf(&self, b: Vertex) -> Result<Tree> {
        if b >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: b, n: self.n() });
        }
        if self.n() < 2 || self.degree(b) != 1 {
            return Err(Error::NotALeaf { vertex: b });
        }
        let shift = |v: Vertex| if v > b { v - 1 } else { v };
        let edges = self
            .edges()
            .iter()
            .filter(|&&(u, v)| u != b && v != b)
            .map(|&(u, v)| (shift(u), shift(v)));
        Tree::new(self.n() - 1, edges)
    }
}

/// Symmetric matrix of pairwise hop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[usize] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_smallest_path() {
        let g = Graph::parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parser_accepts_comments_blank_lines_and_crlf() {
        let g = Graph::parse_edge_list("# a path\r\n\r\n0 1\r\n1 2\r\n").unwrap();
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn parser_rejects_duplicate_edge() {
        let err = Graph::parse_edge_list("0 1\n0 1").unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { line_no: 2, u: 0, v: 1 }));
        // Same edge in swapped orientation is still a duplicate.
        let err = Graph::parse_edge_list("0 1\n1 0").unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { .. }));
    }

    #[test]
    fn parser_rejects_disconnected_input() {
        let err = Graph::parse_edge_list("0 1\n2 3").unwrap_err();
        assert!(matches!(err, Error::Disconnected { .. }));
        // A gap in vertex ids implies an isolated vertex.
        let err = Graph::parse_edge_list("0 2").unwrap_err();
        assert!(matches!(err, Error::Disconnected { unreachable: 1 }));
    }

    #[test]
    fn parser_rejects_self_loop_and_garbage() {
        assert!(matches!(
            Graph::parse_edge_list("3 3").unwrap_err(),
            Error::SelfLoop { line_no: 1, vertex: 3 }
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 x").unwrap_err(),
            Error::MalformedLine { line_no: 1, .. }
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 1 2").unwrap_err(),
            Error::MalformedLine { .. }
        ));
    }

    #[test]
    fn empty_input_is_the_single_vertex_graph() {
        let g = Graph::parse_edge_list("# nothing\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parser_accepts_semicolon_separated_entries() {
        // The format the tree streams and counterexample reports emit.
        let g = Graph::parse_edge_list("0 1;1 2;2 3").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(
            Graph::parse_edge_list("0 1;0 1"),
            Err(Error::DuplicateEdge { line_no: 2, .. })
        ));
    }

    #[test]
    fn bfs_distances_on_path_and_star() {
        let p3 = Tree::path(3);
        assert_eq!(p3.bfs_distances(0).unwrap(), vec![0, 1, 2]);
        let star = Tree::star(10);
        let d = star.bfs_distances(0).unwrap();
        assert_eq!(d[0], 0);
        assert!(d[1..].iter().all(|&x| x == 1));
        assert!(matches!(
            p3.bfs_distances(7),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn all_pairs_matches_per_source_bfs() {
        let t = Tree::new(8, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6), (5, 7)]).unwrap();
        let m = t.all_pairs_distances();
        for s in 0..8 {
            assert_eq!(m.row(s), &t.bfs_distances(s).unwrap()[..]);
        }
        for u in 0..8 {
            for v in 0..8 {
                assert_eq!(m.dist(u, v), m.dist(v, u));
            }
        }
    }

    #[test]
    fn single_vertex_matrix() {
        let g = Graph::new(1, []).unwrap();
        let m = g.all_pairs_distances();
        assert_eq!(m.dist(0, 0), 0);
    }

    #[test]
    fn leaves_and_degrees() {
        let p3 = Tree::path(3);
        assert_eq!(p3.leaves().unwrap(), vec![0, 2]);
        let star = Tree::star(10);
        assert_eq!(star.leaves().unwrap(), (1..10).collect::<Vec<_>>());
        assert_eq!(star.max_degree(), 9);
        assert_eq!(Tree::path(5).max_degree(), 2);
        assert!(matches!(Tree::path(1).leaves(), Err(Error::SingletonTree)));
    }

    #[test]
    fn tree_rejects_extra_edges() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(Tree::try_from(g), Err(Error::NotATree { n: 3, edges: 3 })));
    }

    #[test]
    fn remove_leaf_relabels() {
        let t = Tree::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let t2 = t.remove_leaf(2).unwrap();
        assert_eq!(t2.n(), 3);
        assert_eq!(t2.edges(), &[(0, 1), (1, 2)]);
        assert!(t.remove_leaf(1).is_err());
    }

    #[test]
    fn dot_output_is_stable() {
        let t = Tree::new(3, [(1, 2), (0, 1)]).unwrap();
        assert_eq!(t.to_dot(), "graph G {\n  0 -- 1;\n  1 -- 2;\n}\n");
        let single = Graph::new(1, []).unwrap();
        assert_eq!(single.to_dot(), "graph G {\n  0;\n}\n");
    }

    #[test]
    fn edge_list_roundtrip() {
        let t = Tree::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let text = t.to_edge_list();
        let back = Tree::parse_edge_list(&text).unwrap();
        assert_eq!(*back.as_graph(), *t.as_graph());
    }

    #[test]
    fn tree_distance_equals_unique_path_length() {
        // Removing any edge on the u-v path disconnects u from v.
        let t = Tree::new(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (0, 6)]).unwrap();
        let m = t.all_pairs_distances();
        for &(a, b) in t.edges() {
            let rest: Vec<_> =
                t.edges().iter().copied().filter(|&e| e != (a, b)).collect();
            // The edge (a, b) lies on the u-v path exactly when
            // d(u,a) + 1 + d(b,v) or d(u,b) + 1 + d(a,v) equals d(u,v).
            for u in 0..7 {
                for v in 0..7 {
                    let on_path = m.dist(u, a) + 1 + m.dist(b, v) == m.dist(u, v)
                        || m.dist(u, b) + 1 + m.dist(a, v) == m.dist(u, v);
                    let still_connected = Graph::new(7, rest.iter().copied()).is_ok();
                    assert!(!still_connected);
                    if on_path {
                        // u and v end up in different components.
                        let mut comp = [false; 7];
                        comp[u] = true;
                        let mut stack = vec![u];
                        while let Some(x) = stack.pop() {
                            for &(p, q) in &rest {
                                for (s, t2) in [(p, q), (q, p)] {
                                    if s == x && !comp[t2] {
                                        comp[t2] = true;
                                        stack.push(t2);
                                    }
                                }
                            }
                        }
                        assert!(!comp[v], "edge ({a},{b}) on {u}-{v} path must separate them");
                    }
                }
            }
        }
    }
}
