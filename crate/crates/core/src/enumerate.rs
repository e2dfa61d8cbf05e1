//! Exhaustive generation of non-isomorphic free trees, tree isomorphism via
//! canonical codes, and seeded random connected graphs.
//!
//! The generator walks canonical level sequences of rooted trees with the
//! Beyer-Hedetniemi successor rule and keeps exactly the rootings that are
//! canonical for the underlying free tree (rooted at the tree center, with a
//! fixed tie-break for bicentral trees). This needs no dedup memory and the
//! output order is deterministic.

use crate::error::{Error, Result};
use crate::graph::{Graph, Tree, Vertex};

/// Largest order `free_trees` accepts. The successor walk visits every
/// canonical rooted tree of the order, which stays cheap well past the
/// verification range.
pub const MAX_ENUM_ORDER: usize = 20;

/// Canonical encoding of an unlabeled tree: the AHU parenthesis string rooted
/// at the center, taking the lexicographically smaller rooting when the tree
/// is bicentral. Equal codes hold exactly for isomorphic trees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// AHU code of the tree rooted at `root`: `(` sorted child codes `)`.
fn rooted_code(t: &Tree, root: Vertex) -> Vec<u8> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX && v != root {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&c| c != root && parent[c] == v)
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        children.sort();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

/// Center of a tree by peeling leaf layers; one or two vertices.
pub fn tree_center(t: &Tree) -> Vec<Vertex> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in t.neighbors(v) {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let centers = tree_center(t);
    let code = centers
        .iter()
        .map(|&c| rooted_code(t, c))
        .min()
        .expect("tree has a center");
    CanonicalCode(code)
}

pub fn are_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}

/// Streams one representative per isomorphism class of free trees of order
/// `n`, in a deterministic order.
pub fn free_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { n, cap: MAX_ENUM_ORDER });
    }
    Ok(FreeTrees { levels: (1..=n).collect(), done: false })
}

pub struct FreeTrees {
    /// Level sequence of the current rooted tree; levels[0] = 1 is the root.
    levels: Vec<usize>,
    done: bool,
}

impl FreeTrees {
    /// Beyer-Hedetniemi successor: find the last level above 2, shorten it,
    /// and repeat the block between it and its parent to fill the tail.
    fn advance(&mut self) {
        let Some(p) = self.levels.iter().rposition(|&l| l > 2) else {
            self.done = true;
            return;
        };
        let q = self.levels[..p]
            .iter()
            .rposition(|&l| l == self.levels[p] - 1)
            .expect("parent level exists");
        for i in p..self.levels.len() {
            self.levels[i] = self.levels[i - (p - q)];
        }
    }

    fn current_tree(&self) -> Tree {
        let n = self.levels.len();
        let mut stack: Vec<Vertex> = Vec::new();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for (v, &level) in self.levels.iter().enumerate() {
            stack.truncate(level - 1);
            if let Some(&parent) = stack.last() {
                edges.push((parent, v));
            }
            stack.push(v);
        }
        Tree::new(n, edges).expect("level sequence encodes a tree")
    }

    /// Keep only the canonical rooting per free tree: the root must be a
    /// center, and for bicentral trees the rooted code at the actual root
    /// must not exceed the code at the other center.
    fn is_free_canonical(t: &Tree) -> bool {
        let centers = tree_center(t);
        match centers.as_slice() {
            [c] => *c == 0,
            [a, b] => {
                if *a != 0 {
                    return false;
                }
                rooted_code(t, 0) <= rooted_code(t, *b)
            }
            _ => unreachable!("a tree has one or two centers"),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while !self.done {
            let t = self.current_tree();
            self.advance();
            if Self::is_free_canonical(&t) {
                return Some(t);
            }
        }
        None
    }
}

/// SplitMix64: the tiny published generator of Steele, Lea and Flood.
/// Seed-deterministic across platforms, which keeps every report replayable.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..bound` by rejection, avoiding modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// Decodes a Prüfer sequence over labels `0..n` into the labeled tree edges.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    assert_eq!(seq.len() + 2, n);
    let mut deg = vec![1usize; n];
    for &a in seq {
        deg[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // ptr scans for the smallest untouched leaf; leaf tracks the current one.
    let mut ptr = 0;
    while deg[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in seq {
        edges.push((leaf, a));
        deg[a] -= 1;
        if deg[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while deg[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Uniform random labeled tree of order `n` drawn from a seeded generator.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Tree {
    if n <= 1 {
        return Tree::path(1);
    }
    if n == 2 {
        return Tree::path(2);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    Tree::new(n, prufer_decode(n, &seq)).expect("Prüfer decode yields a tree")
}

/// Random connected graph: a uniform labeled spanning tree plus
/// `extra_edges` distinct non-tree edges chosen uniformly. Reproducible
/// from the seed.
pub fn random_connected_graph(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams { what: "graph order must be >= 1" });
    }
    let max_extra = n * (n - 1) / 2 - (n - 1);
    if extra_edges > max_extra {
        return Err(Error::TooManyEdges { requested: extra_edges, max: max_extra });
    }
    let mut rng = SplitMix64::new(seed);
    let tree = random_tree(n, &mut rng);
    let mut candidates: Vec<(Vertex, Vertex)> = Vec::with_capacity(max_extra);
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) {
                candidates.push((u, v));
            }
        }
    }
    // Partial Fisher-Yates: the first extra_edges slots become the sample.
    for i in 0..extra_edges {
        let j = i + rng.below((candidates.len() - i) as u64) as usize;
        candidates.swap(i, j);
    }
    let edges = tree.edges().iter().copied().chain(candidates[..extra_edges].iter().copied());
    Graph::new(n, edges)
}
