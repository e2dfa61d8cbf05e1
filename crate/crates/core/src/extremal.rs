//! Constructors, recognizers and bound values for the extremal tree families
//! with fixed order and maximum degree.
//!
//! A balanced tree minimizes radius and status among trees of its order and
//! maximum degree. A comet (a degree-k vertex on a longest possible path),
//! the broom variant, and a comet extended by one leaf maximize them. The
//! bound values are taken from constructed witnesses, not closed forms.

use crate::centrality::{eccentricities, graph_status};
use crate::enumerate::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Tree, Vertex};

/// The four families with extremal status or radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Balanced,
    Comet,
    SComet,
    CStar,
}

/// The star-like kinds a recognizer can test for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CometKind {
    Comet,
    SComet,
    CStar,
}

/// Selects a family member: order, maximum degree and an optional variant
/// (balanced last-level layout, comet hub offset, or the attachment vertex
/// choice for the comet-plus-leaf family).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub variant: Option<usize>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Tree> {
        match self.family {
            Family::Balanced => build_balanced(self.n, self.k, self.variant.unwrap_or(0)),
            Family::Comet => build_comet(self.n, self.k, self.variant.unwrap_or(1)),
            Family::SComet => match self.variant {
                None | Some(0) => build_s_comet(self.n, self.k),
                Some(v) => Err(Error::InvalidVariant { variant: v, count: 1 }),
            },
            Family::CStar => build_c_star(self.n, self.k, self.variant.unwrap_or(0)),
        }
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k < 2 || k + 1 > n {
        return Err(Error::InvalidParams { what: "need 2 <= k <= n - 1" });
    }
    Ok(())
}

/// Level-by-level filling plan for a balanced tree: the complete levels and
/// the number of vertices left for the last level.
struct BalancedPlan {
    /// Vertex count per complete level, starting at the root level.
    full_levels: Vec<usize>,
    /// Vertices remaining for the final partial level.
    leftover: usize,
    /// Parents available to the final level and their child capacity.
    parents: usize,
    capacity: usize,
}

fn balanced_plan(n: usize, k: usize) -> BalancedPlan {
    let mut full_levels = vec![1usize];
    let mut remaining = n - 1;
    loop {
        let parents = *full_levels.last().unwrap();
        let capacity = if full_levels.len() == 1 { k } else { k - 1 };
        let full = parents * capacity;
        if remaining <= full {
            return BalancedPlan { full_levels, leftover: remaining, parents, capacity };
        }
        full_levels.push(full);
        remaining -= full;
    }
}

/// Partitions of `total` into at most `parts` parts of size `1..=cap`, in
/// decreasing lexicographic order, so index 0 is the greedy leftmost filling.
fn bounded_partitions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        let hi = cap.min(total);
        for first in (1..=hi).rev() {
            // Parts are non-increasing and the rest must still fit.
            if first * parts < total {
                break;
            }
            prefix.push(first);
            rec(total - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, cap, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct last-level layouts `build_balanced` accepts for (n, k).
pub fn balanced_variant_count(n: usize, k: usize) -> Result<usize> {
    check_params(n, k)?;
    let plan = balanced_plan(n, k);
    Ok(bounded_partitions(plan.leftover, plan.parents, plan.capacity).len())
}

/// Builds a balanced tree of order n and maximum degree k: every vertex
/// within distance ecc(root) - 2 of the root has degree exactly k. Variant 0
/// fills the last level greedily left to right; other variants spread the
/// last-level vertices in every other non-increasing pattern.
pub fn build_balanced(n: usize, k: usize, variant: usize) -> Result<Tree> {
    check_params(n, k)?;
    let plan = balanced_plan(n, k);
    let all = bounded_partitions(plan.leftover, plan.parents, plan.capacity);
    let layout = all
        .get(variant)
        .cloned()
        .ok_or(Error::InvalidVariant { variant, count: all.len() })?;

    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    let mut level: Vec<Vertex> = vec![0];
    for (d, _) in plan.full_levels.iter().enumerate().skip(1) {
        let capacity = if d == 1 { k } else { k - 1 };
        let mut fresh = Vec::with_capacity(plan.full_levels[d]);
        for &p in &level {
            for _ in 0..capacity {
                edges.push((p, next));
                fresh.push(next);
                next += 1;
            }
        }
        level = fresh;
    }
    for (i, &count) in layout.iter().enumerate() {
        for _ in 0..count {
            edges.push((level[i], next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Tree::new(n, edges)
}

/// The broom: hub 0 with k - 1 pendant leaves and a pendant path of n - k
/// vertices. Unique for each (n, k).
pub fn build_s_comet(n: usize, k: usize) -> Result<Tree> {
    check_params(n, k)?;
    if n < 3 {
        return Err(Error::InvalidParams { what: "comets need n >= 3" });
    }
    let mut edges: Vec<(Vertex, Vertex)> = (1..k).map(|leaf| (0, leaf)).collect();
    edges.push((0, k));
    edges.extend((k..n - 1).map(|v| (v, v + 1)));
    Tree::new(n, edges)
}

/// Interior spine offsets at which a comet hub may sit.
pub fn comet_hub_positions(n: usize, k: usize) -> Result<std::ops::RangeInclusive<usize>> {
    check_params(n, k)?;
    if n < 3 {
        return Err(Error::InvalidParams { what: "comets need n >= 3" });
    }
    Ok(1..=n - k)
}

/// A comet: spine path 0..=n-k+1 of length n - k + 1 with the hub at the
/// given interior offset carrying k - 2 extra pendant leaves.
pub fn build_comet(n: usize, k: usize, hub_position: usize) -> Result<Tree> {
    let positions = comet_hub_positions(n, k)?;
    if !positions.contains(&hub_position) {
        return Err(Error::InvalidHubPosition { position: hub_position, max: n - k });
    }
    let spine_top = n - k + 1;
    let mut edges: Vec<(Vertex, Vertex)> = (0..spine_top).map(|v| (v, v + 1)).collect();
    edges.extend((spine_top + 1..n).map(|leaf| (hub_position, leaf)));
    Tree::new(n, edges)
}

/// Attachment vertices available to `build_c_star` for (n, k): every vertex
/// of the base comet whose degree is below k, ascending.
fn c_star_attachments(n: usize, k: usize) -> Result<(Tree, Vec<Vertex>)> {
    if n < 4 || k < 2 || k > n - 2 {
        return Err(Error::InvalidParams { what: "need n >= 4 and 2 <= k <= n - 2" });
    }
    let base = build_comet(n - 1, k, 1)?;
    let spots = (0..base.n()).filter(|&v| base.degree(v) < k).collect();
    Ok((base, spots))
}

pub fn c_star_variant_count(n: usize, k: usize) -> Result<usize> {
    if k + 1 == n {
        check_params(n, k)?;
        return Ok(1);
    }
    Ok(c_star_attachments(n, k)?.1.len())
}

/// A comet of order n - 1 extended by one leaf, attached at the variant-th
/// vertex that can take it without pushing the maximum degree past k.
///
/// At k = n - 1 the family degenerates to the star, which is returned.
pub fn build_c_star(n: usize, k: usize, variant: usize) -> Result<Tree> {
    if k + 1 == n {
        check_params(n, k)?;
        return match variant {
            0 => Ok(Tree::star(n)),
            _ => Err(Error::InvalidVariant { variant, count: 1 }),
        };
    }
    let (base, spots) = c_star_attachments(n, k)?;
    let &at = spots
        .get(variant)
        .ok_or(Error::InvalidVariant { variant, count: spots.len() })?;
    let edges = base.edges().iter().copied().chain([(at, n - 1)]);
    Tree::new(n, edges)
}

/// Tests the balance predicate with k = the tree's maximum degree: returns a
/// vertex x such that every z with dist(z, x) <= ecc(x) - 2 has degree k, or
/// None. The eccentricity can be below 2, in which case the condition is
/// vacuous and x qualifies.
pub fn is_k_balanced(t: &Tree) -> Option<Vertex> {
    let n = t.n();
    if n == 1 {
        return Some(0);
    }
    let k = t.max_degree();
    (0..n).find(|&x| {
        let dist = t.bfs_distances(x).expect("in range");
        let ecc = *dist.iter().max().expect("n >= 1");
        if ecc < 2 {
            return true;
        }
        (0..n).all(|z| dist[z] > ecc - 2 || t.degree(z) == k)
    })
}

/// Longest path through `v`: the two largest depths reached in distinct
/// branches at `v`, found with one branch-tagging BFS.
fn longest_path_through(t: &Tree, v: Vertex) -> usize {
    let n = t.n();
    let mut dist = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([v]);
    dist[v] = 0;
    let mut depth_of_branch = vec![0usize; n];
    while let Some(u) = queue.pop_front() {
        for &w in t.neighbors(u) {
            if dist[w] == usize::MAX && w != v {
                dist[w] = dist[u] + 1;
                branch[w] = if u == v { w } else { branch[u] };
                depth_of_branch[branch[w]] = depth_of_branch[branch[w]].max(dist[w]);
                queue.push_back(w);
            }
        }
    }
    let mut best = [0usize; 2];
    for &y in t.neighbors(v) {
        let depth = depth_of_branch[y];
        if depth >= best[0] {
            best[1] = best[0];
            best[0] = depth;
        } else if depth > best[1] {
            best[1] = depth;
        }
    }
    best[0] + best[1]
}

/// Structural recognition of the comet kinds, with k read as the maximum
/// degree of the input.
pub fn is_comet(t: &Tree, kind: CometKind) -> bool {
    let n = t.n();
    if n < 3 {
        return false;
    }
    let k = t.max_degree();
    match kind {
        CometKind::Comet => {
            if k < 2 {
                return false;
            }
            let target = n - k + 1;
            (0..n)
                .filter(|&v| t.degree(v) == k)
                .any(|v| longest_path_through(t, v) == target)
        }
        CometKind::SComet => {
            k >= 2 && are_isomorphic(t, &build_s_comet(n, k).expect("valid params"))
        }
        CometKind::CStar => {
            // Maximum degree n - 1 forces the star, the degenerate member.
            if k + 1 == n {
                return true;
            }
            if n < 4 {
                return false;
            }
            t.leaves().expect("n >= 2").into_iter().any(|b| {
                let reduced = t.remove_leaf(b).expect("is a leaf");
                reduced.max_degree() == k && is_comet(&reduced, CometKind::Comet)
            })
        }
    }
}

/// The sharp radius upper bound ceil((n - k + 1) / 2) for trees of order n
/// and maximum degree k.
pub fn radius_upper_bound(n: usize, k: usize) -> Result<usize> {
    check_params(n, k)?;
    Ok((n - k + 2) / 2)
}

/// (minimum, maximum) graph status over trees of order n and maximum degree
/// k, read off the constructed extremal witnesses.
pub fn status_bounds(n: usize, k: usize) -> Result<(usize, usize)> {
    check_params(n, k)?;
    let balanced = build_balanced(n, k, 0)?;
    let broom = build_s_comet(n, k)?;
    Ok((graph_status(&balanced).0, graph_status(&broom).0))
}

/// The sharp radius lower bound: the radius of a balanced tree of order n
/// and maximum degree k.
pub fn radius_lower_bound(n: usize, k: usize) -> Result<usize> {
    check_params(n, k)?;
    let t = build_balanced(n, k, 0)?;
    Ok(*eccentricities(&t).iter().min().expect("n >= 1"))
}
