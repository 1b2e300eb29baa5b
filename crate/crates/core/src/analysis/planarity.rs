//! Sound non-planarity certificates.
//!
//! Two kinds of checkable witnesses are produced: the simple-graph edge
//! bound (`m > 3n - 6` forces non-planarity) and explicit `K_5` / `K_{3,3}`
//! subdivisions found by a bounded search. When neither applies the verdict
//! is [`PlanarityVerdict::Unknown`] — planarity itself is never claimed.
//!
//! The subdivision search is a fallback for small graphs that miss the edge
//! bound: it seeds branch-vertex candidates from the highest-degree
//! vertices and grows vertex-disjoint connecting paths by BFS, giving up
//! once the expansion budget is spent. Every witness is re-validated
//! programmatically before it is returned.

use crate::graph::SimpleGraph;
use alloc::vec::Vec;

/// Default search budget, counted in BFS expansions and subset attempts.
pub const DEFAULT_SEARCH_BUDGET: usize = 100_000;

const K33_POOL: usize = 12;
const K5_POOL: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// An explicit subdivision witness: branch vertices plus the vertex-disjoint
/// paths realizing each required branch pair.
///
/// For `K5` the branch list holds 5 vertices and `paths` the 10 pairs in
/// lexicographic order; for `K33` it holds the two sides concatenated
/// (`[l0, l1, l2, r0, r1, r2]`) and `paths` the 9 cross pairs in row-major
/// order. Each path runs from its pair's first vertex to the second,
/// endpoints included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<u32>,
    pub paths: Vec<Vec<u32>>,
}

impl KuratowskiWitness {
    fn expected_pairs(&self) -> Vec<(u32, u32)> {
        match self.kind {
            KuratowskiKind::K5 => {
                let b = &self.branch_vertices;
                let mut pairs = Vec::with_capacity(10);
                for p in 0..5 {
                    for q in p + 1..5 {
                        pairs.push((b[p], b[q]));
                    }
                }
                pairs
            }
            KuratowskiKind::K33 => {
                let b = &self.branch_vertices;
                let mut pairs = Vec::with_capacity(9);
                for l in 0..3 {
                    for r in 3..6 {
                        pairs.push((b[l], b[r]));
                    }
                }
                pairs
            }
        }
    }

    /// Checks the witness against the graph: branch vertices distinct, path
    /// endpoints matching the pattern, consecutive vertices adjacent, and
    /// path interiors disjoint from each other and from the branches.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let branch_count = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        if self.branch_vertices.len() != branch_count {
            return false;
        }
        if self
            .branch_vertices
            .iter()
            .any(|&v| v as usize >= n)
        {
            return false;
        }
        let mut sorted = self.branch_vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != branch_count {
            return false;
        }
        let pairs = self.expected_pairs();
        if self.paths.len() != pairs.len() {
            return false;
        }
        let mut interior_seen = alloc::vec![false; n];
        for (path, &(s, t)) in self.paths.iter().zip(&pairs) {
            if path.len() < 2 || path[0] != s || *path.last().unwrap() != t {
                return false;
            }
            for window in path.windows(2) {
                if !g.has_edge(window[0], window[1]) {
                    return false;
                }
            }
            for &v in &path[1..path.len() - 1] {
                if v as usize >= n
                    || interior_seen[v as usize]
                    || self.branch_vertices.contains(&v)
                {
                    return false;
                }
                interior_seen[v as usize] = true;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonplanarityCertificate {
    /// Simple-graph edge bound: `edge_count > 3 * vertex_count - 6`.
    EdgeBound {
        vertex_count: usize,
        edge_count: usize,
        bound: usize,
    },
    KuratowskiSubdivision(KuratowskiWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarityVerdict {
    NonPlanar(NonplanarityCertificate),
    /// No certificate found within budget; says nothing about planarity.
    Unknown,
}

impl PlanarityVerdict {
    pub fn is_non_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::NonPlanar(_))
    }
}

/// Certificate search with the default budget.
pub fn nonplanarity_certificate(g: &SimpleGraph) -> PlanarityVerdict {
    nonplanarity_certificate_with_budget(g, DEFAULT_SEARCH_BUDGET)
}

pub fn nonplanarity_certificate_with_budget(g: &SimpleGraph, budget: usize) -> PlanarityVerdict {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 3 {
        let bound = 3 * n - 6;
        if m > bound {
            return PlanarityVerdict::NonPlanar(NonplanarityCertificate::EdgeBound {
                vertex_count: n,
                edge_count: m,
                bound,
            });
        }
    }
    let mut budget = budget;
    if let Some(witness) = search_kuratowski(g, &mut budget) {
        if witness.validate(g) {
            return PlanarityVerdict::NonPlanar(NonplanarityCertificate::KuratowskiSubdivision(
                witness,
            ));
        }
    }
    PlanarityVerdict::Unknown
}

fn search_kuratowski(g: &SimpleGraph, budget: &mut usize) -> Option<KuratowskiWitness> {
    let adj = g.adjacency();
    let mut by_degree: Vec<u32> = (0..g.vertex_count() as u32).collect();
    by_degree.sort_by_key(|&v| core::cmp::Reverse((adj[v as usize].len(), core::cmp::Reverse(v))));

    let pool33: Vec<u32> = by_degree
        .iter()
        .copied()
        .filter(|&v| adj[v as usize].len() >= 3)
        .take(K33_POOL)
        .collect();
    if pool33.len() >= 6 {
        if let Some(w) = search_k33(&pool33, &adj, budget) {
            return Some(w);
        }
    }

    let pool5: Vec<u32> = by_degree
        .iter()
        .copied()
        .filter(|&v| adj[v as usize].len() >= 4)
        .take(K5_POOL)
        .collect();
    if pool5.len() >= 5 {
        if let Some(w) = search_k5(&pool5, &adj, budget) {
            return Some(w);
        }
    }
    None
}

fn search_k33(pool: &[u32], adj: &[Vec<u32>], budget: &mut usize) -> Option<KuratowskiWitness> {
    let mut subset = Vec::new();
    for_each_subset(pool, 6, &mut subset, budget, &mut |six, budget| {
        // Vertex six[0] is pinned to the left side; choosing its two
        // partners from the remaining five covers every bipartition once.
        for p in 1..5 {
            for q in p + 1..6 {
                let left = [six[0], six[p], six[q]];
                let right: Vec<u32> = (1..6)
                    .filter(|&n| n != p && n != q)
                    .map(|n| six[n])
                    .collect();
                let branches = [left[0], left[1], left[2], right[0], right[1], right[2]];
                let mut pairs = Vec::with_capacity(9);
                for &l in &left {
                    for &r in &right {
                        pairs.push((l, r));
                    }
                }
                if let Some(paths) = disjoint_paths(&branches, &pairs, adj, budget) {
                    return Some(KuratowskiWitness {
                        kind: KuratowskiKind::K33,
                        branch_vertices: branches.to_vec(),
                        paths,
                    });
                }
                if *budget == 0 {
                    return None;
                }
            }
        }
        None
    })
}

fn search_k5(pool: &[u32], adj: &[Vec<u32>], budget: &mut usize) -> Option<KuratowskiWitness> {
    let mut subset = Vec::new();
    for_each_subset(pool, 5, &mut subset, budget, &mut |five, budget| {
        let mut pairs = Vec::with_capacity(10);
        for p in 0..5 {
            for q in p + 1..5 {
                pairs.push((five[p], five[q]));
            }
        }
        disjoint_paths(five, &pairs, adj, budget).map(|paths| KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch_vertices: five.to_vec(),
            paths,
        })
    })
}

/// Enumerates `size`-subsets of `pool` until the visitor returns a witness
/// or the budget runs out.
fn for_each_subset(
    pool: &[u32],
    size: usize,
    scratch: &mut Vec<u32>,
    budget: &mut usize,
    visit: &mut dyn FnMut(&[u32], &mut usize) -> Option<KuratowskiWitness>,
) -> Option<KuratowskiWitness> {
    fn recurse(
        pool: &[u32],
        start: usize,
        size: usize,
        scratch: &mut Vec<u32>,
        budget: &mut usize,
        visit: &mut dyn FnMut(&[u32], &mut usize) -> Option<KuratowskiWitness>,
    ) -> Option<KuratowskiWitness> {
        if scratch.len() == size {
            *budget = budget.saturating_sub(1);
            return visit(scratch, budget);
        }
        for idx in start..pool.len() {
            if *budget == 0 {
                return None;
            }
            scratch.push(pool[idx]);
            if let Some(w) = recurse(pool, idx + 1, size, scratch, budget, visit) {
                return Some(w);
            }
            scratch.pop();
        }
        None
    }
    recurse(pool, 0, size, scratch, budget, visit)
}

/// Grows one BFS path per pair, in order, reusing no interior vertex and
/// never routing through a branch vertex.
fn disjoint_paths(
    branches: &[u32],
    pairs: &[(u32, u32)],
    adj: &[Vec<u32>],
    budget: &mut usize,
) -> Option<Vec<Vec<u32>>> {
    let n = adj.len();
    let mut used = alloc::vec![false; n];
    let mut is_branch = alloc::vec![false; n];
    for &b in branches {
        is_branch[b as usize] = true;
    }
    let mut paths = Vec::with_capacity(pairs.len());
    for &(s, t) in pairs {
        let path = bfs_path(s, t, adj, &used, &is_branch, budget)?;
        for &v in &path[1..path.len() - 1] {
            used[v as usize] = true;
        }
        paths.push(path);
    }
    Some(paths)
}

fn bfs_path(
    s: u32,
    t: u32,
    adj: &[Vec<u32>],
    used: &[bool],
    is_branch: &[bool],
    budget: &mut usize,
) -> Option<Vec<u32>> {
    const UNSET: u32 = u32::MAX;
    let n = adj.len();
    let mut parent = alloc::vec![UNSET; n];
    let mut queue = alloc::collections::VecDeque::new();
    parent[s as usize] = s;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        for &w in &adj[v as usize] {
            if parent[w as usize] != UNSET {
                continue;
            }
            if w == t {
                parent[w as usize] = v;
                let mut path = alloc::vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur as usize];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            // Interior vertices must be fresh and must not be branches.
            if used[w as usize] || is_branch[w as usize] {
                continue;
            }
            parent[w as usize] = v;
            queue.push_back(w);
        }
    }
    None
}
