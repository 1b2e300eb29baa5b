//! Brute-force reference enumerators for the Chimera and Pegasus lattices.
//!
//! This crate is test support only. Every coupling rule is written out as a
//! literal pairwise predicate and applied to every unordered pair of qubits,
//! so the resulting edge lists are independent of the production generators
//! and the two can be compared edge-for-edge.

use std::collections::{BTreeMap, BTreeSet};

/// A qubit label `(x, y, z, i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

/// Lattice extent: an X x Y array of cells per layer, Z layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Grid {
    pub fn qubit_count(self) -> usize {
        8 * self.x as usize * self.y as usize * self.z as usize
    }
}

/// Cell-major linear numbering: k fastest, then j, i, x, y, z.
pub fn linear(c: Coord, g: Grid) -> usize {
    let cell = c.x as usize + g.x as usize * (c.y as usize + g.y as usize * c.z as usize);
    c.k as usize + 2 * c.j as usize + 4 * c.i as usize + 8 * cell
}

/// Every qubit of the grid, in linear order.
pub fn qubits(g: Grid) -> Vec<Coord> {
    let mut out = Vec::with_capacity(g.qubit_count());
    for z in 0..g.z {
        for y in 0..g.y {
            for x in 0..g.x {
                for i in 0..2u8 {
                    for j in 0..2u8 {
                        for k in 0..2u8 {
                            out.push(Coord { x, y, z, i, j, k });
                        }
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().enumerate().all(|(n, &c)| linear(c, g) == n));
    out
}

fn off_by_one(p: u32, q: u32) -> bool {
    p + 1 == q || q + 1 == p
}

/// Classify an unordered qubit pair by testing each published coupling rule
/// directly. Returns the class token used by the v1 edge-list format, or
/// `None` when the pair is not coupled.
pub fn classify(a: Coord, b: Coord, pegasus: bool) -> Option<&'static str> {
    if a == b {
        return None;
    }
    let same_cell = a.x == b.x && a.y == b.y && a.z == b.z;
    // Complete bipartite cell: side 0 couples to side 1 for all (j, k).
    if same_cell && a.i != b.i {
        return Some("chimera-intra");
    }
    // Grid coupler along x: both side 1, same (y, z, j, k), x off by one.
    if a.i == 1 && b.i == 1 && a.y == b.y && a.z == b.z && a.j == b.j && a.k == b.k && off_by_one(a.x, b.x) {
        return Some("chimera-horizontal");
    }
    // Grid coupler along y: both side 0, same (x, z, j, k), y off by one.
    if a.i == 0 && b.i == 0 && a.x == b.x && a.z == b.z && a.j == b.j && a.k == b.k && off_by_one(a.y, b.y) {
        return Some("chimera-vertical");
    }
    if !pegasus {
        return None;
    }
    // k-coupler: same cell, same side and j, the two k values.
    if same_cell && a.i == b.i && a.j == b.j && a.k != b.k {
        return Some("pegasus-intra");
    }
    inter_layer(a, b).or_else(|| inter_layer(b, a))
}

/// The eight directed inter-layer relations, each written out literally.
/// `s` is the source (its layer maps forward to the target's layer).
fn inter_layer(s: Coord, t: Coord) -> Option<&'static str> {
    if t.i != 1 - s.i {
        return None;
    }
    if s.z <= 1 {
        if t.z != s.z + 1 {
            return None;
        }
        match (s.i, s.j) {
            (0, 0) if t.x == s.x && t.y == s.y => Some("pegasus-inter-blue"),
            (1, 0) if t.x == s.x && t.y == s.y => Some("pegasus-inter-red"),
            (0, 1) if t.x + 1 == s.x && t.y == s.y => Some("pegasus-inter-green"),
            (1, 1) if t.x == s.x && t.y + 1 == s.y => Some("pegasus-inter-orange"),
            _ => None,
        }
    } else {
        // Top layer (z = 2) wraps to layer 0 with both offsets shifted by +1.
        if s.z != 2 || t.z != 0 {
            return None;
        }
        match (s.i, s.j) {
            (0, 0) if t.x == s.x + 1 && t.y == s.y + 1 => Some("pegasus-inter-blue"),
            (1, 0) if t.x == s.x + 1 && t.y == s.y + 1 => Some("pegasus-inter-red"),
            (0, 1) if t.x == s.x && t.y == s.y + 1 => Some("pegasus-inter-green"),
            (1, 1) if t.x == s.x + 1 && t.y == s.y => Some("pegasus-inter-orange"),
            _ => None,
        }
    }
}

/// All edges by exhaustive pairwise classification, sorted by index pair.
pub fn edges(g: Grid, pegasus: bool) -> Vec<(usize, usize, &'static str)> {
    let qs = qubits(g);
    let mut out = Vec::new();
    for (ia, &a) in qs.iter().enumerate() {
        for (ib, &b) in qs.iter().enumerate().skip(ia + 1) {
            if let Some(class) = classify(a, b, pegasus) {
                out.push((ia, ib, class));
            }
        }
    }
    out
}

/// Degree histogram (degree -> vertex count) from the pairwise edge list.
pub fn degree_histogram(g: Grid, pegasus: bool) -> BTreeMap<usize, usize> {
    let mut deg = vec![0usize; g.qubit_count()];
    for (a, b, _) in edges(g, pegasus) {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut hist = BTreeMap::new();
    for d in deg {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

/// Render the edge list in the v1 interchange format.
pub fn edgelist_v1(g: Grid, pegasus: bool) -> String {
    let mut s = format!("# pegasus-topo v1 X={} Y={} Z={}\n", g.x, g.y, g.z);
    for (a, b, class) in edges(g, pegasus) {
        s.push_str(&format!("{a} {b} {class}\n"));
    }
    s
}

/// Cell-level collapse of the Pegasus edge list, computed straight from the
/// pairwise enumeration: same-layer grid adjacencies plus inter-layer bundle
/// pairs with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedSummary {
    pub cells: usize,
    pub grid_pairs: usize,
    pub bundle_pairs: usize,
    pub doubled_pairs: usize,
    pub inter_layer_edges: usize,
}

impl CompressedSummary {
    /// Total edge count of the compressed (simple) graph.
    pub fn edge_count(&self) -> usize {
        self.grid_pairs + self.bundle_pairs
    }
}

pub fn compress_summary(g: Grid) -> CompressedSummary {
    let mut grid = BTreeSet::new();
    let mut bundles: BTreeMap<(usize, usize), BTreeSet<&'static str>> = BTreeMap::new();
    let mut inter_layer_edges = 0usize;
    for (ia, ib, class) in edges(g, true) {
        let (ca, cb) = (ia / 8, ib / 8);
        if ca == cb {
            continue;
        }
        let pair = (ca.min(cb), ca.max(cb));
        match class {
            "chimera-horizontal" | "chimera-vertical" => {
                grid.insert(pair);
            }
            c if c.starts_with("pegasus-inter-") => {
                inter_layer_edges += 1;
                bundles.entry(pair).or_default().insert(c);
            }
            _ => {}
        }
    }
    let doubled_pairs = bundles.values().filter(|groups| groups.len() == 2).count();
    CompressedSummary {
        cells: (g.x * g.y * g.z) as usize,
        grid_pairs: grid.len(),
        bundle_pairs: bundles.len(),
        doubled_pairs,
        inter_layer_edges,
    }
}

/// Brute-force scan of all 4-subsets for cliques. Only sensible for small
/// grids; quadruples come out sorted ascending.
#[allow(clippy::needless_range_loop)]
pub fn k4_cliques(g: Grid, pegasus: bool) -> Vec<[usize; 4]> {
    let n = g.qubit_count();
    let mut adj = vec![vec![false; n]; n];
    for (a, b, _) in edges(g, pegasus) {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if !(adj[a][c] && adj[b][c]) {
                    continue;
                }
                for d in c + 1..n {
                    if adj[a][d] && adj[b][d] && adj[c][d] {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
