//! Structural analytics over generated graphs: degree statistics, connected
//! components, the cell-level compressed view, non-planarity certificates,
//! and 4-clique enumeration.

mod clique;
mod compress;
mod planarity;

pub use clique::find_k4;
pub use compress::{compress, CompressedEdge, CompressedEdgeClass, CompressedGraph};
pub use planarity::{
    nonplanarity_certificate, nonplanarity_certificate_with_budget, KuratowskiKind,
    KuratowskiWitness, NonplanarityCertificate, PlanarityVerdict, DEFAULT_SEARCH_BUDGET,
};

use crate::graph::TopologyGraph;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Exact degree histogram: degree -> number of vertices. Counts sum to the
/// vertex count.
pub fn degree_histogram(g: &TopologyGraph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for index in 0..g.vertex_count() {
        *hist.entry(g.degree(index)).or_insert(0) += 1;
    }
    hist
}

/// Connected components: returns the component count and a label per vertex
/// (labels are assigned in ascending order of each component's lowest
/// vertex index).
pub fn connected_components(g: &TopologyGraph) -> (usize, Vec<u32>) {
    const UNVISITED: u32 = u32::MAX;
    let n = g.vertex_count();
    let mut labels = alloc::vec![UNVISITED; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for start in 0..n {
        if labels[start] != UNVISITED {
            continue;
        }
        labels[start] = count;
        stack.push(start as u32);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v as usize) {
                if labels[w as usize] == UNVISITED {
                    labels[w as usize] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count as usize, labels)
}
