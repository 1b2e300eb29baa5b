//! Immutable topology container with adjacency queries, plus the plain
//! simple-graph view used by the planarity analyses.

use crate::coords::{Dims, QubitCoord};
use crate::edge::{Edge, EdgeClass};
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// An immutable vertex/edge container. The vertex set is the full qubit set
/// of `dims`; edges are stored sorted by canonical index pair and each
/// carries the class of the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyGraph {
    dims: Dims,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<u32>>,
}

impl TopologyGraph {
    /// Builds a graph from an edge list: validates every endpoint, sorts
    /// canonically, removes duplicates, and rejects class conflicts between
    /// edges that share endpoints.
    pub fn from_edges(dims: Dims, mut edges: Vec<Edge>) -> Result<Self> {
        for edge in &edges {
            edge.a().validate(dims)?;
            edge.b().validate(dims)?;
        }
        edges.sort_unstable();
        edges.dedup();
        for pair in edges.windows(2) {
            if pair[0].endpoints() == pair[1].endpoints() {
                return Err(Error::ConflictingEdgeClass {
                    a: pair[0].a().index_unchecked(dims),
                    b: pair[0].b().index_unchecked(dims),
                });
            }
        }
        let mut adjacency = alloc::vec![Vec::new(); dims.qubit_count()];
        for edge in &edges {
            let ia = edge.a().index_unchecked(dims);
            let ib = edge.b().index_unchecked(dims);
            adjacency[ia].push(ib as u32);
            adjacency[ib].push(ia as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(TopologyGraph {
            dims,
            edges,
            adjacency,
        })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.qubit_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Coordinate of a linear vertex index.
    pub fn coord(&self, index: usize) -> Result<QubitCoord> {
        QubitCoord::from_linear(index, self.dims)
    }

    /// Linear index of a coordinate.
    pub fn index_of(&self, q: QubitCoord) -> Result<usize> {
        q.linear_index(self.dims)
    }

    /// Neighbor indices of a vertex, sorted ascending.
    /// Panics if `index >= vertex_count()`.
    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.adjacency[index]
    }

    /// Degree of a vertex. Panics if `index >= vertex_count()`.
    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    /// Class of the edge joining `a` and `b`, if present.
    pub fn edge_class(&self, a: QubitCoord, b: QubitCoord) -> Option<EdgeClass> {
        let (lo, hi) = if b < a { (b, a) } else { (a, b) };
        self.edges
            .binary_search_by(|e| e.endpoints().cmp(&(lo, hi)))
            .ok()
            .map(|pos| self.edges[pos].class())
    }

    pub fn contains_edge(&self, a: QubitCoord, b: QubitCoord) -> bool {
        self.edge_class(a, b).is_some()
    }

    /// Edge count per class.
    pub fn class_counts(&self) -> BTreeMap<EdgeClass, usize> {
        let mut counts = BTreeMap::new();
        for edge in &self.edges {
            *counts.entry(edge.class()).or_insert(0) += 1;
        }
        counts
    }

    /// A new graph over the same vertex set keeping only matching edges.
    pub fn filtered(&self, mut keep: impl FnMut(&Edge) -> bool) -> TopologyGraph {
        let edges: Vec<Edge> = self.edges.iter().filter(|e| keep(e)).copied().collect();
        TopologyGraph::from_edges(self.dims, edges).expect("edges were already validated")
    }

    /// Simple-graph view: canonical index pairs, classes dropped.
    pub fn to_simple(&self) -> SimpleGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                (
                    e.a().index_unchecked(self.dims) as u32,
                    e.b().index_unchecked(self.dims) as u32,
                )
            })
            .collect();
        SimpleGraph::new(self.vertex_count(), edges)
    }
}

/// Plain simple graph: a vertex count plus sorted unique index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

impl SimpleGraph {
    /// Normalizes pair order, sorts, and deduplicates. Panics on self-loops
    /// or out-of-range endpoints.
    pub fn new(vertex_count: usize, mut edges: Vec<(u32, u32)>) -> SimpleGraph {
        for pair in &mut edges {
            assert!(pair.0 != pair.1, "self-loop at vertex {}", pair.0);
            assert!(
                (pair.0 as usize) < vertex_count && (pair.1 as usize) < vertex_count,
                "edge ({}, {}) out of range for {} vertices",
                pair.0,
                pair.1,
                vertex_count
            );
            if pair.1 < pair.0 {
                *pair = (pair.1, pair.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let pair = (a.min(b), a.max(b));
        self.edges.binary_search(&pair).is_ok()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = alloc::vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn duplicate_edges_collapse() {
        let d = Dims::chimera(1, 1).unwrap();
        let e = Edge::new(
            QubitCoord::new(0, 0, 0, 0, 0, 0),
            QubitCoord::new(0, 0, 0, 1, 0, 0),
            EdgeClass::ChimeraIntraCell,
        );
        let g = TopologyGraph::from_edges(d, vec![e, e]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.neighbors(0), &[4]);
    }

    #[test]
    fn conflicting_classes_are_rejected() {
        let d = Dims::chimera(1, 1).unwrap();
        let a = QubitCoord::new(0, 0, 0, 0, 0, 0);
        let b = QubitCoord::new(0, 0, 0, 1, 0, 0);
        let edges = vec![
            Edge::new(a, b, EdgeClass::ChimeraIntraCell),
            Edge::new(a, b, EdgeClass::PegasusIntraCell),
        ];
        assert_eq!(
            TopologyGraph::from_edges(d, edges).unwrap_err(),
            Error::ConflictingEdgeClass { a: 0, b: 4 }
        );
    }

    #[test]
    fn out_of_range_endpoints_are_rejected() {
        let d = Dims::chimera(1, 1).unwrap();
        let edges = vec![Edge::new(
            QubitCoord::new(0, 0, 0, 0, 0, 0),
            QubitCoord::new(1, 0, 0, 1, 0, 0),
            EdgeClass::ChimeraHorizontal,
        )];
        assert!(TopologyGraph::from_edges(d, edges).is_err());
    }

    #[test]
    fn simple_graph_normalizes_pairs() {
        let g = SimpleGraph::new(4, vec![(3, 1), (1, 3), (0, 2)]);
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(0, 1));
    }
}
