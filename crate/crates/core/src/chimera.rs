//! Chimera edge generation: `K_{4,4}` cells plus the same-side grid
//! couplers.
//!
//! Each layer z is an independent X x Y Chimera lattice:
//! - inside every cell, side 0 couples completely to side 1 (16 edges);
//! - each side-1 qubit couples to the side-1 qubit with the same `(j, k)`
//!   in the cell at `x + 1`;
//! - each side-0 qubit couples to its counterpart in the cell at `y + 1`.
//!
//! Grid couplers whose partner cell falls outside the lattice are dropped;
//! the renderer can draw them as stubs but they never enter the graph.

use crate::coords::{CellCoord, Dims};
use crate::edge::{Edge, EdgeClass};
use crate::error::Result;
use crate::graph::TopologyGraph;
use alloc::vec::Vec;

/// The 16 complete-bipartite edges of one cell.
pub fn k44_edges(cell: CellCoord, dims: Dims) -> Result<Vec<Edge>> {
    cell.validate(dims)?;
    let mut edges = Vec::with_capacity(16);
    for j in 0..2 {
        for k in 0..2 {
            for jp in 0..2 {
                for kp in 0..2 {
                    edges.push(Edge::new(
                        cell.qubit(0, j, k),
                        cell.qubit(1, jp, kp),
                        EdgeClass::ChimeraIntraCell,
                    ));
                }
            }
        }
    }
    Ok(edges)
}

/// Horizontal grid couplers for the whole lattice: `4 (X-1) Y Z` edges.
pub fn horizontal_edges(dims: Dims) -> Vec<Edge> {
    let mut edges = Vec::new();
    for cell in dims.cells() {
        edges.extend(horizontal_from_cell(cell, dims));
    }
    edges
}

/// Vertical grid couplers for the whole lattice: `4 X (Y-1) Z` edges.
pub fn vertical_edges(dims: Dims) -> Vec<Edge> {
    let mut edges = Vec::new();
    for cell in dims.cells() {
        edges.extend(vertical_from_cell(cell, dims));
    }
    edges
}

fn horizontal_from_cell(cell: CellCoord, dims: Dims) -> Vec<Edge> {
    let mut edges = Vec::new();
    if cell.x + 1 < dims.x() {
        let right = CellCoord { x: cell.x + 1, ..cell };
        for j in 0..2 {
            for k in 0..2 {
                edges.push(Edge::new(
                    cell.qubit(1, j, k),
                    right.qubit(1, j, k),
                    EdgeClass::ChimeraHorizontal,
                ));
            }
        }
    }
    edges
}

fn vertical_from_cell(cell: CellCoord, dims: Dims) -> Vec<Edge> {
    let mut edges = Vec::new();
    if cell.y + 1 < dims.y() {
        let above = CellCoord { y: cell.y + 1, ..cell };
        for j in 0..2 {
            for k in 0..2 {
                edges.push(Edge::new(
                    cell.qubit(0, j, k),
                    above.qubit(0, j, k),
                    EdgeClass::ChimeraVertical,
                ));
            }
        }
    }
    edges
}

/// The Chimera edges contributed by one cell: its `K_{4,4}` plus the grid
/// couplers leaving it toward `x + 1` and `y + 1`. The union over all cells
/// is the full Chimera edge set, which makes this the unit of work for
/// concurrent generation.
pub fn cell_edges(cell: CellCoord, dims: Dims) -> Result<Vec<Edge>> {
    let mut edges = k44_edges(cell, dims)?;
    edges.extend(horizontal_from_cell(cell, dims));
    edges.extend(vertical_from_cell(cell, dims));
    Ok(edges)
}

/// The full Chimera graph for `dims`. With Z = 3 this is three disjoint
/// layers, used as the substrate of the Pegasus graph.
pub fn chimera_graph(dims: Dims) -> TopologyGraph {
    let mut edges = Vec::with_capacity(expected_edge_count(dims));
    for cell in dims.cells() {
        edges.extend(cell_edges(cell, dims).expect("iterated cells are in range"));
    }
    TopologyGraph::from_edges(dims, edges).expect("generated edges are valid")
}

/// `16 X Y Z + 4 (X-1) Y Z + 4 X (Y-1) Z`.
pub fn expected_edge_count(dims: Dims) -> usize {
    let (x, y, z) = (dims.x() as usize, dims.y() as usize, dims.z() as usize);
    16 * x * y * z + 4 * (x - 1) * y * z + 4 * x * (y - 1) * z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::QubitCoord;

    #[test]
    fn k44_cell_has_sixteen_cross_side_edges() {
        let d = Dims::chimera(1, 1).unwrap();
        let cell = CellCoord::new(0, 0, 0);
        let edges = k44_edges(cell, d).unwrap();
        assert_eq!(edges.len(), 16);
        let g = TopologyGraph::from_edges(d, edges).unwrap();
        assert!(g.contains_edge(
            QubitCoord::new(0, 0, 0, 0, 0, 0),
            QubitCoord::new(0, 0, 0, 1, 1, 1)
        ));
        // Same-side pairs are excluded.
        assert!(!g.contains_edge(
            QubitCoord::new(0, 0, 0, 0, 0, 0),
            QubitCoord::new(0, 0, 0, 0, 0, 1)
        ));
    }

    #[test]
    fn k44_rejects_out_of_range_cells() {
        let d = Dims::chimera(2, 2).unwrap();
        assert!(k44_edges(CellCoord::new(2, 0, 0), d).is_err());
        assert!(k44_edges(CellCoord::new(0, 0, 1), d).is_err());
    }

    #[test]
    fn horizontal_edges_stop_at_the_boundary() {
        assert!(horizontal_edges(Dims::chimera(1, 4).unwrap()).is_empty());
        assert_eq!(horizontal_edges(Dims::chimera(2, 1).unwrap()).len(), 4);
        assert_eq!(horizontal_edges(Dims::chimera(5, 5).unwrap()).len(), 80);
    }

    #[test]
    fn vertical_edges_stop_at_the_boundary() {
        assert!(vertical_edges(Dims::chimera(4, 1).unwrap()).is_empty());
        assert_eq!(vertical_edges(Dims::chimera(1, 2).unwrap()).len(), 4);
        assert_eq!(vertical_edges(Dims::chimera(5, 5).unwrap()).len(), 80);
    }

    #[test]
    fn graph_counts_follow_the_closed_forms() {
        let single = chimera_graph(Dims::chimera(1, 1).unwrap());
        assert_eq!(single.vertex_count(), 8);
        assert_eq!(single.edge_count(), 16);

        let small = chimera_graph(Dims::chimera(4, 4).unwrap());
        assert_eq!(small.vertex_count(), 128);

        let large = chimera_graph(Dims::chimera(16, 16).unwrap());
        assert_eq!(large.vertex_count(), 2048);
        assert_eq!(large.edge_count(), expected_edge_count(large.dims()));
    }

    #[test]
    fn interior_qubits_have_degree_six() {
        let d = Dims::chimera(3, 3).unwrap();
        let g = chimera_graph(d);
        for q in CellCoord::new(1, 1, 0).qubits() {
            assert_eq!(g.degree(q.linear_index(d).unwrap()), 6);
        }
    }

    #[test]
    fn single_layer_graphs_are_bipartite() {
        // 2-coloring by (x + y + i) parity: intra-cell edges flip i, grid
        // edges shift x or y by one. Within any single cell the parts are
        // exactly side 0 vs side 1.
        let g = chimera_graph(Dims::chimera(3, 2).unwrap());
        let color = |q: QubitCoord| (q.x + q.y + q.i as u32) % 2;
        for e in g.edges() {
            assert_ne!(color(e.a()), color(e.b()), "edge {e} joins equal colors");
        }
    }
}
