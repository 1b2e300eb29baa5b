//! Cell-level compression: each `K_{4,4}` cell becomes one vertex, each
//! same-layer grid adjacency becomes one edge, and each inter-layer
//! `K_{2,4}` bundle collapses to one edge carrying a multiplicity (a pair
//! of cells can be joined by two bundles). Intra-cell edges vanish.

use crate::coords::{CellCoord, Dims};
use crate::edge::{ColorGroup, EdgeClass};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TopologyGraph};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompressedEdgeClass {
    /// Collapsed grid adjacency between cells of one layer.
    GridSameLayer,
    /// Collapsed inter-layer bundle(s) between cells of adjacent layers.
    InterLayerBundle,
}

/// One compressed edge: an unordered cell pair, its class, how many bundles
/// it stands for, and (for bundles) the contributing color groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedEdge {
    a: CellCoord,
    b: CellCoord,
    class: CompressedEdgeClass,
    multiplicity: u32,
    groups: Vec<ColorGroup>,
}

impl CompressedEdge {
    pub fn new(
        a: CellCoord,
        b: CellCoord,
        class: CompressedEdgeClass,
        multiplicity: u32,
        mut groups: Vec<ColorGroup>,
    ) -> Self {
        groups.sort_unstable();
        groups.dedup();
        let (a, b) = if b < a { (b, a) } else { (a, b) };
        CompressedEdge {
            a,
            b,
            class,
            multiplicity,
            groups,
        }
    }

    pub fn a(&self) -> CellCoord {
        self.a
    }

    pub fn b(&self) -> CellCoord {
        self.b
    }

    pub fn class(&self) -> CompressedEdgeClass {
        self.class
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Color groups of the collapsed bundles; empty for grid edges.
    pub fn groups(&self) -> &[ColorGroup] {
        &self.groups
    }

    pub fn touches(&self, cell: CellCoord) -> bool {
        self.a == cell || self.b == cell
    }
}

/// The cell-level graph: one vertex per cell of `dims`, edges as above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedGraph {
    dims: Dims,
    edges: Vec<CompressedEdge>,
}

impl CompressedGraph {
    /// Assembles a compressed graph from parts, validating cells against
    /// `dims` and restoring canonical edge order.
    pub fn from_parts(dims: Dims, mut edges: Vec<CompressedEdge>) -> Result<Self> {
        for edge in &edges {
            edge.a.validate(dims)?;
            edge.b.validate(dims)?;
            if edge.a == edge.b {
                return Err(Error::ConflictingEdgeClass {
                    a: edge.a.cell_index(dims)?,
                    b: edge.b.cell_index(dims)?,
                });
            }
        }
        edges.sort_unstable_by_key(|e| (e.a, e.b));
        Ok(CompressedGraph { dims, edges })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// One vertex per cell: `X * Y * Z`.
    pub fn vertex_count(&self) -> usize {
        self.dims.cell_count()
    }

    pub fn cells(&self) -> impl Iterator<Item = CellCoord> {
        self.dims.cells()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[CompressedEdge] {
        &self.edges
    }

    pub fn edges_touching(&self, cell: CellCoord) -> impl Iterator<Item = &CompressedEdge> {
        self.edges.iter().filter(move |e| e.touches(cell))
    }

    /// Number of compressed edges incident to a cell.
    pub fn degree(&self, cell: CellCoord) -> usize {
        self.edges_touching(cell).count()
    }

    /// Simple-graph view over cell indices, multiplicities flattened.
    pub fn to_simple(&self) -> SimpleGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                (
                    e.a.cell_index(self.dims).expect("cells were validated") as u32,
                    e.b.cell_index(self.dims).expect("cells were validated") as u32,
                )
            })
            .collect();
        SimpleGraph::new(self.vertex_count(), edges)
    }
}

/// Collapses a topology graph to its cell-level view.
pub fn compress(g: &TopologyGraph) -> CompressedGraph {
    let dims = g.dims();
    let mut grid: BTreeSet<(CellCoord, CellCoord)> = BTreeSet::new();
    let mut bundles: BTreeMap<(CellCoord, CellCoord), BTreeSet<ColorGroup>> = BTreeMap::new();
    for edge in g.edges() {
        let (ca, cb) = (edge.a().cell(), edge.b().cell());
        if ca == cb {
            continue;
        }
        let pair = if cb < ca { (cb, ca) } else { (ca, cb) };
        match edge.class() {
            EdgeClass::ChimeraHorizontal | EdgeClass::ChimeraVertical => {
                grid.insert(pair);
            }
            EdgeClass::PegasusInterLayer(group) => {
                bundles.entry(pair).or_default().insert(group);
            }
            EdgeClass::ChimeraIntraCell | EdgeClass::PegasusIntraCell => {}
        }
    }
    let mut edges = Vec::with_capacity(grid.len() + bundles.len());
    for (a, b) in grid {
        edges.push(CompressedEdge::new(
            a,
            b,
            CompressedEdgeClass::GridSameLayer,
            1,
            Vec::new(),
        ));
    }
    for ((a, b), groups) in bundles {
        edges.push(CompressedEdge::new(
            a,
            b,
            CompressedEdgeClass::InterLayerBundle,
            groups.len() as u32,
            groups.into_iter().collect(),
        ));
    }
    CompressedGraph::from_parts(dims, edges).expect("cells come from validated edges")
}
