//! Concurrent generation. Each cell's edge contribution is produced
//! independently and the merge goes through the same canonical sort as the
//! serial generators, so output is bit-identical regardless of thread
//! count.

use pegasus_topo_core::{chimera, pegasus, Dims, Edge, Result, TopologyGraph};
use rayon::prelude::*;

pub fn chimera_graph_par(dims: Dims) -> TopologyGraph {
    let cells: Vec<_> = dims.cells().collect();
    let edges: Vec<Edge> = cells
        .par_iter()
        .flat_map_iter(|&cell| chimera::cell_edges(cell, dims).expect("cells are in range"))
        .collect();
    TopologyGraph::from_edges(dims, edges).expect("generated edges are valid")
}

pub fn pegasus_graph_par(dims: Dims) -> Result<TopologyGraph> {
    // Surface the layer-count error before fanning out.
    pegasus::intracell_edges(dims)?;
    let cells: Vec<_> = dims.cells().collect();
    let edges: Vec<Edge> = cells
        .par_iter()
        .flat_map_iter(|&cell| {
            let mut cell_edges =
                chimera::cell_edges(cell, dims).expect("cells are in range");
            cell_edges.extend(pegasus::cell_edges(cell, dims).expect("cells are in range"));
            cell_edges
        })
        .collect();
    Ok(TopologyGraph::from_edges(dims, edges).expect("generated edges are valid"))
}
