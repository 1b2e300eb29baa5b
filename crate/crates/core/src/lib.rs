//! Generators and structural analytics for the connectivity graphs of
//! D-Wave-style quantum annealers: the Chimera lattice of `K_{4,4}` cells and
//! the Pegasus family built from three coupled Chimera layers.
//!
//! Qubits are addressed by six indices `(x, y, z, i, j, k)`: cell position
//! `(x, y)` within a layer, layer `z`, side `i` of the `K_{4,4}` cell, and
//! position `(j, k)` within that side. The generators produce
//! [`TopologyGraph`] values whose edges are canonically sorted and tagged
//! with the coupling rule that produced them, so exports are byte-stable and
//! every edge can be traced back to its rule family.
//!
//! The crate is `no_std` (allocation required). IO, interchange formats, and
//! SVG rendering live in the companion `pegasus-topo` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod chimera;
pub mod coords;
pub mod edge;
pub mod error;
pub mod graph;
pub mod pegasus;

pub use coords::{CellCoord, Dims, QubitCoord};
pub use edge::{ColorGroup, Edge, EdgeClass};
pub use error::{Error, Result};
pub use graph::{SimpleGraph, TopologyGraph};
