//! Six-index qubit coordinates and their canonical linear numbering.
//!
//! | index | range      | meaning                                  |
//! |-------|------------|------------------------------------------|
//! | `x`   | `0..X`     | cell position along the row direction    |
//! | `y`   | `0..Y`     | cell position along the column direction |
//! | `z`   | `0..Z`     | Chimera layer                            |
//! | `i`   | `0..2`     | side of the `K_{4,4}` cell               |
//! | `j`   | `0..2`     | first index within the side              |
//! | `k`   | `0..2`     | second index within the side             |
//!
//! The linear numbering is cell-major with `k` fastest:
//! `k + 2j + 4i + 8(x + X(y + Yz))`, which keeps the 8 qubits of each cell
//! on consecutive indices. Coordinate ordering follows the same numbering,
//! so sorted coordinates and sorted indices always agree.

use crate::error::{Error, Result};
use core::cmp::Ordering;
use core::fmt;

/// Lattice extent: an X x Y array of `K_{4,4}` cells per layer, Z layers.
///
/// Z is 1 for a plain Chimera lattice and 3 for Pegasus; no coupling rules
/// are defined for other layer counts, so construction rejects them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    x: u32,
    y: u32,
    z: u32,
}

impl Dims {
    pub fn new(x: u32, y: u32, z: u32) -> Result<Self> {
        if x == 0 || y == 0 || !(z == 1 || z == 3) {
            return Err(Error::InvalidDims { x, y, z });
        }
        Ok(Dims { x, y, z })
    }

    /// Single-layer lattice (Chimera).
    pub fn chimera(x: u32, y: u32) -> Result<Self> {
        Dims::new(x, y, 1)
    }

    /// Three-layer lattice (Pegasus).
    pub fn pegasus(x: u32, y: u32) -> Result<Self> {
        Dims::new(x, y, 3)
    }

    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn y(&self) -> u32 {
        self.y
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    pub fn cell_count(&self) -> usize {
        self.x as usize * self.y as usize * self.z as usize
    }

    /// Total qubit count, `8 * X * Y * Z`.
    pub fn qubit_count(&self) -> usize {
        8 * self.cell_count()
    }

    /// All cells in canonical (layer-major) order.
    pub fn cells(&self) -> impl Iterator<Item = CellCoord> {
        let (x, y, z) = (self.x, self.y, self.z);
        (0..z).flat_map(move |cz| {
            (0..y).flat_map(move |cy| (0..x).map(move |cx| CellCoord { x: cx, y: cy, z: cz }))
        })
    }

    /// All qubits in linear order.
    pub fn qubits(&self) -> impl Iterator<Item = QubitCoord> {
        self.cells().flat_map(|cell| cell.qubits())
    }
}

/// A single qubit: cell `(x, y)`, layer `z`, side `i`, in-side slot `(j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QubitCoord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl QubitCoord {
    pub const fn new(x: u32, y: u32, z: u32, i: u8, j: u8, k: u8) -> Self {
        QubitCoord { x, y, z, i, j, k }
    }

    /// The cell this qubit belongs to.
    pub fn cell(&self) -> CellCoord {
        CellCoord {
            x: self.x,
            y: self.y,
            z: self.z,
        }
    }

    pub fn is_valid(&self, dims: Dims) -> bool {
        self.validate(dims).is_ok()
    }

    /// Range-checks every field, naming the first offending one.
    pub fn validate(&self, dims: Dims) -> Result<()> {
        check_field("x", self.x, dims.x)?;
        check_field("y", self.y, dims.y)?;
        check_field("z", self.z, dims.z)?;
        check_field("i", self.i as u32, 2)?;
        check_field("j", self.j as u32, 2)?;
        check_field("k", self.k as u32, 2)?;
        Ok(())
    }

    /// Canonical linear index: `k + 2j + 4i + 8(x + X(y + Yz))`.
    pub fn linear_index(&self, dims: Dims) -> Result<usize> {
        self.validate(dims)?;
        Ok(self.index_unchecked(dims))
    }

    pub(crate) fn index_unchecked(&self, dims: Dims) -> usize {
        let cell = self.x as usize
            + dims.x as usize * (self.y as usize + dims.y as usize * self.z as usize);
        self.k as usize + 2 * self.j as usize + 4 * self.i as usize + 8 * cell
    }

    /// Inverse of [`QubitCoord::linear_index`].
    pub fn from_linear(index: usize, dims: Dims) -> Result<Self> {
        let limit = dims.qubit_count();
        if index >= limit {
            return Err(Error::IndexOutOfRange { index, limit });
        }
        let k = (index & 1) as u8;
        let j = ((index >> 1) & 1) as u8;
        let i = ((index >> 2) & 1) as u8;
        let cell = index / 8;
        let x = (cell % dims.x as usize) as u32;
        let y = (cell / dims.x as usize % dims.y as usize) as u32;
        let z = (cell / dims.x as usize / dims.y as usize) as u32;
        Ok(QubitCoord { x, y, z, i, j, k })
    }
}

fn check_field(field: &'static str, value: u32, limit: u32) -> Result<()> {
    if value < limit {
        Ok(())
    } else {
        Err(Error::FieldOutOfRange { field, value, limit })
    }
}

// Ordering matches the linear numbering for any fixed Dims.
impl Ord for QubitCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.z, self.y, self.x, self.i, self.j, self.k).cmp(&(
            other.z, other.y, other.x, other.i, other.j, other.k,
        ))
    }
}

impl PartialOrd for QubitCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QubitCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.x, self.y, self.z, self.i, self.j, self.k
        )
    }
}

/// A `K_{4,4}` cell: position `(x, y)` within layer `z`. Identifies the 8
/// qubits that share those three indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellCoord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl CellCoord {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        CellCoord { x, y, z }
    }

    pub fn is_valid(&self, dims: Dims) -> bool {
        self.validate(dims).is_ok()
    }

    pub fn validate(&self, dims: Dims) -> Result<()> {
        check_field("x", self.x, dims.x)?;
        check_field("y", self.y, dims.y)?;
        check_field("z", self.z, dims.z)?;
        Ok(())
    }

    /// Cell-major index, equal to any member qubit's linear index / 8.
    pub fn cell_index(&self, dims: Dims) -> Result<usize> {
        self.validate(dims)?;
        Ok(self.x as usize + dims.x as usize * (self.y as usize + dims.y as usize * self.z as usize))
    }

    /// The member qubit at side `i`, slot `(j, k)`.
    pub fn qubit(&self, i: u8, j: u8, k: u8) -> QubitCoord {
        QubitCoord {
            x: self.x,
            y: self.y,
            z: self.z,
            i,
            j,
            k,
        }
    }

    /// The 8 member qubits in linear order.
    pub fn qubits(&self) -> impl Iterator<Item = QubitCoord> {
        let cell = *self;
        (0..8u8).map(move |n| cell.qubit((n >> 2) & 1, (n >> 1) & 1, n & 1))
    }
}

impl Ord for CellCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.z, self.y, self.x).cmp(&(other.z, other.y, other.x))
    }
}

impl PartialOrd for CellCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}
