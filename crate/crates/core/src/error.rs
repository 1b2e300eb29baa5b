//! Error type shared by the coordinate and generator modules.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Lattice dimensions outside the supported family.
    InvalidDims { x: u32, y: u32, z: u32 },
    /// A coordinate field lies outside its half-open range.
    FieldOutOfRange {
        field: &'static str,
        value: u32,
        limit: u32,
    },
    /// A linear qubit index is not addressable for the given dimensions.
    IndexOutOfRange { index: usize, limit: usize },
    /// The operation is only defined on three-layer (Z = 3) lattices.
    RequiresThreeLayers { z: u32 },
    /// Two edges share endpoints but disagree about their class.
    ConflictingEdgeClass { a: usize, b: usize },
    /// An edge-class token that no class parses from.
    UnknownEdgeClass(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDims { x, y, z } => write!(
                f,
                "invalid dimensions X={x} Y={y} Z={z}: X and Y must be at least 1 and Z must be 1 or 3"
            ),
            Error::FieldOutOfRange { field, value, limit } => {
                write!(f, "coordinate field {field}={value} out of range [0, {limit})")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "linear index {index} out of range [0, {limit})")
            }
            Error::RequiresThreeLayers { z } => {
                write!(f, "operation requires a three-layer (Z=3) lattice, got Z={z}")
            }
            Error::ConflictingEdgeClass { a, b } => {
                write!(f, "conflicting classes for edge ({a}, {b})")
            }
            Error::UnknownEdgeClass(token) => write!(f, "unknown edge class `{token}`"),
        }
    }
}

impl core::error::Error for Error {}
