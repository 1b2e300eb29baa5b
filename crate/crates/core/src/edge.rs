//! Edge values: unordered qubit pairs tagged with the coupling rule that
//! produced them.

use crate::coords::QubitCoord;
use crate::error::Error;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

/// Color group of an inter-layer bundle, keyed by the `(i, j)` of the rule's
/// source side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorGroup {
    Blue,
    Red,
    Green,
    Orange,
}

impl ColorGroup {
    pub const ALL: [ColorGroup; 4] = [
        ColorGroup::Blue,
        ColorGroup::Red,
        ColorGroup::Green,
        ColorGroup::Orange,
    ];

    /// Group of the inter-layer rule whose source pattern is side `i`,
    /// row `j`.
    pub fn for_source(i: u8, j: u8) -> ColorGroup {
        match (i != 0, j != 0) {
            (false, false) => ColorGroup::Blue,
            (true, false) => ColorGroup::Red,
            (false, true) => ColorGroup::Green,
            (true, true) => ColorGroup::Orange,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColorGroup::Blue => "blue",
            ColorGroup::Red => "red",
            ColorGroup::Green => "green",
            ColorGroup::Orange => "orange",
        }
    }
}

impl fmt::Display for ColorGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The rule family an edge belongs to. Reproducible from the endpoint
/// coordinates alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    /// Complete-bipartite coupler inside one cell (side 0 to side 1).
    ChimeraIntraCell,
    /// Grid coupler joining side-1 qubits of x-adjacent cells.
    ChimeraHorizontal,
    /// Grid coupler joining side-0 qubits of y-adjacent cells.
    ChimeraVertical,
    /// k-coupler joining the two k values of one (cell, side, j) slot.
    PegasusIntraCell,
    /// Inter-layer coupler; the group identifies the generating rule.
    PegasusInterLayer(ColorGroup),
}

impl EdgeClass {
    /// Stable token used by the interchange formats.
    pub fn token(&self) -> &'static str {
        match self {
            EdgeClass::ChimeraIntraCell => "chimera-intra",
            EdgeClass::ChimeraHorizontal => "chimera-horizontal",
            EdgeClass::ChimeraVertical => "chimera-vertical",
            EdgeClass::PegasusIntraCell => "pegasus-intra",
            EdgeClass::PegasusInterLayer(ColorGroup::Blue) => "pegasus-inter-blue",
            EdgeClass::PegasusInterLayer(ColorGroup::Red) => "pegasus-inter-red",
            EdgeClass::PegasusInterLayer(ColorGroup::Green) => "pegasus-inter-green",
            EdgeClass::PegasusInterLayer(ColorGroup::Orange) => "pegasus-inter-orange",
        }
    }

    /// True for the edges Pegasus adds on top of the Chimera layers.
    pub fn is_pegasus_only(&self) -> bool {
        matches!(
            self,
            EdgeClass::PegasusIntraCell | EdgeClass::PegasusInterLayer(_)
        )
    }

    pub fn color_group(&self) -> Option<ColorGroup> {
        match self {
            EdgeClass::PegasusInterLayer(group) => Some(*group),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for EdgeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "chimera-intra" => Ok(EdgeClass::ChimeraIntraCell),
            "chimera-horizontal" => Ok(EdgeClass::ChimeraHorizontal),
            "chimera-vertical" => Ok(EdgeClass::ChimeraVertical),
            "pegasus-intra" => Ok(EdgeClass::PegasusIntraCell),
            "pegasus-inter-blue" => Ok(EdgeClass::PegasusInterLayer(ColorGroup::Blue)),
            "pegasus-inter-red" => Ok(EdgeClass::PegasusInterLayer(ColorGroup::Red)),
            "pegasus-inter-green" => Ok(EdgeClass::PegasusInterLayer(ColorGroup::Green)),
            "pegasus-inter-orange" => Ok(EdgeClass::PegasusInterLayer(ColorGroup::Orange)),
            other => Err(Error::UnknownEdgeClass(other.to_string())),
        }
    }
}

/// An unordered pair of qubits with its class, stored canonically with the
/// lower coordinate first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: QubitCoord,
    b: QubitCoord,
    class: EdgeClass,
}

impl Edge {
    /// Panics on a self-loop; the generators never produce one.
    pub fn new(a: QubitCoord, b: QubitCoord, class: EdgeClass) -> Edge {
        assert!(a != b, "self-loop edge at {a}");
        if b < a {
            Edge { a: b, b: a, class }
        } else {
            Edge { a, b, class }
        }
    }

    pub fn a(&self) -> QubitCoord {
        self.a
    }

    pub fn b(&self) -> QubitCoord {
        self.b
    }

    pub fn class(&self) -> EdgeClass {
        self.class
    }

    pub fn endpoints(&self) -> (QubitCoord, QubitCoord) {
        (self.a, self.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -- {} [{}]", self.a, self.b, self.class)
    }
}
