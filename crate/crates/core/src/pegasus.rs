//! Pegasus edge generation: the k-couplers added inside every cell and the
//! inter-layer bundles, produced by two independent formulations, plus an
//! equivalence checker between them.
//!
//! Inter-layer coupling follows one closed form. A source qubit
//! `(x, y, z, i, j, k)` couples to all four qubits of the complementary
//! side in one cell of the next layer:
//!
//! ```text
//! (x, y, z, i, j, k)  <-->  (x', y', (z + 1) mod 3, 1 - i, j', k')
//!
//! x' = x - j * (1 - i) + [z == 2]
//! y' = y - j * i       + [z == 2]
//! ```
//!
//! `k` on the left and `(j', k')` on the right are free, so each source
//! slot contributes a `K_{2,4}` bundle. Bundles whose target cell falls
//! outside the lattice are dropped. The same edge set also factors into
//! eight grouped rules — four color groups, for the lower layers and the
//! top layer separately — listed in [`INTER_LAYER_RULES`]; both generators
//! are kept so they can be checked against each other.

use crate::chimera;
use crate::coords::{CellCoord, Dims, QubitCoord};
use crate::edge::{ColorGroup, Edge, EdgeClass};
use crate::error::{Error, Result};
use crate::graph::TopologyGraph;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Which source layers a grouped rule applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceLayers {
    /// z = 0 and z = 1: the target layer is z + 1, offsets unshifted.
    Lower,
    /// z = 2: the target layer wraps to 0, both offsets shifted by +1.
    Top,
}

/// One grouped inter-layer rule: a source pattern (layers, side, row) and
/// the cell offset of its target. The target side is always the complement
/// of the source side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InterLayerRule {
    pub layers: SourceLayers,
    pub source_i: u8,
    pub source_j: u8,
    pub dx: i32,
    pub dy: i32,
    pub group: ColorGroup,
}

/// The eight rule instances: four color groups for the lower layers and
/// for the top layer each.
pub const INTER_LAYER_RULES: [InterLayerRule; 8] = [
    InterLayerRule { layers: SourceLayers::Lower, source_i: 0, source_j: 0, dx: 0, dy: 0, group: ColorGroup::Blue },
    InterLayerRule { layers: SourceLayers::Lower, source_i: 1, source_j: 0, dx: 0, dy: 0, group: ColorGroup::Red },
    InterLayerRule { layers: SourceLayers::Lower, source_i: 0, source_j: 1, dx: -1, dy: 0, group: ColorGroup::Green },
    InterLayerRule { layers: SourceLayers::Lower, source_i: 1, source_j: 1, dx: 0, dy: -1, group: ColorGroup::Orange },
    InterLayerRule { layers: SourceLayers::Top, source_i: 0, source_j: 0, dx: 1, dy: 1, group: ColorGroup::Blue },
    InterLayerRule { layers: SourceLayers::Top, source_i: 1, source_j: 0, dx: 1, dy: 1, group: ColorGroup::Red },
    InterLayerRule { layers: SourceLayers::Top, source_i: 0, source_j: 1, dx: 0, dy: 1, group: ColorGroup::Green },
    InterLayerRule { layers: SourceLayers::Top, source_i: 1, source_j: 1, dx: 1, dy: 0, group: ColorGroup::Orange },
];

impl InterLayerRule {
    fn applies_to_layer(&self, z: u32) -> bool {
        match self.layers {
            SourceLayers::Lower => z <= 1,
            SourceLayers::Top => z == 2,
        }
    }

    /// Target cell when this rule fires at `cell`, if it stays inside the
    /// lattice.
    pub fn target_cell(&self, cell: CellCoord, dims: Dims) -> Option<CellCoord> {
        if !self.applies_to_layer(cell.z) {
            return None;
        }
        let tx = cell.x as i64 + self.dx as i64;
        let ty = cell.y as i64 + self.dy as i64;
        if tx < 0 || ty < 0 || tx >= dims.x() as i64 || ty >= dims.y() as i64 {
            return None;
        }
        Some(CellCoord::new(tx as u32, ty as u32, (cell.z + 1) % 3))
    }

    /// The 8 edges of this rule's bundle at `cell`: the two source qubits
    /// (both k) to the four target-side qubits (all j', k'). Empty when the
    /// target falls outside the lattice.
    pub fn bundle_edges(&self, cell: CellCoord, dims: Dims) -> Vec<Edge> {
        let Some(target) = self.target_cell(cell, dims) else {
            return Vec::new();
        };
        let mut edges = Vec::with_capacity(8);
        for k in 0..2 {
            let source = cell.qubit(self.source_i, self.source_j, k);
            for jp in 0..2 {
                for kp in 0..2 {
                    edges.push(Edge::new(
                        source,
                        target.qubit(1 - self.source_i, jp, kp),
                        EdgeClass::PegasusInterLayer(self.group),
                    ));
                }
            }
        }
        edges
    }
}

fn require_three_layers(dims: Dims) -> Result<()> {
    if dims.z() == 3 {
        Ok(())
    } else {
        Err(Error::RequiresThreeLayers { z: dims.z() })
    }
}

/// The k-couplers: one edge per (cell, side, j) slot joining its two k
/// values. 4 per cell, `12 X Y` total.
pub fn intracell_edges(dims: Dims) -> Result<Vec<Edge>> {
    require_three_layers(dims)?;
    let mut edges = Vec::with_capacity(4 * dims.cell_count());
    for cell in dims.cells() {
        edges.extend(cell_intracell_edges(cell));
    }
    Ok(edges)
}

fn cell_intracell_edges(cell: CellCoord) -> [Edge; 4] {
    let couple = |i, j| {
        Edge::new(
            cell.qubit(i, j, 0),
            cell.qubit(i, j, 1),
            EdgeClass::PegasusIntraCell,
        )
    };
    [couple(0, 0), couple(0, 1), couple(1, 0), couple(1, 1)]
}

/// Inter-layer edges via the general one-line rule applied to every qubit.
/// The set is deduplicated and canonically sorted.
pub fn interlayer_edges_general(dims: Dims) -> Result<Vec<Edge>> {
    require_three_layers(dims)?;
    let mut edges = Vec::new();
    for q in dims.qubits() {
        let flip = 1 - q.i;
        let dx = -((q.j * flip) as i64);
        let dy = -((q.j * q.i) as i64);
        // The top layer wraps to layer 0 with both offsets shifted by +1.
        let (tx, ty) = if q.z == 2 {
            (q.x as i64 + dx + 1, q.y as i64 + dy + 1)
        } else {
            (q.x as i64 + dx, q.y as i64 + dy)
        };
        if tx < 0 || ty < 0 || tx >= dims.x() as i64 || ty >= dims.y() as i64 {
            continue;
        }
        let target = CellCoord::new(tx as u32, ty as u32, (q.z + 1) % 3);
        let class = EdgeClass::PegasusInterLayer(ColorGroup::for_source(q.i, q.j));
        for jp in 0..2 {
            for kp in 0..2 {
                edges.push(Edge::new(q, target.qubit(flip, jp, kp), class));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// Inter-layer edges via the eight grouped rules applied to every cell.
/// The set is deduplicated and canonically sorted.
pub fn interlayer_edges_grouped(dims: Dims) -> Result<Vec<Edge>> {
    require_three_layers(dims)?;
    let mut edges = Vec::new();
    for cell in dims.cells() {
        for rule in &INTER_LAYER_RULES {
            edges.extend(rule.bundle_edges(cell, dims));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// The Pegasus-only edges contributed by one cell: its k-couplers plus the
/// forward bundles of the grouped rules. The unit of work for concurrent
/// generation.
pub fn cell_edges(cell: CellCoord, dims: Dims) -> Result<Vec<Edge>> {
    require_three_layers(dims)?;
    cell.validate(dims)?;
    let mut edges = Vec::from(cell_intracell_edges(cell));
    for rule in &INTER_LAYER_RULES {
        edges.extend(rule.bundle_edges(cell, dims));
    }
    Ok(edges)
}

/// Outcome of comparing the two inter-layer formulations as edge sets
/// (classes ignored).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleEquivalence {
    pub only_general: Vec<Edge>,
    pub only_grouped: Vec<Edge>,
}

impl RuleEquivalence {
    pub fn is_equivalent(&self) -> bool {
        self.only_general.is_empty() && self.only_grouped.is_empty()
    }
}

/// Compares [`interlayer_edges_general`] and [`interlayer_edges_grouped`]
/// as endpoint sets and reports the symmetric difference.
pub fn rules_equivalent(dims: Dims) -> Result<RuleEquivalence> {
    let general = interlayer_edges_general(dims)?;
    let grouped = interlayer_edges_grouped(dims)?;
    let general_pairs: BTreeSet<_> = general.iter().map(Edge::endpoints).collect();
    let grouped_pairs: BTreeSet<_> = grouped.iter().map(Edge::endpoints).collect();
    Ok(RuleEquivalence {
        only_general: general
            .iter()
            .filter(|e| !grouped_pairs.contains(&e.endpoints()))
            .copied()
            .collect(),
        only_grouped: grouped
            .iter()
            .filter(|e| !general_pairs.contains(&e.endpoints()))
            .copied()
            .collect(),
    })
}

/// The full Pegasus graph: three Chimera layers plus the k-couplers and the
/// inter-layer bundles. `24 X Y` vertices.
pub fn pegasus_graph(dims: Dims) -> Result<TopologyGraph> {
    require_three_layers(dims)?;
    let mut edges = Vec::new();
    for cell in dims.cells() {
        edges.extend(chimera::cell_edges(cell, dims).expect("iterated cells are in range"));
    }
    edges.extend(intracell_edges(dims)?);
    edges.extend(interlayer_edges_grouped(dims)?);
    Ok(TopologyGraph::from_edges(dims, edges).expect("generated edges are valid"))
}

/// Closed-form membership test for the graph family selected by `dims`: the
/// Pegasus graph when Z = 3, the plain Chimera graph when Z = 1. Agrees
/// exactly with membership in the enumerated edge set.
pub fn has_edge(a: QubitCoord, b: QubitCoord, dims: Dims) -> Option<EdgeClass> {
    if a == b || !a.is_valid(dims) || !b.is_valid(dims) {
        return None;
    }
    let same_cell = a.cell() == b.cell();
    if same_cell && a.i != b.i {
        return Some(EdgeClass::ChimeraIntraCell);
    }
    let same_slot = a.j == b.j && a.k == b.k;
    if a.i == 1 && b.i == 1 && same_slot && a.y == b.y && a.z == b.z && a.x.abs_diff(b.x) == 1 {
        return Some(EdgeClass::ChimeraHorizontal);
    }
    if a.i == 0 && b.i == 0 && same_slot && a.x == b.x && a.z == b.z && a.y.abs_diff(b.y) == 1 {
        return Some(EdgeClass::ChimeraVertical);
    }
    if dims.z() != 3 {
        return None;
    }
    if same_cell && a.i == b.i && a.j == b.j && a.k != b.k {
        return Some(EdgeClass::PegasusIntraCell);
    }
    interlayer_class(a, b).or_else(|| interlayer_class(b, a))
}

/// Tests the general rule with `s` as the forward source.
fn interlayer_class(s: QubitCoord, t: QubitCoord) -> Option<EdgeClass> {
    if (s.z + 1) % 3 != t.z || t.i != 1 - s.i {
        return None;
    }
    let flip = 1 - s.i;
    let dx = -((s.j * flip) as i64);
    let dy = -((s.j * s.i) as i64);
    let shift = if s.z == 2 { 1 } else { 0 };
    if t.x as i64 == s.x as i64 + dx + shift && t.y as i64 == s.y as i64 + dy + shift {
        Some(EdgeClass::PegasusInterLayer(ColorGroup::for_source(s.i, s.j)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pegasus_dims(n: u32) -> Dims {
        Dims::pegasus(n, n).unwrap()
    }

    #[test]
    fn pegasus_generators_reject_single_layer_dims() {
        let d = Dims::chimera(2, 2).unwrap();
        let err = Error::RequiresThreeLayers { z: 1 };
        assert_eq!(intracell_edges(d).unwrap_err(), err);
        assert_eq!(interlayer_edges_general(d).unwrap_err(), err);
        assert_eq!(interlayer_edges_grouped(d).unwrap_err(), err);
        assert_eq!(pegasus_graph(d).unwrap_err(), err);
    }

    #[test]
    fn k_couplers_pair_the_two_k_values() {
        let d = pegasus_dims(2);
        let edges = intracell_edges(d).unwrap();
        assert_eq!(edges.len(), 48);
        let per_cell = edges
            .iter()
            .filter(|e| e.a().cell() == CellCoord::new(0, 0, 0))
            .count();
        assert_eq!(per_cell, 4);
        // j must match: (0,0,0,0,0,0)-(0,0,0,0,1,1) is not a k-coupler.
        let g = pegasus_graph(d).unwrap();
        assert_eq!(
            g.edge_class(
                QubitCoord::new(0, 0, 0, 0, 0, 0),
                QubitCoord::new(0, 0, 0, 0, 1, 1)
            ),
            None
        );
    }

    #[test]
    fn lower_layer_blue_rule_targets_the_aligned_cell() {
        let d = pegasus_dims(2);
        let edges = interlayer_edges_general(d).unwrap();
        let source = QubitCoord::new(0, 0, 0, 0, 0, 0);
        let targets: Vec<_> = edges
            .iter()
            .filter(|e| e.a() == source || e.b() == source)
            .map(|e| if e.a() == source { e.b() } else { e.a() })
            .filter(|q| q.z == 1)
            .collect();
        assert_eq!(targets.len(), 4);
        for t in targets {
            assert_eq!((t.x, t.y, t.z, t.i), (0, 0, 1, 1));
        }
    }

    #[test]
    fn top_layer_rules_wrap_with_shifted_offsets() {
        let d = pegasus_dims(2);
        for k in 0..2 {
            let s = QubitCoord::new(0, 0, 2, 0, 0, k);
            for jp in 0..2 {
                for kp in 0..2 {
                    let t = QubitCoord::new(1, 1, 0, 1, jp, kp);
                    assert_eq!(
                        has_edge(s, t, d),
                        Some(EdgeClass::PegasusInterLayer(ColorGroup::Blue))
                    );
                }
            }
        }
    }

    #[test]
    fn boundary_bundles_are_dropped() {
        let d = pegasus_dims(2);
        let edges = interlayer_edges_general(d).unwrap();
        // Green sources at x = 0 would target x = -1.
        let green_from_origin = edges.iter().any(|e| {
            let (a, b) = e.endpoints();
            (a.x, a.y, a.z, a.i, a.j) == (0, 0, 0, 0, 1) || (b.x, b.y, b.z, b.i, b.j) == (0, 0, 0, 0, 1)
        });
        assert!(!green_from_origin);
    }

    #[test]
    fn rule_forms_agree_on_small_lattices() {
        for n in 1..=3 {
            let outcome = rules_equivalent(pegasus_dims(n)).unwrap();
            assert!(outcome.is_equivalent(), "mismatch at {n}x{n}");
        }
    }

    #[test]
    fn pegasus_graph_shape() {
        let d = pegasus_dims(2);
        let g = pegasus_graph(d).unwrap();
        assert_eq!(g.vertex_count(), 96);
        // Dropping the Pegasus-only edges leaves the three Chimera layers.
        let chimera_only = g.filtered(|e| !e.class().is_pegasus_only());
        assert_eq!(chimera_only.edge_count(), chimera::expected_edge_count(d));
    }

    #[test]
    fn has_edge_examples() {
        let d = pegasus_dims(2);
        assert_eq!(
            has_edge(
                QubitCoord::new(0, 0, 0, 0, 0, 0),
                QubitCoord::new(0, 0, 0, 1, 1, 1),
                d
            ),
            Some(EdgeClass::ChimeraIntraCell)
        );
        assert_eq!(
            has_edge(
                QubitCoord::new(0, 0, 0, 0, 0, 0),
                QubitCoord::new(0, 0, 0, 0, 0, 1),
                d
            ),
            Some(EdgeClass::PegasusIntraCell)
        );
        assert_eq!(
            has_edge(
                QubitCoord::new(0, 0, 0, 0, 0, 0),
                QubitCoord::new(1, 1, 0, 0, 0, 0),
                d
            ),
            None
        );
        // Invalid coordinates are never edges.
        assert_eq!(
            has_edge(
                QubitCoord::new(0, 0, 0, 0, 0, 0),
                QubitCoord::new(5, 0, 0, 1, 0, 0),
                d
            ),
            None
        );
    }

    #[test]
    fn rules_cover_all_source_patterns_once_per_layer_band() {
        for layers in [SourceLayers::Lower, SourceLayers::Top] {
            for i in 0..2u8 {
                for j in 0..2u8 {
                    let matches = INTER_LAYER_RULES
                        .iter()
                        .filter(|r| r.layers == layers && r.source_i == i && r.source_j == j)
                        .count();
                    assert_eq!(matches, 1);
                }
            }
        }
    }
}
