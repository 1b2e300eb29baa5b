//! SVG depictions of topology graphs.
//!
//! Four styles cover the standard ways these lattices are drawn:
//!
//! - `TiltedClassic`: each cell as two slightly leaning 4-qubit columns
//!   (side 0 left, side 1 right);
//! - `Diamond`: side 0 as a horizontal run of 4 qubits crossing side 1 as a
//!   vertical run;
//! - `Triangle`: the two sides as the legs of a right angle;
//! - `Compressed`: one dot per cell (requires the cell-level graph).
//!
//! Placement is a per-cell rule over `(i, j, k)` plus a per-layer up-right
//! shift; layers rise toward the upper right, the origin sits bottom-left.
//! The whole lattice can additionally be sheared (`tilted_lattice`). All
//! constants are tunable through [`RenderSpec`].
//!
//! Output is one `<line>` per edge and one `<circle>` per vertex, emitted in
//! a fixed order with fixed-precision coordinates, so identical inputs give
//! identical bytes. Optional boundary stubs (extra `<line class="stub">`
//! elements) mark couplers that were dropped at the lattice boundary.

use pegasus_topo_core::analysis::{CompressedEdgeClass, CompressedGraph};
use pegasus_topo_core::pegasus::{SourceLayers, INTER_LAYER_RULES};
use pegasus_topo_core::{ColorGroup, Dims, EdgeClass, TopologyGraph};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    TiltedClassic,
    Diamond,
    Triangle,
    Compressed,
}

impl Style {
    pub fn name(&self) -> &'static str {
        match self {
            Style::TiltedClassic => "classic",
            Style::Diamond => "diamond",
            Style::Triangle => "triangle",
            Style::Compressed => "compressed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    /// Black vertices, grey edges; no class information.
    Monochrome,
    /// Grey Chimera edges, black k-couplers, light-blue inter-layer edges.
    ByEdgeClass,
    /// As `ByEdgeClass`, but inter-layer edges take their group color.
    ByColorGroup,
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub style: Style,
    /// Shear the whole lattice (the "tilted lattice" variants).
    pub tilted_lattice: bool,
    pub color_mode: ColorMode,
    /// Distance between neighboring cell origins.
    pub cell_pitch: f64,
    /// Spacing between the four qubits of one side.
    pub qubit_spacing: f64,
    /// Half-gap between the two columns of the classic style.
    pub side_gap: f64,
    /// Horizontal lean per qubit step in the classic style.
    pub column_tilt: f64,
    /// Up-right shift applied per layer.
    pub layer_offset: f64,
    /// Shear factor used when `tilted_lattice` is set.
    pub shear: f64,
    pub node_radius: f64,
    pub cell_radius: f64,
    pub edge_width: f64,
    /// Draw dropped boundary couplers as short open-ended lines.
    pub show_boundary_stubs: bool,
    /// Stub length as a fraction of the dropped edge.
    pub stub_fraction: f64,
    /// Refuse to render more vertices than this.
    pub max_vertices: usize,
}

impl RenderSpec {
    pub fn new(style: Style) -> Self {
        RenderSpec {
            style,
            tilted_lattice: false,
            color_mode: ColorMode::ByColorGroup,
            cell_pitch: 120.0,
            qubit_spacing: 14.0,
            side_gap: 24.0,
            column_tilt: 4.0,
            layer_offset: 30.0,
            shear: 0.45,
            node_radius: 3.5,
            cell_radius: 8.0,
            edge_width: 1.2,
            show_boundary_stubs: false,
            stub_fraction: 0.3,
            max_vertices: 50_000,
        }
    }
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec::new(Style::TiltedClassic)
    }
}

pub enum RenderInput<'a> {
    Full(&'a TopologyGraph),
    Compressed(&'a CompressedGraph),
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("style `compressed` requires a compressed cell-level graph")]
    NeedsCompressedGraph,
    #[error("style `{0}` requires a full topology graph")]
    NeedsFullGraph(&'static str),
    #[error("graph too large to render: {vertices} vertices exceeds the {limit} limit")]
    TooLarge { vertices: usize, limit: usize },
}

pub fn render_svg(input: RenderInput<'_>, spec: &RenderSpec) -> Result<String, RenderError> {
    match (input, spec.style) {
        (RenderInput::Full(_), Style::Compressed) => Err(RenderError::NeedsCompressedGraph),
        (RenderInput::Compressed(_), style) if style != Style::Compressed => {
            Err(RenderError::NeedsFullGraph(style.name()))
        }
        (RenderInput::Full(g), _) => render_full(g, spec),
        (RenderInput::Compressed(c), _) => render_compressed(c, spec),
    }
}

/// Lattice position (y grows upward) of a qubit, allowing out-of-range
/// phantom cells for stub geometry.
fn qubit_position(spec: &RenderSpec, cx: i64, cy: i64, z: u32, i: u8, j: u8, k: u8) -> (f64, f64) {
    let (ox, oy) = cell_origin(spec, cx, cy, z);
    let m = (2 * j + k) as f64;
    let s = spec.qubit_spacing;
    let (dx, dy) = match spec.style {
        Style::TiltedClassic => {
            // Two columns leaning toward each other.
            let lean = (m - 1.5) * spec.column_tilt;
            if i == 0 {
                (-spec.side_gap + lean, (m - 1.5) * s)
            } else {
                (spec.side_gap - lean, (m - 1.5) * s)
            }
        }
        Style::Diamond => {
            if i == 0 {
                ((m - 1.5) * s, 0.0)
            } else {
                (0.0, (m - 1.5) * s)
            }
        }
        Style::Triangle => {
            if i == 0 {
                ((m + 0.5) * s, 0.0)
            } else {
                (0.0, (m + 0.5) * s)
            }
        }
        Style::Compressed => (0.0, 0.0),
    };
    (ox + dx, oy + dy)
}

fn cell_origin(spec: &RenderSpec, cx: i64, cy: i64, z: u32) -> (f64, f64) {
    (
        cx as f64 * spec.cell_pitch + z as f64 * spec.layer_offset,
        cy as f64 * spec.cell_pitch + z as f64 * spec.layer_offset,
    )
}

fn project(spec: &RenderSpec, p: (f64, f64)) -> (f64, f64) {
    if spec.tilted_lattice {
        (p.0 + spec.shear * p.1, p.1)
    } else {
        p
    }
}

fn group_color(group: ColorGroup) -> &'static str {
    match group {
        ColorGroup::Blue => "#0000FF",
        ColorGroup::Red => "#FF0000",
        ColorGroup::Green => "#008000",
        ColorGroup::Orange => "#FFA500",
    }
}

const GREY: &str = "#808080";
const BLACK: &str = "#000000";
const LIGHT_BLUE: &str = "#87CEEB";

fn edge_color(class: EdgeClass, mode: ColorMode) -> &'static str {
    match mode {
        ColorMode::Monochrome => GREY,
        ColorMode::ByEdgeClass => match class {
            EdgeClass::PegasusIntraCell => BLACK,
            EdgeClass::PegasusInterLayer(_) => LIGHT_BLUE,
            _ => GREY,
        },
        ColorMode::ByColorGroup => match class {
            EdgeClass::PegasusIntraCell => BLACK,
            EdgeClass::PegasusInterLayer(group) => group_color(group),
            _ => GREY,
        },
    }
}

/// Draw rank: grey substrate first, colors on top.
fn class_rank(class: EdgeClass) -> u8 {
    match class {
        EdgeClass::ChimeraIntraCell | EdgeClass::ChimeraHorizontal | EdgeClass::ChimeraVertical => {
            0
        }
        EdgeClass::PegasusIntraCell => 1,
        EdgeClass::PegasusInterLayer(_) => 2,
    }
}

struct Line {
    from: (f64, f64),
    to: (f64, f64),
    color: &'static str,
    width: f64,
    stub: bool,
}

fn render_full(g: &TopologyGraph, spec: &RenderSpec) -> Result<String, RenderError> {
    if g.vertex_count() > spec.max_vertices {
        return Err(RenderError::TooLarge {
            vertices: g.vertex_count(),
            limit: spec.max_vertices,
        });
    }
    let dims = g.dims();
    let positions: Vec<(f64, f64)> = dims
        .qubits()
        .map(|q| {
            project(
                spec,
                qubit_position(spec, q.x as i64, q.y as i64, q.z, q.i, q.j, q.k),
            )
        })
        .collect();

    let mut ranked: Vec<(u8, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(n, e)| (class_rank(e.class()), n))
        .collect();
    ranked.sort_unstable();

    let mut lines = Vec::with_capacity(g.edge_count());
    for (_, n) in ranked {
        let e = &g.edges()[n];
        lines.push(Line {
            from: positions[g.index_of(e.a()).expect("valid edge")],
            to: positions[g.index_of(e.b()).expect("valid edge")],
            color: edge_color(e.class(), spec.color_mode),
            width: spec.edge_width,
            stub: false,
        });
    }
    if spec.show_boundary_stubs {
        lines.extend(boundary_stubs(dims, spec));
    }
    Ok(assemble(&lines, &positions, spec.node_radius, spec))
}

fn render_compressed(c: &CompressedGraph, spec: &RenderSpec) -> Result<String, RenderError> {
    if c.vertex_count() > spec.max_vertices {
        return Err(RenderError::TooLarge {
            vertices: c.vertex_count(),
            limit: spec.max_vertices,
        });
    }
    let positions: Vec<(f64, f64)> = c
        .cells()
        .map(|cell| project(spec, cell_origin(spec, cell.x as i64, cell.y as i64, cell.z)))
        .collect();
    let dims = c.dims();
    let index = |cell: pegasus_topo_core::CellCoord| {
        cell.cell_index(dims).expect("compressed cells are valid")
    };
    let mut lines = Vec::with_capacity(c.edge_count());
    for e in c.edges() {
        let color = match (e.class(), spec.color_mode) {
            (CompressedEdgeClass::GridSameLayer, _) => GREY,
            (CompressedEdgeClass::InterLayerBundle, ColorMode::Monochrome) => GREY,
            (CompressedEdgeClass::InterLayerBundle, ColorMode::ByEdgeClass) => LIGHT_BLUE,
            (CompressedEdgeClass::InterLayerBundle, ColorMode::ByColorGroup) => {
                match e.groups() {
                    [only] => group_color(*only),
                    _ => BLACK,
                }
            }
        };
        lines.push(Line {
            from: positions[index(e.a())],
            to: positions[index(e.b())],
            color,
            width: spec.edge_width * (1.0 + 0.8 * (e.multiplicity() as f64 - 1.0)),
            stub: false,
        });
    }
    Ok(assemble(&lines, &positions, spec.cell_radius, spec))
}

/// Stub lines for couplers dropped at the lattice boundary: grid couplers
/// leaving the X x Y range and (on three-layer lattices) bundles whose
/// partner cell is out of range, drawn from the surviving endpoint toward
/// the phantom one.
fn boundary_stubs(dims: Dims, spec: &RenderSpec) -> Vec<Line> {
    let mut stubs = Vec::new();
    let (xr, yr) = (dims.x() as i64, dims.y() as i64);
    let in_range = |x: i64, y: i64| (0..xr).contains(&x) && (0..yr).contains(&y);
    let mut push = |real: (f64, f64), phantom: (f64, f64), class: EdgeClass| {
        let from = project(spec, real);
        let to_full = project(spec, phantom);
        let to = (
            from.0 + (to_full.0 - from.0) * spec.stub_fraction,
            from.1 + (to_full.1 - from.1) * spec.stub_fraction,
        );
        stubs.push(Line {
            from,
            to,
            color: edge_color(class, spec.color_mode),
            width: spec.edge_width,
            stub: true,
        });
    };

    for z in 0..dims.z() {
        for j in 0..2u8 {
            for k in 0..2u8 {
                // Horizontal couplers off both vertical borders.
                for y in 0..yr {
                    for (real_x, phantom_x) in [(0i64, -1i64), (xr - 1, xr)] {
                        push(
                            qubit_position(spec, real_x, y, z, 1, j, k),
                            qubit_position(spec, phantom_x, y, z, 1, j, k),
                            EdgeClass::ChimeraHorizontal,
                        );
                    }
                }
                // Vertical couplers off both horizontal borders.
                for x in 0..xr {
                    for (real_y, phantom_y) in [(0i64, -1i64), (yr - 1, yr)] {
                        push(
                            qubit_position(spec, x, real_y, z, 0, j, k),
                            qubit_position(spec, x, phantom_y, z, 0, j, k),
                            EdgeClass::ChimeraVertical,
                        );
                    }
                }
            }
        }
    }

    if dims.z() != 3 {
        return stubs;
    }
    // Bundles dropped in either direction. Rule offsets are at most one
    // cell, so a one-cell ring of phantom sources covers every case.
    for sx in -1..=xr {
        for sy in -1..=yr {
            for z in 0..3u32 {
                for rule in &INTER_LAYER_RULES {
                    let applies = match rule.layers {
                        SourceLayers::Lower => z <= 1,
                        SourceLayers::Top => z == 2,
                    };
                    if !applies {
                        continue;
                    }
                    let (tx, ty) = (sx + rule.dx as i64, sy + rule.dy as i64);
                    let tz = (z + 1) % 3;
                    let source_in = in_range(sx, sy);
                    if source_in == in_range(tx, ty) {
                        continue; // fully inside (a real edge) or fully outside
                    }
                    let class = EdgeClass::PegasusInterLayer(rule.group);
                    for k in 0..2u8 {
                        for jp in 0..2u8 {
                            for kp in 0..2u8 {
                                let source = qubit_position(
                                    spec, sx, sy, z, rule.source_i, rule.source_j, k,
                                );
                                let target_q = qubit_position(
                                    spec, tx, ty, tz, 1 - rule.source_i, jp, kp,
                                );
                                if source_in {
                                    push(source, target_q, class);
                                } else {
                                    push(target_q, source, class);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    stubs
}

fn assemble(lines: &[Line], vertices: &[(f64, f64)], radius: f64, spec: &RenderSpec) -> String {
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: (f64, f64)| {
        min = (min.0.min(p.0), min.1.min(p.1));
        max = (max.0.max(p.0), max.1.max(p.1));
    };
    for &p in vertices {
        grow(p);
    }
    for line in lines {
        grow(line.from);
        grow(line.to);
    }
    if vertices.is_empty() {
        min = (0.0, 0.0);
        max = (0.0, 0.0);
    }
    let margin = spec.cell_pitch * 0.5;
    let width = max.0 - min.0 + 2.0 * margin;
    let height = max.1 - min.1 + 2.0 * margin;
    // Flip y: lattice coordinates grow upward, SVG coordinates downward.
    let fx = |x: f64| x - min.0 + margin;
    let fy = |y: f64| max.1 - y + margin;

    let mut svg = String::new();
    let _ = writeln!(svg, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    for line in lines {
        let stub_attr = if line.stub { " class=\"stub\"" } else { "" };
        let _ = writeln!(
            svg,
            "<line{stub_attr} x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{}\" stroke-width=\"{:.2}\"/>",
            fx(line.from.0),
            fy(line.from.1),
            fx(line.to.0),
            fy(line.to.1),
            line.color,
            line.width,
        );
    }
    for &(x, y) in vertices {
        let _ = writeln!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{radius:.2}\" fill=\"{BLACK}\"/>",
            fx(x),
            fy(y),
        );
    }
    svg.push_str("</svg>\n");
    svg
}
