//! Deterministic graph exporters.
//!
//! All four formats list edges in canonical order and carry the edge class,
//! so identical graphs always serialize to identical bytes.
//!
//! # Edge-list v1
//!
//! ```text
//! # pegasus-topo v1 X=2 Y=2 Z=3
//! 0 4 chimera-intra
//! 0 5 chimera-intra
//! ```
//!
//! One header line, then one line per edge: the canonical linear indices of
//! the endpoints (lower first) and the class token. UTF-8, LF line endings.
//!
//! # JSON
//!
//! A `topology/1` document: `{"schema", "dims": {x, y, z}, "edges":
//! [{a, b, class}, ...]}`.
//!
//! DOT and GraphML outputs follow their public grammars, carrying the class
//! as an edge attribute string and the dimensions on the graph element.

use pegasus_topo_core::TopologyGraph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeListV1,
    Dot,
    GraphMl,
    Json,
}

impl ExportFormat {
    pub fn name(&self) -> &'static str {
        match self {
            ExportFormat::EdgeListV1 => "edgelist",
            ExportFormat::Dot => "dot",
            ExportFormat::GraphMl => "graphml",
            ExportFormat::Json => "json",
        }
    }
}

/// JSON document mirroring a [`TopologyGraph`].
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct GraphDoc {
    pub schema: String,
    pub dims: DimsDoc,
    pub edges: Vec<EdgeDoc>,
}

pub(crate) const GRAPH_SCHEMA: &str = "topology/1";

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DimsDoc {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct EdgeDoc {
    pub a: usize,
    pub b: usize,
    pub class: String,
}

pub fn export(g: &TopologyGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::EdgeListV1 => edgelist(g),
        ExportFormat::Dot => dot(g),
        ExportFormat::GraphMl => graphml(g),
        ExportFormat::Json => json(g),
    }
}

fn index_pairs(g: &TopologyGraph) -> impl Iterator<Item = (usize, usize, &'static str)> + '_ {
    g.edges().iter().map(|e| {
        (
            g.index_of(e.a()).expect("graph edges are valid"),
            g.index_of(e.b()).expect("graph edges are valid"),
            e.class().token(),
        )
    })
}

fn edgelist(g: &TopologyGraph) -> String {
    let d = g.dims();
    let mut out = format!("# pegasus-topo v1 X={} Y={} Z={}\n", d.x(), d.y(), d.z());
    for (a, b, class) in index_pairs(g) {
        out.push_str(&format!("{a} {b} {class}\n"));
    }
    out
}

fn dot(g: &TopologyGraph) -> String {
    let d = g.dims();
    let mut out = String::from("graph topology {\n");
    out.push_str(&format!(
        "  // pegasus-topo v1 X={} Y={} Z={}\n",
        d.x(),
        d.y(),
        d.z()
    ));
    out.push_str(&format!(
        "  graph [label=\"pegasus-topo X={} Y={} Z={}\"];\n",
        d.x(),
        d.y(),
        d.z()
    ));
    for (a, b, class) in index_pairs(g) {
        out.push_str(&format!("  {a} -- {b} [class=\"{class}\"];\n"));
    }
    out.push_str("}\n");
    out
}

fn graphml(g: &TopologyGraph) -> String {
    let d = g.dims();
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
         \x20 <key id=\"class\" for=\"edge\" attr.name=\"class\" attr.type=\"string\"/>\n\
         \x20 <key id=\"dims\" for=\"graph\" attr.name=\"dims\" attr.type=\"string\"/>\n",
    );
    out.push_str("  <graph id=\"topology\" edgedefault=\"undirected\">\n");
    out.push_str(&format!(
        "    <data key=\"dims\">X={} Y={} Z={}</data>\n",
        d.x(),
        d.y(),
        d.z()
    ));
    for index in 0..g.vertex_count() {
        out.push_str(&format!("    <node id=\"n{index}\"/>\n"));
    }
    for (a, b, class) in index_pairs(g) {
        out.push_str(&format!(
            "    <edge source=\"n{a}\" target=\"n{b}\"><data key=\"class\">{class}</data></edge>\n"
        ));
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

fn json(g: &TopologyGraph) -> String {
    let d = g.dims();
    let doc = GraphDoc {
        schema: GRAPH_SCHEMA.to_string(),
        dims: DimsDoc {
            x: d.x(),
            y: d.y(),
            z: d.z(),
        },
        edges: index_pairs(g)
            .map(|(a, b, class)| EdgeDoc {
                a,
                b,
                class: class.to_string(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
    out.push('\n');
    out
}
