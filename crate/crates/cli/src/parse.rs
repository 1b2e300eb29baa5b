//! Parsers for the interchange formats.
//!
//! Edge-list and JSON documents are parsed in full generality. The DOT and
//! GraphML parsers accept the subset these exporters emit, which is enough
//! to round-trip any graph that went through [`crate::export`].

use crate::export::{GraphDoc, GRAPH_SCHEMA};
use crate::report::{AnalyzeReport, REPORT_SCHEMA};
use pegasus_topo_core::{Dims, Edge, EdgeClass, QubitCoord, TopologyGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("missing or malformed header (expected `# pegasus-topo v1 X=.. Y=.. Z=..`)")]
    BadHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Topology {
        line: usize,
        source: pegasus_topo_core::Error,
    },
    #[error("invalid topology document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unrecognized input format")]
    UnknownFormat,
}

/// Input kinds recognized by content sniffing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentKind {
    EdgeList,
    Json,
    Dot,
    GraphMl,
}

/// A parsed input file.
#[derive(Debug)]
pub enum ParsedDocument {
    Graph(TopologyGraph),
    Report(Box<AnalyzeReport>),
}

/// Guesses the document kind from its first bytes.
pub fn sniff(text: &str) -> Option<DocumentKind> {
    let head = text.trim_start();
    if head.starts_with('#') {
        Some(DocumentKind::EdgeList)
    } else if head.starts_with('{') {
        Some(DocumentKind::Json)
    } else if head.starts_with("graph") {
        Some(DocumentKind::Dot)
    } else if head.starts_with('<') {
        Some(DocumentKind::GraphMl)
    } else {
        None
    }
}

/// Sniffs and parses. JSON inputs may be either a `topology/1` export or an
/// `analyze/1` report.
pub fn parse_auto(text: &str) -> Result<ParsedDocument, FormatError> {
    match sniff(text).ok_or(FormatError::UnknownFormat)? {
        DocumentKind::EdgeList => Ok(ParsedDocument::Graph(parse_edgelist(text)?)),
        DocumentKind::Dot => Ok(ParsedDocument::Graph(parse_dot(text)?)),
        DocumentKind::GraphMl => Ok(ParsedDocument::Graph(parse_graphml(text)?)),
        DocumentKind::Json => {
            let value: serde_json::Value = serde_json::from_str(text)?;
            match value.get("schema").and_then(|s| s.as_str()) {
                Some(GRAPH_SCHEMA) => Ok(ParsedDocument::Graph(graph_from_doc(
                    serde_json::from_value(value)?,
                )?)),
                Some(REPORT_SCHEMA) => Ok(ParsedDocument::Report(Box::new(
                    serde_json::from_value(value)?,
                ))),
                Some(other) => Err(FormatError::Invalid(format!("unknown schema `{other}`"))),
                None => Err(FormatError::Invalid("missing schema field".into())),
            }
        }
    }
}

/// Parses a `topology/1` JSON export.
pub fn parse_json(text: &str) -> Result<TopologyGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    if doc.schema != GRAPH_SCHEMA {
        return Err(FormatError::Invalid(format!(
            "unknown schema `{}`",
            doc.schema
        )));
    }
    graph_from_doc(doc)
}

fn graph_from_doc(doc: GraphDoc) -> Result<TopologyGraph, FormatError> {
    let dims = parse_dims(doc.dims.x, doc.dims.y, doc.dims.z)?;
    let edges = doc
        .edges
        .iter()
        .enumerate()
        .map(|(n, e)| build_edge(dims, e.a, e.b, &e.class, n + 1))
        .collect::<Result<Vec<_>, _>>()?;
    TopologyGraph::from_edges(dims, edges)
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

fn parse_dims(x: u32, y: u32, z: u32) -> Result<Dims, FormatError> {
    Dims::new(x, y, z).map_err(|e| FormatError::Invalid(e.to_string()))
}

fn build_edge(
    dims: Dims,
    a: usize,
    b: usize,
    class: &str,
    line: usize,
) -> Result<Edge, FormatError> {
    let qa = QubitCoord::from_linear(a, dims).map_err(|source| FormatError::Topology {
        line,
        source,
    })?;
    let qb = QubitCoord::from_linear(b, dims).map_err(|source| FormatError::Topology {
        line,
        source,
    })?;
    if qa == qb {
        return Err(FormatError::Malformed {
            line,
            message: format!("self-loop at index {a}"),
        });
    }
    let class: EdgeClass = class.parse().map_err(|source| FormatError::Topology {
        line,
        source,
    })?;
    Ok(Edge::new(qa, qb, class))
}

/// Parses the v1 edge-list format.
pub fn parse_edgelist(text: &str) -> Result<TopologyGraph, FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(FormatError::BadHeader)?;
    let dims = parse_v1_header(header).ok_or(FormatError::BadHeader)?;
    let mut edges = Vec::new();
    for (n, line) in lines {
        let line_no = n + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(FormatError::Malformed {
                line: line_no,
                message: format!("expected `<a> <b> <class>`, got `{line}`"),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| FormatError::Malformed {
            line: line_no,
            message: format!("bad index `{}`", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| FormatError::Malformed {
            line: line_no,
            message: format!("bad index `{}`", fields[1]),
        })?;
        edges.push(build_edge(dims, a, b, fields[2], line_no)?);
    }
    TopologyGraph::from_edges(dims, edges).map_err(|e| FormatError::Invalid(e.to_string()))
}

/// `# pegasus-topo v1 X=<X> Y=<Y> Z=<Z>`
fn parse_v1_header(line: &str) -> Option<Dims> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 6 || fields[0] != "#" || fields[1] != "pegasus-topo" || fields[2] != "v1" {
        return None;
    }
    let x = fields[3].strip_prefix("X=")?.parse().ok()?;
    let y = fields[4].strip_prefix("Y=")?.parse().ok()?;
    let z = fields[5].strip_prefix("Z=")?.parse().ok()?;
    Dims::new(x, y, z).ok()
}

fn parse_kv_dims(text: &str) -> Option<Dims> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 3 {
        return None;
    }
    let x = fields[0].strip_prefix("X=")?.parse().ok()?;
    let y = fields[1].strip_prefix("Y=")?.parse().ok()?;
    let z = fields[2].strip_prefix("Z=")?.parse().ok()?;
    Dims::new(x, y, z).ok()
}

/// Parses the DOT subset produced by the DOT exporter.
pub fn parse_dot(text: &str) -> Result<TopologyGraph, FormatError> {
    let mut dims = None;
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("// pegasus-topo v1 ") {
            dims = parse_kv_dims(rest);
            continue;
        }
        if !line.contains("--") {
            continue;
        }
        let dims = dims.ok_or(FormatError::BadHeader)?;
        let (lhs, rhs) = line.split_once("--").ok_or(FormatError::Malformed {
            line: line_no,
            message: "missing `--`".into(),
        })?;
        let a: usize = lhs.trim().parse().map_err(|_| FormatError::Malformed {
            line: line_no,
            message: format!("bad index `{}`", lhs.trim()),
        })?;
        let (b_text, attr) = rhs.split_once('[').ok_or(FormatError::Malformed {
            line: line_no,
            message: "missing attribute list".into(),
        })?;
        let b: usize = b_text.trim().parse().map_err(|_| FormatError::Malformed {
            line: line_no,
            message: format!("bad index `{}`", b_text.trim()),
        })?;
        let class = attr
            .split_once("class=\"")
            .and_then(|(_, rest)| rest.split_once('"'))
            .map(|(token, _)| token)
            .ok_or(FormatError::Malformed {
                line: line_no,
                message: "missing class attribute".into(),
            })?;
        edges.push(build_edge(dims, a, b, class, line_no)?);
    }
    let dims = dims.ok_or(FormatError::BadHeader)?;
    TopologyGraph::from_edges(dims, edges).map_err(|e| FormatError::Invalid(e.to_string()))
}

/// Parses the GraphML subset produced by the GraphML exporter.
pub fn parse_graphml(text: &str) -> Result<TopologyGraph, FormatError> {
    let mut dims = None;
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("<data key=\"dims\">") {
            let body = rest.split_once("</data>").map(|(b, _)| b).unwrap_or(rest);
            dims = parse_kv_dims(body);
            continue;
        }
        if !line.starts_with("<edge ") {
            continue;
        }
        let dims = dims.ok_or(FormatError::BadHeader)?;
        let a = xml_attr(line, "source")
            .and_then(|v| v.strip_prefix('n').map(str::to_string))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or(FormatError::Malformed {
                line: line_no,
                message: "bad source attribute".into(),
            })?;
        let b = xml_attr(line, "target")
            .and_then(|v| v.strip_prefix('n').map(str::to_string))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or(FormatError::Malformed {
                line: line_no,
                message: "bad target attribute".into(),
            })?;
        let class = line
            .split_once("<data key=\"class\">")
            .and_then(|(_, rest)| rest.split_once("</data>"))
            .map(|(token, _)| token)
            .ok_or(FormatError::Malformed {
                line: line_no,
                message: "missing class data".into(),
            })?;
        edges.push(build_edge(dims, a, b, class, line_no)?);
    }
    let dims = dims.ok_or(FormatError::BadHeader)?;
    TopologyGraph::from_edges(dims, edges).map_err(|e| FormatError::Invalid(e.to_string()))
}

fn xml_attr<'a>(line: &'a str, name: &str) -> Option<&'a str> {
    let marker = format!("{name}=\"");
    let (_, rest) = line.split_once(&marker)?;
    rest.split_once('"').map(|(value, _)| value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_yields_an_empty_graph() {
        let g = parse_edgelist("# pegasus-topo v1 X=2 Y=2 Z=3\n").unwrap();
        assert_eq!(g.vertex_count(), 96);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn corrupted_headers_are_rejected() {
        assert!(matches!(
            parse_edgelist("# pegasus-topo v2 X=2 Y=2 Z=3\n"),
            Err(FormatError::BadHeader)
        ));
        assert!(matches!(
            parse_edgelist("0 1 chimera-intra\n"),
            Err(FormatError::BadHeader)
        ));
        assert!(matches!(
            parse_edgelist("# pegasus-topo v1 X=2 Y=2 Z=2\n"),
            Err(FormatError::BadHeader)
        ));
    }

    #[test]
    fn malformed_lines_carry_their_line_number() {
        let err = parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 4 chimera-intra\n0 four\n")
            .unwrap_err();
        match err {
            FormatError::Malformed { line, .. } => assert_eq!(line, 3),
            other => panic!("expected Malformed, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_indices_are_validation_errors() {
        let err = parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 8 chimera-intra\n").unwrap_err();
        match err {
            FormatError::Topology { line, .. } => assert_eq!(line, 2),
            other => panic!("expected Topology, got {other:?}"),
        }
    }

    #[test]
    fn unknown_classes_are_rejected() {
        let err =
            parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 4 mystery-coupler\n").unwrap_err();
        assert!(err.to_string().contains("mystery-coupler"));
    }

    #[test]
    fn sniffing_recognizes_all_four_formats() {
        assert_eq!(sniff("# pegasus-topo v1"), Some(DocumentKind::EdgeList));
        assert_eq!(sniff("{\"schema\":"), Some(DocumentKind::Json));
        assert_eq!(sniff("graph topology {"), Some(DocumentKind::Dot));
        assert_eq!(sniff("<?xml version"), Some(DocumentKind::GraphMl));
        assert_eq!(sniff("plain text"), None);
    }
}
