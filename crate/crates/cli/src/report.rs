//! The `analyze` JSON report (schema `analyze/1`).
//!
//! The base report carries the dimensions, vertex/edge totals, and per-class
//! edge counts. Optional sections add the degree histogram, the cell-level
//! compressed graph (which `render --style compressed` consumes), a
//! non-planarity certificate, and enumerated 4-cliques.

use crate::export::DimsDoc;
use pegasus_topo_core::analysis::{
    compress, degree_histogram, find_k4, nonplanarity_certificate, CompressedEdge,
    CompressedEdgeClass, CompressedGraph, NonplanarityCertificate, PlanarityVerdict,
};
use pegasus_topo_core::{CellCoord, ColorGroup, Dims, TopologyGraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub(crate) const REPORT_SCHEMA: &str = "analyze/1";

#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub schema: String,
    pub dims: DimsDoc,
    pub vertices: usize,
    pub edges: usize,
    pub edge_classes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<DegreeSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub compress: Option<CompressSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub planarity: Option<PlanaritySection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k4: Option<K4Section>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DegreeSection {
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CompressSection {
    pub vertices: usize,
    pub grid_edges: usize,
    pub bundle_pairs: usize,
    pub doubled_pairs: usize,
    pub edges: Vec<CompressedEdgeDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CompressedEdgeDoc {
    pub a: [u32; 3],
    pub b: [u32; 3],
    pub class: String,
    pub multiplicity: u32,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub groups: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PlanaritySection {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateDoc {
    EdgeBound {
        vertices: usize,
        edges: usize,
        bound: usize,
    },
    KuratowskiSubdivision {
        pattern: String,
        branch_vertices: Vec<u32>,
        paths: Vec<Vec<u32>>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct K4Section {
    pub limit: usize,
    pub count: usize,
    pub cliques: Vec<[usize; 4]>,
}

/// Which optional sections to compute.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub degrees: bool,
    pub compress: bool,
    pub planarity: bool,
    pub find_k4: Option<usize>,
}

/// Builds the report. With `compress` set, the planarity certificate (when
/// requested) applies to the compressed cell-level graph; otherwise it
/// applies to the input graph itself.
pub fn build_report(g: &TopologyGraph, options: AnalyzeOptions) -> AnalyzeReport {
    let dims = g.dims();
    let mut report = AnalyzeReport {
        schema: REPORT_SCHEMA.to_string(),
        dims: DimsDoc {
            x: dims.x(),
            y: dims.y(),
            z: dims.z(),
        },
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        edge_classes: g
            .class_counts()
            .into_iter()
            .map(|(class, count)| (class.token().to_string(), count))
            .collect(),
        degrees: None,
        compress: None,
        planarity: None,
        k4: None,
    };
    if options.degrees {
        let histogram = degree_histogram(g);
        report.degrees = Some(DegreeSection {
            min: histogram.keys().next().copied().unwrap_or(0),
            max: histogram.keys().next_back().copied().unwrap_or(0),
            histogram,
        });
    }
    let compressed = (options.compress || options.planarity).then(|| compress(g));
    if options.compress {
        let c = compressed.as_ref().expect("computed above");
        report.compress = Some(compress_section(c));
    }
    if options.planarity {
        let verdict = if options.compress {
            nonplanarity_certificate(&compressed.as_ref().expect("computed above").to_simple())
        } else {
            nonplanarity_certificate(&g.to_simple())
        };
        report.planarity = Some(planarity_section(verdict));
    }
    if let Some(limit) = options.find_k4 {
        let cliques: Vec<[usize; 4]> = find_k4(g, limit)
            .into_iter()
            .map(|clique| clique.map(|q| q.linear_index(dims).expect("clique members are valid")))
            .collect();
        report.k4 = Some(K4Section {
            limit,
            count: cliques.len(),
            cliques,
        });
    }
    report
}

fn compress_section(c: &CompressedGraph) -> CompressSection {
    let grid_edges = c
        .edges()
        .iter()
        .filter(|e| e.class() == CompressedEdgeClass::GridSameLayer)
        .count();
    let bundles: Vec<_> = c
        .edges()
        .iter()
        .filter(|e| e.class() == CompressedEdgeClass::InterLayerBundle)
        .collect();
    CompressSection {
        vertices: c.vertex_count(),
        grid_edges,
        bundle_pairs: bundles.len(),
        doubled_pairs: bundles.iter().filter(|e| e.multiplicity() == 2).count(),
        edges: c.edges().iter().map(compressed_edge_doc).collect(),
    }
}

fn compressed_edge_doc(e: &CompressedEdge) -> CompressedEdgeDoc {
    CompressedEdgeDoc {
        a: [e.a().x, e.a().y, e.a().z],
        b: [e.b().x, e.b().y, e.b().z],
        class: match e.class() {
            CompressedEdgeClass::GridSameLayer => "grid".to_string(),
            CompressedEdgeClass::InterLayerBundle => "bundle".to_string(),
        },
        multiplicity: e.multiplicity(),
        groups: e.groups().iter().map(|g| g.name().to_string()).collect(),
    }
}

fn planarity_section(verdict: PlanarityVerdict) -> PlanaritySection {
    match verdict {
        PlanarityVerdict::Unknown => PlanaritySection {
            verdict: "unknown".to_string(),
            certificate: None,
        },
        PlanarityVerdict::NonPlanar(certificate) => PlanaritySection {
            verdict: "non-planar".to_string(),
            certificate: Some(match certificate {
                NonplanarityCertificate::EdgeBound {
                    vertex_count,
                    edge_count,
                    bound,
                } => CertificateDoc::EdgeBound {
                    vertices: vertex_count,
                    edges: edge_count,
                    bound,
                },
                NonplanarityCertificate::KuratowskiSubdivision(w) => {
                    CertificateDoc::KuratowskiSubdivision {
                        pattern: match w.kind {
                            pegasus_topo_core::analysis::KuratowskiKind::K5 => "K5".to_string(),
                            pegasus_topo_core::analysis::KuratowskiKind::K33 => "K3,3".to_string(),
                        },
                        branch_vertices: w.branch_vertices,
                        paths: w.paths,
                    }
                }
            }),
        },
    }
}

/// Rebuilds the compressed cell-level graph embedded in a report, for
/// rendering.
pub fn compressed_graph_from_report(report: &AnalyzeReport) -> Result<CompressedGraph, String> {
    let section = report
        .compress
        .as_ref()
        .ok_or("report has no compress section (analyze with --compress)")?;
    let dims = Dims::new(report.dims.x, report.dims.y, report.dims.z)
        .map_err(|e| e.to_string())?;
    let mut edges = Vec::with_capacity(section.edges.len());
    for doc in &section.edges {
        let class = match doc.class.as_str() {
            "grid" => CompressedEdgeClass::GridSameLayer,
            "bundle" => CompressedEdgeClass::InterLayerBundle,
            other => return Err(format!("unknown compressed edge class `{other}`")),
        };
        let groups = doc
            .groups
            .iter()
            .map(|name| match name.as_str() {
                "blue" => Ok(ColorGroup::Blue),
                "red" => Ok(ColorGroup::Red),
                "green" => Ok(ColorGroup::Green),
                "orange" => Ok(ColorGroup::Orange),
                other => Err(format!("unknown color group `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(CompressedEdge::new(
            CellCoord::new(doc.a[0], doc.a[1], doc.a[2]),
            CellCoord::new(doc.b[0], doc.b[1], doc.b[2]),
            class,
            doc.multiplicity,
            groups,
        ));
    }
    CompressedGraph::from_parts(dims, edges).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pegasus_topo_core::pegasus::pegasus_graph;

    #[test]
    fn compressed_graph_survives_the_report_round_trip() {
        let g = pegasus_graph(Dims::pegasus(2, 2).unwrap()).unwrap();
        let report = build_report(
            &g,
            AnalyzeOptions {
                compress: true,
                ..Default::default()
            },
        );
        let text = serde_json::to_string_pretty(&report).unwrap();
        let parsed: AnalyzeReport = serde_json::from_str(&text).unwrap();
        let rebuilt = compressed_graph_from_report(&parsed).unwrap();
        assert_eq!(rebuilt, compress(&g));
    }

    #[test]
    fn reports_without_compression_cannot_feed_the_renderer() {
        let g = pegasus_graph(Dims::pegasus(1, 1).unwrap()).unwrap();
        let report = build_report(&g, AnalyzeOptions::default());
        assert!(compressed_graph_from_report(&report).is_err());
    }
}
