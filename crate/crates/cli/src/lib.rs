//! IO companion for `pegasus-topo-core`: interchange formats, SVG
//! rendering, concurrent generation, analysis reports, and the
//! `pegasus-topo` command-line tool.

pub mod cli;
pub mod export;
pub mod parallel;
pub mod parse;
pub mod render;
pub mod report;

pub use export::{export, ExportFormat};
pub use parse::{parse_auto, sniff, DocumentKind, FormatError, ParsedDocument};
pub use render::{render_svg, ColorMode, RenderError, RenderInput, RenderSpec, Style};
pub use report::AnalyzeReport;
