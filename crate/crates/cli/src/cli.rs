//! Command-line interface: argument parsing, dispatch, and exit codes.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O or input
//! data error.

use crate::export::{export, ExportFormat};
use crate::parallel::{chimera_graph_par, pegasus_graph_par};
use crate::parse::{parse_auto, FormatError, ParsedDocument};
use crate::render::{render_svg, ColorMode, RenderError, RenderInput, RenderSpec, Style};
use crate::report::{build_report, compressed_graph_from_report, AnalyzeOptions};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use pegasus_topo_core::{pegasus, Dims, TopologyGraph};
use std::ffi::OsString;
use std::io::{Read, Write};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "pegasus-topo",
    version,
    about = "Generate, analyze, check, convert, and render annealer topology graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a topology graph and export it.
    Generate(GenerateArgs),
    /// Compute structural analytics over an exported graph.
    Analyze(AnalyzeArgs),
    /// Verify that the two inter-layer rule formulations agree.
    CheckRules(CheckRulesArgs),
    /// Render an exported graph (or compressed report) as SVG.
    Render(RenderArgs),
    /// Convert between export formats.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphKind {
    Chimera,
    Pegasus,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dot,
    Graphml,
    Json,
}

impl From<FormatArg> for ExportFormat {
    fn from(arg: FormatArg) -> ExportFormat {
        match arg {
            FormatArg::Edgelist => ExportFormat::EdgeListV1,
            FormatArg::Dot => ExportFormat::Dot,
            FormatArg::Graphml => ExportFormat::GraphMl,
            FormatArg::Json => ExportFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum StyleArg {
    Classic,
    Diamond,
    Triangle,
    Compressed,
}

impl From<StyleArg> for Style {
    fn from(arg: StyleArg) -> Style {
        match arg {
            StyleArg::Classic => Style::TiltedClassic,
            StyleArg::Diamond => Style::Diamond,
            StyleArg::Triangle => Style::Triangle,
            StyleArg::Compressed => Style::Compressed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ColorsArg {
    Mono,
    Class,
    Group,
}

impl From<ColorsArg> for ColorMode {
    fn from(arg: ColorsArg) -> ColorMode {
        match arg {
            ColorsArg::Mono => ColorMode::Monochrome,
            ColorsArg::Class => ColorMode::ByEdgeClass,
            ColorsArg::Group => ColorMode::ByColorGroup,
        }
    }
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Graph family to generate.
    #[arg(long, value_enum)]
    pub graph: GraphKind,
    /// Cells per row.
    #[arg(long)]
    pub x: u32,
    /// Cells per column.
    #[arg(long)]
    pub y: u32,
    /// Layer count; defaults to 1 for chimera and 3 for pegasus.
    #[arg(long)]
    pub z: Option<u32>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
    /// Output path (`-` for stdout).
    #[arg(long)]
    pub out: String,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Input graph file (`-` for stdin).
    #[arg(long = "in")]
    pub input: String,
    /// Include the degree histogram.
    #[arg(long)]
    pub degrees: bool,
    /// Include the cell-level compressed graph.
    #[arg(long)]
    pub compress: bool,
    /// Include a non-planarity certificate (of the compressed graph when
    /// --compress is also given, of the input graph otherwise).
    #[arg(long)]
    pub planarity: bool,
    /// Enumerate up to LIMIT 4-cliques.
    #[arg(long = "find-k4", value_name = "LIMIT")]
    pub find_k4: Option<usize>,
    /// Report path (`-` for stdout).
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Args)]
pub struct CheckRulesArgs {
    #[arg(long)]
    pub x: u32,
    #[arg(long)]
    pub y: u32,
}

#[derive(Args)]
pub struct RenderArgs {
    /// Input file: a graph export, or for --style compressed an analyze
    /// report produced with --compress (`-` for stdin).
    #[arg(long = "in")]
    pub input: String,
    #[arg(long, value_enum)]
    pub style: StyleArg,
    /// Shear the lattice.
    #[arg(long)]
    pub tilted: bool,
    #[arg(long, value_enum, default_value = "group")]
    pub colors: ColorsArg,
    /// Draw dropped boundary couplers as stubs.
    #[arg(long)]
    pub stubs: bool,
    /// Output path (`-` for stdout).
    #[arg(long)]
    pub out: String,
}

#[derive(Args)]
pub struct ConvertArgs {
    /// Input graph file (`-` for stdin).
    #[arg(long = "in")]
    pub input: String,
    #[arg(long, value_enum)]
    pub format: FormatArg,
    /// Output path (`-` for stdout).
    #[arg(long)]
    pub out: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("`{path}`: {source}")]
    Parse { path: String, source: FormatError },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::CheckFailed(_) => 1,
            CliError::Read { .. } | CliError::Write { .. } | CliError::Parse { .. } => 3,
        }
    }
}

/// Parses `argv` and runs the selected command, returning the process exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate(args) => generate(args),
        Command::Analyze(args) => analyze(args),
        Command::CheckRules(args) => check_rules(args),
        Command::Render(args) => render(args),
        Command::Convert(args) => convert(args),
    }
}

fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let graph = build_graph(args.graph, args.x, args.y, args.z)?;
    write_output(&args.out, &export(&graph, args.format.into()))
}

fn build_graph(
    kind: GraphKind,
    x: u32,
    y: u32,
    z: Option<u32>,
) -> Result<TopologyGraph, CliError> {
    match kind {
        GraphKind::Chimera => {
            let z = z.unwrap_or(1);
            let dims = Dims::new(x, y, z).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(chimera_graph_par(dims))
        }
        GraphKind::Pegasus => {
            let z = z.unwrap_or(3);
            if z != 3 {
                return Err(CliError::Usage(format!(
                    "--graph pegasus requires three layers (got --z {z})"
                )));
            }
            let dims = Dims::new(x, y, z).map_err(|e| CliError::Usage(e.to_string()))?;
            pegasus_graph_par(dims).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.input)?;
    let report = build_report(
        &graph,
        AnalyzeOptions {
            degrees: args.degrees,
            compress: args.compress,
            planarity: args.planarity,
            find_k4: args.find_k4,
        },
    );
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    write_output(&args.out, &text)
}

fn check_rules(args: CheckRulesArgs) -> Result<(), CliError> {
    let dims =
        Dims::pegasus(args.x, args.y).map_err(|e| CliError::Usage(e.to_string()))?;
    let outcome = pegasus::rules_equivalent(dims).map_err(|e| CliError::Usage(e.to_string()))?;
    if outcome.is_equivalent() {
        let edges = pegasus::interlayer_edges_grouped(dims)
            .expect("dims were validated")
            .len();
        println!(
            "rule formulations agree for X={} Y={}: {} inter-layer edges",
            args.x, args.y, edges
        );
        Ok(())
    } else {
        for edge in &outcome.only_general {
            println!("only-general {edge}");
        }
        for edge in &outcome.only_grouped {
            println!("only-grouped {edge}");
        }
        Err(CliError::CheckFailed(format!(
            "rule formulations disagree for X={} Y={}: {} edges only in the general form, {} only in the grouped form",
            args.x,
            args.y,
            outcome.only_general.len(),
            outcome.only_grouped.len()
        )))
    }
}

fn render(args: RenderArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let document = parse_auto(&text).map_err(|source| CliError::Parse {
        path: args.input.clone(),
        source,
    })?;
    let style: Style = args.style.into();
    let mut spec = RenderSpec::new(style);
    spec.tilted_lattice = args.tilted;
    spec.color_mode = args.colors.into();
    spec.show_boundary_stubs = args.stubs;
    let svg = match (&document, style) {
        (ParsedDocument::Graph(graph), _) => render_svg(RenderInput::Full(graph), &spec),
        (ParsedDocument::Report(report), Style::Compressed) => {
            let compressed =
                compressed_graph_from_report(report).map_err(CliError::Usage)?;
            render_svg(RenderInput::Compressed(&compressed), &spec)
        }
        (ParsedDocument::Report(_), _) => {
            return Err(CliError::Usage(format!(
                "style `{}` requires a graph export, not an analyze report",
                style.name()
            )));
        }
    };
    let svg = svg.map_err(|e| match e {
        RenderError::NeedsCompressedGraph => CliError::Usage(
            "style `compressed` requires a compressed graph; analyze the export with \
             --compress and render the report"
                .to_string(),
        ),
        other => CliError::Usage(other.to_string()),
    })?;
    write_output(&args.out, &svg)
}

fn convert(args: ConvertArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.input)?;
    write_output(&args.out, &export(&graph, args.format.into()))
}

fn read_graph(path: &str) -> Result<TopologyGraph, CliError> {
    let text = read_input(path)?;
    match parse_auto(&text).map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })? {
        ParsedDocument::Graph(graph) => Ok(graph),
        ParsedDocument::Report(_) => Err(CliError::Usage(format!(
            "`{path}` is an analyze report; expected a graph export"
        ))),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let wrap = |source| CliError::Read {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(wrap)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(wrap)
    }
}

fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    let wrap = |source| CliError::Write {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(wrap)?;
        Ok(())
    } else {
        std::fs::write(path, text).map_err(wrap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pegasus_rejects_single_layer_requests() {
        let err = build_graph(GraphKind::Pegasus, 2, 2, Some(1)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn chimera_accepts_three_layers() {
        let g = build_graph(GraphKind::Chimera, 2, 2, Some(3)).unwrap();
        assert_eq!(g.vertex_count(), 96);
    }

    #[test]
    fn chimera_rejects_other_layer_counts() {
        assert!(build_graph(GraphKind::Chimera, 2, 2, Some(2)).is_err());
        assert!(build_graph(GraphKind::Chimera, 0, 2, None).is_err());
    }
}
