//! End-to-end tests of every subcommand against the checked-in golden
//! outputs.
//!
//! `pegasus-2x2.edgelist` was produced by the brute-force enumerator; the
//! remaining goldens are regression anchors whose content is independently
//! validated by the round-trip and oracle tests. Run with `UPDATE_GOLDEN=1`
//! to regenerate the implementation-defined goldens (the edge-list golden
//! always regenerates from the enumerator).

use assert_cmd::Command;
use std::fs;
use std::path::PathBuf;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pegasus-topo"))
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn golden(name: &str) -> String {
    fs::read_to_string(golden_path(name)).expect("golden file exists")
}

fn stdout_of(args: &[&str]) -> String {
    let output = bin().args(args).output().expect("binary runs");
    assert!(
        output.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("utf-8 output")
}

#[test]
fn help_exits_zero() {
    bin().arg("--help").assert().success();
}

#[test]
fn unknown_flags_exit_2_with_usage_on_stderr() {
    let output = bin()
        .args(["generate", "--graph", "chimera", "--x", "2", "--y", "2", "--frobnicate"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("Usage"), "no usage text: {stderr}");
}

#[test]
fn bad_flag_values_exit_2() {
    bin()
        .args(["generate", "--graph", "hexagon", "--x", "2", "--y", "2", "--out", "-"])
        .assert()
        .code(2);
    bin()
        .args(["generate", "--graph", "chimera", "--x", "0", "--y", "2", "--out", "-"])
        .assert()
        .code(2);
    bin()
        .args(["generate", "--graph", "pegasus", "--x", "2", "--y", "2", "--z", "1", "--out", "-"])
        .assert()
        .code(2);
}

#[test]
fn missing_input_exits_3() {
    bin()
        .args(["analyze", "--in", "/nonexistent/graph.edgelist"])
        .assert()
        .code(3);
}

#[test]
fn corrupt_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.edgelist");
    fs::write(&path, "# pegasus-topo v1 X=1 Y=1 Z=1\n0 99 chimera-intra\n").unwrap();
    let output = bin()
        .args(["analyze", "--in", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("bad.edgelist"), "no path context: {stderr}");
}

#[test]
fn generate_matches_the_enumerator_golden() {
    let text = stdout_of(&[
        "generate", "--graph", "pegasus", "--x", "2", "--y", "2", "--format", "edgelist",
        "--out", "-",
    ]);
    assert_eq!(text, golden("pegasus-2x2.edgelist"));
}

#[test]
fn generate_golden_bytes_per_format() {
    for (format, file) in [
        ("json", "pegasus-2x2.json"),
        ("dot", "pegasus-2x2.dot"),
        ("graphml", "pegasus-2x2.graphml"),
    ] {
        let text = stdout_of(&[
            "generate", "--graph", "pegasus", "--x", "2", "--y", "2", "--format", format,
            "--out", "-",
        ]);
        maybe_update(file, &text);
        assert_eq!(text, golden(file), "{format}");
    }
}

#[test]
fn generate_is_byte_stable_across_thread_counts() {
    let reference = golden("pegasus-2x2.edgelist");
    for threads in ["1", "2", "8"] {
        let output = bin()
            .env("RAYON_NUM_THREADS", threads)
            .args([
                "generate", "--graph", "pegasus", "--x", "2", "--y", "2", "--format",
                "edgelist", "--out", "-",
            ])
            .output()
            .unwrap();
        assert!(output.status.success());
        assert_eq!(
            String::from_utf8(output.stdout).unwrap(),
            reference,
            "{threads} threads"
        );
    }
}

#[test]
fn analyze_report_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("pegasus.edgelist");
    fs::write(&graph, golden("pegasus-2x2.edgelist")).unwrap();
    let text = stdout_of(&[
        "analyze", "--in", graph.to_str().unwrap(), "--degrees", "--compress",
        "--planarity", "--find-k4", "8",
    ]);
    maybe_update("analyze-pegasus-2x2.json", &text);
    assert_eq!(text, golden("analyze-pegasus-2x2.json"));
}

#[test]
fn table_sized_chimera_reports_2048_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("chimera.edgelist");
    bin()
        .args([
            "generate", "--graph", "chimera", "--x", "16", "--y", "16", "--z", "1",
            "--format", "edgelist", "--out", graph.to_str().unwrap(),
        ])
        .assert()
        .success();
    let text = stdout_of(&["analyze", "--in", graph.to_str().unwrap(), "--degrees"]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["schema"], "analyze/1");
    assert_eq!(report["vertices"], 2048);
}

#[test]
fn check_rules_passes_at_5x5() {
    let text = stdout_of(&["check-rules", "--x", "5", "--y", "5"]);
    assert!(text.contains("rule formulations agree"), "{text}");
}

#[test]
fn check_rules_rejects_bad_dims() {
    bin()
        .args(["check-rules", "--x", "0", "--y", "5"])
        .assert()
        .code(2);
}

#[test]
fn render_golden_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("chimera.edgelist");
    bin()
        .args([
            "generate", "--graph", "chimera", "--x", "5", "--y", "5", "--format",
            "edgelist", "--out", graph.to_str().unwrap(),
        ])
        .assert()
        .success();
    let text = stdout_of(&[
        "render", "--in", graph.to_str().unwrap(), "--style", "classic", "--out", "-",
    ]);
    maybe_update("chimera-5x5-classic.svg", &text);
    assert_eq!(text, golden("chimera-5x5-classic.svg"));
}

#[test]
fn render_compressed_requires_a_compressed_input() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("pegasus.edgelist");
    fs::write(&graph, golden("pegasus-2x2.edgelist")).unwrap();
    bin()
        .args([
            "render", "--in", graph.to_str().unwrap(), "--style", "compressed", "--out", "-",
        ])
        .assert()
        .code(2);
}

#[test]
fn compressed_rendering_works_through_the_analyze_report() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("pegasus.edgelist");
    let report = dir.path().join("report.json");
    fs::write(&graph, golden("pegasus-2x2.edgelist")).unwrap();
    bin()
        .args([
            "analyze", "--in", graph.to_str().unwrap(), "--compress", "--out",
            report.to_str().unwrap(),
        ])
        .assert()
        .success();
    let svg = stdout_of(&[
        "render", "--in", report.to_str().unwrap(), "--style", "compressed", "--out", "-",
    ]);
    assert_eq!(svg.matches("<circle ").count(), 12);
    assert_eq!(svg.matches("<line ").count(), 12 + 21);
    // A report is not a graph: full styles reject it.
    bin()
        .args([
            "render", "--in", report.to_str().unwrap(), "--style", "diamond", "--out", "-",
        ])
        .assert()
        .code(2);
}

#[test]
fn convert_round_trips_through_every_format() {
    let dir = tempfile::tempdir().unwrap();
    let edgelist = dir.path().join("graph.edgelist");
    fs::write(&edgelist, golden("pegasus-2x2.edgelist")).unwrap();
    for (format, ext) in [("json", "json"), ("dot", "dot"), ("graphml", "graphml")] {
        let converted = dir.path().join(format!("graph.{ext}"));
        bin()
            .args([
                "convert", "--in", edgelist.to_str().unwrap(), "--format", format, "--out",
                converted.to_str().unwrap(),
            ])
            .assert()
            .success();
        let back = bin()
            .args([
                "convert", "--in", converted.to_str().unwrap(), "--format", "edgelist", "--out", "-",
            ])
            .output()
            .unwrap();
        assert!(back.status.success(), "{format}");
        assert_eq!(
            String::from_utf8(back.stdout).unwrap(),
            golden("pegasus-2x2.edgelist"),
            "{format}"
        );
    }
}

#[test]
fn stdin_and_stdout_work_as_dash_paths() {
    let output = bin()
        .args(["analyze", "--in", "-"])
        .write_stdin(golden("pegasus-2x2.edgelist"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("json report on stdout");
    assert_eq!(report["vertices"], 96);
    assert_eq!(report["edges"], 528);
}

fn maybe_update(name: &str, text: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(golden_path(name), text).expect("golden file written");
    }
}
