//! The analyze and report commands: program loading, artifact writing, exit
//! codes.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use jsclass_core::ast::Program;
use jsclass_core::detect;
use jsclass_core::diag::{DiagCode, Diagnostic, Severity};
use jsclass_core::estree::ingest_estree_json;
use jsclass_core::metrics::compute_metrics;
use jsclass_core::parser::parse_source;
use jsclass_core::report::{
    build_doc, emit_distribution_map, emit_metrics_table, emit_model_json, emit_uml_dot,
    parse_model_json, DistMapSpec, ModelDoc, ModelJsonError, TableFormat, SCHEMA_VERSION,
};

use crate::walking::{collect_inputs, InputFile, InputKind, InputMode, WalkOptions};

/// Stack size for the analysis worker thread. Deep expression nests in
/// real-world (often minified) JavaScript exceed default stacks during
/// recursive parsing and traversal.
const ANALYSIS_STACK: usize = 64 * 1024 * 1024;

/// Command failure with its documented exit code: usage errors exit 1,
/// analysis errors exit 2, I/O failures exit 3.
#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: unknown flag values, bad root, empty input.
    Usage(String),
    /// The analysis or the stored model is unusable.
    Analysis(String),
    /// Filesystem failure while reading inputs or writing artifacts.
    Io(String),
}

impl CliError {
    /// The documented exit code for this failure class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Analysis(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Analysis(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

/// Artifacts the analyze command can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Artifact {
    /// Canonical model document, `model.json`.
    Model,
    /// UML class diagram, `classes.dot`.
    Uml,
    /// Distribution map, `distmap.svg`.
    Distmap,
    /// Metric table, `metrics.csv`.
    Metrics,
}

impl Artifact {
    /// Output file name under the artifact directory.
    pub fn file_name(self) -> &'static str {
        match self {
            Artifact::Model => "model.json",
            Artifact::Uml => "classes.dot",
            Artifact::Distmap => "distmap.svg",
            Artifact::Metrics => "metrics.csv",
        }
    }
}

/// Everything one analyze run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Directory to analyze.
    pub root: PathBuf,
    /// File interpretation mode.
    pub mode: InputMode,
    /// Artifact output directory.
    pub out_dir: PathBuf,
    /// Artifacts to write; never empty.
    pub emit: BTreeSet<Artifact>,
    /// Distribution-map rendering parameters.
    pub distmap: DistMapSpec,
    /// Exit 2 when any error-severity diagnostic was produced.
    pub strict: bool,
    /// Optional application name stored in the model.
    pub name: Option<String>,
}

/// Loads every input into one [`Program`]. Unreadable or unparsable files
/// become error-severity `file_skipped` diagnostics and the analysis
/// continues without them. Returns the assembled program and the file-stage
/// diagnostics (skips first, then per-file parse warnings, in input order).
pub fn load_program(inputs: &[InputFile]) -> (Program, Vec<Diagnostic>) {
    let mut files = Vec::new();
    let mut diagnostics = Vec::new();
    for input in inputs {
        let text = match fs::read_to_string(&input.path) {
            Ok(t) => t,
            Err(e) => {
                diagnostics.push(
                    Diagnostic::new(
                        Severity::Error,
                        DiagCode::FileSkipped,
                        format!("skipped unreadable file: {}", e),
                    )
                    .with_file(&input.rel),
                );
                continue;
            }
        };
        match input.kind {
            InputKind::Js => match parse_source(&text, &input.rel) {
                Ok((file, mut file_diags)) => {
                    log::debug!("parsed {}", input.rel);
                    files.push(file);
                    diagnostics.append(&mut file_diags);
                }
                Err(e) => {
                    diagnostics.push(
                        Diagnostic::new(
                            Severity::Error,
                            DiagCode::FileSkipped,
                            format!("skipped file that failed to parse: {}", e),
                        )
                        .with_file(&input.rel)
                        .with_span(e.span),
                    );
                }
            },
            InputKind::EstreeJson => match ingest_estree_json(&text, &input.rel) {
                Ok((file, stats)) => {
                    log::debug!(
                        "ingested {} ({} nodes, {} opaque)",
                        input.rel,
                        stats.nodes_loaded,
                        stats.opaque_nodes
                    );
                    files.push(file);
                }
                Err(e) => {
                    diagnostics.push(
                        Diagnostic::new(
                            Severity::Error,
                            DiagCode::FileSkipped,
                            format!("skipped file that failed to ingest: {}", e),
                        )
                        .with_file(&input.rel),
                    );
                }
            },
        }
    }
    (Program::assemble(files), diagnostics)
}

/// Walks `root`, loads and analyzes everything, and returns the canonical
/// model document. This is the analyze command minus artifact writing;
/// integration tests drive it directly.
pub fn analyze_tree(
    root: &Path,
    mode: InputMode,
    out_dir: Option<&Path>,
    name: Option<&str>,
) -> Result<ModelDoc, CliError> {
    if !root.is_dir() {
        return Err(CliError::Usage(format!(
            "bad_root: {} is not a readable directory",
            root.display()
        )));
    }
    let opts = WalkOptions {
        exclude_dir: out_dir.map(Path::to_path_buf),
        ..WalkOptions::default()
    };
    let inputs = collect_inputs(root, mode, &opts)
        .map_err(|e| CliError::Io(format!("walking {} failed: {}", root.display(), e)))?;
    if inputs.is_empty() {
        return Err(CliError::Usage(format!(
            "empty_input: no analyzable files under {}",
            root.display()
        )));
    }
    let name = name.map(str::to_owned);
    let doc = with_analysis_stack(move || {
        let (program, file_diags) = load_program(&inputs);
        let mut model = detect::detect(&program);
        let mut diagnostics = file_diags;
        diagnostics.append(&mut model.diagnostics);
        model.diagnostics = diagnostics;
        let metrics = compute_metrics(&model, &program);
        build_doc(&model, &metrics, name.as_deref())
    });
    Ok(doc)
}

/// Runs `f` on a worker thread with a stack sized for deep recursion.
fn with_analysis_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .name("analysis".into())
        .stack_size(ANALYSIS_STACK)
        .spawn(f)
        .expect("spawn analysis thread")
        .join()
        .expect("analysis thread panicked")
}

/// Validates a distribution-map metric name before rendering.
fn check_distmap_metric(spec: &DistMapSpec) -> Result<(), CliError> {
    match spec.metric.as_str() {
        "nom" | "noa" | "children" | "dit" => Ok(()),
        other => Err(CliError::Usage(format!(
            "bad_metric: unknown distribution-map metric '{}' (expected nom, noa, children, or dit)",
            other
        ))),
    }
}

/// Writes `content` to `dir/name` atomically (temp file + rename).
fn atomic_write(dir: &Path, name: &str, content: &str) -> Result<(), CliError> {
    let tmp = dir.join(format!(".{}.tmp", name));
    let io_err = |what: &str, e: std::io::Error| {
        CliError::Io(format!(
            "{} {} failed: {}",
            what,
            dir.join(name).display(),
            e
        ))
    };
    fs::write(&tmp, content).map_err(|e| io_err("writing", e))?;
    fs::rename(&tmp, dir.join(name)).map_err(|e| io_err("renaming into", e))
}

/// Forwards a model diagnostic to the log at its own severity.
fn log_diagnostics(doc: &ModelDoc) {
    for d in &doc.diagnostics {
        let place = match (&d.file, d.line) {
            (Some(f), Some(l)) => format!("{}:{}: ", f, l),
            (Some(f), None) => format!("{}: ", f),
            _ => String::new(),
        };
        match d.severity.as_str() {
            "error" => log::error!("{}{} [{}]", place, d.message, d.code),
            "warning" => log::warn!("{}{} [{}]", place, d.message, d.code),
            _ => log::info!("{}{} [{}]", place, d.message, d.code),
        }
    }
}

/// The analyze command: walk, analyze, write artifacts, print the summary.
/// Returns the process exit code.
pub fn cmd_analyze(config: &RunConfig) -> Result<i32, CliError> {
    if config.emit.is_empty() {
        return Err(CliError::Usage("nothing to emit".into()));
    }
    if config.emit.contains(&Artifact::Distmap) {
        check_distmap_metric(&config.distmap)?;
    }
    let doc = analyze_tree(
        &config.root,
        config.mode,
        Some(&config.out_dir),
        config.name.as_deref(),
    )?;
    log_diagnostics(&doc);

    fs::create_dir_all(&config.out_dir).map_err(|e| {
        CliError::Io(format!(
            "creating {} failed: {}",
            config.out_dir.display(),
            e
        ))
    })?;
    for artifact in &config.emit {
        let content = match artifact {
            Artifact::Model => emit_model_json(&doc),
            Artifact::Uml => emit_uml_dot(&doc),
            Artifact::Distmap => emit_distribution_map(&doc, &config.distmap)
                .map_err(|e| CliError::Usage(e.to_string()))?,
            Artifact::Metrics => emit_metrics_table(&doc, TableFormat::Csv),
        };
        atomic_write(&config.out_dir, artifact.file_name(), &content)?;
        log::debug!(
            "wrote {}",
            config.out_dir.join(artifact.file_name()).display()
        );
    }

    println!(
        "files: {}, loc: {}, classes: {}, inheritance edges: {}, diagnostics: {}",
        doc.packages.len(),
        doc.total_loc,
        doc.noc,
        doc.edges.len(),
        doc.diagnostics.len()
    );

    let errors = doc
        .diagnostics
        .iter()
        .filter(|d| d.severity == "error")
        .count();
    if config.strict && errors > 0 {
        log::error!("{} error-severity diagnostics (strict mode)", errors);
        return Ok(2);
    }
    Ok(0)
}

/// Artifact kinds the report command can re-emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    /// UML class diagram DOT.
    Uml,
    /// Distribution-map SVG.
    Distmap,
    /// Metric table (text or CSV per `format`).
    Metrics,
}

/// The report command: load a stored model and print one artifact to
/// standard output, byte-identical to the analyze-time emission.
pub fn cmd_report(
    model_path: &Path,
    kind: ReportKind,
    distmap: &DistMapSpec,
    format: TableFormat,
) -> Result<i32, CliError> {
    let text = fs::read_to_string(model_path)
        .map_err(|e| CliError::Io(format!("reading {} failed: {}", model_path.display(), e)))?;
    let doc = parse_model_json(&text).map_err(|e| match e {
        ModelJsonError::SchemaVersion(v) => CliError::Analysis(format!(
            "{}: schema_version {} is not supported (expected {})",
            model_path.display(),
            v,
            SCHEMA_VERSION
        )),
        ModelJsonError::Parse(m) => CliError::Analysis(format!(
            "{}: not a model document: {}",
            model_path.display(),
            m
        )),
    })?;
    let content = match kind {
        ReportKind::Uml => emit_uml_dot(&doc),
        ReportKind::Distmap => {
            check_distmap_metric(distmap)?;
            emit_distribution_map(&doc, distmap).map_err(|e| CliError::Usage(e.to_string()))?
        }
        ReportKind::Metrics => emit_metrics_table(&doc, format),
    };
    print!("{}", content);
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    const TWO_CLASS_SRC: &str = "function Mammal(name) { this.name = name; }\n\
        Mammal.prototype.toString = function() { return this.name; };\n\
        function Cat(name) { this.name = name; }\n\
        Cat.prototype = Object.create(Mammal.prototype);\n\
        var c = new Cat('x');\n";

    #[test]
    fn load_program_turns_bad_files_into_skip_diagnostics() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("good.js"), TWO_CLASS_SRC).unwrap();
        fs::write(dir.path().join("bad.js"), "var a = 1;\n@@@\n").unwrap();
        fs::write(dir.path().join("bad.json"), "not json").unwrap();
        let inputs = collect_inputs(dir.path(), InputMode::Auto, &WalkOptions::default()).unwrap();
        let (program, diags) = load_program(&inputs);
        assert_eq!(program.files.len(), 1);
        assert_eq!(diags.len(), 2);
        for d in &diags {
            assert_eq!(d.severity, Severity::Error);
            assert_eq!(d.code, DiagCode::FileSkipped);
        }
        assert_eq!(diags[0].file.as_deref(), Some("bad.js"));
        assert_eq!(diags[1].file.as_deref(), Some("bad.json"));
    }

    #[test]
    fn analyze_tree_rejects_missing_root_as_usage_error() {
        let err = analyze_tree(Path::new("/no/such/dir"), InputMode::Auto, None, None)
            .expect_err("must fail");
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("bad_root"));
    }

    #[test]
    fn analyze_tree_rejects_empty_root_as_usage_error() {
        let dir = tempfile::tempdir().unwrap();
        let err = analyze_tree(dir.path(), InputMode::Auto, None, None).expect_err("must fail");
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("empty_input"));
    }

    #[test]
    fn analyze_tree_produces_the_model_document() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("zoo.js"), TWO_CLASS_SRC).unwrap();
        let doc = analyze_tree(dir.path(), InputMode::Auto, None, Some("zoo")).unwrap();
        assert_eq!(doc.name.as_deref(), Some("zoo"));
        assert_eq!(doc.noc, 2);
        assert_eq!(doc.edges.len(), 1);
        assert_eq!(doc.edges[0].subclass, "Cat");
        assert_eq!(doc.edges[0].superclass, "Mammal");
        assert_eq!(doc.packages.len(), 1);
        assert_eq!(doc.packages[0].path, "zoo.js");
    }

    #[test]
    fn file_diagnostics_precede_detector_diagnostics() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("a_bad.js"), "@@@").unwrap();
        // near-miss: candidate name that is never instantiated
        fs::write(dir.path().join("b.js"), "function Lone() { this.x = 1; }\n").unwrap();
        let doc = analyze_tree(dir.path(), InputMode::Auto, None, None).unwrap();
        assert!(doc.diagnostics.len() >= 2);
        assert_eq!(doc.diagnostics[0].code, "file_skipped");
        assert_eq!(doc.diagnostics[1].code, "near_miss");
    }

    #[test]
    fn atomic_write_replaces_and_leaves_no_temp() {
        let dir = tempfile::tempdir().unwrap();
        atomic_write(dir.path(), "x.txt", "one\n").unwrap();
        atomic_write(dir.path(), "x.txt", "two\n").unwrap();
        assert_eq!(
            fs::read_to_string(dir.path().join("x.txt")).unwrap(),
            "two\n"
        );
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn unknown_distmap_metric_is_a_usage_error() {
        let spec = DistMapSpec {
            metric: "loc".into(),
            ..DistMapSpec::default()
        };
        let err = check_distmap_metric(&spec).expect_err("must fail");
        assert_eq!(err.exit_code(), 1);
        for ok in ["nom", "noa", "children", "dit"] {
            let spec = DistMapSpec {
                metric: ok.into(),
                ..DistMapSpec::default()
            };
            assert!(check_distmap_metric(&spec).is_ok());
        }
    }
}
