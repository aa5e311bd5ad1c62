//! Command-line entry point: argument parsing and exit-code mapping.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use jsclass_cli::run::{cmd_analyze, cmd_report, Artifact, ReportKind, RunConfig};
use jsclass_cli::walking::InputMode;
use jsclass_core::report::{DistMapSpec, TableFormat};

#[derive(Parser)]
#[command(
    name = "jsclass",
    version,
    about = "Recover class structure from JavaScript sources"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a directory tree and write artifacts
    Analyze {
        /// Directory to analyze
        root: PathBuf,
        /// How to interpret input files
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Artifact output directory
        #[arg(long, default_value = "./jsclass-out")]
        out: PathBuf,
        /// Artifacts to write (comma separated)
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "model,uml,distmap,metrics"
        )]
        emit: Vec<EmitArg>,
        /// Metric shown by the distribution map
        #[arg(long, default_value = "nom")]
        distmap_metric: String,
        /// Highlight classes with metric >= this value
        #[arg(long)]
        distmap_min: Option<u32>,
        /// Highlight classes with metric <= this value
        #[arg(long)]
        distmap_max: Option<u32>,
        /// Highlight color
        #[arg(long, default_value = "blue")]
        distmap_color: String,
        /// Exit 2 when any error-severity diagnostic is produced
        #[arg(long)]
        strict: bool,
        /// Application name stored in the model
        #[arg(long)]
        name: Option<String>,
    },
    /// Re-emit an artifact from a stored model
    Report {
        /// Path to a model.json written by analyze
        model: PathBuf,
        /// Artifact to print to standard output
        #[arg(value_enum)]
        kind: KindArg,
        /// Metric shown by the distribution map
        #[arg(long, default_value = "nom")]
        distmap_metric: String,
        /// Highlight classes with metric >= this value
        #[arg(long)]
        distmap_min: Option<u32>,
        /// Highlight classes with metric <= this value
        #[arg(long)]
        distmap_max: Option<u32>,
        /// Highlight color
        #[arg(long, default_value = "blue")]
        distmap_color: String,
        /// Metric table format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Js,
    EstreeJson,
    Auto,
}

impl From<ModeArg> for InputMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Js => InputMode::Js,
            ModeArg::EstreeJson => InputMode::EstreeJson,
            ModeArg::Auto => InputMode::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Model,
    Uml,
    Distmap,
    Metrics,
}

impl From<EmitArg> for Artifact {
    fn from(e: EmitArg) -> Self {
        match e {
            EmitArg::Model => Artifact::Model,
            EmitArg::Uml => Artifact::Uml,
            EmitArg::Distmap => Artifact::Distmap,
            EmitArg::Metrics => Artifact::Metrics,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Uml,
    Distmap,
    Metrics,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
}

fn distmap_spec(metric: String, min: Option<u32>, max: Option<u32>, color: String) -> DistMapSpec {
    DistMapSpec {
        metric,
        min,
        max,
        highlight_color: color,
        ..DistMapSpec::default()
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("JSCLASS_LOG", "warn"))
        .format_timestamp(None)
        .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    let result = match cli.command {
        Command::Analyze {
            root,
            mode,
            out,
            emit,
            distmap_metric,
            distmap_min,
            distmap_max,
            distmap_color,
            strict,
            name,
        } => {
            let config = RunConfig {
                root,
                mode: mode.into(),
                out_dir: out,
                emit: emit
                    .into_iter()
                    .map(Artifact::from)
                    .collect::<BTreeSet<_>>(),
                distmap: distmap_spec(distmap_metric, distmap_min, distmap_max, distmap_color),
                strict,
                name,
            };
            cmd_analyze(&config)
        }
        Command::Report {
            model,
            kind,
            distmap_metric,
            distmap_min,
            distmap_max,
            distmap_color,
            format,
        } => cmd_report(
            &model,
            match kind {
                KindArg::Uml => ReportKind::Uml,
                KindArg::Distmap => ReportKind::Distmap,
                KindArg::Metrics => ReportKind::Metrics,
            },
            &distmap_spec(distmap_metric, distmap_min, distmap_max, distmap_color),
            match format {
                FormatArg::Text => TableFormat::Text,
                FormatArg::Csv => TableFormat::Csv,
            },
        ),
    };

    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}
