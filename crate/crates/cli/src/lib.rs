//! `nlpc`: generate attributed graphs, compile transitions and render
//! them to keyframes and SVG frames.
//!
//! Exit codes: 0 on success, 1 for I/O failures, 2 for invalid input. On
//! failure stderr holds a readable message followed by a single JSON line
//! `{"error":{"kind":…,"path":…,"message":…},"exitCode":…}`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nlpc_core::emit::{emit_keyframes, emit_svg};
use nlpc_core::metrics::{build_report, MetricsOptions};
use nlpc_core::timeline::StaggerConfig;
use nlpc_core::{
    generate_attributes, les_miserables, load_graph, preset, serialize_graph, Error, LayoutOptions, MultivariateGraph,
    PatternKind, Transition, TransitionSpec, Viewport,
};
use serde_json::json;

const DEFAULT_MARGIN: f64 = 40.0;

#[derive(Debug, Parser)]
#[command(name = "nlpc", version, about = "Node-link to parallel coordinates transitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Add synthetic attributes to a graph and write it as JSON.
    GenData(GenDataArgs),
    /// Compile a transition and write its timeline and metrics report.
    Compile(TransitionArgs),
    /// Render a transition to keyframes.json and one SVG per frame.
    Render(TransitionArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph JSON; the bundled Les Misérables network when omitted.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// negative-correlation, positive-correlation, uniform or outliers:K
    #[arg(long, default_value = "negative-correlation")]
    pub pattern: PatternKind,
    /// Number of attributes to synthesize.
    #[arg(long, default_value_t = 2)]
    pub axes: usize,
}

#[derive(Debug, Args)]
pub struct GenDataArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Output file.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("variant").required(true).args(["spec", "preset"]))]
pub struct TransitionArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Transition spec JSON.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// v_basic or v_adv
    #[arg(long)]
    pub preset: Option<String>,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 50.0)]
    pub fps: f64,
    #[arg(long, default_value_t = 1600.0)]
    pub width: f64,
    #[arg(long, default_value_t = 900.0)]
    pub height: f64,
    /// Staggering. Presets run unstaggered unless this is `on`; spec files
    /// keep their own setting unless it is given.
    #[arg(long)]
    pub stagger: Option<Toggle>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: String,
    pub path: Option<String>,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        Self {
            code: 2,
            kind: "usage".into(),
            path: None,
            message,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: 1,
            kind: "io".into(),
            path: Some(path.display().to_string()),
            message: format!("{}: {e}", path.display()),
        }
    }

    pub fn to_json_line(&self) -> String {
        json!({
            "error": { "kind": self.kind, "path": self.path, "message": self.message.trim_end() },
            "exitCode": self.code,
        })
        .to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Argument { .. } => "argument",
            Error::Consistency(_) => "consistency",
        };
        Self {
            code: 2,
            kind: kind.into(),
            path: e.path(),
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn argument(name: &str, message: impl Into<String>) -> CliError {
    Error::Argument {
        name: name.into(),
        message: message.into(),
    }
    .into()
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn create_dir(path: &Path) -> CliResult<()> {
    fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

/// Loads the graph and, when it carries no attributes, synthesizes them.
fn load(args: &GraphArgs, force_generate: bool) -> CliResult<MultivariateGraph> {
    let graph = match &args.graph {
        Some(path) => load_graph(&read(path)?)?,
        None => les_miserables(),
    };
    if force_generate || graph.attributes.is_empty() {
        let table = generate_attributes(&graph, args.axes, args.pattern, args.seed)?;
        Ok(graph.with_attributes(table))
    } else {
        Ok(graph)
    }
}

fn resolve_spec(args: &TransitionArgs) -> CliResult<TransitionSpec> {
    let mut spec = match (&args.spec, &args.preset) {
        (Some(path), _) => TransitionSpec::from_json(&read(path)?)?,
        (None, Some(name)) => {
            let mut spec = preset(name).ok_or_else(|| argument("preset", format!("unknown preset \"{name}\"")))?;
            spec.stagger = None;
            spec
        }
        (None, None) => return Err(argument("spec", "one of --spec or --preset is required")),
    };
    match args.stagger {
        Some(Toggle::On) => {
            if spec.stagger.is_none() {
                spec.stagger = Some(StaggerConfig::default());
            }
        }
        Some(Toggle::Off) => spec.stagger = None,
        None => {}
    }
    Ok(spec)
}

fn compile(args: &TransitionArgs) -> CliResult<Transition> {
    if !(args.fps.is_finite() && args.fps > 0.0) {
        return Err(argument("fps", format!("{} is not a positive frame rate", args.fps)));
    }
    let viewport = Viewport::new(args.width, args.height, DEFAULT_MARGIN)?;
    let graph = load(&args.graph, false)?;
    let spec = resolve_spec(args)?;
    let layout = LayoutOptions {
        seed: args.graph.seed,
        ..LayoutOptions::default()
    };
    Ok(Transition::compile(graph, spec, viewport, &layout)?)
}

fn cmd_gen_data(args: &GenDataArgs) -> CliResult<()> {
    let graph = load(&args.graph, true)?;
    write(&args.out, &serialize_graph(&graph))
}

fn cmd_compile(args: &TransitionArgs) -> CliResult<()> {
    let tr = compile(args)?;
    let doc = emit_keyframes(&tr, args.fps)?;
    let report = build_report(&tr, &doc.frames, &MetricsOptions::default())?;
    let timeline = json!({
        "schemaVersion": "1",
        "spec": tr.spec,
        "timeline": tr.timeline,
    });
    let mut timeline = serde_json::to_string_pretty(&timeline).expect("timeline serializes");
    timeline.push('\n');
    create_dir(&args.out)?;
    write(&args.out.join("timeline.json"), &timeline)?;
    write(&args.out.join("report.json"), &report.to_json())?;
    write(&args.out.join("report.txt"), &report.to_text())
}

fn cmd_render(args: &TransitionArgs) -> CliResult<()> {
    let tr = compile(args)?;
    let doc = emit_keyframes(&tr, args.fps)?;
    create_dir(&args.out)?;
    write(&args.out.join("keyframes.json"), &doc.to_json())?;
    for (i, frame) in doc.frames.iter().enumerate() {
        write(
            &args.out.join(format!("frame_{i:05}.svg")),
            &emit_svg(frame, &tr.viewport),
        )?;
    }
    Ok(())
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::GenData(args) => cmd_gen_data(args),
        Command::Compile(args) => cmd_compile(args),
        Command::Render(args) => cmd_render(args),
    }
}
