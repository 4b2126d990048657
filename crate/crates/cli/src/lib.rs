//! `regui` command-line front end.
//!
//! Machine-readable output goes to stdout only; diagnostics and logs go to
//! stderr. Exit codes: 0 success, 1 the spec has errors, 2 unreadable or
//! unparseable input, 3 invalid flags.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use regui::json::to_canonical_string;
use regui::{
    classify, export_svg, format_actions, has_errors, parse_spec, parse_trace, replay_trace, resolve, validate_spec,
    Anchor, LayoutError, LayoutSpec, Severity, WindowState,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SPEC_ERRORS: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "regui", version, about = "Aspect-ratio driven responsive layout engine")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Print the aspect ratio and layout class of a window.
    Classify(WindowArgs),
    /// Print the resolved layout of a window.
    Resolve(AnchoredArgs),
    /// Lint a spec and print its diagnostics.
    Validate(SpecArgs),
    /// Replay a resize/move trace and print one action per event.
    Trace(TraceArgs),
    /// Render the resolved layout of a window as SVG.
    ExportSvg(AnchoredArgs),
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct WindowArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, allow_negative_numbers = true)]
    width: f64,
    #[arg(long, allow_negative_numbers = true)]
    height: f64,
}

#[derive(Debug, Args)]
struct AnchoredArgs {
    #[command(flatten)]
    window: WindowArgs,
    #[arg(long, default_value = "none")]
    anchor: Anchor,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    events: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Resolve,
    Validate,
    Trace,
    ExportSvg,
}

/// A fully checked invocation. Building one performs no file I/O.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub spec_path: PathBuf,
    /// Present for classify, resolve and export-svg.
    pub window: Option<WindowState>,
    pub anchor: Anchor,
    pub events_path: Option<PathBuf>,
    pub format: Format,
}

/// Rejected command line; `exit_code` is 0 for `--help` / `--version`.
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    pub exit_code: i32,
}

impl UsageError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit_code: EXIT_USAGE,
        }
    }
}

fn window_of(args: &WindowArgs) -> Result<WindowState, UsageError> {
    WindowState::new(args.width, args.height).map_err(|e| UsageError::usage(format!("error: {e}")))
}

impl CliConfig {
    pub fn from_args<I, T>(args: I) -> Result<CliConfig, UsageError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| {
            let exit_code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            UsageError {
                message: e.render().to_string(),
                exit_code,
            }
        })?;

        let (command, spec, window, anchor, events_path) = match cli.command {
            CommandArgs::Classify(w) => (Command::Classify, w.spec.clone_parts(), Some(window_of(&w)?), Anchor::None, None),
            CommandArgs::Resolve(a) => (Command::Resolve, a.window.spec.clone_parts(), Some(window_of(&a.window)?), a.anchor, None),
            CommandArgs::ExportSvg(a) => (Command::ExportSvg, a.window.spec.clone_parts(), Some(window_of(&a.window)?), a.anchor, None),
            CommandArgs::Validate(s) => (Command::Validate, s.clone_parts(), None, Anchor::None, None),
            CommandArgs::Trace(t) => (Command::Trace, t.spec.clone_parts(), None, Anchor::None, Some(t.events)),
        };
        let (spec_path, requested) = spec;

        let (default, allowed): (Format, &[Format]) = match command {
            Command::Resolve => (Format::Json, &[Format::Json, Format::Svg]),
            Command::ExportSvg => (Format::Svg, &[Format::Svg]),
            _ => (Format::Json, &[Format::Json]),
        };
        let format = requested.unwrap_or(default);
        if !allowed.contains(&format) {
            return Err(UsageError::usage(format!(
                "error: --format {} is not supported by this command",
                format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
            )));
        }

        Ok(CliConfig {
            command,
            spec_path,
            window,
            anchor,
            events_path,
            format,
        })
    }
}

impl SpecArgs {
    fn clone_parts(&self) -> (PathBuf, Option<Format>) {
        (self.spec.clone(), self.format)
    }
}

/// A failure after argument checking, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn bad_input(path: &Path, what: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: format!("{}: {what}", path.display()),
    }
}

fn engine(err: LayoutError) -> Failure {
    Failure {
        code: EXIT_SPEC_ERRORS,
        message: err.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| bad_input(path, e))
}

fn load_spec(path: &Path) -> Result<LayoutSpec, Failure> {
    parse_spec(&read(path)?).map_err(|e| bad_input(path, e))
}

fn execute(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let spec = load_spec(&config.spec_path)?;
    let io = |e: std::io::Error| Failure {
        code: EXIT_BAD_INPUT,
        message: format!("write failed: {e}"),
    };
    match config.command {
        Command::Classify => {
            let window = config.window.expect("checked by from_args");
            let class = classify(window.aspect_ratio(), &spec.classes).map_err(engine)?;
            let doc = json!({"r": window.aspect_ratio(), "class": class.name});
            writeln!(out, "{doc}").map_err(io)?;
        }
        Command::Resolve | Command::ExportSvg => {
            let window = config.window.expect("checked by from_args");
            let layout = resolve(&spec, &window, config.anchor).map_err(engine)?;
            let text = match config.format {
                Format::Json => layout.to_canonical_string(),
                Format::Svg => export_svg(&layout),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
        Command::Validate => {
            let diagnostics = validate_spec(&spec);
            let count = |s| diagnostics.iter().filter(|d| d.severity == s).count();
            let (errors, warnings, infos) = (count(Severity::Error), count(Severity::Warning), count(Severity::Info));
            for d in &diagnostics {
                let _ = writeln!(err, "{d}");
            }
            let _ = writeln!(err, "{}: {errors} error(s), {warnings} warning(s), {infos} info", spec.name);
            let doc = json!({
                "spec": spec.name,
                "errors": errors,
                "warnings": warnings,
                "infos": infos,
                "diagnostics": serde_json::to_value(&diagnostics).unwrap_or(Value::Null),
            });
            out.write_all(to_canonical_string(&doc).as_bytes()).map_err(io)?;
            if has_errors(&diagnostics) {
                return Ok(EXIT_SPEC_ERRORS);
            }
        }
        Command::Trace => {
            let path = config.events_path.as_deref().expect("checked by from_args");
            let events = parse_trace(&read(path)?).map_err(|e| bad_input(path, e))?;
            let entries = replay_trace(&spec, &events);
            out.write_all(format_actions(&entries).as_bytes()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs one checked command, returning the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::from_args(args) {
        Ok(config) => run(&config, out, err),
        Err(usage) => {
            let sink: &mut dyn Write = if usage.exit_code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{}", usage.message);
            if !usage.message.ends_with('\n') {
                let _ = writeln!(sink);
            }
            usage.exit_code
        }
    }
}
