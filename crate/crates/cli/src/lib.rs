//! `naqc` command line: figure-preset and custom sweeps to CSV, the
//! closed-form verification report, and the preset list.
//!
//! [`run`] owns all I/O and maps failures to exit codes: 0 success, 1 usage,
//! 2 domain, 3 I/O, 4 verification failure.

pub mod config;
pub mod error;

use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use naqc::sweep::{
    emit_csv, figure_preset_with, format_sig12, run_sweep, GridDefaults, Measures, SweepSpec, SweepVariable,
    DEFAULT_STEPS, DEFAULT_T_MAX, PRESET_NAMES,
};
use naqc::unruh::R_MAX;
use naqc::verify::{full_report, VerifyGrids};
use naqc::{PTTarget, Scenario, Subsystem};

use crate::config::Config;
pub use crate::error::{CliError, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

#[derive(Debug, Parser)]
#[command(
    name = "naqc",
    version,
    about = "Entanglement and NAQC of accelerated Bell pairs under PT-symmetric operations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a figure preset or a custom sweep and write one CSV per curve.
    Sweep(SweepArgs),
    /// Compare direct evolution against the published closed forms.
    Verify {
        /// Write the full residual table here (summary always goes to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List figure presets.
    Presets,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Figure preset (e.g. fig3a), or `all`. Repeatable.
    #[arg(long)]
    preset: Vec<String>,
    /// Grid points per curve [default: 200].
    #[arg(long)]
    steps: Option<usize>,
    /// Output directory [default: .].
    #[arg(long)]
    out: Option<PathBuf>,
    /// End of time sweeps [default: 10].
    #[arg(long)]
    t_max: Option<f64>,
    /// Qubit measured for NAQC; coherence is read on the other [default: a].
    #[arg(long, value_enum)]
    party: Option<Party>,
    /// `key = value` file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,

    #[arg(long, value_enum)]
    scenario: Option<ScenarioArg>,
    #[arg(long, value_enum)]
    pt: Option<PtArg>,
    /// Operator strength(s): numbers or `pi/N`, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<String>,
    #[arg(long, value_enum)]
    sweep: Option<VariableArg>,
    #[arg(long)]
    fixed_r: Option<f64>,
    #[arg(long)]
    fixed_t: Option<f64>,
    #[arg(long, value_enum, value_delimiter = ',')]
    measures: Vec<MeasureArg>,
    #[arg(long)]
    start: Option<f64>,
    #[arg(long)]
    end: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Party {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScenarioArg {
    None,
    FirstOnly,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PtArg {
    None,
    OnA,
    OnB,
    OnBoth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariableArg {
    R,
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeasureArg {
    Negativity,
    Naqc,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Messages go to stdout/stderr.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return parse_exit_code(&e);
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            e.exit_code()
        }
    }
}

/// Help and version requests succeed; every other parse failure is a usage error.
fn parse_exit_code(e: &clap::Error) -> u8 {
    match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
        _ => EXIT_USAGE,
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Verify { out } => verify(out.as_deref()),
        Command::Presets => {
            presets();
            Ok(())
        }
    }
}

fn presets() {
    print!("{}", preset_table());
}

/// One line per preset: scenario, operation, alpha, swept variable, measure, curves.
pub fn preset_table() -> String {
    let mut out = String::new();
    for name in PRESET_NAMES {
        let preset = figure_preset_with(name, &GridDefaults::default()).expect("listed preset");
        let spec = &preset.curves[0].spec;
        let measure = if spec.measures.negativity {
            "negativity"
        } else {
            "naqc"
        };
        let labels: Vec<_> = preset.curves.iter().filter_map(|c| c.label.as_deref()).collect();
        let curves = if labels.is_empty() {
            String::new()
        } else {
            format!(" [{}]", labels.join(", "))
        };
        out += &format!(
            "{name:<7} {:<10} pt={:<7} alpha={:<14} sweep {} {measure}{curves}\n",
            spec.scenario.label(),
            naqc::sweep::pt_label(spec.pt_target),
            format_sig12(spec.alpha),
            spec.variable.name(),
        );
    }
    out
}

fn verify(out: Option<&Path>) -> Result<(), CliError> {
    let report = full_report(&VerifyGrids::default())?;
    let table = report.to_table();
    if let Some(path) = out {
        write_file(path, table.as_bytes())?;
    }
    // summary block only; the per-row table is in the file
    let summary: Vec<&str> = table.split("\n\n").take(2).collect();
    println!("{}", summary.join("\n\n"));
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Flag if present, else config value, else nothing.
struct Layered<'a> {
    config: &'a Config,
}

impl Layered<'_> {
    fn pick<T>(
        &self,
        flag: Option<T>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self
                .config
                .get(key)
                .map(|raw| parse(raw).map_err(|msg| CliError::usage(format!("config `{key}`: {msg}"))))
                .transpose(),
        }
    }

    fn pick_list<T>(
        &self,
        flag: Vec<T>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Vec<T>, CliError> {
        if !flag.is_empty() {
            return Ok(flag);
        }
        match self.config.get(key) {
            None => Ok(Vec::new()),
            Some(raw) => raw
                .split(',')
                .map(|item| {
                    parse(item.trim()).map_err(|msg| CliError::usage(format!("config `{key}`: {msg}")))
                })
                .collect(),
        }
    }
}

fn number<T: std::str::FromStr>(raw: &str) -> Result<T, String> {
    raw.parse().map_err(|_| format!("invalid number `{raw}`"))
}

fn choice<T: ValueEnum>(raw: &str) -> Result<T, String> {
    T::from_str(raw, true)
}

/// A float, `pi`, `-pi/N` or `pi/N`.
fn parse_angle(raw: &str) -> Result<f64, String> {
    let raw = raw.trim();
    let (sign, body) = match raw.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, raw),
    };
    let value = match body.strip_prefix("pi") {
        Some("") => PI,
        Some(rest) => {
            let divisor: f64 = rest
                .strip_prefix('/')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| format!("invalid angle `{raw}`"))?;
            PI / divisor
        }
        None => body.parse().map_err(|_| format!("invalid angle `{raw}`"))?,
    };
    Ok(sign * value)
}

fn sweep(args: SweepArgs) -> Result<(), CliError> {
    let config = match &args.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let layer = Layered { config: &config };

    let steps = layer.pick(args.steps, "steps", number)?.unwrap_or(DEFAULT_STEPS);
    let t_max = layer.pick(args.t_max, "t_max", number)?.unwrap_or(DEFAULT_T_MAX);
    let out = layer
        .pick(args.out, "out", |s| Ok(PathBuf::from(s)))?
        .unwrap_or_else(|| PathBuf::from("."));
    let party = match layer.pick(args.party, "party", choice)?.unwrap_or(Party::A) {
        Party::A => Subsystem::A,
        Party::B => Subsystem::B,
    };
    if steps < 2 {
        return Err(CliError::usage("--steps must be at least 2"));
    }
    if !(t_max.is_finite() && t_max >= 0.0) {
        return Err(CliError::usage("--t-max must be a finite non-negative number"));
    }
    let defaults = GridDefaults {
        steps,
        t_max,
        measured_party: party,
    };

    let presets = layer.pick_list(args.preset, "preset", |s| Ok(s.to_string()))?;
    let custom = CustomArgs {
        scenario: layer.pick(args.scenario, "scenario", choice)?,
        pt: layer.pick(args.pt, "pt", choice)?,
        alpha: layer.pick_list(
            args.alpha
                .iter()
                .map(|a| parse_angle(a))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::usage)?,
            "alpha",
            parse_angle,
        )?,
        sweep: layer.pick(args.sweep, "sweep", choice)?,
        fixed_r: layer.pick(args.fixed_r, "fixed_r", number)?,
        fixed_t: layer.pick(args.fixed_t, "fixed_t", number)?,
        measures: layer.pick_list(args.measures, "measures", choice)?,
        start: layer.pick(args.start, "start", number)?,
        end: layer.pick(args.end, "end", number)?,
    };

    let jobs: Vec<(String, SweepSpec)> = if presets.is_empty() {
        custom.jobs(&defaults)?
    } else {
        if custom.any_set() {
            return Err(CliError::usage(
                "--preset cannot be combined with custom sweep options",
            ));
        }
        preset_jobs(&presets, &defaults)?
    };

    fs::create_dir_all(&out).map_err(|e| CliError::io(&out, e))?;
    for (file_name, spec) in jobs {
        let records = run_sweep(&spec)?;
        let path = out.join(file_name);
        emit_csv(&records, &path).map_err(|e| match e {
            naqc::Error::Io(source) => CliError::io(&path, source),
            other => other.into(),
        })?;
        println!("{}", path.display());
    }
    Ok(())
}

fn preset_jobs(names: &[String], defaults: &GridDefaults) -> Result<Vec<(String, SweepSpec)>, CliError> {
    let expanded: Vec<&str> = if names.iter().any(|n| n == "all") {
        PRESET_NAMES.to_vec()
    } else {
        names.iter().map(String::as_str).collect()
    };
    let mut jobs = Vec::new();
    for name in expanded {
        let preset = figure_preset_with(name, defaults)?;
        for curve in &preset.curves {
            jobs.push((preset.file_name(curve), curve.spec.clone()));
        }
    }
    Ok(jobs)
}

struct CustomArgs {
    scenario: Option<ScenarioArg>,
    pt: Option<PtArg>,
    alpha: Vec<f64>,
    sweep: Option<VariableArg>,
    fixed_r: Option<f64>,
    fixed_t: Option<f64>,
    measures: Vec<MeasureArg>,
    start: Option<f64>,
    end: Option<f64>,
}

impl CustomArgs {
    fn any_set(&self) -> bool {
        self.scenario.is_some()
            || self.pt.is_some()
            || !self.alpha.is_empty()
            || self.sweep.is_some()
            || self.fixed_r.is_some()
            || self.fixed_t.is_some()
            || !self.measures.is_empty()
            || self.start.is_some()
            || self.end.is_some()
    }

    /// One spec per alpha; file `sweep.csv`, or `sweep_alpha=<value>.csv` for lists.
    fn jobs(&self, defaults: &GridDefaults) -> Result<Vec<(String, SweepSpec)>, CliError> {
        let scenario = match self
            .scenario
            .ok_or_else(|| CliError::usage("sweep needs --preset or --scenario"))?
        {
            ScenarioArg::None => Scenario::None,
            ScenarioArg::FirstOnly => Scenario::FirstOnly,
            ScenarioArg::Both => Scenario::Both,
        };
        let pt_target = match self.pt.unwrap_or(PtArg::None) {
            PtArg::None => None,
            PtArg::OnA => Some(PTTarget::OnA),
            PtArg::OnB => Some(PTTarget::OnB),
            PtArg::OnBoth => Some(PTTarget::OnBoth),
        };
        let variable = match self
            .sweep
            .ok_or_else(|| CliError::usage("custom sweep needs --sweep r|t"))?
        {
            VariableArg::R => SweepVariable::R,
            VariableArg::T => SweepVariable::T,
        };
        let (fixed, default_end) = match variable {
            SweepVariable::R if self.fixed_r.is_some() => {
                return Err(CliError::usage("--fixed-r conflicts with --sweep r"))
            }
            SweepVariable::T if self.fixed_t.is_some() => {
                return Err(CliError::usage("--fixed-t conflicts with --sweep t"))
            }
            SweepVariable::R => (self.fixed_t.unwrap_or(0.0), R_MAX),
            SweepVariable::T => (self.fixed_r.unwrap_or(0.0), defaults.t_max),
        };
        let alphas = match (pt_target, self.alpha.is_empty()) {
            (Some(_), true) => return Err(CliError::usage("--alpha is required with --pt")),
            (None, false) => return Err(CliError::usage("--alpha needs --pt on-a|on-b|on-both")),
            (None, true) => vec![0.0],
            (Some(_), false) => self.alpha.clone(),
        };
        let measures = if self.measures.is_empty() {
            Measures::BOTH
        } else {
            Measures {
                negativity: self.measures.contains(&MeasureArg::Negativity),
                naqc: self.measures.contains(&MeasureArg::Naqc),
            }
        };

        let labelled = alphas.len() > 1;
        Ok(alphas
            .into_iter()
            .map(|alpha| {
                let name = if labelled {
                    format!("sweep_alpha={}.csv", format_sig12(alpha))
                } else {
                    "sweep.csv".to_string()
                };
                let spec = SweepSpec {
                    scenario,
                    pt_target,
                    alpha,
                    variable,
                    fixed,
                    start: self.start.unwrap_or(0.0),
                    end: self.end.unwrap_or(default_end),
                    steps: defaults.steps,
                    measures,
                    measured_party: defaults.measured_party,
                };
                (name, spec)
            })
            .collect())
    }
}
