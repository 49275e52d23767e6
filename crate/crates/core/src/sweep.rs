//! Parameter sweeps over acceleration `r` or interaction time `t`, figure
//! presets, and CSV output.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Subsystem;
use crate::measures::{naqc_measuring, negativity};
use crate::ptsym::{evolve, PTParams, PTTarget};
use crate::unruh::{accelerate, bell_phi_plus, AccelerationSpec, Scenario, R_MAX};

pub const DEFAULT_STEPS: usize = 200;
pub const DEFAULT_T_MAX: f64 = 10.0;

pub const CSV_HEADER: &str = "r,t,alpha,scenario,pt_target,negativity,naqc";

/// `steps` evenly spaced points from `start` to `end`, both endpoints exact.
pub fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![start],
        n => (0..n)
            .map(|i| {
                if i == n - 1 {
                    end
                } else {
                    start + (end - start) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepVariable {
    R,
    T,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::R => "r",
            SweepVariable::T => "t",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Measures {
    pub negativity: bool,
    pub naqc: bool,
}

impl Measures {
    pub const NEGATIVITY: Self = Self {
        negativity: true,
        naqc: false,
    };
    pub const NAQC: Self = Self {
        negativity: false,
        naqc: true,
    };
    pub const BOTH: Self = Self {
        negativity: true,
        naqc: true,
    };
}

/// One curve: a 1-D grid in `variable`, with the other of r/t held at `fixed`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub scenario: Scenario,
    pub pt_target: Option<PTTarget>,
    pub alpha: f64,
    pub variable: SweepVariable,
    pub fixed: f64,
    pub start: f64,
    pub end: f64,
    pub steps: usize,
    pub measures: Measures,
    pub measured_party: Subsystem,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::Domain {
                name: "steps",
                value: self.steps as f64,
                domain: "integers >= 2",
            });
        }
        if !(self.start <= self.end) {
            return Err(Error::Domain {
                name: "range end",
                value: self.end,
                domain: "values >= range start",
            });
        }
        let (r_lo, r_hi, t_lo, t_hi) = match self.variable {
            SweepVariable::R => (self.start, self.end, self.fixed, self.fixed),
            SweepVariable::T => (self.fixed, self.fixed, self.start, self.end),
        };
        AccelerationSpec::new(r_lo, self.scenario)?;
        AccelerationSpec::new(r_hi, self.scenario)?;
        match self.pt_target {
            Some(_) => {
                PTParams::new(self.alpha, t_lo)?;
                PTParams::new(self.alpha, t_hi)?;
            }
            None if !(t_lo >= 0.0 && t_hi.is_finite()) => {
                return Err(Error::Domain {
                    name: "t",
                    value: t_lo,
                    domain: "[0, inf)",
                });
            }
            None => {}
        }
        Ok(())
    }

    /// `(r, t)` at every grid point, in ascending sweep order.
    pub fn grid(&self) -> Vec<(f64, f64)> {
        linspace(self.start, self.end, self.steps)
            .into_iter()
            .map(|x| match self.variable {
                SweepVariable::R => (x, self.fixed),
                SweepVariable::T => (self.fixed, x),
            })
            .collect()
    }

    /// Value recorded in the `alpha` column.
    fn alpha_label(&self) -> f64 {
        if self.pt_target.is_some() {
            self.alpha
        } else {
            0.0
        }
    }
}

/// One CSV row. Absent measures are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureRecord {
    pub r: f64,
    pub t: f64,
    pub alpha: f64,
    pub scenario: Scenario,
    pub pt_target: Option<PTTarget>,
    pub negativity: Option<f64>,
    pub naqc: Option<f64>,
}

pub fn pt_label(target: Option<PTTarget>) -> &'static str {
    target.map_or("none", PTTarget::label)
}

/// Bell state, accelerated, then optionally evolved, then measured.
pub fn evaluate_point(spec: &SweepSpec, r: f64, t: f64) -> Result<MeasureRecord> {
    let accel = AccelerationSpec::new(r, spec.scenario)?;
    let mut state = accelerate(&bell_phi_plus(), &accel);
    if let Some(target) = spec.pt_target {
        state = evolve(&state, &PTParams::new(spec.alpha, t)?, target)?;
    }
    let negativity = if spec.measures.negativity {
        Some(negativity(&state)?)
    } else {
        None
    };
    let naqc = spec
        .measures
        .naqc
        .then(|| naqc_measuring(&state, spec.measured_party));
    Ok(MeasureRecord {
        r,
        t,
        alpha: spec.alpha_label(),
        scenario: spec.scenario,
        pt_target: spec.pt_target,
        negativity,
        naqc,
    })
}

/// Evaluates every grid point; output order follows the grid regardless of
/// how the points were scheduled.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<MeasureRecord>> {
    spec.validate()?;
    spec.grid()
        .into_par_iter()
        .enumerate()
        .map(|(index, (r, t))| {
            evaluate_point(spec, r, t).map_err(|e| Error::GridPoint {
                index,
                r,
                t,
                source: Box::new(e),
            })
        })
        .collect()
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_csv<W: Write>(records: &[MeasureRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for rec in records {
        let opt = |v: Option<f64>| v.map(format_sig12).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            format_sig12(rec.r),
            format_sig12(rec.t),
            format_sig12(rec.alpha),
            rec.scenario.label(),
            pt_label(rec.pt_target),
            opt(rec.negativity),
            opt(rec.naqc),
        )?;
    }
    out.flush()
}

pub fn emit_csv(records: &[MeasureRecord], destination: &Path) -> Result<()> {
    let file = File::create(destination)?;
    write_csv(records, BufWriter::new(file))?;
    Ok(())
}

/// One solid/dashed/dotted curve of a figure panel.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    /// `param=value` for the held parameter, or `None` for single-curve panels.
    pub label: Option<String>,
    pub spec: SweepSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub name: String,
    pub curves: Vec<Curve>,
}

impl FigurePreset {
    pub fn file_name(&self, curve: &Curve) -> String {
        match &curve.label {
            Some(label) => format!("{}_{label}.csv", self.name),
            None => format!("{}.csv", self.name),
        }
    }
}

/// Grid resolution and time extent applied to presets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridDefaults {
    pub steps: usize,
    pub t_max: f64,
    pub measured_party: Subsystem,
}

impl Default for GridDefaults {
    fn default() -> Self {
        Self {
            steps: DEFAULT_STEPS,
            t_max: DEFAULT_T_MAX,
            measured_party: Subsystem::A,
        }
    }
}

pub const PRESET_NAMES: [&str; 40] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c", "fig5a",
    "fig5b", "fig6a", "fig6b", "fig6c", "fig6d", "fig7a", "fig7b", "fig7c", "fig8a", "fig8b", "fig8c",
    "fig9a", "fig9b", "fig9c", "fig10a", "fig10b", "fig10c", "fig11a", "fig11b", "fig11c", "fig12a",
    "fig12b", "fig12c", "fig13a", "fig13b", "fig13c", "fig14a", "fig14b", "fig14c",
];

/// Held times for curves swept in r.
pub const CURVE_TIMES: [f64; 3] = [0.1, 0.4, 0.9];
/// Held accelerations for curves swept in t.
pub const CURVE_ACCELERATIONS: [f64; 3] = [0.2, 0.4, 0.6];
/// Operator strengths of panels a, b, c.
pub const PANEL_ALPHAS: [f64; 3] = [FRAC_PI_6, FRAC_PI_4, FRAC_PI_3];

pub fn figure_preset(name: &str) -> Result<FigurePreset> {
    figure_preset_with(name, &GridDefaults::default())
}

pub fn figure_preset_with(name: &str, defaults: &GridDefaults) -> Result<FigurePreset> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let rest = name.strip_prefix("fig").ok_or_else(unknown)?;
    let split = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(unknown)?;
    let (number, panel) = rest.split_at(split);
    let number: u32 = number.parse().map_err(|_| unknown())?;
    let mut panel_chars = panel.chars();
    let (Some(letter), None) = (panel_chars.next(), panel_chars.next()) else {
        return Err(unknown());
    };
    let panel = match letter {
        'a' => 0,
        'b' => 1,
        'c' => 2,
        'd' => 3,
        _ => return Err(unknown()),
    };

    use Measures as M;
    use PTTarget::{OnA, OnBoth};
    use Scenario::{Both, FirstOnly};
    use SweepVariable::{R, T};

    let plain = |scenario, measures| (panel < 2).then(|| single_curve(scenario, measures, defaults));
    // (scenario, operation target, panel alpha, swept variable, measure)
    let by_alpha = |scenario, target, variable, measures| {
        (panel < 3).then(|| {
            family(
                scenario,
                target,
                PANEL_ALPHAS[panel],
                variable,
                measures,
                defaults,
            )
        })
    };

    let curves = match number {
        1 => plain([FirstOnly, Both][panel.min(1)], M::NEGATIVITY),
        2 => plain([FirstOnly, Both][panel.min(1)], M::NAQC),
        3 => by_alpha(FirstOnly, OnA, R, M::NEGATIVITY),
        4 => by_alpha(FirstOnly, OnA, T, M::NEGATIVITY),
        5 => (panel < 2).then(|| {
            family(
                FirstOnly,
                OnBoth,
                FRAC_PI_6,
                [R, T][panel],
                M::NEGATIVITY,
                defaults,
            )
        }),
        6 => {
            let (target, variable) = [(OnA, R), (OnA, T), (OnBoth, R), (OnBoth, T)][panel];
            Some(family(Both, target, FRAC_PI_6, variable, M::NEGATIVITY, defaults))
        }
        7 => by_alpha(FirstOnly, OnA, R, M::NAQC),
        8 => by_alpha(FirstOnly, OnA, T, M::NAQC),
        9 => by_alpha(FirstOnly, OnBoth, R, M::NAQC),
        10 => by_alpha(FirstOnly, OnBoth, T, M::NAQC),
        11 => by_alpha(Both, OnA, R, M::NAQC),
        12 => by_alpha(Both, OnA, T, M::NAQC),
        13 => by_alpha(Both, OnBoth, R, M::NAQC),
        14 => by_alpha(Both, OnBoth, T, M::NAQC),
        _ => None,
    }
    .ok_or_else(unknown)?;

    Ok(FigurePreset {
        name: name.to_string(),
        curves,
    })
}

fn single_curve(scenario: Scenario, measures: Measures, defaults: &GridDefaults) -> Vec<Curve> {
    vec![Curve {
        label: None,
        spec: SweepSpec {
            scenario,
            pt_target: None,
            alpha: 0.0,
            variable: SweepVariable::R,
            fixed: 0.0,
            start: 0.0,
            end: R_MAX,
            steps: defaults.steps,
            measures,
            measured_party: defaults.measured_party,
        },
    }]
}

fn family(
    scenario: Scenario,
    target: PTTarget,
    alpha: f64,
    variable: SweepVariable,
    measures: Measures,
    defaults: &GridDefaults,
) -> Vec<Curve> {
    let (held_name, held, end) = match variable {
        SweepVariable::R => ("t", CURVE_TIMES, R_MAX),
        SweepVariable::T => ("r", CURVE_ACCELERATIONS, defaults.t_max),
    };
    held.into_iter()
        .map(|fixed| Curve {
            label: Some(format!("{held_name}={}", format_sig12(fixed))),
            spec: SweepSpec {
                scenario,
                pt_target: Some(target),
                alpha,
                variable,
                fixed,
                start: 0.0,
                end,
                steps: defaults.steps,
                measures,
                measured_party: defaults.measured_party,
            },
        })
        .collect()
}
