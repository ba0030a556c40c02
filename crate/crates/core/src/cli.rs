//! Command-line front end: `concurrence`, `sweep` and `critical` subcommands
//! writing CSV with a `#`-prefixed metadata block.
//!
//! Exit codes are 0 on success, 1 for compute errors and 2 for usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::concurrence::{closed_concurrence, numeric_concurrence};
use crate::critical::{tc_dm, tc_phase_curve, Phase, TcResult};
use crate::models::{DMParams, GeneralHeisenbergDMParams, ModelParams, XXZParams};
use crate::thermal::Temperature;

/// A requested `T = 0` is evaluated at this multiple of `|J|`.
pub const ZERO_T_PROXY: f64 = 1e-4;
/// Largest `|C_closed − C_numeric|` tolerated by `--self-check`.
pub const SELF_CHECK_TOL: f64 = 1e-9;

const PRESET_VALUES: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
const PRESET_TMAX: f64 = 4.0;
const PRESET_STEPS: usize = 81;

#[derive(Debug, Parser)]
#[command(name = "thermoent", version, about = "Thermal entanglement of two-qubit spin models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Concurrence at a single temperature.
    Concurrence {
        #[command(flatten)]
        model: ModelArgs,
        /// Temperature (0 is replaced by 1e-4·|J|).
        #[arg(long = "T", allow_hyphen_values = true)]
        t: f64,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Concurrence over a temperature grid, one column per Δ or D value.
    Sweep {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        tmin: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        tmax: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Critical temperature over a Δ grid (xxz) or D grid (dm).
    Critical {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: Option<ModelKind>,
    /// Exchange constant.
    #[arg(long = "J", allow_hyphen_values = true)]
    j: Option<f64>,
    /// Anisotropy, a value or a comma-separated list.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
    delta: Option<Grid>,
    /// z-axis DM strength, a value or a comma-separated list.
    #[arg(long = "D", allow_hyphen_values = true, value_parser = parse_list)]
    d: Option<Grid>,
    /// DM vector for the general model, `x,y,z`.
    #[arg(long = "Dvec", allow_hyphen_values = true, value_parser = parse_vec3)]
    dvec: Option<[f64; 3]>,
    #[arg(long, value_enum, conflicts_with_all = ["model", "j", "delta", "d", "dvec"])]
    preset: Option<Preset>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    out: Option<String>,
    /// Fail if closed and numeric values differ by more than 1e-9.
    #[arg(long)]
    self_check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Xxz,
    Dm,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Fig1,
    Fig2a,
    Fig2b,
}

#[derive(Debug, Clone)]
struct Grid(Vec<f64>);

fn parse_list(s: &str) -> Result<Grid, String> {
    let values = s
        .split(',')
        .map(|v| v.parse::<f64>().map_err(|_| format!("invalid number `{v}`")))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(format!("non-finite value {v}"));
    }
    Ok(Grid(values))
}

fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let Grid(v) = parse_list(s)?;
    v.try_into().map_err(|_| "expected three comma-separated values".to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Formats like C's `%.12g`, always with a dot decimal separator.
pub fn format_g(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if !(-4..DIGITS).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(format_g).unwrap_or_default()
}

/// A fully validated model family with the scanned parameter.
struct Family {
    kind: ModelKind,
    j: f64,
    /// Δ values (xxz, general) or D values (dm).
    values: Vec<f64>,
    dvec: [f64; 3],
    preset: Option<Preset>,
}

impl Family {
    fn from_args(args: &ModelArgs) -> Result<Self, CliError> {
        if let Some(preset) = args.preset {
            let (kind, values) = match preset {
                Preset::Fig1 => (ModelKind::Xxz, (0..=40).map(|i| (i - 10) as f64 / 10.0).collect()),
                Preset::Fig2a => (ModelKind::Xxz, PRESET_VALUES.to_vec()),
                Preset::Fig2b => (ModelKind::Dm, PRESET_VALUES.to_vec()),
            };
            return Ok(Family { kind, j: 1.0, values, dvec: [0.0; 3], preset: Some(preset) });
        }
        let kind = args.model.ok_or_else(|| usage("--model or --preset is required"))?;
        let j = args.j.unwrap_or(1.0);
        if !j.is_finite() {
            return Err(usage("--J must be finite"));
        }
        let values = match kind {
            ModelKind::Xxz => {
                reject(args.d.is_some(), "--D applies only to --model dm")?;
                reject(args.dvec.is_some(), "--Dvec applies only to --model general")?;
                args.delta.clone().ok_or_else(|| usage("--model xxz needs --delta"))?.0
            }
            ModelKind::Dm => {
                reject(args.delta.is_some(), "--delta does not apply to --model dm")?;
                reject(args.dvec.is_some(), "--Dvec applies only to --model general")?;
                args.d.clone().ok_or_else(|| usage("--model dm needs --D"))?.0
            }
            ModelKind::General => {
                reject(args.d.is_some(), "--model general takes --Dvec, not --D")?;
                args.delta.clone().map(|g| g.0).unwrap_or_else(|| vec![0.0])
            }
        };
        Ok(Family { kind, j, values, dvec: args.dvec.unwrap_or([0.0; 3]), preset: None })
    }

    fn param_name(&self) -> &'static str {
        match self.kind {
            ModelKind::Dm => "D",
            _ => "delta",
        }
    }

    fn model(&self, value: f64) -> crate::Result<ModelParams> {
        Ok(match self.kind {
            ModelKind::Xxz => XXZParams::new(self.j, value)?.into(),
            ModelKind::Dm => DMParams::new(self.j, value)?.into(),
            ModelKind::General => GeneralHeisenbergDMParams::new(self.j, value, self.dvec)?.into(),
        })
    }

    fn resolve_method(&self, requested: Option<Method>) -> Result<Method, CliError> {
        match (self.kind, requested) {
            (ModelKind::General, None) => Ok(Method::Numeric),
            (ModelKind::General, Some(Method::Numeric)) => Ok(Method::Numeric),
            (ModelKind::General, Some(_)) => Err(usage("--model general has no closed form; use --method numeric")),
            (_, m) => Ok(m.unwrap_or(Method::Both)),
        }
    }

    fn zero_proxy(&self) -> f64 {
        ZERO_T_PROXY * self.j.abs()
    }

    fn metadata(&self, command: &str, method: Option<Method>) -> Vec<String> {
        let mut lines = vec![
            format!("thermoent {}", env!("CARGO_PKG_VERSION")),
            format!("command: {command}"),
            format!("model: {}", format!("{:?}", self.kind).to_lowercase()),
            format!("J: {}", format_g(self.j)),
            format!("{}: {}", self.param_name(), join(&self.values)),
        ];
        if self.kind == ModelKind::General {
            lines.push(format!("Dvec: {}", join(&self.dvec)));
        }
        if let Some(m) = method {
            lines.push(format!("method: {}", format!("{m:?}").to_lowercase()));
        }
        match self.preset {
            Some(Preset::Fig1) => lines.push("preset: fig1 (delta grid -1..3 in steps of 0.1)".into()),
            Some(p @ (Preset::Fig2a | Preset::Fig2b)) => lines.push(format!(
                "preset: {} ({} values 0, 0.5, 1, 2 and T grid [0, 4] with 81 steps are a tool choice)",
                format!("{p:?}").to_lowercase(),
                self.param_name()
            )),
            None => {}
        }
        lines
    }
}

fn reject(cond: bool, msg: &str) -> Result<(), CliError> {
    if cond {
        Err(usage(msg))
    } else {
        Ok(())
    }
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| format_g(*v)).collect::<Vec<_>>().join(",")
}

struct Table {
    meta: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn write(&self, w: &mut dyn Write) -> io::Result<()> {
        for line in &self.meta {
            writeln!(w, "# {line}")?;
        }
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Maps a requested temperature to the one actually evaluated.
fn effective_t(requested: f64, proxy: f64) -> Result<(f64, bool), CliError> {
    if !requested.is_finite() || requested < 0.0 {
        return Err(usage(format!("temperature must be finite and non-negative, got {requested}")));
    }
    if requested == 0.0 {
        Ok((proxy, true))
    } else {
        Ok((requested, false))
    }
}

fn proxy_note(family: &Family, used: bool) -> String {
    let proxy = format_g(family.zero_proxy());
    if used {
        format!("T=0 proxy: requested T = 0 evaluated at T = 1e-4*|J| = {proxy}")
    } else {
        format!("T=0 proxy: a requested T = 0 would be evaluated at T = 1e-4*|J| = {proxy} (not used)")
    }
}

struct Point {
    closed: Option<f64>,
    numeric: Option<f64>,
}

impl Point {
    fn diff(&self) -> Option<f64> {
        Some((self.closed? - self.numeric?).abs())
    }
}

fn evaluate(model: &ModelParams, t: f64, method: Method) -> Result<Point, CliError> {
    let t = Temperature::new(t)?;
    let closed = match method {
        Method::Numeric => None,
        _ => Some(closed_concurrence(model, t)?),
    };
    let numeric = match method {
        Method::Closed => None,
        _ => Some(numeric_concurrence(model, t)?.value),
    };
    Ok(Point { closed, numeric })
}

/// Table plus the largest closed/numeric difference seen, if any was computed.
type Evaluated = (Table, Option<f64>);

fn cmd_concurrence(model: &ModelArgs, t: f64, eval: &EvalArgs) -> Result<Evaluated, CliError> {
    reject(model.preset.is_some(), "presets apply to sweep and critical")?;
    let family = Family::from_args(model)?;
    reject(family.values.len() != 1, "concurrence takes a single parameter value")?;
    let method = family.resolve_method(eval.method)?;
    let (t, used_proxy) = effective_t(t, family.zero_proxy())?;

    let point = evaluate(&family.model(family.values[0])?, t, method)?;
    let mut meta = family.metadata("concurrence", Some(method));
    meta.push(proxy_note(&family, used_proxy));
    let table = Table {
        meta,
        header: ["T", "C_closed", "C_numeric", "abs_diff"].map(String::from).to_vec(),
        rows: vec![vec![format_g(t), cell(point.closed), cell(point.numeric), cell(point.diff())]],
    };
    Ok((table, point.diff()))
}

fn cmd_sweep(
    model: &ModelArgs,
    tmin: Option<f64>,
    tmax: Option<f64>,
    steps: Option<usize>,
    eval: &EvalArgs,
) -> Result<Evaluated, CliError> {
    let family = Family::from_args(model)?;
    reject(family.preset == Some(Preset::Fig1), "preset fig1 belongs to the critical command")?;
    let method = family.resolve_method(eval.method)?;

    let from_preset = family.preset.is_some();
    let tmin = tmin.or(from_preset.then_some(0.0)).ok_or_else(|| usage("--tmin is required"))?;
    let tmax = tmax.or(from_preset.then_some(PRESET_TMAX)).ok_or_else(|| usage("--tmax is required"))?;
    let steps = steps.or(from_preset.then_some(PRESET_STEPS)).ok_or_else(|| usage("--steps is required"))?;
    reject(steps < 2, "--steps must be at least 2")?;
    reject(!tmin.is_finite() || !tmax.is_finite(), "temperature bounds must be finite")?;
    reject(tmin < 0.0, "--tmin must be non-negative")?;
    reject(tmin >= tmax, "--tmin must be smaller than --tmax")?;

    let models = family.values.iter().map(|&v| family.model(v)).collect::<crate::Result<Vec<_>>>()?;
    let mut header = vec!["T".to_string()];
    for v in &family.values {
        header.push(format!("C({}={})", family.param_name(), format_g(*v)));
    }
    if method == Method::Both {
        header.push("max_abs_diff".into());
    }

    let mut rows = Vec::with_capacity(steps);
    let mut worst: Option<f64> = None;
    let mut used_proxy = false;
    for i in 0..steps {
        let requested = tmin + (tmax - tmin) * i as f64 / (steps - 1) as f64;
        let (t, proxy) = effective_t(requested, family.zero_proxy())?;
        used_proxy |= proxy;
        let mut row = vec![format_g(t)];
        let mut row_diff: Option<f64> = None;
        for m in &models {
            let p = evaluate(m, t, method)?;
            row.push(cell(p.closed.or(p.numeric)));
            if let Some(d) = p.diff() {
                row_diff = Some(row_diff.map_or(d, |r| r.max(d)));
            }
        }
        if method == Method::Both {
            row.push(cell(row_diff));
        }
        if let Some(d) = row_diff {
            worst = Some(worst.map_or(d, |w| w.max(d)));
        }
        rows.push(row);
    }

    let mut meta = family.metadata("sweep", Some(method));
    meta.push(format!("T grid: {} to {} in {steps} steps", format_g(tmin), format_g(tmax)));
    meta.push(proxy_note(&family, used_proxy));
    Ok((Table { meta, header, rows }, worst))
}

fn tc_cell(r: &TcResult) -> String {
    cell(r.tc)
}

fn cmd_critical(model: &ModelArgs) -> Result<Table, CliError> {
    let family = Family::from_args(model)?;
    reject(
        matches!(family.preset, Some(Preset::Fig2a | Preset::Fig2b)),
        "presets fig2a and fig2b belong to the sweep command",
    )?;
    let meta = family.metadata("critical", None);
    match family.kind {
        ModelKind::Xxz => {
            let j = family.j.abs();
            let afm = tc_phase_curve(Phase::Antiferromagnetic, &family.values, j);
            let fm = tc_phase_curve(Phase::Ferromagnetic, &family.values, -j);
            let mut rows = Vec::with_capacity(afm.len());
            for ((delta, a), (_, f)) in afm.into_iter().zip(fm) {
                rows.push(vec![format_g(delta), tc_cell(&a?), tc_cell(&f?)]);
            }
            let header = ["delta", "Tc_AFM", "Tc_FM"].map(String::from).to_vec();
            Ok(Table { meta, header, rows })
        }
        ModelKind::Dm => {
            let mut rows = Vec::with_capacity(family.values.len());
            for &d in &family.values {
                rows.push(vec![format_g(d), tc_cell(&tc_dm(&DMParams::new(family.j, d)?)?)]);
            }
            Ok(Table { meta, header: vec!["D".into(), "Tc".into()], rows })
        }
        ModelKind::General => Err(usage("critical supports --model xxz and --model dm")),
    }
}

fn emit(table: &Table, out: Option<&str>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(&mut w)?;
            w.flush()?;
        }
        None => table.write(stdout)?,
    }
    Ok(())
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (table, worst, eval) = match &cli.command {
        Command::Concurrence { model, t, eval } => {
            let (table, worst) = cmd_concurrence(model, *t, eval)?;
            (table, worst, Some(eval))
        }
        Command::Sweep { model, tmin, tmax, steps, eval } => {
            let (table, worst) = cmd_sweep(model, *tmin, *tmax, *steps, eval)?;
            (table, worst, Some(eval))
        }
        Command::Critical { model, out } => {
            return emit(&cmd_critical(model)?, out.as_deref(), stdout);
        }
    };
    let eval = eval.unwrap();
    if eval.self_check && worst.is_none() {
        return Err(usage("--self-check needs --method both"));
    }
    emit(&table, eval.out.as_deref(), stdout)?;
    match worst {
        Some(w) if eval.self_check && w > SELF_CHECK_TOL => Err(CliError::Compute(format!(
            "self-check failed: max |C_closed - C_numeric| = {w:e} exceeds {SELF_CHECK_TOL:e}"
        ))),
        _ => Ok(()),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(CliError::Compute(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

pub fn main() -> ExitCode {
    let code = run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
