//! Command-line front end: `verify`, `radius`, `sample`, `plot`, `scan`.
//!
//! JSON goes to standard output (or `--out`), diagnostics to standard error.
//! Exit codes: 0 success, 1 failed check or I/O error, 2 usage error,
//! 3 candidate counterexample found by `scan`.

pub mod report;
pub mod svg;

use std::fmt;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sections::radius::{criterion_radius, Criterion, DEFAULT_TOL};
use sections::verify::{self, VerifyConfig};
use sections::zoo::{self, HerglotzSpec, GENERATOR_NAME};
use sections::TruncatedSeries;
use serde::Serialize;

pub use report::ReportFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CANDIDATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sections", version, about = "Radius problems for partial sums of analytic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every fixed constant and run the randomized Re s_n' suite.
    Verify(VerifyArgs),
    /// Radius of a criterion for one partial sum.
    Radius(RadiusArgs),
    /// Draw members of the class F as JSON specs.
    Sample(SampleArgs),
    /// SVG images of |z| < r under (1 - z)^-3.
    Plot(PlotArgs),
    /// Starlikeness radius scans.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Bisection tolerance for radius checks.
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub atoms: u64,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(2..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    F0,
    Koebe,
    HalfPlane,
    SpecFile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    ReDeriv,
    Convex,
    Starlike,
    LocalUnivalence,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::ReDeriv => Criterion::ReDeriv,
            CriterionArg::Convex => Criterion::Convexity,
            CriterionArg::Starlike => Criterion::Starlikeness,
            CriterionArg::LocalUnivalence => Criterion::LocalUnivalence,
        }
    }
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[arg(long, value_enum)]
    pub function: FunctionArg,
    /// JSON file with one spec, or a `sample` output (see `--spec-index`).
    #[arg(long, required_if_eq("function", "spec-file"))]
    pub spec: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub spec_index: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub section: u64,
    #[arg(long, value_enum)]
    pub criterion: CriterionArg,
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub atoms: u64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    CubeKernel,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, value_enum, default_value_t = MapArg::CubeKernel)]
    pub map: MapArg,
    /// Comma-separated radii in (0, 1); fractions such as 1/3 are accepted.
    #[arg(long = "r", value_delimiter = ',', value_parser = parse_unit_radius, default_value = "1/3,1/2,3/4,4/5")]
    pub radii: Vec<f64>,
    #[arg(long, default_value = "figs")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 2048, value_parser = clap::value_parser!(u64).range(2..))]
    pub samples: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Conjecture2,
    Classical,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub target: TargetArg,
    /// Inclusive range `a..b`; defaults to 2..30 (conjecture2) or 5..40 (classical).
    #[arg(long, value_parser = parse_sections)]
    pub sections: Option<SectionRange>,
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub atoms: u64,
    #[arg(long, default_value_t = 11)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionRange {
    pub start: usize,
    pub end: usize,
}

impl SectionRange {
    pub fn range(self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

pub fn parse_sections(s: &str) -> Result<SectionRange, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let start: usize = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let end: usize = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if start < 2 || end < start {
        return Err(format!("range must satisfy 2 <= a <= b, got {start}..{end}"));
    }
    Ok(SectionRange { start, end })
}

/// A decimal or a fraction `p/q`, strictly inside (0, 1).
pub fn parse_unit_radius(s: &str) -> Result<f64, String> {
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            let q: f64 = q.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
            p / q
        }
        None => s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?,
    };
    if r > 0.0 && r < 1.0 {
        Ok(r)
    } else {
        Err(format!("radius must lie in (0, 1), got {s}"))
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    if (1e-12..1.0).contains(&t) {
        Ok(t)
    } else {
        Err(format!("tolerance must lie in [1e-12, 1), got {s}"))
    }
}

/// Bad input discovered after argument parsing; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Exit code for an error returned by [`run`].
pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<UsageError>().is_some() {
        EXIT_USAGE
    } else {
        EXIT_FAILED
    }
}

/// Runs one command, writing JSON to `stdout` and diagnostics to `stderr`.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Verify(a) => cmd_verify(&a, stdout, stderr),
        Command::Radius(a) => cmd_radius(&a, stdout),
        Command::Sample(a) => cmd_sample(&a, stdout),
        Command::Plot(a) => cmd_plot(&a, stdout),
        Command::Scan(a) => cmd_scan(&a, stdout, stderr),
    }
}

fn report_failures(file: &ReportFile, stderr: &mut dyn Write) -> anyhow::Result<()> {
    for item in file.report.failures() {
        writeln!(
            stderr,
            "FAIL {}: computed {:e}, expected {:?}, tolerance {:e}",
            item.name, item.computed, item.expected, item.tolerance
        )?;
    }
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<i32> {
    let cfg = VerifyConfig {
        count: a.count as usize,
        atom_count: a.atoms as usize,
        n_max: a.n_max as usize,
        seed: a.seed,
        tol: a.tol,
    };
    let file = ReportFile::new(verify::verify_all(&cfg)?);
    file.emit(a.out.as_deref(), stdout)?;
    report_failures(&file, stderr)?;
    let passed = file.report.passed();
    writeln!(
        stderr,
        "verify: {} items, {}",
        file.report.items.len(),
        if passed { "all passed" } else { "FAILURES" }
    )?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

/// JSON line printed by `radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct RadiusLine {
    pub radius: f64,
    pub witness_theta: f64,
    pub clamped: bool,
}

/// The partial sum selected by `radius` flags.
pub fn selected_section(a: &RadiusArgs) -> anyhow::Result<TruncatedSeries> {
    let n = a.section as usize;
    let f = match a.function {
        FunctionArg::F0 => zoo::f0(n),
        FunctionArg::Koebe => zoo::koebe(n),
        FunctionArg::HalfPlane => zoo::half_plane(n),
        FunctionArg::SpecFile => {
            let path = a.spec.as_deref().ok_or_else(|| UsageError("--spec is required".into()))?;
            read_spec(path, a.spec_index)?.synthesize(n)?
        }
    };
    Ok(f.section(n)?)
}

/// Accepts a single spec object or a `sample` file with a `specs` array.
pub fn read_spec(path: &Path, index: usize) -> anyhow::Result<HerglotzSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("read {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parse {}", path.display()))?;
    let spec = match value.get("specs") {
        Some(specs) => specs
            .get(index)
            .cloned()
            .ok_or_else(|| UsageError(format!("{} has no spec at index {index}", path.display())))?,
        None => value,
    };
    serde_json::from_value(spec).map_err(|e| UsageError(format!("invalid spec in {}: {e}", path.display())).into())
}

pub fn cmd_radius(a: &RadiusArgs, stdout: &mut dyn Write) -> anyhow::Result<i32> {
    let s = selected_section(a)?;
    let r = criterion_radius(&s, a.criterion.into(), a.tol)?;
    let line = RadiusLine {
        radius: r.radius,
        witness_theta: r.witness.argmin_theta,
        clamped: r.clamped,
    };
    writeln!(stdout, "{}", serde_json::to_string(&line)?)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct SampleFile {
    pub generator_name: String,
    pub seed: u64,
    pub atom_count: usize,
    pub specs: Vec<HerglotzSpec>,
}

pub fn cmd_sample(a: &SampleArgs, stdout: &mut dyn Write) -> anyhow::Result<i32> {
    let file = SampleFile {
        generator_name: GENERATOR_NAME.to_owned(),
        seed: a.seed,
        atom_count: a.atoms as usize,
        specs: zoo::sample_specs(a.count as usize, a.atoms as usize, a.seed),
    };
    let json = serde_json::to_string_pretty(&file)?;
    match &a.out {
        Some(p) => fs::write(p, json + "\n").with_context(|| format!("write {}", p.display()))?,
        None => writeln!(stdout, "{json}")?,
    }
    Ok(EXIT_OK)
}

/// One entry of the JSON printed by `plot`.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct PlotEntry {
    pub r: f64,
    pub path: PathBuf,
    /// Leftmost point of the curve, refined on the exact parametrization.
    pub min_re: f64,
    pub theta: f64,
}

pub fn plot_file_name(r: f64) -> String {
    format!("cube-kernel-r{r:.4}.svg")
}

pub fn cmd_plot(a: &PlotArgs, stdout: &mut dyn Write) -> anyhow::Result<i32> {
    let MapArg::CubeKernel = a.map;
    fs::create_dir_all(&a.out).with_context(|| format!("create {}", a.out.display()))?;
    let samples = a.samples as usize;
    let mut entries = Vec::with_capacity(a.radii.len());
    for &r in &a.radii {
        let curve = verify::figure1_curves(r, samples).map_err(|e| UsageError(e.to_string()))?;
        let (min_re, theta) = verify::figure1_min_real(r, samples)?;
        let path = a.out.join(plot_file_name(r));
        let title = format!("Image of |z| < {r} under (1 - z)^-3");
        fs::write(&path, svg::curve_document(&curve, &title)).with_context(|| format!("write {}", path.display()))?;
        entries.push(PlotEntry { r, path, min_re, theta });
    }
    writeln!(stdout, "{}", serde_json::to_string_pretty(&entries)?)?;
    Ok(EXIT_OK)
}

pub fn cmd_scan(a: &ScanArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<i32> {
    let report = match a.target {
        TargetArg::Conjecture2 => {
            let range = a.sections.map_or(2..=30, SectionRange::range);
            verify::conjecture2_scan(a.count as usize, a.atoms as usize, range, a.seed)?
        }
        TargetArg::Classical => {
            let range = a.sections.map_or(5..=40, SectionRange::range);
            if *range.start() < 5 {
                return Err(UsageError("the classical scan needs sections starting at 5 or later".into()).into());
            }
            verify::classical_radius_scan(*range.start(), *range.end())?
        }
    };
    let file = ReportFile::new(report);
    file.emit(a.out.as_deref(), stdout)?;
    if file.report.passed() {
        writeln!(stderr, "scan: no counterexample among {} items", file.report.items.len())?;
        Ok(EXIT_OK)
    } else {
        report_failures(&file, stderr)?;
        writeln!(stderr, "scan: candidate counterexample, witness recorded in the report")?;
        Ok(EXIT_CANDIDATE)
    }
}
