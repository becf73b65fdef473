//! `diracpack`: construct localized Dirac states, sample them to data files,
//! and run the verification suites from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 I/O error. Stdout carries a one-line summary per run; anything
//! diagnostic goes to stderr. Output files are written atomically (temp file
//! in the same directory, then rename).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use diracpack_core::error::Error as CoreError;
use diracpack_core::operators::{
    construct_2d_auto, eigen_residual_1d, eigen_residual_2d, radial_system_residuals_3d, Grid1D,
    Grid2D, RadialGrid,
};
use diracpack_core::spin_algebra::AngularMomentum;
use diracpack_core::states::{
    construct_1d, construct_2d, construct_3d, AmpMode, Branch, ClosedFormState, PhysParams, Spin,
};
use diracpack_core::verify::{
    names, tolerance, verify_state, Profile, RunMode, StateRequest, VerificationReport,
};

/// Angular sampling of the 3D tables: polar nodes per radius.
const POLAR_NODES: usize = 17;
/// Angular sampling of the 3D tables: azimuthal nodes per polar angle.
const AZIMUTHAL_NODES: usize = 17;

#[derive(Parser)]
#[command(
    name = "diracpack",
    version,
    about = "Localized eigenstates of the wave-packing Dirac equation",
    long_about = "Constructs the closed-form localized eigenstates in one, two, and three \
                  dimensions, samples them to CSV/JSON tables, and runs the numerical \
                  verification suites. Defaults: hbar = c = 1, q = 1, profile fast."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample a state on a grid and write the table to a file
    Construct(ConstructArgs),
    /// Run the verification suite for one state and write a JSON report
    Verify(VerifyArgs),
    /// Tabulate energy and eigen-residual over lists of k and q
    Sweep(SweepArgs),
    /// Re-validate a previously written verification report
    CheckReport(CheckReportArgs),
}

/// Flags shared by every state-building command.
#[derive(Args)]
struct BaseArgs {
    /// Spatial dimension of the state
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    dim: u8,
    /// Rest mass (the 2D closed form requires 0)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    mass: f64,
    /// Reduced Planck constant
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    hbar: f64,
    /// Speed of light
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    c: f64,
    /// Energy branch: + or -
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    branch: String,
    /// Spin projection of 1D states: up or down
    #[arg(long, default_value = "up")]
    spin: String,
    /// Orbital index of 2D states
    #[arg(long, default_value_t = 0)]
    m_ang: u32,
    /// Total angular momentum j of 3D states: a half-integer such as 1/2 or 1.5
    #[arg(long, default_value = "1/2")]
    j: String,
    /// Projection m_j of 3D states: a half-integer with |m_j| <= j
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    mj: String,
    /// Amplitude convention: paper (flat), derived (eigenvalue ratios), auto (2D fit)
    #[arg(long, default_value = "derived")]
    mode: String,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// Carrier wave number
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    /// Envelope coupling strength
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    q: f64,
    /// Axis nodes, odd and >= 65 (1D/2D); radial nodes >= 65 (3D).
    /// Defaults: 1001 (1D), 201 (2D and 3D)
    #[arg(long)]
    grid_points: Option<usize>,
    /// Table format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output path (default state.csv or state.json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// Carrier wave number
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    /// Envelope coupling strength
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    q: f64,
    /// Resolution profile: fast or strict
    #[arg(long, default_value = "fast")]
    profile: String,
    /// Report path (default report.json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// Comma-separated wave numbers, e.g. 0,1,5
    #[arg(long, allow_hyphen_values = true)]
    k_list: String,
    /// Comma-separated envelope strengths, e.g. 0.1,1,10
    #[arg(long)]
    q_list: String,
    /// Resolution profile: fast or strict
    #[arg(long, default_value = "fast")]
    profile: String,
    /// Table format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output path (default sweep.csv or sweep.json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckReportArgs {
    /// Report file written by the verify command
    report: PathBuf,
}

/// A failed run, tagged by exit code class.
enum Fail {
    /// Exit 1: a verification-layer computation refused to produce a result.
    Check(String),
    /// Exit 2: bad flag values or an incoherent parameter set.
    Config(String),
    /// Exit 3: filesystem trouble.
    Io(String),
}

impl From<CoreError> for Fail {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Verify(_) => Fail::Check(e.to_string()),
            _ => Fail::Config(e.to_string()),
        }
    }
}

/// A completed run: the stdout summary plus the exit code it earned.
struct Done {
    summary: String,
    code: u8,
}

impl Done {
    fn ok(summary: String) -> Self {
        Done { summary, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Cmd::Construct(args) => run_construct(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Sweep(args) => run_sweep(args),
        Cmd::CheckReport(args) => run_check_report(args),
    };
    match outcome {
        Ok(done) => {
            println!("{}", done.summary);
            ExitCode::from(done.code)
        }
        Err(Fail::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Json,
}

impl TableFormat {
    fn parse(s: &str) -> Result<Self, Fail> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Fail::Config(format!("unknown format '{other}', expected csv or json"))),
        }
    }

    fn extension(self) -> &'static str {
        match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        }
    }
}

impl BaseArgs {
    fn branch(&self) -> Result<Branch, Fail> {
        Ok(Branch::parse_token(&self.branch)?)
    }

    fn spin(&self) -> Result<Spin, Fail> {
        Ok(Spin::parse_token(&self.spin)?)
    }

    fn run_mode(&self) -> Result<RunMode, Fail> {
        Ok(RunMode::parse_token(&self.mode)?)
    }

    fn jm(&self) -> Result<AngularMomentum, Fail> {
        let two_j: u32 = parse_half_integer("j", &self.j)?
            .try_into()
            .map_err(|_| Fail::Config(format!("--j {}: j must be a positive half-integer", self.j)))?;
        let two_m: i32 = parse_half_integer("mj", &self.mj)?
            .try_into()
            .map_err(|_| Fail::Config(format!("--mj {}: out of range", self.mj)))?;
        Ok(AngularMomentum::new(two_j, two_m)?)
    }

    fn request(&self, k: f64) -> Result<StateRequest, Fail> {
        Ok(match self.dim {
            1 => StateRequest::OneD { k, spin: self.spin()?, branch: self.branch()? },
            2 => StateRequest::TwoD { k, m_ang: self.m_ang, branch: self.branch()? },
            3 => StateRequest::ThreeD { k, jm: self.jm()?, branch: self.branch()? },
            d => return Err(Fail::Config(format!("dim = {d} is not supported"))),
        })
    }

    fn params(&self, q: f64) -> Result<PhysParams, Fail> {
        Ok(PhysParams::new(self.hbar, self.c, q, self.mass)?)
    }

    /// Builds the state the table and sweep commands sample. Auto mode fits
    /// the planar lower amplitude on `fit_n` nodes per side.
    fn build_state(&self, q: f64, k: f64, fit_n: usize) -> Result<ClosedFormState, Fail> {
        let params = self.params(q)?;
        let mode = self.run_mode()?;
        let amp = match mode {
            RunMode::Unit => AmpMode::Unit,
            RunMode::Exact => AmpMode::Exact,
            RunMode::Auto => {
                if self.dim != 2 {
                    return Err(Fail::Config(
                        "the auto amplitude fit applies to planar states only".into(),
                    ));
                }
                let grid = Grid2D::covering(&params, fit_n)?;
                let (state, _) = construct_2d_auto(&params, k, self.m_ang, self.branch()?, &grid)?;
                return Ok(state);
            }
        };
        Ok(match self.dim {
            1 => construct_1d(params, k, self.spin()?, self.branch()?, amp)?,
            2 => construct_2d(params, k, self.m_ang, self.branch()?, amp)?,
            _ => construct_3d(params, k, self.jm()?, self.branch()?, amp)?,
        })
    }
}

/// Parses "3/2", "1.5", or "-0.5" into twice the value as an integer.
fn parse_half_integer(flag: &str, s: &str) -> Result<i64, Fail> {
    let t = s.trim();
    let bad = || Fail::Config(format!("--{flag} {t}: expected a half-integer such as 1/2 or 1.5"));
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad())?;
        match den.trim() {
            "2" => Ok(n),
            "1" => n.checked_mul(2).ok_or_else(bad),
            _ => Err(Fail::Config(format!("--{flag} {t}: denominator must be 1 or 2"))),
        }
    } else {
        let v: f64 = t.parse().map_err(|_| bad())?;
        let doubled = 2.0 * v;
        let rounded = doubled.round();
        if !rounded.is_finite() || (doubled - rounded).abs() > 1e-9 || rounded.abs() > 9e15 {
            return Err(bad());
        }
        Ok(rounded as i64)
    }
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<f64>, Fail> {
    let values: Vec<f64> = s
        .split(',')
        .map(|item| {
            let t = item.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Fail::Config(format!("--{flag}: '{t}' is not a finite number")))
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err(Fail::Config(format!("--{flag}: need at least one value")));
    }
    Ok(values)
}

/// Writes through a temp file in the destination directory so a crash never
/// leaves a half-written artifact behind.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Fail> {
    let mut tmp_name = path.as_os_str().to_os_string();
    tmp_name.push(".tmp");
    let tmp = PathBuf::from(tmp_name);
    fs::write(&tmp, contents)
        .map_err(|e| Fail::Io(format!("writing {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path)
        .map_err(|e| Fail::Io(format!("renaming {} to {}: {e}", tmp.display(), path.display())))
}

/// 17 significant digits, enough to reproduce the f64 bit pattern.
fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_table(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::with_capacity(64 + rows.len() * header.len() * 26);
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v:.16e}");
        }
        out.push('\n');
    }
    out
}

fn json_table(header: &[&str], rows: &[Vec<f64>]) -> Result<String, Fail> {
    let value = serde_json::json!({ "columns": header, "rows": rows });
    serde_json::to_string(&value).map_err(|e| Fail::Check(format!("table serialization: {e}")))
}

fn run_construct(args: ConstructArgs) -> Result<Done, Fail> {
    let format = TableFormat::parse(&args.format)?;
    let default_n = if args.base.dim == 1 { 1001 } else { 201 };
    let n = args.grid_points.unwrap_or(default_n);
    let state = args.base.build_state(args.q, args.k, n)?;
    let params = *state.params();

    let (header, rows): (&[&str], Vec<Vec<f64>>) = match args.base.dim {
        1 => {
            let grid = Grid1D::covering(&params, n)?;
            let mut rows = Vec::with_capacity(grid.n());
            for i in 0..grid.n() {
                let z = grid.node(i);
                let psi = state.eval_1d(z)?;
                let mut row = Vec::with_capacity(10);
                row.push(z);
                for comp in psi {
                    row.push(comp.re);
                    row.push(comp.im);
                }
                row.push(psi.iter().map(|comp| comp.norm_sqr()).sum());
                rows.push(row);
            }
            (
                &[
                    "z", "psi1_re", "psi1_im", "psi2_re", "psi2_im", "psi3_re", "psi3_im",
                    "psi4_re", "psi4_im", "density",
                ],
                rows,
            )
        }
        2 => {
            let grid = Grid2D::covering(&params, n)?;
            let mut rows = Vec::with_capacity(grid.n() * grid.n());
            for iy in 0..grid.n() {
                let y = grid.node(iy);
                for ix in 0..grid.n() {
                    let x = grid.node(ix);
                    let psi = state.eval_2d(x, y)?;
                    let mut row = Vec::with_capacity(7);
                    row.push(x);
                    row.push(y);
                    for comp in psi {
                        row.push(comp.re);
                        row.push(comp.im);
                    }
                    row.push(psi.iter().map(|comp| comp.norm_sqr()).sum());
                    rows.push(row);
                }
            }
            (&["x", "y", "psi1_re", "psi1_im", "psi2_re", "psi2_im", "density"], rows)
        }
        _ => {
            let grid = RadialGrid::covering(&params, n)?;
            let mut rows = Vec::with_capacity(grid.n() * POLAR_NODES * AZIMUTHAL_NODES);
            for i in 0..grid.n() {
                let r = grid.node(i);
                for it in 0..POLAR_NODES {
                    let theta = std::f64::consts::PI * (it as f64 + 0.5) / POLAR_NODES as f64;
                    for ip in 0..AZIMUTHAL_NODES {
                        let phi =
                            2.0 * std::f64::consts::PI * ip as f64 / AZIMUTHAL_NODES as f64;
                        let psi = state.eval_3d(r, theta, phi)?;
                        let mut row = Vec::with_capacity(12);
                        row.push(r);
                        row.push(theta);
                        row.push(phi);
                        for comp in psi {
                            row.push(comp.re);
                            row.push(comp.im);
                        }
                        row.push(psi.iter().map(|comp| comp.norm_sqr()).sum());
                        rows.push(row);
                    }
                }
            }
            (
                &[
                    "r", "theta", "phi", "psi1_re", "psi1_im", "psi2_re", "psi2_im", "psi3_re",
                    "psi3_im", "psi4_re", "psi4_im", "density",
                ],
                rows,
            )
        }
    };

    let contents = match format {
        TableFormat::Csv => csv_table(header, &rows),
        TableFormat::Json => json_table(header, &rows)?,
    };
    let out = args
        .out
        .unwrap_or_else(|| PathBuf::from(format!("state.{}", format.extension())));
    write_atomic(&out, &contents)?;
    Ok(Done::ok(format!(
        "construct: {}D {} state, {} rows -> {}",
        args.base.dim,
        args.base.mode,
        rows.len(),
        out.display()
    )))
}

fn run_verify(args: VerifyArgs) -> Result<Done, Fail> {
    let params = args.base.params(args.q)?;
    let request = args.base.request(args.k)?;
    let mode = args.base.run_mode()?;
    let profile = Profile::parse_token(&args.profile)?;
    let report = verify_state(&params, &request, mode, profile)?;
    let out = args.out.unwrap_or_else(|| PathBuf::from("report.json"));
    write_atomic(&out, &report.to_json()?)?;
    let informative = report.checks.iter().filter(|c| c.informative).count();
    let verdict = if report.overall { "pass" } else { "FAIL" };
    Ok(Done {
        summary: format!(
            "verify: {verdict} ({} checks, {informative} informative, {} notes) -> {}",
            report.checks.len(),
            report.paper_notes.len(),
            out.display()
        ),
        code: u8::from(!report.overall),
    })
}

struct SweepRow {
    k: f64,
    q: f64,
    energy: f64,
    residual: f64,
    pass: bool,
}

/// Energy and the strict residual that adjudicates one sweep cell: the 1D
/// eigen-residual, the 2D eigen-residual, or the worse of the two coupled
/// 3D radial residuals.
fn sweep_cell(
    base: &BaseArgs,
    q: f64,
    k: f64,
    n: usize,
) -> Result<(f64, f64), Fail> {
    let state = base.build_state(q, k, n)?;
    let params = *state.params();
    let residual = match base.dim {
        1 => eigen_residual_1d(&state, &Grid1D::covering(&params, n)?)?,
        2 => eigen_residual_2d(&state, &Grid2D::covering(&params, n)?)?,
        _ => {
            let (upper, lower) = radial_system_residuals_3d(&state, &RadialGrid::covering(&params, n)?)?;
            upper.max(lower)
        }
    };
    Ok((state.energy(), residual))
}

fn run_sweep(args: SweepArgs) -> Result<Done, Fail> {
    let format = TableFormat::parse(&args.format)?;
    let profile = Profile::parse_token(&args.profile)?;
    let ks = parse_list("k-list", &args.k_list)?;
    let qs = parse_list("q-list", &args.q_list)?;

    let (n, tol_name) = match (args.base.dim, profile) {
        (1, Profile::Fast) => (1001, names::EIGEN_RESIDUAL_1D),
        (1, Profile::Strict) => (4001, names::EIGEN_RESIDUAL_1D),
        (2, Profile::Fast) => (321, names::EIGEN_RESIDUAL_2D),
        (2, Profile::Strict) => (1001, names::EIGEN_RESIDUAL_2D),
        (_, Profile::Fast) => (1001, names::RADIAL_SYSTEM_3D_UPPER),
        (_, Profile::Strict) => (8001, names::RADIAL_SYSTEM_3D_UPPER),
    };
    let tol = tolerance(profile, tol_name);

    let mut rows = Vec::with_capacity(ks.len() * qs.len());
    for &k in &ks {
        let mut energy_bits: Option<u64> = None;
        let first = rows.len();
        let mut bits_agree = true;
        for &q in &qs {
            let (energy, residual) = sweep_cell(&args.base, q, k, n)?;
            let e2 = energy * energy;
            let mc2 = args.base.mass * args.base.c * args.base.c;
            let shell = (args.base.hbar * args.base.c * k).powi(2) + mc2 * mc2;
            let scale = e2.max(shell);
            let on_shell = scale == 0.0 || (e2 - shell).abs() / scale <= 1e-12;
            match energy_bits {
                None => energy_bits = Some(energy.to_bits()),
                Some(bits) => bits_agree &= bits == energy.to_bits(),
            }
            rows.push(SweepRow { k, q, energy, residual, pass: residual <= tol && on_shell });
        }
        if !bits_agree {
            eprintln!("sweep: energy at k = {k} is not bit-identical across q");
            for row in &mut rows[first..] {
                row.pass = false;
            }
        }
    }

    let contents = match format {
        TableFormat::Csv => {
            let mut out = String::from("k,q,energy,residual,pass\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    sig17(r.k),
                    sig17(r.q),
                    sig17(r.energy),
                    sig17(r.residual),
                    r.pass
                );
            }
            out
        }
        TableFormat::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "k": r.k, "q": r.q, "energy": r.energy,
                        "residual": r.residual, "pass": r.pass,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items)
                .map_err(|e| Fail::Check(format!("table serialization: {e}")))?
        }
    };
    let out = args
        .out
        .unwrap_or_else(|| PathBuf::from(format!("sweep.{}", format.extension())));
    write_atomic(&out, &contents)?;

    let failing = rows.iter().filter(|r| !r.pass).count();
    Ok(Done {
        summary: format!("sweep: {} rows, {failing} failing -> {}", rows.len(), out.display()),
        code: u8::from(failing > 0),
    })
}

fn run_check_report(args: CheckReportArgs) -> Result<Done, Fail> {
    let text = fs::read_to_string(&args.report)
        .map_err(|e| Fail::Io(format!("reading {}: {e}", args.report.display())))?;
    let report: VerificationReport = serde_json::from_str(&text).map_err(|e| {
        Fail::Config(format!("{}: not a verification report: {e}", args.report.display()))
    })?;
    if report.schema != "1" {
        return Err(Fail::Config(format!(
            "{}: unsupported schema '{}'",
            args.report.display(),
            report.schema
        )));
    }

    let mut problems = Vec::new();
    for check in &report.checks {
        let expected = check.residual.is_finite() && check.residual <= check.tolerance;
        if expected != check.passed {
            problems.push(format!(
                "check '{}': stored passed = {} but residual {:e} against tolerance {:e} says {}",
                check.name, check.passed, check.residual, check.tolerance, expected
            ));
        }
    }
    let mut recomputed = report.clone();
    recomputed.recompute_overall();
    if recomputed.overall != report.overall {
        problems.push(format!(
            "stored overall = {} but the binding checks say {}",
            report.overall, recomputed.overall
        ));
    }

    if !problems.is_empty() {
        for p in &problems {
            eprintln!("check-report: {p}");
        }
        return Ok(Done {
            summary: format!(
                "check-report: INVALID ({} inconsistencies) <- {}",
                problems.len(),
                args.report.display()
            ),
            code: 1,
        });
    }
    let verdict = if report.overall { "pass" } else { "FAIL" };
    Ok(Done {
        summary: format!(
            "check-report: consistent, overall {verdict} ({} checks) <- {}",
            report.checks.len(),
            args.report.display()
        ),
        code: u8::from(!report.overall),
    })
}
