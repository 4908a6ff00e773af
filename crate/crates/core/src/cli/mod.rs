//! Command implementations behind the `cmc-annuli` binary.
//!
//! [`run`] takes the full argument list and two writers and returns the
//! process exit code, so every command can be driven from tests.
//!
//! Exit codes: 0 success (including any feasibility verdict), 2 invalid
//! input, 3 certified-infeasible radial solve, 4 solver non-convergence.
//!
//! CSV goes to `--out` when given, otherwise to stdout. The JSON summary of
//! `bounds` and `solve` goes to stdout when `--out` is given and to stderr
//! otherwise; `check` always prints its JSON verdict to stdout.
//!
//! `--config FILE` reads flat `key = value` lines that are spliced in ahead
//! of the explicit flags, so flags on the command line win.

mod output;
mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use output::{config_args, csv, num, parse_table, read_table};
pub use svg::render as render_svg;

use crate::error::{domain, Error, Result};
use crate::estimates::{bounding_box, dirichlet_feasibility, Annulus, OuterBoundaryData};
use crate::hyperbolic::euclidean_to_hyperbolic;
use crate::pde2d::{solve_dirichlet_2d, Field2D, PolarGrid, SolverOptions, SolverReport};
use crate::profile::{boundary_radius, sample_profile, Branch, MeanCurvature, ProfileParameter};
use crate::radial::{extremal_drops, solve_radial};
use crate::DEFAULT_TOL;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_NONCONVERGENCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "cmc-annuli",
    version,
    about = "Constant mean curvature graphs on annuli of the hyperbolic plane",
    args_override_self = true
)]
pub struct Cli {
    /// Flat key = value file whose entries act as flags (command-line flags win).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample one rotational profile: CSV `rho,height,slope`.
    Profile(ProfileArgs),
    /// Upper and lower envelopes on an annulus: CSV `rho,lower,upper` plus JSON summary.
    Bounds(BoundsArgs),
    /// Non-existence verdict for Dirichlet data: JSON.
    Check(CheckArgs),
    /// Radial or 2D Dirichlet solve.
    Solve(SolveArgs),
    /// SVG figure of the profile family or the bounding box.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    /// Mean curvature, 0 < h <= 1/2.
    #[arg(long = "h")]
    pub h: f64,
    /// Profile parameter alpha > 0.
    #[arg(long)]
    pub alpha: f64,
    /// Last radius; defaults to the boundary radius plus 3.
    #[arg(long)]
    pub rho_max: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Read radii as Euclidean disc radii.
    #[arg(long)]
    pub euclidean: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AnnulusArgs {
    /// Inner radius.
    #[arg(long)]
    pub a: f64,
    /// Outer radius.
    #[arg(long)]
    pub b: f64,
    /// Read radii as Euclidean disc radii.
    #[arg(long)]
    pub euclidean: bool,
}

impl AnnulusArgs {
    fn annulus(&self) -> Result<Annulus> {
        if self.euclidean {
            Annulus::from_euclidean(self.a, self.b)
        } else {
            Annulus::new(self.a, self.b)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[arg(long = "h")]
    pub h: f64,
    #[command(flatten)]
    pub annulus: AnnulusArgs,
    /// Minimum of the outer boundary data.
    #[arg(long = "m", default_value_t = 0.0, allow_negative_numbers = true)]
    pub min_outer: f64,
    /// Maximum of the outer boundary data.
    #[arg(long = "M", default_value_t = 0.0, allow_negative_numbers = true)]
    pub max_outer: f64,
    #[arg(long, default_value_t = 101)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(long = "h")]
    pub h: f64,
    #[command(flatten)]
    pub annulus: AnnulusArgs,
    /// Constant inner data.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "inner_file", required_unless_present = "inner_file")]
    pub inner: Option<f64>,
    /// Per-theta inner data, one value (or `theta,value`) per line.
    #[arg(long)]
    pub inner_file: Option<PathBuf>,
    /// Constant outer data.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "outer_file", required_unless_present = "outer_file")]
    pub outer: Option<f64>,
    #[arg(long)]
    pub outer_file: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long = "h")]
    pub h: f64,
    #[command(flatten)]
    pub annulus: AnnulusArgs,
    /// Constant value on the inner circle.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "inner_file")]
    pub u_a: Option<f64>,
    /// Constant value on the outer circle.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "outer_file")]
    pub u_b: Option<f64>,
    /// Per-theta inner data for `--two-d`, `n-theta` samples.
    #[arg(long, requires = "two_d")]
    pub inner_file: Option<PathBuf>,
    /// Per-theta outer data for `--two-d`, `n-theta` samples.
    #[arg(long, requires = "two_d")]
    pub outer_file: Option<PathBuf>,
    /// Solve the full 2D problem on a polar grid.
    #[arg(long)]
    pub two_d: bool,
    #[arg(long, default_value_t = 64)]
    pub n_rho: usize,
    #[arg(long, default_value_t = 64)]
    pub n_theta: usize,
    /// Rows of the radial table.
    #[arg(long, default_value_t = 101)]
    pub n: usize,
    /// Drop tolerance (radial) or residual tolerance (2D).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 300)]
    pub max_iter: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureKind {
    /// Several members of the profile family across both branches.
    Family,
    /// Upper and lower envelopes over an annulus.
    Box,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    pub which: FigureKind,
    #[arg(long = "h")]
    pub h: f64,
    /// Comma-separated parameters for `family`; defaults span both branches.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Vec<f64>,
    #[arg(long)]
    pub rho_max: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long = "m", default_value_t = 0.0, allow_negative_numbers = true)]
    pub min_outer: f64,
    #[arg(long = "M", default_value_t = 0.0, allow_negative_numbers = true)]
    pub max_outer: f64,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub euclidean: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Curves behind a figure, kept separate from rendering so they can be checked.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub kind: FigureKind,
    pub title: String,
    pub curves: Vec<Curve>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curve {
    pub label: String,
    pub alpha: f64,
    pub branch: Branch,
    /// `(rho, height)` samples, first at the radius where the curve starts.
    pub points: Vec<(f64, f64)>,
    /// Slope at the first sample; `±inf` where the graph is vertical.
    pub start_slope: f64,
}

struct Failure {
    code: i32,
    error: Error,
    /// JSON printed to stdout alongside the error message.
    json: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let code = match &error {
            Error::Infeasible { .. } => EXIT_INFEASIBLE,
            Error::NonConvergence { .. } | Error::Quadrature { .. } | Error::Bisection { .. } => {
                EXIT_NONCONVERGENCE
            }
            _ => EXIT_INPUT,
        };
        Failure { code, error, json: None }
    }
}

type CmdResult = std::result::Result<(), Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    /// Table to `--out` or stdout.
    fn table(&mut self, path: Option<&Path>, text: &str) -> Result<()> {
        match path {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| domain(format!("cannot write {}: {e}", p.display()))),
            None => self.out.write_all(text.as_bytes()).map_err(io_error),
        }
    }

    /// Summary to stdout when the table went to a file, otherwise stderr.
    fn summary(&mut self, table_to_file: bool, json: &str) -> Result<()> {
        let w: &mut dyn Write = if table_to_file { &mut *self.out } else { &mut *self.err };
        writeln!(w, "{json}").map_err(io_error)
    }
}

fn io_error(e: std::io::Error) -> Error {
    domain(format!("write failed: {e}"))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn mean_curvature(h: f64) -> Result<MeanCurvature> {
    MeanCurvature::new(h)
}

fn radius(value: f64, euclidean: bool) -> Result<f64> {
    if euclidean {
        euclidean_to_hyperbolic(value)
    } else {
        Ok(value)
    }
}

/// Splices `--config` entries in right after the subcommand name.
fn expand_config(args: Vec<String>) -> std::result::Result<Vec<String>, String> {
    let mut rest = Vec::with_capacity(args.len());
    let mut config = None;
    let mut it = args.into_iter();
    while let Some(arg) = it.next() {
        if arg == "--config" {
            config = Some(it.next().ok_or("--config needs a file")?);
        } else if let Some(p) = arg.strip_prefix("--config=") {
            config = Some(p.to_string());
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = config else { return Ok(rest) };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let extra = config_args(&text).map_err(|e| format!("config {path}: {e}"))?;
    let at = rest.iter().skip(1).position(|a| !a.starts_with('-')).map_or(rest.len(), |p| p + 2);
    rest.splice(at..at, extra);
    Ok(rest)
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let w: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(w, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match &cli.command {
        Command::Profile(a) => cmd_profile(a, &mut io),
        Command::Bounds(a) => cmd_bounds(a, &mut io),
        Command::Check(a) => cmd_check(a, &mut io),
        Command::Solve(a) => cmd_solve(a, &mut io),
        Command::Figure(a) => cmd_figure(a, &mut io),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            if let Some(json) = f.json {
                let _ = writeln!(io.out, "{json}");
            }
            let _ = writeln!(io.err, "error: {}", f.error);
            f.code
        }
    }
}

fn cmd_profile(args: &ProfileArgs, io: &mut Io) -> CmdResult {
    let h = mean_curvature(args.h)?;
    let param = ProfileParameter::new(h, args.alpha)?;
    let rho_max = match args.rho_max {
        Some(r) => radius(r, args.euclidean)?,
        None => boundary_radius(h, param) + 3.0,
    };
    let rows = sample_profile(h, param, rho_max, args.n, args.tol)?;
    let text = csv(
        &["rho", "height", "slope"],
        rows.iter().map(|r| vec![Some(r.rho), Some(r.height), Some(r.slope)]),
    );
    io.table(args.out.as_deref(), &text)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct BoundsSummary {
    beta: f64,
    alpha: Option<f64>,
    hole_ok: bool,
    upper_at_a: f64,
    lower_at_a: Option<f64>,
}

fn cmd_bounds(args: &BoundsArgs, io: &mut Io) -> CmdResult {
    let h = mean_curvature(args.h)?;
    let ann = args.annulus.annulus()?;
    let data = OuterBoundaryData::new(args.min_outer, args.max_outer)?;
    let bounds = bounding_box(h, ann, data, args.tol)?;
    let rows = bounds.sample(args.n)?;
    let text = csv(
        &["rho", "lower", "upper"],
        rows.iter().map(|r| vec![Some(r.rho), r.lower, Some(r.upper)]),
    );
    io.table(args.out.as_deref(), &text)?;
    let summary = BoundsSummary {
        beta: bounds.beta.alpha(),
        alpha: bounds.alpha.map(ProfileParameter::alpha),
        hole_ok: bounds.hole_ok,
        upper_at_a: bounds.upper.at_inner(),
        lower_at_a: bounds.lower.as_ref().map(|l| l.at_inner()),
    };
    io.summary(args.out.is_some(), &to_json(&summary))?;
    Ok(())
}

/// Constant or tabulated boundary data as `(min, max)`.
fn data_range(constant: Option<f64>, file: Option<&Path>) -> Result<(f64, f64)> {
    match (constant, file) {
        (Some(c), _) if c.is_finite() => Ok((c, c)),
        (Some(c), _) => Err(domain(format!("boundary value must be finite, got {c}"))),
        (None, Some(p)) => {
            let v = read_table(p)?;
            let d = OuterBoundaryData::from_samples(&v)?;
            Ok((d.min, d.max))
        }
        (None, None) => Err(domain("missing boundary data")),
    }
}

fn cmd_check(args: &CheckArgs, io: &mut Io) -> CmdResult {
    let h = mean_curvature(args.h)?;
    let ann = args.annulus.annulus()?;
    let (inner_min, inner_max) = data_range(args.inner, args.inner_file.as_deref())?;
    let (outer_min, outer_max) = data_range(args.outer, args.outer_file.as_deref())?;
    let data = OuterBoundaryData::new(outer_min, outer_max)?;
    let verdict = dirichlet_feasibility(h, ann, inner_min, inner_max, data, args.tol)?;
    writeln!(io.out, "{}", to_json(&verdict)).map_err(io_error)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct RadialSummary {
    status: &'static str,
    flux_constant: f64,
    shift: Option<f64>,
    drop: f64,
    d_min: f64,
    d_max: f64,
}

#[derive(Debug, Serialize)]
struct InfeasibleSummary {
    status: &'static str,
    requested: f64,
    d_min: f64,
    d_max: f64,
}

#[derive(Debug, Serialize)]
struct FieldSummary {
    status: &'static str,
    #[serde(flatten)]
    report: SolverReport,
}

fn cmd_solve(args: &SolveArgs, io: &mut Io) -> CmdResult {
    let h = mean_curvature(args.h)?;
    let ann = args.annulus.annulus()?;
    if args.two_d {
        return solve_2d(args, h, ann, io);
    }
    let (Some(u_a), Some(u_b)) = (args.u_a, args.u_b) else {
        return Err(domain("radial solve needs --u-a and --u-b").into());
    };
    let tol = args.tol.unwrap_or(DEFAULT_TOL);
    let sol = match solve_radial(h, ann, u_a, u_b, tol) {
        Ok(s) => s,
        Err(Error::Infeasible { requested, achievable }) => {
            let json = to_json(&InfeasibleSummary {
                status: "infeasible",
                requested,
                d_min: achievable.d_min,
                d_max: achievable.d_max,
            });
            return Err(Failure {
                code: EXIT_INFEASIBLE,
                error: Error::Infeasible { requested, achievable },
                json: Some(json),
            });
        }
        Err(e) => return Err(e.into()),
    };
    let drops = extremal_drops(h, ann, 0.1 * tol)?;
    let rows = sol.sample(args.n)?;
    let text = csv(&["rho", "u"], rows.iter().map(|&(r, u)| vec![Some(r), Some(u)]));
    io.table(args.out.as_deref(), &text)?;
    let summary = RadialSummary {
        status: "solved",
        flux_constant: sol.flux_constant(),
        shift: sol.shift(),
        drop: sol.drop(),
        d_min: drops.d_min,
        d_max: drops.d_max,
    };
    io.summary(args.out.is_some(), &to_json(&summary))?;
    Ok(())
}

fn boundary_samples(constant: Option<f64>, file: Option<&Path>, n: usize, which: &str) -> Result<Vec<f64>> {
    match (constant, file) {
        (Some(c), _) => Ok(vec![c; n]),
        (None, Some(p)) => {
            let v = read_table(p)?;
            if v.len() != n {
                return Err(domain(format!(
                    "{which} data has {} samples but --n-theta is {n}",
                    v.len()
                )));
            }
            Ok(v)
        }
        (None, None) => Err(domain(format!("missing {which} data"))),
    }
}

fn field_csv(u: &Field2D) -> String {
    let g = u.grid();
    let rows = (0..g.n_rho()).flat_map(|i| {
        (0..g.n_theta()).map(move |j| vec![Some(g.rho(i)), Some(g.theta(j)), Some(u.get(i, j))])
    });
    csv(&["rho", "theta", "u"], rows)
}

fn solve_2d(args: &SolveArgs, h: MeanCurvature, ann: Annulus, io: &mut Io) -> CmdResult {
    let grid = PolarGrid::new(ann, args.n_rho, args.n_theta)?;
    let inner = boundary_samples(args.u_a, args.inner_file.as_deref(), args.n_theta, "inner")?;
    let outer = boundary_samples(args.u_b, args.outer_file.as_deref(), args.n_theta, "outer")?;
    let opts = SolverOptions {
        tol: args.tol.unwrap_or(SolverOptions::default().tol),
        max_iter: args.max_iter,
        ..SolverOptions::default()
    };
    match solve_dirichlet_2d(h, grid, &inner, &outer, opts) {
        Ok((u, report)) => {
            io.table(args.out.as_deref(), &field_csv(&u))?;
            io.summary(args.out.is_some(), &to_json(&FieldSummary { status: "converged", report }))?;
            Ok(())
        }
        Err(Error::NonConvergence { report, field }) => {
            io.table(args.out.as_deref(), &field_csv(&field))?;
            io.summary(args.out.is_some(), &to_json(&FieldSummary { status: "not_converged", report }))?;
            Err(Failure {
                code: EXIT_NONCONVERGENCE,
                error: Error::NonConvergence { report, field },
                json: None,
            })
        }
        Err(e) => Err(e.into()),
    }
}

/// Profile family for several parameters; by default spans both branches.
pub fn family_figure(
    h: MeanCurvature,
    alphas: &[f64],
    rho_max: Option<f64>,
    n: usize,
    tol: f64,
) -> Result<FigureData> {
    let two_h = h.neck();
    let alphas: Vec<f64> = if alphas.is_empty() {
        [0.25, 0.5, 1.0, 2.0, 4.0].iter().map(|k| k * two_h).collect()
    } else {
        alphas.to_vec()
    };
    let params = alphas
        .iter()
        .map(|&a| ProfileParameter::new(h, a))
        .collect::<Result<Vec<_>>>()?;
    let rho_max = match rho_max {
        Some(r) => r,
        None => params.iter().map(|&p| boundary_radius(h, p)).fold(0.0, f64::max) + 3.0,
    };
    let mut curves = Vec::with_capacity(params.len());
    for p in params {
        let rows = sample_profile(h, p, rho_max, n, tol)?;
        curves.push(Curve {
            label: format!("α = {}", p.alpha()),
            alpha: p.alpha(),
            branch: p.branch(),
            points: rows.iter().map(|r| (r.rho, r.height)).collect(),
            start_slope: rows[0].slope,
        });
    }
    Ok(FigureData {
        kind: FigureKind::Family,
        title: format!("Rotational cmc profiles, h = {}", h.value()),
        curves,
    })
}

/// Upper and (when it exists) lower envelope over `[a, b]`.
pub fn box_figure(h: MeanCurvature, ann: Annulus, data: OuterBoundaryData, n: usize, tol: f64) -> Result<FigureData> {
    let bounds = bounding_box(h, ann, data, tol)?;
    let mut curves = Vec::new();
    let mut push = |name: &str, env: &crate::estimates::Envelope| -> Result<()> {
        let pts = env.sample(n)?;
        curves.push(Curve {
            label: format!("{name} (α = {:.6})", env.param().alpha()),
            alpha: env.param().alpha(),
            branch: env.param().branch(),
            points: pts,
            start_slope: env.profile().slope(ann.inner())?,
        });
        Ok(())
    };
    push("upper", &bounds.upper)?;
    if let Some(lower) = &bounds.lower {
        push("lower", lower)?;
    }
    Ok(FigureData {
        kind: FigureKind::Box,
        title: format!("Bounding box, h = {}, a = {}, b = {}", h.value(), ann.inner(), ann.outer()),
        curves,
    })
}

/// Builds the figure data for [`FigureArgs`] without rendering it.
pub fn figure_data(args: &FigureArgs) -> Result<FigureData> {
    let h = mean_curvature(args.h)?;
    match args.which {
        FigureKind::Family => {
            let rho_max = args.rho_max.map(|r| radius(r, args.euclidean)).transpose()?;
            family_figure(h, &args.alphas, rho_max, args.n, args.tol)
        }
        FigureKind::Box => {
            let (Some(a), Some(b)) = (args.a, args.b) else {
                return Err(domain("figure box needs --a and --b"));
            };
            let ann = AnnulusArgs { a, b, euclidean: args.euclidean }.annulus()?;
            let data = OuterBoundaryData::new(args.min_outer, args.max_outer)?;
            box_figure(h, ann, data, args.n, args.tol)
        }
    }
}

fn cmd_figure(args: &FigureArgs, io: &mut Io) -> CmdResult {
    let fig = figure_data(args)?;
    io.table(args.out.as_deref(), &render_svg(&fig))?;
    Ok(())
}
