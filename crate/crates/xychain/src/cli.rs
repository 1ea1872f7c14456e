//! Command-line front end.
//!
//! All values are taken as text and checked in one pass, so a usage error
//! lists every problem at once. Exit codes: 0 success, 1 computation or check
//! failure, 2 usage, 3 I/O.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use xychain_core::correlators::MAX_SEPARATION;
use xychain_core::sweep::{derivative_lambda, detect_critical_point, groups, lambda_values};
use xychain_core::{
    DerivativeRecord, Measure, OptimizerConfig, QuadratureConfig, SweepGrid, SweepRecord,
};

use crate::oracle::{self, DEFAULT_MAX_SITES, MAX_SITES, MIN_SITES};
use crate::{config, output, parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Help or version text requested; not a failure.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => EXIT_OK,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_FAILURE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(
    name = "xychain",
    version,
    about = "Quantum correlations in the transverse-field XY chain",
    args_override_self = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Measures at a single (γ, λ, kT) for one or more separations.
    Point(PointArgs),
    /// Zero- or finite-temperature sweep over λ with derivatives and critical points.
    Sweep(SweepArgs),
    /// Finite-temperature map over λ × kT at fixed γ and separation.
    ThermalMap(ThermalArgs),
    /// Finite-chain exact diagonalization against the thermodynamic-limit integrals.
    OracleCompare(OracleArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Worker threads (default: $XYCHAIN_WORKERS, else all cores).
    #[arg(long)]
    workers: Option<String>,
    /// `key = value` file of defaults; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Quadrature nodes of the first pass.
    #[arg(long)]
    quad_nodes: Option<String>,
    /// Maximum number of node doublings.
    #[arg(long)]
    quad_doublings: Option<String>,
    /// Absolute convergence tolerance of the quadrature.
    #[arg(long)]
    quad_tol: Option<String>,
    /// Points per axis of the deficit optimizer's coarse grid.
    #[arg(long)]
    opt_grid: Option<String>,
    /// Refinement tolerance of the deficit optimizer.
    #[arg(long)]
    opt_tol: Option<String>,
    /// Iteration cap of each refinement.
    #[arg(long)]
    opt_iters: Option<String>,
}

#[derive(Debug, Args)]
struct Outputs {
    /// Record CSV (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Derivative CSV.
    #[arg(long)]
    deriv_out: Option<PathBuf>,
    /// Whitespace-separated plot data, one block per curve.
    #[arg(long)]
    plot_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct PointArgs {
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    /// kT; 0 selects the exact ground state.
    #[arg(long, visible_alias = "kt", default_value = "0")]
    temperature: String,
    /// Separations, comma-separated.
    #[arg(long, default_value = "1")]
    n: String,
    /// Record CSV (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SweepArgs {
    /// Anisotropies, comma-separated.
    #[arg(long, default_value = "0.5")]
    gamma: String,
    /// `start:end:step` or `start:end/points`, end inclusive.
    #[arg(long, default_value = "0.01:2:0.01")]
    lambda_range: String,
    /// Temperatures kT, comma-separated; 0 is the ground state.
    #[arg(long, visible_alias = "kt", default_value = "0")]
    temperature: String,
    /// Separations, comma-separated.
    #[arg(long, default_value = "1")]
    n: String,
    #[command(flatten)]
    outputs: Outputs,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ThermalArgs {
    #[arg(long, default_value = "0")]
    gamma: String,
    /// `start:end:step` or `start:end/points`, end inclusive.
    #[arg(long, default_value = "0.05:2/50")]
    lambda_range: String,
    /// `start:end:step` or `start:end/points`; every kT must be positive.
    #[arg(long, default_value = "0.05:2/50")]
    kt_range: String,
    #[arg(long, default_value = "1")]
    n: String,
    #[command(flatten)]
    outputs: Outputs,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct OracleArgs {
    #[arg(long, default_value = "0.5")]
    gamma: String,
    #[arg(long, default_value = "0.5")]
    lambda: String,
    /// Physical kT of the finite chain (the integrals run at kT/2).
    #[arg(long, visible_alias = "temperature", default_value = "0.05")]
    kt: String,
    #[arg(long, default_value = "1")]
    n: String,
    /// Chain sizes, comma-separated.
    #[arg(long, default_value = "6,8,10")]
    sizes: String,
    /// Permit 12-site chains (4096-dimensional eigenproblems).
    #[arg(long)]
    allow_large: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputPaths {
    pub out: Option<PathBuf>,
    pub deriv_out: Option<PathBuf>,
    pub plot_out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    Point {
        grid: SweepGrid,
        out: Option<PathBuf>,
    },
    Sweep {
        grid: SweepGrid,
        outputs: OutputPaths,
    },
    ThermalMap {
        grid: SweepGrid,
        outputs: OutputPaths,
    },
    OracleCompare {
        gamma: f64,
        lambda: f64,
        temperature: f64,
        n: usize,
        sizes: Vec<usize>,
    },
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub workers: usize,
    pub quad: QuadratureConfig,
    pub opt: OptimizerConfig,
}

/// Collects every violation before failing.
#[derive(Default)]
struct Checker {
    problems: Vec<String>,
}

impl Checker {
    fn fail(&mut self, msg: String) {
        self.problems.push(msg);
    }

    fn real(&mut self, flag: &str, text: &str) -> Option<f64> {
        match text.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.fail(format!("--{flag}: `{text}` is not a finite number"));
                None
            }
        }
    }

    fn count(&mut self, flag: &str, text: &str) -> Option<usize> {
        match text.trim().parse::<usize>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.fail(format!("--{flag}: `{text}` is not a non-negative integer"));
                None
            }
        }
    }

    fn required<'a>(&mut self, flag: &str, value: &'a Option<String>) -> Option<&'a str> {
        if value.is_none() {
            self.fail(format!("--{flag} is required"));
        }
        value.as_deref()
    }

    fn list<T>(
        &mut self,
        flag: &str,
        text: &str,
        one: impl Fn(&mut Self, &str, &str) -> Option<T>,
    ) -> Option<Vec<T>> {
        let items: Vec<&str> = text.split(',').map(str::trim).collect();
        if items.iter().any(|s| s.is_empty()) {
            self.fail(format!("--{flag}: `{text}` has an empty entry"));
            return None;
        }
        let before = self.problems.len();
        let values: Vec<T> = items.iter().filter_map(|s| one(self, flag, s)).collect();
        (self.problems.len() == before).then_some(values)
    }

    fn range(&mut self, flag: &str, text: &str) -> Option<(f64, f64, f64)> {
        let parts: Vec<&str> = text.split(':').collect();
        let parsed = match parts.as_slice() {
            [a, b, step] => {
                let (a, b, s) = (
                    self.real(flag, a),
                    self.real(flag, b),
                    self.real(flag, step),
                );
                let s = s.filter(|&s| {
                    let ok = s > 0.0;
                    if !ok {
                        self.fail(format!("--{flag}: step must be positive"));
                    }
                    ok
                });
                Some((a?, b?, s?))
            }
            [a, rest] if rest.contains('/') => {
                let (b, points) = rest.split_once('/').expect("checked");
                let (a, b) = (self.real(flag, a), self.real(flag, b));
                let points = self.count(flag, points).filter(|&p| {
                    let ok = p >= 2;
                    if !ok {
                        self.fail(format!("--{flag}: need at least 2 points"));
                    }
                    ok
                });
                let (a, b, points) = (a?, b?, points?);
                Some((a, b, (b - a) / (points - 1) as f64))
            }
            _ => {
                self.fail(format!(
                    "--{flag}: `{text}` is not `start:end:step` or `start:end/points`"
                ));
                None
            }
        }?;
        if parsed.0 >= parsed.1 {
            self.fail(format!(
                "--{flag}: start {} must be below end {}",
                parsed.0, parsed.1
            ));
            return None;
        }
        Some(parsed)
    }

    fn gamma(&mut self, g: f64) {
        if !(0.0..=1.0).contains(&g) {
            self.fail(format!("--gamma: {g} outside [0, 1]"));
        }
    }

    fn lambda(&mut self, flag: &str, l: f64) {
        if l < 0.0 {
            self.fail(format!("--{flag}: λ = {l} must be non-negative"));
        }
    }

    fn temperature(&mut self, flag: &str, t: f64, strict: bool) {
        if t < 0.0 || (strict && t == 0.0) {
            let bound = if strict { "positive" } else { "non-negative" };
            self.fail(format!("--{flag}: kT = {t} must be {bound}"));
        }
    }

    fn separations(&mut self, ns: &[usize]) {
        for &n in ns {
            if n == 0 || n > MAX_SEPARATION {
                self.fail(format!("--n: separation {n} outside [1, {MAX_SEPARATION}]"));
            }
        }
    }

    fn finish(self) -> Result<(), CliError> {
        if self.problems.is_empty() {
            Ok(())
        } else {
            let mut msg = String::from("invalid arguments:");
            for p in &self.problems {
                msg.push_str("\n  - ");
                msg.push_str(p);
            }
            Err(CliError::Usage(msg))
        }
    }
}

fn common_settings(c: &Common, check: &mut Checker) -> (usize, QuadratureConfig, OptimizerConfig) {
    let workers = match &c.workers {
        Some(w) => check.count("workers", w).unwrap_or(1),
        None => parallel::default_workers().unwrap_or_else(|bad| {
            check.fail(format!(
                "${}: `{bad}` is not a positive integer",
                parallel::WORKERS_ENV
            ));
            1
        }),
    };
    if workers == 0 {
        check.fail("--workers must be positive".into());
    }
    let mut quad = QuadratureConfig::default();
    if let Some(v) = c
        .quad_nodes
        .as_deref()
        .and_then(|s| check.count("quad-nodes", s))
    {
        quad.initial_nodes = v;
    }
    if let Some(v) = c
        .quad_doublings
        .as_deref()
        .and_then(|s| check.count("quad-doublings", s))
    {
        quad.max_doublings = u32::try_from(v).unwrap_or(u32::MAX);
    }
    if let Some(v) = c
        .quad_tol
        .as_deref()
        .and_then(|s| check.real("quad-tol", s))
    {
        quad.abs_tol = v;
    }
    if let Err(e) = quad.validate() {
        check.fail(format!("quadrature: {e}"));
    }
    let mut opt = OptimizerConfig::default();
    if let Some(v) = c
        .opt_grid
        .as_deref()
        .and_then(|s| check.count("opt-grid", s))
    {
        opt.grid_points = v;
    }
    if let Some(v) = c.opt_tol.as_deref().and_then(|s| check.real("opt-tol", s)) {
        opt.refine_tol = v;
    }
    if let Some(v) = c
        .opt_iters
        .as_deref()
        .and_then(|s| check.count("opt-iters", s))
    {
        opt.max_refine_iters = v;
    }
    if let Err(e) = opt.validate() {
        check.fail(format!("optimizer: {e}"));
    }
    (workers, quad, opt)
}

fn grid(
    check: &mut Checker,
    (start, end, step): (f64, f64, f64),
    gammas: Vec<f64>,
    temps: Vec<f64>,
    ns: Vec<usize>,
) -> Option<SweepGrid> {
    if !check.problems.is_empty() {
        return None;
    }
    match SweepGrid::new(start, end, step, gammas, temps, ns) {
        Ok(g) => Some(g),
        Err(e) => {
            check.fail(format!("grid: {e}"));
            None
        }
    }
}

fn point_mode(a: &PointArgs, check: &mut Checker) -> Option<Mode> {
    let g = check
        .required("gamma", &a.gamma)
        .and_then(|s| check.real("gamma", s));
    let l = check
        .required("lambda", &a.lambda)
        .and_then(|s| check.real("lambda", s));
    let t = check.real("temperature", &a.temperature);
    let ns = check.list("n", &a.n, Checker::count);
    g.inspect(|&g| check.gamma(g));
    l.inspect(|&l| check.lambda("lambda", l));
    t.inspect(|&t| check.temperature("temperature", t, false));
    ns.as_deref().inspect(|ns| check.separations(ns));
    let (g, l, t, ns) = (g?, l?, t?, ns?);
    let grid = grid(check, (l, l, 1.0), vec![g], vec![t], ns)?;
    Some(Mode::Point {
        grid,
        out: a.out.clone(),
    })
}

fn paths(o: &Outputs) -> OutputPaths {
    OutputPaths {
        out: o.out.clone(),
        deriv_out: o.deriv_out.clone(),
        plot_out: o.plot_out.clone(),
    }
}

fn sweep_mode(a: &SweepArgs, check: &mut Checker) -> Option<Mode> {
    let gs = check.list("gamma", &a.gamma, Checker::real);
    let range = check.range("lambda-range", &a.lambda_range);
    let ts = check.list("temperature", &a.temperature, Checker::real);
    let ns = check.list("n", &a.n, Checker::count);
    gs.iter().flatten().for_each(|&g| check.gamma(g));
    range.inspect(|r| check.lambda("lambda-range", r.0));
    ts.iter()
        .flatten()
        .for_each(|&t| check.temperature("temperature", t, false));
    ns.as_deref().inspect(|ns| check.separations(ns));
    let grid = grid(check, range?, gs?, ts?, ns?)?;
    Some(Mode::Sweep {
        grid,
        outputs: paths(&a.outputs),
    })
}

fn thermal_mode(a: &ThermalArgs, check: &mut Checker) -> Option<Mode> {
    let g = check.real("gamma", &a.gamma);
    let range = check.range("lambda-range", &a.lambda_range);
    let kt = check.range("kt-range", &a.kt_range);
    let n = check.count("n", &a.n);
    g.inspect(|&g| check.gamma(g));
    range.inspect(|r| check.lambda("lambda-range", r.0));
    kt.inspect(|r| check.temperature("kt-range", r.0, true));
    n.inspect(|&n| check.separations(&[n]));
    let temps = kt.map(|(a, b, s)| lambda_values(a, b, s));
    let grid = grid(check, range?, vec![g?], temps?, vec![n?])?;
    Some(Mode::ThermalMap {
        grid,
        outputs: paths(&a.outputs),
    })
}

fn oracle_mode(a: &OracleArgs, check: &mut Checker) -> Option<Mode> {
    let g = check.real("gamma", &a.gamma);
    let l = check.real("lambda", &a.lambda);
    let t = check.real("kt", &a.kt);
    let n = check.count("n", &a.n);
    let sizes = check.list("sizes", &a.sizes, Checker::count);
    g.inspect(|&g| check.gamma(g));
    l.inspect(|&l| check.lambda("lambda", l));
    t.inspect(|&t| check.temperature("kt", t, true));
    let cap = if a.allow_large {
        MAX_SITES
    } else {
        DEFAULT_MAX_SITES
    };
    for &s in sizes.iter().flatten() {
        if s < MIN_SITES || s > cap {
            let hint = if s <= MAX_SITES {
                " (12 needs --allow-large)"
            } else {
                ""
            };
            check.fail(format!("--sizes: {s} outside [{MIN_SITES}, {cap}]{hint}"));
        }
        if let Some(n) = n {
            if n == 0 || n > s / 2 {
                check.fail(format!(
                    "--n: separation {n} outside [1, {}] for {s} sites",
                    s / 2
                ));
            }
        }
    }
    if sizes
        .as_ref()
        .is_some_and(|s| s.windows(2).any(|w| w[1] <= w[0]))
    {
        check.fail("--sizes: sizes must be strictly increasing".into());
    }
    Some(Mode::OracleCompare {
        gamma: g?,
        lambda: l?,
        temperature: t?,
        n: n?,
        sizes: sizes?,
    })
}

/// Finds `--config` after the subcommand and splices its entries in front of
/// the explicit flags.
fn expand_config(argv: &[String]) -> Result<Vec<String>, CliError> {
    let mut path = None;
    for (i, arg) in argv.iter().enumerate().skip(2) {
        if arg == "--config" {
            path = argv.get(i + 1).cloned();
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else {
        return Ok(argv.to_vec());
    };
    let text = std::fs::read_to_string(&path).map_err(|e| io_error(Path::new(&path), e))?;
    let entries = config::parse(&text)
        .map_err(|p| CliError::Usage(format!("{path}:\n  - {}", p.join("\n  - "))))?;
    let mut out = argv[..2].to_vec();
    out.extend(config::to_args(&entries));
    out.extend_from_slice(&argv[2..]);
    Ok(out)
}

pub fn parse_args(argv: &[String]) -> Result<RunConfig, CliError> {
    let argv = expand_config(argv)?;
    let cli = Cli::try_parse_from(&argv).map_err(|e| {
        use clap::error::ErrorKind;
        let text = e.render().to_string();
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(text),
            _ => CliError::Usage(text),
        }
    })?;
    let mut check = Checker::default();
    let (common, mode) = match &cli.command {
        Command::Point(a) => (&a.common, point_mode(a, &mut check)),
        Command::Sweep(a) => (&a.common, sweep_mode(a, &mut check)),
        Command::ThermalMap(a) => (&a.common, thermal_mode(a, &mut check)),
        Command::OracleCompare(a) => (&a.common, oracle_mode(a, &mut check)),
    };
    let (workers, quad, opt) = common_settings(common, &mut check);
    check.finish()?;
    let mode = mode.ok_or_else(|| CliError::Usage("invalid arguments".into()))?;
    Ok(RunConfig {
        mode,
        workers,
        quad,
        opt,
    })
}

fn compute(config: &RunConfig, grid: &SweepGrid) -> Result<Vec<SweepRecord>, CliError> {
    parallel::run_sweep(grid, &config.quad, &config.opt, config.workers)
        .map_err(|e| CliError::Compute(e.to_string()))
}

/// Derivatives of every group, or `None` when a group has a single λ.
fn derivatives(records: &[SweepRecord]) -> Result<Option<Vec<DerivativeRecord>>, CliError> {
    let mut all = Vec::with_capacity(records.len());
    for group in groups(records) {
        if group.len() < 2 {
            return Ok(None);
        }
        all.extend(derivative_lambda(group).map_err(|e| CliError::Compute(e.to_string()))?);
    }
    Ok(Some(all))
}

fn write_records_to(path: Option<&Path>, records: &[SweepRecord]) -> Result<(), CliError> {
    match path {
        Some(p) => output::emit_csv(records, p).map_err(|e| io_error(p, e)),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            output::write_records(&mut lock, records)
                .and_then(|()| lock.flush())
                .map_err(|e| io_error(Path::new("<stdout>"), e))
        }
    }
}

fn report(records: &[SweepRecord], outputs: &OutputPaths) -> Result<(), CliError> {
    let derivs = derivatives(records)?;
    write_records_to(outputs.out.as_deref(), records)?;
    if let Some(p) = &outputs.deriv_out {
        let d = derivs.as_deref().unwrap_or(&[]);
        output::write_file(p, |w| output::write_derivatives(w, d)).map_err(|e| io_error(p, e))?;
    }
    if let Some(p) = &outputs.plot_out {
        output::write_file(p, |w| output::write_plot(w, records, derivs.as_deref()))
            .map_err(|e| io_error(p, e))?;
    }
    if let Some(derivs) = &derivs {
        let mut start = 0;
        for group in groups(records) {
            let d = &derivs[start..start + group.len()];
            start += group.len();
            let r = group[0];
            for m in Measure::ALL {
                let est =
                    detect_critical_point(d, m).map_err(|e| CliError::Compute(e.to_string()))?;
                eprintln!(
                    "gamma={} kT={} n={} {:>7}: max |dQ/dλ| = {} at λ = {} ± {}",
                    output::format_real(r.gamma),
                    output::format_real(r.temperature),
                    r.n,
                    m.name(),
                    output::format_real(est.derivative_peak),
                    output::format_real(est.lambda_c),
                    output::format_real(est.uncertainty)
                );
            }
        }
    }
    Ok(())
}

fn oracle_table(cmp: &oracle::Comparison, temperature: f64) -> String {
    let mut s = format!(
        "finite chain at kT = {}, integrals at kT = {}\n{:<6} {:>16}",
        output::format_real(temperature),
        output::format_real(0.5 * temperature),
        "qty",
        "integral"
    );
    for n in &cmp.sizes {
        s.push_str(&format!(" {:>16} {:>10}", format!("N={n}"), "|diff|"));
    }
    s.push_str("  trend\n");
    for row in &cmp.rows {
        s.push_str(&format!("{:<6} {:>16.12}", row.quantity, row.integral));
        for (v, d) in row.finite.iter().zip(row.differences()) {
            s.push_str(&format!(" {v:>16.12} {d:>10.3e}"));
        }
        let trend = if row.non_increasing() { "ok" } else { "GROWS" };
        s.push_str(&format!("  {trend}\n"));
    }
    let signs: Vec<String> = cmp
        .sz_sign
        .iter()
        .map(|&s| if s < 0.0 { "opposite" } else { "same" }.to_string())
        .collect();
    s.push_str(&format!(
        "sign of sz (finite vs integral): {}\n",
        signs.join(", ")
    ));
    s
}

/// Executes a validated configuration and returns the exit code.
pub fn run(config: &RunConfig) -> Result<i32, CliError> {
    match &config.mode {
        Mode::Point { grid, out } => {
            let records = compute(config, grid)?;
            write_records_to(out.as_deref(), &records)?;
            Ok(EXIT_OK)
        }
        Mode::Sweep { grid, outputs } | Mode::ThermalMap { grid, outputs } => {
            let records = compute(config, grid)?;
            report(&records, outputs)?;
            Ok(EXIT_OK)
        }
        Mode::OracleCompare {
            gamma,
            lambda,
            temperature,
            n,
            sizes,
        } => {
            let cmp = oracle::compare(*gamma, *lambda, *temperature, *n, sizes, &config.quad)
                .map_err(|e| CliError::Compute(e.to_string()))?;
            print!("{}", oracle_table(&cmp, *temperature));
            if cmp.trends_hold() {
                Ok(EXIT_OK)
            } else {
                eprintln!("convergence trend check failed");
                Ok(EXIT_FAILURE)
            }
        }
    }
}

/// Parses, runs and reports; returns the process exit code.
pub fn main_with(argv: &[String]) -> i32 {
    let result = parse_args(argv).and_then(|config| run(&config));
    match result {
        Ok(code) => code,
        Err(CliError::Info(text)) => {
            print!("{text}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("xychain: {e}");
            e.exit_code()
        }
    }
}
