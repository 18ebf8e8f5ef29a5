//! Command-line front end: every analysis as a subcommand with deterministic
//! file outputs.
//!
//! Exit codes: 0 on success, 2 for usage or validation errors (one-line
//! diagnostic on stderr), 3 when divergence aborts a single-orbit command.
//! Summary output on stdout is machine-greppable `key=value` pairs.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bifurcation::{classify_sweep, find_onsets, sweep_c, CSweepSpec};
use crate::emit::{write_diagram_csv, write_orbit_csv, write_spread_csv, write_spread_pgm};
use crate::map::{GrowthRange, GrowthShape, MapParams};
use crate::orbit::{
    detect_period, lyapunov, sample_orbit, AttractorClass, OrbitSpec, PeriodDetectorConfig,
    LYAPUNOV_DEFAULT_STEPS,
};
use crate::spread::{spread_sweep, uniform_axis};

#[derive(Parser)]
#[command(
    name = "tanhmap",
    version,
    about = "Logistic map with a nonlinear (tanh) growth rate: orbits, bifurcation diagrams, onsets, and spread maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate f(Y), gamma(Y), and Y_next on 1001 points Y in [0, 1]
    Growth(GrowthCmd),
    /// Sample one orbit, write it as CSV, and print its classification
    Orbit(OrbitCmd),
    /// Sweep C and write the bifurcation diagram as CSV
    Bifurcate(BifurcateCmd),
    /// Sweep C and print period-doubling and chaos onset estimates
    Onsets(OnsetsCmd),
    /// Sweep (gamma_min, C) and write the pixel-occupancy spread map
    Spread(SpreadCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeKind {
    Linear,
    Tanh,
}

#[derive(Args)]
struct ShapeArgs {
    /// Growth-rate shape
    #[arg(long, value_enum, default_value = "tanh")]
    growth: ShapeKind,
    /// Steepness of the tanh shape
    #[arg(long = "a-y", default_value_t = 5.0)]
    a_y: f64,
}

impl ShapeArgs {
    fn shape(&self) -> Result<GrowthShape, Failure> {
        match self.growth {
            ShapeKind::Linear => Ok(GrowthShape::Linear),
            ShapeKind::Tanh => GrowthShape::tanh(self.a_y).map_err(Failure::validation),
        }
    }
}

#[derive(Args)]
struct RangeArgs {
    /// Growth rate at Y -> +inf (lower bound of gamma)
    #[arg(long, default_value_t = 0.0)]
    gamma_min: f64,
    /// Growth rate at Y -> -inf (upper bound of gamma)
    #[arg(long, default_value_t = 1.0)]
    gamma_max: f64,
}

impl RangeArgs {
    fn range(&self) -> Result<GrowthRange, Failure> {
        GrowthRange::new(self.gamma_min, self.gamma_max).map_err(Failure::validation)
    }
}

#[derive(Args)]
struct ProtocolArgs {
    /// Initial orbit value, strictly inside (0, 1)
    #[arg(long, default_value_t = 0.5)]
    y0: f64,
    /// Transient steps discarded before sampling
    #[arg(long, default_value_t = 1000)]
    transient: usize,
}

#[derive(Args)]
struct CSweepArgs {
    #[arg(long, default_value_t = 1.0)]
    c_min: f64,
    #[arg(long, default_value_t = 4.0)]
    c_max: f64,
    /// Grid points, endpoints inclusive
    #[arg(long, default_value_t = 601)]
    c_steps: usize,
}

impl CSweepArgs {
    fn sweep(&self) -> Result<CSweepSpec, Failure> {
        CSweepSpec::new(self.c_min, self.c_max, self.c_steps).map_err(Failure::validation)
    }
}

#[derive(Args)]
struct ThreadsArg {
    /// Worker threads for the sweep (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GrowthCmd {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    range: RangeArgs,
    /// Bifurcation constant
    #[arg(long)]
    c: f64,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OrbitCmd {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    range: RangeArgs,
    /// Bifurcation constant
    #[arg(long)]
    c: f64,
    #[command(flatten)]
    protocol: ProtocolArgs,
    /// Post-transient samples to write
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BifurcateCmd {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    range: RangeArgs,
    #[command(flatten)]
    sweep: CSweepArgs,
    #[command(flatten)]
    protocol: ProtocolArgs,
    /// Post-transient samples per grid point
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    threads: ThreadsArg,
}

#[derive(Args)]
struct OnsetsCmd {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    range: RangeArgs,
    #[command(flatten)]
    sweep: CSweepArgs,
    #[command(flatten)]
    protocol: ProtocolArgs,
    #[command(flatten)]
    threads: ThreadsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpreadFormat {
    Csv,
    Pgm,
}

#[derive(Args)]
struct SpreadCmd {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Growth rate upper bound shared by all gamma_min rows
    #[arg(long, default_value_t = 1.0)]
    gamma_max: f64,
    #[arg(long, default_value_t = 0.0)]
    gmin_min: f64,
    #[arg(long, default_value_t = 0.2)]
    gmin_max: f64,
    /// gamma_min grid points, endpoints inclusive
    #[arg(long, default_value_t = 201)]
    gmin_steps: usize,
    #[command(flatten)]
    sweep: CSweepArgs,
    #[command(flatten)]
    protocol: ProtocolArgs,
    /// Post-transient samples per cell
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: SpreadFormat,
    /// Output path
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    threads: ThreadsArg,
}

/// One diagnostic line plus the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn validation(err: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: err.to_string() }
    }

    fn divergence(err: impl std::fmt::Display) -> Self {
        Failure { code: 3, message: err.to_string() }
    }

    fn io(context: &str, err: std::io::Error) -> Self {
        Failure { code: 1, message: format!("{context}: {err}") }
    }
}

/// Parses argv, runs the requested subcommand, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; those are not errors.
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Growth(cmd) => run_growth(cmd),
        Command::Orbit(cmd) => run_orbit(cmd),
        Command::Bifurcate(cmd) => run_bifurcate(cmd),
        Command::Onsets(cmd) => run_onsets(cmd),
        Command::Spread(cmd) => run_spread(cmd),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("tanhmap: {}", f.message);
            f.code
        }
    }
}

fn orbit_spec(protocol: &ProtocolArgs, samples: usize) -> Result<OrbitSpec, Failure> {
    let spec = OrbitSpec { y0: protocol.y0, transient_len: protocol.transient, sample_len: samples };
    spec.validate().map_err(Failure::validation)?;
    Ok(spec)
}

/// Runs `f` on a dedicated pool when a thread count was requested, otherwise
/// on the global one. Output is schedule-independent either way.
fn with_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    match threads {
        Some(0) => Err(Failure::validation("--threads must be >= 1")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure::validation(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

fn create_out(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::io(&format!("cannot create {}", path.display()), e))
}

fn finish(mut w: BufWriter<File>, path: &Path) -> Result<(), Failure> {
    w.flush().map_err(|e| Failure::io(&format!("cannot write {}", path.display()), e))
}

fn run_growth(cmd: GrowthCmd) -> Result<(), Failure> {
    let shape = cmd.shape.shape()?;
    let range = cmd.range.range()?;
    let params = MapParams::new(shape, range, cmd.c).map_err(Failure::validation)?;
    let mut w = create_out(&cmd.out)?;
    let emit = |w: &mut BufWriter<File>| -> std::io::Result<()> {
        w.write_all(b"Y,f,gamma,Y_next\n")?;
        for i in 0..=1000u32 {
            let y = i as f64 / 1000.0;
            writeln!(w, "{y},{},{},{}", shape.value(y), params.growth_rate(y), params.step(y))?;
        }
        Ok(())
    };
    emit(&mut w).map_err(|e| Failure::io(&format!("cannot write {}", cmd.out.display()), e))?;
    finish(w, &cmd.out)
}

fn class_summary(class: AttractorClass, lam: Option<f64>) -> String {
    let class_name = match class {
        AttractorClass::FixedPoint => "fixed_point",
        AttractorClass::Periodic { .. } => "periodic",
        AttractorClass::Aperiodic => "aperiodic",
        AttractorClass::Divergent => "divergent",
    };
    let period = match class.period() {
        Some(p) => p.to_string(),
        None => "none".to_string(),
    };
    let lyap = match lam {
        Some(l) => format!("{l}"),
        None => "none".to_string(),
    };
    format!("class={class_name} period={period} lyapunov={lyap}")
}

fn run_orbit(cmd: OrbitCmd) -> Result<(), Failure> {
    let shape = cmd.shape.shape()?;
    let range = cmd.range.range()?;
    let params = MapParams::new(shape, range, cmd.c).map_err(Failure::validation)?;
    let spec = orbit_spec(&cmd.protocol, cmd.samples)?;

    let sample = sample_orbit(&params, &spec).map_err(Failure::divergence)?;
    let mut w = create_out(&cmd.out)?;
    write_orbit_csv(&sample, &mut w)
        .map_err(|e| Failure::io(&format!("cannot write {}", cmd.out.display()), e))?;
    finish(w, &cmd.out)?;

    let class = detect_period(&params, &spec, &PeriodDetectorConfig::default());
    let lam = if class == AttractorClass::Divergent {
        None
    } else {
        lyapunov(&params, spec.y0, spec.transient_len, LYAPUNOV_DEFAULT_STEPS).ok()
    };
    println!("{}", class_summary(class, lam));
    Ok(())
}

fn run_bifurcate(cmd: BifurcateCmd) -> Result<(), Failure> {
    let shape = cmd.shape.shape()?;
    let range = cmd.range.range()?;
    let sweep = cmd.sweep.sweep()?;
    let spec = orbit_spec(&cmd.protocol, cmd.samples)?;
    let dataset = with_pool(cmd.threads.threads, || sweep_c(shape, range, &sweep, &spec))?;
    let mut w = create_out(&cmd.out)?;
    write_diagram_csv(&dataset, &mut w)
        .map_err(|e| Failure::io(&format!("cannot write {}", cmd.out.display()), e))?;
    finish(w, &cmd.out)
}

fn run_onsets(cmd: OnsetsCmd) -> Result<(), Failure> {
    let shape = cmd.shape.shape()?;
    let range = cmd.range.range()?;
    let sweep = cmd.sweep.sweep()?;
    let spec = orbit_spec(&cmd.protocol, 50)?;
    let cfg = PeriodDetectorConfig::default();
    let classified =
        with_pool(cmd.threads.threads, || classify_sweep(shape, range, &sweep, &spec, &cfg))?;
    let report = find_onsets(&classified);
    let fmt = |v: Option<f64>| v.map_or_else(|| "none".to_string(), |c| format!("{c}"));
    println!(
        "period_doubling_c={} chaos_c={}",
        fmt(report.period_doubling_c),
        fmt(report.chaos_c)
    );
    Ok(())
}

fn run_spread(cmd: SpreadCmd) -> Result<(), Failure> {
    let shape = cmd.shape.shape()?;
    let sweep = cmd.sweep.sweep()?;
    let spec = orbit_spec(&cmd.protocol, cmd.samples)?;
    if !(cmd.gmin_min.is_finite() && cmd.gmin_max.is_finite() && cmd.gmin_steps >= 1) {
        return Err(Failure::validation("gamma_min axis bounds must be finite with >= 1 steps"));
    }
    if cmd.gmin_steps >= 2 && cmd.gmin_min >= cmd.gmin_max {
        return Err(Failure::validation("--gmin-min must be < --gmin-max"));
    }
    let gmin_axis = uniform_axis(cmd.gmin_min, cmd.gmin_max, cmd.gmin_steps);
    let c_axis = sweep.grid();
    let result = with_pool(cmd.threads.threads, || {
        spread_sweep(shape, cmd.gamma_max, &gmin_axis, &c_axis, &spec)
    })?
    .map_err(Failure::validation)?;

    let mut w = create_out(&cmd.out)?;
    let io_err = |e| Failure::io(&format!("cannot write {}", cmd.out.display()), e);
    match cmd.format {
        SpreadFormat::Csv => write_spread_csv(&result, &mut w).map_err(io_err)?,
        SpreadFormat::Pgm => write_spread_pgm(&result, &mut w).map_err(io_err)?,
    }
    finish(w, &cmd.out)
}
