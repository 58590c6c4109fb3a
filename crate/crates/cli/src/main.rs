use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::{debug, info};

use domset_core::harness::{self, append_csv, run_solver, write_bench_csv};
use domset_core::{parse_dimacs, random_connected, write_dimacs, write_lp, Algorithm, Graph, SolverConfig};

/// Minimum dominating set solvers.
///
/// Logging goes to stderr and is controlled by `DOMSET_LOG` (error, info, debug).
#[derive(Parser, Debug)]
#[command(name = "domset", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a seeded random connected graph in DIMACS format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one DIMACS instance and print the run record as JSON.
    Solve {
        path: PathBuf,
        #[arg(long, default_value = "bds")]
        algo: Algorithm,
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Append the record to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run several solvers over a manifest (`n m seed` lines) or a directory of DIMACS files.
    Bench {
        source: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "greedy,bds,dbs")]
        algos: Vec<Algorithm>,
        #[command(flatten)]
        cfg: ConfigArgs,
        /// CSV output (stdout when omitted).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write the covering integer program of a DIMACS instance as an LP file.
    ExportLp {
        path: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ConfigArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// dbs base fraction in (0, 1); drawn from the seed when omitted.
    #[arg(long)]
    alpha: Option<f64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// bds enumeration node budget.
    #[arg(long)]
    node_cap: Option<u64>,
    /// dbs base solutions tried per level.
    #[arg(long)]
    max_bases: Option<u64>,
    /// Enable bds reachability pruning.
    #[arg(long)]
    pruning: bool,
}

impl ConfigArgs {
    fn config(&self) -> Result<SolverConfig, String> {
        let cfg = SolverConfig {
            seed: self.seed,
            time_limit_s: self.time_limit,
            node_cap: self.node_cap,
            max_bases_per_level: self.max_bases,
            alpha: self.alpha,
            pruning: self.pruning,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Any error; exits with status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = parse_dimacs(&bytes).map_err(|e| format!("{}: {e}", path.display()))?;
    debug!("loaded {} (n = {}, m = {})", path.display(), g.n(), g.m());
    Ok(g)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { n, m, seed, out } => {
            let g = random_connected(n, m, seed)?;
            emit(out.as_deref(), &write_dimacs(&g, Some(seed)))?;
            info!("generated n = {n}, m = {m}, seed = {seed}");
            Ok(0)
        }
        Command::Solve { path, algo, cfg, csv } => {
            let cfg = cfg.config()?;
            let g = load(&path)?;
            let id = path
                .file_stem()
                .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
            let record = run_solver(&g, &id, algo, &cfg)?;
            info!(
                "{algo}: size {:?} ({}) in {:.3} ms",
                record.size, record.proof, record.elapsed_ms
            );
            println!("{}", serde_json::to_string(&record)?);
            if let Some(csv) = csv {
                append_csv(&csv, &record)?;
            }
            Ok(if record.budget_exhausted() { 2 } else { 0 })
        }
        Command::Bench { source, algos, cfg, csv } => {
            let cfg = cfg.config()?;
            let instances = if source.is_dir() {
                harness::directory_instances(&source)?
            } else {
                let text = fs::read_to_string(&source).map_err(|e| format!("{}: {e}", source.display()))?;
                harness::parse_manifest(&text)?
            };
            info!("bench: {} instances x {} algorithms", instances.len(), algos.len());
            let report = harness::run_bench(&instances, &algos, &cfg);
            match csv {
                Some(p) => write_bench_csv(fs::File::create(&p)?, &report)?,
                None => write_bench_csv(io::stdout().lock(), &report)?,
            }
            Ok(0)
        }
        Command::ExportLp { path, out } => {
            let g = load(&path)?;
            emit(out.as_deref(), &write_lp(&g))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("DOMSET_LOG", "error")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // exit status 2 is reserved for an exhausted search budget
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
