//! Command-line driver for graph sampling, closure statistics, Monte Carlo
//! sweeps, verification suites, and closed-form bound evaluation.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or config error.

use gatenet_cli::{sweep, verify};

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use gatenet_core::{
    f_epsilon_exact, f_g_exact, game_parameters, lll_lower_bound, phase_limit,
    pittel_tungol_window, rho, theta, Closure, Dag,
};

use sweep::{gamma_csv, phase_csv, run_gamma_sweep, run_phase_sweep, SweepConfig};
use verify::run_suite;

/// Thread-count override for the sweep drivers.
const THREADS_ENV: &str = "GATENET_THREADS";

#[derive(Parser)]
#[command(name = "gatenet", version, about = "gate-failure phase-transition experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a random acyclic digraph and print or write its edge list
    GenDag {
        #[arg(long)]
        n: usize,
        /// Density parameter; edge probability is c·ln(n)/n clamped to [0,1]
        #[arg(long, conflicts_with = "p")]
        c: Option<f64>,
        /// Edge probability, used directly
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print per-vertex reach sizes and gamma_star for an edge-list file
    Closure {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Monte Carlo sweep of the failure-free probability vs its limit curve
    Phase {
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        c: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo sweep of gamma_star against its concentration window
    Gamma {
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        c: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "A", default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.1)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a randomized verification suite; exit 1 on any failure
    Verify {
        /// admissible | domination | holley | fkg | lll | wclass | majority
        suite: String,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the closed-form bounds at the given parameters
    Bounds {
        #[arg(long, default_value_t = 1)]
        delta: u32,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 64)]
        n: u64,
        #[arg(long, default_value_t = 2.0)]
        c: f64,
    },
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v.parse().with_context(|| format!("bad {THREADS_ENV} value '{v}'"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("thread pool init failed")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::GenDag { n, c, p, seed, out } => {
            let p = match (c, p) {
                (None, Some(p)) => p,
                (Some(c), None) => sweep::edge_probability(n, c),
                _ => anyhow::bail!("exactly one of --c or --p is required"),
            };
            let g = Dag::sample_barak_erdos(n, p, seed)?;
            match out {
                Some(path) => g.write_edge_list(&path)?,
                None => print!("{}", g.to_edge_list()),
            }
            Ok(0)
        }
        Command::Closure { input } => {
            let g = Dag::read_edge_list(&input)?;
            let c = Closure::of(&g)?;
            let sizes: Vec<String> = c.rtc_sizes().iter().map(|s| s.to_string()).collect();
            println!("rtc_sizes {}", sizes.join(" "));
            println!("gamma_star {}", c.gamma_star());
            Ok(0)
        }
        Command::Phase { n, c, trials, seed, out } => {
            let cfg = SweepConfig { n_list: n, c_list: c, trials, master_seed: seed, output_path: out };
            let records = run_phase_sweep(&cfg)?;
            if cfg.output_path.is_none() {
                print!("{}", phase_csv(&records));
            }
            Ok(0)
        }
        Command::Gamma { n, c, trials, seed, a, kappa, out } => {
            let cfg = SweepConfig { n_list: n, c_list: c, trials, master_seed: seed, output_path: out };
            let records = run_gamma_sweep(&cfg, a, kappa)?;
            if cfg.output_path.is_none() {
                print!("{}", gamma_csv(&records));
            }
            Ok(0)
        }
        Command::Verify { suite, cases, seed } => {
            let report = run_suite(&suite, cases, seed)?;
            print!("{}", report.render());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Bounds { delta, eps, n, c } => {
            println!("theta(delta+1) {:.17}", theta(delta as f64 + 1.0)?);
            println!("f_epsilon_exact(n, eps) {:.17}", f_epsilon_exact(n, eps)?);
            println!("f_g_exact(delta, n) {:.17}", f_g_exact(delta, n));
            println!("lll_lower_bound(delta, n) {:.17}", lll_lower_bound(delta, n));
            println!("phase_limit(c) {:.17}", phase_limit(c));
            match pittel_tungol_window(n, c, 1.0, 0.1) {
                Ok(w) => println!("gamma_window [{:.6}, {:.6}]", w.lo, w.hi),
                Err(e) => println!("gamma_window unavailable: {e}"),
            }
            match rho(delta, eps) {
                Ok(p) => println!(
                    "rho(alpha={:.17}, lambda={:.17}) {:.17}",
                    p.alpha, p.lambda, p.rho
                ),
                Err(e) => println!("rho unavailable: {e}"),
            }
            match game_parameters(eps) {
                Ok(g) => println!(
                    "game(n0={}, c={:.6}) delta_margin {:.6}",
                    g.n0, g.c, g.delta_margin
                ),
                Err(e) => println!("game unavailable: {e}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
