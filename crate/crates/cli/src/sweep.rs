//! Monte Carlo sweep drivers. Trials run in parallel but records are
//! buffered and emitted in sorted (c, n, trial) order, so the same config
//! and master seed always produce a byte-identical CSV.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use gatenet_core::closure::MAX_CLOSURE_VERTICES;
use gatenet_core::{
    f_epsilon_exact, phase_limit, pittel_tungol_window, theta, trial_seed, Closure, Dag,
};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_list: Vec<usize>,
    pub c_list: Vec<f64>,
    pub trials: u64,
    pub master_seed: u64,
    pub output_path: Option<PathBuf>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() || self.c_list.is_empty() {
            bail!("n and c lists must be non-empty");
        }
        for &n in &self.n_list {
            if n < 2 {
                bail!("sweep requires n >= 2, got {n}");
            }
            if n > MAX_CLOSURE_VERTICES {
                bail!("n = {n} exceeds the closure cap of {MAX_CLOSURE_VERTICES}");
            }
        }
        for &c in &self.c_list {
            if !(c >= 0.0) {
                bail!("density parameter c must be nonnegative, got {c}");
            }
        }
        if self.trials < 1 {
            bail!("trials must be >= 1");
        }
        Ok(())
    }

    /// Jobs in final record order: c ascending, then n, then trial.
    fn jobs(&self) -> Vec<(f64, usize, u64)> {
        let mut cs = self.c_list.clone();
        cs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut ns = self.n_list.clone();
        ns.sort_unstable();
        let mut out = Vec::with_capacity(cs.len() * ns.len() * self.trials as usize);
        for &c in &cs {
            for &n in &ns {
                for t in 0..self.trials {
                    out.push((c, n, t));
                }
            }
        }
        out
    }
}

/// Edge probability c·ln(n)/n, clamped into [0, 1]. The parametrization
/// exceeds 1 for small n at large c; clamping is reported on stderr since
/// the CSV schema has no flag column.
pub fn edge_probability(n: usize, c: f64) -> f64 {
    let raw = c * (n as f64).ln() / n as f64;
    if raw > 1.0 {
        eprintln!("warning: p = c ln(n)/n = {raw:.6} at (n={n}, c={c}) clamped to 1");
        1.0
    } else {
        raw
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PhaseRecord {
    pub c: f64,
    pub n: usize,
    pub trial: u64,
    pub seed: u64,
    pub gamma_star: usize,
    pub theta: f64,
    pub f_n: f64,
    pub f_limit: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct GammaRecord {
    pub c: f64,
    pub n: usize,
    pub trial: u64,
    pub seed: u64,
    pub gamma_star: usize,
    pub lo: f64,
    pub hi: f64,
    pub in_window: bool,
}

fn sample_gamma_star(n: usize, c: f64, seed: u64) -> Result<usize> {
    let p = edge_probability(n, c);
    let g = Dag::sample_barak_erdos(n, p, seed).context("graph sampling failed")?;
    Ok(Closure::of(&g).context("closure failed")?.gamma_star())
}

pub fn run_phase_sweep(cfg: &SweepConfig) -> Result<Vec<PhaseRecord>> {
    cfg.validate()?;
    let jobs = cfg.jobs();
    let records: Result<Vec<PhaseRecord>> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, &(c, n, trial))| {
            let seed = trial_seed(cfg.master_seed, idx as u64);
            let gamma_star = sample_gamma_star(n, c, seed)?;
            let th = theta(gamma_star as f64)?;
            Ok(PhaseRecord {
                c,
                n,
                trial,
                seed,
                gamma_star,
                theta: th,
                f_n: f_epsilon_exact(n as u64, th)?,
                f_limit: phase_limit(c),
            })
        })
        .collect();
    let records = records?;
    if let Some(path) = &cfg.output_path {
        std::fs::write(path, phase_csv(&records)).with_context(|| format!("writing {path:?}"))?;
    }
    Ok(records)
}

pub fn run_gamma_sweep(cfg: &SweepConfig, a: f64, kappa: f64) -> Result<Vec<GammaRecord>> {
    cfg.validate()?;
    let jobs = cfg.jobs();
    let records: Result<Vec<GammaRecord>> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, &(c, n, trial))| {
            let seed = trial_seed(cfg.master_seed, idx as u64);
            let gamma_star = sample_gamma_star(n, c, seed)?;
            let w = pittel_tungol_window(n as u64, c, a, kappa)?;
            let gs = gamma_star as f64;
            Ok(GammaRecord {
                c,
                n,
                trial,
                seed,
                gamma_star,
                lo: w.lo,
                hi: w.hi,
                in_window: w.lo <= gs && gs <= w.hi,
            })
        })
        .collect();
    let records = records?;
    if let Some(path) = &cfg.output_path {
        std::fs::write(path, gamma_csv(&records)).with_context(|| format!("writing {path:?}"))?;
    }
    Ok(records)
}

/// 17 significant digits: round-trips any f64 exactly.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn phase_csv(records: &[PhaseRecord]) -> String {
    let mut out = String::from("c,n,trial,seed,gamma_star,theta,f_n,f_limit\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_float(r.c),
            r.n,
            r.trial,
            r.seed,
            r.gamma_star,
            fmt_float(r.theta),
            fmt_float(r.f_n),
            fmt_float(r.f_limit)
        );
    }
    out
}

pub fn gamma_csv(records: &[GammaRecord]) -> String {
    let mut out = String::from("c,n,trial,seed,gamma_star,lo,hi,in_window\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_float(r.c),
            r.n,
            r.trial,
            r.seed,
            r.gamma_star,
            fmt_float(r.lo),
            fmt_float(r.hi),
            r.in_window
        );
    }
    out
}
