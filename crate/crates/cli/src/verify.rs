//! Randomized verification suites. Each suite generates `cases` seeded
//! instances, checks the corresponding exact property, and reports every
//! failure with the violating instance serialized for replay.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use gatenet_core::{
    dominates, enumerate_monotone_events, fkg_check, holley_check, is_epsilon_admissible, is_in_w,
    lll_verify, lss_construct, majority_bound, rho, rng_from_seed, sample_admissible, theta,
    trial_seed, verify_w_domination, verify_zdom, Closure, Dag, Event, LllInstance, Measure,
    SampleStrategy,
};
use rand::Rng;

const TOL: f64 = 1e-9;

#[derive(Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}: {}/{} cases passed",
            self.suite,
            self.cases as usize - self.failures.len(),
            self.cases
        );
        for f in &self.failures {
            let _ = writeln!(out, "FAIL {f}");
        }
        out
    }
}

pub fn run_suite(suite: &str, cases: u64, seed: u64) -> Result<SuiteReport> {
    if cases < 1 {
        bail!("cases must be >= 1");
    }
    let failures = match suite {
        "admissible" => admissible_suite(cases, seed),
        "domination" => domination_suite(cases, seed),
        "holley" => holley_suite(cases, seed),
        "fkg" => fkg_suite(cases, seed),
        "lll" => lll_suite(cases, seed),
        "wclass" => wclass_suite(cases, seed),
        "majority" => majority_suite(cases, seed),
        other => bail!("unknown suite '{other}' (expected admissible, domination, holley, fkg, lll, wclass, or majority)"),
    }?;
    Ok(SuiteReport { suite: suite.to_string(), cases, failures })
}

fn random_graph(n: usize, seed: u64) -> Result<(Dag, Closure)> {
    let mut rng = rng_from_seed(seed);
    let p = rng.random::<f64>() * 0.6;
    let g = Dag::sample_barak_erdos(n, p, seed ^ 0x5bd1e995)?;
    let c = Closure::of(&g)?;
    Ok((g, c))
}

fn random_dense(n: usize, seed: u64) -> Result<Measure> {
    let mut rng = rng_from_seed(seed);
    let mut t: Vec<f64> = (0..1usize << n).map(|_| rng.random::<f64>()).collect();
    let total: f64 = t.iter().sum();
    for p in &mut t {
        *p /= total;
    }
    Ok(Measure::dense(n, t)?)
}

/// Sampled admissible measures respect the exact failure-free floor
/// (1 - eps)^n, and the eps-Bernoulli measure attains it.
fn admissible_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let eps_grid = [0.05, 0.1, 0.25];
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let n = 2 + (s % 7) as usize; // 2..=8
        let eps = eps_grid[(case % 3) as usize];
        let (_, c) = random_graph(n, s)?;
        let m = sample_admissible(&c, eps, s, SampleStrategy::Mixture)?;
        let floor = (1.0 - eps).powi(n as i32);
        if !is_epsilon_admissible(&m, &c, eps, TOL)? {
            failures.push(format!("case {case}: sampler output failed membership\n{}", m.to_text()));
            continue;
        }
        if m.failure_free_prob() < floor - 1e-12 {
            failures.push(format!(
                "case {case}: failure-free {} below floor {floor}\n{}",
                m.failure_free_prob(),
                m.to_text()
            ));
        }
        let pi = Measure::bernoulli(n, eps)?;
        if (pi.failure_free_prob() - floor).abs() > 1e-12 {
            failures.push(format!("case {case}: pi_eps does not attain the floor at n={n}"));
        }
    }
    Ok(failures)
}

/// Flow-based domination decision vs exhaustive monotone-event comparison.
fn domination_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let events = enumerate_monotone_events(4)?;
    let mut failures = Vec::new();
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let mu = random_dense(4, s)?;
        let nu = random_dense(4, s ^ 0x9e3779b97f4a7c15)?;
        let oracle = events
            .iter()
            .try_fold(true, |acc, e| -> Result<bool> {
                Ok(acc && mu.prob(e)? <= nu.prob(e)? + TOL)
            })?;
        if dominates(&nu, &mu, TOL)? != oracle {
            failures.push(format!(
                "case {case}: flow decision disagrees with event oracle\nmu:\n{}nu:\n{}",
                mu.to_text(),
                nu.to_text()
            ));
        }
    }
    Ok(failures)
}

/// Measures passing the Holley criterion at eta dominate pi_eta.
fn holley_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let eta = 0.8;
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let mut rng = rng_from_seed(s);
        let n = 3 + (s % 3) as usize; // 3..=5
        // jittered mixtures of high-parameter products: the criterion
        // passes on a healthy fraction without holding by construction
        let comps: Vec<Measure> = (0..2)
            .map(|_| {
                let params: Vec<f64> = (0..n).map(|_| 0.75 + rng.random::<f64>() * 0.25).collect();
                Measure::product(&params)
            })
            .collect::<gatenet_core::Result<_>>()?;
        let w = 0.2 + rng.random::<f64>() * 0.6;
        let base = Measure::mixture(&[w, 1.0 - w], &comps)?;
        let mut table = base.dense_table().into_owned();
        for p in &mut table {
            *p = (*p * (1.0 + (rng.random::<f64>() - 0.5) * 0.01)).max(0.0);
        }
        let total: f64 = table.iter().sum();
        for p in &mut table {
            *p /= total;
        }
        let m = Measure::dense(n, table)?;
        let order: Vec<u32> = (1..=n as u32).collect();
        if holley_check(&m, eta, &order, TOL)? {
            let pi = Measure::bernoulli(n, eta)?;
            if !dominates(&m, &pi, 1e-6)? {
                failures.push(format!(
                    "case {case}: Holley certificate without domination\n{}",
                    m.to_text()
                ));
            }
        }
    }
    Ok(failures)
}

/// FKG on random product measures and random increasing events.
fn fkg_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let mut rng = rng_from_seed(s);
        let n = 3 + (s % 3) as usize; // 3..=5
        let params: Vec<f64> = (0..n).map(|_| rng.random()).collect();
        let m = Measure::product(&params)?;
        let e1 = random_increasing_event(n, &mut rng)?;
        let e2 = random_increasing_event(n, &mut rng)?;
        if !fkg_check(&m, &e1, &e2, 1e-12)? {
            failures.push(format!("case {case}: increasing events negatively correlated (n={n})"));
        }
    }
    Ok(failures)
}

/// Upward closure of a random seed set: always an increasing event.
fn random_increasing_event(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Result<Event> {
    let size = 1u32 << n;
    let mut member = vec![false; size as usize];
    for _ in 0..3 {
        let lo: u32 = rng.random_range(0..size);
        for mask in 0..size {
            if mask & lo == lo {
                member[mask as usize] = true;
            }
        }
    }
    Ok(Event::from_fn(n, |m| member[m as usize])?)
}

/// Local-lemma condition and conclusion on admissible instances with
/// r_i = 1/(Δ+1); lll_verify asserts exact >= bound internally.
fn lll_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let n = 3 + (s % 6) as usize; // 3..=8
        let (_, c) = random_graph(n, s)?;
        let gstar = c.closure_dag()?;
        let delta = c.delta().max(1);
        let eps = theta((delta + 1) as f64)?;
        let m = sample_admissible(&c, eps, s, SampleStrategy::Mixture)?;
        let r = vec![1.0 / (delta as f64 + 1.0); n];
        let inst = LllInstance::new(m, gstar, r)?;
        let report = lll_verify(&inst, TOL)?;
        if !report.condition_holds {
            failures.push(format!(
                "case {case}: condition failed on an admissible instance (n={n}, delta={delta})\n{}",
                inst.measure().to_text()
            ));
        } else if report.exact < report.bound - TOL {
            failures.push(format!(
                "case {case}: exact {} below bound {}",
                report.exact, report.bound
            ));
        }
    }
    Ok(failures)
}

/// W-member mixtures at the epsilon boundary dominate pi_rho; thinned laws
/// keep the alpha*lambda conditional floor.
fn wclass_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let mut rng = rng_from_seed(s);
        let n = 3 + (s % 4) as usize; // 3..=6
        // resample until max out-degree is 1 or 2
        let mut g = Dag::sample_barak_erdos(n, 0.3, s)?;
        for retry in 0..64 {
            let d = g.max_out_degree();
            if d >= 1 && d <= 2 {
                break;
            }
            g = Dag::sample_barak_erdos(n, 0.3, trial_seed(s, retry))?;
        }
        let delta = g.max_out_degree().clamp(1, 2);
        let eps = theta((delta + 1) as f64)?;
        let eta = 1.0 - eps;
        let comps: Vec<Measure> = (0..2)
            .map(|_| {
                let params: Vec<f64> = (0..n).map(|_| eta + rng.random::<f64>() * eps).collect();
                Measure::product(&params)
            })
            .collect::<gatenet_core::Result<_>>()?;
        let w = rng.random::<f64>() * 0.8 + 0.1;
        let mu = Measure::mixture(&[w, 1.0 - w], &comps)?;
        if !is_in_w(&mu, &g, eta, TOL)? {
            failures.push(format!("case {case}: constructed mixture left W (n={n})"));
            continue;
        }
        let p = rho(delta as u32, eps)?;
        let z = lss_construct(&mu, p.lambda)?;
        if !verify_zdom(&z, p.alpha, p.lambda, 1e-6)? {
            failures.push(format!(
                "case {case}: thinned law broke the alpha*lambda floor\n{}",
                mu.to_text()
            ));
            continue;
        }
        let cond1 = (1.0 - p.alpha) * (1.0 - p.lambda).powi(delta as i32);
        if (cond1 - eps).abs() > 1e-12 {
            failures.push(format!("case {case}: (1-a)(1-l)^d = {cond1} != eps = {eps}"));
        }
        if p.alpha < 1.0 - 1.0 / (delta as f64 + 1.0) - 1e-12
            || p.lambda < 1.0 / (delta as f64 + 1.0) - 1e-12
        {
            failures.push(format!("case {case}: alpha/lambda floor violated"));
        }
        if !verify_w_domination(&g, &mu, eta, 1e-6)? {
            failures.push(format!(
                "case {case}: W-member does not dominate pi_rho (n={n}, delta={delta})\ngraph:\n{}measure:\n{}",
                g.to_edge_list(),
                mu.to_text()
            ));
        }
    }
    Ok(failures)
}

pub const MAJORITY_MC_SAMPLES: u64 = 100_000;

/// Layered majority network: d disjoint blocks of a gates each feed one
/// output gate. M = output gate works and every block has a strict
/// majority of working gates. Monte Carlo estimate of P(M) under
/// independent per-gate success eta must stay above the closed-form bound
/// minus 3 binomial standard errors.
fn majority_suite(cases: u64, seed: u64) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let eta = 0.9;
    let d = 3u32;
    let fan_ins = [16u32, 64];
    for case in 0..cases {
        let s = trial_seed(seed, case);
        let a = fan_ins[(case % 2) as usize];
        let bound = majority_bound(eta, a, d)?;
        let mut rng = rng_from_seed(s);
        let mut good = 0u64;
        for _ in 0..MAJORITY_MC_SAMPLES {
            let output_works = rng.random::<f64>() < eta;
            let mut ok = output_works;
            for _ in 0..d {
                if !ok {
                    break;
                }
                let working = (0..a).filter(|_| rng.random::<f64>() < eta).count() as u32;
                ok &= 2 * working > a;
            }
            if ok {
                good += 1;
            }
        }
        let p_hat = good as f64 / MAJORITY_MC_SAMPLES as f64;
        let se = (p_hat * (1.0 - p_hat) / MAJORITY_MC_SAMPLES as f64).sqrt();
        if p_hat < bound - 3.0 * se {
            failures.push(format!(
                "case {case}: empirical P(M) = {p_hat} below bound {bound} - 3se (a={a}, d={d})"
            ));
        }
    }
    Ok(failures)
}
