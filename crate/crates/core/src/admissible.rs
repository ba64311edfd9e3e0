//! Membership checks for the failure-measure classes M_ε and W^G_η, and
//! constructive samplers of admissible measures.
//!
//! M_ε: for every gate i and disjoint Y, Y' outside the RTC of i, the
//! conditional failure probability of i given the assignment on Y ∪ Y' is at
//! most ε (zero-probability conditioning events are skipped). W^G_η is the
//! dual class with conditionals of X_i = 1 bounded below by η for
//! assignments outside the closed out-neighborhood of i.

use rand::Rng;

use crate::closure::Closure;
use crate::dag::Dag;
use crate::error::{Error, Result};
use crate::measure::Measure;
use crate::rng::rng_from_seed;
use crate::scan::ConditionalScan;

/// Enumeration cap: each vertex takes one of three roles, so the check costs
/// up to n * 3^(n-1) conditionals.
pub const MAX_ENUM_COORDS: usize = 12;

fn check_enum_size(op: &'static str, n: usize) -> Result<()> {
    if n > MAX_ENUM_COORDS {
        return Err(Error::TooLarge { op, n, cap: MAX_ENUM_COORDS });
    }
    Ok(())
}

/// Is `m` in M_ε for the network whose gate interconnection graph has the
/// given closure? Full 3-ary enumeration over every vertex i and every
/// disjoint pair Y, Y' ⊆ V ∖ Γ*(i).
pub fn is_epsilon_admissible(m: &Measure, c: &Closure, eps: f64, tol: f64) -> Result<bool> {
    if m.n() != c.n() {
        return Err(Error::DimensionMismatch(m.n(), c.n()));
    }
    check_enum_size("epsilon-admissibility check", m.n())?;
    let dense = m.dense_table();
    let n = m.n();
    for i in 0..n {
        let coords: Vec<usize> = (0..n).filter(|&v| !c.reach0()[i].get(v)).collect();
        let scan = ConditionalScan::new(&dense, n, i, &coords);
        if scan.find_violation(|_, cond| cond <= eps + tol).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `m` in W^G_η for the graph `g`?
pub fn is_in_w(m: &Measure, g: &Dag, eta: f64, tol: f64) -> Result<bool> {
    if m.n() != g.n() {
        return Err(Error::DimensionMismatch(m.n(), g.n()));
    }
    check_enum_size("W-class check", m.n())?;
    let dense = m.dense_table();
    let n = m.n();
    for i in 0..n {
        let mut closed = vec![false; n];
        closed[i] = true;
        for &j in &g.adj0()[i] {
            closed[j as usize] = true;
        }
        let coords: Vec<usize> = (0..n).filter(|&v| !closed[v]).collect();
        let scan = ConditionalScan::new(&dense, n, i, &coords);
        if scan.find_violation(|_, cond| cond >= eta - tol).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleStrategy {
    /// Random mixture of product components with parameters <= ε. Admissible
    /// by construction: every conditional is a convex combination of
    /// component marginals, each <= ε.
    Mixture,
    /// Perturb a dense admissible measure and reject until the membership
    /// check passes.
    PerturbVerify,
}

/// Retries before `PerturbVerify` gives up.
pub const PERTURB_RETRY_BUDGET: usize = 64;

/// Draw a measure passing `is_epsilon_admissible(_, c, eps, 1e-9)`.
/// Deterministic given the seed.
pub fn sample_admissible(
    c: &Closure,
    eps: f64,
    seed: u64,
    strategy: SampleStrategy,
) -> Result<Measure> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidParameter(format!("eps = {eps} outside [0, 1]")));
    }
    check_enum_size("admissible sampling", c.n())?;
    let mut rng = rng_from_seed(seed);
    let n = c.n();
    let mixture = |rng: &mut rand_chacha::ChaCha8Rng| -> Result<Measure> {
        let k = rng.random_range(1..=4usize);
        let mut components = Vec::with_capacity(k);
        let mut weights = Vec::with_capacity(k);
        for _ in 0..k {
            let params: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * eps).collect();
            components.push(Measure::product(&params)?);
            weights.push(rng.random::<f64>() + 1e-3);
        }
        let total: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= total;
        }
        Measure::mixture(&weights, &components)
    };
    match strategy {
        SampleStrategy::Mixture => mixture(&mut rng),
        SampleStrategy::PerturbVerify => {
            for _ in 0..PERTURB_RETRY_BUDGET {
                let base = mixture(&mut rng)?;
                let mut table = base.dense_table().into_owned();
                let jitter = eps * 0.02 / table.len() as f64;
                for p in &mut table {
                    *p = (*p + (rng.random::<f64>() - 0.5) * jitter).max(0.0);
                }
                let total: f64 = table.iter().sum();
                for p in &mut table {
                    *p /= total;
                }
                let candidate = Measure::dense(n, table)?;
                if is_epsilon_admissible(&candidate, c, eps, 1e-9)? {
                    return Ok(candidate);
                }
            }
            Err(Error::RetryBudgetExhausted(PERTURB_RETRY_BUDGET))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Closure {
        Closure::of(&Dag::new(3, vec![(1, 2), (2, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn bernoulli_at_eps_is_admissible() {
        let c = path3();
        let m = Measure::bernoulli(3, 0.1).unwrap();
        assert!(is_epsilon_admissible(&m, &c, 0.1, 1e-9).unwrap());
    }

    #[test]
    fn bernoulli_above_eps_is_not() {
        let c = path3();
        let m = Measure::bernoulli(3, 0.2).unwrap();
        assert!(!is_epsilon_admissible(&m, &c, 0.1, 1e-9).unwrap());
    }

    #[test]
    fn mixture_below_eps_is_admissible() {
        let c = path3();
        let lo = Measure::bernoulli(3, 0.05).unwrap();
        let hi = Measure::bernoulli(3, 0.1).unwrap();
        let m = Measure::mixture(&[0.5, 0.5], &[lo, hi]).unwrap();
        assert!(is_epsilon_admissible(&m, &c, 0.1, 1e-9).unwrap());
    }

    #[test]
    fn w_class_examples() {
        let g = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let hi = Measure::bernoulli(3, 0.9).unwrap();
        assert!(is_in_w(&hi, &g, 0.9, 1e-9).unwrap());
        let mid = Measure::bernoulli(3, 0.5).unwrap();
        assert!(!is_in_w(&mid, &g, 0.9, 1e-9).unwrap());
    }

    #[test]
    fn admissible_complement_duality_on_path() {
        // m ∈ M_ε on G ⟺ complement(m) ∈ W_{1-ε} on G*
        let g = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let c = Closure::of(&g).unwrap();
        let gstar = c.closure_dag().unwrap();
        let m = sample_admissible(&c, 0.1, 4, SampleStrategy::Mixture).unwrap();
        assert!(is_epsilon_admissible(&m, &c, 0.1, 1e-9).unwrap());
        assert!(is_in_w(&m.complement(), &gstar, 0.9, 1e-9).unwrap());
    }

    #[test]
    fn sampler_zero_eps_is_all_zeros_point_mass() {
        let c = path3();
        let m = sample_admissible(&c, 0.0, 9, SampleStrategy::Mixture).unwrap();
        assert!((m.failure_free_prob() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sampler_output_passes_checker() {
        let c = path3();
        for seed in 0..5 {
            let m = sample_admissible(&c, 0.1, seed, SampleStrategy::Mixture).unwrap();
            assert!(is_epsilon_admissible(&m, &c, 0.1, 1e-9).unwrap());
            let p = sample_admissible(&c, 0.1, seed, SampleStrategy::PerturbVerify).unwrap();
            assert!(is_epsilon_admissible(&p, &c, 0.1, 1e-9).unwrap());
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let c = path3();
        let a = sample_admissible(&c, 0.1, 77, SampleStrategy::Mixture).unwrap();
        let b = sample_admissible(&c, 0.1, 77, SampleStrategy::Mixture).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn size_guard() {
        let g = Dag::new(13, vec![]).unwrap();
        let c = Closure::of(&g).unwrap();
        let m = Measure::bernoulli(13, 0.1).unwrap();
        assert!(matches!(
            is_epsilon_admissible(&m, &c, 0.1, 1e-9),
            Err(Error::TooLarge { .. })
        ));
    }
}
