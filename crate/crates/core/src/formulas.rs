//! Closed-form quantities: the threshold function ϑ, exact failure-free
//! probabilities, the phase-transition limit curve, local-lemma lower
//! bounds, longest-chain concentration windows, majority-vote reliability,
//! and the α/λ/ρ construction parameters.
//!
//! Natural logarithms throughout. Powers of near-one quantities go through
//! exp(n·ln1p(-x)): at n = 2^14 the direct pow of (1 - 3e-5) loses digits
//! the stated tolerances cannot afford.

use crate::error::{Error, Result};

fn check_prob(name: &'static str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("{name} = {p} outside [0, 1]")));
    }
    Ok(())
}

/// ϑ(x) = (x-1)^(x-1) / x^x, with ϑ(1) := 1 by the 0^0 = 1 convention.
/// The largest admissible failure bound at reach x is ϑ(x).
pub fn theta(x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::InvalidParameter(format!("theta argument {x} < 1")));
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    Ok(((x - 1.0) * (x - 1.0).ln() - x * x.ln()).exp())
}

/// (1 - eps)^n, the exact minimal failure-free probability over the
/// ε-admissible class.
pub fn f_epsilon_exact(n: u64, eps: f64) -> Result<f64> {
    check_prob("eps", eps)?;
    if n == 0 {
        return Ok(1.0);
    }
    if eps == 1.0 {
        return Ok(0.0);
    }
    Ok((n as f64 * (-eps).ln_1p()).exp())
}

/// Limit curve F(c): 0 for c <= 1, exp(-c/(e(c-1))) above; increasing on
/// (1, ∞) toward e^(-1/e).
pub fn phase_limit(c: f64) -> f64 {
    if c <= 1.0 {
        0.0
    } else {
        (-c / (std::f64::consts::E * (c - 1.0))).exp()
    }
}

/// Local-lemma lower bound (1 - 1/(Δ+1))^n on the failure-free probability.
pub fn lll_lower_bound(delta: u32, n: u64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if delta == 0 {
        return 0.0;
    }
    (n as f64 * (-1.0 / (delta as f64 + 1.0)).ln_1p()).exp()
}

/// Exact extremal value (1 - Δ^Δ/(Δ+1)^(Δ+1))^n attained by the
/// ϑ(Δ+1)-Bernoulli measure.
pub fn f_g_exact(delta: u32, n: u64) -> f64 {
    let eps = theta(delta as f64 + 1.0).expect("delta + 1 >= 1");
    f_epsilon_exact(n, eps).expect("theta is a probability")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Subcritical,
    CriticalOrSuper,
}

/// Concentration window for the longest-reach statistic γ*.
#[derive(Clone, Copy, Debug)]
pub struct PtWindow {
    pub lo: f64,
    pub hi: f64,
    pub regime: Regime,
    /// Width constant of the critical-or-super window; only its existence
    /// is guaranteed, so the value is caller-supplied.
    pub a: f64,
    /// Relative slack of the subcritical window, in (0, 1).
    pub kappa: f64,
}

/// γ* concentration window at density parameter c (edge probability
/// c·ln n/n). For c >= 1: center n(1 - 1/c) + 2n·lnln n/(c·ln n),
/// half-width A·n/ln n. For c < 1: ((1-κ)·n^c·ln n, n^c·ln n].
pub fn pittel_tungol_window(n: u64, c: f64, a: f64, kappa: f64) -> Result<PtWindow> {
    if n < 16 {
        return Err(Error::InvalidParameter(format!("window needs n >= 16, got {n}")));
    }
    if !(a > 0.0) {
        return Err(Error::InvalidParameter(format!("A = {a} must be positive")));
    }
    if !(0.0 < kappa && kappa < 1.0) {
        return Err(Error::InvalidParameter(format!("kappa = {kappa} outside (0, 1)")));
    }
    if !(c >= 0.0) {
        return Err(Error::InvalidParameter(format!("c = {c} must be nonnegative")));
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    if c >= 1.0 {
        let center = nf * (1.0 - 1.0 / c) + 2.0 * nf * ln_n.ln() / (c * ln_n);
        let half = a * nf / ln_n;
        Ok(PtWindow { lo: center - half, hi: center + half, regime: Regime::CriticalOrSuper, a, kappa })
    } else {
        let hi = nf.powf(c) * ln_n;
        Ok(PtWindow { lo: (1.0 - kappa) * hi, hi, regime: Regime::Subcritical, a, kappa })
    }
}

/// Reliability of a depth-d majority cascade of fan-in-a voters with
/// per-input success probability η >= 1/2: η(1 - e^(-a(4η-2)^2))^d.
pub fn majority_bound(eta: f64, a: u32, d: u32) -> Result<f64> {
    check_prob("eta", eta)?;
    if eta < 0.5 {
        return Err(Error::InvalidParameter(format!("majority bound needs eta >= 1/2, got {eta}")));
    }
    let factor = 1.0 - (-(a as f64) * (4.0 * eta - 2.0).powi(2)).exp();
    Ok(eta * factor.powi(d as i32))
}

/// Construction parameters for dominating a W-class measure from below.
#[derive(Clone, Copy, Debug)]
pub struct RhoParams {
    pub alpha: f64,
    pub lambda: f64,
    pub rho: f64,
}

/// α = 1 - ε^(1/(Δ+1))/Δ^(Δ/(Δ+1)), λ = 1 - (εΔ)^(1/(Δ+1)), ρ = αλ.
/// Requires ε <= Δ^Δ/(Δ+1)^(Δ+1); at that boundary (1-α)(1-λ)^Δ = ε holds
/// with equality, and α >= 1 - 1/(Δ+1), λ >= 1/(Δ+1).
pub fn rho(delta: u32, eps: f64) -> Result<RhoParams> {
    check_prob("eps", eps)?;
    if delta < 1 {
        return Err(Error::InvalidParameter("rho needs delta >= 1".into()));
    }
    let d = delta as f64;
    let boundary = theta(d + 1.0)?;
    if eps > boundary + 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "eps = {eps} violates eps <= delta^delta/(delta+1)^(delta+1) = {boundary} at delta = {delta}"
        )));
    }
    let inv = 1.0 / (d + 1.0);
    let alpha = 1.0 - eps.powf(inv) / d.powf(d * inv);
    let lambda = 1.0 - (eps * d).powf(inv);
    Ok(RhoParams { alpha, lambda, rho: alpha * lambda })
}

/// One Monte Carlo sweep observation at density parameter c.
#[derive(Clone, Copy, Debug)]
pub struct PhasePoint {
    pub c: f64,
    pub n: u64,
    pub gamma_star: u64,
    /// (1 - ϑ(gamma_star))^n.
    pub f_n: f64,
    /// phase_limit(c).
    pub f_limit: f64,
}

impl PhasePoint {
    pub fn new(c: f64, n: u64, gamma_star: u64) -> Result<PhasePoint> {
        let eps = theta(gamma_star as f64)?;
        Ok(PhasePoint { c, n, gamma_star, f_n: f_epsilon_exact(n, eps)?, f_limit: phase_limit(c) })
    }
}

/// Smallest design size and largest density parameter under which a
/// tolerable-failure guarantee eps0 keeps the designer ahead.
#[derive(Clone, Copy, Debug)]
pub struct GameParams {
    pub eps0: f64,
    pub n0: u64,
    pub c: f64,
    /// phase_limit(c) - 1/2; positive means the supercritical limit wins a
    /// fair coin comparison.
    pub delta_margin: f64,
}

/// Scan n0 ascending with c = n0/ln n0 (the largest c keeping the edge
/// probability c·ln(n0)/n0 at most 1) and return the first pair with
/// eps0 <= 1/(e(1-1/c)n0). The bound is maximized at n0 = 2, so for
/// eps0 above ≈ 0.2815 no scanned pair qualifies; there c is lowered at
/// n0 = 2 until the bound is met, which keeps both invariants.
pub fn game_parameters(eps0: f64) -> Result<GameParams> {
    if !(0.0 < eps0 && eps0 < 1.0) {
        return Err(Error::InvalidParameter(format!("eps0 = {eps0} outside (0, 1)")));
    }
    let e = std::f64::consts::E;
    for n0 in 2u64..=64 {
        let c = n0 as f64 / (n0 as f64).ln();
        if eps0 <= 1.0 / (e * (1.0 - 1.0 / c) * n0 as f64) {
            return Ok(GameParams { eps0, n0, c, delta_margin: phase_limit(c) - 0.5 });
        }
    }
    // eps0 too large for any c = n0/ln n0: solve eps0 = 1/(e(1-1/c)n0) for c
    // at n0 = 2, with a hair of slack so the invariant survives rounding
    let n0 = 2u64;
    let c = 1.0 / (1.0 - 1.0 / (e * n0 as f64 * eps0 * (1.0 + 1e-9)));
    debug_assert!(c > 0.0 && c * (n0 as f64).ln() / n0 as f64 <= 1.0);
    debug_assert!(eps0 <= 1.0 / (e * (1.0 - 1.0 / c) * n0 as f64));
    Ok(GameParams { eps0, n0, c, delta_margin: phase_limit(c) - 0.5 })
}
