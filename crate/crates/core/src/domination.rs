//! Stochastic domination: decision by max-flow feasibility, monotone
//! coupling extraction, the Holley criterion, FKG, the lopsided local
//! lemma check, and the Liggett-Schonmann-Stacey style construction for
//! W-class measures.
//!
//! Domination is decided by a transport-feasibility reduction: supplies are
//! the dominated measure's point masses, demands the dominating measure's,
//! and arcs exist only between componentwise-comparable configurations. A
//! feasible unit flow is exactly a monotone coupling (Strassen). Dedekind
//! numbers rule out monotone-event enumeration past n = 4; that route is
//! kept only as a test oracle.

use std::fmt::Write as _;

use crate::admissible::is_in_w;
use crate::dag::Dag;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::formulas;
use crate::measure::{mask_to_bitstring, Event, Measure};
use crate::scan::ConditionalScan;

/// Flow network size is 2 * 2^n + 2 nodes.
pub const MAX_FLOW_COORDS: usize = 10;

/// Probabilities are scaled to integers at this resolution and the flow is
/// exact, so float drift cannot decide near-ties.
const FLOW_SCALE: f64 = 1e12;

fn check_flow_size(op: &'static str, n: usize) -> Result<()> {
    if n > MAX_FLOW_COORDS {
        return Err(Error::TooLarge { op, n, cap: MAX_FLOW_COORDS });
    }
    Ok(())
}

struct TransportProblem {
    net: FlowNetwork,
    middle_edges: Vec<(u32, u32, usize)>,
    target: u64,
}

fn build_transport(dominated: &Measure, dominating: &Measure) -> TransportProblem {
    let n = dominated.n();
    let size = 1usize << n;
    let source = 0;
    let sink = 1;
    let left = |m: usize| 2 + m;
    let right = |m: usize| 2 + size + m;
    let mut net = FlowNetwork::new(2 + 2 * size);
    let mut supply = 0u64;
    let mut demand = 0u64;
    for m in 0..size {
        let s = (dominated.mass(m as u32) * FLOW_SCALE).round() as u64;
        let d = (dominating.mass(m as u32) * FLOW_SCALE).round() as u64;
        supply += s;
        demand += d;
        if s > 0 {
            net.add_edge(source, left(m), s);
        }
        if d > 0 {
            net.add_edge(right(m), sink, d);
        }
    }
    let mut middle_edges = Vec::new();
    for upper in 0..size as u32 {
        // subsets of `upper` are exactly the configurations below it
        let mut sub = upper;
        loop {
            let id = net.add_edge(left(sub as usize), right(upper as usize), u64::MAX / 4);
            middle_edges.push((sub, upper, id));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & upper;
        }
    }
    TransportProblem { net, middle_edges, target: supply.min(demand) }
}

/// One integer unit of slack per hypercube point absorbs rounding, plus the
/// caller's tolerance on the flow value.
fn flow_slack(n: usize, tol: f64) -> u64 {
    (1u64 << n) + (tol.max(0.0) * FLOW_SCALE).round() as u64
}

/// True iff `mu` is stochastically dominated by `nu` (μ ⪯_s ν), within
/// `tol` on the flow value.
pub fn dominates(nu: &Measure, mu: &Measure, tol: f64) -> Result<bool> {
    if nu.n() != mu.n() {
        return Err(Error::DimensionMismatch(nu.n(), mu.n()));
    }
    check_flow_size("domination check", nu.n())?;
    let mut problem = build_transport(mu, nu);
    let flow = problem.net.max_flow(0, 1);
    Ok(flow + flow_slack(mu.n(), tol) >= problem.target)
}

/// A joint distribution on pairs (ω, ω') with ω ≤ ω' componentwise,
/// witnessing μ ⪯_s ν.
#[derive(Clone, Debug)]
pub struct Coupling {
    n: usize,
    joint: Vec<(u32, u32, f64)>,
}

impl Coupling {
    pub fn n(&self) -> usize {
        self.n
    }

    /// (ω, ω', mass) triples, ω the dominated-side configuration.
    pub fn joint(&self) -> &[(u32, u32, f64)] {
        &self.joint
    }

    pub fn total_mass(&self) -> f64 {
        self.joint.iter().map(|&(_, _, m)| m).sum()
    }

    pub fn left_marginal(&self) -> Vec<f64> {
        let mut out = vec![0.0; 1 << self.n];
        for &(a, _, m) in &self.joint {
            out[a as usize] += m;
        }
        out
    }

    pub fn right_marginal(&self) -> Vec<f64> {
        let mut out = vec![0.0; 1 << self.n];
        for &(_, b, m) in &self.joint {
            out[b as usize] += m;
        }
        out
    }

    /// Check the three coupling invariants against the prescribed marginals.
    pub fn validate(&self, mu: &Measure, nu: &Measure, tol: f64) -> Result<()> {
        for &(a, b, m) in &self.joint {
            if a & !b != 0 {
                return Err(Error::InvalidParameter(format!(
                    "coupling mass on incomparable pair ({}, {})",
                    mask_to_bitstring(a, self.n),
                    mask_to_bitstring(b, self.n)
                )));
            }
            if m < 0.0 {
                return Err(Error::InvalidParameter("negative coupling mass".into()));
            }
        }
        if (self.total_mass() - 1.0).abs() > tol {
            return Err(Error::InvalidParameter(format!(
                "coupling mass {} is not 1",
                self.total_mass()
            )));
        }
        let left = self.left_marginal();
        let right = self.right_marginal();
        for mask in 0..1u32 << self.n {
            if (left[mask as usize] - mu.mass(mask)).abs() > tol {
                return Err(Error::InvalidParameter(format!(
                    "left marginal off at {}",
                    mask_to_bitstring(mask, self.n)
                )));
            }
            if (right[mask as usize] - nu.mass(mask)).abs() > tol {
                return Err(Error::InvalidParameter(format!(
                    "right marginal off at {}",
                    mask_to_bitstring(mask, self.n)
                )));
            }
        }
        Ok(())
    }

    /// Text format: one `omega omega' mass` line per support pair.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for &(a, b, m) in &self.joint {
            let _ = writeln!(
                s,
                "{} {} {:.17e}",
                mask_to_bitstring(a, self.n),
                mask_to_bitstring(b, self.n),
                m
            );
        }
        s
    }
}

/// Extract one monotone coupling witnessing μ ⪯_s ν (not unique in
/// general). Errors if ν does not dominate μ.
pub fn extract_coupling(mu: &Measure, nu: &Measure) -> Result<Coupling> {
    if nu.n() != mu.n() {
        return Err(Error::DimensionMismatch(nu.n(), mu.n()));
    }
    check_flow_size("coupling extraction", nu.n())?;
    let mut problem = build_transport(mu, nu);
    let flow = problem.net.max_flow(0, 1);
    if flow + flow_slack(mu.n(), 0.0) < problem.target {
        return Err(Error::NotDominated("nu".into(), "mu".into()));
    }
    let mut joint = Vec::new();
    let mut total = 0u64;
    for &(a, b, id) in &problem.middle_edges {
        let f = problem.net.flow_on(id);
        if f > 0 {
            joint.push((a, b, f));
            total += f;
        }
    }
    let joint = joint
        .into_iter()
        .map(|(a, b, f)| (a, b, f as f64 / total as f64))
        .collect();
    Ok(Coupling { n: mu.n(), joint })
}

/// Holley-style criterion: if every positive-probability conditional of
/// X_i = 1 given an assignment on predecessors of i in `order` is at least
/// η - tol, then μ ⪰_s π_η. `order` is a permutation of 1..=n.
pub fn holley_check(m: &Measure, eta: f64, order: &[u32], tol: f64) -> Result<bool> {
    let n = m.n();
    if order.len() != n {
        return Err(Error::DimensionMismatch(order.len(), n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v < 1 || v as usize > n || seen[(v - 1) as usize] {
            return Err(Error::InvalidParameter(format!("order is not a permutation of 1..={n}")));
        }
        seen[(v - 1) as usize] = true;
    }
    if n > crate::admissible::MAX_ENUM_COORDS {
        return Err(Error::TooLarge { op: "Holley check", n, cap: crate::admissible::MAX_ENUM_COORDS });
    }
    let dense = m.dense_table();
    for k in 0..n {
        let pivot = (order[k] - 1) as usize;
        let coords: Vec<usize> = order[..k].iter().map(|&v| (v - 1) as usize).collect();
        let scan = ConditionalScan::new(&dense, n, pivot, &coords);
        if scan.find_violation(|_, cond| cond >= eta - tol).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// FKG for product measures: increasing events are nonnegatively
/// correlated. Errors on non-product measures or non-increasing events.
pub fn fkg_check(m: &Measure, e1: &Event, e2: &Event, tol: f64) -> Result<bool> {
    if !matches!(m.form(), crate::measure::MeasureForm::Product(_)) {
        return Err(Error::InvalidParameter("FKG check requires a product measure".into()));
    }
    if !e1.is_increasing() || !e2.is_increasing() {
        return Err(Error::InvalidParameter("FKG check requires increasing events".into()));
    }
    let joint = m.prob(&e1.intersect(e2)?)?;
    Ok(joint >= m.prob(e1)? * m.prob(e2)? - tol)
}

/// A lopsided-local-lemma instance: the joint law of the bad-event
/// indicators H_i = {ω(i) = 1}, a dependency digraph, and the constants r_i.
#[derive(Clone, Debug)]
pub struct LllInstance {
    measure: Measure,
    graph: Dag,
    r: Vec<f64>,
}

impl LllInstance {
    pub fn new(measure: Measure, graph: Dag, r: Vec<f64>) -> Result<LllInstance> {
        if measure.n() != graph.n() || r.len() != graph.n() {
            return Err(Error::DimensionMismatch(measure.n(), graph.n()));
        }
        for &ri in &r {
            if !(0.0..1.0).contains(&ri) {
                return Err(Error::InvalidParameter(format!("r = {ri} outside [0, 1)")));
            }
        }
        Ok(LllInstance { measure, graph, r })
    }

    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    pub fn graph(&self) -> &Dag {
        &self.graph
    }

    pub fn r(&self) -> &[f64] {
        &self.r
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LllReport {
    /// Did every only-negative conditional stay under its threshold?
    pub condition_holds: bool,
    /// The guaranteed lower bound ∏ (1 - r_i).
    pub bound: f64,
    /// The exact probability that no bad event occurs.
    pub exact: f64,
}

/// Verify the lopsided-local-lemma condition and conclusion. The condition
/// thresholds are r_i ∏_{j ∈ N(i)} (1 - r_j) over the open out-neighborhood;
/// with r_i = 1/(Δ+1) this accommodates conditionals up to exactly
/// Δ^Δ/(Δ+1)^(Δ+1) at out-degree Δ. When the condition holds the exact
/// probability must meet the bound; this is asserted.
pub fn lll_verify(inst: &LllInstance, tol: f64) -> Result<LllReport> {
    let n = inst.measure.n();
    check_flow_size("local-lemma verification", n)?;
    let dense = inst.measure.dense_table();
    let adj = inst.graph.adj0();
    let mut condition_holds = true;
    'outer: for i in 0..n {
        let mut closed = vec![false; n];
        closed[i] = true;
        for &j in &adj[i] {
            closed[j as usize] = true;
        }
        let threshold = inst.r[i]
            * adj[i].iter().map(|&j| 1.0 - inst.r[j as usize]).product::<f64>();
        let coords: Vec<usize> = (0..n).filter(|&v| !closed[v]).collect();
        let scan = ConditionalScan::new(&dense, n, i, &coords);
        if scan
            .find_violation_negative(|_, cond| cond <= threshold + tol)
            .is_some()
        {
            condition_holds = false;
            break 'outer;
        }
    }
    let bound = inst.r.iter().map(|&ri| 1.0 - ri).product();
    let exact = inst.measure.failure_free_prob();
    if condition_holds {
        assert!(
            exact >= bound - tol,
            "local-lemma conclusion violated: exact {exact} < bound {bound}"
        );
    }
    Ok(LllReport { condition_holds, bound, exact })
}

/// Exact law of Z with Z_i = X_i Y_i, X ~ mu, Y ~ π_λ independent. Computed
/// by a per-coordinate thinning transform, no sampling.
pub fn lss_construct(mu: &Measure, lambda: f64) -> Result<Measure> {
    let n = mu.n();
    if n > crate::admissible::MAX_ENUM_COORDS {
        return Err(Error::TooLarge { op: "LSS construction", n, cap: crate::admissible::MAX_ENUM_COORDS });
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidParameter(format!("lambda = {lambda} outside [0, 1]")));
    }
    let mut table = mu.dense_table().into_owned();
    for k in 0..n {
        let bit = 1usize << k;
        for mask in 0..table.len() {
            if mask & bit != 0 {
                let p = table[mask];
                table[mask - bit] += (1.0 - lambda) * p;
                table[mask] = lambda * p;
            }
        }
    }
    Measure::dense(n, table)
}

/// Check P(Z_i = 1 | assignment) >= αλ - tol for every vertex, every
/// subset, and every positive-probability assignment on it.
pub fn verify_zdom(z_law: &Measure, alpha: f64, lambda: f64, tol: f64) -> Result<bool> {
    let n = z_law.n();
    check_flow_size("Z-domination check", n)?;
    let floor = alpha * lambda;
    let dense = z_law.dense_table();
    for i in 0..n {
        let coords: Vec<usize> = (0..n).filter(|&v| v != i).collect();
        let scan = ConditionalScan::new(&dense, n, i, &coords);
        if scan.find_violation(|_, cond| cond >= floor - tol).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// W-class domination guarantee: any μ ∈ W^G_η with ε = 1 - η below the
/// Δ-boundary dominates π_ρ with ρ from the closed-form construction. A
/// false return is a counterexample to the guarantee.
pub fn verify_w_domination(g: &Dag, mu: &Measure, eta: f64, tol: f64) -> Result<bool> {
    let n = mu.n();
    check_flow_size("W-class domination check", n)?;
    if !is_in_w(mu, g, eta, tol)? {
        return Err(Error::HypothesisViolated(format!("measure is not in W with eta = {eta}")));
    }
    let eps = 1.0 - eta;
    // the construction needs out-degree at least 1; an edgeless graph still
    // satisfies the guarantee with delta = 1
    let delta = g.max_out_degree().max(1);
    let boundary = formulas::theta((delta + 1) as f64)?;
    if eps > boundary + 1e-12 {
        return Err(Error::HypothesisViolated(format!(
            "eps = {eps} exceeds the admissible boundary {boundary} for delta = {delta}"
        )));
    }
    let params = formulas::rho(delta as u32, eps)?;
    let pi_rho = Measure::bernoulli(n, params.rho)?;
    dominates(mu, &pi_rho, tol)
}

/// Brute-force enumeration of all increasing events on n coordinates.
/// Dedekind growth restricts this to n <= 4 (168 events); it exists as the
/// independent oracle for the flow-based domination decision.
pub fn enumerate_monotone_events(n: usize) -> Result<Vec<Event>> {
    if n > 4 {
        return Err(Error::TooLarge { op: "monotone event enumeration", n, cap: 4 });
    }
    let size = 1usize << n;
    let mut out = Vec::new();
    'cand: for tab in 0u32..1u32 << size {
        for mask in 0..size {
            if tab >> mask & 1 == 1 {
                for i in 0..n {
                    if mask & (1 << i) == 0 && tab >> (mask | 1 << i) & 1 == 0 {
                        continue 'cand;
                    }
                }
            }
        }
        out.push(Event::from_fn(n, |m| tab >> m & 1 == 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::Closure;

    const TOL: f64 = 1e-9;

    #[test]
    fn bernoulli_domination_both_ways() {
        let lo = Measure::bernoulli(3, 0.2).unwrap();
        let hi = Measure::bernoulli(3, 0.5).unwrap();
        assert!(dominates(&hi, &lo, TOL).unwrap());
        assert!(!dominates(&lo, &hi, TOL).unwrap());
        assert!(dominates(&lo, &lo, TOL).unwrap());
    }

    #[test]
    fn flow_matches_monotone_event_oracle_small() {
        let events = enumerate_monotone_events(3).unwrap();
        assert_eq!(events.len(), 20);
        let lo = Measure::bernoulli(3, 0.2).unwrap();
        let hi = Measure::bernoulli(3, 0.5).unwrap();
        let oracle = |mu: &Measure, nu: &Measure| {
            events
                .iter()
                .all(|e| mu.prob(e).unwrap() <= nu.prob(e).unwrap() + TOL)
        };
        assert!(oracle(&lo, &hi));
        assert!(!oracle(&hi, &lo));
        // the witness for the failing direction: "at least one 1"
        let at_least_one = Event::from_fn(3, |m| m != 0).unwrap();
        assert!(hi.prob(&at_least_one).unwrap() > lo.prob(&at_least_one).unwrap());
    }

    #[test]
    fn monotone_event_counts() {
        assert_eq!(enumerate_monotone_events(4).unwrap().len(), 168);
        assert!(enumerate_monotone_events(5).is_err());
    }

    #[test]
    fn forced_coupling_at_n1() {
        let mu = Measure::bernoulli(1, 0.2).unwrap();
        let nu = Measure::bernoulli(1, 0.5).unwrap();
        let c = extract_coupling(&mu, &nu).unwrap();
        c.validate(&mu, &nu, TOL).unwrap();
        let mut joint = c.joint().to_vec();
        joint.sort_by_key(|&(a, b, _)| (a, b));
        assert_eq!(joint.len(), 3);
        let close = |x: f64, y: f64| (x - y).abs() < 1e-9;
        assert!(joint[0].0 == 0 && joint[0].1 == 0 && close(joint[0].2, 0.5));
        assert!(joint[1].0 == 0 && joint[1].1 == 1 && close(joint[1].2, 0.3));
        assert!(joint[2].0 == 1 && joint[2].1 == 1 && close(joint[2].2, 0.2));
    }

    #[test]
    fn self_coupling_is_valid() {
        let m = Measure::product(&[0.3, 0.6]).unwrap();
        let c = extract_coupling(&m, &m).unwrap();
        c.validate(&m, &m, TOL).unwrap();
    }

    #[test]
    fn coupling_invariants_at_n2() {
        let mu = Measure::bernoulli(2, 0.25).unwrap();
        let nu = Measure::bernoulli(2, 0.75).unwrap();
        let c = extract_coupling(&mu, &nu).unwrap();
        c.validate(&mu, &nu, TOL).unwrap();
    }

    #[test]
    fn coupling_refuses_non_domination() {
        let mu = Measure::bernoulli(1, 0.5).unwrap();
        let nu = Measure::bernoulli(1, 0.2).unwrap();
        assert!(matches!(extract_coupling(&mu, &nu), Err(Error::NotDominated(_, _))));
    }

    #[test]
    fn holley_examples() {
        let eta = 0.8;
        let order: Vec<u32> = vec![1, 2, 3];
        let at = Measure::bernoulli(3, eta).unwrap();
        assert!(holley_check(&at, eta, &order, TOL).unwrap());
        let below = Measure::bernoulli(3, eta / 2.0).unwrap();
        assert!(!holley_check(&below, eta, &order, TOL).unwrap());
    }

    #[test]
    fn holley_on_admissible_complement() {
        use crate::admissible::{sample_admissible, SampleStrategy};
        let g = Dag::new(4, vec![(1, 2), (2, 3), (1, 4)]).unwrap();
        let c = Closure::of(&g).unwrap();
        let eps = 0.15;
        let m = sample_admissible(&c, eps, 11, SampleStrategy::Mixture).unwrap();
        let order = g.linear_extension();
        assert!(holley_check(&m.complement(), 1.0 - eps, &order, TOL).unwrap());
    }

    #[test]
    fn fkg_examples() {
        let m = Measure::bernoulli(2, 0.5).unwrap();
        let h1 = Event::coordinate_is(2, 1, true).unwrap();
        let h2 = h1.intersect(&Event::coordinate_is(2, 2, true).unwrap()).unwrap();
        assert!(fkg_check(&m, &h1, &h2, 1e-12).unwrap());

        // disjoint coordinates: equality by independence
        let a = Event::coordinate_is(2, 1, true).unwrap();
        let b = Event::coordinate_is(2, 2, true).unwrap();
        let joint = m.prob(&a.intersect(&b).unwrap()).unwrap();
        assert!((joint - m.prob(&a).unwrap() * m.prob(&b).unwrap()).abs() < 1e-12);
        assert!(fkg_check(&m, &a, &b, 1e-12).unwrap());

        assert!(fkg_check(&m, &Event::full(2).unwrap(), &b, 1e-12).unwrap());

        let decreasing = Event::coordinate_is(2, 1, false).unwrap();
        assert!(fkg_check(&m, &decreasing, &b, 1e-12).is_err());
        let mix = Measure::mixture(
            &[0.5, 0.5],
            &[Measure::bernoulli(2, 0.2).unwrap(), Measure::bernoulli(2, 0.7).unwrap()],
        )
        .unwrap();
        assert!(fkg_check(&mix, &a, &b, 1e-12).is_err());
    }

    #[test]
    fn lll_boundary_product_measure() {
        // path graph: closure out-degree Δ, π_ε at the Δ-boundary
        let g = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let c = Closure::of(&g).unwrap();
        let gstar = c.closure_dag().unwrap();
        let delta = c.delta();
        let eps = formulas::theta((delta + 1) as f64).unwrap();
        let m = Measure::bernoulli(3, eps).unwrap();
        let r = vec![1.0 / (delta as f64 + 1.0); 3];
        let report = lll_verify(&LllInstance::new(m, gstar, r).unwrap(), TOL).unwrap();
        assert!(report.condition_holds);
        let expected_exact = (1.0 - eps).powi(3);
        let expected_bound = (1.0 - 1.0 / (delta as f64 + 1.0)).powi(3);
        assert!((report.exact - expected_exact).abs() < 1e-12);
        assert!((report.bound - expected_bound).abs() < 1e-12);
        assert!(report.exact >= report.bound - TOL);
    }

    #[test]
    fn lll_zero_r_with_impossible_events() {
        let g = Dag::new(2, vec![(1, 2)]).unwrap();
        let m = Measure::point_mass(2, 0).unwrap();
        let report = lll_verify(&LllInstance::new(m, g, vec![0.0, 0.0]).unwrap(), TOL).unwrap();
        assert!(report.condition_holds);
        assert_eq!(report.bound, 1.0);
        assert_eq!(report.exact, 1.0);
    }

    #[test]
    fn lss_examples() {
        let mu = Measure::bernoulli(1, 0.8).unwrap();
        let z = lss_construct(&mu, 0.5).unwrap();
        assert!((z.mass(1) - 0.4).abs() < 1e-12);

        let mu = Measure::product(&[0.3, 0.9]).unwrap();
        let same = lss_construct(&mu, 1.0).unwrap();
        for m in 0..4 {
            assert!((same.mass(m) - mu.mass(m)).abs() < 1e-12);
        }
        let zero = lss_construct(&mu, 0.0).unwrap();
        assert!((zero.mass(0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zdom_examples() {
        // Δ = 1, ε = 0.2: α = λ = 1 - sqrt(0.2)
        let eps: f64 = 0.2;
        let p = formulas::rho(1, eps).unwrap();
        assert!((p.alpha - (1.0 - eps.sqrt())).abs() < 1e-12);
        let mu = Measure::bernoulli(2, 0.8).unwrap();
        let z = lss_construct(&mu, p.lambda).unwrap();
        assert!((z.mass(0b01) + z.mass(0b11) - 0.8 * p.lambda).abs() < 1e-12);
        assert!(verify_zdom(&z, p.alpha, p.lambda, TOL).unwrap());

        let ones = Measure::point_mass(2, 0b11).unwrap();
        assert!(verify_zdom(&ones, 1.0, 1.0, TOL).unwrap());
        let zeros = Measure::point_mass(2, 0).unwrap();
        assert!(!verify_zdom(&zeros, 0.5, 0.5, TOL).unwrap());
    }

    #[test]
    fn w_domination_examples() {
        let g = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let delta = g.max_out_degree();
        let eps = formulas::theta((delta + 1) as f64).unwrap();
        let eta = 1.0 - eps;
        let mu = Measure::bernoulli(3, eta).unwrap();
        assert!(verify_w_domination(&g, &mu, eta, TOL).unwrap());

        // Δ = 1 path, ε = 0.25, mixture with parameters >= 0.75
        let g = Dag::new(2, vec![(1, 2)]).unwrap();
        let mix = Measure::mixture(
            &[0.4, 0.6],
            &[
                Measure::product(&[0.75, 0.9]).unwrap(),
                Measure::product(&[0.8, 0.75]).unwrap(),
            ],
        )
        .unwrap();
        assert!(verify_w_domination(&g, &mix, 0.75, TOL).unwrap());

        // η = 1: point mass on all-ones dominates everything
        let ones = Measure::bernoulli(2, 1.0).unwrap();
        assert!(verify_w_domination(&g, &ones, 1.0, TOL).unwrap());
    }

    #[test]
    fn w_domination_rejects_bad_hypotheses() {
        let g = Dag::new(2, vec![(1, 2)]).unwrap();
        let low = Measure::bernoulli(2, 0.5).unwrap();
        assert!(matches!(
            verify_w_domination(&g, &low, 0.9, TOL),
            Err(Error::HypothesisViolated(_))
        ));
        let mu = Measure::bernoulli(2, 0.6).unwrap();
        // eps = 0.4 exceeds the Δ=1 boundary of 0.25
        assert!(matches!(
            verify_w_domination(&g, &mu, 0.6, TOL),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
