//! Exact and Monte Carlo machinery for gate-failure analysis on random
//! acyclic interconnection graphs: graph sampling and reachability
//! closures, exact measures on the failure hypercube, admissibility
//! classes, stochastic-domination decisions, and the closed-form bound
//! bank behind the phase-transition experiments.

pub mod admissible;
pub mod bits;
pub mod closure;
pub mod dag;
pub mod domination;
pub mod error;
pub mod flow;
pub mod formulas;
pub mod measure;
pub mod rng;
pub mod scan;

pub use admissible::{is_epsilon_admissible, is_in_w, sample_admissible, SampleStrategy};
pub use bits::Bitset;
pub use closure::Closure;
pub use dag::Dag;
pub use domination::{
    dominates, enumerate_monotone_events, extract_coupling, fkg_check, holley_check, lll_verify,
    lss_construct, verify_w_domination, verify_zdom, Coupling, LllInstance, LllReport,
};
pub use error::{Error, Result};
pub use formulas::{
    f_epsilon_exact, f_g_exact, game_parameters, lll_lower_bound, majority_bound, phase_limit,
    pittel_tungol_window, rho, theta, GameParams, PhasePoint, PtWindow, Regime, RhoParams,
};
pub use measure::{Event, Measure, MeasureForm};
pub use rng::{rng_from_seed, splitmix64, trial_seed};
pub use scan::{describe_pattern, ConditionalScan, Role};
