//! Library surface of the experiment driver: sweep configs and CSV
//! emission, plus the randomized verification suites. The `gatenet`
//! binary is a thin argument-parsing shell over these.

pub mod sweep;
pub mod verify;
