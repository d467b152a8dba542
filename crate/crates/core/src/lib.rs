pub mod calculus;
pub mod checks;
pub mod cli;
pub mod coeff_ring;
pub mod error;
pub mod exterior;
pub mod invariants;
pub mod lefschetz;
pub mod linalg;
pub mod natural_ops;
pub mod random;
