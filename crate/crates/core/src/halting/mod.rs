//! The halting-problem deformation: a partial function `f` becomes the
//! permutation `τ_f(x, y) = (x ⊕ g(y), y)` whose fixed points are exactly
//! the pairs with `y ∉ D(f)`. Orbits are probed under a fuel budget, and
//! `Φ(k, σ; z)` is built along orbits after conjugating by the proxy
//! Kolmogorov order.

mod function;
mod lift;
mod orbit;
mod series;

pub use function::{Eval, Mode, PartialFunction, Program, DEFAULT_FUEL};
pub use lift::{
    decode_pair, encode_pair, group_add, group_neg, unzigzag, zigzag, CyclePermutation, GrowthWitness,
    LiftedPermutation, OrbitDynamics, Step,
};
pub use orbit::{classify_orbit, Certificate, ProbeReport, Verdict};
pub use series::{
    conjugate, phi_partial, reconstruct_rational, Conjugated, IdentityOrder, PhiSeries, Ranking, RationalFunction,
};

/// Default size of the Kolmogorov-order window on `Z_+`.
pub const DEFAULT_WINDOW: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HaltingError {
    #[error("invalid program: {0}")]
    Program(String),
    #[error("step {step} left the order window 1..={window}")]
    WindowExhausted { step: u64, window: u64 },
    #[error("step {step} could not be evaluated within fuel")]
    Unknown { step: u64 },
}
