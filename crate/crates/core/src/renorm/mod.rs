//! Minimal-subtraction algebras, the convolution group `G(A)` and the
//! Birkhoff (BPHZ) decomposition of characters.

mod birkhoff;
mod character;
mod element;

pub use birkhoff::{birkhoff, birkhoff_on_basis, closure, conv_inverse, convolution, Birkhoff};
pub use character::{basis, generators, Character, LinearMap, Variable};
pub use element::{MSElement, DEFAULT_ORDER};

use crate::graphs::GraphError;
use crate::hopf::HopfError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RenormError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no value for generator {0}")]
    Undefined(String),
    #[error("{0} is outside the maps' degree range")]
    DegreeOverflow(String),
    #[error("{0} is not a connected graph")]
    NotConnected(String),
    #[error("map does not send 1 to 1_A")]
    NotUnital,
    #[error("truncation affects the compared coefficients (exact only through t^{exact_through})")]
    TruncationAffected { exact_through: i64 },
    #[error("invalid character JSON: {0}")]
    Json(String),
}
