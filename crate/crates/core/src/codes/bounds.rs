//! The `q`-ary entropy function and the three classical bound curves.

use super::CodeError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Hamming,
    GilbertVarshamov,
    Singleton,
}

impl BoundKind {
    pub const ALL: [BoundKind; 3] = [BoundKind::Hamming, BoundKind::GilbertVarshamov, BoundKind::Singleton];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Hamming => "hamming",
            BoundKind::GilbertVarshamov => "gilbert_varshamov",
            BoundKind::Singleton => "singleton",
        }
    }
}

fn check_delta(delta: f64) -> Result<(), CodeError> {
    if (0.0..=1.0).contains(&delta) {
        Ok(())
    } else {
        Err(CodeError::DeltaOutOfRange(delta))
    }
}

/// `H_q(δ) = δ log_q(q−1) − δ log_q δ − (1−δ) log_q(1−δ)` with `0 log 0 = 0`.
pub fn q_entropy(q: usize, delta: f64) -> Result<f64, CodeError> {
    if q < 2 {
        return Err(CodeError::InvalidAlphabet(q));
    }
    check_delta(delta)?;
    let ln_q = (q as f64).ln();
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
    Ok((delta * ((q - 1) as f64).ln() - xlogx(delta) - xlogx(1.0 - delta)) / ln_q)
}

/// Rate on the requested curve at relative distance `delta`, clamped at 0.
///
/// The Gilbert–Varshamov curve is taken as 0 from `δ = 1 − 1/q` on, where
/// `H_q` stops increasing.
pub fn bound_curve(kind: BoundKind, q: usize, delta: f64) -> Result<f64, CodeError> {
    check_delta(delta)?;
    let r = match kind {
        BoundKind::Singleton => 1.0 - delta,
        BoundKind::Hamming => 1.0 - q_entropy(q, delta / 2.0)?,
        BoundKind::GilbertVarshamov => {
            if delta >= 1.0 - 1.0 / q as f64 {
                0.0
            } else {
                1.0 - q_entropy(q, delta)?
            }
        }
    };
    Ok(r.max(0.0))
}
