//! Truncated Laurent series in `λ` with exact coefficients.

use super::FeynmanError;
use crate::rational::{format_rational, parse_rational};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficients of `λ^low, …, λ^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeries {
    low: i64,
    coeffs: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SeriesJson {
    Plain(Vec<String>),
    Laurent { low: i64, coefficients: Vec<String> },
}

impl LambdaSeries {
    pub fn zero(low: i64, order: i64) -> Self {
        assert!(low <= order, "empty series window");
        LambdaSeries { low, coeffs: vec![BigRational::zero(); (order - low + 1) as usize] }
    }

    /// `1 + 0·λ + … + 0·λ^order`.
    pub fn one(order: i64) -> Self {
        let mut s = LambdaSeries::zero(0, order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coefficients(low: i64, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "empty series window");
        LambdaSeries { low, coeffs }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn order(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Zero outside the window.
    pub fn coefficient(&self, power: i64) -> BigRational {
        usize::try_from(power - self.low)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `value · λ^power`, dropping powers outside the window.
    pub fn add_term(&mut self, power: i64, value: &BigRational) {
        if let Ok(i) = usize::try_from(power - self.low) {
            if let Some(c) = self.coeffs.get_mut(i) {
                *c += value;
            }
        }
    }

    /// Lowest power at which the two series differ, over the union window.
    pub fn first_difference(&self, other: &LambdaSeries) -> Option<i64> {
        let low = self.low.min(other.low);
        let high = self.order().max(other.order());
        (low..=high).find(|&p| self.coefficient(p) != other.coefficient(p))
    }

    pub fn to_json(&self) -> String {
        let coefficients = self.coeffs.iter().map(format_rational).collect();
        let json = if self.low == 0 {
            SeriesJson::Plain(coefficients)
        } else {
            SeriesJson::Laurent { low: self.low, coefficients }
        };
        serde_json::to_string(&json).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, FeynmanError> {
        let json: SeriesJson = serde_json::from_str(text).map_err(|e| FeynmanError::Json(e.to_string()))?;
        let (low, raw) = match json {
            SeriesJson::Plain(c) => (0, c),
            SeriesJson::Laurent { low, coefficients } => (low, coefficients),
        };
        if raw.is_empty() {
            return Err(FeynmanError::Json("series has no coefficients".into()));
        }
        let coeffs = raw
            .iter()
            .map(|s| parse_rational(s).map_err(|_| FeynmanError::Rational(s.clone())))
            .collect::<Result<_, _>>()?;
        Ok(LambdaSeries { low, coeffs })
    }
}

impl fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let p = self.low + i as i64;
                match p {
                    0 => format_rational(c),
                    1 => format!("{}·λ", format_rational(c)),
                    _ => format!("{}·λ^{p}", format_rational(c)),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
