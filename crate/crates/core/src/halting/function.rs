//! Fueled partial functions `Z_+ ⇀ Z_+`.

use super::HaltingError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const DEFAULT_FUEL: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The domain predicate is available and the evaluator halts within
    /// fuel exactly on the domain.
    Transparent,
    /// Only fueled evaluation.
    Opaque,
}

/// The tiny program language. Undefined points run forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Program {
    /// Defined nowhere.
    Empty,
    Identity,
    Constant { value: u64 },
    /// `y ↦ y` on `y ≡ residue (mod modulus)`.
    Residue { modulus: u64, residue: u64 },
    /// `y ↦ y + offset` for `y ≥ from`.
    Shift { offset: u64, from: u64 },
    Table { table: BTreeMap<u64, u64> },
    /// One more than the number of Collatz steps from `y` to 1; the
    /// evaluation costs one unit of fuel per step. No domain predicate.
    CollatzSteps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eval {
    Value(u64),
    OutOfFuel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFunction {
    program: Program,
    mode: Mode,
    fuel: u64,
}

impl PartialFunction {
    pub fn new(program: Program, mode: Mode, fuel: u64) -> Result<Self, HaltingError> {
        let bad = |m: &str| Err(HaltingError::Program(m.to_string()));
        match &program {
            Program::Constant { value: 0 } => return bad("constant value must be positive"),
            Program::Residue { modulus: 0, .. } => return bad("modulus must be positive"),
            Program::Table { table } if table.iter().any(|(&k, &v)| k == 0 || v == 0) => {
                return bad("table entries must be positive integers")
            }
            Program::CollatzSteps if mode == Mode::Transparent => {
                return bad("collatz_steps has no decidable domain predicate; use opaque mode")
            }
            _ => {}
        }
        if fuel == 0 {
            return bad("fuel must be positive");
        }
        Ok(PartialFunction { program, mode, fuel })
    }

    pub fn transparent(program: Program) -> Result<Self, HaltingError> {
        Self::new(program, Mode::Transparent, DEFAULT_FUEL)
    }

    pub fn opaque(program: Program, fuel: u64) -> Result<Self, HaltingError> {
        Self::new(program, Mode::Opaque, fuel)
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    /// Value and cost when the program halts on `y`.
    fn run(&self, y: u64) -> Option<(u64, u64)> {
        match &self.program {
            Program::Empty => None,
            Program::Identity => Some((y, 1)),
            Program::Constant { value } => Some((*value, 1)),
            Program::Residue { modulus, residue } => (y % modulus == residue % modulus).then_some((y, 1)),
            Program::Shift { offset, from } => (y >= *from).then(|| y.checked_add(*offset).map(|v| (v, 1))).flatten(),
            Program::Table { table } => table.get(&y).map(|&v| (v, 1)),
            Program::CollatzSteps => {
                let (mut n, mut steps) = (y as u128, 0u64);
                while n > 1 {
                    // Past the fuel the answer no longer matters.
                    if steps > self.fuel {
                        return Some((steps + 1, steps));
                    }
                    n = if n % 2 == 0 { n / 2 } else { 3 * n + 1 };
                    steps += 1;
                }
                Some((steps + 1, steps.max(1)))
            }
        }
    }

    /// Fueled evaluation; `y` must be positive.
    pub fn eval(&self, y: u64) -> Eval {
        match (y, self.run(y)) {
            (1.., Some((v, cost))) if cost <= self.fuel => Eval::Value(v),
            _ => Eval::OutOfFuel,
        }
    }

    /// `y ∈ D(f)`, answered only in transparent mode.
    pub fn in_domain(&self, y: u64) -> Option<bool> {
        match self.mode {
            Mode::Transparent => Some(y > 0 && self.run(y).is_some()),
            Mode::Opaque => None,
        }
    }
}
