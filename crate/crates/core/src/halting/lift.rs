//! The lift of a partial function to a permutation of pairs.
//!
//! `X ⊔ {*}` is identified with `N`, `*` being `0`, and carries the group
//! structure of `Z` through the zig-zag bijection. Pairs `(x, y)` with
//! `x ∈ N`, `y ∈ Z_+` are numbered `cantor(x, y − 1) + 1`.

use super::function::{Eval, Mode, PartialFunction};
use serde::Serialize;

/// `0 ↦ 0`, odd `n ↦ (n + 1)/2`, even `n ↦ −n/2`.
pub fn zigzag(n: u64) -> i128 {
    let n = n as i128;
    if n % 2 == 1 {
        (n + 1) / 2
    } else {
        -n / 2
    }
}

pub fn unzigzag(z: i128) -> Option<u64> {
    let n = if z > 0 { 2 * z - 1 } else { -2 * z };
    u64::try_from(n).ok()
}

/// Group law on `X ⊔ {*}`.
pub fn group_add(a: u64, b: u64) -> Option<u64> {
    unzigzag(zigzag(a) + zigzag(b))
}

pub fn group_neg(a: u64) -> u64 {
    unzigzag(-zigzag(a)).expect("negation stays in range")
}

pub fn encode_pair(x: u64, y: u64) -> Option<u64> {
    let (x, y) = (x as u128, y.checked_sub(1)? as u128);
    let s = x + y;
    let n = s * (s + 1) / 2 + y + 1;
    u64::try_from(n).ok()
}

pub fn decode_pair(n: u64) -> Option<(u64, u64)> {
    let m = n.checked_sub(1)? as u128;
    let mut s = ((((8 * m + 1) as f64).sqrt() - 1.0) / 2.0) as u128;
    while s * (s + 1) / 2 > m {
        s -= 1;
    }
    while (s + 1) * (s + 2) / 2 <= m {
        s += 1;
    }
    let y = m - s * (s + 1) / 2;
    Some(((s - y) as u64, y as u64 + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Next(u64),
    /// Fuel ran out before the step could be computed.
    Unknown,
    /// The image leaves the representable range or window.
    OutOfRange,
}

/// Why an orbit never returns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthWitness {
    /// The orbit moves by this nonzero element of a torsion-free group.
    pub generator: i64,
    /// The first few points of the orbit.
    pub states: Vec<u64>,
}

/// A permutation of `Z_+` that can be iterated one step at a time.
pub trait OrbitDynamics {
    fn step(&self, p: u64) -> Step;

    fn is_transparent(&self) -> bool;

    /// Non-return certificate, only ever produced in transparent mode.
    fn witness(&self, _p: u64) -> Option<GrowthWitness> {
        None
    }

    /// Coordinates of a point for reports.
    fn coordinates(&self, p: u64) -> Vec<u64> {
        vec![p]
    }
}

/// `g`, `τ_f` and `σ_f` for a partial function `f`.
#[derive(Debug, Clone)]
pub struct LiftedPermutation {
    f: PartialFunction,
}

impl LiftedPermutation {
    pub fn new(f: PartialFunction) -> Self {
        LiftedPermutation { f }
    }

    pub fn function(&self) -> &PartialFunction {
        &self.f
    }

    /// `g(y) = f(y)` on the domain, `*` elsewhere. `None` when opaque fuel
    /// runs out: the point may or may not be in the domain.
    pub fn g(&self, y: u64) -> Option<u64> {
        match (self.f.eval(y), self.f.mode()) {
            (Eval::Value(v), _) => Some(v),
            (Eval::OutOfFuel, Mode::Transparent) => Some(0),
            (Eval::OutOfFuel, Mode::Opaque) => None,
        }
    }

    /// `τ_f(x, y) = (x ⊕ g(y), y)`.
    pub fn tau(&self, x: u64, y: u64) -> Step {
        match self.g(y) {
            None => Step::Unknown,
            Some(g) => group_add(x, g).map_or(Step::OutOfRange, Step::Next),
        }
    }

    pub fn tau_inverse(&self, x: u64, y: u64) -> Step {
        match self.g(y) {
            None => Step::Unknown,
            Some(g) => group_add(x, group_neg(g)).map_or(Step::OutOfRange, Step::Next),
        }
    }

    /// Exact in transparent mode; opaque mode can only rule fixedness out.
    pub fn is_fixed(&self, x: u64, y: u64) -> Option<bool> {
        match self.tau(x, y) {
            Step::Next(x2) => Some(x2 == x),
            _ => None,
        }
    }

    /// `σ_f`, the restriction to `(X ⊔ {*}) × D(f)`: `None` off the domain
    /// or when membership is unknown.
    pub fn sigma(&self, x: u64, y: u64) -> Option<u64> {
        match self.f.eval(y) {
            Eval::Value(v) => group_add(x, v),
            Eval::OutOfFuel => None,
        }
    }
}

impl OrbitDynamics for LiftedPermutation {
    fn step(&self, p: u64) -> Step {
        let Some((x, y)) = decode_pair(p) else { return Step::OutOfRange };
        match self.tau(x, y) {
            Step::Next(x2) => encode_pair(x2, y).map_or(Step::OutOfRange, Step::Next),
            other => other,
        }
    }

    fn is_transparent(&self) -> bool {
        self.f.mode() == Mode::Transparent
    }

    /// `y ∈ D(f)` makes `g(y)` nonzero, and adding a nonzero element of a
    /// torsion-free group never returns.
    fn witness(&self, p: u64) -> Option<GrowthWitness> {
        let (mut x, y) = decode_pair(p)?;
        if self.f.in_domain(y)? {
            let generator = i64::try_from(zigzag(self.g(y)?)).ok()?;
            let mut states = vec![x];
            for _ in 0..3 {
                x = group_add(x, self.g(y)?)?;
                states.push(x);
            }
            return Some(GrowthWitness { generator, states });
        }
        None
    }

    fn coordinates(&self, p: u64) -> Vec<u64> {
        decode_pair(p).map_or_else(|| vec![p], |(x, y)| vec![x, y])
    }
}

/// Finitely many disjoint cycles on `Z_+`, identity elsewhere. Every orbit
/// is finite, which makes it a ground truth for periods above one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePermutation {
    next: std::collections::HashMap<u64, u64>,
}

impl CyclePermutation {
    pub fn new(cycles: &[Vec<u64>]) -> Result<Self, super::HaltingError> {
        let mut next = std::collections::HashMap::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 {
                    return Err(super::HaltingError::Program("cycle entries must be positive".into()));
                }
                if next.insert(a, cycle[(i + 1) % cycle.len()]).is_some() {
                    return Err(super::HaltingError::Program(format!("{a} appears in two cycles")));
                }
            }
        }
        Ok(CyclePermutation { next })
    }

    pub fn identity() -> Self {
        CyclePermutation { next: Default::default() }
    }
}

impl OrbitDynamics for CyclePermutation {
    fn step(&self, p: u64) -> Step {
        Step::Next(self.next.get(&p).copied().unwrap_or(p))
    }

    fn is_transparent(&self) -> bool {
        true
    }
}
