//! Kolmogorov-order conjugation and the series `Φ(k, σ; z)`.

use super::lift::{OrbitDynamics, Step};
use super::HaltingError;
use crate::complexity::KolmogorovOrder;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A bijection `K` between a window of `Z_+` and ranks `1..=window`.
pub trait Ranking {
    fn rank(&self, n: u64) -> Option<u64>;
    fn unrank(&self, r: u64) -> Option<u64>;
    fn window(&self) -> u64;
    fn version(&self) -> &str;
}

impl Ranking for KolmogorovOrder {
    fn rank(&self, n: u64) -> Option<u64> {
        self.rank_of_int(n)
    }

    fn unrank(&self, r: u64) -> Option<u64> {
        self.int_at(r)
    }

    fn window(&self) -> u64 {
        self.len() as u64
    }

    fn version(&self) -> &str {
        KolmogorovOrder::version(self)
    }
}

/// `K = id` on `1..=window`.
#[derive(Debug, Clone, Copy)]
pub struct IdentityOrder(pub u64);

impl Ranking for IdentityOrder {
    fn rank(&self, n: u64) -> Option<u64> {
        (1..=self.0).contains(&n).then_some(n)
    }

    fn unrank(&self, r: u64) -> Option<u64> {
        self.rank(r)
    }

    fn window(&self) -> u64 {
        self.0
    }

    fn version(&self) -> &str {
        "identity"
    }
}

/// `σ_K = K ∘ σ ∘ K^{−1}` on ranks; leaving the window is `OutOfRange`.
pub struct Conjugated<'a> {
    sigma: &'a dyn OrbitDynamics,
    order: &'a dyn Ranking,
}

pub fn conjugate<'a>(sigma: &'a dyn OrbitDynamics, order: &'a dyn Ranking) -> Conjugated<'a> {
    Conjugated { sigma, order }
}

impl OrbitDynamics for Conjugated<'_> {
    fn step(&self, r: u64) -> Step {
        let Some(p) = self.order.unrank(r) else { return Step::OutOfRange };
        match self.sigma.step(p) {
            Step::Next(q) => self.order.rank(q).map_or(Step::OutOfRange, Step::Next),
            other => other,
        }
    }

    fn is_transparent(&self) -> bool {
        self.sigma.is_transparent()
    }

    fn witness(&self, r: u64) -> Option<super::GrowthWitness> {
        self.sigma.witness(self.order.unrank(r)?)
    }

    fn coordinates(&self, r: u64) -> Vec<u64> {
        self.order.unrank(r).map_or_else(|| vec![r], |p| self.sigma.coordinates(p))
    }
}

/// Partial sum `1/k² + Σ_{n=1}^{N} z^{K(n)} / (σ_K^n(k))²`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSeries {
    k: u64,
    terms: u64,
    coefficients: BTreeMap<u64, BigRational>,
    orbit: Vec<u64>,
    exponents: Vec<u64>,
}

fn inverse_square(n: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(n) * BigInt::from(n))
}

pub fn phi_partial(k: u64, sigma_k: &dyn OrbitDynamics, order: &dyn Ranking, terms: u64) -> Result<PhiSeries, HaltingError> {
    if k == 0 {
        return Err(HaltingError::Program("base point must be positive".into()));
    }
    let mut coefficients = BTreeMap::new();
    coefficients.insert(0, inverse_square(k));
    let (mut orbit, mut exponents) = (Vec::new(), Vec::new());
    let mut x = k;
    for n in 1..=terms {
        x = match sigma_k.step(x) {
            Step::Next(y) => y,
            Step::Unknown => return Err(HaltingError::Unknown { step: n }),
            Step::OutOfRange => return Err(HaltingError::WindowExhausted { step: n, window: order.window() }),
        };
        let e = order.rank(n).ok_or(HaltingError::WindowExhausted { step: n, window: order.window() })?;
        coefficients.insert(e, inverse_square(x));
        orbit.push(x);
        exponents.push(e);
    }
    Ok(PhiSeries { k, terms, coefficients, orbit, exponents })
}

impl PhiSeries {
    pub fn base_point(&self) -> u64 {
        self.k
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// Exponent to coefficient, the constant term included.
    pub fn coefficients(&self) -> &BTreeMap<u64, BigRational> {
        &self.coefficients
    }

    /// `σ_K^n(k)` for `n = 1..=N`.
    pub fn orbit(&self) -> &[u64] {
        &self.orbit
    }

    pub fn value_at_one(&self) -> BigRational {
        self.coefficients.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// `max_n K(n)² / (σ_K^n(k))²` over the window.
    pub fn window_constant(&self) -> BigRational {
        self.orbit
            .iter()
            .zip(&self.exponents)
            .map(|(&x, &e)| BigRational::new(BigInt::from(e) * BigInt::from(e), BigInt::from(x) * BigInt::from(x)))
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// `1/k² + c · π²/6`, which bounds every partial sum at `z = 1`.
    pub fn bound_at_one(&self) -> f64 {
        let c = crate::rational::to_f64(&self.window_constant());
        1.0 / (self.k as f64).powi(2) + c * std::f64::consts::PI.powi(2) / 6.0
    }

    /// Coefficients of `z^0..z^M` for the longest gap-free run of exponents.
    pub fn dense_prefix(&self) -> Vec<BigRational> {
        (0..).map_while(|e| self.coefficients.get(&e).cloned()).collect()
    }

    /// Lowest-degree `P/Q` (with `Q(0) = 1`) matching the dense prefix
    /// and leaving at least one coefficient over as a check.
    pub fn reconstruct(&self) -> Option<RationalFunction> {
        reconstruct_rational(&self.dense_prefix())
    }
}

/// `numerator / denominator`, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: Vec<BigRational>,
    pub denominator: Vec<BigRational>,
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let poly = |c: &[BigRational]| {
            let parts: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| match i {
                    0 => format!("{v}"),
                    1 => format!("{v}·z"),
                    _ => format!("{v}·z^{i}"),
                })
                .collect();
            if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
        };
        write!(f, "({}) / ({})", poly(&self.numerator), poly(&self.denominator))
    }
}

/// Padé search by increasing `deg P + deg Q`.
pub fn reconstruct_rational(c: &[BigRational]) -> Option<RationalFunction> {
    let len = c.len();
    let at = |i: i64| if i >= 0 { c[i as usize].clone() } else { BigRational::zero() };
    for total in 0..len.saturating_sub(1) {
        for m in 0..=total {
            let l = total - m;
            // Σ_{j=0}^{m} q_j c_{i−j} = 0 for i = l+1..=l+m, q_0 = 1.
            let mut rows: Vec<Vec<BigRational>> = (l + 1..=l + m)
                .map(|i| {
                    let mut row: Vec<_> = (1..=m).map(|j| at(i as i64 - j as i64)).collect();
                    row.push(-at(i as i64));
                    row
                })
                .collect();
            let Some(tail) = solve(&mut rows, m) else { continue };
            let mut q = vec![BigRational::one()];
            q.extend(tail);
            let p: Vec<BigRational> = (0..=l)
                .map(|i| (0..=m.min(i)).map(|j| &q[j] * &c[i - j]).fold(BigRational::zero(), |a, b| a + b))
                .collect();
            let fits = (0..len).all(|i| {
                let conv = (0..=m.min(i)).map(|j| &q[j] * &c[i - j]).fold(BigRational::zero(), |a, b| a + b);
                conv == if i <= l { p[i].clone() } else { BigRational::zero() }
            });
            if fits {
                return Some(RationalFunction { numerator: p, denominator: q });
            }
        }
    }
    None
}

/// Gauss–Jordan on an augmented `n × (n+1)` system; `None` if singular.
fn solve(rows: &mut [Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = BigRational::one() / &rows[col][col];
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in col..=n {
                    let d = &factor * &rows[col][j];
                    rows[r][j] -= d;
                }
            }
        }
    }
    Some(rows.iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn pade_recovers_simple_functions() {
        let geometric: Vec<_> = (0..6).map(|_| ratio(1, 9)).collect();
        let r = reconstruct_rational(&geometric).unwrap();
        assert_eq!(r.numerator, vec![ratio(1, 9)]);
        assert_eq!(r.denominator, vec![ratio(1, 1), ratio(-1, 1)]);
        // 1/(1 − z)² = Σ (n+1) z^n.
        let squared: Vec<_> = (0..8).map(|n| ratio(n + 1, 1)).collect();
        let r = reconstruct_rational(&squared).unwrap();
        assert_eq!(r.denominator, vec![ratio(1, 1), ratio(-2, 1), ratio(1, 1)]);
        assert!(reconstruct_rational(&[ratio(1, 1)]).is_none());
    }
}
