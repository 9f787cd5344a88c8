//! Gaussian expectation of `exp(S₁/λ)` by explicit Wick pairings.
//!
//! Works on polynomials in the field components only; nothing here knows
//! about graphs.

use super::{lowest_power, FeynmanError, LambdaSeries, Theory};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub const MAX_ORACLE_COLORS: usize = 3;

/// Exponent vector per color.
type Monomial = Vec<u32>;
type Poly = BTreeMap<Monomial, BigRational>;

/// `⟨exp(S₁/λ)⟩` with propagator `λ g^{ab}`, keeping at most `vertex_cap`
/// interaction factors (default `2 · order`) and powers up to `λ^order`.
pub fn gaussian_oracle(
    theory: &Theory,
    order: usize,
    vertex_cap: Option<usize>,
) -> Result<LambdaSeries, FeynmanError> {
    let colors = theory.colors();
    if colors > MAX_ORACLE_COLORS {
        return Err(FeynmanError::TooManyColors { colors, max: MAX_ORACLE_COLORS });
    }
    let cap = vertex_cap.unwrap_or(2 * order);
    let valences = theory.valences();
    let mut series = LambdaSeries::zero(lowest_power(&valences, cap), order as i64);

    // S₁ = Σ over index multisets m of C_m φ^m / Π m_a!.
    let mut s1 = Poly::new();
    for (indices, value) in theory.entries() {
        let mut m = vec![0u32; colors];
        indices.iter().for_each(|&a| m[a] += 1);
        let denom: BigRational = m.iter().map(|&k| factorial(k)).product();
        *s1.entry(m).or_insert_with(BigRational::zero) += value / denom;
    }

    let mut wick = Wick { inverse: theory.inverse(), memo: HashMap::new() };
    // power = S₁^v / v!
    let mut power: Poly = [(vec![0u32; colors], BigRational::one())].into();
    for v in 0..=cap {
        if v > 0 {
            power = multiply(&power, &s1);
            let inv_v = BigRational::new(1.into(), (v as i64).into());
            power.values_mut().for_each(|c| *c *= &inv_v);
        }
        for (m, c) in &power {
            let degree: u32 = m.iter().sum();
            if degree % 2 == 1 {
                continue;
            }
            let p = (degree / 2) as i64 - v as i64;
            if p > order as i64 {
                continue;
            }
            let moment = wick.moment(m);
            if !moment.is_zero() {
                series.add_term(p, &(c * moment));
            }
        }
    }
    Ok(series)
}

fn factorial(k: u32) -> BigRational {
    BigRational::from_integer((1..=k as u64).product::<u64>().into())
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct Wick<'a> {
    inverse: &'a [Vec<BigRational>],
    memo: HashMap<Monomial, BigRational>,
}

impl Wick<'_> {
    /// `Σ_pairings Π g^{ab}` for the product of components given by `m`.
    fn moment(&mut self, m: &Monomial) -> BigRational {
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let value = match m.iter().position(|&k| k > 0) {
            None => BigRational::one(),
            Some(_) if m.iter().sum::<u32>() % 2 == 1 => BigRational::zero(),
            Some(a) => {
                // Pair one φ^a with each remaining factor in turn.
                let mut rest = m.clone();
                rest[a] -= 1;
                let mut total = BigRational::zero();
                for b in 0..rest.len() {
                    if rest[b] == 0 || self.inverse[a][b].is_zero() {
                        continue;
                    }
                    let ways = BigRational::from_integer(rest[b].into());
                    let mut smaller = rest.clone();
                    smaller[b] -= 1;
                    total += ways * &self.inverse[a][b] * self.moment(&smaller);
                }
                total
            }
        };
        self.memo.insert(m.clone(), value.clone());
        value
    }
}
