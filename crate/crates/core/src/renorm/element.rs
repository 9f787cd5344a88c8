//! Minimal-subtraction algebra: Laurent polynomials in `t` with a polar
//! part (negative powers, kept exactly) and a regular part truncated at a
//! pinned order.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::RenormError;

/// Default truncation order of the regular part.
pub const DEFAULT_ORDER: i64 = 16;

/// `Σ c_e t^e` with every stored power at most the truncation order.
/// Coefficients are known exactly for `e ≤ exact_through`; an element
/// whose coefficients are all known (a Laurent polynomial that fits under
/// the order) reports no bound. Products lower the bound when a pole
/// meets a truncated tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSElement {
    terms: BTreeMap<i64, BigRational>,
    order: i64,
    exact_through: i64,
}

/// Stands in for an unbounded exact range; small enough that sums of two
/// never overflow.
const COMPLETE: i64 = i64::MAX / 4;

impl MSElement {
    pub fn zero(order: i64) -> Self {
        MSElement { terms: BTreeMap::new(), order, exact_through: COMPLETE }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, BigRational::one(), order)
    }

    pub fn monomial(power: i64, c: BigRational, order: i64) -> Self {
        let mut e = Self::zero(order);
        e.add_term(power, &c);
        e
    }

    /// `polar[i]` is the coefficient of `t^{−(i+1)}`, `regular[i]` of `t^i`.
    pub fn from_parts(polar: &[BigRational], regular: &[BigRational], order: i64) -> Self {
        let mut e = Self::zero(order);
        for (i, c) in polar.iter().enumerate() {
            e.add_term(-(i as i64) - 1, c);
        }
        for (i, c) in regular.iter().enumerate() {
            e.add_term(i as i64, c);
        }
        e
    }

    /// A regular part truncated at `order`: coefficients above it unknown.
    pub fn truncated(polar: &[BigRational], regular: &[BigRational], order: i64) -> Self {
        let mut e = Self::from_parts(polar, regular, order);
        e.exact_through = e.exact_through.min(order);
        e
    }

    fn add_term(&mut self, power: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        if power > self.order {
            self.exact_through = self.exact_through.min(self.order);
            return;
        }
        if power > self.exact_through {
            return;
        }
        let slot = self.terms.entry(power).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn coefficient(&self, power: i64) -> BigRational {
        self.terms.get(&power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigRational> {
        &self.terms
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Highest power with a reliable coefficient, `None` if all are.
    pub fn exact_through(&self) -> Option<i64> {
        (self.exact_through < COMPLETE).then_some(self.exact_through)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn with_terms(&self, keep: impl Fn(i64) -> bool, exact_through: i64) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| keep(**e)).map(|(e, c)| (*e, c.clone())).collect();
        MSElement { terms, order: self.order, exact_through }
    }

    /// `π(x)`: the negative powers. Its regular part is exactly zero, so it
    /// is fully known once the polar coefficients are.
    pub fn polar_part(&self) -> Self {
        let exact = if self.exact_through >= -1 { COMPLETE } else { self.exact_through };
        self.with_terms(|e| e < 0, exact)
    }

    /// `(id − π)(x)`.
    pub fn regular_part(&self) -> Self {
        self.with_terms(|e| e >= 0, self.exact_through)
    }

    pub fn polar_split(&self) -> (Self, Self) {
        (self.polar_part(), self.regular_part())
    }

    /// `ε_A`: the constant term.
    pub fn augmentation(&self) -> BigRational {
        self.coefficient(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.order);
        out.exact_through = self.exact_through;
        for (e, v) in &self.terms {
            out.add_term(*e, &(v * c));
        }
        out
    }

    /// Lowest exponent that may be nonzero: the first stored term, or
    /// just past the exact window when nothing is stored.
    fn lowest(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(self.exact_through.saturating_add(1))
    }

    /// Equality of every coefficient both sides know exactly. Fails when
    /// that window does not reach the constant term.
    pub fn agrees_with(&self, other: &MSElement) -> Result<bool, RenormError> {
        let exact = self.exact_through.min(other.exact_through);
        if exact < 0 {
            return Err(RenormError::TruncationAffected { exact_through: exact });
        }
        let same = |a: &MSElement, b: &MSElement| {
            a.terms.iter().filter(|(e, _)| **e <= exact).all(|(e, c)| b.coefficient(*e) == *c)
        };
        Ok(same(self, other) && same(other, self))
    }

    /// `(polar, regular)` coefficient lists in the JSON layout.
    pub fn parts(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let depth = self.terms.keys().next().map_or(0, |&e| (-e).max(0));
        let polar = (1..=depth).map(|k| self.coefficient(-k)).collect();
        let top = self.terms.keys().next_back().map_or(-1, |&e| e);
        let regular = (0..=top).map(|e| self.coefficient(e)).collect();
        (polar, regular)
    }
}

impl Add for &MSElement {
    type Output = MSElement;
    fn add(self, rhs: &MSElement) -> MSElement {
        let mut out = MSElement::zero(self.order.min(rhs.order));
        out.exact_through = self.exact_through.min(rhs.exact_through);
        for (e, c) in self.terms.iter().chain(&rhs.terms) {
            out.add_term(*e, c);
        }
        out
    }
}

impl Neg for &MSElement {
    type Output = MSElement;
    fn neg(self) -> MSElement {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &MSElement {
    type Output = MSElement;
    fn sub(self, rhs: &MSElement) -> MSElement {
        self + &-rhs
    }
}

impl Mul for &MSElement {
    type Output = MSElement;
    fn mul(self, rhs: &MSElement) -> MSElement {
        let mut out = MSElement::zero(self.order.min(rhs.order));
        // Unknown coefficients of one factor reach the product shifted by
        // the other factor's lowest power.
        let bound = |a: &MSElement, b: &MSElement| {
            if a.exact_through >= COMPLETE { COMPLETE } else { (a.exact_through + b.lowest()).min(COMPLETE) }
        };
        out.exact_through = bound(self, rhs).min(bound(rhs, self));
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl fmt::Display for MSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}·t"),
                _ => format!("{c}·t^{e}"),
            })
            .collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        if let Some(e) = self.exact_through() {
            parts.push(format!("O(t^{})", e + 1));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
