//! The Connes–Kreimer bialgebra of oriented graphs.
//!
//! As an algebra it is free commutative on connected isomorphism classes:
//! a basis element is a [`Monomial`], the multiset of its components'
//! canonical labels, and the empty multiset is the unit. The coproduct sums
//! `[upper] ⊗ [lower]` over all admissible cuts, improper ones included.
//! Degree is the total flag count; cuts keep every flag, so the coproduct
//! is homogeneous.

mod algebra;
mod verify;

pub use algebra::HopfContext;
pub use verify::{verify_axioms, AxiomReport, Check};

use crate::graphs::{CanonicalLabel, Graph, GraphError};
use crate::rational::{format_rational, parse_rational};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("monomial component {0:?} is not a connected graph")]
    NotConnected(String),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid Hopf element JSON: {0}")]
    Json(String),
}

/// Sorted multiset of connected-component labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<CanonicalLabel>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_graph(g: &Graph) -> Result<Self, HopfError> {
        let mut labels = g.components().iter().map(Graph::canonical_label).collect::<Result<Vec<_>, _>>()?;
        labels.sort();
        Ok(Monomial(labels))
    }

    /// Components must be labels of connected graphs.
    pub fn from_labels(labels: Vec<CanonicalLabel>) -> Result<Self, HopfError> {
        for l in &labels {
            if !l.to_graph().is_connected() {
                return Err(HopfError::NotConnected(l.to_string()));
            }
        }
        let mut labels = labels;
        labels.sort();
        Ok(Monomial(labels))
    }

    pub fn generator(label: CanonicalLabel) -> Self {
        Monomial(vec![label])
    }

    pub fn labels(&self) -> &[CanonicalLabel] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_graph(&self) -> Graph {
        self.0.iter().fold(Graph::empty(), |acc, l| acc.disjoint_union(&l.to_graph()).expect("oriented components"))
    }

    /// Total flag count.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.to_graph().flag_count()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(|l| l.to_graph().vertex_count()).sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut labels: Vec<CanonicalLabel> = self.0.iter().chain(&other.0).cloned().collect();
        labels.sort();
        Monomial(labels)
    }
}

/// Finite rational combination of monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HopfElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl HopfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::unit())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_graph(g: &Graph) -> Result<Self, HopfError> {
        Ok(Self::monomial(Monomial::from_graph(g)?))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `ε`: the coefficient of the unit.
    pub fn counit(&self) -> BigRational {
        self.terms.get(&Monomial::unit()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Largest degree present, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<ElementEntry> = self
            .terms
            .iter()
            .map(|(m, c)| ElementEntry {
                monomial: m.0.iter().map(|l| l.to_string()).collect(),
                coeff: format_rational(c),
            })
            .collect();
        serde_json::to_string(&entries).expect("element serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, HopfError> {
        let entries: Vec<ElementEntry> = serde_json::from_str(text).map_err(|e| HopfError::Json(e.to_string()))?;
        let mut out = Self::zero();
        for e in entries {
            let labels = e.monomial.iter().map(|s| CanonicalLabel::parse(s)).collect::<Result<Vec<_>, _>>()?;
            let c = parse_rational(&e.coeff).map_err(|_| HopfError::Rational(e.coeff.clone()))?;
            out.add_term(Monomial::from_labels(labels)?, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementEntry {
    monomial: Vec<String>,
    coeff: String,
}

impl Add for &HopfElement {
    type Output = HopfElement;
    fn add(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: &HopfElement) -> HopfElement {
        self + &-rhs
    }
}

impl Neg for &HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        self.scale(&-BigRational::one())
    }
}

/// The product `m([σ] ⊗ [τ]) = [σ ⊔ τ]`, extended bilinearly.
impl Mul for &HopfElement {
    type Output = HopfElement;
    fn mul(self, rhs: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.times(b), x * y);
            }
        }
        out
    }
}

/// Element of `H ⊗ H`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), BigRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise product in `H ⊗ H`.
    pub fn times(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a1, a2), x) in &self.terms {
            for ((b1, b2), y) in &other.terms {
                out.add_term(a1.times(b1), a2.times(b2), x * y);
            }
        }
        out
    }

    pub fn plus(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    /// `(ε ⊗ id)` and `(id ⊗ ε)`.
    pub fn counit_left(&self) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((a, b), c) in &self.terms {
            if a.is_unit() {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }

    pub fn counit_right(&self) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((a, b), c) in &self.terms {
            if b.is_unit() {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }
}
