//! Maps from the graph bialgebra into a minimal-subtraction algebra.

use super::element::{MSElement, DEFAULT_ORDER};
use super::RenormError;
use crate::graphs::{enumerate_oriented_graphs, CanonicalLabel};
use crate::hopf::Monomial;
use crate::rational::{parse_rational, format_rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Reading of the algebra variable `t`. Arithmetic ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    /// `t = z`, germs of meromorphic functions at 0.
    #[default]
    Z,
    /// `t = 1 − z`, expansion at the boundary point of the disc.
    OneMinusZ,
}

/// A linear map `H → A` known on finitely many basis monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    order: i64,
    values: BTreeMap<Monomial, MSElement>,
}

impl LinearMap {
    pub fn new(order: i64) -> Self {
        LinearMap { order, values: BTreeMap::new() }
    }

    /// The convolution unit `e = u_A ∘ ε` on `domain`.
    pub fn counit(domain: &[Monomial], order: i64) -> Self {
        let mut e = Self::new(order);
        for m in domain {
            let v = if m.is_unit() { MSElement::one(order) } else { MSElement::zero(order) };
            e.insert(m.clone(), v);
        }
        e
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn insert(&mut self, m: Monomial, value: MSElement) {
        self.values.insert(m, value);
    }

    pub fn get(&self, m: &Monomial) -> Result<&MSElement, RenormError> {
        self.values.get(m).ok_or_else(|| RenormError::DegreeOverflow(monomial_text(m)))
    }

    pub fn values(&self) -> &BTreeMap<Monomial, MSElement> {
        &self.values
    }

    pub fn domain(&self) -> Vec<Monomial> {
        self.values.keys().cloned().collect()
    }

    /// Pointwise `self − other` on the shared domain.
    pub fn minus(&self, other: &LinearMap) -> Result<LinearMap, RenormError> {
        let mut out = LinearMap::new(self.order);
        for (m, v) in &self.values {
            out.insert(m.clone(), v - other.get(m)?);
        }
        Ok(out)
    }

    /// Agreement on every monomial of `self`'s domain, within exactness.
    pub fn agrees_with(&self, other: &LinearMap) -> Result<bool, RenormError> {
        for (m, v) in &self.values {
            if !v.agrees_with(other.get(m)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn monomial_text(m: &Monomial) -> String {
    if m.is_unit() {
        return "1".into();
    }
    m.labels().iter().map(|l| l.as_str()).collect::<Vec<_>>().join(" · ")
}

/// Algebra homomorphism `H → A`, stored on generators of degree `≤ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    degree: usize,
    order: i64,
    variable: Variable,
    values: BTreeMap<CanonicalLabel, MSElement>,
}

impl Character {
    pub fn new(degree: usize, order: i64, variable: Variable) -> Self {
        Character { degree, order, variable, values: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn values(&self) -> &BTreeMap<CanonicalLabel, MSElement> {
        &self.values
    }

    /// Sets the value on a connected generator of degree at most `D`.
    pub fn set(&mut self, label: CanonicalLabel, value: MSElement) -> Result<(), RenormError> {
        let g = label.to_graph();
        if !g.is_connected() {
            return Err(RenormError::NotConnected(label.to_string()));
        }
        if g.flag_count() > self.degree {
            return Err(RenormError::DegreeOverflow(label.to_string()));
        }
        self.values.insert(label, value);
        Ok(())
    }

    pub fn value(&self, label: &CanonicalLabel) -> Result<&MSElement, RenormError> {
        self.values.get(label).ok_or_else(|| RenormError::Undefined(label.to_string()))
    }

    /// Multiplicative extension; `φ(1) = 1_A`.
    pub fn eval(&self, m: &Monomial) -> Result<MSElement, RenormError> {
        if m.degree() > self.degree {
            return Err(RenormError::DegreeOverflow(monomial_text(m)));
        }
        let mut out = MSElement::one(self.order);
        for label in m.labels() {
            out = &out * self.value(label)?;
        }
        Ok(out)
    }

    pub fn to_map(&self, domain: &[Monomial]) -> Result<LinearMap, RenormError> {
        let mut map = LinearMap::new(self.order);
        for m in domain {
            map.insert(m.clone(), self.eval(m)?);
        }
        Ok(map)
    }

    /// Small random rationals on every generator of degree `≤ degree`:
    /// a pole of order at most `polar_degree` and a regular polynomial of
    /// degree at most `regular_degree`.
    pub fn random(
        degree: usize,
        polar_degree: usize,
        regular_degree: usize,
        seed: u64,
    ) -> Result<Self, RenormError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut phi = Character::new(degree, DEFAULT_ORDER, Variable::Z);
        let coeff = |rng: &mut ChaCha8Rng| {
            BigRational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=5)))
        };
        for label in generators(degree)? {
            let polar: Vec<_> = (0..polar_degree).map(|_| coeff(&mut rng)).collect();
            let regular: Vec<_> = (0..=regular_degree).map(|_| coeff(&mut rng)).collect();
            phi.set(label, MSElement::from_parts(&polar, &regular, DEFAULT_ORDER))?;
        }
        Ok(phi)
    }

    pub fn from_json(text: &str) -> Result<Self, RenormError> {
        let raw: CharacterJson = serde_json::from_str(text).map_err(|e| RenormError::Json(e.to_string()))?;
        let order = raw.order.unwrap_or(DEFAULT_ORDER);
        let mut phi = Character::new(raw.degree, order, raw.variable.unwrap_or_default());
        for (i, entry) in raw.values.into_iter().enumerate() {
            let label = CanonicalLabel::parse(&entry.graph)
                .map_err(|e| RenormError::Json(format!("values[{i}].graph: {e}")))?;
            let parse = |list: &[String], part: &str| -> Result<Vec<BigRational>, RenormError> {
                list.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        parse_rational(s).map_err(|_| RenormError::Json(format!("values[{i}].value.{part}[{j}]: invalid rational {s:?}")))
                    })
                    .collect()
            };
            let polar = parse(&entry.value.polar, "polar")?;
            let regular = parse(&entry.value.regular, "regular")?;
            if phi.values.contains_key(&label) {
                return Err(RenormError::Json(format!("values[{i}].graph: duplicate class {}", entry.graph)));
            }
            phi.set(label, MSElement::from_parts(&polar, &regular, order))?;
        }
        Ok(phi)
    }

    pub fn to_json(&self) -> String {
        let values = self
            .values
            .iter()
            .map(|(label, v)| {
                let (polar, regular) = v.parts();
                ValueEntry {
                    graph: label.to_string(),
                    value: Parts {
                        polar: polar.iter().map(format_rational).collect(),
                        regular: regular.iter().map(format_rational).collect(),
                    },
                }
            })
            .collect();
        let raw = CharacterJson {
            degree: self.degree,
            order: Some(self.order),
            variable: Some(self.variable),
            values,
        };
        serde_json::to_string_pretty(&raw).expect("character JSON serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterJson {
    degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variable: Option<Variable>,
    values: Vec<ValueEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ValueEntry {
    graph: String,
    value: Parts,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Parts {
    #[serde(default)]
    polar: Vec<String>,
    #[serde(default)]
    regular: Vec<String>,
}

/// Connected oriented classes with at most `degree` flags.
pub fn generators(degree: usize) -> Result<Vec<CanonicalLabel>, RenormError> {
    let graphs = enumerate_oriented_graphs(degree / 2 + 1, degree, true)?;
    Ok(graphs.iter().map(|g| g.canonical_label()).collect::<Result<_, _>>()?)
}

/// Every basis monomial with at most `degree` flags and `max_vertices`
/// vertices, the unit included.
pub fn basis(degree: usize, max_vertices: usize) -> Result<Vec<Monomial>, RenormError> {
    let mut out = vec![Monomial::unit()];
    for g in enumerate_oriented_graphs(max_vertices, degree, false)? {
        out.push(Monomial::from_graph(&g)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
