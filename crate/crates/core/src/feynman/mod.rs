//! The finite-dimensional toy action
//! `S(φ) = −½ g_ab φ^a φ^b + Σ_k (1/k!) C_{a1…ak} φ^{a1}⋯φ^{ak}`,
//! its graph expansion and an independent Gaussian (Wick) oracle.
//!
//! Both sides are exact power series in `λ`: every vertex carries `1/λ`
//! and every propagator `λ g^{ab}`, so a graph contributes at `λ^{|E|−|V|}`.

mod expansion;
mod oracle;
mod series;
mod weight;

pub use expansion::{graph_expansion, ExpansionOptions};
pub use oracle::{gaussian_oracle, MAX_ORACLE_COLORS};
pub use series::LambdaSeries;
pub use weight::graph_weight;

use crate::graphs::GraphError;
use crate::rational::{format_rational, parse_rational};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FeynmanError {
    #[error("metric must be a nonempty square matrix over {0} colors")]
    MetricShape(usize),
    #[error("metric is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("metric is singular")]
    Singular,
    #[error("tensor entry {index}: color {color} out of range")]
    ColorOutOfRange { index: usize, color: usize },
    #[error("tensor entry {index}: conflicting value for the same symmetric indices")]
    Conflict { index: usize },
    #[error("tensor entry {index}: valence 0 is not part of the interaction")]
    ZeroValence { index: usize },
    #[error("graph has tails; only vacuum graphs carry weights")]
    NotVacuum,
    #[error("oracle supports at most {max} colors, theory has {colors}")]
    TooManyColors { colors: usize, max: usize },
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid theory JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

type Q = BigRational;

/// Metric, its inverse and symmetric vertex tensors, all exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Theory {
    colors: usize,
    metric: Vec<Vec<Q>>,
    inverse: Vec<Vec<Q>>,
    /// Valence → sorted color tuple → value; zero entries are not stored.
    tensors: BTreeMap<usize, BTreeMap<Vec<usize>, Q>>,
}

impl Theory {
    pub fn new(metric: Vec<Vec<Q>>, entries: Vec<(Vec<usize>, Q)>) -> Result<Self, FeynmanError> {
        let colors = metric.len();
        if colors == 0 || metric.iter().any(|row| row.len() != colors) {
            return Err(FeynmanError::MetricShape(colors));
        }
        for a in 0..colors {
            for b in 0..a {
                if metric[a][b] != metric[b][a] {
                    return Err(FeynmanError::NotSymmetric(a, b));
                }
            }
        }
        let inverse = invert(&metric).ok_or(FeynmanError::Singular)?;
        let mut tensors: BTreeMap<usize, BTreeMap<Vec<usize>, Q>> = BTreeMap::new();
        for (index, (mut colors_at, value)) in entries.into_iter().enumerate() {
            if colors_at.is_empty() {
                return Err(FeynmanError::ZeroValence { index });
            }
            if let Some(&color) = colors_at.iter().find(|&&c| c >= colors) {
                return Err(FeynmanError::ColorOutOfRange { index, color });
            }
            colors_at.sort_unstable();
            let slot = tensors.entry(colors_at.len()).or_default();
            match slot.get(&colors_at) {
                Some(existing) if *existing != value => return Err(FeynmanError::Conflict { index }),
                _ => {
                    slot.insert(colors_at, value);
                }
            }
        }
        for slot in tensors.values_mut() {
            slot.retain(|_, v| !v.is_zero());
        }
        tensors.retain(|_, slot| !slot.is_empty());
        Ok(Theory { colors, metric, inverse, tensors })
    }

    /// One color with metric `g` and couplings `C_k = c`.
    pub fn one_color(g: Q, couplings: &[(usize, Q)]) -> Result<Self, FeynmanError> {
        let entries = couplings.iter().map(|(k, c)| (vec![0; *k], c.clone())).collect();
        Theory::new(vec![vec![g]], entries)
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn metric(&self) -> &[Vec<Q>] {
        &self.metric
    }

    /// `g^{ab}`, the propagator.
    pub fn inverse(&self) -> &[Vec<Q>] {
        &self.inverse
    }

    /// `C_{a1…ak}` for any index order.
    pub fn tensor(&self, indices: &[usize]) -> Q {
        let mut key = indices.to_vec();
        key.sort_unstable();
        self.tensors.get(&key.len()).and_then(|t| t.get(&key)).cloned().unwrap_or_else(Q::zero)
    }

    /// Valences with at least one nonzero tensor entry.
    pub fn valences(&self) -> BTreeSet<usize> {
        self.tensors.keys().copied().collect()
    }

    /// Nonzero entries as `(sorted colors, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.tensors.values().flat_map(|t| t.iter())
    }

    pub fn from_json(text: &str) -> Result<Self, FeynmanError> {
        let raw: TheoryJson = serde_json::from_str(text).map_err(|e| FeynmanError::Json(e.to_string()))?;
        let q = |s: &String| parse_rational(s).map_err(|_| FeynmanError::Rational(s.clone()));
        let metric = raw.metric.iter().map(|row| row.iter().map(q).collect()).collect::<Result<Vec<Vec<Q>>, _>>()?;
        if metric.len() != raw.colors {
            return Err(FeynmanError::MetricShape(raw.colors));
        }
        let entries =
            raw.tensors.iter().map(|e| Ok((e.indices.clone(), q(&e.value)?))).collect::<Result<Vec<_>, FeynmanError>>()?;
        Theory::new(metric, entries)
    }

    pub fn to_json(&self) -> String {
        let raw = TheoryJson {
            colors: self.colors,
            metric: self.metric.iter().map(|row| row.iter().map(format_rational).collect()).collect(),
            tensors: self
                .entries()
                .map(|(i, v)| TensorEntry { indices: i.clone(), value: format_rational(v) })
                .collect(),
        };
        serde_json::to_string(&raw).expect("theory serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TheoryJson {
    colors: usize,
    metric: Vec<Vec<String>>,
    #[serde(default)]
    tensors: Vec<TensorEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorEntry {
    indices: Vec<usize>,
    value: String,
}

/// Gauss–Jordan inverse over the rationals.
fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        a[col].iter_mut().for_each(|x| *x /= &p);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                a[r].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= &f * y);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Lowest `λ` power a truncated expansion can reach: only valence-1
/// vertices push `|E| − |V|` below zero, at most one unit per two vertices.
pub(crate) fn lowest_power(valences: &BTreeSet<usize>, vertex_cap: usize) -> i64 {
    if valences.contains(&1) {
        -((vertex_cap / 2) as i64)
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn inverse_and_validation() {
        let t = Theory::new(vec![vec![ratio(2, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(1, 1)]], vec![]).unwrap();
        assert_eq!(t.inverse()[0], vec![ratio(1, 1), ratio(-1, 1)]);
        assert_eq!(t.inverse()[1], vec![ratio(-1, 1), ratio(2, 1)]);
        assert_eq!(
            Theory::new(vec![vec![ratio(1, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(1, 1)]], vec![]),
            Err(FeynmanError::Singular)
        );
        assert_eq!(
            Theory::new(vec![vec![ratio(1, 1), ratio(2, 1)], vec![ratio(1, 1), ratio(1, 1)]], vec![]),
            Err(FeynmanError::NotSymmetric(1, 0))
        );
        let metric = vec![vec![ratio(1, 1)]];
        assert_eq!(
            Theory::new(metric.clone(), vec![(vec![0, 1], ratio(1, 1))]),
            Err(FeynmanError::ColorOutOfRange { index: 0, color: 1 })
        );
        assert_eq!(
            Theory::new(metric, vec![(vec![0, 0], ratio(1, 1)), (vec![0, 0], ratio(2, 1))]),
            Err(FeynmanError::Conflict { index: 1 })
        );
    }

    #[test]
    fn tensors_are_symmetric() {
        let m = vec![vec![ratio(1, 1), ratio(0, 1)], vec![ratio(0, 1), ratio(1, 1)]];
        let t = Theory::new(m, vec![(vec![1, 0, 0], ratio(3, 1)), (vec![1, 1, 1], ratio(0, 1))]).unwrap();
        assert_eq!(t.tensor(&[0, 1, 0]), ratio(3, 1));
        assert_eq!(t.tensor(&[1, 1, 1]), ratio(0, 1));
        assert_eq!(t.valences(), [3].into());
        let again = Theory::from_json(&t.to_json()).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn json_input() {
        let t = Theory::from_json(r#"{"colors":1,"metric":[["2"]],"tensors":[{"indices":[0,0,0,0],"value":"0.5"}]}"#)
            .unwrap();
        assert_eq!(t.inverse()[0][0], ratio(1, 2));
        assert_eq!(t.tensor(&[0, 0, 0, 0]), ratio(1, 2));
        assert!(matches!(Theory::from_json(r#"{"colors":2,"metric":[["1"]]}"#), Err(FeynmanError::MetricShape(2))));
        assert!(matches!(Theory::from_json(r#"{"colors":1,"metric":[["x"]]}"#), Err(FeynmanError::Rational(_))));
    }
}
