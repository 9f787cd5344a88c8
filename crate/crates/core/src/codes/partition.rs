//! The complexity-weighted partition sum
//! `Z(R, Δ; β) = Σ K̂(C)^(−β + δ(C) − 1)` over codes with `R(C) ≈ R` and
//! `Δ ≤ δ(C) ≤ 1`.
//!
//! Selection is exact (rational); the terms are real powers summed in
//! binary64 with Neumaier compensation. Since every `K̂ ≥ 2`, each term
//! decreases in `β`, and raising `Δ` only removes terms.

use super::CodeEnsemble;
use crate::rational::to_f64;
use num_rational::BigRational;
use num_traits::Signed;

/// Default tolerance for matching `R(C)` against the target rate.
pub fn default_eta() -> BigRational {
    crate::rational::ratio(1, 100)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionQuery {
    pub rate: BigRational,
    pub delta_min: BigRational,
    pub beta: f64,
    pub eta: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionValue {
    pub z: f64,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub rate: f64,
    pub delta_min: f64,
    pub beta: f64,
    pub z: f64,
    pub terms: usize,
}

pub fn partition_sum(ensemble: &CodeEnsemble, query: &PartitionQuery) -> PartitionValue {
    let one = BigRational::from_integer(1.into());
    let mut sum = NeumaierSum::default();
    let mut terms = 0;
    for e in ensemble.entries() {
        let p = &e.params;
        if (&p.rate - &query.rate).abs() > query.eta || p.delta < query.delta_min || p.delta > one {
            continue;
        }
        let exponent = -query.beta + to_f64(&p.delta) - 1.0;
        sum.add((e.complexity_bits as f64 * exponent).exp2());
        terms += 1;
    }
    PartitionValue { z: sum.total(), terms }
}

/// `steps` evenly spaced inverse temperatures from `min` to `max`.
pub fn beta_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![min],
        _ => (0..steps).map(|i| min + (max - min) * i as f64 / (steps - 1) as f64).collect(),
    }
}

pub fn partition_sweep(
    ensemble: &CodeEnsemble,
    rate: &BigRational,
    delta_min: &BigRational,
    eta: &BigRational,
    betas: &[f64],
) -> Vec<SweepRow> {
    betas
        .iter()
        .map(|&beta| {
            let query = PartitionQuery {
                rate: rate.clone(),
                delta_min: delta_min.clone(),
                beta,
                eta: eta.clone(),
            };
            let v = partition_sum(ensemble, &query);
            SweepRow { rate: to_f64(rate), delta_min: to_f64(delta_min), beta, z: v.z, terms: v.terms }
        })
        .collect()
}

/// `R,Delta,beta,Z,terms` after the ensemble's stamp line.
pub fn sweep_csv(ensemble: &CodeEnsemble, rows: &[SweepRow]) -> String {
    let mut out = ensemble.stamp();
    out.push('\n');
    out.push_str("R,Delta,beta,Z,terms\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_f64(r.rate),
            fmt_f64(r.delta_min),
            fmt_f64(r.beta),
            fmt_f64(r.z),
            r.terms
        ));
    }
    out
}

/// Scientific notation with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Default, Clone, Copy)]
struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
