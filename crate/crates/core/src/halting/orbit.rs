//! Finite/infinite orbit classification with certificates.

use super::lift::{GrowthWitness, OrbitDynamics, Step};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FiniteOrbit,
    InfiniteOrbit,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// The orbit came back after this many steps.
    Period { period: u64 },
    Growth(GrowthWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub point: Vec<u64>,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub budget_used: u64,
    pub proxy_version: String,
}

impl ProbeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One unit of budget per step; in transparent mode one more for asking
/// the domain predicate. A revisit is a period certificate; a growth
/// witness needs transparency. Anything else is inconclusive.
pub fn classify_orbit(start: u64, dynamics: &dyn OrbitDynamics, budget: u64, proxy_version: &str) -> ProbeReport {
    let report = |verdict, certificate, used| ProbeReport {
        point: dynamics.coordinates(start),
        verdict,
        certificate,
        budget_used: used,
        proxy_version: proxy_version.to_string(),
    };
    if budget == 0 {
        return report(Verdict::Inconclusive, None, 0);
    }
    let mut used = 0;
    if dynamics.is_transparent() {
        used += 1;
        if let Some(w) = dynamics.witness(start) {
            return report(Verdict::InfiniteOrbit, Some(Certificate::Growth(w)), used);
        }
    }
    let mut seen = HashMap::from([(start, 0u64)]);
    let mut x = start;
    let mut steps = 0u64;
    while used < budget {
        used += 1;
        steps += 1;
        match dynamics.step(x) {
            Step::Next(y) => {
                if let Some(&first) = seen.get(&y) {
                    return report(Verdict::FiniteOrbit, Some(Certificate::Period { period: steps - first }), used);
                }
                seen.insert(y, steps);
                x = y;
            }
            Step::Unknown | Step::OutOfRange => break,
        }
    }
    report(Verdict::Inconclusive, None, used)
}
