//! Exhaustive axiom checks over a small family of oriented graphs.

use super::{HopfContext, HopfElement, HopfError, Monomial, TensorElement};
use crate::graphs::enumerate_oriented_graphs;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;

/// Number of instances checked and the first few failures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Check {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub max_vertices: usize,
    pub max_flags: usize,
    pub generators: usize,
    pub monomials: usize,
    pub coassociativity: Check,
    pub compatibility: Check,
    pub counit: Check,
    pub antipode: Check,
    pub grading: Check,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        [&self.coassociativity, &self.compatibility, &self.counit, &self.antipode, &self.grading]
            .iter()
            .all(|c| c.passed())
    }
}

type Triple = BTreeMap<(Monomial, Monomial, Monomial), BigRational>;

fn add3(t: &mut Triple, key: (Monomial, Monomial, Monomial), c: BigRational) {
    *t.entry(key).or_insert_with(|| BigRational::from_integer(0.into())) += c;
}

fn prune(mut t: Triple) -> Triple {
    t.retain(|_, v| *v != BigRational::from_integer(0.into()));
    t
}

fn coassociativity(ctx: &mut HopfContext, delta: &TensorElement) -> Result<bool, HopfError> {
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in delta.terms() {
        for ((a1, a2), x) in ctx.monomial_coproduct(a)?.terms() {
            add3(&mut left, (a1.clone(), a2.clone(), b.clone()), c * x);
        }
        for ((b1, b2), y) in ctx.monomial_coproduct(b)?.terms() {
            add3(&mut right, (a.clone(), b1.clone(), b2.clone()), c * y);
        }
    }
    Ok(prune(left) == prune(right))
}

/// Every oriented graph with at most `max_vertices` vertices and `max_flags`
/// flags, connected or not, is a basis element; the connected ones are the
/// generators.
pub fn verify_axioms(max_vertices: usize, max_flags: usize) -> Result<AxiomReport, HopfError> {
    let graphs = enumerate_oriented_graphs(max_vertices, max_flags, false)?;
    let mut ctx = HopfContext::new();
    let mut report = AxiomReport { max_vertices, max_flags, ..AxiomReport::default() };
    report.monomials = graphs.len();
    report.generators = graphs.iter().filter(|g| g.is_connected()).count();
    for g in &graphs {
        let m = Monomial::from_graph(g)?;
        let x = HopfElement::monomial(m.clone());
        let delta = ctx.monomial_coproduct(&m)?;
        let name = || m.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");

        let direct = HopfContext::graph_coproduct(g)?;
        report.compatibility.record(direct == delta, || format!("Δ(ab) ≠ Δ(a)Δ(b) on {}", name()));

        report.coassociativity.record(coassociativity(&mut ctx, &delta)?, || format!("coassociativity on {}", name()));

        let ok = delta.counit_left() == x && delta.counit_right() == x;
        report.counit.record(ok, || format!("counit on {}", name()));

        let degree = m.degree();
        let ok = delta.terms().keys().all(|(a, b)| a.degree() + b.degree() == degree);
        report.grading.record(ok, || format!("coproduct not homogeneous on {}", name()));

        let (l, r) = ctx.antipode_convolutions(&x)?;
        let target = HopfElement::one().scale(&x.counit());
        report.antipode.record(l == target && r == target, || format!("antipode law on {}", name()));
    }
    // Unit: Δ1 = 1 ⊗ 1 and S(1) = 1.
    let one = HopfElement::one();
    let d1 = ctx.coproduct(&one)?;
    let mut expected = TensorElement::zero();
    expected.add_term(Monomial::unit(), Monomial::unit(), BigRational::one());
    report.counit.record(d1 == expected, || "Δ1 ≠ 1⊗1".into());
    report.antipode.record(ctx.antipode(&one)? == one, || "S(1) ≠ 1".into());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_family_passes() {
        let r = verify_axioms(2, 3).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert!(r.generators > 0 && r.monomials > r.generators);
    }
}
