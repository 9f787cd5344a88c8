use super::{HopfElement, HopfError, Monomial, TensorElement};
use crate::graphs::{CanonicalLabel, Graph};
use num_rational::BigRational;
use num_traits::One;
use std::collections::HashMap;

/// Per-call memo for generator coproducts and antipodes.
#[derive(Debug, Default)]
pub struct HopfContext {
    coproducts: HashMap<CanonicalLabel, TensorElement>,
    antipodes: HashMap<CanonicalLabel, HopfElement>,
}

impl HopfContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Σ_C [τ^C] ⊗ [τ_C]` computed from the cuts of `g` itself.
    pub fn graph_coproduct(g: &Graph) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero();
        for cut in g.enumerate_cuts()? {
            let (up, down) = cut.halves(g);
            out.add_term(Monomial::from_graph(&up)?, Monomial::from_graph(&down)?, BigRational::one());
        }
        Ok(out)
    }

    pub fn generator_coproduct(&mut self, label: &CanonicalLabel) -> Result<TensorElement, HopfError> {
        if let Some(t) = self.coproducts.get(label) {
            return Ok(t.clone());
        }
        let t = Self::graph_coproduct(&label.to_graph())?;
        self.coproducts.insert(label.clone(), t.clone());
        Ok(t)
    }

    /// Multiplicative extension over the components.
    pub fn monomial_coproduct(&mut self, m: &Monomial) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero();
        out.add_term(Monomial::unit(), Monomial::unit(), BigRational::one());
        for label in m.labels() {
            out = out.times(&self.generator_coproduct(label)?);
        }
        Ok(out)
    }

    pub fn coproduct(&mut self, x: &HopfElement) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero();
        for (m, c) in x.terms() {
            out = out.plus(&self.monomial_coproduct(m)?.scale(c));
        }
        Ok(out)
    }

    /// `Δ(m) − m ⊗ 1 − 1 ⊗ m` for a non-unit monomial.
    pub fn reduced_coproduct(&mut self, m: &Monomial) -> Result<TensorElement, HopfError> {
        let mut t = self.monomial_coproduct(m)?;
        if !m.is_unit() {
            t.add_term(m.clone(), Monomial::unit(), -BigRational::one());
            t.add_term(Monomial::unit(), m.clone(), -BigRational::one());
        }
        Ok(t)
    }

    /// `S(x) = −x − Σ S(x′) x″` on generators, recursing on vertex count:
    /// every `x′` in a reduced coproduct has strictly fewer vertices.
    /// Extended multiplicatively and linearly.
    pub fn antipode(&mut self, x: &HopfElement) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::zero();
        for (m, c) in x.terms() {
            out = &out + &self.monomial_antipode(m)?.scale(c);
        }
        Ok(out)
    }

    fn monomial_antipode(&mut self, m: &Monomial) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::one();
        for label in m.labels() {
            out = &out * &self.generator_antipode(label)?;
        }
        Ok(out)
    }

    fn generator_antipode(&mut self, label: &CanonicalLabel) -> Result<HopfElement, HopfError> {
        if let Some(s) = self.antipodes.get(label) {
            return Ok(s.clone());
        }
        let x = Monomial::generator(label.clone());
        let mut s = -&HopfElement::monomial(x.clone());
        for ((left, right), c) in self.reduced_coproduct(&x)?.terms() {
            let sl = self.monomial_antipode(left)?;
            s = &s - &(&sl * &HopfElement::term(right.clone(), c.clone()));
        }
        self.antipodes.insert(label.clone(), s.clone());
        Ok(s)
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` and `m ∘ (id ⊗ S) ∘ Δ`.
    pub fn antipode_convolutions(&mut self, x: &HopfElement) -> Result<(HopfElement, HopfElement), HopfError> {
        let delta = self.coproduct(x)?;
        let mut left = HopfElement::zero();
        let mut right = HopfElement::zero();
        for ((a, b), c) in delta.terms() {
            let (ma, mb) = (HopfElement::monomial(a.clone()), HopfElement::monomial(b.clone()));
            left = &left + &(&self.antipode(&ma)? * &mb).scale(c);
            right = &right + &(&ma * &self.antipode(&mb)?).scale(c);
        }
        Ok((left, right))
    }
}
