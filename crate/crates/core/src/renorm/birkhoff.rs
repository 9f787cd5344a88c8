//! Convolution, inversion and the BPHZ recursion.

use super::character::{Character, LinearMap};
use super::element::MSElement;
use super::RenormError;
use crate::hopf::{HopfContext, Monomial};
use std::collections::BTreeSet;

/// `domain` together with every tensor factor of every coproduct, sorted
/// by vertex count.
pub fn closure(domain: &[Monomial], ctx: &mut HopfContext) -> Result<Vec<Monomial>, RenormError> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack: Vec<Monomial> = domain.to_vec();
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for (a, b) in ctx.monomial_coproduct(&m)?.terms().keys() {
            for part in [a, b] {
                if !seen.contains(part) {
                    stack.push(part.clone());
                }
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by_key(|m| m.vertex_count());
    Ok(out)
}

/// `(φ * ψ)(x) = Σ φ(x′) ψ(x″)` over the full coproduct, on `domain`.
pub fn convolution(
    phi: &LinearMap,
    psi: &LinearMap,
    domain: &[Monomial],
    ctx: &mut HopfContext,
) -> Result<LinearMap, RenormError> {
    let order = phi.order().min(psi.order());
    let mut out = LinearMap::new(order);
    for m in domain {
        let mut acc = MSElement::zero(order);
        for ((a, b), c) in ctx.monomial_coproduct(m)?.terms() {
            acc = &acc + &(phi.get(a)? * psi.get(b)?).scale(c);
        }
        out.insert(m.clone(), acc);
    }
    Ok(out)
}

/// `φ^{*−1} = e + Σ_{m≥1} (e − φ)^{*m}`, summed until the powers vanish on
/// the closure of `domain`. Each factor of `(e − φ)^{*m}(x)` needs a
/// nonempty tensor piece, so the sum stops after at most `|V(x)|` terms.
pub fn conv_inverse(phi: &LinearMap, domain: &[Monomial], ctx: &mut HopfContext) -> Result<LinearMap, RenormError> {
    let order = phi.order();
    if phi.get(&Monomial::unit())? != &MSElement::one(order) {
        return Err(RenormError::NotUnital);
    }
    let full = closure(domain, ctx)?;
    let e = LinearMap::counit(&full, order);
    let step = e.minus(phi)?;
    let mut sum = e.clone();
    let mut power = step.clone();
    while power.values().values().any(|v| !v.is_zero()) {
        let mut next = LinearMap::new(order);
        for (m, v) in sum.values() {
            next.insert(m.clone(), v + power.get(m)?);
        }
        sum = next;
        power = convolution(&power, &step, &full, ctx)?;
    }
    let mut out = LinearMap::new(order);
    for m in domain {
        out.insert(m.clone(), sum.get(m)?.clone());
    }
    Ok(out)
}

/// `φ = φ_−^{*−1} * φ_+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Birkhoff {
    pub minus: Character,
    pub plus: Character,
}

/// The counterterm argument `φ(x) + Σ φ_−(x′) φ(x″)` over the reduced
/// coproduct, with `φ_−` supplied by `minus`.
fn bar(
    phi: &Character,
    m: &Monomial,
    ctx: &mut HopfContext,
    mut minus: impl FnMut(&Monomial) -> Result<MSElement, RenormError>,
) -> Result<MSElement, RenormError> {
    let mut acc = phi.eval(m)?;
    for ((a, b), c) in ctx.reduced_coproduct(m)?.terms() {
        acc = &acc + &(&minus(a)? * &phi.eval(b)?).scale(c);
    }
    Ok(acc)
}

/// BPHZ recursion on the generators of `φ`, smallest first; both factors
/// are characters, so the generator values determine them.
pub fn birkhoff(phi: &Character, ctx: &mut HopfContext) -> Result<Birkhoff, RenormError> {
    let order = phi.order();
    let mut minus = Character::new(phi.degree(), order, phi.variable());
    let mut plus = Character::new(phi.degree(), order, phi.variable());
    let mut labels: Vec<_> = phi.values().keys().cloned().collect();
    labels.sort_by_key(|l| l.to_graph().vertex_count());
    for label in labels {
        let m = Monomial::generator(label.clone());
        let arg = bar(phi, &m, ctx, |a| minus.eval(a))?;
        let (polar, regular) = arg.polar_split();
        minus.set(label.clone(), -&polar)?;
        plus.set(label, regular)?;
    }
    Ok(Birkhoff { minus, plus })
}

/// The same recursion applied to every basis monomial of the closure of
/// `domain` without assuming multiplicativity, so that it can be tested.
pub fn birkhoff_on_basis(
    phi: &Character,
    domain: &[Monomial],
    ctx: &mut HopfContext,
) -> Result<(LinearMap, LinearMap), RenormError> {
    let order = phi.order();
    let full = closure(domain, ctx)?;
    let mut minus = LinearMap::new(order);
    let mut plus = LinearMap::new(order);
    for m in &full {
        if m.is_unit() {
            minus.insert(m.clone(), MSElement::one(order));
            plus.insert(m.clone(), MSElement::one(order));
            continue;
        }
        let arg = bar(phi, m, ctx, |a| minus.get(a).cloned())?;
        let (polar, regular) = arg.polar_split();
        minus.insert(m.clone(), -&polar);
        plus.insert(m.clone(), regular);
    }
    Ok((minus, plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphBuilder;
    use crate::rational::ratio;
    use crate::renorm::{Variable, DEFAULT_ORDER};

    fn q(n: i64) -> num_rational::BigRational {
        ratio(n, 1)
    }

    fn label(b: &mut GraphBuilder) -> crate::graphs::CanonicalLabel {
        b.build().unwrap().canonical_label().unwrap()
    }

    fn bare() -> crate::graphs::CanonicalLabel {
        let mut b = GraphBuilder::new();
        b.vertex();
        label(&mut b)
    }

    fn arrow() -> crate::graphs::CanonicalLabel {
        let mut b = GraphBuilder::new();
        b.vertices(2);
        b.arrow(0, 1);
        label(&mut b)
    }

    #[test]
    fn primitive_example() {
        let mut phi = Character::new(0, DEFAULT_ORDER, Variable::Z);
        let a = ratio(3, 7);
        phi.set(bare(), MSElement::from_parts(&[q(1)], &[a.clone()], DEFAULT_ORDER)).unwrap();
        let mut ctx = HopfContext::new();
        let b = birkhoff(&phi, &mut ctx).unwrap();
        assert_eq!(b.minus.value(&bare()).unwrap(), &MSElement::monomial(-1, q(-1), DEFAULT_ORDER));
        assert_eq!(b.plus.value(&bare()).unwrap(), &MSElement::monomial(0, a, DEFAULT_ORDER));
    }

    #[test]
    fn regular_characters_are_untouched() {
        let mut phi = Character::new(2, DEFAULT_ORDER, Variable::OneMinusZ);
        for (i, g) in crate::renorm::generators(2).unwrap().into_iter().enumerate() {
            phi.set(g, MSElement::from_parts(&[], &[q(i as i64 + 1), q(-1)], DEFAULT_ORDER)).unwrap();
        }
        let mut ctx = HopfContext::new();
        let b = birkhoff(&phi, &mut ctx).unwrap();
        assert_eq!(b.plus, phi);
        assert!(b.minus.values().values().all(|v| v.is_zero()));
    }

    #[test]
    fn two_term_inverse() {
        let x = Monomial::generator(arrow());
        let mut ctx = HopfContext::new();
        let reduced = ctx.reduced_coproduct(&x).unwrap();
        assert_eq!(reduced.len(), 1);
        let ((up, down), c) = reduced.terms().iter().next().unwrap();
        assert_eq!(c, &q(1));
        let (up, down) = (up.labels()[0].clone(), down.labels()[0].clone());
        assert_ne!(up, down);

        let mut phi = Character::new(2, DEFAULT_ORDER, Variable::Z);
        let vu = MSElement::from_parts(&[q(2)], &[q(1)], DEFAULT_ORDER);
        let vd = MSElement::from_parts(&[], &[q(-1), q(4)], DEFAULT_ORDER);
        let vx = MSElement::from_parts(&[ratio(1, 2)], &[q(0), q(3)], DEFAULT_ORDER);
        phi.set(up.clone(), vu.clone()).unwrap();
        phi.set(down.clone(), vd.clone()).unwrap();
        phi.set(arrow(), vx.clone()).unwrap();
        let domain = vec![Monomial::unit(), Monomial::generator(up.clone()), Monomial::generator(down), x.clone()];
        let map = phi.to_map(&domain).unwrap();
        let inv = conv_inverse(&map, &domain, &mut ctx).unwrap();
        assert_eq!(inv.get(&Monomial::generator(up)).unwrap(), &-&vu);
        assert_eq!(inv.get(&x).unwrap(), &(&-&vx + &(&vu * &vd)));
        let e = LinearMap::counit(&domain, DEFAULT_ORDER);
        assert!(convolution(&map, &inv, &domain, &mut ctx).unwrap().agrees_with(&e).unwrap());
        assert!(convolution(&e, &map, &domain, &mut ctx).unwrap().agrees_with(&map).unwrap());
        assert_eq!(conv_inverse(&e, &domain, &mut ctx).unwrap(), e);
    }
}
