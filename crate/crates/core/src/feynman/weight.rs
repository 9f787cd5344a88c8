use super::{FeynmanError, Theory};
use crate::graphs::Graph;
use num_rational::BigRational;
use num_traits::Zero;

/// `w(τ) = Σ_u Π_edges g^{u(f) u(jf)} · Π_vertices C_{u(flags at v)}` over all
/// colorings `u` of the flags.
pub fn graph_weight(g: &Graph, theory: &Theory) -> Result<BigRational, FeynmanError> {
    if !g.is_vacuum() {
        return Err(FeynmanError::NotVacuum);
    }
    let colors = theory.colors();
    let flags_at = g.flags_at();
    let edges = g.edges();
    let nf = g.flag_count();
    let mut coloring = vec![0usize; nf];
    let mut total = BigRational::zero();
    let mut scratch = Vec::new();
    loop {
        let mut term = Some(BigRational::from_integer(1.into()));
        for &(f, h) in &edges {
            let p = &theory.inverse()[coloring[f]][coloring[h]];
            if p.is_zero() {
                term = None;
                break;
            }
            *term.as_mut().unwrap() *= p;
        }
        if let Some(mut t) = term {
            for at in &flags_at {
                scratch.clear();
                scratch.extend(at.iter().map(|&f| coloring[f]));
                let c = theory.tensor(&scratch);
                if c.is_zero() {
                    t.set_zero();
                    break;
                }
                t *= c;
            }
            total += t;
        }
        // Odometer over colorings.
        let mut i = 0;
        loop {
            if i == nf {
                return Ok(total);
            }
            coloring[i] += 1;
            if coloring[i] < colors {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
    }
}
