use super::{graph_weight, lowest_power, FeynmanError, LambdaSeries, Theory};
use crate::graphs::{enumerate_vacuum_graphs, VacuumOptions};
use num_rational::BigRational;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExpansionOptions {
    pub vacuum: VacuumOptions,
}

/// `Σ_τ λ^{|E|−|V|} w(τ)/|Aut τ|` over vacuum classes with `|E| − |V| ≤ order`
/// and at most the configured number of vertices.
pub fn graph_expansion(
    theory: &Theory,
    order: usize,
    options: &ExpansionOptions,
) -> Result<LambdaSeries, FeynmanError> {
    let valences = theory.valences();
    let cap = options.vacuum.cap_for(order);
    let graphs = enumerate_vacuum_graphs(order, &valences, &options.vacuum)?;
    let terms: Vec<(i64, BigRational)> = graphs
        .par_iter()
        .map(|g| {
            let aut = g.automorphism_order_bounded(options.vacuum.flag_bound)?;
            let w = graph_weight(g, theory)?;
            Ok((-g.euler_characteristic(), w / BigRational::from_integer(aut.into())))
        })
        .collect::<Result<_, FeynmanError>>()?;
    let mut series = LambdaSeries::zero(lowest_power(&valences, cap), order as i64);
    for (p, c) in &terms {
        series.add_term(*p, c);
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn examples() {
        let opts = ExpansionOptions::default();
        let free = Theory::one_color(ratio(1, 1), &[]).unwrap();
        assert_eq!(graph_expansion(&free, 3, &opts).unwrap(), LambdaSeries::one(3));
        let c = ratio(3, 7);
        let quartic = Theory::one_color(ratio(1, 1), &[(4, c.clone())]).unwrap();
        let s = graph_expansion(&quartic, 1, &opts).unwrap();
        assert_eq!(s.coefficients(), &[ratio(1, 1), &c / ratio(8, 1)]);
        let cubic = Theory::one_color(ratio(1, 1), &[(3, c.clone())]).unwrap();
        let s = graph_expansion(&cubic, 1, &opts).unwrap();
        assert_eq!(s.coefficient(1), ratio(5, 24) * &c * &c);
    }
}
