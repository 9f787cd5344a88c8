use super::{ComplexityError, ComplexityProxy, Object};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct OrderEntry {
    pub object: Object,
    pub bits: u64,
    pub key: String,
}

/// A finite universe listed by increasing `(K̂, canonical serialization)`.
#[derive(Debug, Clone)]
pub struct KolmogorovOrder {
    entries: Vec<OrderEntry>,
    ranks: HashMap<String, usize>,
    version: &'static str,
}

impl KolmogorovOrder {
    pub fn new(universe: Vec<Object>, proxy: &ComplexityProxy) -> Result<Self, ComplexityError> {
        let mut seen = HashMap::with_capacity(universe.len());
        let keyed: Vec<(Object, String)> = universe
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                let key = o.canonical_string();
                match seen.insert(key.clone(), i) {
                    Some(_) => Err(ComplexityError::Duplicate(i)),
                    None => Ok((o, key)),
                }
            })
            .collect::<Result<_, _>>()?;
        let mut entries: Vec<OrderEntry> = keyed
            .into_par_iter()
            .map(|(object, key)| OrderEntry { bits: proxy.complexity_bits(&object), object, key })
            .collect();
        entries.sort_by(|a, b| (a.bits, &a.key).cmp(&(b.bits, &b.key)));
        let ranks = entries.iter().enumerate().map(|(i, e)| (e.key.clone(), i + 1)).collect();
        Ok(KolmogorovOrder { entries, ranks, version: proxy.version() })
    }

    /// Order on the integers `1..=window`.
    pub fn integers(window: u64, proxy: &ComplexityProxy) -> Self {
        Self::new((1..=window).map(Object::int).collect(), proxy).expect("distinct integers")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn version(&self) -> &'static str {
        self.version
    }

    /// 1-based rank.
    pub fn rank(&self, x: &Object) -> Option<usize> {
        self.ranks.get(&x.canonical_string()).copied()
    }

    pub fn object(&self, rank: usize) -> Option<&Object> {
        rank.checked_sub(1).and_then(|i| self.entries.get(i)).map(|e| &e.object)
    }

    pub fn entries(&self) -> &[OrderEntry] {
        &self.entries
    }

    /// Rank of a positive integer, for orders built by [`Self::integers`].
    pub fn rank_of_int(&self, n: u64) -> Option<u64> {
        self.ranks.get(&n.to_string()).map(|&r| r as u64)
    }

    /// Integer at a rank, for orders built by [`Self::integers`].
    pub fn int_at(&self, rank: u64) -> Option<u64> {
        use num_traits::ToPrimitive;
        match self.object(usize::try_from(rank).ok()?)? {
            Object::Int(n) => n.to_u64(),
            _ => None,
        }
    }
}

/// Normalised `1/K̂P` weights on a finite universe, exact.
#[derive(Debug, Clone)]
pub struct LevinWeights {
    pub objects: Vec<Object>,
    pub weights: Vec<BigRational>,
}

impl LevinWeights {
    pub fn new(universe: Vec<Object>, proxy: &ComplexityProxy) -> Result<Self, ComplexityError> {
        let bits: Vec<u64> = universe.par_iter().map(|o| proxy.prefix_complexity_bits(o)).collect();
        let weights = Self::weights_from_prefix_bits(&bits)?;
        Ok(LevinWeights { objects: universe, weights })
    }

    /// `2^{-b_i} / Σ_j 2^{-b_j}`.
    pub fn weights_from_prefix_bits(bits: &[u64]) -> Result<Vec<BigRational>, ComplexityError> {
        let max = *bits.iter().max().ok_or(ComplexityError::EmptyUniverse)?;
        let scaled: Vec<BigUint> = bits.iter().map(|&b| BigUint::one() << (max - b) as usize).collect();
        let total: BigUint = scaled.iter().sum();
        Ok(scaled
            .into_iter()
            .map(|s| BigRational::new(s.into(), total.clone().into()))
            .collect())
    }

    pub fn total(&self) -> BigRational {
        self.weights.iter().fold(BigRational::zero(), |acc, w| acc + w)
    }
}
