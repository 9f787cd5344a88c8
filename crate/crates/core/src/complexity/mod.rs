//! A computable stand-in for exponential Kolmogorov complexity.
//!
//! True complexity is uncomputable. [`ComplexityProxy`] fixes a description
//! grammar ([`Description`]) and a bounded deterministic search, and defines
//! `K̂(x) = 2^bits` where `bits` is 8 times the length of the shortest
//! description the search finds. The prefix variant `K̂P` adds an Elias-gamma
//! header encoding that bit length. Values are contract values tied to
//! [`PROXY_VERSION`], not statements about true complexity.
//!
//! The proxy only has weak analogues of the invariance and self-similarity
//! properties of true complexity; none of those are claimed here.

pub mod description;
pub mod lzw;
pub mod order;
mod search;
pub mod zipf;

use crate::codes::{Code, CodeError};
use num_bigint::BigUint;
use num_traits::One;

pub use description::Description;
pub use order::{KolmogorovOrder, LevinWeights};
pub use zipf::{zipf_analyze, RankFrequency, ZipfAnalysis, ZipfFit};

/// Bumped whenever the grammar, the search or the compressor changes.
pub const PROXY_VERSION: &str = "proxy-v1/lzw12";

pub const DEFAULT_BUDGET: u64 = 4096;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ComplexityError {
    #[error("search budget must be positive")]
    ZeroBudget,
    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("value too large to materialise")]
    TooLarge,
    #[error("expected {0}")]
    TypeMismatch(&'static str),
    #[error("tower needs base >= 2 and height >= 1")]
    InvalidTower,
    #[error("duplicate object at position {0}")]
    Duplicate(usize),
    #[error("empty universe")]
    EmptyUniverse,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Anything the proxy can describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Int(BigUint),
    Word(Vec<u8>),
    Code(Code),
    /// A power tower too large to materialise.
    Tower { base: BigUint, height: BigUint },
}

impl Object {
    pub fn int(n: u64) -> Self {
        Object::Int(BigUint::from(n))
    }

    /// `base ↑↑ height`, materialised as an integer when small enough.
    pub fn tower(base: BigUint, height: BigUint) -> Result<Self, ComplexityError> {
        if base < BigUint::from(2u32) || height < BigUint::one() {
            return Err(ComplexityError::InvalidTower);
        }
        Ok(match description::tower_value(&base, &height) {
            Some(v) => Object::Int(v),
            None => Object::Tower { base, height },
        })
    }

    /// Tie-break key for Kolmogorov order.
    pub fn canonical_string(&self) -> String {
        match self {
            Object::Int(n) => n.to_string(),
            Object::Word(w) => {
                let mut s = String::from("w:");
                for b in w {
                    s.push_str(&format!("{b:02x}"));
                }
                s
            }
            Object::Code(c) => c.canonical_string(),
            Object::Tower { base, height } => format!("T({base},{height})"),
        }
    }
}

/// Which describers the search may use. The literal describer (decimal,
/// blob or raw code word list) is always on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Describers {
    pub powers: bool,
    pub towers: bool,
    pub products: bool,
    pub sums: bool,
    pub repetition: bool,
    pub structured_codes: bool,
}

impl Default for Describers {
    fn default() -> Self {
        Describers {
            powers: true,
            towers: true,
            products: true,
            sums: true,
            repetition: true,
            structured_codes: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProxy {
    describers: Describers,
    budget: u64,
}

impl Default for ComplexityProxy {
    fn default() -> Self {
        ComplexityProxy { describers: Describers::default(), budget: DEFAULT_BUDGET }
    }
}

impl ComplexityProxy {
    pub fn new(describers: Describers, budget: u64) -> Result<Self, ComplexityError> {
        if budget == 0 {
            return Err(ComplexityError::ZeroBudget);
        }
        Ok(ComplexityProxy { describers, budget })
    }

    pub fn with_budget(budget: u64) -> Result<Self, ComplexityError> {
        Self::new(Describers::default(), budget)
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn version(&self) -> &'static str {
        PROXY_VERSION
    }

    /// Shortest description among the candidates the bounded search
    /// generates; ties go to the lexicographically smallest serialization.
    pub fn shortest_description(&self, x: &Object) -> Description {
        search::Searcher::new(self.describers, self.budget).describe(x)
    }

    /// `log2 K̂(x)`.
    pub fn complexity_bits(&self, x: &Object) -> u64 {
        self.shortest_description(x).bit_length()
    }

    /// `log2 K̂P(x)`: plain bits plus the Elias-gamma header.
    pub fn prefix_complexity_bits(&self, x: &Object) -> u64 {
        let bits = self.complexity_bits(x);
        bits + gamma_header_bits(bits)
    }

    /// `K̂(x)` or, with `prefix`, `K̂P(x)`.
    pub fn proxy_complexity(&self, x: &Object, prefix: bool) -> BigUint {
        let bits = if prefix { self.prefix_complexity_bits(x) } else { self.complexity_bits(x) };
        BigUint::one() << bits as usize
    }
}

/// Length of the Elias-gamma code of `n ≥ 1`: `2⌊log2 n⌋ + 1`.
pub fn gamma_header_bits(n: u64) -> u64 {
    assert!(n >= 1, "Elias gamma is defined for positive integers");
    2 * (63 - n.leading_zeros() as u64) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proxy_examples() {
        let proxy = ComplexityProxy::default();
        let five = proxy.shortest_description(&Object::int(5));
        assert_eq!(five, Description::lit(5u32));
        assert_eq!(five.bit_length(), 8);
        assert_eq!(proxy.proxy_complexity(&Object::int(5), false), BigUint::from(256u32));

        let big = proxy.shortest_description(&Object::int(4294967296));
        assert_eq!(big.serialize(), "2^32");
        assert_eq!(proxy.proxy_complexity(&Object::int(4294967296), false), BigUint::one() << 32);

        let billion = proxy.shortest_description(&Object::int(1_000_000_000));
        assert_eq!(billion.serialize(), "10^9");
        assert_eq!(billion.bit_length(), 32);

        assert!(
            proxy.proxy_complexity(&Object::int(1 << 32), false)
                < proxy.proxy_complexity(&Object::int(1234567891), false)
        );
    }

    #[test]
    fn zero_budget_is_rejected() {
        assert_eq!(ComplexityProxy::with_budget(0), Err(ComplexityError::ZeroBudget));
    }

    #[test]
    fn gamma_header() {
        assert_eq!(gamma_header_bits(1), 1);
        assert_eq!(gamma_header_bits(8), 7);
        assert_eq!(gamma_header_bits(15), 7);
        assert_eq!(gamma_header_bits(16), 9);
        let proxy = ComplexityProxy::default();
        assert_eq!(proxy.prefix_complexity_bits(&Object::int(5)), 8 + 7);
    }

    #[test]
    fn invalid_towers() {
        assert_eq!(Object::tower(1u32.into(), 3u32.into()), Err(ComplexityError::InvalidTower));
        assert_eq!(Object::tower(2u32.into(), 0u32.into()), Err(ComplexityError::InvalidTower));
        assert_eq!(Object::tower(2u32.into(), 3u32.into()), Ok(Object::int(16)));
    }
}
