//! Error-correcting codes: parameters, bound curves, Reed–Solomon codes,
//! ensembles and the complexity-weighted partition sum.
//!
//! Everything here is exact except [`bounds`] (entropy curves) and
//! [`partition`] (real exponents summed in binary64).

pub mod bounds;
pub mod ensemble;
pub mod field;
pub mod partition;
pub mod reed_solomon;

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use bounds::{bound_curve, q_entropy, BoundKind};
pub use ensemble::{enumerate_linear_codes, sample_codes, CodeEnsemble, EnsembleEntry, Provenance};
pub use field::Field;
pub use partition::{partition_sum, partition_sweep, PartitionQuery, PartitionValue, SweepRow};
pub use reed_solomon::reed_solomon;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CodeError {
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("alphabet size must be in 2..={max}, got {0}", max = field::MAX_Q)]
    InvalidAlphabet(usize),
    #[error("no finite field of order {0} is supported")]
    UnsupportedField(usize),
    #[error("a code needs at least two words, got {0}")]
    TooFewWords(usize),
    #[error("block length must be positive")]
    EmptyBlockLength,
    #[error("duplicate word at position {0}")]
    DuplicateWord(usize),
    #[error("word {index} has symbol {symbol} outside the alphabet of size {q}")]
    SymbolOutOfRange { index: usize, symbol: u8, q: usize },
    #[error("relative distance {0} outside [0, 1]")]
    DeltaOutOfRange(f64),
    #[error("invalid Reed-Solomon parameters: {0}")]
    InvalidReedSolomon(String),
    #[error("enumeration needs {needed} codes, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("cannot sample {size} distinct words from a space of {space}")]
    SampleTooLarge { size: usize, space: u128 },
    #[error("code violates the Singleton bound: {0}")]
    SingletonViolated(String),
}

/// A `q`-ary alphabet, optionally carrying finite-field structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    q: usize,
    field: Option<Arc<Field>>,
}

impl Alphabet {
    pub fn new(q: usize) -> Result<Self, CodeError> {
        if !(2..=field::MAX_Q).contains(&q) {
            return Err(CodeError::InvalidAlphabet(q));
        }
        Ok(Alphabet { q, field: None })
    }

    /// Alphabet identified with `F_q`.
    pub fn field(q: usize) -> Result<Self, CodeError> {
        Ok(Alphabet { q, field: Some(Arc::new(Field::new(q)?)) })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn field_structure(&self) -> Option<&Field> {
        self.field.as_deref()
    }
}

/// Extra structure remembered by codes built from a generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Linear { generator: Vec<Vec<u8>> },
    ReedSolomon { k: usize, points: Vec<u8>, generator: Vec<Vec<u8>> },
}

impl Structure {
    pub fn generator(&self) -> &[Vec<u8>] {
        match self {
            Structure::Linear { generator } | Structure::ReedSolomon { generator, .. } => generator,
        }
    }
}

/// A set of distinct words of equal length `n` over an alphabet.
///
/// Words are kept sorted, so two codes with the same word set compare equal
/// regardless of how they were built.
#[derive(Debug, Clone)]
pub struct Code {
    alphabet: Alphabet,
    n: usize,
    words: Vec<Vec<u8>>,
    structure: Option<Structure>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet.q == other.alphabet.q && self.n == other.n && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    pub fn new(alphabet: Alphabet, n: usize, words: Vec<Vec<u8>>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::EmptyBlockLength);
        }
        if words.len() < 2 {
            return Err(CodeError::TooFewWords(words.len()));
        }
        let mut seen = BTreeSet::new();
        for (index, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(CodeError::LengthMismatch(n, w.len()));
            }
            if let Some(&symbol) = w.iter().find(|&&s| s as usize >= alphabet.q) {
                return Err(CodeError::SymbolOutOfRange { index, symbol, q: alphabet.q });
            }
            if !seen.insert(w.as_slice()) {
                return Err(CodeError::DuplicateWord(index));
            }
        }
        let mut words = words;
        words.sort_unstable();
        Ok(Code { alphabet, n, words, structure: None })
    }

    /// The row space of `generator` over the alphabet's field.
    pub fn linear(alphabet: Alphabet, generator: Vec<Vec<u8>>) -> Result<Self, CodeError> {
        let words = span(&alphabet, &generator)?;
        let n = generator.first().map_or(0, Vec::len);
        let mut code = Code::new(alphabet, n, words)?;
        code.structure = Some(Structure::Linear { generator });
        Ok(code)
    }

    pub(crate) fn with_structure(mut self, structure: Structure) -> Self {
        self.structure = Some(structure);
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn q(&self) -> usize {
        self.alphabet.q
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn structure(&self) -> Option<&Structure> {
        self.structure.as_ref()
    }

    pub fn generator(&self) -> Option<&[Vec<u8>]> {
        self.structure.as_ref().map(Structure::generator)
    }

    /// Minimum distance over distinct pairs. Linear codes use the minimum
    /// nonzero weight, which is the same number.
    pub fn minimum_distance(&self) -> usize {
        if self.generator().is_some() {
            return self
                .words
                .iter()
                .map(|w| w.iter().filter(|&&s| s != 0).count())
                .filter(|&w| w > 0)
                .min()
                .expect("linear code has a nonzero word");
        }
        let mut best = self.n;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = a.iter().zip(b).filter(|(x, y)| x != y).count();
                if d < best {
                    best = d;
                    if best == 1 {
                        return 1;
                    }
                }
            }
        }
        best
    }

    /// `q{q}n{n}:` followed by the sorted words in base-36 digits.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("q{}n{}:", self.alphabet.q, self.n);
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.extend(w.iter().map(|&c| symbol_char(c)));
        }
        s
    }

    /// All words concatenated, one byte per symbol.
    pub fn word_bytes(&self) -> Vec<u8> {
        self.words.concat()
    }
}

pub(crate) fn symbol_char(s: u8) -> char {
    std::char::from_digit(s as u32, 36).expect("symbol below 36")
}

fn span(alphabet: &Alphabet, generator: &[Vec<u8>]) -> Result<Vec<Vec<u8>>, CodeError> {
    let field = alphabet
        .field_structure()
        .ok_or(CodeError::UnsupportedField(alphabet.q))?;
    let n = generator.first().map_or(0, Vec::len);
    if n == 0 {
        return Err(CodeError::EmptyBlockLength);
    }
    for row in generator {
        if row.len() != n {
            return Err(CodeError::LengthMismatch(n, row.len()));
        }
    }
    let q = alphabet.q;
    let k = generator.len();
    let total = q.checked_pow(k as u32).ok_or(CodeError::BudgetExceeded {
        needed: u128::MAX,
        budget: usize::MAX as u128,
    })?;
    let mut words = BTreeSet::new();
    let mut coeffs = vec![0u8; k];
    for _ in 0..total {
        let mut w = vec![0u8; n];
        for (c, row) in coeffs.iter().zip(generator) {
            if *c == 0 {
                continue;
            }
            for (slot, &g) in w.iter_mut().zip(row) {
                *slot = field.add(*slot, field.mul(*c, g));
            }
        }
        words.insert(w);
        for c in coeffs.iter_mut() {
            *c += 1;
            if (*c as usize) < q {
                break;
            }
            *c = 0;
        }
    }
    Ok(words.into_iter().collect())
}

/// Number of positions where two equal-length words differ.
pub fn hamming_distance<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize, CodeError> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// `[n, k, d]_q` together with the code point `(R, δ) = (k/n, d/n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub rate: BigRational,
    pub delta: BigRational,
}

impl CodeParams {
    /// `R + δ ≤ 1 + 1/n`, checked exactly.
    pub fn satisfies_singleton(&self) -> bool {
        let n = BigInt::from(self.n);
        &self.rate + &self.delta <= BigRational::new(n.clone() + 1, n)
    }

    /// `R + δ − 1 − 1/n`: zero for maximum-distance-separable codes.
    pub fn singleton_slack(&self) -> BigRational {
        let n = BigInt::from(self.n);
        BigRational::new(n.clone() + 1, n) - &self.rate - &self.delta
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]_{}", self.n, self.k, self.d, self.q)
    }
}

/// `k = floor(log_q card)` without floating point.
pub fn floor_log(q: usize, card: usize) -> usize {
    let mut k = 0;
    let mut power = 1usize;
    while let Some(next) = power.checked_mul(q) {
        if next > card {
            break;
        }
        power = next;
        k += 1;
    }
    k
}

pub fn code_params(code: &Code) -> CodeParams {
    let n = code.n;
    let k = floor_log(code.q(), code.cardinality());
    let d = code.minimum_distance();
    let params = CodeParams {
        q: code.q(),
        n,
        k,
        d,
        rate: BigRational::new(BigInt::from(k), BigInt::from(n)),
        delta: BigRational::new(BigInt::from(d), BigInt::from(n)),
    };
    debug_assert!(params.satisfies_singleton(), "{params} breaks Singleton");
    params
}
