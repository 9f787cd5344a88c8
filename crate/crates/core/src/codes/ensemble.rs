//! Finite code ensembles standing in for "all codes", ordered by proxy
//! complexity.

use super::{code_params, Alphabet, Code, CodeError, CodeParams};
use crate::complexity::{ComplexityProxy, Object};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone)]
pub struct EnsembleEntry {
    pub code: Code,
    pub params: CodeParams,
    /// `log2 K̂(code)`.
    pub complexity_bits: u64,
}

impl EnsembleEntry {
    pub fn proxy_complexity(&self) -> BigUint {
        BigUint::one() << self.complexity_bits as usize
    }
}

/// Enough to regenerate an ensemble byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    LinearEnumeration { q: usize, n: usize, min_dim: usize, max_dim: usize, budget: u128 },
    Sampled { q: usize, n: usize, size: usize, count: usize, seed: u64 },
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::LinearEnumeration { q, n, min_dim, max_dim, .. } => {
                write!(f, "linear q={q} n={n} dims={min_dim}..={max_dim}")
            }
            Provenance::Sampled { q, n, size, count, seed } => {
                write!(f, "sampled q={q} n={n} size={size} count={count} seed={seed}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CodeEnsemble {
    q: usize,
    entries: Vec<EnsembleEntry>,
    provenance: Provenance,
    proxy_version: &'static str,
}

impl CodeEnsemble {
    fn build(
        q: usize,
        codes: Vec<Code>,
        provenance: Provenance,
        proxy: &ComplexityProxy,
    ) -> Result<Self, CodeError> {
        let mut entries: Vec<(EnsembleEntry, String)> = codes
            .into_par_iter()
            .map(|code| {
                let params = code_params(&code);
                let object = Object::Code(code);
                let complexity_bits = proxy.complexity_bits(&object);
                let Object::Code(code) = object else { unreachable!() };
                let key = code.canonical_string();
                (EnsembleEntry { code, params, complexity_bits }, key)
            })
            .collect();
        if let Some((e, _)) = entries.iter().find(|(e, _)| !e.params.satisfies_singleton()) {
            return Err(CodeError::SingletonViolated(e.params.to_string()));
        }
        entries.sort_by(|(a, ka), (b, kb)| (a.complexity_bits, ka).cmp(&(b.complexity_bits, kb)));
        Ok(CodeEnsemble {
            q,
            entries: entries.into_iter().map(|(e, _)| e).collect(),
            provenance,
            proxy_version: proxy.version(),
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entries(&self) -> &[EnsembleEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn proxy_version(&self) -> &'static str {
        self.proxy_version
    }

    pub fn regenerate(provenance: &Provenance, proxy: &ComplexityProxy) -> Result<Self, CodeError> {
        match *provenance {
            Provenance::LinearEnumeration { q, n, min_dim, max_dim, budget } => {
                enumerate_linear_codes_with_dims(q, n, min_dim..=max_dim, budget, proxy)
            }
            Provenance::Sampled { q, n, size, count, seed } => sample_codes(q, n, size, count, seed, proxy),
        }
    }

    /// One-line stamp identifying tool version, proxy version and provenance.
    pub fn stamp(&self) -> String {
        format!("# renormkit {} {} {}", crate::VERSION, self.proxy_version, self.provenance)
    }

    /// Code-point cloud: `q,n,size,k,d,R,delta,K_bits` after a stamp line.
    pub fn cloud_csv(&self) -> String {
        use super::partition::fmt_f64;
        use crate::rational::to_f64;
        let mut out = self.stamp();
        out.push('\n');
        out.push_str("q,n,size,k,d,R,delta,K_bits\n");
        for e in &self.entries {
            let p = &e.params;
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                p.q,
                p.n,
                e.code.cardinality(),
                p.k,
                p.d,
                fmt_f64(to_f64(&p.rate)),
                fmt_f64(to_f64(&p.delta)),
                e.complexity_bits
            ));
        }
        out
    }
}

/// Gaussian binomial `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every linear code of length `n` over `F_q`, one per subspace of
/// dimension `1..=n`, built from reduced row echelon generators.
pub fn enumerate_linear_codes(
    q: usize,
    n: usize,
    budget: u128,
    proxy: &ComplexityProxy,
) -> Result<CodeEnsemble, CodeError> {
    enumerate_linear_codes_with_dims(q, n, 1..=n, budget, proxy)
}

pub fn enumerate_linear_codes_with_dims(
    q: usize,
    n: usize,
    dims: std::ops::RangeInclusive<usize>,
    budget: u128,
    proxy: &ComplexityProxy,
) -> Result<CodeEnsemble, CodeError> {
    if n == 0 {
        return Err(CodeError::EmptyBlockLength);
    }
    let alphabet = Alphabet::field(q)?;
    let (min_dim, max_dim) = (*dims.start().max(&1), *dims.end().min(&n));
    let needed: u128 = (min_dim..=max_dim).map(|k| gaussian_binomial(n, k, q)).sum();
    if needed > budget {
        return Err(CodeError::BudgetExceeded { needed, budget });
    }
    let mut codes = Vec::with_capacity(needed as usize);
    for k in min_dim..=max_dim {
        for pivots in combinations(n, k) {
            for generator in rref_matrices(q, n, &pivots) {
                codes.push(Code::linear(alphabet.clone(), generator)?);
            }
        }
    }
    let provenance = Provenance::LinearEnumeration { q, n, min_dim, max_dim, budget };
    CodeEnsemble::build(q, codes, provenance, proxy)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All RREF matrices with the given pivot columns.
fn rref_matrices(q: usize, n: usize, pivots: &[usize]) -> Vec<Vec<Vec<u8>>> {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(row, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
        .collect();
    let total = q.pow(free.len() as u32);
    let mut out = Vec::with_capacity(total);
    let mut values = vec![0u8; free.len()];
    for _ in 0..total {
        let mut m = vec![vec![0u8; n]; pivots.len()];
        for (row, &p) in pivots.iter().enumerate() {
            m[row][p] = 1;
        }
        for (&(row, col), &v) in free.iter().zip(&values) {
            m[row][col] = v;
        }
        out.push(m);
        for v in values.iter_mut() {
            *v += 1;
            if (*v as usize) < q {
                break;
            }
            *v = 0;
        }
    }
    out
}

/// `count` codes, each a uniform random `size`-subset of `A^n`, drawn from
/// ChaCha8 seeded with `seed`.
pub fn sample_codes(
    q: usize,
    n: usize,
    size: usize,
    count: usize,
    seed: u64,
    proxy: &ComplexityProxy,
) -> Result<CodeEnsemble, CodeError> {
    let alphabet = Alphabet::new(q)?;
    if n == 0 {
        return Err(CodeError::EmptyBlockLength);
    }
    let space = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size as u128 > space || space > u32::MAX as u128 {
        return Err(CodeError::SampleTooLarge { size, space });
    }
    if size < 2 {
        return Err(CodeError::TooFewWords(size));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut codes = Vec::with_capacity(count);
    for _ in 0..count {
        let picks = rand::seq::index::sample(&mut rng, space as usize, size);
        let words = picks
            .into_iter()
            .map(|mut index| {
                let mut w = vec![0u8; n];
                for slot in w.iter_mut().rev() {
                    *slot = (index % q) as u8;
                    index /= q;
                }
                w
            })
            .collect();
        codes.push(Code::new(alphabet.clone(), n, words)?);
    }
    let provenance = Provenance::Sampled { q, n, size, count, seed };
    CodeEnsemble::build(q, codes, provenance, proxy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proxy() -> ComplexityProxy {
        ComplexityProxy::default()
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(3, 4, 2), 0);
    }

    #[test]
    fn binary_length_two() {
        let e = enumerate_linear_codes(2, 2, 100, &proxy()).unwrap();
        assert_eq!(e.len(), 4);
        let ones = e.entries().iter().filter(|x| x.params.k == 1).count();
        assert_eq!(ones, 3);
    }

    #[test]
    fn binary_lines_in_three_space() {
        let e = enumerate_linear_codes_with_dims(2, 3, 1..=1, 100, &proxy()).unwrap();
        assert_eq!(e.len(), 7);
    }

    #[test]
    fn ternary_length_one() {
        let e = enumerate_linear_codes(3, 1, 100, &proxy()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.entries()[0].code.cardinality(), 3);
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        // 1 + 3 + 7 + 15 + ... subspace totals computed by an independent formula.
        for n in 1..=4 {
            let oracle: u128 = (1..=n).map(|k| gaussian_binomial(n, k, 2)).sum();
            let e = enumerate_linear_codes(2, n, 1000, &proxy()).unwrap();
            assert_eq!(e.len() as u128, oracle, "n={n}");
            let mut words: Vec<_> = e.entries().iter().map(|x| x.code.canonical_string()).collect();
            words.sort();
            words.dedup();
            assert_eq!(words.len() as u128, oracle, "distinct subspaces");
        }
        assert_eq!((1..=4).map(|k| gaussian_binomial(4, k, 2)).sum::<u128>(), 66);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_linear_codes(2, 4, 10, &proxy()).unwrap_err();
        assert_eq!(err, CodeError::BudgetExceeded { needed: 66, budget: 10 });
    }

    #[test]
    fn sampling_contract() {
        let e = sample_codes(2, 6, 8, 0, 1, &proxy()).unwrap();
        assert!(e.is_empty());
        let a = sample_codes(2, 6, 8, 20, 7, &proxy()).unwrap();
        let b = sample_codes(2, 6, 8, 20, 7, &proxy()).unwrap();
        assert_eq!(a.cloud_csv(), b.cloud_csv());
        let c = sample_codes(2, 6, 8, 20, 8, &proxy()).unwrap();
        assert_ne!(a.cloud_csv(), c.cloud_csv());
        assert!(matches!(
            sample_codes(2, 3, 9, 1, 0, &proxy()),
            Err(CodeError::SampleTooLarge { size: 9, space: 8 })
        ));
    }

    #[test]
    fn ensembles_are_sorted_and_regenerable() {
        let e = sample_codes(3, 4, 5, 30, 11, &proxy()).unwrap();
        let keys: Vec<_> = e
            .entries()
            .iter()
            .map(|x| (x.complexity_bits, x.code.canonical_string()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(e.entries().iter().all(|x| x.proxy_complexity() >= BigUint::from(2u32)));
        let again = CodeEnsemble::regenerate(e.provenance(), &proxy()).unwrap();
        assert_eq!(again.cloud_csv(), e.cloud_csv());
    }

    #[test]
    fn cloud_csv_schema() {
        let e = enumerate_linear_codes(2, 2, 10, &proxy()).unwrap();
        let csv = e.cloud_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# renormkit "));
        assert_eq!(lines[1], "q,n,size,k,d,R,delta,K_bits");
        assert_eq!(lines.len(), 2 + 4);
        assert_eq!(lines[2].split(',').count(), 8);
    }
}
