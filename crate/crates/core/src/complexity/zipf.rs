//! Rank-frequency tables and power-law fits.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
pub struct RankFrequency {
    pub rank: usize,
    pub token: String,
    pub count: u64,
    pub frequency: f64,
}

/// Least-squares line through `(ln k, ln p_k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZipfFit {
    pub exponent: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZipfAnalysis {
    pub table: Vec<RankFrequency>,
    pub total_tokens: u64,
    /// `None` when fewer than two token types were seen.
    pub fit: Option<ZipfFit>,
}

/// Whitespace tokenization, optionally lowercased.
pub fn tokenize(text: &str, lowercase: bool) -> Vec<String> {
    text.split_whitespace()
        .map(|t| if lowercase { t.to_lowercase() } else { t.to_string() })
        .collect()
}

pub fn zipf_analyze<I, S>(tokens: I) -> ZipfAnalysis
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut counts: HashMap<String, u64> = HashMap::new();
    let mut total = 0u64;
    for t in tokens {
        *counts.entry(t.as_ref().to_string()).or_default() += 1;
        total += 1;
    }
    let mut ranked: Vec<(String, u64)> = counts.into_iter().collect();
    ranked.sort_by(|(ta, ca), (tb, cb)| cb.cmp(ca).then_with(|| ta.cmp(tb)));
    let table: Vec<RankFrequency> = ranked
        .into_iter()
        .enumerate()
        .map(|(i, (token, count))| RankFrequency {
            rank: i + 1,
            token,
            count,
            frequency: count as f64 / total as f64,
        })
        .collect();
    let fit = (table.len() >= 2).then(|| {
        let points: Vec<(f64, f64)> =
            table.iter().map(|r| ((r.rank as f64).ln(), r.frequency.ln())).collect();
        least_squares(&points)
    });
    ZipfAnalysis { table, total_tokens: total, fit }
}

fn least_squares(points: &[(f64, f64)]) -> ZipfFit {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = points.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    ZipfFit { exponent: slope, intercept, r_squared }
}

/// `tokens` draws from `p_k ∝ 1/k` over `types` token types named `t1, t2, …`.
pub fn synthetic_corpus(types: usize, tokens: usize, seed: u64) -> Vec<String> {
    let weights: Vec<f64> = (1..=types).map(|k| 1.0 / k as f64).collect();
    let dist = WeightedIndex::new(&weights).expect("positive weights");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..tokens).map(|_| format!("t{}", dist.sample(&mut rng) + 1)).collect()
}

/// `rank,token,count,frequency` with frequencies to 17 significant digits.
pub fn rank_frequency_csv(analysis: &ZipfAnalysis) -> String {
    let mut out = String::from("rank,token,count,frequency\n");
    for r in &analysis.table {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.rank,
            csv_field(&r.token),
            r.count,
            crate::codes::partition::fmt_f64(r.frequency)
        ));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
