use crate::algebra::read;
use crate::output::{stamp, write_all};
use crate::{usage, Failure};
use clap::Args;
use renormkit::complexity::zipf::{rank_frequency_csv, synthetic_corpus, tokenize};
use renormkit::complexity::{zipf_analyze, ComplexityProxy, KolmogorovOrder};
use renormkit::halting::{
    classify_orbit, encode_pair, CyclePermutation, LiftedPermutation, Mode, OrbitDynamics, PartialFunction, Program,
    DEFAULT_FUEL, DEFAULT_WINDOW,
};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Debug, Args, Serialize)]
pub struct ProbeArgs {
    /// Program JSON: `{"function": {...}, "mode", "fuel"}` or `{"cycles": [[...]]}`.
    #[arg(long)]
    pub program: PathBuf,
    /// `x,y` for a lifted function, a single integer for cycles.
    #[arg(long)]
    pub point: String,
    /// Orbit steps allowed.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Size of the Kolmogorov-order window used to rank the point.
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum ProgramFile {
    Lift { function: Program, mode: Option<Mode>, fuel: Option<u64> },
    Cycles { cycles: Vec<Vec<u64>> },
}

pub fn probe(a: &ProbeArgs) -> Result<(), Failure> {
    let text = read(&a.program)?;
    let file: ProgramFile = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: not a program: {e}", a.program.display())))?;
    let coords: Vec<u64> = a
        .point
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("--point: {e}")))?;
    let (dynamics, start): (Box<dyn OrbitDynamics>, u64) = match file {
        ProgramFile::Lift { function, mode, fuel } => {
            let f = PartialFunction::new(function, mode.unwrap_or(Mode::Transparent), fuel.unwrap_or(DEFAULT_FUEL))
                .map_err(usage)?;
            let [x, y] = coords[..] else { return Err(usage("--point: expected x,y")) };
            let p = encode_pair(x, y).ok_or_else(|| usage("--point: y must be positive"))?;
            (Box::new(LiftedPermutation::new(f)), p)
        }
        ProgramFile::Cycles { cycles } => {
            let [k] = coords[..] else { return Err(usage("--point: expected one integer")) };
            if k == 0 {
                return Err(usage("--point: must be positive"));
            }
            (Box::new(CyclePermutation::new(&cycles).map_err(usage)?), k)
        }
    };
    let order = KolmogorovOrder::integers(a.window, &ComplexityProxy::default());
    let report = classify_orbit(start, dynamics.as_ref(), a.budget, order.version());
    let mut doc = serde_json::to_value(&report).expect("serializes");
    doc["rank"] = order.rank_of_int(start).into();
    doc["version"] = stamp("probe").into();
    let text = serde_json::to_string_pretty(&doc).expect("serializes") + "\n";
    print!("{text}");
    match &a.out {
        Some(p) => write_all(&[(p, text)]),
        None => Ok(()),
    }
}

#[derive(Debug, Args, Serialize)]
pub struct ZipfArgs {
    /// Use the generated `1/k` corpus.
    #[arg(long, conflicts_with = "corpus")]
    pub synthetic: bool,
    /// Whitespace-tokenized text file.
    #[arg(long, required_unless_present = "synthetic")]
    pub corpus: Option<PathBuf>,
    #[arg(long)]
    pub lowercase: bool,
    #[arg(long, default_value_t = 1000)]
    pub types: usize,
    #[arg(long, default_value_t = 100_000)]
    pub tokens: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Rank-frequency CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn zipf(a: &ZipfArgs) -> Result<(), Failure> {
    let (tokens, source) = match &a.corpus {
        Some(p) => (tokenize(&read(p)?, a.lowercase), format!("corpus {}", p.display())),
        None => {
            if a.types == 0 {
                return Err(usage("--types must be positive"));
            }
            let source = format!("synthetic types={} tokens={} seed={}", a.types, a.tokens, a.seed);
            (synthetic_corpus(a.types, a.tokens, a.seed), source)
        }
    };
    let analysis = zipf_analyze(&tokens);
    let fit = analysis.fit.as_ref();
    let summary = serde_json::json!({
        "version": stamp("zipf"),
        "source": source,
        "tokens": analysis.total_tokens,
        "types": analysis.table.len(),
        "exponent": fit.map(|f| f.exponent),
        "intercept": fit.map(|f| f.intercept),
        "r_squared": fit.map(|f| f.r_squared),
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("serializes"));
    match &a.out {
        Some(p) => {
            let csv = format!("# {} {source}\n{}", stamp("zipf"), rank_frequency_csv(&analysis));
            write_all(&[(p, csv)])
        }
        None => Ok(()),
    }
}
