use crate::output::{stamp, write_all};
use crate::{usage, Failure};
use clap::Args;
use renormkit::feynman::{gaussian_oracle, graph_expansion, ExpansionOptions, Theory};
use renormkit::graphs::VacuumOptions;
use renormkit::hopf::{verify_axioms, Check, HopfContext};
use renormkit::rational::parse_rational;
use renormkit::renorm::{birkhoff as decompose, Character};
use serde::Serialize;
use std::path::{Path, PathBuf};

pub fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

#[derive(Debug, Args, Serialize)]
pub struct FeynmanArgs {
    /// Cubic coupling of a one-color theory.
    #[arg(long, allow_hyphen_values = true)]
    pub c3: Option<String>,
    /// Quartic coupling of a one-color theory.
    #[arg(long, allow_hyphen_values = true)]
    pub c4: Option<String>,
    /// Metric of a one-color theory.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub metric: String,
    /// Theory JSON, instead of the coupling flags.
    #[arg(long, conflicts_with_all = ["c3", "c4"])]
    pub theory: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    /// Interaction vertices kept; defaults to twice the order.
    #[arg(long)]
    pub vertex_cap: Option<usize>,
    /// JSON with both series.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn theory(a: &FeynmanArgs) -> Result<Theory, Failure> {
    if let Some(p) = &a.theory {
        return Theory::from_json(&read(p)?).map_err(usage);
    }
    let parse = |flag: &str, s: &str| parse_rational(s).map_err(|e| usage(format!("--{flag}: {e}")));
    let mut couplings = Vec::new();
    for (k, flag, v) in [(3, "c3", &a.c3), (4, "c4", &a.c4)] {
        if let Some(s) = v {
            couplings.push((k, parse(flag, s)?));
        }
    }
    if couplings.is_empty() {
        return Err(usage("give --c3/--c4 or --theory"));
    }
    Theory::one_color(parse("metric", &a.metric)?, &couplings).map_err(usage)
}

pub fn feynman_check(a: &FeynmanArgs) -> Result<(), Failure> {
    let theory = theory(a)?;
    let vacuum = VacuumOptions { vertex_cap: a.vertex_cap, ..VacuumOptions::default() };
    let expansion = graph_expansion(&theory, a.order, &ExpansionOptions { vacuum }).map_err(usage)?;
    let oracle = gaussian_oracle(&theory, a.order, a.vertex_cap).map_err(usage)?;
    println!("graph expansion: {expansion}");
    println!("gaussian oracle: {oracle}");
    if let Some(p) = &a.out {
        let doc = serde_json::json!({
            "version": stamp("feynman-check"),
            "expansion": serde_json::from_str::<serde_json::Value>(&expansion.to_json()).expect("valid JSON"),
            "oracle": serde_json::from_str::<serde_json::Value>(&oracle.to_json()).expect("valid JSON"),
        });
        write_all(&[(p, serde_json::to_string_pretty(&doc).expect("serializes") + "\n")])?;
    }
    match expansion.first_difference(&oracle) {
        None => {
            println!("match through λ^{}", a.order);
            Ok(())
        }
        Some(p) => Err(Failure::Check(format!(
            "mismatch at λ^{p}: expansion {}, oracle {}",
            expansion.coefficient(p),
            oracle.coefficient(p)
        ))),
    }
}

#[derive(Debug, Args, Serialize)]
pub struct HopfArgs {
    #[arg(long, default_value_t = 3)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 6)]
    pub max_flags: usize,
    /// JSON report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn hopf_verify(a: &HopfArgs) -> Result<(), Failure> {
    let report = verify_axioms(a.max_vertices, a.max_flags).map_err(usage)?;
    println!(
        "family: {} basis graphs, {} generators (≤ {} vertices, ≤ {} flags)",
        report.monomials, report.generators, a.max_vertices, a.max_flags
    );
    let checks: [(&str, &Check); 5] = [
        ("coassociativity", &report.coassociativity),
        ("compatibility", &report.compatibility),
        ("counit", &report.counit),
        ("antipode", &report.antipode),
        ("grading", &report.grading),
    ];
    for (name, c) in checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        println!("{name}: {status} ({} checked)", c.checked);
        for f in &c.failures {
            println!("  {f}");
        }
    }
    if let Some(p) = &a.out {
        let mut doc = serde_json::to_value(&report).expect("serializes");
        doc["version"] = stamp("hopf-verify").into();
        write_all(&[(p, serde_json::to_string_pretty(&doc).expect("serializes") + "\n")])?;
    }
    if report.all_passed() {
        println!("all axioms pass");
        Ok(())
    } else {
        Err(Failure::Check("axiom check failed".into()))
    }
}

#[derive(Debug, Args, Serialize)]
pub struct BirkhoffArgs {
    /// Character JSON: degree bound and values on generators.
    #[arg(long)]
    pub character: PathBuf,
    /// JSON with `minus` and `plus`; standard output otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn birkhoff(a: &BirkhoffArgs) -> Result<(), Failure> {
    let phi = Character::from_json(&read(&a.character)?).map_err(usage)?;
    let b = decompose(&phi, &mut HopfContext::new()).map_err(usage)?;
    let value = |c: &Character| serde_json::from_str::<serde_json::Value>(&c.to_json()).expect("valid JSON");
    let doc = serde_json::json!({
        "version": stamp("birkhoff"),
        "minus": value(&b.minus),
        "plus": value(&b.plus),
    });
    let text = serde_json::to_string_pretty(&doc).expect("serializes") + "\n";
    match &a.out {
        Some(p) => {
            for (label, v) in b.minus.values() {
                println!("φ_−({label}) = {v}");
                println!("φ_+({label}) = {}", b.plus.value(label).expect("same generators"));
            }
            write_all(&[(p, text)])
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
