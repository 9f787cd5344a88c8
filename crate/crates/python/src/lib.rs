//! Python module `renormkit_py`.
//!
//! Exact values cross the boundary as rational strings (`"p/q"`) or
//! Python ints; structured results as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use renormkit::codes::{self, BoundKind};
use renormkit::complexity::{zipf_analyze, ComplexityProxy, Object};
use renormkit::feynman::{gaussian_oracle, graph_expansion, ExpansionOptions, Theory};
use renormkit::graphs;
use renormkit::halting::{
    classify_orbit, encode_pair, LiftedPermutation, Mode, PartialFunction, Program, DEFAULT_FUEL,
};
use renormkit::hopf::{verify_axioms, HopfContext};
use renormkit::rational::{format_rational, parse_rational};
use renormkit::renorm;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<num_rational::BigRational> {
    parse_rational(s).map_err(value_err)
}

/// `(n, k, d, rate, delta)` of a Reed–Solomon code, rates as strings.
#[pyfunction]
fn reed_solomon_params(q: usize, n: usize, k: usize) -> PyResult<(usize, usize, usize, String, String)> {
    let code = codes::reed_solomon(q, n, k, &codes::reed_solomon::default_points(n)).map_err(value_err)?;
    let p = codes::code_params(&code);
    Ok((p.n, p.k, p.d, format_rational(&p.rate), format_rational(&p.delta)))
}

#[pyfunction]
fn bound_curve(kind: &str, q: usize, delta: f64) -> PyResult<f64> {
    let kind = match kind {
        "hamming" => BoundKind::Hamming,
        "gilbert_varshamov" => BoundKind::GilbertVarshamov,
        "singleton" => BoundKind::Singleton,
        other => return Err(value_err(format!("unknown bound {other:?}"))),
    };
    codes::bound_curve(kind, q, delta).map_err(value_err)
}

/// Cloud CSV of `count` random codes with `size` words each.
#[pyfunction]
#[pyo3(signature = (q, n, size, count, seed, budget = renormkit::complexity::DEFAULT_BUDGET))]
fn code_cloud(q: usize, n: usize, size: usize, count: usize, seed: u64, budget: u64) -> PyResult<String> {
    let proxy = ComplexityProxy::with_budget(budget).map_err(value_err)?;
    let ensemble = codes::sample_codes(q, n, size, count, seed, &proxy).map_err(value_err)?;
    Ok(ensemble.cloud_csv())
}

/// Shortest description of a non-negative integer and its bit length.
#[pyfunction]
fn describe_int(n: num_bigint::BigUint) -> (String, u64) {
    let d = ComplexityProxy::default().shortest_description(&Object::Int(n));
    (d.serialize(), d.bit_length())
}

/// `(exponent, intercept, r_squared)` of the rank-frequency fit.
#[pyfunction]
fn zipf_fit(tokens: Vec<String>) -> PyResult<(f64, f64, f64)> {
    let fit = zipf_analyze(&tokens).fit.ok_or_else(|| value_err("need at least two token types"))?;
    Ok((fit.exponent, fit.intercept, fit.r_squared))
}

/// A flag/involution graph.
#[pyclass(module = "renormkit_py", frozen)]
struct Graph(graphs::Graph);

#[pymethods]
impl Graph {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        graphs::Graph::from_json(text).map(Graph).map_err(value_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn canonical_label(&self) -> PyResult<String> {
        Ok(self.0.canonical_label().map_err(value_err)?.to_string())
    }

    fn automorphism_order(&self) -> PyResult<num_bigint::BigUint> {
        self.0.automorphism_order().map_err(value_err)
    }

    fn is_isomorphic(&self, other: &Graph) -> PyResult<bool> {
        self.0.is_isomorphic(&other.0).map_err(value_err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn flag_count(&self) -> usize {
        self.0.flag_count()
    }

    fn __repr__(&self) -> String {
        match self.0.canonical_label() {
            Ok(l) => format!("Graph({l})"),
            Err(_) => format!("Graph(V={}, F={})", self.0.vertex_count(), self.0.flag_count()),
        }
    }
}

/// Graph expansion and Wick oracle coefficients, lowest power first.
#[pyfunction]
#[pyo3(signature = (theory_json, order, vertex_cap = None))]
fn feynman_series(theory_json: &str, order: usize, vertex_cap: Option<usize>) -> PyResult<(i64, Vec<String>, Vec<String>)> {
    let theory = Theory::from_json(theory_json).map_err(value_err)?;
    let mut options = ExpansionOptions::default();
    options.vacuum.vertex_cap = vertex_cap;
    let expansion = graph_expansion(&theory, order, &options).map_err(value_err)?;
    let oracle = gaussian_oracle(&theory, order, vertex_cap).map_err(value_err)?;
    let text = |s: &renormkit::feynman::LambdaSeries| s.coefficients().iter().map(format_rational).collect();
    Ok((expansion.low(), text(&expansion), text(&oracle)))
}

/// One-color theory JSON with metric `g` and couplings `{k: C_k}`.
#[pyfunction]
fn one_color_theory(g: &str, couplings: Vec<(usize, String)>) -> PyResult<String> {
    let couplings = couplings.iter().map(|(k, c)| Ok((*k, rational(c)?))).collect::<PyResult<Vec<_>>>()?;
    Ok(Theory::one_color(rational(g)?, &couplings).map_err(value_err)?.to_json())
}

/// Axiom report as JSON.
#[pyfunction]
fn hopf_verify(max_vertices: usize, max_flags: usize) -> PyResult<String> {
    let report = verify_axioms(max_vertices, max_flags).map_err(value_err)?;
    serde_json::to_string(&report).map_err(value_err)
}

/// A character into the minimal-subtraction algebra.
#[pyclass(module = "renormkit_py", frozen)]
struct Character(renorm::Character);

#[pymethods]
impl Character {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        renorm::Character::from_json(text).map(Character).map_err(value_err)
    }

    /// Random values on every generator of degree at most `degree`.
    #[staticmethod]
    fn random(degree: usize, polar_degree: usize, regular_degree: usize, seed: u64) -> PyResult<Self> {
        renorm::Character::random(degree, polar_degree, regular_degree, seed).map(Character).map_err(value_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn generators(&self) -> Vec<String> {
        self.0.values().keys().map(|l| l.to_string()).collect()
    }

    /// `(φ_−, φ_+)`.
    fn birkhoff(&self) -> PyResult<(Character, Character)> {
        let b = renorm::birkhoff(&self.0, &mut HopfContext::new()).map_err(value_err)?;
        Ok((Character(b.minus), Character(b.plus)))
    }

    fn __len__(&self) -> usize {
        self.0.values().len()
    }
}

/// Probe report JSON for the point `(x, y)` of a lifted program.
#[pyfunction]
#[pyo3(signature = (program_json, x, y, budget = 10_000, opaque = false, fuel = DEFAULT_FUEL))]
fn probe(program_json: &str, x: u64, y: u64, budget: u64, opaque: bool, fuel: u64) -> PyResult<String> {
    let program: Program = serde_json::from_str(program_json).map_err(value_err)?;
    let mode = if opaque { Mode::Opaque } else { Mode::Transparent };
    let f = PartialFunction::new(program, mode, fuel).map_err(value_err)?;
    let start = encode_pair(x, y).ok_or_else(|| value_err("y must be positive"))?;
    let report = classify_orbit(start, &LiftedPermutation::new(f), budget, renormkit::complexity::PROXY_VERSION);
    Ok(report.to_json())
}

#[pymodule]
fn renormkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", renormkit::VERSION)?;
    m.add_class::<Graph>()?;
    m.add_class::<Character>()?;
    m.add_function(wrap_pyfunction!(reed_solomon_params, m)?)?;
    m.add_function(wrap_pyfunction!(bound_curve, m)?)?;
    m.add_function(wrap_pyfunction!(code_cloud, m)?)?;
    m.add_function(wrap_pyfunction!(describe_int, m)?)?;
    m.add_function(wrap_pyfunction!(zipf_fit, m)?)?;
    m.add_function(wrap_pyfunction!(feynman_series, m)?)?;
    m.add_function(wrap_pyfunction!(one_color_theory, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_verify, m)?)?;
    m.add_function(wrap_pyfunction!(probe, m)?)?;
    Ok(())
}
