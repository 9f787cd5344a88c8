use num_rational::BigRational;
use renormkit::complexity::{ComplexityProxy, KolmogorovOrder};
use renormkit::halting::*;
use renormkit::rational::{ratio, to_f64};
use std::sync::OnceLock;

fn order() -> &'static KolmogorovOrder {
    static ORDER: OnceLock<KolmogorovOrder> = OnceLock::new();
    ORDER.get_or_init(|| KolmogorovOrder::integers(DEFAULT_WINDOW, &ComplexityProxy::default()))
}

fn transparent(p: Program) -> LiftedPermutation {
    LiftedPermutation::new(PartialFunction::transparent(p).unwrap())
}

/// Hides the domain predicate of a dynamics.
struct Opaque<'a>(&'a dyn OrbitDynamics);

impl OrbitDynamics for Opaque<'_> {
    fn step(&self, p: u64) -> Step {
        self.0.step(p)
    }
    fn is_transparent(&self) -> bool {
        false
    }
}

fn programs() -> Vec<Program> {
    vec![
        Program::Empty,
        Program::Identity,
        Program::Constant { value: 4 },
        Program::Residue { modulus: 2, residue: 0 },
        Program::Residue { modulus: 3, residue: 1 },
        Program::Shift { offset: 2, from: 5 },
        Program::Table { table: [(1, 2), (2, 7), (9, 1)].into_iter().collect() },
    ]
}

#[test]
fn fixed_points_are_exactly_the_undefined_pairs() {
    for p in programs() {
        let lift = transparent(p.clone());
        for n in 1..=1000 {
            let (x, y) = decode_pair(n).unwrap();
            let fixed = lift.step(n) == Step::Next(n);
            assert_eq!(fixed, !lift.function().in_domain(y).unwrap(), "{p:?} at ({x}, {y})");
            assert_eq!(lift.is_fixed(x, y), Some(fixed));
        }
    }
}

fn orbit_length(d: &dyn OrbitDynamics, start: u64, cap: u64) -> Option<u64> {
    let mut x = start;
    for n in 1..=cap {
        x = match d.step(x) {
            Step::Next(y) => y,
            _ => return None,
        };
        if x == start {
            return Some(n);
        }
    }
    None
}

#[test]
fn conjugation_preserves_orbits() {
    let sigma = CyclePermutation::new(&[vec![2, 9, 40], vec![5, 6], vec![100, 300, 17, 1000, 4]]).unwrap();
    let id = IdentityOrder(DEFAULT_WINDOW);
    let same = conjugate(&sigma, &id);
    for p in 1..=500 {
        assert_eq!(same.step(p), sigma.step(p));
    }
    let k = order();
    let sk = conjugate(&sigma, k);
    for p in [1, 2, 5, 7, 17, 100, 999] {
        let r = k.rank_of_int(p).unwrap();
        assert_eq!(orbit_length(&sk, r, 10), orbit_length(&sigma, p, 10), "{p}");
    }
    let fixed = k.rank_of_int(7).unwrap();
    assert_eq!(sk.step(fixed), Step::Next(fixed));
}

#[test]
fn fixed_point_series_is_geometric() {
    let sigma = CyclePermutation::new(&[vec![2, 3]]).unwrap();
    let k = order();
    let sk = conjugate(&sigma, k);
    let base = k.rank_of_int(5).unwrap();
    let phi = phi_partial(base, &sk, k, 300).unwrap();
    assert!(phi.coefficients().values().all(|c| *c == ratio(1, (base * base) as i64)));
    assert!(phi.dense_prefix().len() > 20);
    let r = phi.reconstruct().unwrap();
    assert_eq!(r.numerator, vec![ratio(1, (base * base) as i64)]);
    assert_eq!(r.denominator, vec![ratio(1, 1), ratio(-1, 1)]);
    let trivial = phi_partial(base, &sk, k, 0).unwrap();
    assert_eq!(trivial.coefficients().len(), 1);
}

#[test]
fn finite_orbit_sums_grow_linearly() {
    let sigma = CyclePermutation::new(&[vec![3, 8, 11, 20]]).unwrap();
    let k = order();
    let sk = conjugate(&sigma, k);
    let base = k.rank_of_int(3).unwrap();
    let biggest = [3u64, 8, 11, 20].iter().map(|&p| k.rank_of_int(p).unwrap()).max().unwrap();
    for n in [10, 50, 200] {
        let phi = phi_partial(base, &sk, k, n).unwrap();
        assert!(phi.value_at_one() >= ratio(n as i64, (biggest * biggest) as i64));
        assert!(phi.coefficients().values().all(|c| *c > BigRational::from_integer(0.into())));
    }
}

#[test]
fn infinite_orbit_sums_stay_bounded() {
    let lift = transparent(Program::Identity);
    let k = order();
    let sk = conjugate(&lift, k);
    let base = k.rank_of_int(encode_pair(1, 1).unwrap()).unwrap();
    let phi = phi_partial(base, &sk, k, 30).unwrap();
    let exponents: std::collections::BTreeSet<_> = phi.coefficients().keys().collect();
    assert_eq!(exponents.len(), 31);
    assert!(to_f64(&phi.value_at_one()) <= phi.bound_at_one());
    // The orbit leaves the window eventually.
    assert!(matches!(phi_partial(base, &sk, k, 200), Err(HaltingError::WindowExhausted { .. })));
}

/// Ten finite and ten infinite instances with known answers.
fn instances() -> Vec<(Box<dyn OrbitDynamics>, u64, Verdict, Option<u64>)> {
    let mut out: Vec<(Box<dyn OrbitDynamics>, u64, Verdict, Option<u64>)> = Vec::new();
    let p = programs();
    // Undefined points are fixed.
    for (prog, x, y) in [(0, 3, 1), (0, 0, 9), (3, 4, 3), (4, 2, 5), (5, 1, 2)] {
        out.push((Box::new(transparent(p[prog].clone())), encode_pair(x, y).unwrap(), Verdict::FiniteOrbit, Some(1)));
    }
    let cycles = CyclePermutation::new(&[vec![1, 2], vec![3, 4, 5], vec![10, 20, 30, 40], vec![7, 6, 9, 8, 50, 60, 70]]).unwrap();
    for (start, period) in [(1, 2), (4, 3), (30, 4), (70, 7)] {
        out.push((Box::new(cycles.clone()), start, Verdict::FiniteOrbit, Some(period)));
    }
    out.push((Box::new(cycles.clone()), 99, Verdict::FiniteOrbit, Some(1)));
    for (prog, x, y) in [(1, 1, 1), (1, 0, 5), (2, 7, 3), (3, 2, 4), (3, 0, 10), (4, 9, 1), (4, 1, 7), (5, 3, 5), (6, 1, 2), (6, 5, 9)] {
        out.push((Box::new(transparent(p[prog].clone())), encode_pair(x, y).unwrap(), Verdict::InfiniteOrbit, None));
    }
    out
}

#[test]
fn transparent_classification_is_exact() {
    let mut right = 0;
    for (d, start, expected, period) in instances() {
        let r = classify_orbit(start, d.as_ref(), 10_000, "test");
        assert_eq!(r.verdict, expected, "{:?}", r.point);
        if let Some(p) = period {
            assert_eq!(r.certificate, Some(Certificate::Period { period: p }));
        }
        right += usize::from(r.verdict == expected);
    }
    assert_eq!(right, 20);
}

#[test]
fn opaque_mode_never_certifies_infinity() {
    for (d, start, expected, _) in instances() {
        let r = classify_orbit(start, &Opaque(d.as_ref()), 10_000, "test");
        match r.verdict {
            Verdict::FiniteOrbit => {
                assert_eq!(expected, Verdict::FiniteOrbit);
                assert!(matches!(r.certificate, Some(Certificate::Period { .. })));
            }
            Verdict::Inconclusive => assert!(r.certificate.is_none()),
            Verdict::InfiniteOrbit => panic!("opaque infinite verdict at {:?}", r.point),
        }
    }
    for p in programs() {
        let lift = LiftedPermutation::new(PartialFunction::opaque(p, 50).unwrap());
        for n in 1..=200 {
            let r = classify_orbit(n, &lift, 500, "test");
            assert_ne!(r.verdict, Verdict::InfiniteOrbit);
            if r.verdict == Verdict::FiniteOrbit {
                let (_, y) = decode_pair(n).unwrap();
                assert_eq!(lift.function().eval(y), Eval::OutOfFuel);
            }
        }
    }
}

#[test]
fn probe_contract() {
    let lift = transparent(Program::Empty);
    let r = classify_orbit(encode_pair(2, 3).unwrap(), &lift, 0, "v");
    assert_eq!((r.verdict, r.budget_used), (Verdict::Inconclusive, 0));
    let r = classify_orbit(encode_pair(2, 3).unwrap(), &lift, 10, "v");
    assert_eq!(r.point, vec![2, 3]);
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["verdict"], "finite_orbit");
    assert_eq!(json["certificate"], serde_json::json!({"kind": "period", "period": 1}));
    assert_eq!(json["proxy_version"], "v");
}
