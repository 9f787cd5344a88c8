//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! (run with `--nocapture` to see them) and then asserts.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use renormkit::codes::partition::{beta_grid, default_eta, sweep_csv};
use renormkit::codes::reed_solomon::default_points;
use renormkit::codes::{
    bound_curve, code_params, enumerate_linear_codes, partition_sum, partition_sweep, reed_solomon, sample_codes,
    BoundKind, CodeEnsemble, PartitionQuery,
};
use renormkit::complexity::zipf::synthetic_corpus;
use renormkit::complexity::{zipf_analyze, ComplexityProxy, KolmogorovOrder, Object};
use renormkit::feynman::{gaussian_oracle, graph_expansion, ExpansionOptions, Theory};
use renormkit::halting::*;
use renormkit::hopf::{verify_axioms, HopfContext, Monomial};
use renormkit::rational::ratio;
use renormkit::renorm::{basis, birkhoff, birkhoff_on_basis, closure, conv_inverse, convolution, Character};
use std::time::Instant;

fn report(n: u32, name: &str, pass: bool, detail: String) {
    println!("criterion {n} [{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
}

fn random_ratio(rng: &mut ChaCha8Rng) -> BigRational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn nonzero_ratio(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let r = random_ratio(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

#[test]
fn criterion_1_feynman_expansion_matches_wick_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = ExpansionOptions::default();
    let mut matched = 0;
    for _ in 0..10 {
        let (c3, c4) = (random_ratio(&mut rng), random_ratio(&mut rng));
        let t = Theory::one_color(nonzero_ratio(&mut rng), &[(3, c3), (4, c4)]).unwrap();
        matched += usize::from(graph_expansion(&t, 3, &opts).unwrap() == gaussian_oracle(&t, 3, None).unwrap());
    }
    // Two colors: a random symmetric metric with nonzero determinant and
    // every cubic and quartic coupling switched on.
    let metric = loop {
        let (a, b, c) = (random_ratio(&mut rng), random_ratio(&mut rng), random_ratio(&mut rng));
        if !(&a * &c - &b * &b).is_zero() {
            break vec![vec![a, b.clone()], vec![b, c]];
        }
    };
    let mut entries = Vec::new();
    for valence in [3usize, 4] {
        for ones in 0..=valence {
            let mut colors = vec![0; valence - ones];
            colors.extend(std::iter::repeat(1).take(ones));
            entries.push((colors, nonzero_ratio(&mut rng)));
        }
    }
    let t = Theory::new(metric, entries).unwrap();
    let two = graph_expansion(&t, 2, &opts).unwrap() == gaussian_oracle(&t, 2, None).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let pass = matched == 10 && two && secs < 300.0;
    report(1, "feynman", pass, format!("{matched}/10 one-color through λ^3, two-color through λ^2 {two}, {secs:.1}s"));
    assert!(pass);
}

#[test]
fn criterion_2_hopf_axioms() {
    let start = Instant::now();
    let r = verify_axioms(3, 6).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let pass = r.all_passed() && secs < 60.0;
    report(2, "hopf", pass, format!("{} monomials, {} generators, {secs:.1}s", r.monomials, r.generators));
    assert!(pass, "{r:#?}");
}

#[test]
fn criterion_3_birkhoff_decomposition() {
    const DEGREE: usize = 4;
    let mut ctx = HopfContext::new();
    let dom = closure(&basis(DEGREE, DEGREE / 2 + 1).unwrap(), &mut ctx).unwrap();
    let primitives: Vec<Monomial> = dom
        .iter()
        .filter(|m| m.labels().len() == 1)
        .filter(|m| ctx.reduced_coproduct(m).unwrap().is_empty())
        .cloned()
        .collect();
    let products: Vec<(Monomial, Monomial, Monomial)> = primitives
        .iter()
        .flat_map(|a| primitives.iter().map(move |b| (a.clone(), b.clone(), a.times(b))))
        .filter(|(_, _, p)| dom.contains(p))
        .collect();
    let (mut reconstructed, mut contained, mut multiplicative) = (0, 0, 0);
    for seed in 0..20 {
        let phi = Character::random(DEGREE, 3, 4, seed).unwrap();
        let b = birkhoff(&phi, &mut ctx).unwrap();
        let inv = conv_inverse(&b.minus.to_map(&dom).unwrap(), &dom, &mut ctx).unwrap();
        let back = convolution(&inv, &b.plus.to_map(&dom).unwrap(), &dom, &mut ctx).unwrap();
        reconstructed += usize::from(back.agrees_with(&phi.to_map(&dom).unwrap()).unwrap());
        let ok = b.minus.values().values().all(|v| v.regular_part().is_zero())
            && b.plus.values().values().all(|v| v.polar_part().is_zero());
        contained += usize::from(ok);
        let (minus, plus) = birkhoff_on_basis(&phi, &dom, &mut ctx).unwrap();
        let ok = products.iter().all(|(x, y, xy)| {
            [&minus, &plus].iter().all(|map| {
                let lhs = map.get(xy).unwrap();
                let rhs = map.get(x).unwrap() * map.get(y).unwrap();
                lhs.agrees_with(&rhs).unwrap()
            })
        });
        multiplicative += usize::from(ok);
    }
    let pass = reconstructed == 20 && contained == 20 && multiplicative == 20 && !products.is_empty();
    report(
        3,
        "birkhoff",
        pass,
        format!(
            "reconstruction {reconstructed}/20, containment {contained}/20, multiplicativity {multiplicative}/20 \
             on {} products of {} primitives",
            products.len(),
            primitives.len()
        ),
    );
    assert!(pass);
}

/// Minimum weight over all nonzero polynomials of degree `< k` evaluated at
/// `points`, in plain modular arithmetic.
fn rs_min_weight_oracle(q: usize, k: usize, points: &[u8]) -> usize {
    let mut coeffs = vec![0usize; k];
    let mut best = usize::MAX;
    loop {
        let mut i = 0;
        while i < k {
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == k {
            return best;
        }
        let weight = points
            .iter()
            .filter(|&&a| coeffs.iter().rev().fold(0, |acc, &c| (acc * a as usize + c) % q) != 0)
            .count();
        best = best.min(weight);
    }
}

#[test]
fn criterion_4_reed_solomon_and_singleton() {
    let proxy = ComplexityProxy::default();
    let (mut cases, mut exact, mut mds) = (0, 0, 0);
    for q in [5usize, 7, 11, 13] {
        for n in 1..=q {
            for k in 1..=n.min(5) {
                let points = default_points(n);
                let code = reed_solomon(q, n, k, &points).unwrap();
                let oracle = rs_min_weight_oracle(q, k, &points);
                let params = code_params(&code);
                cases += 1;
                exact += usize::from(oracle == n + 1 - k && code.minimum_distance() == oracle && params.d == oracle);
                mds += usize::from(params.singleton_slack().is_zero());
            }
        }
    }
    let mut ensembles: Vec<CodeEnsemble> = vec![
        enumerate_linear_codes(2, 5, 1 << 20, &proxy).unwrap(),
        enumerate_linear_codes(3, 3, 1 << 20, &proxy).unwrap(),
    ];
    for (q, n, size) in [(2, 6, 5), (2, 8, 16), (3, 4, 9), (5, 3, 7)] {
        ensembles.push(sample_codes(q, n, size, 200, 7, &proxy).unwrap());
    }
    let checked: usize = ensembles.iter().map(CodeEnsemble::len).sum();
    let singleton = ensembles.iter().flat_map(|e| e.entries()).all(|e| {
        // Recomputed from the words, independent of the cached parameters.
        let w = e.code.words();
        let d = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .map(|(i, j)| w[i].iter().zip(&w[j]).filter(|(a, b)| a != b).count())
            .min()
            .unwrap();
        let n = e.code.len() as i64;
        let lhs = ratio(e.params.k as i64, n) + ratio(d as i64, n);
        d == e.params.d && lhs <= ratio(n + 1, n) && e.params.satisfies_singleton()
    });
    let pass = exact == cases && mds == cases && singleton;
    report(
        4,
        "reed-solomon",
        pass,
        format!("d = n+1-k in {exact}/{cases} cases, MDS {mds}/{cases}, Singleton on {checked} codes {singleton}"),
    );
    assert!(pass);
}

#[test]
fn criterion_5_code_clouds() {
    const SEEDS: u64 = 10_000;
    const HAMMING_SLACK: f64 = 0.05;
    let start = Instant::now();
    let proxy = ComplexityProxy::default();
    let results: Vec<(bool, bool)> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let ensemble = sample_codes(2, 12, 64, 1, seed, &proxy).unwrap();
            let p = &ensemble.entries()[0].params;
            let rate = p.k as f64 / p.n as f64;
            let delta = p.d as f64 / p.n as f64;
            let below = rate <= bound_curve(BoundKind::Hamming, 2, delta).unwrap() + HAMMING_SLACK;
            (p.satisfies_singleton(), below)
        })
        .collect();
    let singleton = results.iter().filter(|r| r.0).count();
    let below = results.iter().filter(|r| r.1).count();
    let fraction = below as f64 / SEEDS as f64;
    let secs = start.elapsed().as_secs_f64();
    let pass = singleton as u64 == SEEDS && fraction >= 0.9 && secs < 120.0;
    report(
        5,
        "code clouds",
        pass,
        format!("Singleton {singleton}/{SEEDS}, below Hamming+{HAMMING_SLACK} {fraction:.4}, {secs:.1}s"),
    );
    assert!(pass);
}

#[test]
fn criterion_6_partition_function() {
    const TOL: f64 = 1e-12;
    let proxy = ComplexityProxy::default();
    let ensembles = [
        enumerate_linear_codes(2, 6, 1 << 20, &proxy).unwrap(),
        sample_codes(2, 8, 16, 300, 3, &proxy).unwrap(),
        sample_codes(3, 4, 9, 300, 4, &proxy).unwrap(),
    ];
    let betas = beta_grid(0.0, 4.0, 17);
    let deltas: Vec<BigRational> = (0..=8).map(|i| ratio(i, 8)).collect();
    let rates = [ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3)];
    let eta = ratio(1, 10);
    let (mut comparisons, mut violations) = (0, 0);
    let mut check = |hi: f64, lo: f64| {
        comparisons += 1;
        violations += usize::from(lo > hi * (1.0 + TOL));
    };
    for e in &ensembles {
        for rate in &rates {
            let z = |delta: &BigRational, beta: f64| {
                partition_sum(e, &PartitionQuery { rate: rate.clone(), delta_min: delta.clone(), beta, eta: eta.clone() })
                    .z
            };
            for delta in &deltas {
                for w in betas.windows(2) {
                    check(z(delta, w[0]), z(delta, w[1]));
                }
            }
            for &beta in &betas {
                for w in deltas.windows(2) {
                    check(z(&w[0], beta), z(&w[1], beta));
                }
            }
        }
    }
    let csv = |seed| {
        let e = sample_codes(2, 10, 32, 200, seed, &proxy).unwrap();
        let rows = partition_sweep(&e, &ratio(1, 2), &ratio(0, 1), &default_eta(), &beta_grid(0.0, 4.0, 9));
        sweep_csv(&e, &rows)
    };
    let reproducible = csv(11) == csv(11) && csv(11) != csv(12);
    let pass = violations == 0 && comparisons > 0 && reproducible;
    report(
        6,
        "partition function",
        pass,
        format!("{violations} monotonicity violations in {comparisons} comparisons, byte-identical sweep {reproducible}"),
    );
    assert!(pass);
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

fn transparent(p: Program) -> LiftedPermutation {
    LiftedPermutation::new(PartialFunction::transparent(p).unwrap())
}

#[test]
fn criterion_7_halting() {
    let order = KolmogorovOrder::integers(DEFAULT_WINDOW, &ComplexityProxy::default());
    let sigma = CyclePermutation::new(&[vec![2, 3], vec![10, 11, 12]]).unwrap();
    let sk = conjugate(&sigma, &order);
    let mut geometric = 0;
    let fixed_points = [1u64, 5, 7, 40, 99];
    for p in fixed_points {
        let k = order.rank_of_int(p).unwrap();
        let r = phi_partial(k, &sk, &order, 200).unwrap().reconstruct().unwrap();
        let ok = r.numerator == vec![ratio(1, (k * k) as i64)] && r.denominator == vec![ratio(1, 1), ratio(-1, 1)];
        geometric += usize::from(ok);
    }

    let programs = [
        Program::Empty,
        Program::Identity,
        Program::Constant { value: 4 },
        Program::Residue { modulus: 2, residue: 0 },
        Program::Residue { modulus: 3, residue: 1 },
        Program::Shift { offset: 2, from: 5 },
        Program::Table { table: [(1, 2), (2, 7), (9, 1)].into_iter().collect() },
    ];
    let mut instances: Vec<(Box<dyn OrbitDynamics>, u64, Verdict)> = Vec::new();
    // Points with y outside the domain are fixed.
    for (prog, x, y) in [(0, 3, 1), (0, 0, 9), (3, 4, 3), (4, 2, 5), (5, 1, 2)] {
        let lift = transparent(programs[prog].clone());
        instances.push((Box::new(lift), encode_pair(x, y).unwrap(), Verdict::FiniteOrbit));
    }
    let cycles = CyclePermutation::new(&[vec![1, 2], vec![3, 4, 5], vec![10, 20, 30, 40], vec![7, 6, 9, 8, 50]]).unwrap();
    for start in [1, 4, 30, 50, 99] {
        instances.push((Box::new(cycles.clone()), start, Verdict::FiniteOrbit));
    }
    for (prog, x, y) in [(1, 1, 1), (1, 0, 5), (2, 7, 3), (3, 2, 4), (3, 0, 10), (4, 9, 1), (4, 1, 7), (5, 3, 5), (6, 1, 2), (6, 5, 9)] {
        let lift = transparent(programs[prog].clone());
        instances.push((Box::new(lift), encode_pair(x, y).unwrap(), Verdict::InfiniteOrbit));
    }
    let version = ComplexityProxy::default().version();
    let correct = instances
        .iter()
        .filter(|(d, start, expected)| classify_orbit(*start, d.as_ref(), 10_000, version).verdict == *expected)
        .count();

    // An orbit certificate is false unless stepping the period returns to the start.
    let certificate_holds = |d: &dyn OrbitDynamics, start: u64, r: &ProbeReport| match (&r.verdict, &r.certificate) {
        (Verdict::FiniteOrbit, Some(Certificate::Period { period })) => {
            let mut x = start;
            for _ in 0..*period {
                let Step::Next(y) = d.step(x) else { return false };
                x = y;
            }
            x == start
        }
        (Verdict::Inconclusive, None) => true,
        _ => false,
    };
    let (mut opaque_runs, mut false_certificates) = (0, 0);
    for (d, start, _) in &instances {
        let r = classify_orbit(*start, &Opaque(d.as_ref()), 10_000, version);
        opaque_runs += 1;
        false_certificates += usize::from(!certificate_holds(d.as_ref(), *start, &r));
    }
    for p in &programs {
        let lift = LiftedPermutation::new(PartialFunction::opaque(p.clone(), 50).unwrap());
        for n in 1..=200 {
            let r = classify_orbit(n, &lift, 500, version);
            opaque_runs += 1;
            false_certificates += usize::from(!certificate_holds(&lift, n, &r));
        }
    }
    let pass = geometric == fixed_points.len() && correct == 20 && false_certificates == 0;
    report(
        7,
        "halting",
        pass,
        format!(
            "Φ = 1/(k²(1-z)) at {geometric}/{} fixed points, transparent {correct}/20, \
             {false_certificates} false certificates in {opaque_runs} opaque runs",
            fixed_points.len()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_8_complexity_and_zipf() {
    let proxy = ComplexityProxy::default();
    let mut tower_ok = 0;
    for n in 2u32..=100 {
        let x = Object::tower(n.into(), n.into()).unwrap();
        let digits = n.to_string().len() as u64;
        tower_ok += usize::from(proxy.complexity_bits(&x) <= 8 * (6 + digits));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut header_ok = 0;
    for i in 0..100 {
        let x = if i % 2 == 0 {
            Object::Int(BigUint::from(rng.gen::<u64>() >> rng.gen_range(0..60)))
        } else {
            let len = rng.gen_range(0..40);
            Object::Word((0..len).map(|_| rng.gen_range(0..4u8)).collect())
        };
        let bits = proxy.complexity_bits(&x);
        let (mut floor_log2, mut b) = (0, bits);
        while b > 1 {
            b /= 2;
            floor_log2 += 1;
        }
        header_ok += usize::from(proxy.prefix_complexity_bits(&x) - bits == 2 * floor_log2 + 1);
    }

    let exponent = zipf_analyze(synthetic_corpus(1000, 100_000, 1)).fit.unwrap().exponent;

    let (q, n, k) = (7usize, 6usize, 3usize);
    let mut rs_wins = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<u8> = (0..q as u8).collect();
        points.shuffle(&mut rng);
        points.truncate(n);
        let rs = reed_solomon(q, n, k, &points).unwrap();
        let size = rs.cardinality();
        let rs_bits = proxy.complexity_bits(&Object::Code(rs));
        let random = sample_codes(q, n, size, 1, seed, &proxy).unwrap();
        rs_wins += usize::from(rs_bits < random.entries()[0].complexity_bits);
    }

    let pass = tower_ok == 99 && header_ok == 100 && (exponent + 1.0).abs() <= 0.1 && rs_wins >= 95;
    report(
        8,
        "complexity and zipf",
        pass,
        format!(
            "tower bound {tower_ok}/99, header relation {header_ok}/100, zipf exponent {exponent:.4}, \
             RS simpler in {rs_wins}/100"
        ),
    );
    assert!(pass);
}
