use super::{associator, bialgebra_defects, master_residual, MlabError, MultiMap};
use crate::scalar::{int, Rational};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one randomized identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

const D: usize = 2;
const RANGE: i64 = 2;

fn record(report: &mut SuiteReport, ok: bool, what: impl FnOnce() -> String) {
    report.samples += 1;
    if !ok {
        report.failures += 1;
        if report.first_failure.is_none() {
            report.first_failure = Some(what());
        }
    }
}

fn report(name: &str) -> SuiteReport {
    SuiteReport {
        name: name.to_string(),
        samples: 0,
        failures: 0,
        first_failure: None,
    }
}

const PERMS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], true),
    ([1, 0, 2], false),
    ([0, 2, 1], false),
    ([2, 1, 0], false),
    ([1, 2, 0], true),
    ([2, 0, 1], true),
];

/// `Σ sgn(σ) A(h_σ1, h_σ2, h_σ3)`.
pub fn alternating_associator(h: [&MultiMap; 3]) -> Result<MultiMap, MlabError> {
    let mut acc: Option<MultiMap> = None;
    for (p, even) in PERMS {
        let a = associator(h[p[0]], h[p[1]], h[p[2]])?;
        let a = if even { a } else { a.scale(&-Rational::one()) };
        acc = Some(match acc {
            None => a,
            Some(s) => s.try_add(&a)?,
        });
    }
    Ok(acc.expect("six terms"))
}

fn g6_suite(rng: &mut ChaCha8Rng, n: usize) -> Result<SuiteReport, MlabError> {
    let mut r = report("G6-associativity of (X, ∘)");
    for k in 0..n {
        let h: Vec<MultiMap> = (0..3)
            .map(|_| {
                let (i, o) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
                MultiMap::random(rng, D, i, o, RANGE)
            })
            .collect();
        let s = alternating_associator([&h[0], &h[1], &h[2]])?;
        record(&mut r, s.is_zero(), || format!("sample {k}: {s}"));
    }
    Ok(r)
}

fn prelie_suite(rng: &mut ChaCha8Rng, n: usize) -> Result<SuiteReport, MlabError> {
    let mut r = report("pre-Lie on Y_Hoch");
    for k in 0..n {
        let h: Vec<MultiMap> = (0..3)
            .map(|_| {
                let i = rng.gen_range(1..=3);
                MultiMap::random(rng, D, i, 1, RANGE)
            })
            .collect();
        let s = associator(&h[0], &h[1], &h[2])?.try_sub(&associator(&h[0], &h[2], &h[1])?)?;
        record(&mut r, s.is_zero(), || format!("sample {k}: {s}"));
    }
    Ok(r)
}

fn vinberg_suite(rng: &mut ChaCha8Rng, n: usize) -> Result<SuiteReport, MlabError> {
    let mut r = report("Vinberg on Y_coHoch");
    for k in 0..n {
        let h: Vec<MultiMap> = (0..3)
            .map(|_| {
                let o = rng.gen_range(1..=3);
                MultiMap::random(rng, D, 1, o, RANGE)
            })
            .collect();
        let s = associator(&h[0], &h[1], &h[2])?.try_sub(&associator(&h[1], &h[0], &h[2])?)?;
        record(&mut r, s.is_zero(), || format!("sample {k}: {s}"));
    }
    Ok(r)
}

fn entry(d: usize, ins: usize, outs: usize, entries: &[(&[usize], &[usize], i64)]) -> MultiMap {
    let mut m = MultiMap::zero(d, ins, outs);
    for (o, i, c) in entries {
        m.set(o, i, int(*c));
    }
    m
}

/// Small infinitesimal bialgebras on a two-dimensional space.
pub fn catalogue() -> Vec<(MultiMap, MultiMap)> {
    let mu1 = entry(D, 2, 1, &[(&[0], &[0, 0], 1), (&[1], &[0, 1], 1)]);
    let de1 = entry(D, 1, 2, &[(&[1, 1], &[0], 1)]);
    let mu2 = entry(D, 2, 1, &[(&[0], &[0, 0], 1)]);
    let de2 = entry(D, 1, 2, &[(&[1, 1], &[1], 1)]);
    let de3 = entry(D, 1, 2, &[(&[0, 0], &[0], 1)]);
    let mu4 = entry(D, 2, 1, &[(&[0], &[0, 0], 1), (&[1], &[0, 1], 1), (&[1], &[1, 0], 1)]);
    vec![
        (mu1, de1),
        (mu2, de2),
        (MultiMap::zero(D, 2, 1), de3),
        (mu4, MultiMap::zero(D, 1, 2)),
    ]
}

fn random_basis_change(rng: &mut ChaCha8Rng) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    loop {
        let [a, b, c, d] = [0; 4].map(|_| rng.gen_range(-2..=2i64));
        let det = a * d - b * c;
        if det == 0 {
            continue;
        }
        let p = vec![vec![int(a), int(b)], vec![int(c), int(d)]];
        let k = Rational::new(1.into(), det.into());
        let inv = vec![
            vec![int(d) * &k, int(-b) * &k],
            vec![int(-c) * &k, int(a) * &k],
        ];
        return (p, inv);
    }
}

fn perturb(rng: &mut ChaCha8Rng, m: &MultiMap) -> MultiMap {
    let mut out = m.clone();
    let o: Vec<usize> = (0..m.outs()).map(|_| rng.gen_range(0..D)).collect();
    let i: Vec<usize> = (0..m.ins()).map(|_| rng.gen_range(0..D)).collect();
    let c = out.get(&o, &i).clone() + int(if rng.gen_bool(0.5) { 1 } else { -1 });
    out.set(&o, &i, c);
    out
}

/// Pairs `(μ, δ)` mixing genuine bialgebras in random bases, their one-entry
/// perturbations and dense random pairs.
pub fn master_samples(rng: &mut ChaCha8Rng, n: usize) -> Vec<(MultiMap, MultiMap)> {
    let cat = catalogue();
    (0..n)
        .map(|k| {
            let (mu, de) = &cat[rng.gen_range(0..cat.len())];
            let (p, inv) = random_basis_change(rng);
            let (mu, de) = (mu.conjugate(&p, &inv), de.conjugate(&p, &inv));
            match k % 4 {
                0 => (mu, de),
                1 => (perturb(rng, &mu), de),
                2 => (mu, perturb(rng, &de)),
                _ => (MultiMap::random(rng, D, 2, 1, RANGE), MultiMap::random(rng, D, 1, 2, RANGE)),
            }
        })
        .collect()
}

fn master_suite(rng: &mut ChaCha8Rng, n: usize) -> Result<SuiteReport, MlabError> {
    let mut r = report("master equation iff bialgebra axioms");
    for (k, (mu, de)) in master_samples(rng, n).iter().enumerate() {
        let res = master_residual(mu, de)?;
        let ax = bialgebra_defects(mu, de)?;
        record(&mut r, res.is_zero() == ax.is_zero(), || {
            format!(
                "sample {k}: residual zero = {}, axioms hold = {}; mu = {mu}; delta = {de}; mixed residual = {}",
                res.is_zero(),
                ax.is_zero(),
                res.mixed
            )
        });
    }
    Ok(r)
}

/// The four randomized suites with `triples` samples each for the
/// associativity-type identities and `pairs` samples for the master equation.
pub fn run_suites(seed: u64, triples: usize, pairs: usize) -> Vec<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let run = |r: Result<SuiteReport, MlabError>| r.expect("suite shapes are consistent");
    vec![
        run(g6_suite(&mut rng, triples)),
        run(prelie_suite(&mut rng, triples)),
        run(vinberg_suite(&mut rng, triples)),
        run(master_suite(&mut rng, pairs)),
    ]
}
