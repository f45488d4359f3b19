use quadop::quantize::*;
use quadop::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 4;
const D: u32 = 4;

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// Moyal product straight from `Σ_k (t/2)^k / k! Σ_j C(k,j) (-1)^j ...`.
fn moyal_oracle(u: &Poly2, v: &Poly2, order: usize) -> Vec<Poly2> {
    (0..order as u32)
        .map(|k| {
            let mut acc = Poly2::zero();
            for j in 0..=k {
                let c = factorial(k) / (factorial(j) * factorial(k - j));
                let c = if j % 2 == 0 { c } else { -c };
                let term = u.derive(&[k - j, j]).mul(&v.derive(&[j, k - j]));
                acc = acc.add(&term.scale(&Scalar::int(c)));
            }
            acc.scale(&Scalar::rat(1, (1 << k) * factorial(k)))
        })
        .collect()
}

fn star_series(f: impl Fn(&Poly2, &Poly2) -> Vec<Poly2>, a: &[Poly2], b: &[Poly2]) -> Vec<Poly2> {
    let n = a.len();
    let mut out = vec![Poly2::zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            for (k, c) in f(&a[i], &b[j]).into_iter().enumerate() {
                if i + j + k < n {
                    out[i + j + k] = out[i + j + k].add(&c);
                }
            }
        }
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, degree: u32) -> Poly2 {
    let mut p = Poly2::zero();
    for m in Carrier::new(degree).basis() {
        if rng.gen_bool(0.4) {
            p.add_term(m, Scalar::int(rng.gen_range(-3..=3)));
        }
    }
    p
}

fn lift(p: &Poly2) -> Vec<Poly2> {
    let mut v = vec![Poly2::zero(); N];
    v[0] = p.clone();
    v
}

#[test]
fn moyal_matches_oracle_and_is_associative_on_random_triples() {
    let s = StarProduct::moyal(N, D).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let (u, v, w) = (random_poly(&mut rng, D), random_poly(&mut rng, D), random_poly(&mut rng, D));
        assert_eq!(s.apply(&u, &v), moyal_oracle(&u, &v, N));
        let oracle = |a: &Poly2, b: &Poly2| moyal_oracle(a, b, N);
        let left = star_series(oracle, &star_series(oracle, &lift(&u), &lift(&v)), &lift(&w));
        let right = star_series(oracle, &lift(&u), &star_series(oracle, &lift(&v), &lift(&w)));
        assert_eq!(left, right);
        assert!(s.evaluate_associator(&u, &v, &w).iter().all(Poly2::is_zero));
    }
    assert!(s.is_associative());
    assert!(StarProduct::standard(N, D).unwrap().is_associative());
}

#[test]
fn moyal_polarization_is_ll_t2() {
    let s = StarProduct::moyal(N, D).unwrap();
    let data = polarize_star(&s).unwrap();
    assert_eq!(ll_failure(&data), None);
    // the bracket mod t is the Poisson bracket up to the 1/√2 normalization
    assert_eq!(data.bracket[0].scale(&Scalar::u()), BiDiff::poisson());
    assert_eq!(data.product[0], BiDiff::product().scale(&Scalar::u()));
    assert!(check_ll(&polarize_star(&StarProduct::standard(N, D).unwrap()).unwrap()));
}

#[test]
fn classical_limit_is_poisson() {
    for s in [StarProduct::moyal(N, D).unwrap(), StarProduct::standard(N, D).unwrap()] {
        let (prod, br) = classical_limit(&s);
        assert_eq!(prod, BiDiff::product());
        assert_eq!(br.scale(&Scalar::int(-1)).restrict(D).terms().len(), 2);
        assert_eq!(poisson_failure(s.carrier, &prod, &br), None);
    }
    let (prod, br) = classical_limit(&StarProduct::moyal(N, D).unwrap());
    assert_eq!(br, BiDiff::poisson());
    let mut bad = br.clone();
    bad.set([2, 0], [0, 1], Scalar::int(1));
    bad.set([0, 1], [2, 0], Scalar::int(-1));
    assert!(poisson_failure(Carrier::new(D), &prod, &bad).is_some());
}

#[test]
fn commutative_cases() {
    let s = StarProduct::commutative(N, D, Scalar::int(1)).unwrap();
    let data = polarize_star(&s).unwrap();
    assert!(data.bracket.iter().all(BiDiff::is_zero));
    assert_eq!(data.product[0], BiDiff::product().scale(&Scalar::u()));
    assert!(check_ll(&data));

    let data = LLData::commutative(N, D, Scalar::int(1)).unwrap();
    assert!(check_ll(&data));
    let star = star_from_ll(&data).unwrap();
    assert_eq!(star.terms[0], BiDiff::product().scale(&(Scalar::u() * Scalar::rat(1, 2))));
    assert!(star.terms[1..].iter().all(BiDiff::is_zero));
    assert!(star.is_associative());
}

#[test]
fn roundtrips() {
    for s in [
        StarProduct::moyal(N, D).unwrap(),
        StarProduct::standard(N, D).unwrap(),
        StarProduct::moyal(2, 3).unwrap(),
    ] {
        let data = polarize_star(&s).unwrap();
        assert_eq!(polarize_star(&star_from_ll(&data).unwrap()).unwrap(), data);
        assert_eq!(star_from_ll(&data).unwrap(), s);
    }
}

#[test]
fn star_from_moyal_data_is_associative_on_random_triples() {
    let data = polarize_star(&StarProduct::moyal(N, D).unwrap()).unwrap();
    let star = star_from_ll(&data).unwrap();
    assert!(star.is_commutative_mod_t());
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let (u, v, w) = (random_poly(&mut rng, D), random_poly(&mut rng, D), random_poly(&mut rng, D));
        assert!(star.evaluate_associator(&u, &v, &w).iter().all(Poly2::is_zero));
    }
}

#[test]
fn not_commutative_mod_t() {
    let mut s = StarProduct::moyal(N, D).unwrap();
    s.terms[0] = s.terms[0].add(&BiDiff::poisson());
    assert_eq!(polarize_star(&s), Err(QuantizeError::NotCommutativeModT));
}

#[test]
fn failing_data_rejected() {
    let mut data = polarize_star(&StarProduct::moyal(N, D).unwrap()).unwrap();
    data.bracket[0] = data.bracket[0].scale(&Scalar::int(2));
    assert!(matches!(star_from_ll(&data), Err(QuantizeError::FailsLL(_))));
}

fn bumped(b: &BiDiff, key: (Mono, Mono)) -> BiDiff {
    let mut out = b.clone();
    out.set(key.0, key.1, b.get(key.0, key.1) + Scalar::int(1));
    out
}

#[test]
fn single_coefficient_mutations_flip_the_verdict() {
    let data = polarize_star(&StarProduct::moyal(N, D).unwrap()).unwrap();
    let mut count = 0;
    for k in 0..data.bracket.len() {
        for key in data.bracket[k].terms().keys() {
            let mut m = data.clone();
            m.bracket[k] = bumped(&m.bracket[k], *key);
            assert!(!check_ll(&m), "bracket t^{k} {key:?}");
            count += 1;
        }
    }
    for k in 0..data.product.len() {
        for key in data.product[k].terms().keys() {
            let mut m = data.clone();
            m.product[k] = bumped(&m.product[k], *key);
            assert!(!check_ll(&m), "product t^{k} {key:?}");
            count += 1;
        }
    }
    // absent coefficients too
    let mut m = data.clone();
    m.bracket[1] = bumped(&m.bracket[1], ([1, 0], [0, 0]));
    assert!(!check_ll(&m));
    assert_eq!(count, 10);

    let s = StarProduct::moyal(N, D).unwrap();
    for k in 1..N {
        for key in s.terms[k].terms().keys() {
            let mut m = s.clone();
            m.terms[k] = bumped(&m.terms[k], *key);
            assert!(!m.is_associative(), "star t^{k} {key:?}");
        }
    }
}

#[test]
fn mutations_beyond_the_carrier_are_invisible() {
    let data = polarize_star(&StarProduct::moyal(N, 1).unwrap()).unwrap();
    assert!(check_ll(&data));
    let mut m = data.clone();
    m.bracket[2] = bumped(&m.bracket[2], ([2, 0], [0, 1]));
    assert!(check_ll(&m));
}

/// Direct evaluation of the reported axiom on the reported inputs.
fn witness_fails(data: &LLData, f: &LLFailure) -> bool {
    let ins: Vec<Poly2> = f.inputs.iter().map(|m| mono(*m)).collect();
    let n = data.order();
    let series = |ops: &[BiDiff], a: &[Poly2], b: &[Poly2]| {
        let mut out = vec![Poly2::zero(); n];
        for (i, op) in ops.iter().enumerate() {
            for j in 0..n {
                for l in 0..n {
                    if i + j + l < n {
                        out[i + j + l] = out[i + j + l].add(&op.apply(&a[j], &b[l]));
                    }
                }
            }
        }
        out
    };
    let lift = |p: &Poly2| {
        let mut v = vec![Poly2::zero(); n];
        v[0] = p.clone();
        v
    };
    let pr = |a: &[Poly2], b: &[Poly2]| series(&data.product, a, b);
    let br = |a: &[Poly2], b: &[Poly2]| series(&data.bracket, a, b);
    let diff = |a: Vec<Poly2>, b: Vec<Poly2>| -> Vec<Poly2> { a.iter().zip(&b).map(|(x, y)| x.sub(y)).collect() };
    let value = match f.axiom {
        Axiom::ProductSymmetry => diff(pr(&lift(&ins[0]), &lift(&ins[1])), pr(&lift(&ins[1]), &lift(&ins[0]))),
        Axiom::BracketAntisymmetry => {
            let a = br(&lift(&ins[0]), &lift(&ins[1]));
            let b = br(&lift(&ins[1]), &lift(&ins[0]));
            a.iter().zip(&b).map(|(x, y)| x.add(y)).collect()
        }
        _ => {
            let (x, y, z) = (lift(&ins[0]), lift(&ins[1]), lift(&ins[2]));
            match f.axiom {
                Axiom::Jacobi => {
                    let a = br(&x, &br(&y, &z));
                    let b = br(&y, &br(&z, &x));
                    let c = br(&z, &br(&x, &y));
                    a.iter().zip(&b).zip(&c).map(|((p, q), r)| p.add(q).add(r)).collect()
                }
                Axiom::Leibniz => diff(diff(br(&x, &pr(&y, &z)), pr(&br(&x, &y), &z)), pr(&y, &br(&x, &z))),
                Axiom::LLAssociator => {
                    let mut d = diff(pr(&pr(&x, &y), &z), pr(&x, &pr(&y, &z)));
                    let nested = br(&y, &br(&x, &z));
                    for k in 2..n {
                        d[k] = d[k].sub(&nested[k - 2]);
                    }
                    d
                }
                _ => unreachable!(),
            }
        }
    };
    !value[f.order].is_zero() && value[..f.order].iter().all(Poly2::is_zero)
}

fn perturb_star(rng: &mut ChaCha8Rng) -> StarProduct {
    let base = if rng.gen_bool(0.5) {
        StarProduct::moyal(N, 3).unwrap()
    } else {
        StarProduct::standard(N, 3).unwrap()
    };
    let mut s = base.clone();
    match rng.gen_range(0..4) {
        // t ↦ ct keeps associativity
        0 => {
            let c = Scalar::int(rng.gen_range(2..=3));
            for k in 0..N {
                s.terms[k] = s.terms[k].scale(&c.powi(k as i64).unwrap());
            }
        }
        // a symmetric biderivation at the top order is a Hochschild cocycle
        1 => {
            let a = [rng.gen_range(0..=1), 0];
            let a = if a[0] == 0 { [0, 1] } else { a };
            s.terms[N - 1] = s.terms[N - 1].add(&{
                let mut b = BiDiff::zero();
                b.set(a, a, Scalar::int(rng.gen_range(1..=2)));
                b
            });
        }
        _ => {
            for _ in 0..rng.gen_range(1..=2) {
                let k = rng.gen_range(1..N);
                let m = |r: &mut ChaCha8Rng| [r.gen_range(0..=2), r.gen_range(0..=1)];
                let (a, b) = (m(rng), m(rng));
                let c = s.terms[k].get(a, b) + Scalar::int(rng.gen_range(1..=2));
                s.terms[k].set(a, b, c);
            }
        }
    }
    s
}

#[test]
fn associativity_and_ll_axioms_fail_together() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let (mut pass, mut fail) = (0, 0);
    for _ in 0..40 {
        let s = perturb_star(&mut rng);
        let data = polarize_star(&s).unwrap();
        let assoc = s.is_associative();
        assert_eq!(assoc, check_ll(&data), "{:?}", s.terms);
        if let Some(f) = ll_failure(&data) {
            assert!(witness_fails(&data, &f), "{f}");
        }
        if assoc { pass += 1 } else { fail += 1 }

        // the other direction: perturb the LL side keeping the tensor symmetries
        let mut d = polarize_star(&StarProduct::moyal(N, 3).unwrap()).unwrap();
        let k = rng.gen_range(0..N - 1);
        let (a, b) = ([rng.gen_range(0..=2), rng.gen_range(0..=1)], [rng.gen_range(0..=1), rng.gen_range(0..=2)]);
        let c = Scalar::int(rng.gen_range(1..=2));
        if rng.gen_bool(0.5) {
            let mut e = BiDiff::zero();
            e.set(a, b, c.clone());
            d.bracket[k] = d.bracket[k].add(&e.sub(&e.opposite()));
        } else {
            let mut e = BiDiff::zero();
            e.set(a, b, c);
            d.product[k + 1] = d.product[k + 1].add(&e.add(&e.opposite()));
        }
        assert_eq!(check_ll(&d), StarProduct::from_polarized(&d).is_associative());
        if let Some(f) = ll_failure(&d) {
            assert!(witness_fails(&d, &f), "{f}");
        }
    }
    assert!(pass > 5 && fail > 5, "{pass} {fail}");
}

#[test]
fn failure_witnesses_are_carrier_monomials() {
    let mut data = polarize_star(&StarProduct::moyal(N, D).unwrap()).unwrap();
    data.bracket[1] = data.bracket[1].add(&BiDiff::poisson());
    let f = ll_failure(&data).unwrap();
    assert!(f.inputs.iter().all(|m| mono_degree(m) <= D));
    assert!(witness_fails(&data, &f), "{f}");
    assert!(!f.to_string().is_empty());
}
