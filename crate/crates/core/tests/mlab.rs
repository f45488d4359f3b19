use quadop::mlab::*;
use quadop::scalar::{int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ_i (-1)^{i(b+1)} f ∘_i g` evaluated directly on basis tensors, for maps
/// with one output.
fn classical_insertion(f: &MultiMap, g: &MultiMap) -> MultiMap {
    let (b, m, d) = (f.ins(), g.ins(), f.base_dim());
    MultiMap::from_fn(d, b + m - 1, 1, |o, inp| {
        let mut total = Rational::from_integer(0.into());
        for i in 0..b {
            let sign = if ((i + 1) * (b + 1)) % 2 == 0 { int(1) } else { int(-1) };
            for k in 0..d {
                let mut f_in: Vec<usize> = inp[..i].to_vec();
                f_in.push(k);
                f_in.extend_from_slice(&inp[i + m..]);
                total += &sign * f.get(o, &f_in) * g.get(&[k], &inp[i..i + m]);
            }
        }
        total
    })
}

#[test]
fn circ_on_hochschild_cochains_is_single_insertion_sum() {
    let mut r = rng(3);
    for _ in 0..10 {
        let (a, b) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let f = MultiMap::random(&mut r, 2, a, 1, 2);
        let g = MultiMap::random(&mut r, 2, b, 1, 2);
        assert_eq!(circ(&f, &g).unwrap(), classical_insertion(&f, &g));
    }
}

#[test]
fn bilinearity() {
    let mut r = rng(5);
    for _ in 0..10 {
        let shape = |r: &mut ChaCha8Rng| (r.gen_range(1..=2), r.gen_range(1..=2));
        let (fi, fo) = shape(&mut r);
        let (gi, go) = shape(&mut r);
        let f1 = MultiMap::random(&mut r, 2, fi, fo, 2);
        let f2 = MultiMap::random(&mut r, 2, fi, fo, 2);
        let g = MultiMap::random(&mut r, 2, gi, go, 2);
        let c = int(r.gen_range(-3..=3));
        let lhs = circ(&f1.scale(&c).try_add(&f2).unwrap(), &g).unwrap();
        let rhs = circ(&f1, &g).unwrap().scale(&c).try_add(&circ(&f2, &g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = circ(&g, &f1.try_add(&f2).unwrap()).unwrap();
        let rhs = circ(&g, &f1).unwrap().try_add(&circ(&g, &f2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        for i in 1..=fi {
            for j in 1..=go {
                let lhs = comp_ij(&f1.scale(&c), &g, i, j).unwrap();
                assert_eq!(lhs, comp_ij(&f1, &g, i, j).unwrap().scale(&c));
            }
        }
    }
}

fn hochschild_triple(r: &mut ChaCha8Rng, cochains: bool) -> Vec<MultiMap> {
    (0..3)
        .map(|_| {
            let a = r.gen_range(1..=3);
            if cochains {
                MultiMap::random(r, 2, a, 1, 2)
            } else {
                MultiMap::random(r, 2, 1, a, 2)
            }
        })
        .collect()
}

#[test]
fn bracket_antisymmetric() {
    let mut r = rng(8);
    for _ in 0..8 {
        let h = hochschild_triple(&mut r, true);
        let fg = bracket(&h[0], &h[1]).unwrap();
        let gf = bracket(&h[1], &h[0]).unwrap();
        assert!(fg.try_add(&gf).unwrap().is_zero());
    }
}

#[test]
fn unsigned_insertions_are_pre_lie_and_vinberg() {
    let mut r = rng(21);
    for _ in 0..20 {
        let h = hochschild_triple(&mut r, true);
        let a = |x: &MultiMap, y: &MultiMap, z: &MultiMap| associator_with(x, y, z, Signs::Unsigned).unwrap();
        assert!(a(&h[0], &h[1], &h[2]).try_sub(&a(&h[0], &h[2], &h[1])).unwrap().is_zero());
        let h = hochschild_triple(&mut r, false);
        assert!(a(&h[0], &h[1], &h[2]).try_sub(&a(&h[1], &h[0], &h[2])).unwrap().is_zero());
    }
}

#[test]
fn cohochschild_closed() {
    let mut r = rng(9);
    let f = MultiMap::random(&mut r, 2, 1, 2, 2);
    let g = MultiMap::random(&mut r, 2, 1, 3, 2);
    let c = circ(&f, &g).unwrap();
    assert_eq!((c.ins(), c.outs()), (1, 4));
}

#[test]
fn catalogue_consists_of_bialgebras() {
    for (mu, de) in catalogue() {
        assert!(bialgebra_defects(&mu, &de).unwrap().is_zero(), "{mu} / {de}");
    }
}

#[test]
fn master_equation_with_zero_comultiplication() {
    let (mu, _) = catalogue().remove(3);
    let zero = MultiMap::zero(2, 1, 2);
    assert!(master_residual(&mu, &zero).unwrap().is_zero());
    let mut bad = MultiMap::zero(2, 2, 1);
    bad.set(&[1], &[0, 0], int(1));
    bad.set(&[0], &[0, 1], int(1));
    let res = master_residual(&bad, &zero).unwrap();
    assert!(!res.mu_mu.is_zero());
    assert!(!bialgebra_defects(&bad, &zero).unwrap().associativity.is_zero());
}

#[test]
fn mu_mu_is_minus_the_associator_and_delta_delta_the_coassociator() {
    let mut r = rng(12);
    for _ in 0..10 {
        let mu = MultiMap::random(&mut r, 2, 2, 1, 2);
        let de = MultiMap::random(&mut r, 2, 1, 2, 2);
        let res = master_residual(&mu, &de).unwrap();
        let ax = bialgebra_defects(&mu, &de).unwrap();
        assert!(res.mu_mu.try_add(&ax.associativity).unwrap().is_zero());
        assert!(res.delta_delta.try_add(&ax.coassociativity).unwrap().is_zero());
    }
}

#[test]
fn mixed_residual_is_compatibility_plus_outer_insertions() {
    let mut r = rng(30);
    for _ in 0..10 {
        let mu = MultiMap::random(&mut r, 2, 2, 1, 2);
        let de = MultiMap::random(&mut r, 2, 1, 2, 2);
        let res = master_residual(&mu, &de).unwrap();
        let ax = bialgebra_defects(&mu, &de).unwrap();
        let outer = comp_ij(&mu, &de, 1, 1)
            .unwrap()
            .try_add(&comp_ij(&mu, &de, 2, 2).unwrap())
            .unwrap();
        assert_eq!(res.mixed, ax.compatibility.try_add(&outer).unwrap());
    }
}

#[test]
fn suite_sizes() {
    let reports = run_suites(7, 20, 50);
    let sizes: Vec<usize> = reports.iter().map(|r| r.samples).collect();
    assert_eq!(sizes, vec![20, 20, 20, 50]);
    for r in &reports {
        assert_eq!(r.failures == 0, r.first_failure.is_none(), "{}", r.name);
    }
}

#[test]
fn suites_are_deterministic() {
    assert_eq!(run_suites(1, 3, 8), run_suites(1, 3, 8));
}
