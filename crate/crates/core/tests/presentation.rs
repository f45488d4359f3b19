use quadop::presentation::*;
use quadop::scalar::{Rational, Scalar};

fn space_eq(a: &Presentation, b: &Presentation) -> bool {
    a.shape == b.shape && a.relation_space() == b.relation_space()
}

#[test]
fn render_then_parse_is_identity() {
    for name in builtin_names() {
        let p = builtin(name).unwrap();
        let back = parse_presentation(&p.render()).unwrap();
        assert_eq!(back, p, "{name}");
        let pol = p.polarize();
        assert_eq!(parse_presentation(&pol.render()).unwrap(), pol, "{name} polarized");
    }
}

#[test]
fn associative_polarization() {
    let ass = builtin("Ass").unwrap();
    assert!(space_eq(&ass.polarize(), &builtin("Ass_polarized").unwrap()));
    assert!(space_eq(&builtin("Ass_polarized").unwrap().depolarize().unwrap(), &ass));
    assert!(space_eq(&builtin("LL1").unwrap(), &builtin("Ass_polarized").unwrap()));
}

#[test]
fn poisson_depolarization() {
    let d = builtin("Poiss").unwrap().depolarize().unwrap();
    assert!(space_eq(&d, &builtin("Poiss_depolarized").unwrap()));
}

#[test]
fn ll_q_depolarization_generic_and_at_minus_three() {
    let d = builtin("LLq").unwrap().depolarize().unwrap();
    assert!(space_eq(&d, &builtin("LLq_depolarized").unwrap()));
    let m3 = ll_at(&Rational::from_integer((-3).into())).depolarize().unwrap();
    assert!(space_eq(&m3, &builtin("LLminus3").unwrap()));
}

#[test]
fn g_associative_polarized_forms() {
    for (g, pol) in [("G2", "G2_polarized"), ("G4", "G4_polarized"), ("G5", "G5_polarized")] {
        let p = builtin(g).unwrap().polarize();
        assert!(space_eq(&p, &builtin(pol).unwrap()), "{g}");
    }
    // G6 polarizes to a commutative product and a Lie bracket with no mixed relation.
    let g6 = builtin("G6").unwrap().polarize();
    let jacobi = parse_presentation("gen c: comm; gen b: anti; rel b(x,b(y,z)) + b(y,b(z,x)) + b(z,b(x,y)) = 0;").unwrap();
    assert!(space_eq(&g6, &jacobi));
}

#[test]
fn poisson_vector_v_decomposes() {
    let p = builtin("Poiss_depolarized").unwrap();
    let v = parse_relation(
        &p,
        "m(m(x,y),z) - m(x,m(y,z)) - (1/3)*(m(m(x,z),y) + m(m(y,z),x) - m(m(y,x),z) - m(m(z,x),y))",
    )
    .unwrap();
    assert!(p.relation_space().contains(&p.relation_vector(&v).unwrap()).unwrap());
}

#[test]
fn u1_is_six_associators() {
    let ass = builtin("Ass").unwrap();
    let u1 = parse_relation(
        &ass,
        "(m(m(x,y),z) - m(x,m(y,z))) - (m(m(y,x),z) - m(y,m(x,z))) + (m(m(z,y),x) - m(z,m(y,x))) \
         + (m(m(x,z),y) - m(x,m(z,y))) + (m(m(y,z),x) - m(y,m(z,x))) - (m(m(z,x),y) - m(z,m(x,y)))",
    )
    .unwrap();
    let v = ass.relation_vector(&u1).unwrap();
    assert_eq!(v.iter().filter(|c| **c != Scalar::from(0)).count(), 12);
    assert!(ass.relation_space().contains(&v).unwrap());
}
