use super::*;
use crate::diagram::parse_pd;
use crate::laurent::{delta, loop_value, LaurentPoly, RationalFn};

fn d() -> RationalFn {
    RationalFn::from_poly(loop_value())
}

#[test]
fn matching_basics() {
    let e1 = Matching::e(2, 1).unwrap();
    assert_eq!(e1.to_parens(), "()()");
    assert_eq!(Matching::identity(2).to_parens(), "(())");
    assert_eq!("(())".parse::<Matching>().unwrap(), Matching::identity(2));
    let (m, loops) = e1.compose(&e1).unwrap();
    assert_eq!((m, loops), (e1.clone(), 1));
    assert!(Matching::from_partners(2, vec![3, 2, 1, 0]).is_err());
    for n in 0..=10 {
        let all = Matching::enumerate(n);
        assert_eq!(all.len() as u128, catalan(n));
        assert!(all.iter().all(|m| m.is_planar()));
    }
}

#[test]
fn tl_products() {
    let e1 = TLElement::e(2, 1).unwrap();
    assert_eq!(e1.mul(&e1).unwrap(), e1.scale(&d()));
    let x = TLElement::e(3, 2).unwrap().add(&TLElement::e(3, 1).unwrap()).unwrap();
    assert_eq!(TLElement::identity(3).mul(&x).unwrap(), x);
    // e1 e2 e1 = e1
    let e1 = TLElement::e(3, 1).unwrap();
    let e2 = TLElement::e(3, 2).unwrap();
    assert_eq!(e1.mul(&e2).unwrap().mul(&e1).unwrap(), e1);
}

#[test]
fn f2_closed_form() {
    let f2 = jones_wenzl(2).unwrap();
    let c = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_int_terms(&[(2, 1), (-2, 1)]))
        .unwrap();
    let expected = TLElement::identity(2)
        .add(&TLElement::e(2, 1).unwrap().scale(&c))
        .unwrap();
    assert_eq!(*f2, expected);
}

#[test]
fn jones_wenzl_properties() {
    for n in 1..=5 {
        let f = jones_wenzl(n).unwrap();
        assert_eq!(f.mul(&f).unwrap(), *f, "idempotent n={n}");
        for i in 1..n {
            assert!(TLElement::e(n, i).unwrap().mul(&f).unwrap().is_zero());
            assert!(f.mul(&TLElement::e(n, i).unwrap()).unwrap().is_zero());
        }
        let ratio = &delta(n as i32).unwrap() / &delta(n as i32 - 1).unwrap();
        let prev = jones_wenzl(n - 1).unwrap();
        assert_eq!(f.partial_trace().unwrap(), prev.scale(&ratio), "trace n={n}");
        assert_eq!(f.trace().unwrap(), delta(n as i32).unwrap());
    }
    assert!(matches!(jones_wenzl(N_MAX + 1), Err(crate::Error::Resource(_))));
}

#[test]
fn closed_circles() {
    assert_eq!(SkeinDiagram::coloured_circle(1).evaluate_closed().unwrap(), d());
    for n in 1..=4 {
        let s = SkeinDiagram::coloured_circle(n);
        assert_eq!(s.evaluate_closed().unwrap(), delta(n as i32).unwrap());
        assert_eq!(s.bar_diagram().unwrap(), n);
        assert!(s.is_adequate_skein().unwrap());
        let r = s.check_degree_lemma().unwrap();
        assert_eq!(r.degree, Some(-2 * n as i32));
        assert_eq!(r.equality_holds, Some(true));
    }
    let two = SkeinDiagram::coloured_circle(1).disjoint_union(&SkeinDiagram::coloured_circle(1));
    assert_eq!(two.evaluate_closed().unwrap(), &d() * &d());
    let s = SkeinDiagram::coloured_circle(2).disjoint_union(&SkeinDiagram::coloured_circle(3));
    assert_eq!(
        s.evaluate_closed().unwrap(),
        &delta(2).unwrap() * &delta(3).unwrap()
    );
}

#[test]
fn skein_json_round_trip() {
    let s = SkeinDiagram::coloured_circle(3);
    let back = SkeinDiagram::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
}

#[test]
fn bracket_of_trefoil() {
    // the standard code is the left-handed trefoil
    let left = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").unwrap();
    // skein value: the unknot counts as one loop
    let v = Network::from_pd(&left).unwrap().evaluate().unwrap();
    let bracket = LaurentPoly::from_int_terms(&[(7, 1), (3, -1), (-5, -1)]);
    assert_eq!(v.to_laurent().unwrap(), &bracket * &loop_value());
    let v = Network::from_pd(&left.mirror()).unwrap().evaluate().unwrap();
    assert_eq!(v.to_laurent().unwrap(), &bracket.invert_variable() * &loop_value());
}

#[test]
fn kinks_and_loops() {
    let pos = parse_pd("X[1,1,2,2]").unwrap();
    let v = Network::from_pd(&pos).unwrap().evaluate().unwrap();
    assert_eq!(v.to_laurent().unwrap(), &LaurentPoly::int_monomial(-1, 3) * &loop_value());
    let neg = parse_pd("X[1,2,2,1]").unwrap();
    let v = Network::from_pd(&neg).unwrap().evaluate().unwrap();
    assert_eq!(v.to_laurent().unwrap(), &LaurentPoly::int_monomial(-1, -3) * &loop_value());
    let u = parse_pd("Loop[1], Loop[2]").unwrap();
    assert_eq!(Network::from_pd(&u).unwrap().evaluate().unwrap(), &d() * &d());
}

#[test]
fn junkterms_small() {
    for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        assert!(verify_junkterms(a, b).unwrap(), "a={a} b={b}");
    }
}

#[test]
fn local_identity_small() {
    let nested = Matching::identity(3);
    assert!(verify_local_tail_identity(1, &nested).unwrap());
    let bad = Matching::e(3, 1).unwrap();
    assert!(matches!(
        verify_local_tail_identity(1, &bad),
        Err(crate::Error::NotAdequate(_))
    ));
}
