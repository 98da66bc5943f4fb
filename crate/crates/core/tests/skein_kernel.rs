//! Jones-Wenzl idempotents, the expansion and degree lemmas, and the
//! relation between the cabled diagram and the all-B skein diagram.

mod common;

use common::{knot, random_skein};
use rand::rngs::StdRng;
use rand::SeedableRng;
use skeintail::cjp::verify_mainlemma;
use skeintail::laurent::delta;
use skeintail::tl::{
    jones_wenzl, verify_junkterms, verify_local_tail_identity, Matching, TLElement,
};

#[test]
fn jones_wenzl_up_to_six() {
    for n in 1..=6 {
        let f = jones_wenzl(n).unwrap();
        assert_eq!(f.mul(&f).unwrap(), *f, "idempotent n={n}");
        for i in 1..n {
            let e = TLElement::e(n, i).unwrap();
            assert!(e.mul(&f).unwrap().is_zero(), "hook e_{i} below f^({n})");
            assert!(f.mul(&e).unwrap().is_zero(), "hook e_{i} above f^({n})");
        }
        let ratio = &delta(n as i32).unwrap() / &delta(n as i32 - 1).unwrap();
        assert_eq!(
            f.partial_trace().unwrap(),
            jones_wenzl(n - 1).unwrap().scale(&ratio),
            "partial trace n={n}"
        );
    }
}

#[test]
fn junkterms_up_to_six_strands() {
    let mut count = 0;
    for a in 1..=5 {
        for b in 1..=(6 - a) {
            assert!(verify_junkterms(a, b).unwrap(), "a={a} b={b}");
            count += 1;
        }
    }
    assert_eq!(count, 15);
}

#[test]
fn local_tail_identity_on_adequate_closures() {
    for n in 1..=2 {
        let mut adequate = 0;
        for bands in Matching::enumerate(3) {
            match verify_local_tail_identity(n, &bands) {
                Ok(ok) => {
                    assert!(ok, "n={n} closure {bands}");
                    adequate += 1;
                }
                Err(skeintail::Error::NotAdequate(_)) => {}
                Err(e) => panic!("n={n} closure {bands}: {e}"),
            }
        }
        assert!(adequate >= 1, "some closure is adequate at n={n}");
    }
}

#[test]
fn cabled_value_agrees_with_all_b_skein() {
    for (name, n_max) in [("ltrefoil", 2), ("rtrefoil", 2), ("6_2", 1), ("figure8", 1)] {
        for n in 1..=n_max {
            assert!(verify_mainlemma(&knot(name), n).unwrap(), "{name} n={n}");
        }
    }
    assert!(verify_mainlemma(&knot("kink_pos"), 1).is_err(), "needs B-adequacy");
}

#[test]
fn degree_lemma_on_random_diagrams() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut adequate, mut inadequate) = (0, 0);
    for _ in 0..20000 {
        if adequate >= 25 && inadequate >= 25 {
            break;
        }
        let s = random_skein(&mut rng);
        let r = s.check_degree_lemma().unwrap();
        let Some(degree) = r.degree else { continue };
        assert_eq!(r.inequality_holds, Some(true), "{}", s.to_json());
        if r.adequate {
            assert_eq!(degree, -2 * r.bar_circles as i32, "{}", s.to_json());
            adequate += 1;
        } else {
            inadequate += 1;
        }
    }
    assert!(adequate >= 20, "only {adequate} adequate samples");
    assert!(inadequate >= 20, "only {inadequate} inadequate samples");
}
