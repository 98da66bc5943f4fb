use super::*;
use crate::diagram::parse_pd;

const LEFT: &str = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]";

#[test]
fn unknot_tail_is_one() {
    for order in 1..=4 {
        let t = tail(&PlanarDiagram::unknot(), order).unwrap();
        assert_eq!(t.coefficients[0], 1);
        assert!(t.is_trivial());
        assert_eq!(t.colors_used, vec![order, order + 1]);
    }
}

#[test]
fn trefoils() {
    let l = parse_pd(LEFT).unwrap();
    let r = l.mirror();
    let tr = tail(&r, 4).unwrap();
    assert_eq!(tr.coefficients, vec![1, 0, 0, 0]);
    assert_eq!(tr.to_string(), "1 + 0q + 0q^2 + 0q^3");
    let tl = tail(&l, 3).unwrap();
    assert_eq!(tl.coefficients, vec![1, -1, -1]);
    assert_eq!(head(&l, 3).unwrap().coefficients, vec![1, 0, 0]);
    assert!(!tails_equal(&l, &r, 2).unwrap());
    assert!(tails_equal(&l, &l, 2).unwrap());
    assert_eq!(
        tl.to_json(),
        r#"{"coefficients":[1,-1,-1],"order":3,"colors_used":[3,4],"stable":true}"#
    );
}

#[test]
fn inadequate_diagrams_are_refused() {
    let kink = parse_pd("X[1,2,2,1]").unwrap();
    assert!(matches!(tail(&kink, 2), Err(Error::NotAdequate(_))));
    assert!(matches!(stabilization_report(&kink, 3), Err(Error::NotAdequate(_))));
    // the mirror of the other kink is this one
    assert!(matches!(head(&parse_pd("X[1,1,2,2]").unwrap(), 2), Err(Error::NotAdequate(_))));
    assert!(tail(&PlanarDiagram::unknot(), 0).is_err());
}

#[test]
fn stabilization_rows() {
    let rep = stabilization_report(&PlanarDiagram::unknot(), 4).unwrap();
    assert_eq!(rep.rows.len(), 3);
    assert!(rep.all_agree());
    let rep = stabilization_report(&parse_pd(LEFT).unwrap(), 4).unwrap();
    assert!(rep.all_agree());
    assert_eq!(rep.rows[2].this, vec![1, -1, -1]);
}

#[test]
fn budget_is_enforced() {
    let l = parse_pd(LEFT).unwrap();
    assert!(matches!(tail_with_budget(&l, 3, 2), Err(Error::Resource(_))));
}
