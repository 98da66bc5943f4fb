use super::*;
use crate::diagram::parse_pd;

const LEFT_TREFOIL: &str = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]";

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn unknot_values() {
    let u = PlanarDiagram::unknot();
    for n in 0..=4 {
        let v = unreduced_cjp(&u, n).unwrap();
        assert_eq!(v, delta_poly(n as i32).unwrap());
        assert!(reduced_cjp(&u, n + 1).unwrap().reduced.is_one());
    }
}

#[test]
fn trefoil_jones() {
    let right = parse_pd(LEFT_TREFOIL).unwrap().mirror();
    let j = reduced_cjp(&right, 2).unwrap();
    // q + q^3 - q^4
    assert_eq!(j.q_terms(), vec![(4, 1.into()), (12, 1.into()), (16, (-1).into())]);
    assert_eq!(j.lowest(3), ints(&[1, 0, 1]));
    let left = reduced_cjp(&right.mirror(), 2).unwrap();
    assert_eq!(left.reduced, j.reduced.invert_variable());
}

#[test]
fn sb_of_trefoil() {
    let right = parse_pd(LEFT_TREFOIL).unwrap().mirror();
    assert!(verify_mainlemma(&right, 1).unwrap());
    assert!(s_b_diagram(&parse_pd("X[1,1,2,2]").unwrap(), 1).is_err());
    assert!(s_b_diagram(&right, 0).unwrap().evaluate_closed().unwrap().is_one());
}
