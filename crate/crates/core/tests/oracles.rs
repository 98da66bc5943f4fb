//! Library values against brute-force state sums and closed formulas.

mod common;

use common::*;
use skeintail::cjp::{reduced_cjp, unreduced_cjp};
use skeintail::diagram::{cable, PlanarDiagram};
use skeintail::laurent::{loop_value, LaurentPoly};

#[test]
fn jones_matches_state_sum_on_corpus() {
    let corpus = corpus();
    let mut checked = 0;
    for e in corpus.entries() {
        if e.diagram.num_crossings() > 10 {
            continue;
        }
        let j = reduced_cjp(&e.diagram, 2).unwrap();
        assert_eq!(j.reduced, jones_oracle(&e.diagram), "J_2 of {}", e.name);
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn skein_value_matches_state_sum() {
    for name in ["ltrefoil", "figure8", "6_2", "hopf", "kink_pos", "kink_neg"] {
        let d = knot(name);
        assert_eq!(unreduced_cjp(&d, 1).unwrap(), skein_bracket(&d), "{name}");
    }
}

/// `f^(2) = 1 - e_1 / d`, expanded by hand on the 2-cable.
fn two_cable_oracle(d: &PlanarDiagram) -> LaurentPoly {
    let p = cable(d, 2).unwrap();
    let c = &p.cabled;
    let plain = skein_bracket(c);
    let slot = |(i, k): (usize, usize)| 4 * i + k;
    let mut glue = Vec::new();
    let boxed: Vec<u32> = p.markers.iter().flat_map(|m| m.labels.clone()).collect();
    for label in c.edge_labels() {
        if !boxed.contains(&label) {
            let ends = c.edge_ends(label).unwrap();
            glue.push((slot(ends.tail), slot(ends.head)));
        }
    }
    for m in &p.markers {
        let (a, b) = (c.edge_ends(m.labels[0]).unwrap(), c.edge_ends(m.labels[1]).unwrap());
        glue.push((slot(a.tail), slot(b.tail)));
        glue.push((slot(a.head), slot(b.head)));
    }
    assert_eq!(p.markers.len(), 1, "one component");
    let hooked = state_sum(c.crossings(), &glue, c.loops().len());
    // d * J~_2 = d * <plain> - <hooked>
    &(&loop_value() * &plain) - &hooked
}

#[test]
fn two_cable_matches_expanded_idempotent() {
    for name in ["ltrefoil", "rtrefoil", "figure8"] {
        let d = knot(name);
        let j = unreduced_cjp(&d, 2).unwrap();
        assert_eq!(&loop_value() * &j, two_cable_oracle(&d), "{name}");
    }
}

#[test]
fn figure_eight_cyclotomic_expansion() {
    let d = knot("figure8");
    for big_n in 1..=5 {
        let j = reduced_cjp(&d, big_n as usize).unwrap();
        assert_eq!(j.reduced, figure_eight_closed_form(big_n), "N={big_n}");
    }
}

#[test]
fn unknot_diagrams_are_trivial() {
    for big_n in 1..=7 {
        assert!(reduced_cjp(&knot("unknot"), big_n).unwrap().reduced.is_one());
    }
    for name in ["kink_pos", "kink_neg"] {
        for big_n in 1..=5 {
            assert!(reduced_cjp(&knot(name), big_n).unwrap().reduced.is_one(), "{name} N={big_n}");
        }
    }
}

#[test]
fn mirror_inverts_q() {
    for e in corpus().entries() {
        let (name, d) = (&e.name, &e.diagram);
        for big_n in 2..=4 {
            let j = reduced_cjp(&d, big_n).unwrap().reduced;
            let jm = reduced_cjp(&d.mirror(), big_n).unwrap().reduced;
            assert_eq!(jm, j.invert_variable(), "{name} N={big_n}");
        }
    }
}

#[test]
fn connected_sum_multiplies() {
    let pairs = [("ltrefoil", "figure8"), ("rtrefoil", "ltrefoil"), ("figure8", "figure8")];
    for (a, b) in pairs {
        let (da, db) = (knot(a), knot(b));
        // the site should not matter
        for (ea, eb) in [(1, 1), (2, 3)] {
            let sum = da.connected_sum(&db, ea, eb).unwrap();
            for big_n in 2..=3 {
                let j = reduced_cjp(&sum, big_n).unwrap().reduced;
                let ja = reduced_cjp(&da, big_n).unwrap().reduced;
                let jb = reduced_cjp(&db, big_n).unwrap().reduced;
                assert_eq!(j, &ja * &jb, "{a}#{b} at ({ea},{eb}) N={big_n}");
            }
        }
    }
}
