//! Normalized lowest coefficients of J_N for mirror 10_154 against the
//! published table, stored as a golden file.

mod common;

use serde::Deserialize;
use skeintail::cjp::reduced_cjp;
use skeintail::tail::stabilization_report;

const GOLDEN: &str = include_str!("../data/golden/10_154m_table.json");

#[derive(Deserialize)]
struct Row {
    #[serde(rename = "N")]
    big_n: usize,
    prefix: Vec<i64>,
}

#[derive(Deserialize)]
struct Golden {
    knot: String,
    q_flip: bool,
    rows: Vec<Row>,
    tail: Vec<i64>,
}

fn golden() -> Golden {
    serde_json::from_str(GOLDEN).unwrap()
}

fn check_row(big_n: usize) {
    let g = golden();
    assert!(!g.q_flip, "no convention flip is recorded");
    let row = g.rows.iter().find(|r| r.big_n == big_n).unwrap();
    let d = common::knot(&g.knot);
    // a recorded flip would mean reading J(1/q), the mirror's polynomial
    let d = if g.q_flip { d.mirror() } else { d };
    let j = reduced_cjp(&d, big_n).unwrap();
    let got: Vec<i64> = j
        .lowest(row.prefix.len())
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect();
    assert_eq!(got, row.prefix, "N={big_n}");
}

#[test]
fn row_2() {
    check_row(2);
}

#[test]
fn row_3() {
    check_row(3);
}

#[test]
fn row_4() {
    check_row(4);
}

/// About a minute in release mode; run by the acceptance target.
#[test]
#[ignore]
fn row_5() {
    check_row(5);
}

#[test]
fn rows_stabilize() {
    let g = golden();
    let rep = stabilization_report(&common::knot(&g.knot), 4).unwrap();
    assert_eq!(rep.rows.len(), 3);
    for r in &rep.rows {
        assert!(r.agrees, "N={}", r.big_n);
        assert!(r.unreduced_agrees, "N={}", r.big_n);
        assert_eq!(r.this[..], g.tail[..r.big_n]);
    }
}

#[test]
fn golden_rows_agree_with_the_tail() {
    let g = golden();
    for (a, b) in g.rows.iter().zip(&g.rows[1..]) {
        assert_eq!(a.prefix[..a.big_n], b.prefix[..a.big_n], "N={}", a.big_n);
        assert_eq!(a.prefix[..a.big_n], g.tail[..a.big_n.min(g.tail.len())]);
    }
}
