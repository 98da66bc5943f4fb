use super::*;
use crate::diagram::parse_pd;

const LEFT_TREFOIL: &str = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]";

#[test]
fn trefoil_states() {
    let left = parse_pd(LEFT_TREFOIL).unwrap();
    let right = left.mirror();
    let sa = all_state(&right, StateKind::A).unwrap();
    assert_eq!((sa.num_circles(), sa.num_chords()), (2, 3));
    let g = state_graph(&sa);
    assert_eq!(g.edges.len(), 3);
    let r = g.reduce().unwrap();
    assert_eq!(r.num_edges(), 1);
    assert!(r.is_tree());
    let la = all_state(&left, StateKind::A).unwrap();
    assert_eq!(la.num_circles(), 3);
    let r = state_graph(&la).reduce().unwrap();
    assert_eq!((r.num_edges(), r.cycle_rank()), (3, 1));
    assert!(is_fibered_criterion(&right).unwrap());
    assert!(!is_fibered_criterion(&left).unwrap());
    let rb = all_state(&right, StateKind::B).unwrap();
    assert!(rb.same_embedding(&la) || rb.num_circles() == la.num_circles());
}

#[test]
fn kinks() {
    let pos = parse_pd("X[1,1,2,2]").unwrap();
    assert!(is_adequate(&pos, StateKind::A));
    assert!(!is_adequate(&pos, StateKind::B));
    let neg = parse_pd("X[1,2,2,1]").unwrap();
    assert!(!is_adequate(&neg, StateKind::A));
    assert!(matches!(is_fibered_criterion(&neg), Err(crate::Error::NotAdequate(_))));
}

#[test]
fn recover_round_trip() {
    let left = parse_pd(LEFT_TREFOIL).unwrap();
    let f8 = parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]").unwrap();
    for d in [left.clone(), left.mirror(), f8.clone(), f8.mirror()] {
        for kind in [StateKind::A, StateKind::B] {
            let s = all_state(&d, kind).unwrap();
            let back = recover_link(&s, kind).unwrap();
            assert_eq!(back.num_crossings(), d.num_crossings());
            assert_eq!(back.writhe(), d.writhe(), "{d:?} {kind:?} -> {back:?}");
            let s2 = all_state(&back, kind).unwrap();
            assert_eq!(state_graph(&s2).reduce().unwrap().degree_sequence(),
                state_graph(&s).reduce().unwrap().degree_sequence());
        }
    }
    let one = SmoothingDiagram::new(StateKind::A, vec![Vec::new()], None).unwrap();
    let u = recover_link(&one, StateKind::A).unwrap();
    assert_eq!((u.num_crossings(), u.num_components()), (0, 1));
}

#[test]
fn realizability() {
    // two chords between two circles, interleaved on one side: not planar
    let l = ChordSide::Left;
    let r = ChordSide::Right;
    let s = |chord, side| Slot { chord, side };
    assert!(SmoothingDiagram::new(StateKind::A, vec![vec![s(0, l), s(1, l)], vec![s(0, r), s(1, r)]], None).is_ok());
    let bad = SmoothingDiagram::new(
        StateKind::A,
        vec![vec![s(0, l), s(1, l), s(0, l), s(1, l)]],
        None,
    );
    assert!(bad.is_err());
}

#[test]
fn json_round_trip() {
    let d = parse_pd(LEFT_TREFOIL).unwrap();
    let s = all_state(&d, StateKind::A).unwrap();
    let back = SmoothingDiagram::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
}
