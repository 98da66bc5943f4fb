//! The all-A state of mirror 10_154 drawn in the plane, the local move that
//! produces the second drawing, and the pieces of the tail normal form.

mod common;

use common::*;
use skeintail::cli::theta_product;
use skeintail::states::*;
use skeintail::tail::tail;

const STATE: &str = include_str!("../data/states/10_154m_A.json");
const MOVED: &str = include_str!("../data/states/10_154m_moved_A.json");

fn original() -> SmoothingDiagram {
    SmoothingDiagram::from_drawing(StateKind::A, &CIRCLES_10_154M, &CHORDS_10_154M).unwrap()
}

fn moved() -> SmoothingDiagram {
    SmoothingDiagram::from_drawing(StateKind::A, &CIRCLES_10_154M, &chords_10_154m_moved()).unwrap()
}

fn triangle() -> ReducedGraph {
    ReducedGraph {
        vertices: 3,
        edges: [(0, 1), (0, 2), (1, 2)].into_iter().collect(),
    }
}

#[test]
fn fixtures_match_the_drawings() {
    assert_eq!(SmoothingDiagram::from_json(STATE).unwrap(), original());
    assert_eq!(SmoothingDiagram::from_json(MOVED).unwrap(), moved());
}

#[test]
fn drawing_recovers_the_corpus_link() {
    let s = original();
    assert_eq!((s.num_circles(), s.num_chords()), (5, 10));
    assert!(s.is_adequate());
    let d = recover_link(&s, StateKind::A).unwrap();
    assert_eq!(d, knot("10_154m"));
    assert_eq!(d.writhe(), -10);
    assert!(is_adequate(&d, StateKind::A) && is_adequate(&d, StateKind::B));
    assert_eq!(recover_link(&moved(), StateKind::A).unwrap(), knot("10_154m_moved"));
    assert_eq!(recover_link(&s, StateKind::B).unwrap(), d.mirror());
}

#[test]
fn state_graph_of_10_154m() {
    let d = knot("10_154m");
    let g = diagram_state_graph(&d, StateKind::A);
    assert_eq!(g.vertices, 5);
    assert_eq!(g.num_edges(), 10);
    assert!(!g.has_loop());
    let r = g.reduce().unwrap();
    // two triangles sharing one vertex
    assert_eq!(r.num_edges(), 6);
    assert_eq!(r.degree_sequence(), vec![2, 2, 2, 2, 4]);
    assert_eq!(r.cycle_rank(), 2);
    assert_eq!(beta_a(&d).unwrap(), 2);
    assert!(!is_fibered_criterion(&d).unwrap());
    assert!(r.is_isomorphic(&state_graph(&original()).reduce().unwrap()));
}

#[test]
fn two_slides_reach_the_moved_drawing() {
    let s = original();
    // chord 7 across chords 6 and 2 of the outer circle, then chord 5
    // across chords 6 and 2 the other way round
    let s1 = main_theorem_move(&s, 7, (0, 2)).unwrap();
    let at = s1.circles()[0].iter().position(|x| x.chord == 5).unwrap();
    assert_eq!(at, 7);
    let s2 = main_theorem_move(&s1, 5, (0, 1)).unwrap();
    assert!(s2.same_embedding(&moved()));
    assert!(!s.same_embedding(&moved()));
    for t in [&s1, &s2] {
        assert_eq!(t.num_circles(), s.num_circles());
        assert_eq!(t.num_chords(), s.num_chords());
        assert!(is_adequate(&recover_link(t, StateKind::A).unwrap(), StateKind::A));
    }
    // and back again
    let back = main_theorem_move(&main_theorem_move(&s2, 5, (0, 7)).unwrap(), 7, (0, 0)).unwrap();
    assert!(back.same_embedding(&s));
}

#[test]
fn invalid_slides_are_rejected() {
    let s = original();
    // chords 9 and 8 both leave the outer circle inwards
    let at9 = s.circles()[0].iter().position(|x| x.chord == 9).unwrap();
    assert!(matches!(swap_adjacent(&s, 0, at9), Err(skeintail::Error::InvalidMove(_))));
    // circle 1 carries only outside chords
    assert!(main_theorem_move(&s, 4, (1, 0)).is_err());
    assert!(main_theorem_move(&s, 42, (0, 0)).is_err());
    assert!(main_theorem_move(&s, 3, (0, 0)).is_err());
}

#[test]
fn moved_link_has_the_same_tail() {
    let (d, e) = (knot("10_154m"), knot("10_154m_moved"));
    assert_ne!(d, e);
    for order in 1..=3 {
        assert_eq!(tail(&d, order).unwrap(), tail(&e, order).unwrap(), "order {order}");
    }
    assert_eq!(tail(&e, 3).unwrap().coefficients, vec![1, -2, -1]);
}

#[test]
fn tail_normal_form_pieces() {
    let pieces = tail_normal_form(&original()).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|g| g.is_isomorphic(&triangle())));
    let granny = tail_normal_form(&all_state(&knot("granny"), StateKind::A).unwrap()).unwrap();
    assert_eq!(granny.len(), 2);
    assert!(granny.iter().all(|g| g.is_isomorphic(&triangle())));
    let f8 = tail_normal_form(&all_state(&knot("figure8"), StateKind::A).unwrap()).unwrap();
    assert_eq!(f8.len(), 1);
    assert!(matches!(
        tail_normal_form(&all_state(&knot("kink_neg"), StateKind::A).unwrap()),
        Err(skeintail::Error::NotAdequate(_))
    ));
}

#[test]
fn normal_form_predicts_tails() {
    // triangles contribute f(-q^2,-q), trees contribute 1
    for (name, order) in [("10_154m", 3), ("granny", 3), ("ltrefoil", 4), ("rtrefoil", 3), ("5_1", 3)] {
        let d = knot(name);
        let pieces = tail_normal_form(&all_state(&d, StateKind::A).unwrap()).unwrap();
        let power = pieces.iter().filter(|g| g.is_isomorphic(&triangle())).count();
        assert!(pieces.iter().all(|g| g.is_tree() || g.is_isomorphic(&triangle())), "{name}");
        let expected = theta_product(power as u32, order).unwrap();
        assert_eq!(tail(&d, order).unwrap().coefficients, expected.coefficients, "{name}");
    }
}

#[test]
fn smoothing_json_round_trip() {
    let s = original();
    let back = SmoothingDiagram::from_json(&s.to_json()).unwrap();
    assert!(back.same_embedding(&s));
    assert_eq!(back, s);
}
