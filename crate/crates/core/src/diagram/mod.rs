//! Oriented link diagrams in PD form and their cables.

mod cable;
mod pd;

pub use cable::{cable, cable_label, BoxMarker, CablePattern};
pub use pd::{parse_pd, EdgeEnds, PlanarDiagram, Slot};

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]";

    #[test]
    fn trefoil_parses() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.num_edges(), 6);
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.mirror().writhe(), 3);
        assert_eq!(parse_pd(&format!("PD[{TREFOIL}]")).unwrap(), d);
    }

    #[test]
    fn arity_error() {
        assert!(matches!(parse_pd("X[1,2,3]"), Err(crate::Error::Parse(_))));
        assert!(parse_pd("X[1,2,3,4]").is_err());
    }

    #[test]
    fn empty_and_loops() {
        let d = parse_pd("").unwrap();
        assert_eq!(d.num_components(), 0);
        let u = parse_pd("Loop[1]").unwrap();
        assert_eq!(u.num_components(), 1);
        assert_eq!(u.writhe(), 0);
    }

    #[test]
    fn mirror_involution() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.mirror().mirror(), d);
        let f8 = parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]").unwrap();
        assert_eq!(f8.writhe(), 0);
        assert_eq!(f8.mirror().mirror(), f8);
    }

    #[test]
    fn kinks() {
        let p = parse_pd("X[1,1,2,2]").unwrap();
        let n = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(p.writhe(), 1);
        assert_eq!(n.writhe(), -1);
    }

    #[test]
    fn inconsistent_orientation() {
        // edge 1 is the incoming under-strand at both of its ends
        let e = parse_pd("X[1,2,3,4], X[1,4,3,2]");
        assert!(e.is_err(), "{e:?}");
    }

    #[test]
    fn connected_sum_granny() {
        let r = parse_pd(TREFOIL).unwrap().mirror();
        let g = r.connected_sum(&r, 1, 1).unwrap();
        assert_eq!(g.num_crossings(), 6);
        assert_eq!(g.num_components(), 1);
        assert_eq!(g.writhe(), 6);
    }

    #[test]
    fn cable_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        let c = cable(&d, 2).unwrap();
        assert_eq!(c.cabled.num_crossings(), 12);
        assert_eq!(c.cabled.writhe(), 4 * d.writhe());
        assert_eq!(c.cabled.num_components(), 2);
        assert_eq!(c.markers.len(), 1);
        assert_eq!(c.markers[0].labels, vec![1, 2]);
        let c1 = cable(&d, 1).unwrap();
        assert_eq!(c1.cabled, d);
        let c3 = cable(&d, 3).unwrap();
        assert_eq!(c3.cabled.num_components(), 3);
        assert_eq!(c3.cabled.num_crossings(), 27);
        let c0 = cable(&d, 0).unwrap();
        assert_eq!(c0.cabled, PlanarDiagram::empty());
        assert!(c0.markers.is_empty());
    }

    #[test]
    fn cable_of_loop() {
        let c = cable(&PlanarDiagram::unknot(), 3).unwrap();
        assert_eq!(c.cabled.num_components(), 3);
        assert_eq!(c.markers[0].labels, vec![1, 2, 3]);
    }
}
