//! Kauffman states, state graphs, adequacy and the tail-preserving move.

mod graph;
mod ops;
mod smoothing;

pub use graph::{cycle_rank, reduce_graph, ReducedGraph, StateGraph};
pub use ops::{
    all_state, beta_a, decompose, diagram_state_graph, is_adequate, is_fibered_criterion,
    main_theorem_move, recover_link, reduced_a_graph, state_graph, swap_adjacent,
    tail_normal_form,
};
pub use smoothing::{ChordSide, FaceRef, Slot, SmoothingDiagram, StateKind};

#[cfg(test)]
mod tests;
