//! Temperley-Lieb algebra, Jones-Wenzl idempotents and closed skein
//! evaluation.

mod element;
mod jw;
mod matching;
mod network;
mod skein;
mod verify;

pub use element::{ScaledElement, TLElement};
pub use jw::{jones_wenzl, jones_wenzl_scaled, N_MAX};
pub use matching::{catalan, Matching};
pub use network::{
    default_budget, Network, SweepPlan, SweepStats, VertexKind, BUDGET_ENV, DEFAULT_BUDGET,
};
pub use skein::{DegreeReport, Layer, Node, Port, Side, SkeinArc, SkeinDiagram};
pub use verify::{
    cable_closure, junkterms_sides, local_pictures, verify_junkterms, verify_local_tail_identity,
};

#[cfg(test)]
mod tests;
