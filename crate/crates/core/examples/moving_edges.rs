//! Slides two chords of a planar drawing of the all-A state of mirror 10_154
//! along their circle, rebuilds the link, and compares tails.

use skeintail::cli::Corpus;
use skeintail::states::{main_theorem_move, recover_link, SmoothingDiagram, StateKind};
use skeintail::tail::tail;

fn main() -> skeintail::Result<()> {
    let corpus = Corpus::builtin();
    let d = corpus.diagram("10_154m")?;
    let s = SmoothingDiagram::from_json(include_str!("../data/states/10_154m_A.json"))?;
    println!("drawing rebuilds the corpus diagram: {}", &recover_link(&s, StateKind::A)? == d);
    println!("all-A state: {} circles, {} chords", s.num_circles(), s.num_chords());
    // chord 7 to position 2 of circle 0, then chord 5 next to it
    let s1 = main_theorem_move(&s, 7, (0, 2))?;
    let s2 = main_theorem_move(&s1, 5, (0, 1))?;
    let moved = recover_link(&s2, StateKind::A)?;
    println!("moved diagram: {moved}");
    let target = SmoothingDiagram::from_json(include_str!("../data/states/10_154m_moved_A.json"))?;
    println!("same embedding as the 10_154m_moved drawing: {}", s2.same_embedding(&target));
    println!("tail before: {}", tail(d, 3)?);
    println!("tail after:  {}", tail(&moved, 3)?);
    Ok(())
}
