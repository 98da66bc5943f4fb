//! Splits all-A states into the reduced graphs that determine the tail.

use skeintail::cli::Corpus;
use skeintail::states::{all_state, tail_normal_form, StateKind};

fn main() -> skeintail::Result<()> {
    let corpus = Corpus::builtin();
    for name in ["ltrefoil", "figure8", "granny", "square", "10_154m", "10_154m_moved"] {
        let s = all_state(corpus.diagram(name)?, StateKind::A)?;
        match tail_normal_form(&s) {
            Ok(pieces) => {
                let shapes: Vec<String> =
                    pieces.iter().map(|g| format!("{}v{}e", g.vertices, g.num_edges())).collect();
                println!("{name}: {}", shapes.join(" + "));
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
    Ok(())
}
