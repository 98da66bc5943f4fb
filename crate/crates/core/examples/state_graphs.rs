//! Adequacy, reduced all-A graphs and the fiberedness criterion over the
//! built-in corpus.

use skeintail::cli::Corpus;
use skeintail::states::{beta_a, diagram_state_graph, is_adequate, StateKind};

fn main() -> skeintail::Result<()> {
    println!("{:<15} {:>3} {:>3} {:>6} {:>6} {:>5}", "knot", "A", "B", "G'_A", "beta_A", "tree");
    for e in Corpus::builtin().entries() {
        let d = &e.diagram;
        let (a, b) = (is_adequate(d, StateKind::A), is_adequate(d, StateKind::B));
        let yn = |x: bool| if x { "yes" } else { "no" };
        if !a {
            println!("{:<15} {:>3} {:>3}", e.name, yn(a), yn(b));
            continue;
        }
        let g = diagram_state_graph(d, StateKind::A).reduce()?;
        let shape = format!("{}v{}e", g.vertices, g.num_edges());
        println!(
            "{:<15} {:>3} {:>3} {:>6} {:>6} {:>5}",
            e.name, yn(a), yn(b), shape, beta_a(d)?, yn(g.is_tree())
        );
    }
    Ok(())
}
