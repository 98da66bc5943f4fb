//! Normalized colored Jones polynomials of a named knot, lowest powers first.
//!
//! `cargo run --release --example colored_jones -- 10_154m 4`

use skeintail::cjp::{predicted_cost, reduced_cjp};
use skeintail::cli::Corpus;

fn main() -> skeintail::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "10_154m".into());
    let n_max: usize = args.next().map_or(4, |s| s.parse().expect("color must be an integer"));
    let corpus = Corpus::builtin();
    let d = corpus.diagram(&name)?;
    for big_n in 1..=n_max {
        let (width, cost) = predicted_cost(d, big_n - 1)?;
        let j = reduced_cjp(d, big_n)?;
        println!("{name} N={big_n} (width {width}, cost {cost}): {}", j.render(big_n + 4));
    }
    Ok(())
}
