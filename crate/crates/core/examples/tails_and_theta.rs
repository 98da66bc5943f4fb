//! Tails of A-adequate knots next to products of `f(-q^2, -q)`.

use skeintail::cli::{theta_product, Corpus};
use skeintail::tail::{head, tail};

fn main() -> skeintail::Result<()> {
    let corpus = Corpus::builtin();
    for (name, order, power) in [("rtrefoil", 4, 0), ("ltrefoil", 5, 1), ("granny", 3, 2), ("10_154m", 4, 2)] {
        let d = corpus.diagram(name)?;
        let t = tail(d, order)?;
        let f = theta_product(power, order)?;
        let mark = if t.coefficients == f.coefficients { "=" } else { "!=" };
        println!("tail({name}) = {t}  {mark}  f(-q^2,-q)^{power} = {f}");
    }
    // the head of a knot is the tail of its mirror
    let d = corpus.diagram("figure8")?;
    println!("figure8: tail {}, head {}", tail(d, 3)?, head(d, 3)?);
    println!("f(-q^2,-q)^2 to order 8: {}", theta_product(2, 8)?);
    Ok(())
}
