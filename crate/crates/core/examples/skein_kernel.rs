//! Jones-Wenzl idempotents in the Temperley-Lieb algebra and the identities
//! the tail argument rests on.

use skeintail::cjp::verify_mainlemma;
use skeintail::cli::Corpus;
use skeintail::tl::{jones_wenzl, verify_junkterms, TLElement};

fn main() -> skeintail::Result<()> {
    for n in 1..=5 {
        let f = jones_wenzl(n)?;
        let killed = (1..n).all(|i| TLElement::e(n, i).and_then(|e| e.mul(&f)).is_ok_and(|x| x.is_zero()));
        println!("f^({n}): {} basis terms, idempotent {}, hooks vanish {killed}", f.num_terms(), f.mul(&f)? == *f);
    }
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        println!("junk terms a={a} b={b}: {}", verify_junkterms(a, b)?);
    }
    let corpus = Corpus::builtin();
    for (name, n) in [("ltrefoil", 2), ("6_2", 1)] {
        println!("{name}: cable agrees with all-B skein diagram at n={n}: {}", verify_mainlemma(corpus.diagram(name)?, n)?);
    }
    Ok(())
}
