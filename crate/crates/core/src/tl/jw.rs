//! Jones-Wenzl idempotents by the Wenzl recursion, memoized per size.

use std::sync::{Arc, OnceLock};

use super::element::{ScaledElement, TLElement};
use crate::error::{Error, Result};
use crate::laurent::delta;

/// Largest idempotent size the library will build.
pub const N_MAX: usize = 8;

static JW: [OnceLock<Arc<TLElement>>; N_MAX + 1] = [const { OnceLock::new() }; N_MAX + 1];
static JW_SCALED: [OnceLock<Arc<ScaledElement>>; N_MAX + 1] =
    [const { OnceLock::new() }; N_MAX + 1];

fn check_cap(n: usize) -> Result<()> {
    if n > N_MAX {
        return Err(Error::Resource(format!(
            "Jones-Wenzl idempotent of size {n} exceeds the cap {N_MAX}"
        )));
    }
    Ok(())
}

/// `f^(n)` in `TL_n`. `f^(0)` is the empty diagram.
pub fn jones_wenzl(n: usize) -> Result<Arc<TLElement>> {
    check_cap(n)?;
    if let Some(f) = JW[n].get() {
        return Ok(f.clone());
    }
    let f = if n <= 1 {
        TLElement::identity(n)
    } else {
        let prev = jones_wenzl(n - 1)?;
        wenzl_step(&prev)?
    };
    // another thread may have won the race; keep its value
    Ok(JW[n].get_or_init(|| Arc::new(f)).clone())
}

/// One step of the recursion: from `f^(k)` to `f^(k+1)`.
fn wenzl_step(f: &TLElement) -> Result<TLElement> {
    let k = f.n();
    let t = f.tensor(&TLElement::identity(1));
    let ratio = &delta(k as i32 - 1)? / &delta(k as i32)?;
    let hook = t.mul(&TLElement::e(k + 1, k)?)?.mul(&t)?;
    t.sub(&hook.scale(&ratio))
}

/// `f^(n)` over a common integer denominator, for the sweep evaluator.
pub fn jones_wenzl_scaled(n: usize) -> Result<Arc<ScaledElement>> {
    check_cap(n)?;
    if let Some(f) = JW_SCALED[n].get() {
        return Ok(f.clone());
    }
    let s = jones_wenzl(n)?.to_scaled()?;
    Ok(JW_SCALED[n].get_or_init(|| Arc::new(s)).clone())
}

