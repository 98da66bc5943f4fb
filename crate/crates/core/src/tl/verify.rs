//! Exact checks of two identities behind the tail theorems.

use super::element::TLElement;
use super::jw::{jones_wenzl, N_MAX};
use super::matching::Matching;
use super::skein::{Layer, SkeinDiagram};
use crate::error::{Error, Result};
use crate::laurent::{delta, dot_eq_n, RationalFn};

/// Both sides of the expansion of `f^(a+b)` that peels `f^(a)` off the
/// right: `f^(a+b)` and
/// `P (f^(m-1) x 1) + (-1)^a (D_{b-1} / D_{m-1}) P T`, where
/// `P = 1_b x f^(a)` and `T = (f^(b) x 1_a) e_b e_{b+1} ... e_{m-1} (f^(m-1) x 1)`.
pub fn junkterms_sides(a: usize, b: usize) -> Result<(TLElement, TLElement)> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("a and b must be at least 1".into()));
    }
    let m = a + b;
    if m > N_MAX {
        return Err(Error::Resource(format!("a + b = {m} exceeds the cap {N_MAX}")));
    }
    let lhs = (*jones_wenzl(m)?).clone();
    let p = TLElement::identity(b).tensor(&*jones_wenzl(a)?);
    let f_prev = (*jones_wenzl(m - 1)?).tensor(&TLElement::identity(1));
    let mut t = jones_wenzl(b)?.tensor(&TLElement::identity(a));
    for i in b..m {
        t = t.mul(&TLElement::e(m, i)?)?;
    }
    let t = t.mul(&f_prev)?;
    let sign = if a % 2 == 0 { 1 } else { -1 };
    let coef = &RationalFn::from_int(sign) * &(&delta(b as i32 - 1)? / &delta(m as i32 - 1)?);
    let rhs = p.mul(&f_prev)?.add(&p.mul(&t)?.scale(&coef))?;
    Ok((lhs, rhs))
}

/// Checks the expansion coefficient by coefficient in `TL_{a+b}`.
pub fn verify_junkterms(a: usize, b: usize) -> Result<bool> {
    let (lhs, rhs) = junkterms_sides(a, b)?;
    Ok(lhs == rhs)
}

/// Expands a closure of the six band ends (a matching in `TL_3`) to a
/// closure of `6n` strand ends; each band pair is joined by `n` parallel
/// strands.
pub fn cable_closure(bands: &Matching, n: usize) -> Result<Matching> {
    let k = bands.n();
    let total = k * n;
    let mut partner = vec![0u8; 2 * total];
    for pb in 0..2 * k {
        let qb = Matching::cyclic_position(k, bands.partner(Matching::point_at(k, pb)));
        for i in 0..n {
            let p = Matching::point_at(total, pb * n + i);
            let q = Matching::point_at(total, qb * n + (n - 1 - i));
            partner[p] = q as u8;
        }
    }
    Matching::from_partners(total, partner)
}

/// The two local pictures on three bands of colour `n`, as stacked layers
/// from bottom to top: idempotents of size `2n` on bands (L, M) and (M, R)
/// in the two possible orders.
pub fn local_pictures(n: usize) -> [Vec<Layer>; 2] {
    let left = vec![Layer::Box { pos: n, size: 2 * n }, Layer::Box { pos: 0, size: 2 * n }];
    let right = vec![Layer::Box { pos: 0, size: 2 * n }, Layer::Box { pos: n, size: 2 * n }];
    [left, right]
}

/// Closes both local pictures with `bands` and compares the values under
/// `≐_{4(n+1)}`. Inadequate closures violate the hypothesis and are
/// rejected.
pub fn verify_local_tail_identity(n: usize, bands: &Matching) -> Result<bool> {
    if n == 0 || 2 * n > N_MAX {
        return Err(Error::Resource(format!("colour {n} outside 1..={}", N_MAX / 2)));
    }
    if bands.n() != 3 {
        return Err(Error::InvalidArgument("closure must pair the six band ends".into()));
    }
    let closure = cable_closure(bands, n)?;
    let mut values = Vec::with_capacity(2);
    for layers in local_pictures(n) {
        let s = SkeinDiagram::from_layers(3 * n, &layers, &closure)?;
        if !s.is_adequate_skein()? {
            return Err(Error::NotAdequate(format!(
                "closure {bands} gives an inadequate diagram"
            )));
        }
        values.push(s.evaluate_closed()?);
    }
    let order = 4 * (n + 1);
    let a = values[0].series_expand(order);
    let b = values[1].series_expand(order);
    dot_eq_n(&a, &b, order)
}
