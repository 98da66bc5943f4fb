//! Exact arithmetic in Q(A): Laurent polynomials, reduced rational functions,
//! truncated expansions and the quantum integers `Δ_n`.

mod intpoly;
mod poly;
mod ratfn;
mod series;

pub use intpoly::IntPoly;
pub use poly::LaurentPoly;
pub use ratfn::RationalFn;
pub use series::{dot_eq_n, TruncatedSeries, Variable};

use crate::error::{Error, Result};

/// The circle value `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, -1), (-2, -1)])
}

/// `Δ_n = (-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})` as a Laurent
/// polynomial, with `Δ_{-1} = 0`.
pub fn delta_poly(n: i32) -> Result<LaurentPoly> {
    if n < -1 {
        return Err(Error::InvalidArgument(format!("Δ_n undefined for n = {n}")));
    }
    if n == -1 {
        return Ok(LaurentPoly::zero());
    }
    // (A^{2m} - A^{-2m}) / (A^2 - A^{-2}) = sum_{j=0}^{m-1} A^{2m-2-4j}
    let m = n + 1;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let terms: Vec<(i32, i64)> = (0..m).map(|j| (2 * m - 2 - 4 * j, sign)).collect();
    Ok(LaurentPoly::from_int_terms(&terms))
}

/// `Δ_n` as an element of Q(A).
pub fn delta(n: i32) -> Result<RationalFn> {
    delta_poly(n).map(RationalFn::from_poly)
}
