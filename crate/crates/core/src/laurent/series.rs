//! Truncated Laurent series and the `≐_n` comparison.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Which variable a series is written in.
///
/// For `Q` the exponent shift is counted in quarter units (`q^(1/4)`), since
/// `A = q^(-1/4)`. Consecutive coefficients always differ by one whole power
/// of the variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    A,
    Q,
}

impl Variable {
    /// Exponent units between consecutive coefficients.
    pub fn step(self) -> i32 {
        match self {
            Variable::A => 1,
            Variable::Q => 4,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    variable: Variable,
    shift: i32,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// `coeffs[i]` multiplies `var^(shift/step + i)`. Leading zeros are
    /// absorbed into the shift so the first stored coefficient is nonzero;
    /// the order shrinks accordingly.
    pub fn new(variable: Variable, shift: i32, coeffs: Vec<BigRational>) -> Self {
        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(0) | None => Self {
                variable,
                shift,
                coeffs,
            },
            Some(k) => Self {
                variable,
                shift: shift + k as i32 * variable.step(),
                coeffs: coeffs[k..].to_vec(),
            },
        }
    }

    pub fn zero(variable: Variable, order: usize) -> Self {
        Self {
            variable,
            shift: 0,
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// The first `order` coefficients of a Laurent polynomial in `A`, from
    /// its lowest term upward (zeros past the top degree).
    pub fn from_poly_a(p: &LaurentPoly, order: usize) -> Self {
        let Some(lo) = p.min_degree() else {
            return Self::zero(Variable::A, order);
        };
        let coeffs = (0..order).map(|i| p.coeff(lo + i as i32)).collect();
        Self::new(Variable::A, lo, coeffs)
    }

    /// Rewrites a polynomial in `A` as a series in `q = A^-4`, lowest
    /// `q`-power first. Fails if the exponents are not all congruent mod 4.
    pub fn from_poly_q(p: &LaurentPoly, order: usize) -> Result<Self> {
        let Some(hi) = p.max_degree() else {
            return Ok(Self::zero(Variable::Q, order));
        };
        if p.terms().any(|(e, _)| (hi - e) % 4 != 0) {
            return Err(Error::InvalidArgument(
                "A-exponents are not congruent mod 4; not a series in q".into(),
            ));
        }
        let coeffs = (0..order).map(|i| p.coeff(hi - 4 * i as i32)).collect();
        Ok(Self::new(Variable::Q, -hi, coeffs))
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    /// Lowest exponent (quarter units for `q`).
    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Number of valid coefficients from the lowest term.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Sign/shift normalization used by `≐`: lowest term moved to exponent 0
    /// and the constant term made positive.
    pub fn normalized(&self) -> Vec<BigRational> {
        let flip = self.coeffs.first().is_some_and(|c| c.is_negative());
        self.coeffs
            .iter()
            .map(|c| if flip { -c.clone() } else { c.clone() })
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            variable: self.variable,
            shift: self.shift,
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }
}

/// `p1 ≐_n p2`: equal modulo `var^n` after normalizing sign and shift.
pub fn dot_eq_n(p1: &TruncatedSeries, p2: &TruncatedSeries, n: usize) -> Result<bool> {
    if p1.variable != p2.variable {
        return Err(Error::InvalidArgument("series in different variables".into()));
    }
    if p1.order() < n || p2.order() < n {
        return Err(Error::OrderTooLow);
    }
    match (p1.is_zero(), p2.is_zero()) {
        (true, true) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        _ => {}
    }
    let (a, b) = (p1.normalized(), p2.normalized());
    Ok(a[..n] == b[..n])
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let step = self.variable.step();
        let name = match self.variable {
            Variable::A => "A",
            Variable::Q => "q",
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.shift + step * i as i32;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let mon = match (self.variable, e) {
                (_, 0) => String::new(),
                (Variable::Q, e) if e % 4 != 0 => format!("{name}^({e}/4)"),
                (Variable::Q, 4) | (Variable::A, 1) => name.to_string(),
                (Variable::Q, e) => format!("{name}^{}", e / 4),
                (Variable::A, e) => format!("{name}^{e}"),
            };
            if mon.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{abs}{mon}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + ...")
    }
}
