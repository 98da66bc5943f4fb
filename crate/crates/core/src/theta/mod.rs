//! Ramanujan's two-variable theta function at monomial arguments, as
//! truncated integer `q`-series.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cjp::render_series;
use crate::error::{Error, Result};

/// `sign * q^exponent`, with the exponent a nonnegative multiple of `1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialSpec {
    sign: i8,
    half_exponent: u32,
}

impl MonomialSpec {
    /// `sign * q^(half_exponent / 2)`.
    pub fn new(sign: i8, half_exponent: u32) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {sign}")));
        }
        Ok(Self { sign, half_exponent })
    }

    /// `sign * q^e` for an integer `e`.
    pub fn q_pow(sign: i8, e: u32) -> Result<Self> {
        Self::new(sign, 2 * e)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponent(&self) -> Ratio<u32> {
        Ratio::new(self.half_exponent, 2)
    }
}

impl fmt::Display for MonomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        match self.half_exponent {
            0 => write!(f, "{sign}1"),
            2 => write!(f, "{sign}q"),
            h if h % 2 == 0 => write!(f, "{sign}q^{}", h / 2),
            h => write!(f, "{sign}q^({h}/2)"),
        }
    }
}

/// A power series in `q` known modulo `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSeries {
    pub coefficients: Vec<i64>,
    pub order: usize,
}

impl ThetaSeries {
    pub fn from_coefficients(mut coefficients: Vec<i64>, order: usize) -> Self {
        coefficients.resize(order, 0);
        Self { coefficients, order }
    }

    pub fn one(order: usize) -> Self {
        Self::from_coefficients(vec![1], order)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderTooLow);
        }
        Ok(Self::from_coefficients(self.coefficients[..order].to_vec(), order))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for ThetaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_series(&self.coefficients, false))
    }
}

/// `f(a, b) = sum over all integers n of a^(n(n+1)/2) b^(n(n-1)/2)`,
/// modulo `q^order`.
pub fn theta(a: MonomialSpec, b: MonomialSpec, order: usize) -> Result<ThetaSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let (ha, hb) = (i128::from(a.half_exponent), i128::from(b.half_exponent));
    if ha + hb == 0 {
        return Err(Error::InvalidArgument(format!(
            "f({a}, {b}) does not truncate: the exponents do not grow with |n|"
        )));
    }
    let bound = 2 * order as i128;
    // twice the q-exponent of the n-th term; convex with its minimum in [-1/2, 1/2]
    let half = |n: i128| ha * (n * (n + 1) / 2) + hb * (n * (n - 1) / 2);
    let mut coefficients = vec![0i64; order];
    for dir in [1i128, -1] {
        let mut n = if dir > 0 { 0 } else { -1 };
        loop {
            let h = half(n);
            if h >= bound && half(n + dir) >= h {
                break;
            }
            if h < bound {
                if h % 2 != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "f({a}, {b}) has the half-integer power q^({h}/2)"
                    )));
                }
                let pa = (n * (n + 1) / 2).rem_euclid(2);
                let pb = (n * (n - 1) / 2).rem_euclid(2);
                let neg = (a.sign < 0 && pa == 1) != (b.sign < 0 && pb == 1);
                coefficients[(h / 2) as usize] += if neg { -1 } else { 1 };
            }
            n += dir;
        }
    }
    Ok(ThetaSeries { coefficients, order })
}

/// Cauchy product modulo `q^order`.
pub fn series_product(s1: &ThetaSeries, s2: &ThetaSeries, order: usize) -> Result<ThetaSeries> {
    if s1.order < order || s2.order < order {
        return Err(Error::OrderTooLow);
    }
    let mut coefficients = vec![0i64; order];
    for (i, x) in s1.coefficients[..order].iter().enumerate() {
        for (j, y) in s2.coefficients[..order - i].iter().enumerate() {
            let t = x.checked_mul(*y).ok_or(Error::Overflow)?;
            coefficients[i + j] = coefficients[i + j].checked_add(t).ok_or(Error::Overflow)?;
        }
    }
    Ok(ThetaSeries { coefficients, order })
}
