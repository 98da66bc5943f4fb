//! Tails and heads of colored Jones polynomials, with stabilization checked
//! at run time.
//!
//! The tail of an A-adequate diagram is read from the lowest `q`-powers of
//! `J_{L,N}`; the head is the tail of the mirror image.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cjp::{reduced_cjp_named, render_series, unreduced_cjp_with_budget, ColoredJonesResult};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::laurent::{dot_eq_n, TruncatedSeries};
use crate::states::{is_adequate, StateKind};
use crate::tl::default_budget;

/// A stabilized prefix of the tail series, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailSeries {
    pub coefficients: Vec<i64>,
    pub order: usize,
    pub colors_used: Vec<usize>,
    pub stable: bool,
    /// `q`-exponent of the constant term in each color, in quarter units
    #[serde(skip)]
    pub shifts: Vec<i32>,
}

impl TailSeries {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn is_trivial(&self) -> bool {
        self.coefficients.iter().skip(1).all(|&c| c == 0)
    }
}

impl fmt::Display for TailSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_series(&self.coefficients, false))
    }
}

fn to_i64(c: &[BigInt]) -> Result<Vec<i64>> {
    c.iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

fn require_a_adequate(d: &PlanarDiagram) -> Result<()> {
    if is_adequate(d, StateKind::A) {
        Ok(())
    } else {
        Err(Error::NotAdequate(
            "diagram is not A-adequate; the tail need not exist".into(),
        ))
    }
}

fn color(d: &PlanarDiagram, big_n: usize, budget: u128) -> Result<ColoredJonesResult> {
    reduced_cjp_named("", d, big_n, budget)
}

/// The first `order` tail coefficients, from `J_order` and `J_{order+1}`.
pub fn tail(d: &PlanarDiagram, order: usize) -> Result<TailSeries> {
    tail_with_budget(d, order, default_budget())
}

pub fn tail_with_budget(d: &PlanarDiagram, order: usize, budget: u128) -> Result<TailSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("tail order must be at least 1".into()));
    }
    require_a_adequate(d)?;
    let lo = color(d, order, budget)?;
    let hi = color(d, order + 1, budget)?;
    let (a, b) = (lo.lowest(order), hi.lowest(order));
    if a != b {
        return Err(Error::Unstable(format!(
            "J_{} gives {:?} but J_{} gives {:?}",
            order,
            a.iter().map(ToString::to_string).collect::<Vec<_>>(),
            order + 1,
            b.iter().map(ToString::to_string).collect::<Vec<_>>(),
        )));
    }
    Ok(TailSeries {
        coefficients: to_i64(&a)?,
        order,
        colors_used: vec![order, order + 1],
        stable: true,
        shifts: vec![lo.q_shift(), hi.q_shift()],
    })
}

/// The tail of the mirror image.
pub fn head(d: &PlanarDiagram, order: usize) -> Result<TailSeries> {
    head_with_budget(d, order, default_budget())
}

pub fn head_with_budget(d: &PlanarDiagram, order: usize, budget: u128) -> Result<TailSeries> {
    tail_with_budget(&d.mirror(), order, budget)
}

/// Whether the two tails agree to `order` coefficients.
pub fn tails_equal(d1: &PlanarDiagram, d2: &PlanarDiagram, order: usize) -> Result<bool> {
    Ok(tail(d1, order)?.coefficients == tail(d2, order)?.coefficients)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationRow {
    #[serde(rename = "N")]
    pub big_n: usize,
    /// lowest `N` normalized coefficients of `J_N` and of `J_{N+1}`
    pub this: Vec<i64>,
    pub next: Vec<i64>,
    pub agrees: bool,
    /// `J~_{N-1}` and `J~_N` agree in their top `4N` powers of `A`
    pub unreduced_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub rows: Vec<StabilizationRow>,
}

impl StabilizationReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees && r.unreduced_agrees)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Compares each pair of consecutive colors up to `n_max`.
pub fn stabilization_report(d: &PlanarDiagram, n_max: usize) -> Result<StabilizationReport> {
    stabilization_report_with_budget(d, n_max, default_budget())
}

pub fn stabilization_report_with_budget(
    d: &PlanarDiagram,
    n_max: usize,
    budget: u128,
) -> Result<StabilizationReport> {
    require_a_adequate(d)?;
    let mut rows = Vec::new();
    for big_n in 1..n_max {
        let (lo, hi) = (color(d, big_n, budget)?, color(d, big_n + 1, budget)?);
        let (this, next) = (lo.lowest(big_n), hi.lowest(big_n));
        let order = 4 * big_n;
        // the highest powers of A are the lowest powers of A^-1
        let top = |n: usize| -> Result<TruncatedSeries> {
            let j = unreduced_cjp_with_budget(d, n, budget)?;
            Ok(TruncatedSeries::from_poly_a(&j.invert_variable(), order))
        };
        let unreduced_agrees = dot_eq_n(&top(big_n - 1)?, &top(big_n)?, order)?;
        rows.push(StabilizationRow {
            big_n,
            agrees: this == next,
            this: to_i64(&this)?,
            next: to_i64(&next)?,
            unreduced_agrees,
        });
    }
    Ok(StabilizationReport { rows })
}

#[cfg(test)]
mod tests;
