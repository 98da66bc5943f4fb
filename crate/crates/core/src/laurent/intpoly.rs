//! Dense Laurent polynomials with checked `i128` coefficients.
//!
//! This is the working coefficient type of the skein sweep and of
//! Temperley-Lieb products; results are converted back to [`LaurentPoly`]
//! at the boundary. Every arithmetic step is overflow-checked.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    lo: i32,
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i128, exp: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            lo: exp,
            coeffs: vec![c],
        }
    }

    pub fn from_terms(terms: &[(i32, i128)]) -> Self {
        let mut out = Self::zero();
        for &(e, c) in terms {
            out.add_assign(&Self::monomial(c, e))
                .expect("small literal terms cannot overflow");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i32 - 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (self.lo + i as i32, *c))
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| *c != 0) else {
            self.coeffs.clear();
            self.lo = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|c| *c != 0).unwrap_or(first);
        if first > 0 || last + 1 < self.coeffs.len() {
            self.coeffs.truncate(last + 1);
            self.coeffs.drain(..first);
            self.lo += first as i32;
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: i128) -> Result<Self> {
        if s == 0 {
            return Ok(Self::zero());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(s).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { lo: self.lo, coeffs })
    }

    pub fn add_assign(&mut self, other: &IntPoly) -> Result<()> {
        self.add_scaled_shifted(other, 1, 0)
    }

    /// `self += s * A^k * other`.
    pub fn add_scaled_shifted(&mut self, other: &IntPoly, s: i128, k: i32) -> Result<()> {
        if other.is_zero() || s == 0 {
            return Ok(());
        }
        let olo = other.lo + k;
        let ohi = olo + other.coeffs.len() as i32 - 1;
        if self.is_zero() {
            self.lo = olo;
            self.coeffs = other
                .coeffs
                .iter()
                .map(|c| c.checked_mul(s).ok_or(Error::Overflow))
                .collect::<Result<Vec<_>>>()?;
            return Ok(());
        }
        let shi = self.lo + self.coeffs.len() as i32 - 1;
        if olo < self.lo {
            let pad = (self.lo - olo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat(0).take(pad));
            self.lo = olo;
        }
        if ohi > shi {
            let new_len = (ohi - self.lo + 1) as usize;
            self.coeffs.resize(new_len, 0);
        }
        let off = (olo - self.lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            let t = c.checked_mul(s).ok_or(Error::Overflow)?;
            let slot = &mut self.coeffs[off + i];
            *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
        }
        self.trim();
        Ok(())
    }

    pub fn mul(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if other.coeffs.len() == 1 {
            return Ok(self.scale(other.coeffs[0])?.shift(other.lo));
        }
        if self.coeffs.len() == 1 {
            return Ok(other.scale(self.coeffs[0])?.shift(self.lo));
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(*b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        let mut p = IntPoly {
            lo: self.lo + other.lo,
            coeffs: out,
        };
        p.trim();
        Ok(p)
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &IntPoly, b: &IntPoly) -> Result<()> {
        if b.coeffs.len() == 1 {
            return self.add_scaled_shifted(a, b.coeffs[0], b.lo);
        }
        if a.coeffs.len() == 1 {
            return self.add_scaled_shifted(b, a.coeffs[0], a.lo);
        }
        let p = a.mul(b)?;
        self.add_assign(&p)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    /// Converts a polynomial with integer coefficients; `None` if some
    /// coefficient is fractional or does not fit.
    pub fn from_laurent(p: &LaurentPoly) -> Option<IntPoly> {
        let mut out = IntPoly::zero();
        for (e, c) in p.terms() {
            if !c.is_integer() {
                return None;
            }
            let v = c.to_integer().to_i128()?;
            out.add_assign(&IntPoly::monomial(v, e)).ok()?;
        }
        Some(out)
    }

    /// Clears denominators: returns `(m, s)` with `p = m / s`, `s > 0`.
    pub fn from_laurent_scaled(p: &LaurentPoly) -> Option<(IntPoly, i128)> {
        let mut lcm = BigInt::from(1);
        for (_, c) in p.terms() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let scaled = p.scale(&BigRational::from_integer(lcm.clone()));
        Some((IntPoly::from_laurent(&scaled)?, lcm.to_i128()?))
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        if self.is_zero() || exp < self.lo {
            return 0;
        }
        self.coeffs.get((exp - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }
}
