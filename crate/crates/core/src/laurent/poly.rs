//! Sparse Laurent polynomials in `A` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_k A^k` with `c_k` in Q.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// The variable `A`.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `c * A^exp` with an integer coefficient.
    pub fn int_monomial(c: i64, exp: i32) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    }

    pub fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `d(f)`: the lowest exponent. Zero has no degree.
    pub fn degree_low(&self) -> Result<i32> {
        self.min_degree().ok_or(Error::DegreeOfZero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Substitute `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `A -> A^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Lowest-degree coefficient.
    pub fn low_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    pub fn high_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// Dense ascending coefficient vector starting at the lowest degree.
    pub(crate) fn dense(&self) -> Vec<BigRational> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                v
            }
            _ => Vec::new(),
        }
    }

    pub(crate) fn from_dense(lo: i32, coeffs: &[BigRational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (lo + i as i32, c.clone())),
        )
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in Q[A, A^-1].
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (plo, qlo) = (self.min_degree()?, divisor.min_degree()?);
        let mut rem = self.dense();
        let q = divisor.dense();
        if rem.len() < q.len() {
            return None;
        }
        let lead = q.last()?.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - q.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + q.len() - 1] / &lead;
            if !c.is_zero() {
                for (j, qc) in q.iter().enumerate() {
                    rem[i + j] -= &c * qc;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(plo - qlo, &quot))
    }

    /// Scale to a primitive integer polynomial, returning it as a dense
    /// ascending vector starting at the lowest degree.
    pub(crate) fn primitive_int_dense(&self) -> Vec<BigInt> {
        let dense = self.dense();
        let denom_lcm = dense
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = dense
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        make_primitive(ints)
    }

    /// Greatest common divisor in Q[A, A^-1], normalized to have lowest
    /// exponent 0, integer coefficients with content 1 and a positive
    /// constant term. Monomial factors are units and are dropped.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        if self.is_zero() {
            return normalize_unit(other.primitive_int_dense());
        }
        if other.is_zero() {
            return normalize_unit(self.primitive_int_dense());
        }
        let mut a = self.primitive_int_dense();
        let mut b = other.primitive_int_dense();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !(b.is_empty()) {
            if b.len() == 1 {
                return Self::one();
            }
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = make_primitive(trim_high(r));
        }
        normalize_unit(a)
    }
}

fn trim_high(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = trim_high(v);
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of `a` by `b` (dense ascending, `b` nonzero).
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[off + j] -= &lr * bc;
        }
        r = trim_high(r);
    }
    r
}

fn normalize_unit(v: Vec<BigInt>) -> LaurentPoly {
    // drop factors of A, force positive constant term
    let start = v.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let v = &v[start..];
    let sign = if v.first().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .map(|(i, c)| (i as i32, BigRational::from_integer(c * &sign))),
    )
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Prints terms in decreasing exponent order, e.g. `-A^2 - A^-2` or
/// `3*A^5 + 1/2*A^-3`. The zero polynomial prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let body = match *e {
                0 => fmt_coeff(&abs),
                1 => "A".to_string(),
                k => format!("A^{k}"),
            };
            if *e == 0 || abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_term(term: &str) -> Result<(i32, BigRational)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let Some(apos) = term.find('A') else {
        return Ok((0, parse_rational(term)?));
    };
    let coeff_part = term[..apos].trim().trim_end_matches('*').trim();
    let coeff = if coeff_part.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coeff_part)?
    };
    let rest = term[apos + 1..].trim();
    let exp = if rest.is_empty() {
        1
    } else {
        let e = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
        e.trim()
            .parse::<i32>()
            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
    };
    Ok((exp, coeff))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split on top-level +/- that are not part of an exponent
        let mut out = LaurentPoly::zero();
        let mut sign = BigRational::one();
        let mut cur = String::new();
        let mut prev_nonspace = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev_nonspace != Some('^') && prev_nonspace.is_some() {
                if !cur.trim().is_empty() {
                    let (e, c) = parse_term(&cur)?;
                    out.add_term(e, c * &sign);
                    cur.clear();
                    sign = BigRational::one();
                }
                if ch == '-' {
                    sign = -sign;
                }
            } else if (ch == '+' || ch == '-') && prev_nonspace.is_none() {
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev_nonspace = Some(ch);
            }
        }
        let (e, c) = parse_term(&cur)?;
        out.add_term(e, c * &sign);
        Ok(out)
    }
}
