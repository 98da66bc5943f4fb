//! Linear combinations of matchings over Q(A).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::matching::Matching;
use crate::error::{Error, Result};
use crate::laurent::{loop_value, IntPoly, LaurentPoly, RationalFn};

/// An element of `TL_n`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<Matching, RationalFn>,
}

/// A `TL_n` element over a common integer denominator:
/// the value is `sum(num * M) / den`.
#[derive(Clone, Debug)]
pub struct ScaledElement {
    pub n: usize,
    pub terms: Vec<(Matching, IntPoly)>,
    pub den: IntPoly,
}

/// `loop_value()^k` for `k = 0..=max` as integer polynomials.
pub(crate) fn loop_powers(max: usize) -> Vec<IntPoly> {
    let d = IntPoly::from_terms(&[(2, -1), (-2, -1)]);
    let mut out = vec![IntPoly::one()];
    for k in 1..=max {
        out.push(out[k - 1].mul(&d).expect("loop powers fit for small k"));
    }
    out
}

fn poly_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = a.gcd(b);
    (a * b).div_exact(&g).expect("gcd divides the product")
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matching(Matching::identity(n))
    }

    pub fn from_matching(m: Matching) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        terms.insert(m, RationalFn::one());
        Self { n, terms }
    }

    pub fn e(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_matching(Matching::e(n, i)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &RationalFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> RationalFn {
        self.terms.get(m).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn add_term(&mut self, m: Matching, c: &RationalFn) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::InvalidArgument("matching size mismatch".into()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    fn check_same(&self, other: &TLElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "TL_{} and TL_{} do not match",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TLElement) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TLElement) -> Result<Self> {
        self.add(&other.scale(&RationalFn::from_int(-1)))
    }

    pub fn scale(&self, s: &RationalFn) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &TLElement) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &right.terms {
                terms.insert(m1.tensor(m2), c1 * c2);
            }
        }
        Self {
            n: self.n + right.n,
            terms,
        }
    }

    /// Algebra product: `self` stacked on top of `below`; every closed loop
    /// contributes `-A^2 - A^-2`.
    pub fn mul(&self, below: &TLElement) -> Result<Self> {
        self.check_same(below)?;
        if self.is_zero() || below.is_zero() {
            return Ok(Self::zero(self.n));
        }
        match self.mul_batched(below) {
            Ok(r) => Ok(r),
            Err(Error::Overflow) => Ok(self.mul_exact(below)),
            Err(e) => Err(e),
        }
    }

    fn mul_exact(&self, below: &TLElement) -> Self {
        let d = RationalFn::from_poly(loop_value());
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &below.terms {
                let (m, loops) = m1.compose_unchecked(m2);
                let c = &(c1 * c2) * &d.pow(loops as u32);
                out.add_term(m, &c).expect("sizes agree");
            }
        }
        out
    }

    fn mul_batched(&self, below: &TLElement) -> Result<Self> {
        let x = self.to_scaled()?;
        let y = below.to_scaled()?;
        let powers = loop_powers(self.n);
        let mut ypow: Vec<Vec<IntPoly>> = Vec::with_capacity(y.terms.len());
        for (_, p) in &y.terms {
            ypow.push(
                powers
                    .iter()
                    .map(|dk| p.mul(dk))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let mut acc: BTreeMap<Matching, IntPoly> = BTreeMap::new();
        for (m1, p1) in &x.terms {
            for ((m2, _), p2k) in y.terms.iter().zip(&ypow) {
                let (m, loops) = m1.compose_unchecked(m2);
                acc.entry(m).or_default().add_product(p1, &p2k[loops])?;
            }
        }
        let den = x.den.mul(&y.den)?.to_laurent();
        let mut out = Self::zero(self.n);
        for (m, p) in acc {
            if !p.is_zero() {
                out.terms.insert(m, RationalFn::new(p.to_laurent(), den.clone())?);
            }
        }
        Ok(out)
    }

    /// Rewrites the element over one integer denominator.
    pub fn to_scaled(&self) -> Result<ScaledElement> {
        let mut d = LaurentPoly::one();
        for c in self.terms.values() {
            d = poly_lcm(&d, c.denominator());
        }
        // make the denominator integral
        let (_, sd) = IntPoly::from_laurent_scaled(&d).ok_or(Error::Overflow)?;
        let d = d.scale(&BigRational::from_integer(BigInt::from(sd)));
        let nums: Vec<(Matching, LaurentPoly)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let factor = d.div_exact(c.denominator()).expect("lcm is a multiple");
                (m.clone(), c.numerator() * &factor)
            })
            .collect();
        let mut l = BigInt::from(1);
        for (_, p) in &nums {
            for (_, c) in p.terms() {
                l = num_integer::Integer::lcm(&l, c.denom());
            }
        }
        let lr = BigRational::from_integer(l);
        let den = IntPoly::from_laurent(&d.scale(&lr)).ok_or(Error::Overflow)?;
        let terms = nums
            .into_iter()
            .map(|(m, p)| {
                IntPoly::from_laurent(&p.scale(&lr))
                    .map(|q| (m, q))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledElement {
            n: self.n,
            terms,
            den,
        })
    }

    /// Closes the rightmost strand, giving an element of `TL_{n-1}`.
    pub fn partial_trace(&self) -> Result<Self> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("no strand to close".into()));
        }
        let d = RationalFn::from_poly(loop_value());
        let mut out = Self::zero(self.n - 1);
        for (m, c) in &self.terms {
            let (m2, loops) = m.close_last()?;
            let c = if loops > 0 { c * &d } else { c.clone() };
            out.add_term(m2, &c)?;
        }
        Ok(out)
    }

    /// Evaluates the closure of `self` by the outside matching `closure`.
    pub fn close_with(&self, closure: &Matching) -> Result<RationalFn> {
        let d = RationalFn::from_poly(loop_value());
        let mut out = RationalFn::zero();
        for (m, c) in &self.terms {
            let loops = m.loops_with_closure(closure)?;
            out = &out + &(c * &d.pow(loops as u32));
        }
        Ok(out)
    }

    /// Evaluates the trace closure (top `i` joined to bottom `i`).
    pub fn trace(&self) -> Result<RationalFn> {
        self.close_with(&Matching::identity(self.n))
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*[{m}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL_{}: {self}", self.n)
    }
}
