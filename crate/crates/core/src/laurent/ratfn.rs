//! Elements of Q(A) as reduced quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::{TruncatedSeries, Variable};
use super::LaurentPoly;
use crate::error::{Error, Result};

/// A rational function `numerator / denominator` in canonical form.
///
/// Canonical form: numerator and denominator are coprime, the denominator's
/// lowest term sits at `A^0` with coefficient `1`. Two equal rational
/// functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lo = den.min_degree().expect("nonzero denominator");
        let lead = den.low_coeff().expect("nonzero denominator").clone();
        let inv = BigRational::one() / lead;
        num = num.shift(-lo).scale(&inv);
        den = den.shift(-lo).scale(&inv);
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// `d(f) = d(P) - d(Q)`: the lowest exponent of the Laurent expansion.
    pub fn min_degree(&self) -> Result<i32> {
        Ok(self.num.degree_low()? - self.den.degree_low()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("inverse of zero".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn invert_variable(&self) -> Self {
        Self::reduce(self.num.invert_variable(), self.den.invert_variable())
    }

    /// First `order` coefficients of the Laurent expansion in `A`, starting
    /// at `d(f)`.
    pub fn series_expand(&self, order: usize) -> TruncatedSeries {
        if self.is_zero() {
            return TruncatedSeries::zero(Variable::A, order);
        }
        let p = self.num.dense();
        let q = self.den.dense();
        let shift = self.min_degree().expect("nonzero");
        let q0 = q[0].clone();
        let mut out: Vec<BigRational> = Vec::with_capacity(order);
        for k in 0..order {
            let mut c = p.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=k.min(q.len() - 1) {
                c -= &q[j] * &out[k - j];
            }
            out.push(c / &q0);
        }
        TruncatedSeries::new(Variable::A, shift, out)
    }

    pub fn pow(&self, n: u32) -> Self {
        Self {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFn::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}
