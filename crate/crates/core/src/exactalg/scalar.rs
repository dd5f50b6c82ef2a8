use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// Exact element of `Q(t1, t2)`.
///
/// Always normalized: numerator and denominator coprime, denominator monic
/// in graded-lex order. Structural equality is therefore value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EqScalar {
    num: Poly,
    den: Poly,
}

impl EqScalar {
    pub fn zero() -> Self {
        EqScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        EqScalar::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        EqScalar {
            num,
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        EqScalar::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        EqScalar::from_poly(Poly::from_int(c))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        EqScalar::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn t1() -> Self {
        EqScalar::from_poly(Poly::t1())
    }

    pub fn t2() -> Self {
        EqScalar::from_poly(Poly::t2())
    }

    /// `t1 + t2`.
    pub fn t_sum() -> Self {
        EqScalar::from_poly(Poly::linear(1, 1))
    }

    /// `a*t1 + b*t2`.
    pub fn linear(a: i64, b: i64) -> Self {
        EqScalar::from_poly(Poly::linear(a, b))
    }

    /// Builds `num/den` in canonical form.
    pub fn ratio(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return EqScalar::zero();
        }
        if let Some(c) = den.as_constant() {
            return EqScalar {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let (den, lc) = den.monic();
        EqScalar {
            num: num.scale(&lc.recip()),
            den,
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> EqScalar {
        if c.is_zero() {
            return EqScalar::zero();
        }
        EqScalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<EqScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &EqScalar) -> Result<EqScalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<EqScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = EqScalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluation at rational point; `None` where the denominator vanishes.
    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Option<Rational> {
        let d = self.den.eval(t1, t2);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t1, t2) / d)
        }
    }
}

impl Default for EqScalar {
    fn default() -> Self {
        EqScalar::zero()
    }
}

impl From<Rational> for EqScalar {
    fn from(c: Rational) -> Self {
        EqScalar::from_rational(c)
    }
}

impl From<i64> for EqScalar {
    fn from(c: i64) -> Self {
        EqScalar::from_int(c)
    }
}

impl From<Poly> for EqScalar {
    fn from(p: Poly) -> Self {
        EqScalar::from_poly(p)
    }
}

impl Add for &EqScalar {
    type Output = EqScalar;
    fn add(self, rhs: &EqScalar) -> EqScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return EqScalar::from_poly(&self.num + &rhs.num);
            }
            return EqScalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        EqScalar::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &EqScalar {
    type Output = EqScalar;
    fn sub(self, rhs: &EqScalar) -> EqScalar {
        self + &(-rhs)
    }
}

impl Mul for &EqScalar {
    type Output = EqScalar;
    fn mul(self, rhs: &EqScalar) -> EqScalar {
        if self.is_zero() || rhs.is_zero() {
            return EqScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return EqScalar::from_poly(&self.num * &rhs.num);
        }
        EqScalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &EqScalar {
    type Output = EqScalar;
    fn neg(self) -> EqScalar {
        EqScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EqScalar {
            type Output = EqScalar;
            fn $m(self, rhs: EqScalar) -> EqScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&EqScalar> for EqScalar {
            type Output = EqScalar;
            fn $m(self, rhs: &EqScalar) -> EqScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for EqScalar {
    type Output = EqScalar;
    fn neg(self) -> EqScalar {
        -&self
    }
}

impl AddAssign<&EqScalar> for EqScalar {
    fn add_assign(&mut self, rhs: &EqScalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for EqScalar {
    fn add_assign(&mut self, rhs: EqScalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&EqScalar> for EqScalar {
    fn sub_assign(&mut self, rhs: &EqScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&EqScalar> for EqScalar {
    fn mul_assign(&mut self, rhs: &EqScalar) {
        *self = &*self * rhs;
    }
}

impl Sum for EqScalar {
    fn sum<I: Iterator<Item = EqScalar>>(iter: I) -> Self {
        iter.fold(EqScalar::zero(), |a, b| a + b)
    }
}

impl Product for EqScalar {
    fn product<I: Iterator<Item = EqScalar>>(iter: I) -> Self {
        iter.fold(EqScalar::one(), |a, b| a * b)
    }
}

impl Zero for EqScalar {
    fn zero() -> Self {
        EqScalar::zero()
    }
    fn is_zero(&self) -> bool {
        EqScalar::is_zero(self)
    }
}

impl One for EqScalar {
    fn one() -> Self {
        EqScalar::one()
    }
}

impl fmt::Display for EqScalar {
    /// `num` when the denominator is one, `(num)/(den)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for EqScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_scalar(s)
    }
}

impl Serialize for EqScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for EqScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identity() {
        let a = EqScalar::linear(1, 1);
        let b = EqScalar::linear(1, -1);
        let expected = &(&EqScalar::t1() * &EqScalar::t1()) - &(&EqScalar::t2() * &EqScalar::t2());
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn self_quotient_is_one() {
        let x = EqScalar::ratio(Poly::linear(3, -1), &Poly::t1() * &Poly::linear(1, 1)).unwrap();
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn reduces_common_factors() {
        let x = EqScalar::ratio(
            &Poly::linear(2, 2) * &Poly::t1(),
            &Poly::linear(1, 1) * &Poly::linear(2, 0),
        )
        .unwrap();
        assert_eq!(x, EqScalar::one());
    }

    #[test]
    fn zero_division_is_an_error() {
        assert_eq!(EqScalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(EqScalar::ratio(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(EqScalar::linear(2, 2).to_string(), "2*t1+2*t2");
        let x = EqScalar::ratio(Poly::one(), Poly::linear(2, 0) * Poly::t2()).unwrap();
        assert_eq!(x.to_string(), "(1/2)/(t1*t2)");
        assert_eq!(EqScalar::frac(-3, 4).to_string(), "-3/4");
    }
}
