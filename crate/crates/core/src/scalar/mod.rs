//! Exact scalars: rationals and rational functions in `q`.

mod parse;
mod poly;

pub use parse::{parse_scalar, parse_scalar_at};
pub use poly::Poly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Value at a rational point, or `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        if single(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        // The denominator is monic, so a single term is a bare power of q.
        if single(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

/// An exact scalar. Constant rational functions are always stored as
/// `Rational`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Func(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The indeterminate `q` of ℚ(q).
    pub fn q() -> Scalar {
        Scalar::Func(RatFunc {
            num: Poly::q(),
            den: Poly::one(),
        })
    }

    fn from_func(f: RatFunc) -> Scalar {
        if f.num.is_constant() && f.den.is_constant() {
            Scalar::Rational(f.num.constant_term())
        } else {
            Scalar::Func(f)
        }
    }

    fn as_func(&self) -> RatFunc {
        match self {
            Scalar::Rational(r) => RatFunc {
                num: Poly::constant(r.clone()),
                den: Poly::one(),
            },
            Scalar::Func(f) => f.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Func(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Func(f) => Ok(Scalar::from_func(RatFunc::new(f.den.clone(), f.num.clone())?)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes a rational value for `q`.
    pub fn specialize(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Func(f) => f
                .eval(q)
                .map(Scalar::Rational)
                .ok_or_else(|| Error::Invalid(format!("pole of {} at q = {}", f, q))),
        }
    }

    /// Rational square root when one exists.
    pub fn rational_sqrt(&self) -> Option<Scalar> {
        let r = self.as_rational()?;
        if r.is_negative() {
            return None;
        }
        let n = r.numer().sqrt();
        let d = r.denom().sqrt();
        if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
            Some(Scalar::Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Func(g) => write!(f, "{}", g),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (a, b) = (self.as_func(), rhs.as_func());
                let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
                let den = a.den.mul(&b.den);
                Scalar::from_func(RatFunc::new(num, den).expect("nonzero denominator"))
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                if self.is_zero() || rhs.is_zero() {
                    return Scalar::zero();
                }
                let (a, b) = (self.as_func(), rhs.as_func());
                let num = a.num.mul(&b.num);
                let den = a.den.mul(&b.den);
                Scalar::from_func(RatFunc::new(num, den).expect("nonzero denominator"))
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Func(f) => Scalar::Func(RatFunc {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where the
/// divisor is not known to be nonzero.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => parse_scalar(&s).map_err(D::Error::custom),
            serde_json::Value::Number(n) => parse_scalar(&n.to_string()).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected a scalar, got {}", other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        parse_scalar(x).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(s("2/4"), Scalar::frac(1, 2));
        assert_eq!(s("6/-4").to_string(), "-3/2");
        assert_eq!(s("q/q"), Scalar::one());
        assert_eq!(s("(q^2-1)/(2*q-2)").to_string(), "1/2*q + 1/2");
        assert_eq!(s("(2*q)/(2*q^2+2)").to_string(), "q/(q^2 + 1)");
        assert!(matches!(s("q - q"), Scalar::Rational(_)));
    }

    #[test]
    fn display_round_trips() {
        for x in ["q + 1/q", "-1/q", "(q^2 + 1)/(q - 3)", "-7/3", "3*q^3 - 1/2*q"] {
            let v = s(x);
            assert_eq!(s(&v.to_string()), v, "{}", x);
        }
    }

    #[test]
    fn arithmetic() {
        let q = Scalar::q();
        let t = &q + &q.inv().unwrap();
        assert_eq!(t.to_string(), "(q^2 + 1)/q");
        assert_eq!(&t * &q - q.pow(2).unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_err());
        assert_eq!(
            t.specialize(&BigRational::from_integer(2.into())).unwrap(),
            Scalar::frac(5, 2)
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::frac(9, 4).rational_sqrt(), Some(Scalar::frac(3, 2)));
        assert_eq!(Scalar::from_i64(5).rational_sqrt(), None);
        assert_eq!(Scalar::from_i64(-4).rational_sqrt(), None);
    }
}
