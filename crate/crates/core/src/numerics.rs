//! Exact rational scalars.
//!
//! Every coordinate, volume and discrepancy value in the crate is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. There is no floating point on any solver path.
//!
//! The textual form is `p/q`, or just `p` when `q = 1`. Decimal notation is
//! refused on input.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact fraction in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num/den` reduced to lowest terms, sign carried on the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// `self^exp` by repeated squaring; `x^0 = 1` for every `x`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.0.clone();
        let mut acc = BigRational::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Rational(acc)
    }

    /// Power with a signed exponent; negative exponents are rejected.
    pub fn pow_signed(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return Err(Error::NegativeExponent(exp));
        }
        let e = u32::try_from(exp).map_err(|_| Error::InvalidParameter(format!("exponent {exp} too large")))?;
        Ok(self.pow(e))
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Integer value if this rational is an integer that fits in `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        if self.is_integer() {
            self.numer().to_u64()
        } else {
            None
        }
    }

    pub fn min(a: &Rational, b: &Rational) -> Rational {
        if a <= b { a.clone() } else { b.clone() }
    }

    /// Decimal rendering for human-readable output only. Never parsed back.
    pub fn approx_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = (self.numer() * &scale).div_floor(self.denom());
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = if s.len() <= digits {
            format!("{}{}", "0".repeat(digits - s.len() + 1), s)
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - digits);
        format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
    }
}

/// Canonical rational from a numerator/denominator pair.
pub fn rat_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num, den)
}

pub fn rat_pow(x: &Rational, exp: i64) -> Result<Rational> {
    x.pow_signed(exp)
}

pub fn rat_cmp(a: &Rational, b: &Rational) -> Ordering {
    // cross-multiplication on canonical forms; denominators are positive
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let p = parse_int(p).ok_or_else(bad)?;
                let q = parse_int(q).ok_or_else(bad)?;
                Rational::new(p, q)
            }
            None => Ok(Rational::from_integer(parse_int(t).ok_or_else(bad)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division panics on a zero divisor, like integer division; use `recip` for
// a checked reciprocal.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn make_canonicalizes() {
        assert_eq!(rat_make(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(rat_make(3, -6).unwrap().to_string(), "-1/2");
        let z = rat_make(0, 7).unwrap();
        assert_eq!(z.to_string(), "0");
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn make_rejects_zero_denominator() {
        assert_eq!(rat_make(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&r("65/64"), 2).unwrap(), r("4225/4096"));
        assert_eq!(rat_pow(&r("1/2"), 0).unwrap(), Rational::one());
        assert_eq!(rat_pow(&r("1/4"), 2).unwrap(), r("1/16"));
        assert!(rat_pow(&r("2"), -1).is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(rat_cmp(&r("4225/4096"), &r("8/7")), Ordering::Less);
        assert_eq!(rat_cmp(&r("1/2"), &r("2/4")), Ordering::Equal);
        assert_eq!(rat_cmp(&r("7/8"), &r("4096/4225")), Ordering::Less);
    }

    #[test]
    fn parse_refuses_decimals_and_junk() {
        for s in ["0.5", "1e3", "1/", "/2", "", "1/2/3", "a/b", "1.0/2", "--1"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?} accepted");
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!(r("-3/6"), r("-1/2"));
        assert_eq!(r("6/3").to_string(), "2");
    }

    #[test]
    fn huge_powers_stay_exact() {
        let mu = Rational::from_integer(BigInt::from(1u8) << 64);
        let big = mu.pow(40);
        assert_eq!(big.numer().bits(), 64 * 40 + 1);
        assert_eq!((&big / &mu.pow(39)), mu);
    }

    #[test]
    fn approx_decimal_renders() {
        assert_eq!(r("1/3").approx_decimal(4), "0.3333");
        assert_eq!(r("-7/4").approx_decimal(2), "-1.75");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn cmp_matches_cross_product_sign(a in arb_rational(), b in arb_rational()) {
            let lhs = a.numer() * b.denom() - b.numer() * a.denom();
            let expect = lhs.cmp(&BigInt::zero());
            prop_assert_eq!(rat_cmp(&a, &b), expect);
            prop_assert_eq!(a.cmp(&b), expect);
        }

        #[test]
        fn pow_is_additive_in_exponent(x in arb_rational(), e1 in 0i64..=16, e2 in 0i64..=16) {
            let lhs = rat_pow(&x, e1 + e2).unwrap();
            let rhs = rat_pow(&x, e1).unwrap() * rat_pow(&x, e2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn string_round_trip(x in arb_rational()) {
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
