//! Exact scalars: big rationals and the Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `a` or `a/b`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(rat_int(n), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussianRational::new(r, Rational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    /// `a + b i` from small integers.
    pub fn gi(a: i64, b: i64) -> Self {
        GaussianRational::new(rat_int(a), rat_int(b))
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|v| v.pow((-e) as u32))
        }
    }

    /// The four-integer JSON encoding `[re_num, re_den, im_num, im_den]`.
    pub fn to_parts(&self) -> [BigInt; 4] {
        [
            self.re.numer().clone(),
            self.re.denom().clone(),
            self.im.numer().clone(),
            self.im.denom().clone(),
        ]
    }

    pub fn from_parts(parts: &[BigInt; 4]) -> Result<Self> {
        if parts[1].is_zero() || parts[3].is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(GaussianRational::new(
            Rational::new(parts[0].clone(), parts[1].clone()),
            Rational::new(parts[2].clone(), parts[3].clone()),
        ))
    }

    /// Sign normalization used for Weyl-orbit canonical forms: true when the
    /// value is "positive" (real part > 0, or real part 0 and imaginary part > 0).
    pub fn is_positive_normalized(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && self.im.is_positive())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::from_rational(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &o.re);
        }
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero in Q(i)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl fmt::Display for GaussianRational {
    /// `a/b`, `c/d*i` or `a/b+c/d*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            return write!(f, "{im}");
        }
        if im.starts_with('-') {
            write!(f, "{}{}", fmt_rational(&self.re), im)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.re), im)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        let parse_im = |t: &str| -> Result<Rational> {
            let body = t
                .strip_suffix("*i")
                .or_else(|| t.strip_suffix('i'))
                .ok_or_else(|| Error::Parse(format!("bad imaginary part '{t}'")))?;
            match body {
                "" | "+" => Ok(Rational::one()),
                "-" => Ok(-Rational::one()),
                b => parse_rational(b.trim_start_matches('+')),
            }
        };
        if !s.ends_with('i') {
            return Ok(GaussianRational::from_rational(parse_rational(&s)?));
        }
        // Split at the last sign that is not the leading one.
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re = parse_rational(&s[..k])?;
                let im = parse_im(&s[k..])?;
                Ok(GaussianRational::new(re, im))
            }
            None => Ok(GaussianRational::new(Rational::zero(), parse_im(&s)?)),
        }
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a [`Rational`] as the string `a` or `a/b`.
pub mod rational_str {
    use super::{fmt_rational, parse_rational, Rational};

    pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// JSON integer: a number when it fits in `i64`, else a decimal string.
pub fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::json!(v),
        None => serde_json::json!(x.to_string()),
    }
}

/// Inverse of [`int_to_json`].
pub fn json_to_int(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer {n}"))),
        serde_json::Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer '{s}'"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for s in ["0", "3", "-1/2", "i", "-i", "2/3*i", "1/2+3/4*i", "1-i", "-5/7-2*i"] {
            let g: GaussianRational = s.parse().unwrap();
            assert_eq!(g.to_string().parse::<GaussianRational>().unwrap(), g, "{s}");
        }
        assert_eq!("1-i".parse::<GaussianRational>().unwrap(), GaussianRational::gi(1, -1));
    }

    #[test]
    fn field_ops() {
        let a = GaussianRational::gi(1, 2);
        let b = GaussianRational::gi(3, -1);
        assert_eq!(&a * &b, GaussianRational::gi(5, 5));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(GaussianRational::i().pow(2), GaussianRational::from_int(-1));
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn bad_input() {
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
    }
}
