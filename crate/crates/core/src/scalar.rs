//! The ground field: Gaussian rationals ℚ(i).
//!
//! A [`Scalar`] is a pair of arbitrary-precision rationals `re + im·i`.
//! All arithmetic is exact and equality is decidable, which is what makes
//! symbolic identity verification meaningful.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

// The derived lexicographic order is used only for canonical sorting of
// reports, never as a field order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the value lies in ℚ ⊂ ℚ(i).
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for a real, strictly positive value.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    /// Complex conjugation; the nontrivial field automorphism of ℚ(i).
    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² = z·z̄ as a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero scalar");
        Self { re: &self.re / &n, im: -&self.im / &n }
    }

    /// Parse an exact literal: `p/q`, `p/q+r/s*i`, `-3i`, `i`, `1/2-i`, ...
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        // Split into at most two signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && idx != 0 {
                terms.push(std::mem::take(&mut cur));
                cur.push(ch);
            } else {
                cur.push(ch);
            }
        }
        terms.push(cur);
        if terms.len() > 2 {
            return Err(Error::Parse(format!("too many terms in scalar literal '{s}'")));
        }
        let mut out = Scalar::zero();
        for t in terms {
            let (imag, body) = if let Some(stripped) = t.strip_suffix("*i") {
                (true, stripped.to_string())
            } else if let Some(stripped) = t.strip_suffix('i') {
                (true, stripped.to_string())
            } else {
                (false, t.clone())
            };
            let body = match body.as_str() {
                "" | "+" => "1".to_string(),
                "-" => "-1".to_string(),
                _ => body,
            };
            let rat = parse_rational(&body)?;
            if imag {
                out.im += rat;
            } else {
                out.re += rat;
            }
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer '{num}'")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer '{den}'")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(BigRational::new(n, d))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.re.is_zero() {
            parts.push(fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            let im = if self.im.is_one() {
                "i".to_string()
            } else if (-&self.im).is_one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(&self.im))
            };
            if parts.is_empty() || im.starts_with('-') {
                parts.push(im);
            } else {
                parts.push(format!("+{im}"));
            }
        }
        write!(f, "{}", parts.concat())
    }
}

// Debug = Display keeps symbolic element dumps readable.
impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: self.re + &rhs.re, im: self.im + &rhs.im }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: self.re - &rhs.re, im: self.im - &rhs.im }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self * &rhs.inv()
    }
}

impl<'a, 'b> Div<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'b Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}
