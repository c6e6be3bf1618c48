//! Exact scalars in the Gaussian rationals `Q(i)`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A complex number `re + im*i` with arbitrary-precision rational parts.
///
/// `BigRational` keeps both parts reduced with a positive denominator, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for real values strictly greater than zero.
    pub fn is_positive_real(&self) -> bool {
        self.is_real() && self.re.is_positive()
    }

    /// The integer value, if this is a real integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_real() || !self.re.is_integer() {
            return None;
        }
        i64::try_from(self.re.to_integer()).ok()
    }

    /// True iff the value is a non-negative integer (an element of `N`).
    pub fn is_natural(&self) -> bool {
        self.is_real() && self.re.is_integer() && !self.re.is_negative()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Integer power (negative exponents invert). Panics on `0^(-k)`.
    pub fn powi(&self, exp: i32) -> Self {
        let mut base = if exp < 0 {
            self.inv().expect("zero raised to a negative power")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

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
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `a/b`, `c/d*i`, or `a/b+c/d*i` (`-` when the imaginary part
/// is negative). Integers drop the denominator and a unit imaginary part
/// prints as a bare `i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if !self.im.is_negative() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-self.im.clone()).is_one() {
            f.write_str("-i")
        } else {
            fmt_rational(&self.im, f)?;
            f.write_str("*i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses a scalar as accepted by the polynomial reader: `3`, `-1/2`,
/// `i`, `-i`, `2/3*i`, `1/2+3/4*i`, optionally wrapped in parentheses.
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(String::from(s));
        let mut t = s.trim();
        if t.starts_with('(') && t.ends_with(')') {
            t = &t[1..t.len() - 1];
        }
        let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        // Split at the last sign that is not the leading one.
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) if t.ends_with('i') => (&t[..k], &t[k..]),
            _ if t.ends_with('i') => ("", t.as_str()),
            _ => (t.as_str(), ""),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part).ok_or_else(bad)?
        };
        let im = if im_part.is_empty() {
            BigRational::zero()
        } else {
            let body = im_part.strip_suffix('i').ok_or_else(bad)?;
            let body = body.strip_suffix('*').unwrap_or(body);
            match body {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                b => parse_rational(b.strip_prefix('+').unwrap_or(b)).ok_or_else(bad)?,
            }
        };
        Ok(Self::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_zero_and_reduction() {
        let a = GaussianRational::from_frac(2, 4);
        assert_eq!(a, GaussianRational::from_frac(-1, -2));
        assert_eq!(a.to_string(), "1/2");
        let z = &a - &a;
        assert_eq!(z, GaussianRational::zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn field_operations() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        let w = GaussianRational::from_parts(1, 2, -3, 4);
        assert_eq!(&(&w / &w), &GaussianRational::one());
        assert_eq!(w.inv().unwrap().inv().unwrap(), w);
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(i.powi(4), GaussianRational::one());
        assert_eq!(
            GaussianRational::from_int(2).powi(-2),
            GaussianRational::from_frac(1, 4)
        );
    }

    #[test]
    fn display_and_parse() {
        for s in ["0", "3", "-1/2", "1/2*i", "-i", "1/2+3/4*i", "-5-2/3*i"] {
            let v: GaussianRational = s.parse().unwrap();
            let back: GaussianRational = v.to_string().parse().unwrap();
            assert_eq!(v, back, "{s}");
        }
        assert_eq!(
            "i".parse::<GaussianRational>().unwrap(),
            GaussianRational::i()
        );
        assert_eq!(
            "(1/2+3/4*i)".parse::<GaussianRational>().unwrap(),
            GaussianRational::from_parts(1, 2, 3, 4)
        );
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn naturals() {
        assert!(GaussianRational::from_int(0).is_natural());
        assert!(GaussianRational::from_int(4).is_natural());
        assert!(!GaussianRational::from_int(-1).is_natural());
        assert!(!GaussianRational::from_frac(1, 2).is_natural());
        assert!(!GaussianRational::i().is_natural());
    }
}
