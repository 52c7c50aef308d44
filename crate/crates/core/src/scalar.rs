//! Exact scalars in Q(i): rational real and imaginary parts.
//!
//! Every concrete number appearing downstream (bracket coefficients, matrix
//! entries, quantum parameters) lives in the Gaussian rationals, so field
//! arithmetic here is exact by construction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im*i` with reduced fractions.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GScalar {
    re: BigRational,
    im: BigRational,
}

impl GScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GScalar { re, im }
    }

    pub fn zero() -> Self {
        GScalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GScalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GScalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GScalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        GScalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `a + b*i` from machine integers, convenient in tests.
    pub fn gauss(a: i64, b: i64) -> Self {
        GScalar::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
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

    pub fn conj(&self) -> Self {
        GScalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the field norm down to Q.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.norm();
        Ok(GScalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &GScalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GScalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when the imaginary part is zero and the real part is not.
    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    /// True when the scalar prints with a leading minus (used by the
    /// polynomial printers to pick `+`/`-` separators).
    pub(crate) fn is_display_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }

    pub(crate) fn abs_display(&self) -> GScalar {
        if self.is_display_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Add for &GScalar {
    type Output = GScalar;
    fn add(self, rhs: &GScalar) -> GScalar {
        GScalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GScalar {
    type Output = GScalar;
    fn sub(self, rhs: &GScalar) -> GScalar {
        GScalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GScalar {
    type Output = GScalar;
    fn mul(self, rhs: &GScalar) -> GScalar {
        GScalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re, -self.im)
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add for GScalar {
    type Output = GScalar;
    fn add(self, rhs: GScalar) -> GScalar {
        &self + &rhs
    }
}

impl Sub for GScalar {
    type Output = GScalar;
    fn sub(self, rhs: GScalar) -> GScalar {
        &self - &rhs
    }
}

impl Mul for GScalar {
    type Output = GScalar;
    fn mul(self, rhs: GScalar) -> GScalar {
        &self * &rhs
    }
}

fn fmt_rational(q: &BigRational) -> String {
    q.to_string()
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_part = |im: &BigRational| -> String {
            if im.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_rational(im))
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                return write!(f, "-{}", im_part(&-self.im.clone()));
            }
            return write!(f, "{}", im_part(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{} - {}",
                fmt_rational(&self.re),
                im_part(&-self.im.clone())
            )
        } else {
            write!(f, "{} + {}", fmt_rational(&self.re), im_part(&self.im))
        }
    }
}

/// Exact square root of a non-negative rational, if one exists in Q.
pub fn sqrt_rational(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let num = q.numer();
    let den = q.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Exact square root in Q(i), if one exists. Returns an arbitrary root;
/// callers canonicalize the sign.
pub fn sqrt_gaussian(z: &GScalar) -> Option<GScalar> {
    if z.is_zero() {
        return Some(GScalar::zero());
    }
    let x = z.re();
    let y = z.im();
    if y.is_zero() {
        if !x.is_negative() {
            return sqrt_rational(x).map(|u| GScalar::new(u, BigRational::zero()));
        }
        return sqrt_rational(&-x.clone()).map(|v| GScalar::new(BigRational::zero(), v));
    }
    // w = u + v*i with u^2 - v^2 = x and 2uv = y forces
    // u^2 = (x + sqrt(x^2 + y^2)) / 2.
    let n = sqrt_rational(&z.norm())?;
    let two = BigRational::from_integer(BigInt::from(2));
    let u_sq = (x + &n) / &two;
    let u = sqrt_rational(&u_sq)?;
    if u.is_zero() {
        return None;
    }
    let v = y / (&two * &u);
    Some(GScalar::new(u, v))
}
