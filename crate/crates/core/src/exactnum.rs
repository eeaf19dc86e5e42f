//! Exact integer, rational and Gaussian-rational arithmetic.
//!
//! Integers and rationals come from `num`; [`GaussianRational`] is the
//! field ℚ(i) built on top of them. Every quantity the library reports is
//! computed here without rounding.
//!
//! The text form accepted by [`parse_gaussian`] is
//!
//! ```text
//! value := term | term sign term
//! term  := [sign] ratio | [sign] [ratio] "i"
//! ratio := digits ["/" digits]
//! sign  := "+" | "-"
//! ```
//!
//! with at most one real and one imaginary term. A bare `i` means `1i`.
//! Whitespace between tokens is ignored. The `Display` output uses the
//! same grammar in lowest terms, omits a zero imaginary part and a zero
//! real part (but never both), so `parse_gaussian(&x.to_string()) == x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num::{BigInt, BigRational};

/// Lifts any integer into an exact rational.
pub fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Returns the integer value of `x`, or an integrality violation tagged with
/// `context` when the denominator is not 1.
pub fn integral(x: BigRational, context: &'static str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::IntegralityViolation {
            context,
            value: x.to_string(),
        })
    }
}

/// An element of ℚ(i) with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

/// The four field operations, for [`gaussian_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::new(rat(n), BigRational::zero())
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
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
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |x|², always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// `self^e` by square-and-multiply. `0^0` is rejected.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if e == 0 {
            return if self.is_zero() {
                Err(Error::IndeterminateForm)
            } else {
                Ok(Self::one())
            };
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        loop {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        Ok(acc)
    }

    /// Multiplies by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        Self::new(&self.re * &k, &self.im * &k)
    }
}

/// Exact field arithmetic in ℚ(i).
pub fn gaussian_arith(op: GaussOp, x: &GaussianRational, y: &GaussianRational) -> Result<GaussianRational> {
    Ok(match op {
        GaussOp::Add => x + y,
        GaussOp::Sub => x - y,
        GaussOp::Mul => x * y,
        GaussOp::Div => x.checked_div(y)?,
    })
}

pub fn gaussian_pow(x: &GaussianRational, e: u64) -> Result<GaussianRational> {
    x.pow(e)
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
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
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
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
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_ratio(f, &self.re);
        }
        if !self.re.is_zero() {
            write_ratio(f, &self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-self.im.clone()).is_one() {
            f.write_str("-i")
        } else {
            write_ratio(f, &self.im)?;
            f.write_str("i")
        }
    }
}

impl std::str::FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_gaussian(s)
    }
}

struct Cursor<'s> {
    bytes: &'s [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).ok()?;
        text.parse().ok()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    /// Returns (value, is_imaginary).
    fn term(&mut self, sign_required: bool) -> Result<(BigRational, bool)> {
        let negative = match self.sign() {
            Some(neg) => neg,
            None if sign_required => return self.err("expected '+' or '-'"),
            None => false,
        };
        self.skip_ws();
        let mut value = match self.digits() {
            Some(numer) => {
                let mut q = BigRational::from_integer(numer);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let Some(denom) = self.digits() else {
                        return self.err("expected denominator digits");
                    };
                    if denom.is_zero() {
                        return self.err("zero denominator");
                    }
                    q /= BigRational::from_integer(denom);
                }
                Some(q)
            }
            None => None,
        };
        let imaginary = if self.peek() == Some(b'i') {
            self.pos += 1;
            if value.is_none() {
                value = Some(BigRational::one());
            }
            true
        } else {
            false
        };
        let Some(mut v) = value else {
            return self.err("expected a number or 'i'");
        };
        if negative {
            v = -v;
        }
        Ok((v, imaginary))
    }
}

/// Parses the grammar documented at module level.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return cur.err("empty input");
    }
    let mut out = GaussianRational::zero();
    let (v, imag) = cur.term(false)?;
    if imag {
        out.im = v;
    } else {
        out.re = v;
    }
    if cur.peek().is_some() {
        let at = cur.pos;
        let (v, imag2) = cur.term(true)?;
        if imag2 == imag {
            return Err(Error::Parse {
                position: at,
                message: if imag {
                    "two imaginary terms".into()
                } else {
                    "two real terms".into()
                },
            });
        }
        if imag2 {
            out.im = v;
        } else {
            out.re = v;
        }
    }
    if cur.peek().is_some() {
        return cur.err("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        parse_gaussian(s).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arith_examples() {
        let i = GaussianRational::i();
        assert_eq!(
            gaussian_arith(GaussOp::Mul, &i, &i).unwrap(),
            GaussianRational::from(-1)
        );
        assert_eq!(
            gaussian_arith(GaussOp::Mul, &g("3+4i"), &g("3-4i")).unwrap(),
            GaussianRational::from(25)
        );
        assert_eq!(
            gaussian_arith(GaussOp::Div, &g("1"), &g("2")).unwrap(),
            GaussianRational::from_rational(q(1, 2))
        );
        assert_eq!(
            gaussian_arith(GaussOp::Div, &g("1"), &GaussianRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(g("i").pow(2).unwrap(), g("-1"));
        assert_eq!(g("2").pow(26).unwrap(), GaussianRational::from(67108864));
        assert_eq!(g("1/2").pow(3).unwrap(), g("1/8"));
        assert_eq!(GaussianRational::zero().pow(0), Err(Error::IndeterminateForm));
        assert_eq!(GaussianRational::zero().pow(3).unwrap(), GaussianRational::zero());
        assert_eq!(g("i").pow(4).unwrap(), GaussianRational::one());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(g("2"), GaussianRational::from(2));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-3/2+1/2i"), GaussianRational::new(q(-3, 2), q(1, 2)));
        assert_eq!(g(" 4 - i "), GaussianRational::new(q(4, 1), q(-1, 1)));
        assert_eq!(g("-i"), GaussianRational::new(q(0, 1), q(-1, 1)));
        assert_eq!(g("2/4"), GaussianRational::from_rational(q(1, 2)));
        assert_eq!(g("i+1"), g("1+i"));
    }

    #[test]
    fn parse_errors_carry_position() {
        for (text, pos) in [
            ("", 0),
            ("1+", 2),
            ("1/0", 3),
            ("1+2", 1),
            ("x", 0),
            ("1 2", 2),
            ("i+i", 1),
            ("3/", 2),
        ] {
            match parse_gaussian(text) {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_format() {
        assert_eq!(g("-3/2+1/2i").to_string(), "-3/2+1/2i");
        assert_eq!(g("0+2i").to_string(), "2i");
        assert_eq!(g("5-i").to_string(), "5-i");
        assert_eq!(g("6/3").to_string(), "2");
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(g("-20-22i").to_string(), "-20-22i");
    }

    #[test]
    fn integral_flags_fractions() {
        assert_eq!(integral(q(6, 3), "t").unwrap(), BigInt::from(2));
        assert!(matches!(
            integral(q(1, 3), "t"),
            Err(Error::IntegralityViolation { .. })
        ));
    }
}
