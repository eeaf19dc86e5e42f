//! Arithmetic progressions `a, a+d, …, a+(k−1)d` and almost-arithmetic
//! progressions `a, ha+d, …, ha+(k−1)d`.
//!
//! Both families share the decomposition `a − 1 = q(k−1) + r`,
//! `0 ≤ r < k−1`. The Apéry table is laid out in `q` full rows of `k−1`
//! entries plus a last row of `r` entries, which is where the `q`, `r`
//! terms in every formula come from.

use num::integer::gcd;
use num::BigInt;

use super::{c, z};
use crate::error::{Error, Result};
use crate::exactnum::integral;

fn check_common(a: u64, d: u64, k: u64) -> Result<()> {
    let mut problems = Vec::new();
    if d == 0 {
        problems.push("d must be positive".to_string());
    }
    if gcd(a, d) != 1 {
        problems.push(format!("gcd(a, d) = {} ≠ 1", gcd(a, d)));
    }
    if k < 2 || k > a {
        problems.push(format!("need 2 ≤ k ≤ a, got k = {k}, a = {a}"));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParams(problems.join("; ")))
    }
}

/// Validated `(a, d, k)` with `a − 1 = q(k−1) + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct APParams {
    a: u64,
    d: u64,
    k: u64,
    q: u64,
    r: u64,
}

impl APParams {
    pub fn new(a: u64, d: u64, k: u64) -> Result<Self> {
        check_common(a, d, k)?;
        let (q, r) = ((a - 1) / (k - 1), (a - 1) % (k - 1));
        Ok(Self { a, d, k, q, r })
    }

    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn r(&self) -> u64 {
        self.r
    }

    /// The largest generator `a + (k−1)d`.
    pub fn last(&self) -> u64 {
        self.a + (self.k - 1) * self.d
    }

    pub fn generators(&self) -> Vec<u64> {
        (0..self.k).map(|i| self.a + i * self.d).collect()
    }
}

/// Validated `(a, d, h, k)`; `q`, `r` as for [`APParams`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlmostAPParams {
    a: u64,
    d: u64,
    h: u64,
    k: u64,
    q: u64,
    r: u64,
}

impl AlmostAPParams {
    pub fn new(a: u64, d: u64, h: u64, k: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidParams("h must be positive".into()));
        }
        check_common(a, d, k)?;
        let (q, r) = ((a - 1) / (k - 1), (a - 1) % (k - 1));
        Ok(Self { a, d, h, k, q, r })
    }

    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn h(&self) -> u64 {
        self.h
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn generators(&self) -> Vec<u64> {
        std::iter::once(self.a)
            .chain((1..self.k).map(|i| self.h * self.a + i * self.d))
            .collect()
    }
}

/// Roberts: `⌊(a−2)/(k−1)⌋ a + (a−1) d`.
pub fn ap_frobenius(p: &APParams) -> BigInt {
    BigInt::from((p.a - 2) / (p.k - 1)) * p.a + BigInt::from(p.a - 1) * p.d
}

/// Grant: `((a−1)(q+d) + r(q+1)) / 2`.
pub fn ap_genus(p: &APParams) -> Result<BigInt> {
    let (a, d, q, r) = (z(p.a), z(p.d), z(p.q), z(p.r));
    let one = c(1);
    let value = ((&a - &one) * (&q + &d) + &r * (&q + &one)) / c(2);
    integral(value, "AP genus")
}

/// Sylvester sum of an arithmetic progression.
pub fn ap_sum(p: &APParams) -> Result<BigInt> {
    let (a, d, q, r) = (z(p.a), z(p.d), z(p.q), z(p.r));
    let one = c(1);
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let d2 = &d * &d;
    let bracket = c(2) * &a * &q3 * (&a + c(2) * &r - &one)
        + &q2 * (&a * &d * (c(4) * &a + c(4) * &r - c(5)) - &d * (c(2) * &r - &one) * (&r + &one) + c(6) * &a * &r)
        - &q * (c(3) * &d * &r * (&r + &one)
            - (&a - &one) * ((&a - &one) * (&d2 - &one) + &a * &d2)
            - c(2) * &a * &r * (c(3) * &d + &one))
        - &d * (&a - &r - &one) * (&a - &r - &one);
    integral(bracket / (c(12) * &q), "AP sum")
}

/// `(Σ m_i, Σ m_i²)` over the nonzero Apéry entries of the progression.
pub fn ap_apery_moments(p: &APParams) -> Result<(BigInt, BigInt)> {
    moments(p.a, p.d, 1, p.q, p.r)
}

/// Selmer: `(h⌊(a−2)/(k−1)⌋ + h − 1) a + (a−1) d`.
pub fn almost_ap_frobenius(p: &AlmostAPParams) -> BigInt {
    BigInt::from(p.h * ((p.a - 2) / (p.k - 1)) + p.h - 1) * p.a + BigInt::from(p.a - 1) * p.d
}

/// Selmer: `((a−1)(hq + d + h − 1) + h r (q+1)) / 2`.
pub fn almost_ap_genus(p: &AlmostAPParams) -> Result<BigInt> {
    let (a, d, h, q, r) = (z(p.a), z(p.d), z(p.h), z(p.q), z(p.r));
    let one = c(1);
    let value = ((&a - &one) * (&h * &q + &d + &h - &one) + &h * &r * (&q + &one)) / c(2);
    integral(value, "almost-AP genus")
}

/// Sylvester sum of an almost-arithmetic progression; equals [`ap_sum`]
/// at `h = 1`.
pub fn almost_ap_sum(p: &AlmostAPParams) -> Result<BigInt> {
    let (a, d, h, q, r) = (z(p.a), z(p.d), z(p.h), z(p.q), z(p.r));
    let one = c(1);
    let h2 = &h * &h;
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let bracket = c(2) * &h2 * &a * &q3 * (&a + c(2) * &r - &one)
        + &q2
            * (c(3) * &h2 * &a * (&a + c(3) * &r - &one)
                + &h * (&a * &d * (c(4) * &a + c(4) * &r - c(5))
                    - &d * (c(2) * &r - &one) * (&r + &one)
                    - c(3) * &a * (&a + &r - &one)))
        + &q * (&h2 * &a * (&a + c(5) * &r - &one)
            + (&a - &one) * (&d - &one) * (c(2) * &a * &d - &a - &d - &one)
            + c(3) * &h * ((&a + &r - &one) * (&d * (&a + &r) - &a) - c(2) * &d * &r * &r))
        - &h * &d * (&a - &r - &one) * (&a - &r - &one);
    integral(bracket / (c(12) * &q), "almost-AP sum")
}

/// `(Σ m_i, Σ m_i²)` for the almost-arithmetic family.
pub fn almost_ap_apery_moments(p: &AlmostAPParams) -> Result<(BigInt, BigInt)> {
    moments(p.a, p.d, p.h, p.q, p.r)
}

/// Shared first and second Apéry moments; `h = 1` is the plain progression.
fn moments(a: u64, d: u64, h: u64, q: u64, r: u64) -> Result<(BigInt, BigInt)> {
    let (a, d, h, q, r) = (z(a), z(d), z(h), z(q), z(r));
    let one = c(1);
    let first = &a / c(2) * ((&a - &one) * (&h * (&q + &one) + &d) + &h * &r * (&q + &one));
    let tail = &a - &r - &one;
    let second = (&q + &one) * ((c(2) * &q + &one) * &tail + c(6) * &r * (&q + &one)) / c(6) * &h * &h * &a * &a
        + (&a - &one) * &a * (c(2) * &a - &one) / c(6) * &d * &d
        + c(2)
            * &h
            * &a
            * &d
            * (&q + &one)
            * (&tail * (&q * (c(4) * &a - c(4) * &r - &one) - &tail) / (c(12) * &q)
                + &r * (c(2) * &a - &r - &one) / c(2));
    Ok((
        integral(first, "Apéry first moment")?,
        integral(second, "Apéry second moment")?,
    ))
}
