//! Two generators: Sylvester's `g` and `n`, and the Brown–Shiue sum.

use num::integer::gcd;
use num::BigInt;

use super::{c, z};
use crate::error::{Error, Result};
use crate::exactnum::integral;

fn check(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParams(format!(
            "generators must be positive, got ({a}, {b})"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::InvalidParams(format!("gcd({a}, {b}) = {} ≠ 1", gcd(a, b))));
    }
    Ok(())
}

/// `(a−1)(b−1) − 1`; −1 when either generator is 1.
pub fn two_gen_frobenius(a: u64, b: u64) -> Result<BigInt> {
    check(a, b)?;
    Ok(BigInt::from(a - 1) * BigInt::from(b - 1) - 1)
}

/// `(a−1)(b−1)/2`.
pub fn two_gen_genus(a: u64, b: u64) -> Result<BigInt> {
    check(a, b)?;
    integral(z(a - 1) * z(b - 1) / c(2), "two-generator genus")
}

/// `(a−1)(b−1)(2ab − a − b − 1)/12`.
pub fn two_gen_sum(a: u64, b: u64) -> Result<BigInt> {
    check(a, b)?;
    let (a, b) = (z(a), z(b));
    let one = c(1);
    let value = (&a - &one) * (&b - &one) * (c(2) * &a * &b - &a - &b - &one) / c(12);
    integral(value, "two-generator sum")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(two_gen_frobenius(2, 3).unwrap(), 1.into());
        assert_eq!(two_gen_frobenius(4, 7).unwrap(), 17.into());
        assert_eq!(two_gen_frobenius(1, 5).unwrap(), (-1).into());
        assert_eq!(two_gen_genus(2, 3).unwrap(), 1.into());
        assert_eq!(two_gen_genus(4, 7).unwrap(), 9.into());
        assert_eq!(two_gen_genus(1, 5).unwrap(), 0.into());
        assert_eq!(two_gen_sum(2, 3).unwrap(), 1.into());
        assert_eq!(two_gen_sum(4, 7).unwrap(), 66.into());
        // gaps of <3, 4> are 1, 2, 5
        assert_eq!(two_gen_sum(3, 4).unwrap(), 8.into());
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(matches!(two_gen_sum(4, 6), Err(Error::InvalidParams(_))));
        assert!(two_gen_frobenius(0, 1).is_err());
    }
}
