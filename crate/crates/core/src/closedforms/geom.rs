//! Geometric-like sequences `a, a+1, a+2, a+4, …, a+2^k`.
//!
//! With `a = 2^k q + r`, residue `u` is reached by writing `u` in binary,
//! so its Apéry entry costs `popcount(u)` generators. The layout has `q`
//! full blocks of `2^k` residues and a partial block of `r`.
//! [`GeomParams::new`] rejects parameters where wrapping around modulo `a`
//! undercuts that layout.

use num::BigInt;

use super::{c, z};
use crate::error::{Error, Result};
use crate::exactnum::{integral, rat};

/// Largest `k` accepted; the minimality check walks all `2^k` residues.
pub const GEOM_MAX_K: u32 = 20;

/// Exponent of 2 in `n!` (Legendre): `Σ_{i≥1} ⌊n/2^i⌋`.
pub fn factorial_exponent_of_two(n: u64) -> u64 {
    n - u64::from(n.count_ones())
}

/// Number of ones in the binary representation of `n`.
pub fn binary_digit_sum(n: u64) -> u64 {
    u64::from(n.count_ones())
}

/// Validated `(a, k)` with `a = 2^k q + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeomParams {
    a: u64,
    k: u32,
    q: u64,
    r: u64,
}

/// Whether the binary layout gives the minimal element of every residue
/// class mod `a`. Exact, `O(k·2^k)`.
pub fn geom_construction_is_minimal(a: u64, k: u32) -> bool {
    let p = 1i128 << k;
    let (q, r) = (a as i128 / p, a as i128 % p);
    let pop = |x: i128| i128::from(x.count_ones());
    (1..p).all(|u| {
        (1..=i128::from(k)).all(|j| {
            let v = u + j * r;
            pop(u) - j * q - v / p - pop(v % p) <= j
        })
    })
}

impl GeomParams {
    pub fn new(a: u64, k: u32) -> Result<Self> {
        if !(2..=GEOM_MAX_K).contains(&k) {
            return Err(Error::InvalidParams(format!("need 2 ≤ k ≤ {GEOM_MAX_K}, got {k}")));
        }
        let p = 1u64 << k;
        if a < p {
            return Err(Error::InvalidParams(format!("need a ≥ 2^k = {p}, got {a}")));
        }
        if !geom_construction_is_minimal(a, k) {
            return Err(Error::InvalidParams(format!(
                "residue construction is not minimal for (a, k) = ({a}, {k}); use the generic engine"
            )));
        }
        Ok(Self {
            a,
            k,
            q: a / p,
            r: a % p,
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn k(&self) -> u32 {
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
            .chain((0..=self.k).map(|i| self.a + (1u64 << i)))
            .collect()
    }
}

/// Sum of the partial block; zero when `r = 0`.
pub fn geom_tail_sum(p: &GeomParams) -> Result<BigInt> {
    if p.r == 0 {
        return Ok(BigInt::from(0));
    }
    let (a, q, r) = (z(p.a), z(p.q), z(p.r));
    let s1: u64 = (1..p.r).map(factorial_exponent_of_two).sum();
    let value = (&r * (&r + c(2) * &q + c(1)) / c(2) - z(s1)) * &a - &r * (&r + c(1)) / c(2);
    integral(value, "geometric tail sum")
}

/// Square sum of the partial block; zero when `r = 0`.
pub fn geom_tail_square_sum(p: &GeomParams) -> Result<BigInt> {
    if p.r == 0 {
        return Ok(BigInt::from(0));
    }
    let (a, q, r) = (z(p.a), z(p.q), z(p.r));
    let mut quad = BigInt::from(0);
    let mut lin = BigInt::from(0);
    for j in 1..p.r {
        let s = BigInt::from(factorial_exponent_of_two(j));
        quad += &s * &s - 2 * BigInt::from(j) * &s - 2 * BigInt::from(p.q + 1) * &s;
        lin += 2 * BigInt::from(p.r - j) * &s;
    }
    let one = c(1);
    let value = (rat(quad) + &r * (c(6) * &q * (&q + &r + &one) + (&r + &one) * (c(2) * &r + &one)) / c(6)) * &a * &a
        + (rat(lin) - &r * (&r + &one) * (c(3) * &q + &r + c(2)) / c(3)) * &a
        + &r * (&r + &one) * (c(2) * &r + &one) / c(6);
    integral(value, "geometric tail square sum")
}

/// Sylvester sum of `a, a+1, a+2, a+4, …, a+2^k`.
pub fn geom_sum(p: &GeomParams) -> Result<BigInt> {
    let (a, q, k) = (z(p.a), z(p.q), c(i64::from(p.k)));
    let pk = rat(BigInt::from(1u64) << p.k);
    let one = c(1);
    let t1 = rat(geom_tail_sum(p)?);
    let t2 = rat(geom_tail_square_sum(p)?);
    let value = &pk * &q / c(24) * (c(4) * (&q - &one) * (&q - c(2)) + c(3) * &k * (c(2) * &q + &k - c(3))) * &a
        + (&pk * &pk * &q * (c(4) * &q * &q + c(3) * &k * &q - c(6) * &q + c(2)) - c(3) * &pk * &q * (&q + &k - &one))
            / c(12)
        + &pk * &q / (c(12) * &a) * (c(2) * &pk * &pk * &q * &q - c(3) * &pk * &q + &one)
        - t1 / c(2)
        + t2 / (c(2) * &a)
        + (&a * &a - &one) / c(12);
    integral(value, "geometric sum")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u64, k: u32) -> GeomParams {
        GeomParams::new(a, k).unwrap()
    }

    #[test]
    fn digit_functions() {
        assert_eq!(factorial_exponent_of_two(0), 0);
        assert_eq!(factorial_exponent_of_two(3), 1);
        assert_eq!(factorial_exponent_of_two(8), 7);
        assert_eq!(binary_digit_sum(0), 0);
        assert_eq!(binary_digit_sum(7), 3);
        for k in 0..=62 {
            assert_eq!(binary_digit_sum(1 << k), 1);
        }
        let legendre = |n: u64| (1..64).map(|i| n >> i).sum::<u64>();
        for n in [0, 1, 5, 100, 12345, 1 << 40] {
            assert_eq!(factorial_exponent_of_two(n), legendre(n));
        }
    }

    #[test]
    fn params() {
        let x = p(25, 3);
        assert_eq!((x.q(), x.r()), (3, 1));
        assert_eq!(x.generators(), vec![25, 26, 27, 29, 33]);
        assert!(GeomParams::new(7, 3).is_err());
        assert!(GeomParams::new(25, 1).is_err());
        assert!(GeomParams::new(17, 4).is_err());
        assert!(!geom_construction_is_minimal(17, 4));
    }

    #[test]
    fn tails() {
        assert_eq!(geom_tail_sum(&p(16, 3)).unwrap(), 0.into());
        assert_eq!(geom_tail_square_sum(&p(16, 3)).unwrap(), 0.into());
        assert_eq!(geom_tail_sum(&p(25, 3)).unwrap(), 99.into());
        assert_eq!(geom_tail_square_sum(&p(25, 3)).unwrap(), (99 * 99).into());
    }

    #[test]
    fn sums() {
        assert_eq!(geom_sum(&p(16, 3)).unwrap(), 684.into());
        assert_eq!(geom_sum(&p(25, 3)).unwrap(), 2557.into());
        assert_eq!(geom_sum(&p(25, 4)).unwrap(), 1827.into());
    }
}
