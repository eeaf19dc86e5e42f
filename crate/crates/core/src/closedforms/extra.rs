//! Arithmetic progression with one additional term:
//! `a, a+d, …, a+(k−1)d, a+Kd` with `K > k`.
//!
//! With `K − 1 = q(k−1) + r`, `a = αK + β` and (for `β > 0`)
//! `β − 1 = γ(k−1) + δ`, the Apéry table is built from `α` lines of the
//! progression's own table shifted by multiples of `a+Kd`, plus a partial
//! line of `β` entries. `S1`/`S2` are the sum and square sum of one line,
//! `T1`/`T2` those of the partial line.
//!
//! That layout is only the true Apéry table when no residue is reached
//! more cheaply by wrapping around modulo `a`. [`extra_construction_is_minimal`]
//! decides this exactly, and parameters failing it are rejected.

use num::integer::gcd;
use num::BigInt;

use super::{c, z};
use crate::error::{Error, Result};
use crate::exactnum::integral;

/// Validated `(a, d, k, K)` with the derived `q, r, α, β, γ, δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtraTermParams {
    a: u64,
    d: u64,
    k: u64,
    big_k: u64,
    q: u64,
    r: u64,
    alpha: u64,
    beta: u64,
    gamma: u64,
    delta: u64,
}

fn ceil_div(x: i128, y: i128) -> i128 {
    (x + y - 1).div_euclid(y)
}

/// Whether the line construction yields the minimal element of every
/// residue class mod `a`.
///
/// Residue `t·d` is reached with `c(t) = ⌊t/K⌋ + ⌈(t mod K)/(k−1)⌉`
/// generators at cost `c(t)·a + t·d`; the construction uses `t ∈ [1, a−1]`
/// and is minimal iff no `t + j·a` is cheaper. Only `t mod K` matters and
/// `j ≤ ⌈(K−1)/(k−1)⌉`, so the check is `O(K²/k)`.
pub fn extra_construction_is_minimal(a: u64, d: u64, k: u64, big_k: u64) -> bool {
    let (a, d, k, big_k) = (a as i128, d as i128, k as i128, big_k as i128);
    let (alpha, beta) = (a / big_k, a % big_k);
    let step = k - 1;
    let jmax = ceil_div(big_k - 1, step);
    let umax = if alpha >= 1 { big_k - 1 } else { a - 1 };
    (1..=umax).all(|u| {
        (1..=jmax).all(|j| {
            let v = u + j * beta;
            ceil_div(u, step) - ceil_div(v % big_k, step) - v / big_k - j * alpha <= j * d
        })
    })
}

impl ExtraTermParams {
    pub fn new(a: u64, d: u64, k: u64, big_k: u64) -> Result<Self> {
        let mut problems = Vec::new();
        if d == 0 {
            problems.push("d must be positive".to_string());
        }
        if gcd(a, d) != 1 {
            problems.push(format!("gcd(a, d) = {} ≠ 1", gcd(a, d)));
        }
        if k < 2 {
            problems.push(format!("need k ≥ 2, got {k}"));
        }
        if big_k <= k {
            problems.push(format!("need K > k, got K = {big_k}, k = {k}"));
        }
        if a < k {
            problems.push(format!("need a ≥ k, got a = {a}, k = {k}"));
        }
        if !problems.is_empty() {
            return Err(Error::InvalidParams(problems.join("; ")));
        }
        if !extra_construction_is_minimal(a, d, k, big_k) {
            return Err(Error::InvalidParams(format!(
                "residue construction is not minimal for (a, d, k, K) = ({a}, {d}, {k}, {big_k}); \
                 use the generic engine"
            )));
        }
        let (q, r) = ((big_k - 1) / (k - 1), (big_k - 1) % (k - 1));
        let (alpha, beta) = (a / big_k, a % big_k);
        let (gamma, delta) = if beta > 0 {
            ((beta - 1) / (k - 1), (beta - 1) % (k - 1))
        } else {
            (0, 0)
        };
        Ok(Self {
            a,
            d,
            k,
            big_k,
            q,
            r,
            alpha,
            beta,
            gamma,
            delta,
        })
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
    pub fn big_k(&self) -> u64 {
        self.big_k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn alpha(&self) -> u64 {
        self.alpha
    }
    pub fn beta(&self) -> u64 {
        self.beta
    }
    /// Zero when `β = 0`.
    pub fn gamma(&self) -> u64 {
        self.gamma
    }
    /// Zero when `β = 0`.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// The additional generator `a + Kd`.
    pub fn extra(&self) -> u64 {
        self.a + self.big_k * self.d
    }

    pub fn generators(&self) -> Vec<u64> {
        (0..self.k).map(|i| self.a + i * self.d).chain([self.extra()]).collect()
    }
}

/// Same as [`ExtraTermParams::new`].
pub fn decompose_extra(a: u64, d: u64, k: u64, big_k: u64) -> Result<ExtraTermParams> {
    ExtraTermParams::new(a, d, k, big_k)
}

/// Sum of one full line: `(q+1)(K−1+r)a/2 + (K−1)K d/2`.
pub fn extra_line_sum(p: &ExtraTermParams) -> Result<BigInt> {
    let (a, d, kk, q, r) = (z(p.a), z(p.d), z(p.big_k), z(p.q), z(p.r));
    let one = c(1);
    let value = (&q + &one) * (&kk - &one + &r) / c(2) * &a + (&kk - &one) * &kk / c(2) * &d;
    integral(value, "extra-term line sum")
}

/// Square sum of one full line.
pub fn extra_line_square_sum(p: &ExtraTermParams) -> Result<BigInt> {
    let (a, d, kk, q, r) = (z(p.a), z(p.d), z(p.big_k), z(p.q), z(p.r));
    let one = c(1);
    let tail = &kk - &r - &one;
    let value = (&q + &one) * ((c(2) * &q + &one) * &tail + c(6) * &r * (&q + &one)) / c(6) * &a * &a
        + (&kk - &one) * &kk * (c(2) * &kk - &one) / c(6) * &d * &d
        + c(2)
            * &a
            * &d
            * (&q + &one)
            * (&tail * (&q * (c(4) * &kk - c(4) * &r - &one) - &tail) / (c(12) * &q)
                + &r * (c(2) * &kk - &r - &one) / c(2));
    integral(value, "extra-term line square sum")
}

/// Sum of the partial line; zero when `β = 0`.
pub fn extra_tail_sum(p: &ExtraTermParams) -> Result<BigInt> {
    if p.beta == 0 {
        return Ok(BigInt::from(0));
    }
    let (a, d, kk) = (z(p.a), z(p.d), z(p.big_k));
    let (alpha, beta, gamma, delta) = (z(p.alpha), z(p.beta), z(p.gamma), z(p.delta));
    let one = c(1);
    let value = (&alpha * &beta + (&beta + &delta - &one) * (&gamma + &one) / c(2)) * &a
        + (&alpha * &beta * &kk
            + (&beta - &delta - &one) * (&beta - &delta) / c(2)
            + &delta * (c(2) * &beta - &delta - &one) / c(2))
            * &d;
    integral(value, "extra-term tail sum")
}

/// Square sum of the partial line without the `α(a+Kd)` offset.
fn tail_offset_free_square_sum(p: &ExtraTermParams) -> Result<BigInt> {
    let (a, d, k) = (z(p.a), z(p.d), z(p.k));
    let (beta, gamma, delta) = (z(p.beta), z(p.gamma), z(p.delta));
    let one = c(1);
    let bd1 = &beta - &delta - &one;
    let value =
        (&bd1 * (&gamma + &one) * (c(2) * &gamma + &one) / c(6) + &delta * (&gamma + &one) * (&gamma + &one)) * &a * &a
            + (&bd1 * (c(4) * (&beta - &delta) - &k) / c(6) + &delta * (c(2) * &beta - &delta - &one))
                * (&gamma + &one)
                * &a
                * &d
            + (&beta - &one) * &beta * (c(2) * &beta - &one) / c(6) * &d * &d;
    integral(value, "extra-term tail offset-free square sum")
}

/// Square sum of the partial line; zero when `β = 0`.
pub fn extra_tail_square_sum(p: &ExtraTermParams) -> Result<BigInt> {
    if p.beta == 0 {
        return Ok(BigInt::from(0));
    }
    let offset = BigInt::from(p.alpha) * BigInt::from(p.extra());
    let t1 = extra_tail_sum(p)?;
    let t3 = tail_offset_free_square_sum(p)?;
    let beta = BigInt::from(p.beta);
    Ok(&beta * &offset * &offset + BigInt::from(2) * &offset * (t1 - &offset * &beta) + t3)
}

/// Sylvester sum of `a, a+d, …, a+(k−1)d, a+Kd`.
pub fn extra_term_sum(p: &ExtraTermParams) -> Result<BigInt> {
    let (a, d, kk, alpha) = (z(p.a), z(p.d), z(p.big_k), z(p.alpha));
    let s1 = crate::exactnum::rat(extra_line_sum(p)?);
    let s2 = crate::exactnum::rat(extra_line_square_sum(p)?);
    let t1 = crate::exactnum::rat(extra_tail_sum(p)?);
    let t2 = crate::exactnum::rat(extra_tail_square_sum(p)?);
    let one = c(1);
    let ext = &a + &kk * &d;
    let value =
        &alpha * (&alpha - &one) * &ext * &kk * (c(2) * (&alpha - c(2)) * &a + (c(2) * &alpha - &one) * &kk * &d)
            / (c(12) * &a)
            + &alpha * ((&alpha - c(2)) * &a + (&alpha - &one) * &kk * &d) / (c(2) * &a) * s1
            + &alpha * s2 / (c(2) * &a)
            - t1 / c(2)
            + t2 / (c(2) * &a)
            + (&a * &a - &one) / c(12);
    integral(value, "extra-term sum")
}

fn check_quadruple(a: u64, extra: u64) -> Result<()> {
    if !(4..=6).contains(&extra) {
        return Err(Error::InvalidParams(format!(
            "extra offset must be 4, 5 or 6, got {extra}"
        )));
    }
    if a < 4 {
        return Err(Error::InvalidParams(format!("need a ≥ 4, got {a}")));
    }
    Ok(())
}

/// `s(a, a+1, a+2, a+c)` for `c ∈ {4, 5, 6}`: a quartic in `a` chosen by
/// `a mod c`.
pub fn quadruple_sum(a: u64, extra: u64) -> Result<BigInt> {
    check_quadruple(a, extra)?;
    let (den, cubic, rows): (i64, i64, [(i64, i64, i64); 6]) = match extra {
        4 => (
            96,
            8,
            [
                (26, 16, 0),
                (11, -38, 18),
                (14, -32, 24),
                (11, -50, 42),
                (0, 0, 0),
                (0, 0, 0),
            ],
        ),
        5 => (
            150,
            13,
            [
                (65, 35, 0),
                (41, -85, 30),
                (41, -97, 60),
                (35, -139, 120),
                (53, -19, 90),
                (0, 0, 0),
            ],
        ),
        _ => (
            216,
            21,
            [
                (189, 126, 0),
                (150, -169, -3),
                (141, -290, 48),
                (126, -441, 189),
                (141, -322, 240),
                (150, -281, 237),
            ],
        ),
    };
    let (quad, lin, cst) = rows[(a % extra) as usize];
    let x = z(a);
    let x2 = &x * &x;
    let value = (&x2 * &x2 + c(cubic) * &x2 * &x + c(quad) * &x2 + c(lin) * &x + c(cst)) / c(den);
    integral(value, "quadruple sum")
}

/// Frobenius number of `(a, a+1, a+2, a+c)`, `c ∈ {4, 5, 6}`
/// (Dulmage–Mendelsohn floor formulas).
pub fn quadruple_frobenius(a: u64, extra: u64) -> Result<BigInt> {
    check_quadruple(a, extra)?;
    let f = |shift: u64| BigInt::from((a + shift) / extra);
    let a_big = BigInt::from(a);
    Ok(match extra {
        4 => (&a_big + 1) * f(0) + f(1) + 2 * f(2) - 1,
        5 => &a_big * f(1) + f(0) + f(1) + f(2) + 2 * f(3) - 1,
        _ => &a_big * f(0) + 2 * f(0) + 2 * f(1) + 5 * f(2) + f(3) + f(4) + f(5) - 1,
    })
}

/// Genus of `(a, a+1, a+2, a+4)`: `⌊a(a+4)/8⌋`. Only `c = 4` has a
/// known closed form.
pub fn quadruple_genus(a: u64, extra: u64) -> Result<BigInt> {
    check_quadruple(a, extra)?;
    if extra != 4 {
        return Err(Error::InvalidParams(format!("no closed-form genus for offset {extra}")));
    }
    Ok(BigInt::from(a) * BigInt::from(a + 4) / 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{ap_sum, APParams};

    fn p(a: u64, d: u64, k: u64, big_k: u64) -> ExtraTermParams {
        decompose_extra(a, d, k, big_k).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let x = p(12, 5, 4, 6);
        assert_eq!((x.q(), x.r(), x.alpha(), x.beta()), (1, 2, 2, 0));
        assert_eq!(x.generators(), vec![12, 17, 22, 27, 42]);
        let x = p(14, 3, 4, 8);
        assert_eq!(
            (x.q(), x.r(), x.alpha(), x.beta(), x.gamma(), x.delta()),
            (2, 1, 1, 6, 1, 2)
        );
        let x = p(8, 1, 3, 4);
        assert_eq!((x.q(), x.r(), x.alpha(), x.beta()), (1, 1, 2, 0));
    }

    #[test]
    fn decomposition_rejects() {
        for (a, d, k, kk) in [(12, 4, 4, 6), (12, 5, 4, 4), (3, 1, 4, 6), (12, 0, 4, 6), (5, 1, 1, 3)] {
            assert!(
                matches!(decompose_extra(a, d, k, kk), Err(Error::InvalidParams(_))),
                "{a} {d} {k} {kk}"
            );
        }
        // 2·(9+8) = 34 undercuts 10 + 3·11 = 43 in residue 7
        assert!(!extra_construction_is_minimal(9, 1, 3, 8));
        assert!(decompose_extra(9, 1, 3, 8).is_err());
    }

    #[test]
    fn line_sums() {
        assert_eq!(extra_line_sum(&p(12, 5, 4, 6)).unwrap(), 159.into());
        assert_eq!(extra_line_sum(&p(14, 3, 4, 8)).unwrap(), 252.into());
        // line of (12,5,4,6): residues 5,10,…,25 → 17, 22, 27, 44, 49
        assert_eq!(
            extra_line_square_sum(&p(12, 5, 4, 6)).unwrap(),
            (17 * 17 + 22 * 22 + 27 * 27 + 44 * 44 + 49 * 49).into()
        );
    }

    #[test]
    fn tail_sums() {
        let x = p(12, 5, 4, 6);
        assert_eq!(extra_tail_sum(&x).unwrap(), 0.into());
        assert_eq!(extra_tail_square_sum(&x).unwrap(), 0.into());
        // β = 1: the single entry α(a+Kd)
        let x = p(13, 1, 3, 4);
        assert_eq!(x.beta(), 1);
        assert_eq!(extra_tail_sum(&x).unwrap(), (3 * 17).into());
        assert_eq!(extra_tail_square_sum(&x).unwrap(), (51 * 51).into());
        // (14,3,4,8): 38, 55, 58, 61, 78, 81
        let x = p(14, 3, 4, 8);
        assert_eq!(extra_tail_sum(&x).unwrap(), (38 + 55 + 58 + 61 + 78 + 81).into());
        assert_eq!(
            extra_tail_square_sum(&x).unwrap(),
            (38 * 38 + 55 * 55 + 58 * 58 + 61 * 61 + 78 * 78 + 81 * 81).into()
        );
    }

    #[test]
    fn sum_examples() {
        assert_eq!(extra_term_sum(&p(12, 5, 4, 6)).unwrap(), 1211.into());
        assert_eq!(extra_term_sum(&p(14, 3, 4, 8)).unwrap(), 953.into());
        for (a, d, k) in [(7, 2, 3), (9, 4, 4), (11, 3, 5)] {
            assert_eq!(
                extra_term_sum(&p(a, d, k, a)).unwrap(),
                ap_sum(&APParams::new(a, d, k).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn quadruple_examples() {
        assert_eq!(quadruple_sum(8, 4).unwrap(), 104.into());
        assert_eq!(quadruple_sum(9, 4).unwrap(), 135.into());
        assert_eq!(quadruple_sum(10, 4).unwrap(), 199.into());
        assert_eq!(quadruple_sum(11, 4).unwrap(), 272.into());
        assert_eq!(quadruple_frobenius(8, 4).unwrap(), 23.into());
        assert_eq!(quadruple_frobenius(11, 4).unwrap(), 32.into());
        assert_eq!(quadruple_genus(8, 4).unwrap(), 12.into());
        assert!(quadruple_genus(8, 5).is_err());
        assert!(quadruple_sum(3, 4).is_err());
        assert!(quadruple_sum(8, 7).is_err());
    }
}
