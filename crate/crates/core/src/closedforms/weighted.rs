//! Weighted sums `s^(λ) = Σ λⁿ n` over the gaps of an arithmetic
//! progression, for `λ ∈ ℚ(i)`.
//!
//! The Apéry entries of the progression are `a_{i+1} + j a_k` for
//! `j = 0..q−1`, `i = 1..k−1`, plus `a_{i+1} + q a_k` for `i = 1..r`.
//! Summing `λ^{m}` and `m λ^{m}` over that layout row by row gives
//! geometric sums in `λ^d` and `λ^{a_k}`, which is what the closed form
//! below evaluates.

use num::BigInt;

use super::ap::APParams;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

type G = GaussianRational;

struct Powers {
    lam: G,
    lam_a: G,
    lam_d: G,
    lam_ak: G,
    lam_q_ak: G,
    lam_ar1: G,
}

fn powers(p: &APParams, lambda: &G) -> Result<Powers> {
    if lambda.is_zero() {
        return Err(Error::LambdaDegenerate("lambda = 0".into()));
    }
    let ak = p.last();
    let pw = Powers {
        lam: lambda.clone(),
        lam_a: lambda.pow(p.a())?,
        lam_d: lambda.pow(p.d())?,
        lam_ak: lambda.pow(ak)?,
        lam_q_ak: lambda.pow(p.q() * ak)?,
        lam_ar1: lambda.pow(p.a() + p.r() * p.d())?,
    };
    for (value, what) in [
        (&pw.lam_d, "lambda^d"),
        (&pw.lam_a, "lambda^a"),
        (&pw.lam_ak, "lambda^a_k"),
    ] {
        if value.is_one() {
            return Err(Error::LambdaDegenerate(format!("{what} = 1")));
        }
    }
    Ok(pw)
}

fn int(x: u64) -> BigInt {
    BigInt::from(x)
}

/// `(Σ m_i λ^{m_i}, Σ λ^{m_i})` over the nonzero Apéry entries.
///
/// Requires `λ ≠ 0`, `λ^d ≠ 1`, `λ^a ≠ 1` and `λ^{a_k} ≠ 1`.
pub fn ap_weighted_apery_sums(p: &APParams, lambda: &G) -> Result<(G, G)> {
    let pw = powers(p, lambda)?;
    sums_from_powers(p, &pw)
}

fn sums_from_powers(p: &APParams, pw: &Powers) -> Result<(G, G)> {
    let one = G::one();
    let (a, d, q) = (int(p.a()), int(p.d()), int(p.q()));
    let ak = int(p.last());
    let ar1 = int(p.a() + p.r() * p.d());

    let yd = &pw.lam_d - &one;
    let yd2 = &yd * &yd;
    let xk = &pw.lam_ak - &one;
    let xk2 = &xk * &xk;

    // Σ_{i=1}^{k-1} λ^{a+id} and Σ_{i=1}^{r} λ^{a+id}
    let row = (&pw.lam_d * (&pw.lam_ak - &pw.lam_a)).checked_div(&yd)?;
    let last_row = (&pw.lam_d * (&pw.lam_ar1 - &pw.lam_a)).checked_div(&yd)?;
    // Σ_{j=0}^{q-1} λ^{j a_k}
    let geo = (&pw.lam_q_ak - &one).checked_div(&xk)?;
    // Σ_{i=1}^{k-1} a_{i+1} λ^{a_{i+1}} / λ^d
    let row_weighted = (pw.lam_ak.scale(&ak) - pw.lam_a.scale(&a)).checked_div(&yd)?
        - (&pw.lam_ak - &pw.lam_a).scale(&d).checked_div(&yd2)?;
    let last_row_weighted = (pw.lam_ar1.scale(&ar1) - pw.lam_a.scale(&a)).checked_div(&yd)?
        - (&pw.lam_ar1 - &pw.lam_a).scale(&d).checked_div(&yd2)?;
    // Σ_{j=0}^{q-1} j a_k λ^{j a_k}
    let offsets = pw.lam_q_ak.scale(&(&q * &ak)).checked_div(&xk)?
        - (pw.lam_ak.scale(&ak) * (&pw.lam_q_ak - &one)).checked_div(&xk2)?;

    let shift = &pw.lam_q_ak * &pw.lam_d;
    let weighted = &pw.lam_d * &geo * &row_weighted
        + &row * &offsets
        + &shift * &last_row_weighted
        + shift.scale(&(&q * &ak)) * (&pw.lam_ar1 - &pw.lam_a).checked_div(&yd)?;
    let plain = &row * &geo + &pw.lam_q_ak * &last_row;
    Ok((weighted, plain))
}

/// `s^(λ)(a, a+d, …, a+(k−1)d)` in closed form.
///
/// Requires `λ ≠ 0`, `λ^d ≠ 1`, `λ^a ≠ 1` and `λ^{a_k} ≠ 1`; the error
/// names the first violated condition.
pub fn ap_weighted_sum(p: &APParams, lambda: &G) -> Result<G> {
    let pw = powers(p, lambda)?;
    let (weighted, plain) = sums_from_powers(p, &pw)?;
    let one = G::one();
    let xa = &pw.lam_a - &one;
    let lm1 = &pw.lam - &one;
    let first = weighted.checked_div(&xa)?;
    let second = (pw.lam_a.scale(&int(p.a())) * (&one + &plain)).checked_div(&(&xa * &xa))?;
    let third = pw.lam.checked_div(&(&lm1 * &lm1))?;
    Ok(first - second + third)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_gaussian;
    use crate::semigroup::{apery_set, GeneratorSet};

    fn lam(s: &str) -> G {
        parse_gaussian(s).unwrap()
    }

    fn generic_pair(p: &APParams, l: &G) -> (G, G) {
        let t = apery_set(&GeneratorSet::new(p.generators()).unwrap());
        let (w, s) = t.weighted_sums(l).unwrap();
        (w, s - G::one())
    }

    #[test]
    fn weighted_sum_examples() {
        let p = APParams::new(7, 2, 3).unwrap();
        assert_eq!(ap_weighted_sum(&p, &lam("2")).unwrap(), lam("2160333442"));
        let p = APParams::new(6, 5, 4).unwrap();
        assert_eq!(ap_weighted_sum(&p, &lam("i")).unwrap(), lam("-20-22i"));
        let p = APParams::new(2, 1, 2).unwrap();
        assert_eq!(ap_weighted_sum(&p, &lam("2")).unwrap(), lam("2"));
    }

    #[test]
    fn pair_matches_generic_table() {
        let p = APParams::new(7, 2, 3).unwrap();
        assert_eq!(
            ap_weighted_apery_sums(&p, &lam("2")).unwrap(),
            generic_pair(&p, &lam("2"))
        );
        let p = APParams::new(6, 5, 4).unwrap();
        assert_eq!(
            ap_weighted_apery_sums(&p, &lam("i")).unwrap(),
            generic_pair(&p, &lam("i"))
        );
        let p = APParams::new(2, 1, 2).unwrap();
        assert_eq!(ap_weighted_apery_sums(&p, &lam("2")).unwrap(), (lam("24"), lam("8")));
    }

    #[test]
    fn degenerate_lambda_is_named() {
        let p = APParams::new(6, 5, 4).unwrap();
        let err = |l: &str| match ap_weighted_sum(&p, &lam(l)) {
            Err(Error::LambdaDegenerate(msg)) => msg,
            other => panic!("{l}: {other:?}"),
        };
        assert_eq!(err("0"), "lambda = 0");
        assert_eq!(err("1"), "lambda^d = 1");
        // a = 6 even, d = 5 odd
        assert_eq!(err("-1"), "lambda^a = 1");
        let p = APParams::new(5, 2, 3).unwrap();
        assert!(matches!(ap_weighted_sum(&p, &lam("-1")), Err(Error::LambdaDegenerate(m)) if m == "lambda^d = 1"));
        let p = APParams::new(5, 1, 3).unwrap();
        assert!(
            ap_weighted_sum(&p, &lam("-1")).is_ok(),
            "a_k = 7 odd, a = 5 odd, d = 1 odd"
        );
    }
}
