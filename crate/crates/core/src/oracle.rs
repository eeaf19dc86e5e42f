//! Brute-force ground truth: a representability bitmap built by forward
//! dynamic programming, the explicit gap list, and term-by-term sums.

use num::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::semigroup::{GapReport, GeneratorSet, Weighted};

/// Default limit on the number of bitmap cells a single scan may allocate.
pub const DEFAULT_MAX_CELLS: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_MAX_CELLS`].
pub const MAX_CELLS_ENV: &str = "FROBKIT_MAX_CELLS";

/// The cell cap in effect: `FROBKIT_MAX_CELLS` when set and parseable,
/// otherwise the default.
pub fn max_cells() -> u64 {
    std::env::var(MAX_CELLS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// `bits[n]` is true iff `n` is a nonnegative combination of the
/// generators. The scan stops once `a1` consecutive values are
/// representable; everything past `bound` is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentabilityMap {
    bound: u64,
    bits: Vec<bool>,
}

impl RepresentabilityMap {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_representable(&self, n: u64) -> bool {
        n > self.bound || self.bits[n as usize]
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(n, _)| n as u64)
            .collect()
    }
}

pub fn representability_map(gens: &GeneratorSet) -> Result<RepresentabilityMap> {
    representability_map_with_cap(gens, max_cells())
}

pub fn representability_map_with_cap(gens: &GeneratorSet, cap: u64) -> Result<RepresentabilityMap> {
    let a1 = gens.a1();
    let mut bits = vec![true];
    let mut run = 1u64;
    while run < a1 {
        let n = bits.len() as u64;
        if n >= cap {
            return Err(Error::BoundOverflow { cap });
        }
        let hit = gens.gens().iter().any(|&g| g <= n && bits[(n - g) as usize]);
        bits.push(hit);
        run = if hit { run + 1 } else { 0 };
    }
    Ok(RepresentabilityMap {
        bound: bits.len() as u64 - 1,
        bits,
    })
}

/// Ascending list of all gaps.
pub fn gaps(gens: &GeneratorSet) -> Result<Vec<u64>> {
    Ok(representability_map(gens)?.gaps())
}

/// `Σ λ^n · n` over the (ascending) gap list, one incremental power step
/// per gap. Unlike the Apéry route this has no degenerate `λ` besides 0.
pub fn direct_weighted_sum(gaps: &[u64], lambda: &GaussianRational) -> Result<GaussianRational> {
    if lambda.is_zero() {
        return Err(Error::LambdaDegenerate("lambda = 0".into()));
    }
    let mut total = GaussianRational::zero();
    let mut power = GaussianRational::one();
    let mut prev = 0u64;
    for &n in gaps {
        power = &power * &lambda.pow(n - prev)?;
        prev = n;
        total = &total + &power.scale(&BigInt::from(n));
    }
    Ok(total)
}

/// Everything computed by enumeration; the gap list is always included.
pub fn oracle_report(gens: &GeneratorSet, lambda: Option<&GaussianRational>) -> Result<GapReport> {
    let gaps = gaps(gens)?;
    let weighted = match lambda {
        Some(l) => Some(Weighted {
            lambda: l.clone(),
            value: direct_weighted_sum(&gaps, l)?,
        }),
        None => None,
    };
    Ok(GapReport {
        generators: gens.gens().to_vec(),
        frobenius: gaps.last().map_or(BigInt::from(-1), |&g| BigInt::from(g)),
        genus: BigInt::from(gaps.len()),
        sum: gaps.iter().map(|&g| BigInt::from(g)).sum(),
        gaps: Some(gaps),
        weighted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_gaussian;

    fn set(g: &[u64]) -> GeneratorSet {
        GeneratorSet::new(g.iter().copied()).unwrap()
    }

    #[test]
    fn bitmap_examples() {
        let m = representability_map(&set(&[4, 7, 11])).unwrap();
        assert_eq!(m.gaps(), vec![1, 2, 3, 5, 6, 9, 10, 13, 17]);
        assert!(m.bits()[0]);
        let tail = &m.bits()[m.bits().len() - 4..];
        assert!(tail.iter().all(|&b| b));
        assert!(m.is_representable(1_000_000));

        assert_eq!(gaps(&set(&[2, 3])).unwrap(), vec![1]);
        assert!(gaps(&set(&[1])).unwrap().is_empty());
    }

    #[test]
    fn reference_gap_lists() {
        assert_eq!(
            gaps(&set(&[7, 9, 11])).unwrap(),
            vec![1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26]
        );
        let g = gaps(&set(&[12, 17, 22, 27, 42])).unwrap();
        assert_eq!(g.len(), 42);
        assert_eq!(g.iter().sum::<u64>(), 1211);
        assert_eq!(&g[g.len() - 4..], &[62, 67, 74, 79]);
    }

    #[test]
    fn report_examples() {
        assert_eq!(
            oracle_report(&set(&[14, 17, 20, 23, 38]), None).unwrap().sum,
            953.into()
        );
        assert_eq!(
            oracle_report(&set(&[16, 17, 18, 20, 24]), None).unwrap().sum,
            684.into()
        );
        let two = parse_gaussian("2").unwrap();
        let r = oracle_report(&set(&[7, 9, 11]), Some(&two)).unwrap();
        assert_eq!(
            r.weighted.as_ref().unwrap().value,
            parse_gaussian("2160333442").unwrap()
        );
        assert!(r.is_consistent());
        assert_eq!(r.frobenius, 26.into());
    }

    #[test]
    fn lambda_one_allowed_zero_rejected() {
        let one = parse_gaussian("1").unwrap();
        let r = oracle_report(&set(&[4, 7, 11]), Some(&one)).unwrap();
        assert_eq!(r.weighted.unwrap().value, parse_gaussian("66").unwrap());
        let zero = GaussianRational::zero();
        assert!(matches!(
            oracle_report(&set(&[4, 7, 11]), Some(&zero)),
            Err(Error::LambdaDegenerate(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            representability_map_with_cap(&set(&[97, 101]), 1000),
            Err(Error::BoundOverflow { cap: 1000 })
        );
        assert!(representability_map_with_cap(&set(&[97, 101]), 100_000).is_ok());
    }
}
