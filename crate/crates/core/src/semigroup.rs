//! Generic engine: the Apéry table of a generator set and every invariant
//! that follows from it.
//!
//! For base `a1` (the smallest generator), `m[i]` is the least element of
//! the semigroup congruent to `i` mod `a1`. Then
//!
//! * `g = max m[i] − a1`
//! * `n = (1/a1) Σ m[i] − (a1 − 1)/2`
//! * `s = (1/(2 a1)) Σ m[i]² − (1/2) Σ m[i] + (a1² − 1)/12`
//! * `s^(λ) = Σ m_i λ^{m_i}/(λ^{a1} − 1) − a1 λ^{a1} Σ λ^{m_i}/(λ^{a1} − 1)² + λ/(λ − 1)²`
//!
//! with all sums over `i ≥ 1` except the two weighted ones, which include
//! `m[0] = 0`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num::integer::gcd;
use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};
use crate::exactnum::{integral, rat, GaussianRational};

/// Sorted, deduplicated, coprime positive generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    pub fn new(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut gens: Vec<u64> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidGenerators("generators must be positive".into()));
        }
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::InvalidGenerators(format!("gcd of generators is {g}, not 1")));
        }
        Ok(Self { gens })
    }

    /// The smallest generator, used as the Apéry base.
    pub fn a1(&self) -> u64 {
        self.gens[0]
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_one(&self) -> bool {
        self.gens[0] == 1
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Minimal representable element in each residue class mod `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    base: u64,
    m: Vec<u128>,
}

/// Dijkstra over residues mod `a1`: an edge `i → (i + a_j) mod a1` of
/// weight `a_j` for every generator not divisible by `a1`.
pub fn apery_set(gens: &GeneratorSet) -> AperyTable {
    let base = gens.a1();
    let n = base as usize;
    let steps: Vec<(usize, u128)> = gens.gens()[1..]
        .iter()
        .filter(|&&g| g % base != 0)
        .map(|&g| ((g % base) as usize, g as u128))
        .collect();

    let mut dist = vec![u128::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u128, 0usize)));
    while let Some(Reverse((d, i))) = heap.pop() {
        if d > dist[i] {
            continue;
        }
        for &(step, w) in &steps {
            let mut j = i + step;
            if j >= n {
                j -= n;
            }
            let nd = d + w;
            if nd < dist[j] {
                dist[j] = nd;
                heap.push(Reverse((nd, j)));
            }
        }
    }
    debug_assert!(
        dist.iter().all(|&d| d != u128::MAX),
        "coprime set reaches every residue"
    );
    AperyTable { base, m: dist }
}

impl AperyTable {
    /// Wraps a precomputed table after checking `m[0] = 0` and `m[i] ≡ i`.
    /// Minimality cannot be checked without the generators.
    pub fn from_raw(base: u64, m: Vec<u128>) -> Result<Self> {
        if base == 0 || m.len() as u64 != base {
            return Err(Error::InvalidParams(format!(
                "table length {} does not match base {base}",
                m.len()
            )));
        }
        if m[0] != 0 {
            return Err(Error::InvalidParams("m[0] must be 0".into()));
        }
        if let Some(i) = (0..m.len()).find(|&i| m[i] % base as u128 != i as u128) {
            return Err(Error::InvalidParams(format!(
                "m[{i}] = {} is not ≡ {i} mod {base}",
                m[i]
            )));
        }
        Ok(Self { base, m })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn entries(&self) -> &[u128] {
        &self.m
    }

    /// Largest gap, or −1 when there are none (base 1).
    pub fn frobenius(&self) -> BigInt {
        match self.m.iter().max() {
            Some(&max) if self.base > 1 => BigInt::from(max) - BigInt::from(self.base),
            _ => BigInt::from(-1),
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> Result<BigInt> {
        let a1 = rat(self.base);
        let value = rat(self.power_sum(1)) / &a1 - (a1 - BigRational::one()) / rat(2);
        integral(value, "genus from Apéry table")
    }

    /// Sum of the gaps.
    pub fn sylvester_sum(&self) -> Result<BigInt> {
        let a1 = rat(self.base);
        let value = rat(self.power_sum(2)) / (rat(2) * &a1) - rat(self.power_sum(1)) / rat(2)
            + (&a1 * &a1 - BigRational::one()) / rat(12);
        integral(value, "Sylvester sum from Apéry table")
    }

    /// `Σ m[i]^e` over `i = 1..base−1`.
    pub fn power_sum(&self, e: u32) -> BigInt {
        self.m[1..].iter().map(|&x| num::pow(BigInt::from(x), e as usize)).sum()
    }

    /// `(Σ m_i λ^{m_i}, Σ λ^{m_i})` over `i = 0..base−1`; the `i = 0`
    /// term contributes `(0, 1)`.
    pub fn weighted_sums(&self, lambda: &GaussianRational) -> Result<(GaussianRational, GaussianRational)> {
        if lambda.is_zero() {
            return Err(Error::LambdaDegenerate("lambda = 0".into()));
        }
        // Ascending order lets each power reuse the previous one.
        let mut sorted: Vec<u128> = self.m.clone();
        sorted.sort_unstable();
        let mut weighted = GaussianRational::zero();
        let mut plain = GaussianRational::zero();
        let mut power = GaussianRational::one();
        let mut prev = 0u128;
        for &x in &sorted {
            power = &power * &pow_u128(lambda, x - prev)?;
            prev = x;
            weighted = &weighted + &power.scale(&BigInt::from(x));
            plain = &plain + &power;
        }
        Ok((weighted, plain))
    }

    /// `s^(λ)` of the generator set. Requires `λ ≠ 0` and `λ^base ≠ 1`;
    /// the latter also excludes `λ = 1`, for which use [`Self::sylvester_sum`].
    pub fn weighted_sum(&self, lambda: &GaussianRational) -> Result<GaussianRational> {
        if lambda.is_zero() {
            return Err(Error::LambdaDegenerate("lambda = 0".into()));
        }
        let lam_base = lambda.pow(self.base)?;
        if lam_base.is_one() {
            return Err(Error::LambdaDegenerate(format!("lambda^{} = 1", self.base)));
        }
        if self.base == 1 {
            return Ok(GaussianRational::zero());
        }
        let (weighted, plain) = self.weighted_sums(lambda)?;
        let one = GaussianRational::one();
        let denom = &lam_base - &one;
        let lm1 = lambda - &one;
        let first = weighted.checked_div(&denom)?;
        let second = (lam_base.scale(&BigInt::from(self.base)) * plain).checked_div(&(&denom * &denom))?;
        let third = lambda.checked_div(&(&lm1 * &lm1))?;
        Ok(first - second + third)
    }
}

pub(crate) fn pow_u128(x: &GaussianRational, e: u128) -> Result<GaussianRational> {
    let e = u64::try_from(e).map_err(|_| Error::InvalidParams(format!("exponent {e} too large")))?;
    x.pow(e)
}

/// The λ and value of a weighted sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighted {
    pub lambda: GaussianRational,
    pub value: GaussianRational,
}

/// Frobenius number, genus and Sylvester sum of one generator set, plus
/// optionally the explicit gaps and a weighted sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub generators: Vec<u64>,
    pub frobenius: BigInt,
    pub genus: BigInt,
    pub sum: BigInt,
    pub gaps: Option<Vec<u64>>,
    pub weighted: Option<Weighted>,
}

impl GapReport {
    /// Checks the internal consistency of the listed gaps, when present.
    pub fn is_consistent(&self) -> bool {
        let Some(gaps) = &self.gaps else { return true };
        let max = gaps.last().map_or(BigInt::from(-1), |&g| BigInt::from(g));
        let sum: BigInt = gaps.iter().map(|&g| BigInt::from(g)).sum();
        self.genus == BigInt::from(gaps.len()) && self.sum == sum && self.frobenius == max
    }
}

/// `g`, `n`, `s` (and `s^(λ)` when `λ` is given) from the Apéry table.
/// `λ = 1` is answered with `s`.
pub fn apery_report(gens: &GeneratorSet, lambda: Option<&GaussianRational>) -> Result<GapReport> {
    let table = apery_set(gens);
    let sum = table.sylvester_sum()?;
    let weighted = match lambda {
        Some(l) if l.is_one() => Some(Weighted {
            lambda: l.clone(),
            value: GaussianRational::from(sum.clone()),
        }),
        Some(l) => Some(Weighted {
            lambda: l.clone(),
            value: table.weighted_sum(l)?,
        }),
        None => None,
    };
    Ok(GapReport {
        generators: gens.gens().to_vec(),
        frobenius: table.frobenius(),
        genus: table.genus()?,
        sum,
        gaps: None,
        weighted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_gaussian;

    fn table(gens: &[u64]) -> AperyTable {
        apery_set(&GeneratorSet::new(gens.iter().copied()).unwrap())
    }

    fn lam(s: &str) -> GaussianRational {
        parse_gaussian(s).unwrap()
    }

    #[test]
    fn generator_validation() {
        assert!(GeneratorSet::new([]).is_err());
        assert!(GeneratorSet::new([0, 3]).is_err());
        assert!(GeneratorSet::new([4, 6]).is_err());
        let g = GeneratorSet::new([11, 4, 7, 4]).unwrap();
        assert_eq!(g.gens(), &[4, 7, 11]);
        assert_eq!(g.to_string(), "(4, 7, 11)");
    }

    #[test]
    fn apery_examples() {
        assert_eq!(table(&[4, 7, 11]).entries(), &[0, 21, 14, 7]);
        assert_eq!(table(&[2, 3]).entries(), &[0, 3]);
        assert_eq!(table(&[1]).entries(), &[0]);
        // redundant multiples are accepted
        assert_eq!(table(&[4, 7, 8, 12]).entries(), table(&[4, 7]).entries());
    }

    #[test]
    fn invariants_from_table() {
        let t = table(&[4, 7, 11]);
        assert_eq!(t.frobenius(), 17.into());
        assert_eq!(t.genus().unwrap(), 9.into());
        assert_eq!(t.sylvester_sum().unwrap(), 66.into());
        assert_eq!(t.power_sum(1), 42.into());
        assert_eq!(t.power_sum(2), 686.into());

        let t = table(&[2, 3]);
        assert_eq!(
            (t.frobenius(), t.genus().unwrap(), t.sylvester_sum().unwrap()),
            (1.into(), 1.into(), 1.into())
        );

        let t = table(&[1]);
        assert_eq!(t.frobenius(), (-1).into());
        assert_eq!(t.genus().unwrap(), 0.into());
        assert_eq!(t.sylvester_sum().unwrap(), 0.into());
        assert_eq!(t.power_sum(1), 0.into());

        assert_eq!(table(&[6, 11, 16, 21]).genus().unwrap(), 17.into());
        assert_eq!(table(&[7, 9, 11]).sylvester_sum().unwrap(), 165.into());
    }

    #[test]
    fn weighted_pair_examples() {
        assert_eq!(table(&[2, 3]).weighted_sums(&lam("2")).unwrap(), (lam("24"), lam("9")));
        assert_eq!(table(&[1]).weighted_sums(&lam("3/7+i")).unwrap(), (lam("0"), lam("1")));
        assert_eq!(
            table(&[4, 7, 11]).weighted_sums(&lam("1")).unwrap(),
            (lam("42"), lam("4"))
        );
    }

    #[test]
    fn weighted_sum_examples() {
        assert_eq!(table(&[7, 9, 11]).weighted_sum(&lam("2")).unwrap(), lam("2160333442"));
        assert_eq!(table(&[6, 11, 16, 21]).weighted_sum(&lam("i")).unwrap(), lam("-20-22i"));
        assert_eq!(table(&[2, 3]).weighted_sum(&lam("2")).unwrap(), lam("2"));
        assert_eq!(table(&[1]).weighted_sum(&lam("2")).unwrap(), lam("0"));
    }

    #[test]
    fn weighted_sum_rejects_degenerate_lambda() {
        let t = table(&[4, 7, 11]);
        for l in ["0", "1", "-1", "i"] {
            assert!(
                matches!(t.weighted_sum(&lam(l)), Err(Error::LambdaDegenerate(_))),
                "{l}"
            );
        }
        assert!(table(&[3, 5]).weighted_sum(&lam("-1")).is_ok());
    }

    #[test]
    fn raw_table_checks() {
        assert!(AperyTable::from_raw(4, vec![0, 21, 14, 7]).is_ok());
        assert!(AperyTable::from_raw(4, vec![0, 21, 14]).is_err());
        assert!(AperyTable::from_raw(4, vec![4, 21, 14, 7]).is_err());
        assert!(AperyTable::from_raw(4, vec![0, 22, 14, 7]).is_err());
    }

    #[test]
    fn report_lambda_one_is_plain_sum() {
        let g = GeneratorSet::new([4, 7, 11]).unwrap();
        let r = apery_report(&g, Some(&lam("1"))).unwrap();
        assert_eq!(r.weighted.unwrap().value, lam("66"));
    }
}
