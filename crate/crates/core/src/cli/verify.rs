//! Grid verification: every closed form against the oracle and the
//! generic engine over a parameter grid.
//!
//! Cases run in parallel; rows come back in grid order regardless of the
//! number of workers, so reports are reproducible.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::integer::gcd;
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::output::{join, write_csv_rows};
use crate::closedforms::{
    almost_ap_apery_moments, almost_ap_frobenius, almost_ap_genus, almost_ap_sum, ap_apery_moments, ap_frobenius,
    ap_genus, ap_sum, ap_weighted_sum, decompose_extra, extra_term_sum, geom_sum, APParams, AlmostAPParams, GeomParams,
};
use crate::error::{Error, Result};
use crate::exactnum::{parse_gaussian, GaussianRational};
use crate::oracle::{direct_weighted_sum, representability_map, RepresentabilityMap};
use crate::semigroup::{apery_set, AperyTable, GeneratorSet};

/// Largest grid [`verify_grid`] will enumerate.
pub const MAX_GRID_CASES: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ap,
    AlmostAp,
    WeightedAp,
    Extra,
    Geom,
    Generic,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Ap,
        Family::AlmostAp,
        Family::WeightedAp,
        Family::Extra,
        Family::Geom,
        Family::Generic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ap => "ap",
            Family::AlmostAp => "almost-ap",
            Family::WeightedAp => "weighted-ap",
            Family::Extra => "extra",
            Family::Geom => "geom",
            Family::Generic => "generic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Parameter ranges. `None` means the family default, listed in
/// [`VerifyBounds::resolved`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyBounds {
    pub a_max: Option<u64>,
    pub d_max: Option<u64>,
    pub h_max: Option<u64>,
    pub k_min: Option<u64>,
    pub k_max: Option<u64>,
    pub big_k_max: Option<u64>,
    pub lambdas: Vec<GaussianRational>,
    pub cases: Option<u64>,
    pub seed: Option<u64>,
}

/// Bounds with every default filled in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub a_max: u64,
    pub d_max: u64,
    pub h_max: u64,
    pub k_min: u64,
    pub k_max: u64,
    pub big_k_max: u64,
    pub lambdas: Vec<GaussianRational>,
    pub cases: u64,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn default_lambdas() -> Vec<GaussianRational> {
    ["2", "1/2", "i", "-3/2+1/2i"]
        .iter()
        .map(|s| parse_gaussian(s).expect("literal"))
        .collect()
}

impl VerifyBounds {
    pub fn resolved(&self, family: Family) -> Resolved {
        let (a, d, h, k_min, k_max, big_k) = match family {
            Family::Ap => (30, 8, 1, 2, u64::MAX, 0),
            Family::AlmostAp => (20, 5, 4, 2, u64::MAX, 0),
            Family::WeightedAp => (20, 8, 1, 2, u64::MAX, 0),
            Family::Extra => (30, 5, 1, 3, 11, 12),
            Family::Geom => (300, 1, 1, 2, 4, 0),
            Family::Generic => (60, 1, 1, 2, 5, 0),
        };
        Resolved {
            a_max: self.a_max.unwrap_or(a),
            d_max: self.d_max.unwrap_or(d),
            h_max: self.h_max.unwrap_or(h),
            k_min: self.k_min.unwrap_or(k_min),
            k_max: self.k_max.unwrap_or(k_max),
            big_k_max: self.big_k_max.unwrap_or(big_k),
            lambdas: if self.lambdas.is_empty() {
                default_lambdas()
            } else {
                self.lambdas.clone()
            },
            cases: self.cases.unwrap_or(500),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Ok,
    Mismatch,
    Refused,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Refused => "refused",
        }
    }
}

/// One differing quantity: closed form (or engine), oracle, engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub field: &'static str,
    pub closed: String,
    pub oracle: String,
    pub engine: String,
}

/// The outcome of one parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRow {
    pub params: String,
    pub generators: Vec<u64>,
    pub status: Status,
    /// The headline value (`s`, or `s^(λ)` for the weighted family) from
    /// the closed form and from the oracle.
    pub closed: String,
    pub oracle: String,
    pub differences: Vec<Difference>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub family: Family,
    pub grid: String,
    pub rows: Vec<CaseRow>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn cases(&self) -> usize {
        self.rows.len()
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CaseRow> {
        self.rows.iter().filter(|r| r.status == Status::Mismatch)
    }

    pub fn refusals(&self) -> impl Iterator<Item = &CaseRow> {
        self.rows.iter().filter(|r| r.status == Status::Refused)
    }

    pub fn is_clean(&self) -> bool {
        self.count(Status::Mismatch) == 0
    }

    /// Summary with mismatches and refusals; the elapsed time is left out
    /// so that the output is reproducible.
    pub fn to_json(&self) -> Value {
        let diff =
            |d: &Difference| json!({"field": d.field, "closed": d.closed, "oracle": d.oracle, "engine": d.engine});
        json!({
            "family": self.family.name(),
            "grid": self.grid,
            "cases": self.cases(),
            "ok": self.count(Status::Ok),
            "refused": self.count(Status::Refused),
            "mismatches": self.mismatches().map(|r| json!({
                "params": r.params,
                "generators": r.generators,
                "differences": r.differences.iter().map(diff).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "refusals": self.refusals().map(|r| json!({"params": r.params, "reason": r.note})).collect::<Vec<_>>(),
        })
    }

    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.to_json())
    }

    /// One row per case.
    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let header = ["family", "params", "generators", "status", "closed", "oracle", "detail"];
        let rows = self.rows.iter().map(|r| {
            let detail = if r.differences.is_empty() {
                r.note.clone()
            } else {
                r.differences
                    .iter()
                    .map(|d| {
                        format!(
                            "{}: closed {} oracle {} engine {}",
                            d.field, d.closed, d.oracle, d.engine
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            vec![
                self.family.name().to_string(),
                r.params.clone(),
                join(&r.generators),
                r.status.name().to_string(),
                r.closed.clone(),
                r.oracle.clone(),
                detail,
            ]
        });
        write_csv_rows(out, &header, rows)
    }
}

/// Apéry table read off the representability bitmap: the least
/// representable value in each residue class.
pub fn apery_from_bitmap(map: &RepresentabilityMap, a1: u64) -> Vec<u128> {
    let mut m = vec![None; a1 as usize];
    let mut found = 0;
    let mut n = 0u64;
    while found < a1 {
        let slot = &mut m[(n % a1) as usize];
        if slot.is_none() && map.is_representable(n) {
            *slot = Some(u128::from(n));
            found += 1;
        }
        n += 1;
    }
    m.into_iter().map(|x| x.expect("filled")).collect()
}

struct Truth {
    map: RepresentabilityMap,
    gaps: Vec<u64>,
    g: BigInt,
    n: BigInt,
    s: BigInt,
}

fn truth(gens: &GeneratorSet) -> Result<Truth> {
    let map = representability_map(gens)?;
    let gaps = map.gaps();
    Ok(Truth {
        g: gaps.last().map_or(BigInt::from(-1), |&x| BigInt::from(x)),
        n: BigInt::from(gaps.len()),
        s: gaps.iter().map(|&x| BigInt::from(x)).sum(),
        map,
        gaps,
    })
}

#[derive(Default)]
struct Checker {
    differences: Vec<Difference>,
}

impl Checker {
    fn check<T: PartialEq + ToString>(&mut self, field: &'static str, closed: &T, oracle: &T, engine: &T) {
        if closed != oracle || engine != oracle {
            self.differences.push(Difference {
                field,
                closed: closed.to_string(),
                oracle: oracle.to_string(),
                engine: engine.to_string(),
            });
        }
    }

    fn row(self, params: String, generators: Vec<u64>, closed: String, oracle: String) -> CaseRow {
        let status = if self.differences.is_empty() {
            Status::Ok
        } else {
            Status::Mismatch
        };
        CaseRow {
            params,
            generators,
            status,
            closed,
            oracle,
            differences: self.differences,
            note: String::new(),
        }
    }
}

fn refused(params: String, generators: Vec<u64>, reason: &Error) -> CaseRow {
    CaseRow {
        params,
        generators,
        status: Status::Refused,
        closed: String::new(),
        oracle: String::new(),
        differences: Vec::new(),
        note: reason.to_string(),
    }
}

fn moments(m: &[u128]) -> (BigInt, BigInt) {
    m.iter()
        .skip(1)
        .fold((BigInt::from(0), BigInt::from(0)), |(s1, s2), &x| {
            let x = BigInt::from(x);
            (s1 + &x, s2 + &x * &x)
        })
}

fn engine_moments(t: &AperyTable) -> (BigInt, BigInt) {
    (t.power_sum(1), t.power_sum(2))
}

fn pair(p: (BigInt, BigInt)) -> String {
    format!("({}, {})", p.0, p.1)
}

/// Compares `g`, `n`, `s` and the Apéry moments (where the family has
/// them) and returns the row.
struct Plain {
    params: String,
    gens: Vec<u64>,
    g: Option<BigInt>,
    n: Option<BigInt>,
    s: BigInt,
    moments: Option<(BigInt, BigInt)>,
}

fn compare_plain(c: Plain) -> Result<CaseRow> {
    let set = GeneratorSet::new(c.gens.iter().copied())?;
    let t = truth(&set)?;
    let table = apery_set(&set);
    let mut ck = Checker::default();
    if let Some(g) = &c.g {
        ck.check("g", g, &t.g, &table.frobenius());
    }
    if let Some(n) = &c.n {
        ck.check("n", n, &t.n, &table.genus()?);
    }
    ck.check("s", &c.s, &t.s, &table.sylvester_sum()?);
    if let Some(m) = c.moments {
        let oracle = moments(&apery_from_bitmap(&t.map, set.a1()));
        ck.check("moments", &pair(m), &pair(oracle), &pair(engine_moments(&table)));
    }
    Ok(ck.row(c.params, c.gens, c.s.to_string(), t.s.to_string()))
}

fn ap_case(a: u64, d: u64, k: u64) -> Result<CaseRow> {
    let p = APParams::new(a, d, k)?;
    compare_plain(Plain {
        params: format!("a={a} d={d} k={k}"),
        gens: p.generators(),
        g: Some(ap_frobenius(&p)),
        n: Some(ap_genus(&p)?),
        s: ap_sum(&p)?,
        moments: Some(ap_apery_moments(&p)?),
    })
}

fn almost_case(a: u64, d: u64, h: u64, k: u64) -> Result<CaseRow> {
    let p = AlmostAPParams::new(a, d, h, k)?;
    compare_plain(Plain {
        params: format!("a={a} d={d} h={h} k={k}"),
        gens: p.generators(),
        g: Some(almost_ap_frobenius(&p)),
        n: Some(almost_ap_genus(&p)?),
        s: almost_ap_sum(&p)?,
        moments: Some(almost_ap_apery_moments(&p)?),
    })
}

fn weighted_case(a: u64, d: u64, k: u64, lambda: &GaussianRational) -> Result<CaseRow> {
    let p = APParams::new(a, d, k)?;
    let params = format!("a={a} d={d} k={k} lambda={lambda}");
    let set = GeneratorSet::new(p.generators())?;
    let closed = match ap_weighted_sum(&p, lambda) {
        Ok(v) => v,
        Err(e @ Error::LambdaDegenerate(_)) => return Ok(refused(params, p.generators(), &e)),
        Err(e) => return Err(e),
    };
    let oracle = direct_weighted_sum(&truth(&set)?.gaps, lambda)?;
    let engine = apery_set(&set).weighted_sum(lambda)?;
    let mut ck = Checker::default();
    ck.check("weighted", &closed, &oracle, &engine);
    Ok(ck.row(params, p.generators(), closed.to_string(), oracle.to_string()))
}

fn extra_case(a: u64, d: u64, k: u64, big_k: u64) -> Result<CaseRow> {
    let params = format!("a={a} d={d} k={k} K={big_k}");
    let gens: Vec<u64> = (0..k).map(|i| a + i * d).chain([a + big_k * d]).collect();
    let p = match decompose_extra(a, d, k, big_k) {
        Ok(p) => p,
        Err(e) => return Ok(refused(params, gens, &e)),
    };
    compare_plain(Plain {
        params,
        gens: p.generators(),
        g: None,
        n: None,
        s: extra_term_sum(&p)?,
        moments: None,
    })
}

fn geom_case(a: u64, k: u32) -> Result<CaseRow> {
    let params = format!("a={a} k={k}");
    let gens: Vec<u64> = std::iter::once(a).chain((0..=k).map(|i| a + (1 << i))).collect();
    let p = match GeomParams::new(a, k) {
        Ok(p) => p,
        Err(e) => return Ok(refused(params, gens, &e)),
    };
    compare_plain(Plain {
        params,
        gens: p.generators(),
        g: None,
        n: None,
        s: geom_sum(&p)?,
        moments: None,
    })
}

/// Engine against oracle on one generator set: `g`, `n`, `s`, the Apéry
/// table itself and `s^(2)`.
fn generic_case(index: usize, gens: Vec<u64>) -> Result<CaseRow> {
    let set = GeneratorSet::new(gens.iter().copied())?;
    let t = truth(&set)?;
    let table = apery_set(&set);
    let mut ck = Checker::default();
    let (g, n, s) = (table.frobenius(), table.genus()?, table.sylvester_sum()?);
    ck.check("g", &g, &t.g, &g);
    ck.check("n", &n, &t.n, &n);
    ck.check("s", &s, &t.s, &s);
    let oracle_m = format!("{:?}", apery_from_bitmap(&t.map, set.a1()));
    let engine_m = format!("{:?}", table.entries());
    ck.check("apery", &engine_m, &oracle_m, &engine_m);
    let two = GaussianRational::from(2);
    let w = table.weighted_sum(&two)?;
    ck.check("weighted(2)", &w, &direct_weighted_sum(&t.gaps, &two)?, &w);
    Ok(ck.row(format!("case={index}"), gens, s.to_string(), t.s.to_string()))
}

/// Seeded random coprime generator sets with `a1 ∈ [2, a1_max]` and
/// `k_min..=k_max` generators drawn from `[a1, 4·a1]`.
pub fn random_generator_sets(count: u64, a1_max: u64, k_min: u64, k_max: u64, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k_min = k_min.max(2);
    let k_max = k_max.max(k_min);
    let mut out = Vec::with_capacity(count as usize);
    while (out.len() as u64) < count {
        let a1 = rng.gen_range(2..=a1_max.max(2));
        let k = rng.gen_range(k_min..=k_max);
        let mut gens = vec![a1];
        gens.extend((1..k).map(|_| rng.gen_range(a1 + 1..=4 * a1)));
        if gens.iter().fold(0, |acc, &x| gcd(acc, x)) == 1 {
            gens.sort_unstable();
            gens.dedup();
            out.push(gens);
        }
    }
    out
}

enum Job {
    Ap(u64, u64, u64),
    Almost(u64, u64, u64, u64),
    Weighted(u64, u64, u64, GaussianRational),
    Extra(u64, u64, u64, u64),
    Geom(u64, u32),
    Generic(usize, Vec<u64>),
}

impl Job {
    fn run(self) -> Result<CaseRow> {
        match self {
            Job::Ap(a, d, k) => ap_case(a, d, k),
            Job::Almost(a, d, h, k) => almost_case(a, d, h, k),
            Job::Weighted(a, d, k, l) => weighted_case(a, d, k, &l),
            Job::Extra(a, d, k, kk) => extra_case(a, d, k, kk),
            Job::Geom(a, k) => geom_case(a, k),
            Job::Generic(i, g) => generic_case(i, g),
        }
    }
}

fn describe(family: Family, r: &Resolved) -> String {
    let k_max = if r.k_max == u64::MAX {
        "a".to_string()
    } else {
        r.k_max.to_string()
    };
    match family {
        Family::Ap => format!(
            "2 <= a <= {}, 1 <= d <= {}, {} <= k <= {k_max}",
            r.a_max, r.d_max, r.k_min
        ),
        Family::AlmostAp => format!(
            "2 <= a <= {}, 1 <= d <= {}, 1 <= h <= {}, {} <= k <= {k_max}",
            r.a_max, r.d_max, r.h_max, r.k_min
        ),
        Family::WeightedAp => format!(
            "2 <= a <= {}, 1 <= d <= {}, {} <= k <= {k_max}, lambda in {{{}}}",
            r.a_max,
            r.d_max,
            r.k_min,
            r.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
        ),
        Family::Extra => format!(
            "{} <= k < K <= {}, k <= {k_max}, k <= a <= {}, 1 <= d <= {}",
            r.k_min, r.big_k_max, r.a_max, r.d_max
        ),
        Family::Geom => format!("{} <= k <= {k_max}, 2^k <= a <= {}", r.k_min, r.a_max),
        Family::Generic => format!(
            "{} seeded sets (seed {}), 2 <= a1 <= {}, {}..={k_max} generators",
            r.cases, r.seed, r.a_max, r.k_min
        ),
    }
}

fn jobs(family: Family, r: &Resolved) -> Result<Vec<Job>> {
    let cap = |n: u64| {
        if n > MAX_GRID_CASES {
            Err(Error::BoundOverflow { cap: MAX_GRID_CASES })
        } else {
            Ok(())
        }
    };
    let kmax = |a: u64| r.k_max.min(a);
    let coprime = |a: u64, d: u64| gcd(a, d) == 1;
    let mut out = Vec::new();
    match family {
        Family::Ap | Family::WeightedAp => {
            let per = if family == Family::Ap {
                1
            } else {
                r.lambdas.len() as u64
            };
            cap(r
                .a_max
                .saturating_mul(r.a_max)
                .saturating_mul(r.d_max)
                .saturating_mul(per))?;
            for a in 2..=r.a_max {
                for d in (1..=r.d_max).filter(|&d| coprime(a, d)) {
                    for k in r.k_min..=kmax(a) {
                        if family == Family::Ap {
                            out.push(Job::Ap(a, d, k));
                        } else {
                            out.extend(r.lambdas.iter().map(|l| Job::Weighted(a, d, k, l.clone())));
                        }
                    }
                }
            }
        }
        Family::AlmostAp => {
            cap(r
                .a_max
                .saturating_mul(r.a_max)
                .saturating_mul(r.d_max)
                .saturating_mul(r.h_max))?;
            for a in 2..=r.a_max {
                for d in (1..=r.d_max).filter(|&d| coprime(a, d)) {
                    for h in 1..=r.h_max {
                        for k in r.k_min..=kmax(a) {
                            out.push(Job::Almost(a, d, h, k));
                        }
                    }
                }
            }
        }
        Family::Extra => {
            let k_top = r.k_max.min(r.big_k_max.saturating_sub(1));
            cap(r
                .big_k_max
                .saturating_pow(2)
                .saturating_mul(r.a_max)
                .saturating_mul(r.d_max))?;
            for k in r.k_min.max(2)..=k_top {
                for big_k in k + 1..=r.big_k_max {
                    for a in k..=r.a_max {
                        for d in (1..=r.d_max).filter(|&d| coprime(a, d)) {
                            out.push(Job::Extra(a, d, k, big_k));
                        }
                    }
                }
            }
        }
        Family::Geom => {
            let k_top = r.k_max.min(u64::from(crate::closedforms::GEOM_MAX_K));
            cap(k_top.saturating_mul(r.a_max))?;
            for k in r.k_min.max(2)..=k_top {
                for a in (1u64 << k)..=r.a_max {
                    out.push(Job::Geom(a, k as u32));
                }
            }
        }
        Family::Generic => {
            cap(r.cases)?;
            let sets = random_generator_sets(r.cases, r.a_max, r.k_min, r.k_max, r.seed);
            out.extend(sets.into_iter().enumerate().map(|(i, g)| Job::Generic(i, g)));
        }
    }
    Ok(out)
}

/// Runs every case of the grid for `family`. Errors other than refusals
/// (an oracle cap hit, an integrality violation) abort the whole run.
pub fn verify_grid(family: Family, bounds: &VerifyBounds) -> Result<VerifyReport> {
    let start = Instant::now();
    let r = bounds.resolved(family);
    let rows = jobs(family, &r)?
        .into_par_iter()
        .map(Job::run)
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        family,
        grid: describe(family, &r),
        rows,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn small_grids_are_clean() {
        let b = VerifyBounds {
            a_max: Some(9),
            d_max: Some(3),
            ..Default::default()
        };
        for f in [Family::Ap, Family::AlmostAp, Family::WeightedAp] {
            let rep = verify_grid(f, &b).unwrap();
            assert!(rep.cases() > 0);
            assert!(rep.is_clean(), "{f}: {:?}", rep.mismatches().collect::<Vec<_>>());
        }
    }

    #[test]
    fn refusals_are_reported() {
        let b = VerifyBounds {
            a_max: Some(20),
            k_max: Some(4),
            ..Default::default()
        };
        let rep = verify_grid(Family::Geom, &b).unwrap();
        assert!(rep.is_clean());
        assert_eq!(
            rep.refusals().map(|r| r.params.as_str()).collect::<Vec<_>>(),
            vec!["a=17 k=4"]
        );
    }

    #[test]
    fn bitmap_apery_matches_engine() {
        let set = GeneratorSet::new([4, 7, 11]).unwrap();
        let map = representability_map(&set).unwrap();
        assert_eq!(apery_from_bitmap(&map, 4), apery_set(&set).entries());
    }

    #[test]
    fn random_sets_are_seeded() {
        let a = random_generator_sets(20, 60, 2, 5, 7);
        assert_eq!(a, random_generator_sets(20, 60, 2, 5, 7));
        assert_ne!(a, random_generator_sets(20, 60, 2, 5, 8));
        assert!(a.iter().all(|g| g[0] <= 60 && g.iter().fold(0, |x, &y| gcd(x, y)) == 1));
    }

    #[test]
    fn oversized_grid_is_refused() {
        let b = VerifyBounds {
            a_max: Some(100_000),
            ..Default::default()
        };
        assert!(matches!(verify_grid(Family::Ap, &b), Err(Error::BoundOverflow { .. })));
    }
}
