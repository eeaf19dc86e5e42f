//! The `frobkit` command line.
//!
//! ```text
//! frobkit [--format json|csv] <command>
//!
//!   gaps <a1> <a2> ...                      gap list by enumeration
//!   report <a1> <a2> ... [--lambda L]       g, n, s (and s^(L)) from the Apéry table
//!   wsum <a1> <a2> ... --lambda L           weighted sum
//!   ap --a A --d D --k K [--lambda L]       arithmetic progression
//!   almost-ap --a A --d D --h H --k K       a, ha+d, ..., ha+(k-1)d
//!   extra --a A --d D --k K --K KK          progression plus a+KK*d
//!   geom --a A --k K                        a, a+1, a+2, a+4, ..., a+2^k
//!   quadruple --a A --c C                   a, a+1, a+2, a+C with C in {4,5,6}
//!   verify --family F [bounds]              closed forms vs oracle over a grid
//! ```
//!
//! Every computing command also takes `--list` (append the gap list),
//! `--check` (append an `oracle` block; exit 2 on disagreement) and
//! `--sum` (print only `s`).
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 verification
//! mismatch.

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;

use crate::closedforms::{
    almost_ap_frobenius, almost_ap_genus, almost_ap_sum, ap_frobenius, ap_genus, ap_sum, ap_weighted_sum,
    decompose_extra, extra_term_sum, geom_sum, quadruple_frobenius, quadruple_genus, quadruple_sum, APParams,
    AlmostAPParams, GeomParams,
};
use crate::error::{Error, Result};
use crate::exactnum::{parse_gaussian, GaussianRational};
use crate::oracle::{direct_weighted_sum, gaps as oracle_gaps};
use crate::semigroup::{apery_report, GeneratorSet};

pub use output::{Computation, OracleBlock};
pub use verify::{verify_grid, Family, VerifyBounds, VerifyReport};

/// Largest smallest generator the generic commands accept; the Apéry
/// table holds one entry per residue.
pub const MAX_A1: u64 = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

const FORMAT_HELP: &str = "\
Output: one JSON object per run with keys generators, family, params, g, n, s,
lambda, weighted {re, im} and, with --list, gaps. Invariants with no closed form
for the family are null. Integers outside the signed 64-bit range and
non-integral rationals are written as decimal strings such as \"-3/2\".
--format csv writes a header row and one data row instead.

Lambda syntax: 2, -1, 1/2, i, -i, 3i, 1/2-3/4i, -3/2+1/2i.

Exit codes: 0 success, 1 invalid input or usage, 2 verification mismatch.
FROBKIT_MAX_CELLS overrides the enumeration cap (default 100000000).";

#[derive(Parser, Debug)]
#[command(name = "frobkit", version, about = "Gaps, Frobenius numbers and gap sums of numerical semigroups", after_help = FORMAT_HELP)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Flags {
    /// Append the explicit gap list.
    #[arg(long)]
    list: bool,
    /// Recompute by enumeration and append an `oracle` block; exit 2 on disagreement.
    #[arg(long)]
    check: bool,
    /// Print only the Sylvester sum s.
    #[arg(long)]
    sum: bool,
}

#[derive(Args, Debug)]
struct Gens {
    /// Generators, any order; duplicates are ignored.
    #[arg(required = true, num_args = 1..)]
    generators: Vec<u64>,
}

fn parse_lambda(s: &str) -> std::result::Result<GaussianRational, String> {
    parse_gaussian(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the gaps by enumeration.
    Gaps {
        #[command(flatten)]
        gens: Gens,
        #[command(flatten)]
        flags: Flags,
    },
    /// g, n, s (and optionally s^(lambda)) from the Apéry table.
    Report {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<GaussianRational>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Weighted gap sum s^(lambda).
    Wsum {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: GaussianRational,
        #[command(flatten)]
        flags: Flags,
    },
    /// Arithmetic progression a, a+d, ..., a+(k-1)d.
    Ap {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<GaussianRational>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Almost-arithmetic progression a, ha+d, ..., ha+(k-1)d.
    AlmostAp {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        flags: Flags,
    },
    /// Progression a, ..., a+(k-1)d plus the term a+Kd.
    Extra {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[arg(long = "K", visible_alias = "big-k")]
        big_k: u64,
        #[command(flatten)]
        flags: Flags,
    },
    /// Geometric-like sequence a, a+1, a+2, a+4, ..., a+2^k.
    Geom {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        flags: Flags,
    },
    /// a, a+1, a+2, a+c for c in {4, 5, 6}.
    Quadruple {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        c: u64,
        #[command(flatten)]
        flags: Flags,
    },
    /// Compare closed forms with enumeration and the Apéry engine over a grid.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// ap, almost-ap, weighted-ap, extra, geom or generic.
    #[arg(long)]
    family: Family,
    /// Largest a (largest a1 for generic).
    #[arg(long)]
    a_max: Option<u64>,
    #[arg(long)]
    d_max: Option<u64>,
    #[arg(long)]
    h_max: Option<u64>,
    #[arg(long)]
    k_min: Option<u64>,
    /// Largest k (largest generator count for generic).
    #[arg(long)]
    k_max: Option<u64>,
    /// Largest K for the extra family.
    #[arg(long = "K-max", visible_alias = "big-k-max")]
    big_k_max: Option<u64>,
    /// Repeatable; defaults to 2, 1/2, i and -3/2+1/2i.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Vec<GaussianRational>,
    /// Number of random sets for generic.
    #[arg(long)]
    cases: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

/// Parses `args` (including the program name), runs the command and
/// writes to the given streams. Returns the exit code.
pub fn run_with_output<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// [`run_with_output`] on stdout and stderr.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_output(args, &mut stdout.lock(), &mut stderr.lock())
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParams(format!("write failed: {e}"))
}

fn generic_set(gens: &Gens) -> Result<GeneratorSet> {
    let set = GeneratorSet::new(gens.generators.iter().copied())?;
    if set.a1() > MAX_A1 {
        return Err(Error::InvalidGenerators(format!(
            "smallest generator {} exceeds the supported maximum {MAX_A1}",
            set.a1()
        )));
    }
    Ok(set)
}

fn generic(set: &GeneratorSet, lambda: Option<&GaussianRational>) -> Result<Computation> {
    let report = apery_report(set, lambda)?;
    let mut c = Computation::new(report.generators, "generic", vec![]);
    c.g = Some(report.frobenius);
    c.n = Some(report.genus);
    c.s = Some(report.sum);
    if let Some(w) = report.weighted {
        c.lambda = Some(w.lambda);
        c.weighted = Some(w.value);
    }
    Ok(c)
}

/// `s^(λ)` for the progression; `λ = 1` is the plain sum.
fn ap_weighted(p: &APParams, lambda: &GaussianRational, s: &BigInt) -> Result<GaussianRational> {
    if lambda.is_one() {
        Ok(GaussianRational::from(s.clone()))
    } else {
        ap_weighted_sum(p, lambda)
    }
}

fn compute(command: Command) -> Result<(Computation, Flags)> {
    Ok(match command {
        Command::Gaps { gens, mut flags } => {
            flags.list = true;
            (generic(&generic_set(&gens)?, None)?, flags)
        }
        Command::Report { gens, lambda, flags } => (generic(&generic_set(&gens)?, lambda.as_ref())?, flags),
        Command::Wsum { gens, lambda, flags } => (generic(&generic_set(&gens)?, Some(&lambda))?, flags),
        Command::Ap { a, d, k, lambda, flags } => {
            let p = APParams::new(a, d, k)?;
            let mut c = Computation::new(p.generators(), "ap", vec![("a", a), ("d", d), ("k", k)]);
            let s = ap_sum(&p)?;
            if let Some(l) = lambda {
                c.weighted = Some(ap_weighted(&p, &l, &s)?);
                c.lambda = Some(l);
            }
            c.g = Some(ap_frobenius(&p));
            c.n = Some(ap_genus(&p)?);
            c.s = Some(s);
            (c, flags)
        }
        Command::AlmostAp { a, d, h, k, flags } => {
            let p = AlmostAPParams::new(a, d, h, k)?;
            let mut c = Computation::new(
                p.generators(),
                "almost-ap",
                vec![("a", a), ("d", d), ("h", h), ("k", k)],
            );
            c.g = Some(almost_ap_frobenius(&p));
            c.n = Some(almost_ap_genus(&p)?);
            c.s = Some(almost_ap_sum(&p)?);
            (c, flags)
        }
        Command::Extra { a, d, k, big_k, flags } => {
            let p = decompose_extra(a, d, k, big_k)?;
            let mut c = Computation::new(
                p.generators(),
                "extra",
                vec![("a", a), ("d", d), ("k", k), ("K", big_k)],
            );
            c.s = Some(extra_term_sum(&p)?);
            (c, flags)
        }
        Command::Geom { a, k, flags } => {
            let p = GeomParams::new(a, k)?;
            let mut c = Computation::new(p.generators(), "geom", vec![("a", a), ("k", u64::from(k))]);
            c.s = Some(geom_sum(&p)?);
            (c, flags)
        }
        Command::Quadruple { a, c: offset, flags } => {
            let s = quadruple_sum(a, offset)?;
            let mut c = Computation::new(
                vec![a, a + 1, a + 2, a + offset],
                "quadruple",
                vec![("a", a), ("c", offset)],
            );
            c.g = Some(quadruple_frobenius(a, offset)?);
            c.n = if offset == 4 {
                Some(quadruple_genus(a, offset)?)
            } else {
                None
            };
            c.s = Some(s);
            (c, flags)
        }
        Command::Verify(_) => unreachable!("handled by dispatch"),
    })
}

/// Enumerates the gaps and fills in the `oracle` block.
fn attach_oracle(c: &mut Computation, gaps: &[u64]) -> Result<bool> {
    let g = gaps.last().map_or(BigInt::from(-1), |&x| BigInt::from(x));
    let n = BigInt::from(gaps.len());
    let s: BigInt = gaps.iter().map(|&x| BigInt::from(x)).sum();
    let weighted = match &c.lambda {
        Some(l) if l.is_one() => Some(GaussianRational::from(s.clone())),
        Some(l) => Some(direct_weighted_sum(gaps, l)?),
        None => None,
    };
    let same = |mine: &Option<BigInt>, truth: &BigInt| mine.as_ref().is_none_or(|m| m == truth);
    let agree = same(&c.g, &g)
        && same(&c.n, &n)
        && same(&c.s, &s)
        && c.weighted.as_ref().is_none_or(|w| Some(w) == weighted.as_ref());
    c.oracle = Some(OracleBlock {
        g,
        n,
        s,
        weighted,
        agree,
    });
    Ok(agree)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if let Command::Verify(v) = cli.command {
        let bounds = VerifyBounds {
            a_max: v.a_max,
            d_max: v.d_max,
            h_max: v.h_max,
            k_min: v.k_min,
            k_max: v.k_max,
            big_k_max: v.big_k_max,
            lambdas: v.lambda,
            cases: v.cases,
            seed: v.seed,
        };
        let report = verify_grid(v.family, &bounds)?;
        match cli.format {
            Format::Json => report.write_json(out),
            Format::Csv => report.write_csv(out),
        }
        .map_err(io_err)?;
        let _ = writeln!(
            err,
            "{}: {} cases, {} mismatches, {} refused in {:.2?}",
            report.family,
            report.cases(),
            report.count(verify::Status::Mismatch),
            report.count(verify::Status::Refused),
            report.elapsed
        );
        return Ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH });
    }

    let (mut c, flags) = compute(cli.command)?;
    let gaps = if flags.list || flags.check {
        Some(oracle_gaps(&GeneratorSet::new(c.generators.iter().copied())?)?)
    } else {
        None
    };
    let mut agree = true;
    if let (true, Some(gaps)) = (flags.check, &gaps) {
        agree = attach_oracle(&mut c, gaps)?;
    }
    if flags.list {
        c.gaps = gaps;
    }
    if flags.sum {
        let s = c.s.as_ref().map_or_else(|| "null".to_string(), BigInt::to_string);
        writeln!(out, "{s}").map_err(io_err)?;
    } else {
        match cli.format {
            Format::Json => c.write_json(out),
            Format::Csv => c.write_csv(out),
        }
        .map_err(io_err)?;
    }
    if !agree {
        let _ = writeln!(err, "error: closed form disagrees with enumeration");
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}
