//! The enumeration oracle: a representability bitmap built by dynamic
//! programming, with a cap on how much memory one scan may use.

use frobkit::oracle::{oracle_report, representability_map, representability_map_with_cap};
use frobkit::{Error, GeneratorSet};

fn main() -> Result<(), Error> {
    let mcnuggets = GeneratorSet::new([6, 9, 20])?;
    let map = representability_map(&mcnuggets)?;
    println!("(6, 9, 20): scan stopped at {}", map.bound());
    println!("  43 representable? {}", map.is_representable(43));
    println!("  44 representable? {}", map.is_representable(44));

    let report = oracle_report(&mcnuggets, None)?;
    println!("  g = {}, n = {}, s = {}", report.frobenius, report.genus, report.sum);

    // A tight cap turns a large scan into an error instead of an allocation.
    let wide = GeneratorSet::new([997, 1009])?;
    match representability_map_with_cap(&wide, 10_000) {
        Err(Error::BoundOverflow { cap }) => println!("(997, 1009): refused, cap {cap} cells"),
        other => println!("(997, 1009): {other:?}"),
    }
    Ok(())
}
