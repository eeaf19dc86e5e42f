//! Frobenius number, genus, Sylvester sum and gap list of any generator set.
//!
//! ```bash
//! cargo run --example semigroup_report -- 4 7 11
//! ```

use frobkit::oracle::gaps;
use frobkit::{apery_report, apery_set, GeneratorSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let gens = GeneratorSet::new(if args.is_empty() { vec![4, 7, 11] } else { args })?;

    let table = apery_set(&gens);
    println!("generators   {gens}");
    println!("apery table  {:?}", table.entries());

    let report = apery_report(&gens, None)?;
    println!("g = {}", report.frobenius);
    println!("n = {}", report.genus);
    println!("s = {}", report.sum);
    println!("gaps = {:?}", gaps(&gens)?);
    Ok(())
}
