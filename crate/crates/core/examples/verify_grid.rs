//! Runs a verification grid: closed form vs enumeration vs the Apéry
//! engine for every parameter tuple, in parallel, with deterministic output.
//!
//! ```bash
//! cargo run --release --example verify_grid -- extra
//! ```

use frobkit::cli::verify::Status;
use frobkit::cli::{verify_grid, Family, VerifyBounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let families: Vec<Family> = match std::env::args().nth(1) {
        Some(name) => vec![name.parse()?],
        None => Family::ALL.to_vec(),
    };
    for family in families {
        let report = verify_grid(family, &VerifyBounds::default())?;
        println!(
            "{family:<12} {:>6} cases  {:>3} mismatches  {:>4} refused  {:>8.2?}   [{}]",
            report.cases(),
            report.count(Status::Mismatch),
            report.count(Status::Refused),
            report.elapsed,
            report.grid
        );
        for row in report.mismatches() {
            println!("    mismatch {}: {:?}", row.params, row.differences);
        }
    }
    Ok(())
}
