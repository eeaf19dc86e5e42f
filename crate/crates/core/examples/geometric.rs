//! Sylvester sums of `a, a+1, a+2, a+4, ..., a+2^k` and where the closed
//! form applies.

use frobkit::closedforms::{
    binary_digit_sum, factorial_exponent_of_two, geom_construction_is_minimal, geom_sum, geom_tail_sum, GeomParams,
};
use frobkit::Result;

fn main() -> Result<()> {
    for n in [3, 8, 25] {
        println!(
            "n = {n}: exponent of 2 in n! = {}, binary digits = {}",
            factorial_exponent_of_two(n),
            binary_digit_sum(n)
        );
    }

    for (a, k) in [(16, 3), (25, 3), (25, 4), (100, 2)] {
        let p = GeomParams::new(a, k)?;
        println!(
            "{:?}: q = {}, r = {}, tail = {}, s = {}",
            p.generators(),
            p.q(),
            p.r(),
            geom_tail_sum(&p)?,
            geom_sum(&p)?
        );
    }

    for k in 2..=5u32 {
        let outside: Vec<u64> = ((1u64 << k)..=300)
            .filter(|&a| !geom_construction_is_minimal(a, k))
            .collect();
        println!("k = {k}: closed form refused for a in {outside:?}");
    }
    Ok(())
}
