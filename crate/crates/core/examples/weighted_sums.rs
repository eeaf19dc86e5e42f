//! Weighted gap sums `Σ λⁿ n` for Gaussian-rational λ, three ways:
//! the progression closed form, the Apéry engine, and term by term.

use frobkit::closedforms::{ap_weighted_sum, APParams};
use frobkit::exactnum::parse_gaussian;
use frobkit::oracle::{direct_weighted_sum, gaps};
use frobkit::{apery_set, Error, GeneratorSet, Result};

fn main() -> Result<()> {
    let cases = [
        ((7, 2, 3), "2"),
        ((6, 5, 4), "i"),
        ((7, 1, 3), "-1"),
        ((6, 5, 4), "-3/2+1/2i"),
        ((9, 2, 4), "1/2"),
    ];
    for ((a, d, k), text) in cases {
        let p = APParams::new(a, d, k)?;
        let gens = GeneratorSet::new(p.generators())?;
        let lambda = parse_gaussian(text)?;
        let closed = ap_weighted_sum(&p, &lambda)?;
        let engine = apery_set(&gens).weighted_sum(&lambda)?;
        let direct = direct_weighted_sum(&gaps(&gens)?, &lambda)?;
        assert!(closed == engine && engine == direct);
        println!("{gens}  lambda = {lambda}:  {closed}");
    }

    // λ with λ^a = 1 makes the closed form divide by zero; it is refused.
    let p = APParams::new(6, 5, 4)?;
    match ap_weighted_sum(&p, &parse_gaussian("-1")?) {
        Err(Error::LambdaDegenerate(why)) => println!("(6, 11, 16, 21) lambda = -1 refused: {why}"),
        other => println!("unexpected: {other:?}"),
    }
    let alternating = direct_weighted_sum(&gaps(&GeneratorSet::new(p.generators())?)?, &parse_gaussian("-1")?)?;
    println!("  term by term instead: {alternating}");
    Ok(())
}
