//! A progression with one additional term, and the quadruples
//! `(a, a+1, a+2, a+c)` that it specializes to.

use frobkit::closedforms::{
    decompose_extra, extra_construction_is_minimal, extra_line_sum, extra_tail_sum, extra_term_sum,
    quadruple_frobenius, quadruple_genus, quadruple_sum,
};
use frobkit::oracle::oracle_report;
use frobkit::{GeneratorSet, Result};

fn main() -> Result<()> {
    for (a, d, k, big_k) in [(12, 5, 4, 6), (14, 3, 4, 8), (30, 1, 3, 11)] {
        let p = decompose_extra(a, d, k, big_k)?;
        println!(
            "{:?}: q = {}, r = {}, alpha = {}, beta = {}, line sum {}, tail sum {}, s = {}",
            p.generators(),
            p.q(),
            p.r(),
            p.alpha(),
            p.beta(),
            extra_line_sum(&p)?,
            extra_tail_sum(&p)?,
            extra_term_sum(&p)?
        );
    }

    // Here wrapping around modulo a beats the line construction, so the
    // parameters are refused rather than answered wrongly.
    println!("(9, 1, 3, 8) minimal? {}", extra_construction_is_minimal(9, 1, 3, 8));
    if let Err(e) = decompose_extra(9, 1, 3, 8) {
        println!("  {e}");
    }

    println!("a   c  g    n     s     oracle s");
    for c in [4, 5, 6] {
        for a in [8, 9, 10, 11] {
            let n = quadruple_genus(a, c)
                .map(|n| n.to_string())
                .unwrap_or_else(|_| "-".into());
            let truth = oracle_report(&GeneratorSet::new([a, a + 1, a + 2, a + c])?, None)?;
            println!(
                "{a:<3} {c}  {:<4} {n:<5} {:<5} {}",
                quadruple_frobenius(a, c)?,
                quadruple_sum(a, c)?,
                truth.sum
            );
        }
    }
    Ok(())
}
