//! Closed forms for arithmetic and almost-arithmetic progressions, checked
//! against the generic engine.

use frobkit::closedforms::{
    almost_ap_frobenius, almost_ap_genus, almost_ap_sum, ap_apery_moments, ap_frobenius, ap_genus, ap_sum, APParams,
    AlmostAPParams,
};
use frobkit::{apery_report, GeneratorSet, Result};

fn main() -> Result<()> {
    println!("arithmetic progressions a, a+d, ..., a+(k-1)d");
    for (a, d, k) in [(7, 2, 3), (7, 3, 3), (6, 5, 4), (30, 7, 9)] {
        let p = APParams::new(a, d, k)?;
        let engine = apery_report(&GeneratorSet::new(p.generators())?, None)?;
        let (m1, m2) = ap_apery_moments(&p)?;
        println!(
            "  {:?}: g = {}, n = {}, s = {} (engine s = {}), apery moments ({m1}, {m2})",
            p.generators(),
            ap_frobenius(&p),
            ap_genus(&p)?,
            ap_sum(&p)?,
            engine.sum
        );
    }

    println!("almost-arithmetic progressions a, ha+d, ..., ha+(k-1)d");
    for (a, d, h, k) in [(5, 1, 2, 3), (11, 3, 2, 4), (13, 2, 3, 5)] {
        let p = AlmostAPParams::new(a, d, h, k)?;
        let engine = apery_report(&GeneratorSet::new(p.generators())?, None)?;
        println!(
            "  {:?}: g = {}, n = {}, s = {} (engine s = {})",
            p.generators(),
            almost_ap_frobenius(&p),
            almost_ap_genus(&p)?,
            almost_ap_sum(&p)?,
            engine.sum
        );
    }

    match APParams::new(6, 4, 3) {
        Err(e) => println!("(6, 4, 3) rejected: {e}"),
        Ok(p) => println!("unexpected: {p:?}"),
    }
    Ok(())
}
