//! Closed-form fast paths for structured generator families.
//!
//! Every formula is evaluated over exact rationals and finished with an
//! integrality check; a non-integral result is reported as
//! [`Error::IntegralityViolation`](crate::Error::IntegralityViolation)
//! instead of being rounded. Parameters are validated up front and no
//! function here falls back to the generic engine.

mod ap;
mod extra;
mod geom;
mod twogen;
mod weighted;

pub use ap::{
    almost_ap_apery_moments, almost_ap_frobenius, almost_ap_genus, almost_ap_sum, ap_apery_moments, ap_frobenius,
    ap_genus, ap_sum, APParams, AlmostAPParams,
};
pub use extra::{
    decompose_extra, extra_construction_is_minimal, extra_line_square_sum, extra_line_sum, extra_tail_square_sum,
    extra_tail_sum, extra_term_sum, quadruple_frobenius, quadruple_genus, quadruple_sum, ExtraTermParams,
};
pub use geom::{
    binary_digit_sum, factorial_exponent_of_two, geom_construction_is_minimal, geom_sum, geom_tail_square_sum,
    geom_tail_sum, GeomParams, GEOM_MAX_K,
};
pub use twogen::{two_gen_frobenius, two_gen_genus, two_gen_sum};
pub use weighted::{ap_weighted_apery_sums, ap_weighted_sum};

use num::BigRational;

use crate::exactnum::rat;

/// Small signed constant as an exact rational.
fn c(x: i64) -> BigRational {
    rat(x)
}

/// Unsigned parameter as an exact rational.
fn z(x: u64) -> BigRational {
    rat(x)
}
