//! Exact Frobenius numbers, gap counts, Sylvester sums and weighted gap
//! sums of numerical semigroups.
//!
//! * [`semigroup`]: the generic engine, via the Apéry table.
//! * [`oracle`]: brute-force enumeration, used as ground truth.
//! * [`closedforms`]: fast paths for structured generator families.
//! * [`exactnum`]: exact rationals and Gaussian rationals.
//! * [`cli`]: the `frobkit` command line and the verification harness.

pub mod cli;
pub mod closedforms;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use exactnum::GaussianRational;
pub use semigroup::{apery_report, apery_set, AperyTable, GapReport, GeneratorSet};
