//! Exact evaluation of log-weighted integrals of shifted Legendre (or any
//! integer-coefficient) polynomials over the unit cube,
//!
//! ```text
//! c_v = ∫_{[0,1]^r} (-log x_1⋯x_r)^v / (1 - x_1⋯x_r) · R(x_1)⋯R(x_r) dx,
//! ```
//!
//! as rational combinations of zeta values. The integral equals
//! `(-1)^v Σ_{k>=0} G(k)` with `G = d^v/ds^v [M(s)^r]` and
//! `M(s) = ∫_0^1 x^s R(x) dx`; partial fractions turn the series into
//! `Σ q_j ζ(j) + q_0` exactly.
//!
//! ```
//! use zetalab::{decompose, legendre_coeffs};
//!
//! let combo = decompose(&legendre_coeffs(1), 2, 1).unwrap();
//! // 10 ζ(3) - 12
//! assert_eq!(combo.coeff(3).to_string(), "10");
//! assert_eq!(combo.constant.to_string(), "-12");
//! ```

pub mod cli;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod moment;
pub mod numeric;

pub use decompose::{
    apery_report, decompose, rationality_criterion, CriterionRecord, DecompositionReport,
    ZetaCombination,
};
pub use error::{Error, Result};
pub use exact::{legendre_coeffs, IntPolynomial, RationalFunction};
pub use moment::{build_summand, moment_closed_form, moment_from_coeffs, SummandSpec};
pub use numeric::{
    crosscheck, direct_sum_value, eval_combination, mc_integral, zeta_value, HighPrecisionValue,
    MCEstimate,
};
