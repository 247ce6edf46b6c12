//! High-precision evaluation and the two independent oracles (direct
//! summation and Monte Carlo integration) for the exact decomposition.

mod constants;
mod decimal;
mod direct;
mod mc;
mod verify;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use constants::{exp_integer, pi_value, zeta_value, GUARD_DIGITS};
pub use decimal::{div_round, log10_upper, pow10, Decimal, HighPrecisionValue, Rounding};
pub use direct::{direct_sum_spec, direct_sum_value, MAX_DIRECT_TERMS};
pub use mc::{mc_integral, MCEstimate, MC_CHUNK};
pub use verify::{crosscheck, VerificationReport, VERIFY_DIRECT_TERMS};

use crate::decompose::ZetaCombination;
use crate::error::{Error, Result};

/// `Σ q_j ζ(j) + q_0` to `precision` decimal places. Each ζ(j) is evaluated
/// with enough extra digits to absorb `|q_j|`, so the certified error bound
/// is at most `10^-precision`.
pub fn eval_combination(combo: &ZetaCombination, precision: u32) -> Result<HighPrecisionValue> {
    if precision < 10 {
        return Err(Error::InvalidParameter(format!(
            "precision must be >= 10 digits, got {precision}"
        )));
    }
    let mut center = combo.constant.clone();
    let mut radius = BigRational::zero();
    for (&j, q) in &combo.zeta_coeffs {
        let extra = log10_upper(q).max(0) as u32 + 2;
        let z = constants::zeta_fixed(j, precision + GUARD_DIGITS + extra);
        center += q * z.center();
        radius += q.abs() * z.radius();
    }
    Ok(HighPrecisionValue::from_enclosure(
        &center, &radius, precision,
    ))
}

/// Like [`eval_combination`], but raises the working precision until the
/// error bound is below `10^-digits` relative to the value. Needed because
/// `c_v(n)` shrinks geometrically while the coefficients grow.
pub fn eval_combination_relative(
    combo: &ZetaCombination,
    digits: u32,
) -> Result<HighPrecisionValue> {
    let cap = digits + 4000;
    let mut p = digits + 5;
    loop {
        let v = eval_combination(combo, p)?;
        let mag = v.value.to_rational().abs();
        if !mag.is_zero() {
            let rel = mag.clone() / BigRational::from_integer(pow10(digits));
            if v.error_bound.to_rational() <= rel {
                return Ok(v);
            }
        }
        if p >= cap {
            return Ok(v);
        }
        let need = if mag.is_zero() {
            p + 50
        } else {
            (digits as i64 - log10_upper(&mag) + 3).max(0) as u32
        };
        p = need.max(p + 10).min(cap);
    }
}
