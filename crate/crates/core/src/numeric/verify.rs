use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::decimal::{pow10, HighPrecisionValue};
use super::direct::direct_sum_spec;
use super::mc::{mc_integral, MCEstimate};
use crate::decompose::{decompose_summand, ZetaCombination};
use crate::error::{Error, Result};
use crate::exact::legendre_coeffs;
use crate::moment::build_summand;

/// Term budget for the direct-summation leg of [`crosscheck`].
pub const VERIFY_DIRECT_TERMS: u64 = 200_000;

/// All three routes to `c_v(n)` and whether they agree.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: u64,
    pub r: u32,
    pub v: u32,
    pub precision: u32,
    pub combo: ZetaCombination,
    pub exact: HighPrecisionValue,
    pub direct: HighPrecisionValue,
    pub direct_terms: u64,
    pub mc: MCEstimate,
    pub pass_direct: bool,
    pub pass_mc: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.pass_direct && self.pass_mc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "v": self.v,
            "precision": self.precision,
            "exact": self.exact.to_json(),
            "direct": {
                "value": self.direct.value.to_string(),
                "error_bound": self.direct.error_bound.to_scientific(3),
                "terms": self.direct_terms,
            },
            "mc": self.mc.to_json(),
            "pass_direct": self.pass_direct,
            "pass_mc": self.pass_mc,
            "pass": self.passed(),
        })
    }
}

/// Evaluates `c_v(n)` for `P_n` through the exact decomposition, through
/// certified direct summation, and through Monte Carlo integration at `z = 0`.
///
/// The direct sum aims for `10^-precision` and backs off one digit at a time
/// until it fits in [`VERIFY_DIRECT_TERMS`] terms. Exact and direct must agree
/// within the sum of their certified bounds; exact and Monte Carlo within
/// four standard errors.
pub fn crosscheck(
    n: u64,
    r: u32,
    v: u32,
    precision: u32,
    samples: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let poly = legendre_coeffs(n);
    let spec = build_summand(&poly, r, v)?;
    let combo = decompose_summand(&spec)?;
    let exact = super::eval_combination(&combo, precision)?;

    let mut direct = None;
    for digits in (1..=precision).rev() {
        let target = BigRational::new(BigInt::from(1), pow10(digits));
        match direct_sum_spec(&spec, &target, VERIFY_DIRECT_TERMS) {
            Ok(res) => {
                direct = Some(res);
                break;
            }
            Err(Error::TargetUnreachable { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let (direct, direct_terms) = direct.ok_or(Error::TargetUnreachable {
        k_estimate: u64::MAX,
        limit: VERIFY_DIRECT_TERMS,
    })?;

    let mc = mc_integral(&poly, r, v, 0.0, samples, seed)?;
    let exact_f = exact.value.to_rational().to_f64().unwrap_or(f64::NAN);
    let pass_mc = (exact_f - mc.mean).abs() <= 4.0 * mc.stderr;
    let pass_direct = exact.agrees_with(&direct);
    Ok(VerificationReport {
        n,
        r,
        v,
        precision,
        combo,
        exact,
        direct,
        direct_terms,
        mc,
        pass_direct,
        pass_mc,
    })
}
