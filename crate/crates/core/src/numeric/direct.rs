use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::decimal::{div_round, log10_upper, pow10, HighPrecisionValue, Rounding};
use crate::error::{Error, Result};
use crate::exact::IntPolynomial;
use crate::moment::{build_summand, SummandSpec};

/// Default cap on the number of terms a direct summation may take.
pub const MAX_DIRECT_TERMS: u64 = 300_000_000;

/// `(-1)^v Σ_k G(k)` by plain summation with a certified truncation bound.
/// Shares nothing with the partial-fraction path.
pub fn direct_sum_value(
    poly: &IntPolynomial,
    r: u32,
    v: u32,
    target_error: &BigRational,
) -> Result<HighPrecisionValue> {
    let spec = build_summand(poly, r, v)?;
    direct_sum_spec(&spec, target_error, MAX_DIRECT_TERMS).map(|(h, _)| h)
}

/// Direct summation for a built summand; also returns the number of terms.
///
/// `K` is the smallest count whose tail bound is `<= target/2`; each term is
/// rounded to `W` decimals with `K · 10^-W / 2 <= target/2`.
pub fn direct_sum_spec(
    spec: &SummandSpec,
    target_error: &BigRational,
    max_terms: u64,
) -> Result<(HighPrecisionValue, u64)> {
    if !target_error.is_positive() {
        return Err(Error::InvalidParameter(
            "target error must be positive".into(),
        ));
    }
    let half = target_error / BigRational::from_integer(BigInt::from(2));
    let k = match spec.terms_for_tail(&half, max_terms)? {
        Some(k) => k,
        None => {
            return Err(Error::TargetUnreachable {
                k_estimate: estimate_terms(spec, &half, max_terms),
                limit: max_terms,
            })
        }
    };
    let ratio = BigRational::from_integer(BigInt::from(k)) / target_error;
    let w = (log10_upper(&ratio) + 1).max(1) as u32;
    let unit = pow10(w);
    let (num, den) = spec.integer_parts();
    let small = SmallParts::new(num, den, k, &unit);
    let chunks = k.div_ceil(CHUNK);
    let sum: BigInt = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let range = c * CHUNK..((c + 1) * CHUNK).min(k);
            small
                .as_ref()
                .and_then(|s| s.chunk_sum(range.clone()))
                .map(BigInt::from)
                .unwrap_or_else(|| range.map(|i| fixed_term(num, den, i, &unit)).sum())
        })
        .reduce(BigInt::zero, |a, b| a + b);
    let sum = if spec.v % 2 == 1 { -sum } else { sum };
    let center = BigRational::new(sum, unit.clone());
    let rounding = BigRational::new(BigInt::from(k), unit * 2);
    let radius = spec.tail_bound(k)? + rounding;
    Ok((HighPrecisionValue::from_enclosure(&center, &radius, w), k))
}

const CHUNK: u64 = 1 << 14;

/// Machine-integer copies of `N`, `D` and the unit, kept only when
/// `Σ|n_i| K^i · unit` and `Σ|d_i| K^i` stay below `2^126`. Those sums bound
/// every Horner intermediate for `0 <= k <= K`, so nothing can overflow.
struct SmallParts {
    num: Vec<i128>,
    den: Vec<i128>,
    unit: i128,
}

impl SmallParts {
    fn new(num: &IntPolynomial, den: &IntPolynomial, k: u64, unit: &BigInt) -> Option<Self> {
        let cap = BigInt::from(1) << 126;
        let x = BigInt::from(k);
        let envelope = |p: &IntPolynomial| {
            p.coeffs()
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * &x + c.abs())
        };
        if envelope(num) * unit >= cap || envelope(den) >= cap {
            return None;
        }
        let small = |p: &IntPolynomial| {
            p.coeffs()
                .iter()
                .map(|c| c.to_i128())
                .collect::<Option<Vec<_>>>()
        };
        Some(SmallParts {
            num: small(num)?,
            den: small(den)?,
            unit: unit.to_i128()?,
        })
    }

    fn term(&self, k: u64) -> i128 {
        let x = k as i128;
        let horner = |p: &[i128]| p.iter().rev().fold(0i128, |acc, &c| acc * x + c);
        let mut n = horner(&self.num) * self.unit;
        let mut d = horner(&self.den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        // round half up, as `div_round` does
        let q = n.div_euclid(d);
        let r = n.rem_euclid(d);
        if 2 * r >= d {
            q + 1
        } else {
            q
        }
    }

    /// `None` if the running sum would leave `i128`.
    fn chunk_sum(&self, range: std::ops::Range<u64>) -> Option<i128> {
        range
            .into_iter()
            .try_fold(0i128, |acc, k| acc.checked_add(self.term(k)))
    }
}

fn fixed_term(num: &IntPolynomial, den: &IntPolynomial, k: u64, unit: &BigInt) -> BigInt {
    let x = BigInt::from(k);
    let mut n = num.eval(&x) * unit;
    let mut d = den.eval(&x);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    div_round(&n, &d, Rounding::Nearest)
}

fn estimate_terms(spec: &SummandSpec, target: &BigRational, limit: u64) -> u64 {
    let at = limit.max(spec.monotone_from());
    let Ok(tb) = spec.tail_bound(at) else {
        return u64::MAX;
    };
    let q = (tb / target).to_f64().unwrap_or(f64::INFINITY);
    let d = spec.decay_degree as f64;
    let est = 1.0 + (at as f64 - 1.0) * q.powf(1.0 / (d - 1.0));
    if est.is_finite() && est < u64::MAX as f64 {
        est.ceil() as u64
    } else {
        u64::MAX
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::legendre_coeffs;
    use crate::numeric::{eval_combination, zeta_value};

    fn tol(digits: u32) -> BigRational {
        BigRational::new(BigInt::from(1), pow10(digits))
    }

    #[test]
    fn twelve_zeta5() {
        let got = direct_sum_value(&legendre_coeffs(0), 3, 2, &tol(12)).unwrap();
        let z5 =
            zeta_value(5, 30).unwrap().value.to_rational() * BigRational::from_integer(12.into());
        assert!(got.contains(&z5) || (got.value.to_rational() - &z5).abs() <= tol(12));
        assert!(got.error_bound.to_rational() <= tol(12));
    }

    #[test]
    fn agrees_with_decomposition() {
        let p = legendre_coeffs(1);
        let direct = direct_sum_value(&p, 2, 1, &tol(10)).unwrap();
        let exact = eval_combination(&crate::decompose(&p, 2, 1).unwrap(), 30).unwrap();
        assert!(direct.agrees_with(&exact));
    }

    #[test]
    fn small_path_matches_big_path() {
        let spec = build_summand(&legendre_coeffs(2), 2, 1).unwrap();
        let (num, den) = spec.integer_parts();
        let unit = pow10(15);
        let small = SmallParts::new(num, den, 500, &unit).unwrap();
        for k in [0u64, 1, 2, 17, 250, 499] {
            assert_eq!(BigInt::from(small.term(k)), fixed_term(num, den, k, &unit));
        }
        assert!(SmallParts::new(num, den, 500, &pow10(200)).is_none());
    }

    #[test]
    fn unreachable_target_reports_estimate() {
        let spec = build_summand(&legendre_coeffs(0), 2, 0).unwrap();
        match direct_sum_spec(&spec, &tol(12), 1000) {
            Err(Error::TargetUnreachable { k_estimate, limit }) => {
                assert_eq!(limit, 1000);
                assert!(k_estimate > 1_000_000);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
