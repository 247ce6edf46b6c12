//! ζ(j) at integer arguments, π and e, with certified error bounds.
//!
//! Everything runs in fixed point: an integer `m` stands for `m × 10^-w`,
//! and every rounding step is counted into the error budget.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::decimal::{div_round, pow10, HighPrecisionValue, Rounding};
use crate::error::{Error, Result};
use crate::exact::binomial;

/// Guard digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 10;

/// Fixed-point approximation `value × 10^-scale` with error at most
/// `err_ulps × 10^-scale`.
#[derive(Clone, Debug)]
pub(crate) struct Fixed {
    pub value: BigInt,
    pub err_ulps: BigInt,
    pub scale: u32,
}

impl Fixed {
    pub fn center(&self) -> BigRational {
        BigRational::new(self.value.clone(), pow10(self.scale))
    }

    pub fn radius(&self) -> BigRational {
        BigRational::new(self.err_ulps.clone(), pow10(self.scale))
    }
}

/// Bernoulli numbers `B_0, B_1, ...` (with `B_1 = -1/2`), extended on demand.
struct Bernoulli {
    b: Vec<BigRational>,
}

impl Bernoulli {
    fn new() -> Self {
        Bernoulli {
            b: vec![BigRational::one()],
        }
    }

    fn get(&mut self, m: usize) -> &BigRational {
        while self.b.len() <= m {
            let m = self.b.len();
            if m > 1 && m % 2 == 1 {
                self.b.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (k, bk) in self.b.iter().enumerate() {
                if !bk.is_zero() {
                    acc += BigRational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
                }
            }
            self.b
                .push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        &self.b[m]
    }
}

/// ζ(j) by Euler–Maclaurin summation:
/// `Σ_{k<N} k^-j + N^(1-j)/(j-1) + N^-j/2 + Σ_i B_2i/(2i)! (j)_{2i-1} N^(-j-2i+1)`.
/// With `f(x) = x^-j`, every `f^(2m)` has constant sign, so the remainder after
/// `m` correction terms is at most the magnitude of the `m`-th term.
pub(crate) fn zeta_fixed(j: u32, digits: u32) -> Fixed {
    assert!(j >= 2);
    let w = digits + 4;
    let one = pow10(w);
    let target = BigRational::new(BigInt::one(), pow10(w));
    let mut n: u64 = (digits as u64 + 10).max(20);
    loop {
        if let Some(f) = zeta_em(j, n, w, &one, &target) {
            return f;
        }
        n *= 2;
    }
}

fn zeta_em(j: u32, n: u64, w: u32, one: &BigInt, target: &BigRational) -> Option<Fixed> {
    let mut sum = BigInt::zero();
    let mut roundings: u64 = 0;
    for k in 1..n {
        sum += div_round(one, &BigInt::from(k).pow(j), Rounding::Nearest);
        roundings += 1;
    }
    let nb = BigInt::from(n);
    let nq = BigRational::from_integer(nb.clone());
    let n_pow_j = nb.pow(j);
    // ∫_N^∞ x^-j dx and f(N)/2
    sum += div_round(one, &(&n_pow_j / &nb * (j - 1)), Rounding::Nearest);
    sum += div_round(one, &(&n_pow_j * 2u32), Rounding::Nearest);
    roundings += 2;

    let max_terms = 4 * (w as usize + 20);
    let mut bern = Bernoulli::new();
    let n_sq = &nq * &nq;
    // (j)_{2i-1} N^(-j-2i+1), updated incrementally
    let mut rising = BigRational::from_integer(BigInt::from(j));
    let mut n_pow = BigRational::from_integer(&n_pow_j * &nb);
    let mut fact = BigRational::from_integer(BigInt::from(2));
    let mut prev_mag: Option<BigRational> = None;
    for i in 1..=max_terms {
        if i > 1 {
            let a = BigInt::from(j as u64 + 2 * i as u64 - 3);
            let b = BigInt::from(j as u64 + 2 * i as u64 - 2);
            rising *= BigRational::from_integer(a * b);
            n_pow *= &n_sq;
            let f1 = BigInt::from(2 * i as u64 - 1);
            let f2 = BigInt::from(2 * i as u64);
            fact *= BigRational::from_integer(f1 * f2);
        }
        let term = bern.get(2 * i) / &fact * &rising / &n_pow;
        let mag = term.abs();
        if let Some(p) = &prev_mag {
            if &mag > p {
                // asymptotic series turned around before converging
                return None;
            }
        }
        let scaled = &term * BigRational::from_integer(one.clone());
        sum += div_round(scaled.numer(), scaled.denom(), Rounding::Nearest);
        roundings += 1;
        if &mag < target {
            // remainder ≤ |term_i| < 10^-w, i.e. under one ulp
            let err_ulps = BigInt::from(roundings / 2 + 2);
            return Some(Fixed {
                value: sum,
                err_ulps,
                scale: w,
            });
        }
        prev_mag = Some(mag);
    }
    None
}

fn check_precision(precision: u32) -> Result<()> {
    if precision < 10 {
        return Err(Error::InvalidParameter(format!(
            "precision must be >= 10 digits, got {precision}"
        )));
    }
    Ok(())
}

/// ζ(j) to `precision` decimal places, error bound `<= 10^-precision`.
pub fn zeta_value(j: u32, precision: u32) -> Result<HighPrecisionValue> {
    if j < 2 {
        return Err(Error::InvalidParameter(format!(
            "zeta({j}) diverges; need j >= 2"
        )));
    }
    check_precision(precision)?;
    let f = zeta_fixed(j, precision + GUARD_DIGITS);
    Ok(HighPrecisionValue::from_enclosure(
        &f.center(),
        &f.radius(),
        precision,
    ))
}

/// `atan(1/x)` in fixed point at scale `w`.
fn atan_inv(x: u64, w: u32) -> Fixed {
    let one = pow10(w);
    let x2 = BigInt::from(x) * x;
    let mut power = div_round(&one, &BigInt::from(x), Rounding::Down); // 1/x^(2k+1)
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    let mut roundings: u64 = 1;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        roundings += 2;
        k += 1;
    }
    // each truncation is under one ulp; the alternating tail adds under one more
    Fixed {
        value: sum,
        err_ulps: BigInt::from(roundings + 1),
        scale: w,
    }
}

/// π by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_value(precision: u32) -> Result<HighPrecisionValue> {
    check_precision(precision)?;
    let w = precision + GUARD_DIGITS;
    let a = atan_inv(5, w);
    let b = atan_inv(239, w);
    let center = a.center() * BigRational::from_integer(16.into())
        - b.center() * BigRational::from_integer(4.into());
    let radius = a.radius() * BigRational::from_integer(16.into())
        + b.radius() * BigRational::from_integer(4.into());
    Ok(HighPrecisionValue::from_enclosure(
        &center, &radius, precision,
    ))
}

/// `e^x` for integer `x >= 0`, correct to about `digits` significant digits.
pub fn exp_integer(x: u64, digits: u32) -> BigRational {
    if x == 0 {
        return BigRational::one();
    }
    // e^x < 10^(x log10(e) + 1); carry that many extra digits through the power
    let extra = (x as f64 * std::f64::consts::LOG10_E).ceil() as u32 + 1;
    let w = digits + extra + GUARD_DIGITS + (64 - x.leading_zeros());
    let one = pow10(w);
    let mut e = BigInt::zero();
    let mut term = one.clone();
    let mut k: u64 = 1;
    while !term.is_zero() {
        e += &term;
        term /= k;
        k += 1;
    }
    // repeated squaring in fixed point
    let mut base = e;
    let mut acc = one.clone();
    let mut n = x;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * &base / &one;
        }
        n >>= 1;
        if n > 0 {
            base = &base * &base / &one;
        }
    }
    BigRational::new(acc, one)
}
