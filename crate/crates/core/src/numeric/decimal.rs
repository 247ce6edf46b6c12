//! Fixed-scale arbitrary-precision decimals and certified enclosures.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Nearest,
    Up,
    Down,
}

/// `a / b` rounded to an integer (`b > 0`).
pub fn div_round(a: &BigInt, b: &BigInt, mode: Rounding) -> BigInt {
    debug_assert!(b.is_positive());
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        return q;
    }
    match mode {
        Rounding::Down => q,
        Rounding::Up => q + 1,
        Rounding::Nearest => {
            if (&r << 1) >= *b {
                q + 1
            } else {
                q
            }
        }
    }
}

/// `mantissa × 10^-scale`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

impl Decimal {
    pub fn new(mantissa: BigInt, scale: u32) -> Self {
        Decimal { mantissa, scale }
    }

    pub fn zero() -> Self {
        Decimal::new(BigInt::zero(), 0)
    }

    pub fn from_rational(q: &BigRational, scale: u32, mode: Rounding) -> Self {
        let m = div_round(&(q.numer() * pow10(scale)), q.denom(), mode);
        Decimal::new(m, scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn abs(&self) -> Self {
        Decimal::new(self.mantissa.abs(), self.scale)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `digits` significant digits, e.g. `1.2443e1`.
    pub fn to_scientific(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.mantissa.is_zero() {
            return "0".to_string();
        }
        let neg = self.mantissa.is_negative();
        let mag = self.mantissa.abs();
        let len = mag.to_string().len();
        // round the mantissa to `digits` significant digits
        let (mut sig, mut exp) = if len > digits {
            let drop = (len - digits) as u32;
            let s = div_round(&mag, &pow10(drop), Rounding::Nearest);
            (s, len as i64 - 1 - self.scale as i64)
        } else {
            (
                mag * pow10((digits - len) as u32),
                len as i64 - 1 - self.scale as i64,
            )
        };
        if sig >= pow10(digits as u32) {
            sig /= 10;
            exp += 1;
        }
        let s = sig.to_string();
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = self.mantissa.sign() == Sign::Minus;
        let digits = self.mantissa.abs().to_string();
        let scale = self.scale as usize;
        let sign = if neg { "-" } else { "" };
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int}.{frac}")
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_rational().cmp(&other.to_rational())
    }
}

/// A decimal approximation with a certified absolute error: the true value
/// lies in `[value - error_bound, value + error_bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPrecisionValue {
    pub value: Decimal,
    pub error_bound: Decimal,
}

impl HighPrecisionValue {
    /// Rounds an exact enclosure `center ± radius` to `scale` digits,
    /// folding the rounding into the error bound.
    pub fn from_enclosure(center: &BigRational, radius: &BigRational, scale: u32) -> Self {
        let value = Decimal::from_rational(center, scale, Rounding::Nearest);
        let moved = (value.to_rational() - center).abs();
        let total = radius + moved;
        // keep the bound a little finer than the value so it stays informative
        let error_bound = Decimal::from_rational(&total, scale + 10, Rounding::Up);
        HighPrecisionValue { value, error_bound }
    }

    pub fn exact(q: &BigRational, scale: u32) -> Self {
        Self::from_enclosure(q, &BigRational::zero(), scale)
    }

    pub fn lower(&self) -> BigRational {
        self.value.to_rational() - self.error_bound.to_rational()
    }

    pub fn upper(&self) -> BigRational {
        self.value.to_rational() + self.error_bound.to_rational()
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lower() <= q && q <= &self.upper()
    }

    /// Whether the two enclosures overlap.
    pub fn agrees_with(&self, other: &HighPrecisionValue) -> bool {
        let gap = (self.value.to_rational() - other.value.to_rational()).abs();
        gap <= self.error_bound.to_rational() + other.error_bound.to_rational()
    }

    /// `|value|` with the same error bound.
    pub fn abs(&self) -> Self {
        HighPrecisionValue {
            value: self.value.abs(),
            error_bound: self.error_bound.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_string(),
            "error_bound": self.error_bound.to_scientific(3),
        })
    }
}

/// An integer `e` with `|q| < 10^e` (0 for `q = 0`).
pub fn log10_upper(q: &BigRational) -> i64 {
    if q.is_zero() {
        return 0;
    }
    let a = q.abs();
    let n = a.numer().to_string().len() as i64;
    let d = a.denom().to_string().len() as i64;
    n - d + 1
}
