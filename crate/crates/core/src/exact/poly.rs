//! Dense univariate polynomials over exact coefficient rings.
//!
//! Coefficients are stored lowest degree first. The zero polynomial is the
//! empty vector, and every other polynomial has a nonzero leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Integer-coefficient polynomial.
pub type IntPolynomial = Poly<BigInt>;

/// Rational-coefficient polynomial.
pub type QPoly = Poly<BigRational>;

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `x + a`
    pub fn linear(a: T) -> Self {
        Self::new(vec![a, T::one()])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Num + FromPrimitive> Poly<T> {
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("index fits"))
                .collect(),
        )
    }
}

impl<T: Clone + Num> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Clone + Num> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> QPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDenominator)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i - dd + j] -= &q * d;
                }
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolation(
                "polynomial division left a remainder".into(),
            ));
        }
        Ok(q)
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Coefficients of `p(t - m)` as a polynomial in `t`, i.e. the Taylor
    /// expansion of `p` around `s = -m`.
    pub fn shift_to_pole(&self, m: &BigRational) -> QPoly {
        // Synthetic division by (s + m) repeatedly, which is Horner's
        // scheme for the Taylor coefficients at -m.
        let root = -m.clone();
        let mut work = self.coeffs.clone();
        let n = work.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &work[j + 1] * &root;
                work[j] += t;
            }
        }
        QPoly::new(work)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer polynomial `scale * self`; `scale` must clear all denominators.
    pub fn to_integer_scaled(&self, scale: &BigInt) -> IntPolynomial {
        let s = BigRational::from_integer(scale.clone());
        self.map(|c| {
            let v = c * &s;
            debug_assert!(v.is_integer());
            BigRational::from_integer(v.to_integer())
        })
        .map(|c| c.to_integer())
    }

    /// `Σ |a_i| s0^(i - deg)`, which dominates `|p(s)| / s^deg` for `s >= s0 > 0`.
    pub fn envelope_constant(&self, s0: &BigRational) -> BigRational {
        let inv = s0.recip();
        let mut acc = BigRational::zero();
        let mut w = BigRational::one();
        for c in self.coeffs.iter().rev() {
            acc += c.abs() * &w;
            w *= &inv;
        }
        acc
    }
}

impl QPoly {
    /// An integer `B` with `|z| <= B` for every complex root `z`, from
    /// Fujiwara's bound `2 max_i |a_{d-i}/a_d|^{1/i}` (with `a_0/2` in the
    /// last slot). The floating-point estimate is confirmed exactly.
    pub fn root_modulus_bound(&self) -> u64 {
        let d = match self.degree() {
            Some(d) if d > 0 => d,
            _ => return 0,
        };
        let lead = self.coeffs[d].abs();
        let ratio = |i: usize| {
            let mut r = self.coeffs[d - i].abs() / &lead;
            if i == d {
                r /= BigRational::from_integer(BigInt::from(2));
            }
            r
        };
        let mut est = 0.0f64;
        for i in 1..=d {
            let r = ratio(i);
            if r.is_zero() {
                continue;
            }
            est = est.max(log2_ratio(&r) / i as f64);
        }
        let mut bound = (2.0 * est.exp2()).ceil().clamp(1.0, 1e15) as u64 + 1;
        loop {
            let half = BigRational::new(BigInt::from(bound), BigInt::from(2));
            let mut pow = BigRational::one();
            let ok = (1..=d).all(|i| {
                pow *= &half;
                ratio(i) <= pow
            });
            if ok {
                return bound;
            }
            bound = bound.saturating_mul(2);
        }
    }
}

fn log2_ratio(r: &BigRational) -> f64 {
    log2_int(r.numer()) - log2_int(r.denom())
}

fn log2_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().unwrap_or(f64::MAX).abs().log2();
    }
    let shifted: BigInt = x >> (bits - 64);
    shifted.to_f64().unwrap().abs().log2() + (bits - 64) as f64
}

impl<T: fmt::Display + Clone + Num + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "s")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = q(&[-1, 0, 0, 1]);
        let b = q(&[1, 1]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qq * &b) + &r, a);
        assert_eq!(qq, q(&[1, -1, 1]));
        assert_eq!(r, q(&[-2]));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // (s+1)(s+2) and (s+1)(s-3)
        let a = &q(&[1, 1]) * &q(&[2, 1]);
        let b = &q(&[1, 1]) * &q(&[-3, 1]);
        assert_eq!(
            a.scale(&BigRational::from_integer(7.into())).gcd(&b),
            q(&[1, 1])
        );
        assert_eq!(a.gcd(&QPoly::zero()), a);
    }

    #[test]
    fn shift_matches_taylor_coefficients() {
        // p(s) = s^2 + 3s + 1 around s = -2: p(t - 2) = t^2 - t - 1
        let p = q(&[1, 3, 1]);
        let m = BigRational::from_integer(2.into());
        assert_eq!(p.shift_to_pole(&m), q(&[-1, -1, 1]));
    }

    #[test]
    fn derivative_and_pow() {
        let p = q(&[1, 1]).pow(3);
        assert_eq!(p, q(&[1, 3, 3, 1]));
        assert_eq!(p.derivative(), q(&[3, 6, 3]));
    }

    #[test]
    fn root_bound_covers_roots() {
        // roots 1, -7, 30
        let p = &(&q(&[-1, 1]) * &q(&[7, 1])) * &q(&[-30, 1]);
        let b = p.root_modulus_bound();
        assert!(b >= 30, "{b}");
        assert!(b <= 200, "{b}");
        assert_eq!(q(&[5]).root_modulus_bound(), 0);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(q(&[1, -2, 1]).to_string(), "s^2 - 2*s + 1");
        assert_eq!(q(&[0, -1]).to_string(), "-s");
    }
}
