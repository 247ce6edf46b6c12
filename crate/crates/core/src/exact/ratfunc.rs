//! Rational functions in one variable `s` over Q, kept in canonical form:
//! monic denominator and coprime numerator/denominator. Two canonical
//! rational functions are equal iff their coefficients are equal, so the
//! derived `PartialEq` is exact equality of functions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Scales a coprime pair so the denominator is monic.
    fn from_coprime(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lead.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn polynomial(p: QPoly) -> Self {
        RationalFunction {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `c / (s + m)^j`
    pub fn pole_term(c: BigRational, m: i64, j: u32) -> Self {
        let den = QPoly::linear(BigRational::from_integer(BigInt::from(m))).pow(j);
        Self::from_coprime(QPoly::constant(c), den)
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-normalizes; a no-op on values built through this API.
    pub fn normalize(&self) -> Result<Self> {
        Self::new(self.num.clone(), self.den.clone())
    }

    /// `deg(den) - deg(num)`, or `None` for the zero function.
    pub fn decay_degree(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(self.den.degree().unwrap_or(0) as i64 - n)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&other.den);
        let a_cof = self.den.exact_div(&g).expect("gcd divides");
        let b_cof = other.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b_cof) + &(&other.num * &a_cof);
        let den = &self.den * &b_cof;
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // inputs are coprime, so cross-cancelling leaves a coprime product
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        Self::from_coprime(&n1 * &n2, &d1 * &d2)
    }

    pub fn pow(&self, r: u32) -> Self {
        if r == 0 {
            return Self::one();
        }
        // powers of coprime polynomials stay coprime
        Self::from_coprime(self.num.pow(r), self.den.pow(r))
    }

    /// The `v`-th derivative with respect to `s`.
    pub fn derivative(&self, v: u32) -> Self {
        if v == 0 || self.is_zero() {
            return self.clone();
        }
        // With g = gcd(D, D') and h = D / g (the squarefree part of D), each
        // step N/E -> (N' h - N (E' h / E)) / (E h) lands in canonical form,
        // and E' h / E = D'/g + k h' after k steps.
        let d_prime = self.den.derivative();
        let g = self.den.gcd(&d_prime);
        let h = self.den.exact_div(&g).expect("gcd divides");
        let w = d_prime.exact_div(&g).expect("gcd divides D'");
        let h_prime = h.derivative();

        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for k in 0..v {
            let kk = BigRational::from_integer(BigInt::from(k));
            let factor = &w + &h_prime.scale(&kk);
            num = &(&num.derivative() * &h) - &(&num * &factor);
            if num.is_zero() {
                return Self::zero();
            }
            den = &den * &h;
        }
        Self::from_coprime(num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
