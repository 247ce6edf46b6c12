//! Moments `M(s) = ∫_0^1 x^s R(x) dx` and the differentiated summand
//! `G(s) = d^v/ds^v [M(s)^r]` whose values at `s = 0, 1, 2, ...` make up the
//! series for the log-weighted cube integral.
//!
//! Sign convention: the integral with weight `(-log Πx)^v` equals
//! `(-1)^v Σ_k G(k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, QPoly, RationalFunction};

/// `M(s) = Σ_l a_l / (s + l + 1)` for `R(x) = Σ_l a_l x^l`.
pub fn moment_from_coeffs(poly: &IntPolynomial) -> Result<RationalFunction> {
    let deg = poly.degree().ok_or(Error::ZeroPolynomial)?;
    let factors: Vec<QPoly> = (0..=deg)
        .map(|l| QPoly::linear(BigRational::from_integer(BigInt::from(l + 1))))
        .collect();
    let den = factors.iter().fold(QPoly::one(), |acc, f| &acc * f);
    let mut num = QPoly::zero();
    for (l, a) in poly.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let others = factors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != l)
            .fold(QPoly::one(), |acc, (_, f)| &acc * f);
        num = &num + &others.scale(&BigRational::from_integer(a.clone()));
    }
    RationalFunction::new(num, den)
}

/// Product form of the shifted Legendre moment,
/// `M_n(s) = (-1)^n s(s-1)...(s-n+1) / ((s+1)(s+2)...(s+n+1))`.
pub fn moment_closed_form(n: u64) -> RationalFunction {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let num = (0..n as i64).fold(QPoly::one(), |acc, i| &acc * &QPoly::linear(int(-i)));
    let num = if n % 2 == 1 { -&num } else { num };
    let den = (1..=n as i64 + 1).fold(QPoly::one(), |acc, i| &acc * &QPoly::linear(int(i)));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// The series summand for one `(R, r, v)` configuration.
#[derive(Clone, Debug)]
pub struct SummandSpec {
    pub poly: IntPolynomial,
    pub r: u32,
    pub v: u32,
    pub moment: RationalFunction,
    pub summand: RationalFunction,
    /// `deg(den) - deg(num)` of the summand.
    pub decay_degree: usize,
    // G = num_int / den_int with integer coefficients, for fast evaluation
    num_int: IntPolynomial,
    den_int: IntPolynomial,
    monotone_from: u64,
}

/// Builds `G(s) = d^v/ds^v [M(s)^r]`.
///
/// `r = 1` is rejected: the terms then decay like `1/k` and the series
/// diverges.
pub fn build_summand(poly: &IntPolynomial, r: u32, v: u32) -> Result<SummandSpec> {
    if r < 2 {
        return Err(Error::SeriesDiverges { r });
    }
    let moment = moment_from_coeffs(poly)?;
    let summand = moment.pow(r).derivative(v);
    let decay = match summand.decay_degree() {
        // G vanishes identically only if M does, which a nonzero R rules out
        None => return Err(Error::InvariantViolation("summand vanished".into())),
        Some(d) if d < 2 => return Err(Error::SlowDecay(d.max(0) as usize)),
        Some(d) => d as usize,
    };

    let num = summand.numerator();
    let den = summand.denominator();
    let scale = {
        use num_integer::Integer;
        num.denominator_lcm().lcm(&den.denominator_lcm())
    };
    let num_int = num.to_integer_scaled(&scale);
    let den_int = den.to_integer_scaled(&scale);

    // Beyond every root of N and of N'D - ND', G keeps its sign and is
    // monotone, so |G| decreases to zero there.
    let crit = &(&num.derivative() * den) - &(num * &den.derivative());
    let monotone_from = 2
        .max(num.root_modulus_bound())
        .max(crit.root_modulus_bound())
        + 1;

    Ok(SummandSpec {
        poly: poly.clone(),
        r,
        v,
        moment,
        summand,
        decay_degree: decay,
        num_int,
        den_int,
        monotone_from,
    })
}

impl SummandSpec {
    /// Exact `G(k)`.
    pub fn term_value(&self, k: u64) -> BigRational {
        let x = BigInt::from(k);
        BigRational::new(self.num_int.eval(&x), self.den_int.eval(&x))
    }

    /// Integer numerator and denominator polynomials with `G = N / D`.
    pub fn integer_parts(&self) -> (&IntPolynomial, &IntPolynomial) {
        (&self.num_int, &self.den_int)
    }

    /// Exact `Σ_{k=0}^{K-1} G(k)`.
    pub fn series_partial_sum(&self, terms: u64) -> BigRational {
        self.partial_sum_range(0, terms)
    }

    /// Exact `Σ_{k=start}^{end-1} G(k)`.
    pub fn partial_sum_range(&self, start: u64, end: u64) -> BigRational {
        (start..end)
            .into_par_iter()
            .map(|k| self.term_value(k))
            .reduce(BigRational::zero, |a, b| a + b)
    }

    /// Smallest `K` accepted by [`tail_bound`](Self::tail_bound).
    pub fn monotone_from(&self) -> u64 {
        self.monotone_from
    }

    /// Certified upper bound on `|Σ_{k>=K} G(k)|`.
    ///
    /// For `s >= s0 = K - 1`, `|G(s)| <= C / s^d` with `d` the decay degree and
    /// `C = Σ|n_i| s0^(i - deg N) / λ`, where `λ` is a lower bound for
    /// `D(s) / s^deg D` (`λ = 1` when `D` has nonnegative coefficients). Then
    /// `Σ_{k>=K} C/k^d <= C ∫_{K-1}^∞ s^-d ds = C / ((d-1) s0^(d-1))`.
    pub fn tail_bound(&self, k: u64) -> Result<BigRational> {
        if k < self.monotone_from {
            return Err(Error::IncreaseK {
                k,
                threshold: self.monotone_from,
            });
        }
        let s0 = BigRational::from_integer(BigInt::from(k - 1));
        let num = self.summand.numerator();
        let den = self.summand.denominator();
        let upper = num.envelope_constant(&s0);
        let lower = if den.coeffs().iter().all(|c| !c.is_negative()) {
            BigRational::one()
        } else {
            let dd = den.degree().unwrap_or(0);
            let lower_terms: QPoly = QPoly::new(den.coeffs()[..dd].to_vec());
            // Σ_{i<dD} |d_i| s0^(i - dD) = envelope(lower_terms) / s0^(dD - deg lower)
            let rest = match lower_terms.degree() {
                None => BigRational::zero(),
                Some(dl) => lower_terms.envelope_constant(&s0) / pow_q(&s0, (dd - dl) as u32),
            };
            BigRational::one() - rest
        };
        if !lower.is_positive() {
            return Err(Error::IncreaseK {
                k,
                threshold: k + 1,
            });
        }
        let d = self.decay_degree as u32;
        let c = upper / lower;
        Ok(c / (BigRational::from_integer(BigInt::from(d - 1)) * pow_q(&s0, d - 1)))
    }

    /// Smallest `K` (at least the monotonicity threshold) whose tail bound is
    /// `<= target`, or `None` if that needs more than `limit` terms.
    pub fn terms_for_tail(&self, target: &BigRational, limit: u64) -> Result<Option<u64>> {
        let ok = |k: u64| -> Result<bool> { Ok(&self.tail_bound(k)? <= target) };
        let mut lo = self.monotone_from;
        if lo > limit {
            return Ok(None);
        }
        if ok(lo)? {
            return Ok(Some(lo));
        }
        let mut hi = lo.max(1);
        loop {
            hi = hi.saturating_mul(2);
            if hi > limit {
                if ok(limit)? {
                    hi = limit;
                    break;
                }
                return Ok(None);
            }
            if ok(hi)? {
                break;
            }
            lo = hi;
        }
        // invariant: !ok(lo), ok(hi)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if ok(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(Some(hi))
    }
}

fn pow_q(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}
