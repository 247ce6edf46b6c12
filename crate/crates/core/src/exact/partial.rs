//! Partial fractions over denominators that split into factors `(s + m)`
//! with positive integer `m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{IntPolynomial, QPoly};
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// One term `coeff / (s + pole)^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub pole: u64,
    pub order: u32,
    pub coeff: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionForm {
    /// Sorted by pole, then by order (ascending). Zero coefficients are omitted.
    pub terms: Vec<PoleTerm>,
    pub polynomial_part: QPoly,
}

impl PartialFractionForm {
    /// Rebuilds the rational function from its terms.
    pub fn recombine(&self) -> RationalFunction {
        self.terms.iter().fold(
            RationalFunction::polynomial(self.polynomial_part.clone()),
            |acc, t| {
                acc.add(&RationalFunction::pole_term(
                    t.coeff.clone(),
                    t.pole as i64,
                    t.order,
                ))
            },
        )
    }

    /// `Σ_m β_{m,1}`; vanishes whenever the source decays like `s^-2` or faster.
    pub fn simple_residue_sum(&self) -> BigRational {
        self.terms
            .iter()
            .filter(|t| t.order == 1)
            .map(|t| t.coeff.clone())
            .sum()
    }

    pub fn coeff(&self, pole: u64, order: u32) -> BigRational {
        self.terms
            .iter()
            .find(|t| t.pole == pole && t.order == order)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn max_order(&self) -> u32 {
        self.terms.iter().map(|t| t.order).max().unwrap_or(0)
    }
}

/// Decomposes a proper rational function whose poles all sit at negative
/// integers.
pub fn partial_fractions(f: &RationalFunction) -> Result<PartialFractionForm> {
    let num = f.numerator();
    let den = f.denominator();
    let dd = den.degree().unwrap_or(0);
    if let Some(nd) = num.degree() {
        if nd >= dd {
            return Err(Error::ImproperFraction { num: nd, den: dd });
        }
    } else {
        return Ok(PartialFractionForm {
            terms: Vec::new(),
            polynomial_part: QPoly::zero(),
        });
    }

    // A monic polynomial with only integer roots has integer coefficients.
    if den.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::UnsupportedPole(
            "denominator has a non-integer root".into(),
        ));
    }
    let den_int: IntPolynomial = den.map(|c| c.to_integer());
    let poles = integer_poles(&den_int)?;

    let scale = num.denominator_lcm();
    let num_int = num.to_integer_scaled(&scale);
    let scale_q = BigRational::from_integer(scale);

    let mut terms = Vec::new();
    for &(m, e) in &poles {
        let point = BigInt::from(-(m as i64));
        let e_us = e as usize;
        let n_t = taylor_prefix(&num_int, &point, e_us);
        let d_t = taylor_prefix(&den_int, &point, 2 * e_us);
        // cofactor Q(s) = den / (s+m)^e has Taylor coefficients d_t[e..]
        let q_t: Vec<BigRational> = (0..e_us)
            .map(|i| BigRational::from_integer(d_t.get(i + e_us).cloned().unwrap_or_default()))
            .collect();
        let q0 = q_t[0].clone();
        if q0.is_zero() {
            return Err(Error::InvariantViolation(
                "pole multiplicity miscounted".into(),
            ));
        }
        let mut h: Vec<BigRational> = Vec::with_capacity(e_us);
        for i in 0..e_us {
            let mut acc = BigRational::from_integer(n_t[i].clone()) / &scale_q;
            for l in 1..=i {
                acc -= &q_t[l] * &h[i - l];
            }
            h.push(acc / &q0);
        }
        for (i, c) in h.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(PoleTerm {
                    pole: m,
                    order: e - i as u32,
                    coeff: c,
                });
            }
        }
    }
    terms.sort_by_key(|t| (t.pole, t.order));
    Ok(PartialFractionForm {
        terms,
        polynomial_part: QPoly::zero(),
    })
}

/// First `count` Taylor coefficients of `p` around `point`, by repeated
/// synthetic division.
fn taylor_prefix(p: &IntPolynomial, point: &BigInt, count: usize) -> Vec<BigInt> {
    let mut work: Vec<BigInt> = p.coeffs().to_vec();
    (0..count)
        .map(|_| {
            if work.is_empty() {
                return BigInt::zero();
            }
            let (q, r) = synthetic_div(&work, point);
            work = q;
            r
        })
        .collect()
}

/// Roots `-m` with multiplicities, for a monic integer polynomial whose roots
/// must all be negative integers.
fn integer_poles(den: &IntPolynomial) -> Result<Vec<(u64, u32)>> {
    let mut rest = den.coeffs().to_vec();
    let mut poles = Vec::new();
    if rest.len() <= 1 {
        return Ok(poles);
    }
    if rest[0].is_zero() {
        return Err(Error::UnsupportedPole("pole at s = 0".into()));
    }
    let bound = IntPolynomial::new(rest.clone())
        .to_rational()
        .root_modulus_bound();
    let mut m: u64 = 1;
    while rest.len() > 1 && m <= bound {
        let root = BigInt::from(-(m as i64));
        let mut e = 0u32;
        loop {
            let (q, r) = synthetic_div(&rest, &root);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            poles.push((m, e));
        }
        m += 1;
    }
    if rest.len() > 1 {
        return Err(Error::UnsupportedPole(format!(
            "denominator factor of degree {} has no roots at negative integers",
            rest.len() - 1
        )));
    }
    Ok(poles)
}

fn synthetic_div(p: &[BigInt], root: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = p.len();
    let mut quot = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        let v = &p[i] + &carry * root;
        if i == 0 {
            return (quot, v);
        }
        quot[i - 1] = v.clone();
        carry = v;
    }
    unreachable!("polynomial has at least one coefficient")
}

impl Default for PartialFractionForm {
    fn default() -> Self {
        PartialFractionForm {
            terms: Vec::new(),
            polynomial_part: QPoly::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn two_simple_poles() {
        let f = RationalFunction::new(q(&[1]), q(&[2, 3, 1])).unwrap();
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(pf.coeff(1, 1), int(1));
        assert_eq!(pf.coeff(2, 1), int(-1));
        assert_eq!(pf.terms.len(), 2);
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn double_pole() {
        // 1/((s+1)^2 (s+2))
        let f = RationalFunction::new(q(&[1]), &q(&[1, 1]).pow(2) * &q(&[2, 1])).unwrap();
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(pf.coeff(1, 2), int(1));
        assert_eq!(pf.coeff(1, 1), int(-1));
        assert_eq!(pf.coeff(2, 1), int(1));
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn single_high_order_pole() {
        let f = RationalFunction::pole_term(int(12), 1, 5);
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(
            pf.terms,
            vec![PoleTerm {
                pole: 1,
                order: 5,
                coeff: int(12)
            }]
        );
    }

    #[test]
    fn rejects_bad_poles_and_improper_input() {
        let at_zero = RationalFunction::new(q(&[1]), q(&[0, 1])).unwrap();
        assert!(matches!(
            partial_fractions(&at_zero),
            Err(Error::UnsupportedPole(_))
        ));
        let positive = RationalFunction::new(q(&[1]), q(&[-3, 1])).unwrap();
        assert!(matches!(
            partial_fractions(&positive),
            Err(Error::UnsupportedPole(_))
        ));
        let irreducible = RationalFunction::new(q(&[1]), q(&[1, 0, 1])).unwrap();
        assert!(matches!(
            partial_fractions(&irreducible),
            Err(Error::UnsupportedPole(_))
        ));
        let half = RationalFunction::new(q(&[1]), q(&[1, 2])).unwrap();
        assert!(matches!(
            partial_fractions(&half),
            Err(Error::UnsupportedPole(_))
        ));
        let improper = RationalFunction::new(q(&[0, 0, 1]), q(&[1, 1])).unwrap();
        assert!(matches!(
            partial_fractions(&improper),
            Err(Error::ImproperFraction { .. })
        ));
    }

    #[test]
    fn taylor_prefix_matches_shift() {
        let p = IntPolynomial::from_i64s(&[5, -3, 0, 2, 1]);
        let full = p.to_rational().shift_to_pole(&int(3));
        let pre = taylor_prefix(&p, &BigInt::from(-3), 7);
        for (i, c) in pre.iter().enumerate() {
            assert_eq!(BigRational::from_integer(c.clone()), full.coeff(i));
        }
    }
}
