//! Exact arithmetic: big integers and rationals, integer polynomials,
//! rational functions and partial fractions.

mod partial;
mod poly;
mod ratfunc;
pub mod serial;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use partial::{partial_fractions, PartialFractionForm, PoleTerm};
pub use poly::{IntPolynomial, Poly, QPoly};
pub use ratfunc::RationalFunction;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial, so the division is exact
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of the shifted Legendre polynomial
/// `P_n(x) = (1/n!) d^n/dx^n [x^n (1-x)^n]`,
/// namely `a(n, l) = (-1)^l C(n, l) C(n + l, l)`.
pub fn legendre_coeffs(n: u64) -> IntPolynomial {
    IntPolynomial::new(
        (0..=n)
            .map(|l| {
                let c = binomial(n, l) * binomial(n + l, l);
                if l % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// `∫_0^1 p(x) dx = Σ_l p_l / (l + 1)`.
pub fn integrate_poly_01(p: &QPoly) -> BigRational {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(l, c)| c / BigRational::from_integer(BigInt::from(l + 1)))
        .sum()
}

/// `lcm(1, ..., n)`; 1 for `n <= 1`.
pub fn lcm_upto(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
}

/// `Σ_{t=1}^{m} 1 / t^j`.
pub fn generalized_harmonic(m: u64, j: u32) -> BigRational {
    (1..=m)
        .map(|t| BigRational::new(BigInt::one(), BigInt::from(t).pow(j)))
        .sum()
}
