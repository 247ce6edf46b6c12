//! Shifted Legendre coefficients, their moments, and orthogonality on [0, 1].

use num_rational::BigRational;
use zetalab::exact::integrate_poly_01;
use zetalab::{legendre_coeffs, moment_closed_form, moment_from_coeffs};

fn main() {
    for n in 0..=5u64 {
        let p = legendre_coeffs(n);
        let m = moment_from_coeffs(&p).unwrap();
        assert_eq!(m, moment_closed_form(n));
        println!("P_{n}(s) = {p}");
        println!("  M(s) = {m}");
    }

    let q = |n| legendre_coeffs(n).to_rational();
    for n in 0..=4u64 {
        let row: Vec<String> = (0..=4u64)
            .map(|m| integrate_poly_01(&(&q(n) * &q(m))).to_string())
            .collect();
        println!("∫ P_{n} P_m = [{}]", row.join(", "));
    }
    let norm = integrate_poly_01(&(&q(7) * &q(7)));
    assert_eq!(norm, BigRational::new(1.into(), 15.into()));
}
