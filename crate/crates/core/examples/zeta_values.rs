//! Certified ζ(j) values, and ζ(2) against π²/6.

use num_rational::BigRational;
use num_traits::Signed;
use zetalab::numeric::pi_value;
use zetalab::zeta_value;

fn main() {
    let digits = 50;
    for j in 2..=7 {
        let z = zeta_value(j, digits).unwrap();
        println!("ζ({j}) = {}  ± {}", z.value, z.error_bound.to_scientific(2));
    }
    let pi = pi_value(digits + 10).unwrap().value.to_rational();
    let z2 = zeta_value(2, digits).unwrap();
    let gap = (z2.value.to_rational() - &pi * &pi / BigRational::from_integer(6.into())).abs();
    println!(
        "|ζ(2) - π²/6| < 1e-{digits}: {}",
        gap < BigRational::new(1.into(), zetalab::numeric::pow10(digits))
    );
}
