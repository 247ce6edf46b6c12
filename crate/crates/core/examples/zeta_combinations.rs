//! Exact zeta combinations for the Legendre integrals, with the
//! cleared-denominator report in the (r, v) = (3, 2) shape.

use zetalab::{apery_report, decompose, eval_combination, legendre_coeffs};

fn main() {
    println!("r = 2, v = 1:");
    for n in 0..=4u64 {
        let combo = decompose(&legendre_coeffs(n), 2, 1).unwrap();
        let value = eval_combination(&combo, 30).unwrap();
        println!(
            "  n = {n}: {} ζ(3) {:+}  ≈ {}",
            combo.coeff(3),
            combo.constant,
            value.value
        );
    }

    println!("r = 3, v = 2:");
    for n in 0..=6u64 {
        let rep = apery_report(n, 3, 2).unwrap();
        let (_, b, g) = rep.abg.clone().unwrap();
        println!(
            "  n = {n}: D = {}, A = {}, B = {b}, G = {g}, D | lcm(1..n)^5: {}",
            rep.d,
            rep.a_pi4().unwrap(),
            rep.divides_lcm_n
        );
    }
}
