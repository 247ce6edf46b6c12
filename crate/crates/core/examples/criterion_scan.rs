//! Smallness scan of |c(n)| for the ζ(3) configuration: the ratio
//! |c(n+1)/c(n)| approaches (√2 - 1)^4.

use zetalab::{legendre_coeffs, rationality_criterion};

fn main() {
    let rows = rationality_criterion(legendre_coeffs, 2, 1, 20, 30).unwrap();
    let limit = (2f64.sqrt() - 1.0).powi(4);
    println!(
        "{:>3}  {:>14}  {:>14}  {:>10}",
        "n", "|c(n)|", "lcm^3 |c(n)|", "ratio"
    );
    for row in &rows {
        println!(
            "{:>3}  {:>14}  {:>14}  {:>10}",
            row.n,
            row.abs_c.value.to_scientific(6),
            row.lcm_scaled.to_scientific(6),
            row.ratio_to_prev
                .as_ref()
                .map(|d| d.to_scientific(4))
                .unwrap_or_default()
        );
    }
    println!("(√2 - 1)^4 = {limit:.5}");
}
