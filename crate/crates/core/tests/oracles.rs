//! Values frozen from an independent computer-algebra run, and cross-route
//! agreement checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use zetalab::exact::serial::parse_rational;
use zetalab::numeric::{pi_value, pow10};
use zetalab::{
    build_summand, decompose, eval_combination, legendre_coeffs, mc_integral, moment_closed_form,
    moment_from_coeffs, zeta_value, ZetaCombination,
};

fn rat(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn combo(terms: &[(u32, &str)], constant: &str) -> ZetaCombination {
    ZetaCombination::new(
        terms.iter().map(|&(j, c)| (j, rat(c))).collect(),
        rat(constant),
    )
}

#[test]
fn frozen_r3_v2() {
    let table = [
        (0, "0", "12", "0"),
        (1, "-108", "-84", "204"),
        (2, "6750", "12", "-58545/8"),
        (3, "-263718", "207276", "45682627/648"),
        (4, "-6861825", "-20159988", "587475010975/20736"),
    ];
    for (n, z4, z5, c) in table {
        let got = decompose(&legendre_coeffs(n), 3, 2).unwrap();
        assert_eq!(got, combo(&[(4, z4), (5, z5)], c), "n = {n}");
    }
}

#[test]
fn frozen_r2_v1() {
    let table = [
        (0, "2", "0"),
        (1, "10", "-12"),
        (2, "146", "-351/2"),
        (3, "2890", "-62531/18"),
    ];
    for (n, z3, c) in table {
        let got = decompose(&legendre_coeffs(n), 2, 1).unwrap();
        assert_eq!(got, combo(&[(3, z3)], c), "n = {n}");
    }
}

#[test]
fn closed_form_matches_coefficients() {
    for n in 0..=20 {
        assert_eq!(
            moment_closed_form(n),
            moment_from_coeffs(&legendre_coeffs(n)).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn even_zeta_from_pi() {
    let digits = 40;
    let pi = pi_value(digits + 10).unwrap().value.to_rational();
    let tol = BigRational::new(1.into(), pow10(digits));
    let pi2 = &pi * &pi;
    let z2 = zeta_value(2, digits).unwrap().value.to_rational();
    assert!((z2 - &pi2 / BigRational::from_integer(6.into())).abs() <= tol);
    let z4 = zeta_value(4, digits).unwrap().value.to_rational();
    assert!((z4 - &pi2 * &pi2 / BigRational::from_integer(90.into())).abs() <= tol);
}

/// `(-1)^v Σ_{k<K} G(k)` plus the certified tail brackets the decomposed value.
#[test]
fn partial_sums_bracket_decomposition() {
    for n in 0..=6u64 {
        for r in 2..=4u32 {
            for v in 0..=3u32 {
                let spec = build_summand(&legendre_coeffs(n), r, v).unwrap();
                let k = spec.monotone_from().max(64);
                let tail = spec.tail_bound(k).unwrap();
                let mut partial = spec.partial_sum_range(0, k);
                if v % 2 == 1 {
                    partial = -partial;
                }
                let exact = eval_combination(&spec_combo(&spec), 30).unwrap();
                let gap = (exact.value.to_rational() - partial).abs();
                assert!(
                    gap <= tail + exact.error_bound.to_rational(),
                    "n={n} r={r} v={v}"
                );
            }
        }
    }
}

fn spec_combo(spec: &zetalab::SummandSpec) -> ZetaCombination {
    zetalab::decompose::decompose_summand(spec).unwrap()
}

/// At integer `z`, `Σ_k M(z+k)^r` is the full series minus its first `z` terms,
/// and must match the integral with the extra `(Πx)^z` weight.
#[test]
fn generating_function_at_integer_z() {
    for n in 0..=1u64 {
        let p = legendre_coeffs(n);
        let spec = build_summand(&p, 2, 0).unwrap();
        let full = eval_combination(&spec_combo(&spec), 30)
            .unwrap()
            .value
            .to_rational();
        for z in 1..=2u64 {
            let shifted = &full - spec.series_partial_sum(z);
            let shifted = num_traits::ToPrimitive::to_f64(&shifted).unwrap();
            let mc = mc_integral(&p, 2, 0, z as f64, 400_000, 11).unwrap();
            assert!(
                (mc.mean - shifted).abs() <= 4.0 * mc.stderr,
                "n={n} z={z}: mc {} ± {}, exact {shifted}",
                mc.mean,
                mc.stderr
            );
        }
    }
}

#[test]
fn p0_partial_sum_known_value() {
    // -(1 + 1/8 + 1/27) · 2
    let spec = build_summand(&legendre_coeffs(0), 2, 1).unwrap();
    assert_eq!(spec.series_partial_sum(3), rat("-251/108"));
    let k = spec.monotone_from().max(3);
    if k > 3 {
        assert!(spec.tail_bound(3).is_err());
    }
    let tail = spec.tail_bound(k).unwrap();
    let z3 = zeta_value(3, 30).unwrap();
    let two = BigRational::from_integer(BigInt::from(2));
    let rest = (&two * z3.value.to_rational() + spec.series_partial_sum(k)).abs();
    assert!(rest <= tail && !tail.is_zero());
}

/// Needs about 2·10^8 terms, which only the machine-integer path makes feasible.
#[test]
fn zeta2_by_direct_summation() {
    let target = BigRational::new(1.into(), pow10(8));
    let got = zetalab::direct_sum_value(&legendre_coeffs(0), 2, 0, &target).unwrap();
    assert!(got.error_bound.to_rational() <= target);
    let z2 = zeta_value(2, 30).unwrap().value.to_rational();
    assert!((got.value.to_rational() - z2).abs() <= target);
}
