use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use zetalab::exact::{integrate_poly_01, partial_fractions, QPoly};
use zetalab::{decompose, legendre_coeffs, RationalFunction};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (
        prop::collection::vec(-6i64..=6, 1..4),
        prop::collection::vec(-3i64..=5, 0..4),
        1i64..=4,
    )
        .prop_map(|(num, roots, lead)| {
            let den = roots.iter().fold(QPoly::constant(q(lead)), |acc, &m| {
                &acc * &QPoly::linear(q(m))
            });
            RationalFunction::new(QPoly::from_ints(&num), den).unwrap()
        })
}

fn pole_terms() -> impl Strategy<Value = Vec<(u64, u32, i64)>> {
    prop::collection::vec((1u64..=12, 1u32..=6, -20i64..=20), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orthogonality(n in 0u64..=15, m in 0u64..=15) {
        let p = legendre_coeffs(n).to_rational();
        let r = legendre_coeffs(m).to_rational();
        let expect = if n == m {
            BigRational::new(1.into(), BigInt::from(2 * n + 1))
        } else {
            q(0)
        };
        prop_assert_eq!(integrate_poly_01(&(&p * &r)), expect);
    }

    #[test]
    fn endpoint_values(n in 0u64..=30) {
        let p = legendre_coeffs(n);
        prop_assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(1));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(sign));
    }

    #[test]
    fn partial_fractions_recombine(terms in pole_terms()) {
        let mut expect: BTreeMap<(u64, u32), i64> = BTreeMap::new();
        let mut f = RationalFunction::zero();
        for &(m, j, c) in &terms {
            *expect.entry((m, j)).or_default() += c;
            f = f.add(&RationalFunction::pole_term(q(c), m as i64, j));
        }
        let pf = partial_fractions(&f).unwrap();
        prop_assert_eq!(pf.recombine(), f);
        prop_assert!(pf.polynomial_part.is_zero());
        for ((m, j), c) in expect {
            prop_assert_eq!(pf.coeff(m, j), q(c));
        }
    }

    #[test]
    fn derivative_commutes_with_add(f in ratfunc(), g in ratfunc(), v in 0u32..=3) {
        prop_assert_eq!(f.add(&g).derivative(v), f.derivative(v).add(&g.derivative(v)));
    }

    #[test]
    fn repeated_first_derivative(f in ratfunc(), v in 0u32..=4) {
        let stepwise = (0..v).fold(f.clone(), |acc, _| acc.derivative(1));
        prop_assert_eq!(stepwise, f.derivative(v));
    }

    #[test]
    fn field_axioms(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&RationalFunction::one()), f.clone());
        prop_assert_eq!(f.pow(3), f.mul(&f).mul(&f));
    }

    #[test]
    fn scaling_covariance(n in 0u64..=3, r in 2u32..=3, v in 0u32..=2, c in -3i64..=3) {
        prop_assume!(c != 0);
        let p = legendre_coeffs(n);
        let scaled = p.scale(&BigInt::from(c));
        let lhs = decompose(&scaled, r, v).unwrap();
        prop_assert_eq!(lhs, decompose(&p, r, v).unwrap().scaled(&q(c.pow(r))));
    }
}

#[test]
fn highest_zeta_index_present() {
    for n in 0..=6u64 {
        for r in 2..=4u32 {
            for v in 0..=3u32 {
                let combo = decompose(&legendre_coeffs(n), r, v).unwrap();
                assert_eq!(combo.max_index(), Some(r + v), "n={n} r={r} v={v}");
            }
        }
    }
}
