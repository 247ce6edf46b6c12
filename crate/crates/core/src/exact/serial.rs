//! Text forms: rationals as `"p/q"` in lowest terms (`"p"` when `q = 1`),
//! polynomials as JSON arrays of such strings, lowest degree first.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{Poly, QPoly, RationalFunction};
use crate::error::{Error, Result};

pub fn rational_to_string(q: &BigRational) -> String {
    // Ratio's Display already prints "p" when the denominator is one
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn poly_to_json<T: ToString + Clone + num_traits::Num>(p: &Poly<T>) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn qpoly_from_json(v: &Value) -> Result<QPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be a JSON array".into()))?;
    let coeffs = arr
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))
                .and_then(parse_rational)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::new(coeffs))
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({
        "numerator": poly_to_json(f.numerator()),
        "denominator": poly_to_json(f.denominator()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_lowest_terms() {
        let q = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(rational_to_string(&q), "-3/2");
        assert_eq!(
            rational_to_string(&BigRational::from_integer(7.into())),
            "7"
        );
        assert_eq!(parse_rational("-3/2").unwrap(), q);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn polynomial_json() {
        let p = QPoly::new(vec![
            BigRational::from_integer(1.into()),
            BigRational::new(1.into(), 3.into()),
        ]);
        let v = poly_to_json(&p);
        assert_eq!(v.to_string(), r#"["1","1/3"]"#);
        assert_eq!(qpoly_from_json(&v).unwrap(), p);
    }

    proptest! {
        #[test]
        fn rational_text_roundtrip(p in any::<i64>(), q in 1i64..i64::MAX) {
            let r = BigRational::new(p.into(), q.into());
            prop_assert_eq!(parse_rational(&rational_to_string(&r)).unwrap(), r);
        }
    }
}
