//! Collapse of `Σ_{k>=0} G(k)` into an exact combination `Σ q_j ζ(j) + q_0`,
//! plus the cleared-denominator reports and the rationality-criterion scan.
//!
//! For each partial-fraction term `β/(s+m)^j` with `j >= 2`,
//! `Σ_k 1/(k+m)^j = ζ(j) - H_{m-1}^{(j)}`. The `j = 1` terms only converge
//! together: with `Σ_m β_{m,1} = 0` they telescope to `-Σ_m β_{m,1} H_{m-1}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::serial::{parse_rational, rational_to_string};
use crate::exact::{
    generalized_harmonic, lcm_upto, legendre_coeffs, partial_fractions, IntPolynomial,
};
use crate::moment::{build_summand, SummandSpec};
use crate::numeric::{
    eval_combination_relative, exp_integer, Decimal, HighPrecisionValue, Rounding,
};

/// `Σ_j q_j ζ(j) + q_0` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaCombination {
    /// Nonzero coefficients only, keyed by `j >= 2`.
    pub zeta_coeffs: BTreeMap<u32, BigRational>,
    pub constant: BigRational,
}

impl ZetaCombination {
    pub fn new(zeta_coeffs: BTreeMap<u32, BigRational>, constant: BigRational) -> Self {
        let zeta_coeffs = zeta_coeffs
            .into_iter()
            .filter(|(_, q)| !q.is_zero())
            .collect();
        ZetaCombination {
            zeta_coeffs,
            constant,
        }
    }

    pub fn coeff(&self, j: u32) -> BigRational {
        self.zeta_coeffs
            .get(&j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn max_index(&self) -> Option<u32> {
        self.zeta_coeffs.keys().next_back().copied()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        Self::new(
            self.zeta_coeffs.iter().map(|(j, q)| (*j, q * c)).collect(),
            &self.constant * c,
        )
    }

    /// Least common denominator of all coefficients and the constant.
    pub fn common_denominator(&self) -> BigInt {
        self.zeta_coeffs
            .values()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    pub fn to_json(&self) -> Value {
        let zeta: Map<String, Value> = self
            .zeta_coeffs
            .iter()
            .map(|(j, q)| (j.to_string(), Value::String(rational_to_string(q))))
            .collect();
        json!({ "zeta": zeta, "constant": rational_to_string(&self.constant) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let zeta = v
            .get("zeta")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing \"zeta\" object".into()))?;
        let mut coeffs = BTreeMap::new();
        for (k, q) in zeta {
            let j: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad zeta index {k:?}")))?;
            let q = q
                .as_str()
                .ok_or_else(|| Error::Parse("zeta coefficient must be a string".into()))?;
            coeffs.insert(j, parse_rational(q)?);
        }
        let constant = v
            .get("constant")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing \"constant\"".into()))?;
        Ok(Self::new(coeffs, parse_rational(constant)?))
    }
}

/// The exact combination for `(-1)^v Σ_k G(k)` from an already built summand.
pub fn decompose_summand(spec: &SummandSpec) -> Result<ZetaCombination> {
    let pf = partial_fractions(&spec.summand)?;
    let residue_sum = pf.simple_residue_sum();
    if !residue_sum.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "simple-pole residues sum to {residue_sum}, expected 0"
        )));
    }
    let mut coeffs: BTreeMap<u32, BigRational> = BTreeMap::new();
    let mut constant = BigRational::zero();
    for t in &pf.terms {
        let shift = generalized_harmonic(t.pole - 1, t.order);
        if t.order >= 2 {
            *coeffs.entry(t.order).or_insert_with(BigRational::zero) += &t.coeff;
        }
        constant -= &t.coeff * shift;
    }
    let combo = ZetaCombination::new(coeffs, constant);
    Ok(if spec.v % 2 == 1 {
        combo.scaled(&-BigRational::one())
    } else {
        combo
    })
}

/// `c_v = ∫...∫ (-log Πx)^v / (1 - Πx) Π R(x_i) dx` as an exact ζ-combination.
pub fn decompose(poly: &IntPolynomial, r: u32, v: u32) -> Result<ZetaCombination> {
    decompose_summand(&build_summand(poly, r, v)?)
}

/// Cleared-denominator integers for one `(R, r, v)`.
///
/// `d` clears the ζ-basis combination:
/// `c = (a_zeta4 ζ(4) + b ζ(5) + g) / d` in the `(r, v) = (3, 2)` shape.
/// The π⁴ coefficient is `a_zeta4 / 90` over the same `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Legendre index, or the polynomial degree for custom coefficients.
    pub n: u64,
    pub r: u32,
    pub v: u32,
    pub coeffs: IntPolynomial,
    pub combo: ZetaCombination,
    /// `(a_zeta4, b, g)`, only for `(r, v) = (3, 2)`.
    pub abg: Option<(BigInt, BigInt, BigInt)>,
    pub d: BigInt,
    pub divides_lcm_n: bool,
    pub divides_lcm_n1: bool,
    pub structure_mismatch: bool,
}

impl DecompositionReport {
    pub fn from_combination(
        n: u64,
        coeffs: IntPolynomial,
        r: u32,
        v: u32,
        combo: ZetaCombination,
    ) -> Self {
        let d = combo.common_denominator();
        let clear = |q: &BigRational| (q * BigRational::from_integer(d.clone())).to_integer();
        let (abg, structure_mismatch) = if (r, v) == (3, 2) {
            let mismatch = combo.zeta_coeffs.keys().any(|&j| j != 4 && j != 5);
            let abg = (
                clear(&combo.coeff(4)),
                clear(&combo.coeff(5)),
                clear(&combo.constant),
            );
            (Some(abg), mismatch)
        } else {
            (None, false)
        };
        let e = r + v;
        let divides = |l: BigInt| l.pow(e).is_multiple_of(&d);
        DecompositionReport {
            n,
            r,
            v,
            divides_lcm_n: divides(lcm_upto(n)),
            divides_lcm_n1: divides(lcm_upto(n + 1)),
            coeffs,
            combo,
            abg,
            d,
            structure_mismatch,
        }
    }

    /// Exact π⁴ coefficient over `d`.
    pub fn a_pi4(&self) -> Option<BigRational> {
        self.abg
            .as_ref()
            .map(|(a, _, _)| BigRational::new(a.clone(), BigInt::from(90)))
    }

    pub fn to_json(&self) -> Value {
        let combo = self.combo.to_json();
        let int_or_null = |x: Option<&BigInt>| match x {
            Some(v) => Value::String(v.to_string()),
            None => Value::Null,
        };
        json!({
            "n": self.n,
            "r": self.r,
            "v": self.v,
            "coeffs": crate::exact::serial::poly_to_json(&self.coeffs),
            "zeta": combo["zeta"],
            "constant": combo["constant"],
            "A": match self.a_pi4() {
                Some(q) => Value::String(rational_to_string(&q)),
                None => Value::Null,
            },
            "A_zeta4": int_or_null(self.abg.as_ref().map(|t| &t.0)),
            "B": int_or_null(self.abg.as_ref().map(|t| &t.1)),
            "G": int_or_null(self.abg.as_ref().map(|t| &t.2)),
            "D": self.d.to_string(),
            "div_lcm_n": self.divides_lcm_n,
            "div_lcm_n1": self.divides_lcm_n1,
            "structure_mismatch": self.structure_mismatch,
        })
    }
}

/// Report for the shifted Legendre polynomial `P_n`.
pub fn apery_report(n: u64, r: u32, v: u32) -> Result<DecompositionReport> {
    let p = legendre_coeffs(n);
    let combo = decompose(&p, r, v)?;
    Ok(DecompositionReport::from_combination(n, p, r, v, combo))
}

/// One row of the rationality-criterion scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionRecord {
    pub n: u64,
    pub r: u32,
    pub v: u32,
    /// `|c_v(n)|` with a certified absolute error.
    pub abs_c: HighPrecisionValue,
    /// `lcm(1..n)^(r+v)`
    pub lcm_pow: BigInt,
    pub lcm_scaled: Decimal,
    pub exp_scaled: Decimal,
    /// `|c_v(n) / c_v(n-1)|`, absent for the first row.
    pub ratio_to_prev: Option<Decimal>,
}

/// Scans `n = 0..=n_max`, evaluating each `|c_v(n)|` from its exact
/// combination to `precision` significant digits.
pub fn rationality_criterion<F>(
    family: F,
    r: u32,
    v: u32,
    n_max: u64,
    precision: u32,
) -> Result<Vec<CriterionRecord>>
where
    F: Fn(u64) -> IntPolynomial + Sync,
{
    criterion_with(
        |n| decompose(&family(n), r, v),
        r,
        v,
        n_max,
        precision,
        |_| {},
    )
}

/// Like [`rationality_criterion`] but with a caller-supplied decomposition
/// source (e.g. a cache) and a per-row completion hook.
pub fn criterion_with<D, P>(
    decompose_n: D,
    r: u32,
    v: u32,
    n_max: u64,
    precision: u32,
    progress: P,
) -> Result<Vec<CriterionRecord>>
where
    D: Fn(u64) -> Result<ZetaCombination> + Sync,
    P: Fn(u64) + Sync,
{
    if precision < 10 {
        return Err(Error::InvalidParameter(format!(
            "precision must be >= 10 digits, got {precision}"
        )));
    }
    let rows: Vec<(u64, HighPrecisionValue)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let combo = decompose_n(n)?;
            let value = eval_combination_relative(&combo, precision)?;
            progress(n);
            Ok((n, value.abs()))
        })
        .collect::<Result<_>>()?;

    let e = r + v;
    let mut out: Vec<CriterionRecord> = Vec::with_capacity(rows.len());
    for (n, abs_c) in rows {
        let c = abs_c.value.to_rational();
        let lcm_pow = lcm_upto(n).pow(e);
        let sig = |q: &BigRational| significant_decimal(q, precision);
        let lcm_scaled = sig(&(&c * BigRational::from_integer(lcm_pow.clone())));
        let exp_scaled = sig(&(&c * exp_integer(e as u64 * n, precision + 5)));
        let ratio_to_prev = out.last().and_then(|prev| {
            let p = prev.abs_c.value.to_rational();
            (!p.is_zero()).then(|| sig(&(&c / p)))
        });
        out.push(CriterionRecord {
            n,
            r,
            v,
            abs_c,
            lcm_pow,
            lcm_scaled,
            exp_scaled,
            ratio_to_prev,
        });
    }
    Ok(out)
}

/// Rounds `q` to a decimal carrying about `digits` significant digits.
pub(crate) fn significant_decimal(q: &BigRational, digits: u32) -> Decimal {
    // log10_upper can overshoot by two
    let mag = crate::numeric::log10_upper(q);
    let scale = (digits as i64 - mag + 2).max(0) as u32;
    Decimal::from_rational(q, scale, Rounding::Nearest)
}
