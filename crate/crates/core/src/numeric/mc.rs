//! Plain uniform Monte Carlo over the unit cube `[0,1)^r`.
//!
//! Samples are split into fixed chunks of [`MC_CHUNK`] draws. Chunk `c` uses
//! ChaCha8 seeded with `seed` on stream `c`, and chunk statistics are merged
//! in chunk order, so the estimate is bit-identical for any thread count.
//! Convergence is the usual `1/√N`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

pub const MC_CHUNK: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    /// sample standard deviation / √samples
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    /// draws that hit a singular point (`Πx = 0`) and were redrawn
    pub rejected: u64,
}

impl MCEstimate {
    pub fn to_json(&self) -> Value {
        json!({
            "mean": format!("{:e}", self.mean),
            "stderr": format!("{:e}", self.stderr),
            "samples": self.samples,
            "seed": self.seed,
            "rejected": self.rejected,
        })
    }
}

#[derive(Clone, Copy, Default)]
struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
    rejected: u64,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Welford) -> Welford {
        if self.count == 0 {
            return Welford {
                rejected: self.rejected + other.rejected,
                ..other
            };
        }
        let n = (self.count + other.count) as f64;
        let delta = other.mean - self.mean;
        Welford {
            count: self.count + other.count,
            mean: self.mean + delta * other.count as f64 / n,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * other.count as f64 / n,
            rejected: self.rejected + other.rejected,
        }
    }
}

/// Estimates
/// `∫_{[0,1]^r} (Πx)^z (-log Πx)^v / (1 - Πx) Π R(x_i) dx`.
pub fn mc_integral(
    poly: &IntPolynomial,
    r: u32,
    v: u32,
    z: f64,
    samples: u64,
    seed: u64,
) -> Result<MCEstimate> {
    if r < 2 {
        return Err(Error::SeriesDiverges { r });
    }
    if samples < 10_000 {
        return Err(Error::InvalidParameter(format!(
            "samples must be >= 10000, got {samples}"
        )));
    }
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::InvalidParameter(format!("z must be >= 0, got {z}")));
    }
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs: Vec<f64> = poly
        .coeffs()
        .iter()
        .map(|c| num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN))
        .collect();
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);

    let chunks = samples.div_ceil(MC_CHUNK);
    let stats: Vec<Welford> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let n = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut w = Welford::default();
            let mut xs = vec![0.0f64; r as usize];
            while w.count < n {
                let mut prod = 1.0;
                let mut weight = 1.0;
                for x in xs.iter_mut() {
                    *x = rng.gen::<f64>();
                    prod *= *x;
                    weight *= eval(*x);
                }
                if prod <= 0.0 || prod >= 1.0 {
                    w.rejected += 1;
                    continue;
                }
                let log = -prod.ln();
                let mut f = weight / (1.0 - prod);
                if v > 0 {
                    f *= log.powi(v as i32);
                }
                if z != 0.0 {
                    f *= prod.powf(z);
                }
                if !f.is_finite() {
                    w.rejected += 1;
                    continue;
                }
                w.push(f);
            }
            w
        })
        .collect();
    let total = stats.into_iter().fold(Welford::default(), Welford::merge);
    let var = if total.count > 1 {
        total.m2 / (total.count - 1) as f64
    } else {
        0.0
    };
    Ok(MCEstimate {
        mean: total.mean,
        stderr: (var / total.count as f64).sqrt(),
        samples,
        seed,
        rejected: total.rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::legendre_coeffs;

    #[test]
    fn validates_parameters() {
        let p = legendre_coeffs(0);
        assert!(mc_integral(&p, 1, 0, 0.0, 20_000, 1).is_err());
        assert!(mc_integral(&p, 2, 0, 0.0, 100, 1).is_err());
        assert!(mc_integral(&p, 2, 0, -1.0, 20_000, 1).is_err());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let p = legendre_coeffs(1);
        let a = mc_integral(&p, 2, 1, 0.0, 200_000, 7).unwrap();
        let b = mc_integral(&p, 2, 1, 0.0, 200_000, 7).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.stderr.to_bits(), b.stderr.to_bits());
        let c = mc_integral(&p, 2, 1, 0.0, 200_000, 8).unwrap();
        assert_ne!(a.mean.to_bits(), c.mean.to_bits());
    }

    #[test]
    fn welford_merge_matches_single_pass() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 37) % 101) as f64 / 7.0).collect();
        let mut whole = Welford::default();
        xs.iter().for_each(|&x| whole.push(x));
        let mut a = Welford::default();
        let mut b = Welford::default();
        xs[..333].iter().for_each(|&x| a.push(x));
        xs[333..].iter().for_each(|&x| b.push(x));
        let merged = a.merge(b);
        assert!((merged.mean - whole.mean).abs() < 1e-12);
        assert!((merged.m2 - whole.m2).abs() < 1e-8 * whole.m2);
    }
}
