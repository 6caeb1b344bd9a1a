use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::NumericError;
use crate::expr::{eval_node, log_abs_value, ExpressionAST, Value};

/// Samples per independent random substream.
pub const CHUNK_SIZE: u64 = 1 << 16;

/// Largest tolerated fraction of discarded samples.
pub const MAX_DISCARD_FRACTION: f64 = 1e-6;

/// Result of a Monte Carlo average over the polydisk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    /// Sample standard deviation over √count.
    pub stderr: f64,
    /// Samples that entered the average.
    pub count: u64,
    pub seed: u64,
    /// Samples dropped because the integrand was infinite there.
    pub discarded: u64,
}

impl MCEstimate {
    /// (mean − target)/stderr; infinite if the standard error is zero and the mean is off.
    pub fn z_score(&self, target: f64) -> f64 {
        let d = self.mean - target;
        if self.stderr > 0.0 {
            d / self.stderr
        } else if d == 0.0 {
            0.0
        } else {
            d.signum() * f64::INFINITY
        }
    }
}

/// A uniform point of the closed unit disk: radius √u, angle 2πv.
pub fn sample_disk<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    Complex64::from_polar(u.sqrt(), 2.0 * PI * v)
}

/// The random stream behind chunk `chunk` of a run seeded with `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

#[derive(Clone, Copy, Default)]
struct Welford {
    n: u64,
    mean: f64,
    m2: f64,
    discarded: u64,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Welford) -> Welford {
        if self.n == 0 {
            return Welford {
                discarded: self.discarded + other.discarded,
                ..other
            };
        }
        if other.n == 0 {
            return Welford {
                discarded: self.discarded + other.discarded,
                ..self
            };
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let mean = self.mean + d * other.n as f64 / n as f64;
        let m2 = self.m2 + other.m2 + d * d * (self.n as f64) * (other.n as f64) / n as f64;
        Welford {
            n,
            mean,
            m2,
            discarded: self.discarded + other.discarded,
        }
    }
}

/// Average `f` over `samples` uniform points of the `dim`-dimensional polydisk.
///
/// Chunk `c` of `CHUNK_SIZE` samples draws from substream `c` of the seed, and
/// chunk statistics are merged in index order, so the result does not depend
/// on the thread count.
pub fn mc_polydisk<F>(dim: usize, samples: u64, seed: u64, f: F) -> Result<MCEstimate, NumericError>
where
    F: Fn(&[Complex64]) -> f64 + Sync,
{
    if samples == 0 {
        return Err(NumericError::InvalidArgument("samples must be at least 1".into()));
    }
    let chunks = samples.div_ceil(CHUNK_SIZE);
    let parts: Vec<Welford> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let n = CHUNK_SIZE.min(samples - c * CHUNK_SIZE);
            let mut point = vec![Complex64::new(0.0, 0.0); dim];
            let mut w = Welford::default();
            for _ in 0..n {
                for x in point.iter_mut() {
                    *x = sample_disk(&mut rng);
                }
                let v = f(&point);
                if v.is_finite() {
                    w.push(v);
                } else {
                    w.discarded += 1;
                }
            }
            w
        })
        .collect();
    let total = parts.into_iter().fold(Welford::default(), Welford::merge);
    if total.n == 0 {
        return Err(NumericError::Degenerate(format!(
            "all {samples} samples were discarded"
        )));
    }
    if total.discarded as f64 > MAX_DISCARD_FRACTION * samples as f64 {
        return Err(NumericError::Degenerate(format!(
            "{} of {samples} samples hit a zero or pole",
            total.discarded
        )));
    }
    let var = if total.n > 1 {
        total.m2 / (total.n - 1) as f64
    } else {
        0.0
    };
    Ok(MCEstimate {
        mean: total.mean,
        stderr: (var / total.n as f64).sqrt(),
        count: total.n,
        seed,
        discarded: total.discarded,
    })
}

/// Expressions re-indexed onto the sorted union of their variables.
struct Joint<'a> {
    exprs: &'a [ExpressionAST],
    maps: Vec<Vec<usize>>,
    dim: usize,
}

impl<'a> Joint<'a> {
    fn new(exprs: &'a [ExpressionAST]) -> Result<Self, NumericError> {
        if exprs.is_empty() {
            return Err(NumericError::InvalidArgument("need at least one expression".into()));
        }
        let mut names: Vec<&str> = exprs
            .iter()
            .flat_map(|e| e.variables().iter().map(String::as_str))
            .collect();
        names.sort_unstable();
        names.dedup();
        let maps = exprs
            .iter()
            .map(|e| {
                e.variables()
                    .iter()
                    .map(|v| names.binary_search(&v.as_str()).expect("name collected above"))
                    .collect()
            })
            .collect();
        Ok(Self {
            exprs,
            maps,
            dim: names.len(),
        })
    }

    fn values<'p>(&'p self, point: &'p [Complex64]) -> impl Iterator<Item = Value> + 'p {
        self.exprs.iter().zip(&self.maps).map(move |(e, map)| {
            let local: Vec<Complex64> = map.iter().map(|&i| point[i]).collect();
            eval_node(e.root(), &local)
        })
    }
}

/// Monte Carlo estimate of m_D(P).
pub fn mc_areal_mm(expr: &ExpressionAST, samples: u64, seed: u64) -> Result<MCEstimate, NumericError> {
    mc_polydisk(expr.variable_count(), samples, seed, |x| expr.log_abs_slice(x))
}

/// Monte Carlo estimate of the average of Π log^{h_i}|P_i|.
pub fn mc_higher_mm(
    exprs: &[ExpressionAST],
    powers: &[u32],
    samples: u64,
    seed: u64,
) -> Result<MCEstimate, NumericError> {
    if exprs.len() != powers.len() {
        return Err(NumericError::InvalidArgument(format!(
            "{} expressions but {} powers",
            exprs.len(),
            powers.len()
        )));
    }
    if powers.contains(&0) {
        return Err(NumericError::InvalidArgument("powers must be positive".into()));
    }
    let joint = Joint::new(exprs)?;
    mc_polydisk(joint.dim, samples, seed, |x| {
        joint
            .values(x)
            .zip(powers)
            .map(|(v, &h)| log_abs_value(v).powi(h as i32))
            .product()
    })
}

/// Monte Carlo estimate of the average of max_i log|P_i|.
pub fn mc_max_mm(exprs: &[ExpressionAST], samples: u64, seed: u64) -> Result<MCEstimate, NumericError> {
    let joint = Joint::new(exprs)?;
    mc_polydisk(joint.dim, samples, seed, |x| {
        let mut best = f64::NEG_INFINITY;
        for v in joint.values(x) {
            let l = log_abs_value(v);
            if l.is_nan() {
                return f64::NAN;
            }
            best = best.max(l);
        }
        best
    })
}

/// Monte Carlo estimate of Z_D(s, P), the average of |P|^s.
pub fn mc_zeta_mm(expr: &ExpressionAST, s: f64, samples: u64, seed: u64) -> Result<MCEstimate, NumericError> {
    if !s.is_finite() {
        return Err(NumericError::InvalidArgument(format!("s must be finite, got {s}")));
    }
    mc_polydisk(expr.variable_count(), samples, seed, |x| {
        if s == 0.0 {
            return 1.0;
        }
        (s * expr.log_abs_slice(x)).exp()
    })
}
