#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::NumericError;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_683_016,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const MAX_PIECES: usize = 200_000;

/// Settings for adaptive Gauss–Kronrod quadrature.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSettings {
    tolerance: f64,
    max_depth: u32,
    splits: Vec<f64>,
}

impl QuadratureSettings {
    pub fn new(tolerance: f64, max_depth: u32, splits: Vec<f64>) -> Result<Self, NumericError> {
        if !(tolerance > 0.0) || !tolerance.is_finite() {
            return Err(NumericError::InvalidArgument(format!(
                "quadrature tolerance must be positive, got {tolerance}"
            )));
        }
        Ok(Self {
            tolerance,
            max_depth,
            splits,
        })
    }

    pub fn with_tolerance(tolerance: f64) -> Result<Self, NumericError> {
        Self::new(tolerance, Self::default().max_depth, Vec::new())
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    /// Points where the integrand is known to be non-smooth.
    pub fn splits(&self) -> &[f64] {
        &self.splits
    }

    pub fn with_splits(mut self, splits: Vec<f64>) -> Self {
        self.splits = splits;
        self
    }
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            tolerance: 1e-8,
            max_depth: 60,
            splits: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[10] * fc;
    let mut g = 0.0;
    for i in 0..10 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        k += WGK[i] * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive 21-point Gauss–Kronrod quadrature of `f` over `[a, b]`,
/// with forced breakpoints at the settings' splits inside the interval.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    settings: &QuadratureSettings,
) -> Result<QuadratureResult, NumericError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(NumericError::InvalidArgument("integration limits must be finite".into()));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let mut cuts: Vec<f64> = settings
        .splits
        .iter()
        .copied()
        .filter(|&x| x > lo && x < hi)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = vec![lo];
    edges.extend(cuts);
    edges.push(hi);

    let tol = settings.tolerance;
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    for w in edges.windows(2) {
        let (value, error) = gk21(&mut f, w[0], w[1]);
        evaluations += 21;
        heap.push(Piece {
            a: w[0],
            b: w[1],
            value,
            error,
            depth: 0,
        });
    }
    let mut stuck = Vec::new();
    let mut stuck_err = 0.0;
    let mut total_err: f64 = heap.iter().map(|p: &Piece| p.error).sum();
    loop {
        if total_err <= tol {
            // running sums drift; confirm before stopping
            total_err = heap.iter().chain(stuck.iter()).map(|p: &Piece| p.error).sum();
            if total_err <= tol {
                break;
            }
        }
        let Some(worst) = heap.pop() else {
            let value: f64 = stuck.iter().map(|p| p.value).sum();
            if !value.is_finite() {
                return Err(NumericError::NonConvergence(
                    "integrand is not finite on the interval".into(),
                ));
            }
            return Err(NumericError::NonConvergence(format!(
                "quadrature error estimate {total_err:e} above tolerance {tol:e} at maximum depth"
            )));
        };
        if heap.len() + stuck.len() > MAX_PIECES {
            return Err(NumericError::NonConvergence(format!(
                "quadrature used {MAX_PIECES} subintervals, error estimate {total_err:e} above {tol:e}"
            )));
        }
        if worst.depth >= settings.max_depth || !worst.error.is_finite() {
            stuck_err += worst.error;
            stuck.push(worst);
            if !(stuck_err <= tol) {
                return Err(NumericError::NonConvergence(format!(
                    "quadrature error {stuck_err:e} at maximum depth exceeds tolerance {tol:e}"
                )));
            }
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        total_err -= worst.error;
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gk21(&mut f, a, b);
            evaluations += 21;
            total_err += error;
            heap.push(Piece {
                a,
                b,
                value,
                error,
                depth: worst.depth + 1,
            });
        }
    }
    // sum small contributions first
    let mut parts: Vec<(f64, f64)> = heap
        .into_iter()
        .chain(stuck)
        .map(|p| (p.value, p.error))
        .collect();
    parts.sort_by(|x, y| x.0.abs().total_cmp(&y.0.abs()));
    let value: f64 = parts.iter().map(|p| p.0).sum();
    let error: f64 = parts.iter().map(|p| p.1).sum();
    Ok(QuadratureResult {
        value: sign * value,
        error,
        evaluations,
    })
}
