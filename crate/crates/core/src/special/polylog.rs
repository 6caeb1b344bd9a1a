use std::sync::OnceLock;

use num_complex::Complex64;

use super::rational::bernoulli;
use super::zeta::zeta_int;
use super::{SeriesControl, SpecialError};

const UNIT_SLACK: f64 = 1e-12;
// the log-series converges like (|log z| / 2 pi)^k; past |z| = 1/2 that ratio stays below 0.52
const DIRECT_RADIUS: f64 = 0.5;
const NEG_ZETA_TERMS: usize = 120;

/// ζ(−m) = (−1)^m B_{m+1}/(m+1) for m = 0..NEG_ZETA_TERMS.
fn zeta_nonpositive() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=NEG_ZETA_TERMS)
            .map(|m| {
                let b = bernoulli(m + 1).to_f64() / (m + 1) as f64;
                if m % 2 == 1 {
                    -b
                } else {
                    b
                }
            })
            .collect()
    })
}

fn direct_series(n: u32, z: Complex64, ctl: &SeriesControl) -> Result<Complex64, SpecialError> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = z;
    let r = z.norm();
    for k in 1..=ctl.max_terms() {
        let term = zk / (k as f64).powi(n as i32);
        sum += term;
        // geometric bound on the remainder
        let target = (0.1 * ctl.tolerance()).min(0.1 * f64::EPSILON * sum.norm());
        if term.norm() * r / (1.0 - r) < target {
            return Ok(sum);
        }
        zk *= z;
    }
    Err(SpecialError::BudgetExhausted {
        terms: ctl.max_terms(),
        estimate: f64::NAN,
    })
}

fn log_series(n: u32, z: Complex64, ctl: &SeriesControl) -> Result<Complex64, SpecialError> {
    // Li_n(z) = sum_{k != n-1} zeta(n-k) mu^k / k!
    //         + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)),   mu = log z, |mu| < 2 pi
    let mu = z.ln();
    let neg = zeta_nonpositive();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0); // mu^k / k!
    let n = n as usize;
    for k in 0..n - 1 {
        sum += zeta_int((n - k) as u32, ctl)? * pow;
        pow = pow * mu / (k + 1) as f64;
    }
    let harmonic: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
    sum += pow * (Complex64::new(harmonic, 0.0) - (-mu).ln());
    pow = pow * mu / n as f64;
    let mut small = 0usize;
    for k in n..n + NEG_ZETA_TERMS {
        let term = neg[k - n] * pow;
        sum += term;
        pow = pow * mu / (k + 1) as f64;
        // odd-index zeta(-m) vanish, so look at pairs of small terms
        let target = (0.01 * ctl.tolerance()).min(0.1 * f64::EPSILON * sum.norm());
        if term.norm() < target && neg[k - n] != 0.0 {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        }
    }
    Ok(sum)
}

/// Polylogarithm Li_n(z) on the closed unit disk.
pub fn polylog(n: u32, z: Complex64, ctl: &SeriesControl) -> Result<Complex64, SpecialError> {
    if n == 0 {
        return Err(SpecialError::Domain("polylog order must be at least 1".into()));
    }
    let r = z.norm();
    if !(r <= 1.0 + UNIT_SLACK) {
        return Err(SpecialError::Domain(format!(
            "polylog argument must lie in the closed unit disk, |z| = {r}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    if n == 1 {
        if z == one {
            return Err(SpecialError::Domain("Li_1 has a pole at z = 1".into()));
        }
        return Ok(-(one - z).ln());
    }
    if z == one {
        return Ok(Complex64::new(zeta_int(n, ctl)?, 0.0));
    }
    if r == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if r <= DIRECT_RADIUS {
        direct_series(n, z, ctl)
    } else {
        log_series(n, z, ctl)
    }
}

/// Bloch–Wigner dilogarithm D(z) = Im Li₂(z) + log|z| arg(1 − z).
///
/// Defined on the whole Riemann sphere; D(0) = D(1) = 0 and D(1/z) = −D(z).
pub fn bloch_wigner(z: Complex64) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    if z.norm() == 0.0 || z == one || !z.is_finite() {
        return 0.0;
    }
    if z.norm() > 1.0 {
        return -bloch_wigner(one / z);
    }
    let li2 = polylog(2, z, &SeriesControl::default()).expect("|z| <= 1 and z != 1");
    li2.im + z.norm().ln() * (one - z).arg()
}
