//! Numerical estimators: Monte Carlo over polydisks, adaptive quadrature and
//! the semi-analytic polar integration used to cross-check closed forms.

mod mc;
mod quad;
mod semi;

pub use mc::{
    chunk_rng, mc_areal_mm, mc_higher_mm, mc_max_mm, mc_polydisk, mc_zeta_mm, sample_disk,
    MCEstimate, CHUNK_SIZE, MAX_DISCARD_FRACTION,
};
pub use quad::{integrate, QuadratureResult, QuadratureSettings};
pub use semi::semi_analytic_mm;

use std::f64::consts::PI;

use thiserror::Error;

use crate::special::{hyper_pfq, SeriesControl, SpecialError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported expression: {0}")]
    Unsupported(String),
    #[error("degenerate integrand: {0}")]
    Degenerate(String),
    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// `(1/2π) ∫ |ρ e^{iθ} + 1|^s dθ = ₂F₁(−s/2, −s/2; 1; ρ²)` for 0 ≤ ρ < 1.
pub fn radial_zeta_factor(s: f64, rho: f64) -> Result<f64, NumericError> {
    if !(0.0..1.0).contains(&rho) {
        return Err(NumericError::InvalidArgument(format!(
            "rho must lie in [0, 1), got {rho}"
        )));
    }
    if !s.is_finite() {
        return Err(NumericError::InvalidArgument(format!("s must be finite, got {s}")));
    }
    let a = -s / 2.0;
    Ok(hyper_pfq(&[a, a], &[1.0], rho * rho, &SeriesControl::default())?)
}

/// The hypergeometric constant of m_D(√2 + x + y) recovered from
/// `(π/2 · log(1+√2) − ∫₀¹ arcsin(v²)/√(1+v²) dv) / 2π`.
pub fn c_sqrt2_by_quadrature(settings: &QuadratureSettings) -> Result<f64, NumericError> {
    let i2 = integrate(
        |v: f64| (v * v).asin() / (1.0 + v * v).sqrt(),
        0.0,
        1.0,
        settings,
    )?;
    let log_term = PI / 2.0 * (1.0 + 2f64.sqrt()).ln();
    Ok((log_term - i2.value) / (2.0 * PI))
}

/// `−2 ∫₀^θ log|2 sin t| dt`, which equals D(e^{2iθ}).
pub fn clausen_integral(theta: f64, settings: &QuadratureSettings) -> Result<f64, NumericError> {
    let r = integrate(|t: f64| (2.0 * t.sin()).abs().ln(), 0.0, theta, settings)?;
    Ok(-2.0 * r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_factor_basics() {
        assert_eq!(radial_zeta_factor(1.3, 0.0).unwrap(), 1.0);
        assert!((radial_zeta_factor(2.0, 0.5).unwrap() - 1.25).abs() < 1e-15);
        assert!(radial_zeta_factor(1.0, 1.0).is_err());
    }
}
