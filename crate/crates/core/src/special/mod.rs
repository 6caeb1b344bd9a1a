//! Special functions: zeta and Dirichlet L-values, polylogarithms, the
//! Bloch–Wigner dilogarithm, generalized hypergeometric series, Gamma, and
//! exact Bernoulli/Euler numbers.

mod gamma;
mod hyper;
mod multiple;
mod polylog;
mod rational;
mod zeta;

pub use gamma::gamma_real;
pub use hyper::hyper_pfq;
pub use multiple::{lemma_length1, multiple_polylog_1s, nakamura_reduce};
pub use polylog::{bloch_wigner, polylog};
pub use rational::{
    bernoulli, binomial, chu_vandermonde_sum, euler_number, xj_logk_integral, ExactRational,
    EXACT_CACHE_INDEX,
};
pub use zeta::{catalan, dirichlet_l, hurwitz_zeta, zeta_int, zeta_minus_one, Character};

use thiserror::Error;

/// Tolerance and term budget shared by every infinite-series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesControl {
    tolerance: f64,
    max_terms: u64,
}

impl SeriesControl {
    pub fn new(tolerance: f64, max_terms: u64) -> Result<Self, SpecialError> {
        if !(tolerance > 0.0) || !tolerance.is_finite() {
            return Err(SpecialError::Domain(format!(
                "series tolerance must be positive, got {tolerance}"
            )));
        }
        if max_terms == 0 {
            return Err(SpecialError::Domain("max_terms must be at least 1".into()));
        }
        Ok(Self {
            tolerance,
            max_terms,
        })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_terms: 10_000_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("series did not reach tolerance within {terms} terms (error estimate {estimate:e})")]
    BudgetExhausted { terms: u64, estimate: f64 },
}
