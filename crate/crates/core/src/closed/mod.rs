//! Closed-form areal Mahler measures.

mod exact;
mod higher;
mod three_term;

pub use exact::{
    mm_higher_coords, mm_higher_coords_printed, mm_linear, mm_max_coords, mm_monomial_sum,
};
pub use higher::{higher_mm_x_plus_1, mm_higher_moebius, zeta_mm_x_plus_1, ZetaForm};
pub use three_term::{
    c_sqrt2, classical_moebius, classical_smyth, classical_sqrt2, mm_moebius_areal,
    mm_smyth_areal, mm_sqrt2_areal,
};

use num_complex::Complex64;
use thiserror::Error;

use crate::special::SpecialError;

/// Largest imaginary part tolerated when a real value is assembled in complex arithmetic.
pub const IMAGINARY_RESIDUAL_LIMIT: f64 = 1e-9;

/// One labeled summand of a closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub label: String,
    pub value: Complex64,
}

/// A closed-form value with its term-by-term breakdown.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormResult {
    pub value: f64,
    pub terms: Vec<Term>,
    pub theorem: String,
    /// Imaginary part of the assembled sum; zero for formulas built in real arithmetic.
    pub imaginary_residual: f64,
}

impl ClosedFormResult {
    fn from_terms(theorem: &str, terms: Vec<Term>) -> Self {
        let total: Complex64 = terms.iter().map(|t| t.value).sum();
        Self {
            value: total.re,
            terms,
            theorem: theorem.to_string(),
            imaginary_residual: total.im,
        }
    }

    pub fn term(&self, label: &str) -> Option<Complex64> {
        self.terms.iter().find(|t| t.label == label).map(|t| t.value)
    }
}

fn real_term(label: &str, v: f64) -> Term {
    Term {
        label: label.to_string(),
        value: Complex64::new(v, 0.0),
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("imaginary residual {residual:e} exceeds {limit:e}")]
    ImaginaryResidual { residual: f64, limit: f64 },
    #[error(transparent)]
    Special(#[from] SpecialError),
}
