//! Closed forms and numerical estimators for the areal Mahler measure
//! `m_D(P) = (1/π^n) ∫_{D^n} log|P| dA`, the average of `log|P|` over the
//! product of unit disks.

pub mod closed;
pub mod expr;
pub mod numeric;
pub mod special;

pub use closed::{ClosedError, ClosedFormResult, Term};
pub use expr::{parse, EvaluationPoint, ExprError, ExpressionAST, Value};
pub use numeric::{MCEstimate, NumericError, QuadratureSettings};
pub use special::{ExactRational, SeriesControl, SpecialError};
