//! Rational expressions over complex coefficients: parsing, printing and
//! evaluation on the closed polydisk.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := primary ('^' exponent)*
//! exponent := ['-'] INT | '(' ['-'] INT ')'
//! primary  := NUMBER | VAR | 'sqrt' '(' INT ')' | '(' expr ')'
//! VAR      := [a-z][0-9]*
//! ```

mod ast;
mod eval;
mod parser;

pub use ast::{ExpressionAST, Node, NodeKind};
pub(crate) use eval::eval_node;
pub use eval::{log_abs_value, EvaluationPoint, Value, DISK_SLACK, UNDERFLOW_FLOOR};
pub use parser::parse;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("constant zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
    #[error("non-integer exponent at byte {offset}")]
    NonIntegerExponent { offset: usize },
    #[error("zero exponent at byte {offset}")]
    ZeroExponent { offset: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coordinate {index} has modulus {modulus}, outside the closed unit disk")]
    OutsideDisk { index: usize, modulus: f64 },
}

impl std::str::FromStr for ExpressionAST {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
