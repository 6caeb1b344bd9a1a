use num_complex::Complex64;

use super::ast::{ExpressionAST, Node};
use super::ExprError;

/// Moduli below this are treated as exact zeros by [`ExpressionAST::log_abs`].
pub const UNDERFLOW_FLOOR: f64 = 1e-300;

/// Slack allowed on `|x| <= 1` for boundary points.
pub const DISK_SLACK: f64 = 1e-12;

/// Result of evaluating an expression: a finite complex number or a pole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Finite(Complex64),
    Pole,
}

impl Value {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            Value::Finite(z) => Some(z),
            Value::Pole => None,
        }
    }

    pub fn is_pole(self) -> bool {
        matches!(self, Value::Pole)
    }
}

/// A point of the closed polydisk, one coordinate per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationPoint(Vec<Complex64>);

impl EvaluationPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self, ExprError> {
        for (index, z) in coords.iter().enumerate() {
            let modulus = z.norm();
            if !(modulus <= 1.0 + DISK_SLACK) {
                return Err(ExprError::OutsideDisk { index, modulus });
            }
        }
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<EvaluationPoint> for Vec<Complex64> {
    fn from(p: EvaluationPoint) -> Self {
        p.0
    }
}

fn pow_int(z: Complex64, e: i32) -> Value {
    if e < 0 && z.norm() == 0.0 {
        return Value::Pole;
    }
    Value::Finite(z.powi(e))
}

pub(crate) fn eval_node(node: &Node, x: &[Complex64]) -> Value {
    match node {
        Node::Var(i) => Value::Finite(x[*i]),
        Node::Literal(v) => Value::Finite(Complex64::new(*v, 0.0)),
        Node::SqrtLiteral(k) => Value::Finite(Complex64::new((*k as f64).sqrt(), 0.0)),
        Node::Neg(c) => match eval_node(c, x) {
            Value::Finite(z) => Value::Finite(-z),
            Value::Pole => Value::Pole,
        },
        Node::Sum(cs) => {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in cs {
                match eval_node(c, x) {
                    Value::Finite(z) => acc += z,
                    Value::Pole => return Value::Pole,
                }
            }
            Value::Finite(acc)
        }
        Node::Product(cs) => {
            let mut acc = Complex64::new(1.0, 0.0);
            for c in cs {
                match eval_node(c, x) {
                    Value::Finite(z) => acc *= z,
                    Value::Pole => return Value::Pole,
                }
            }
            Value::Finite(acc)
        }
        Node::Quotient(n, d) => match (eval_node(n, x), eval_node(d, x)) {
            (Value::Pole, _) => Value::Pole,
            (Value::Finite(_), Value::Pole) => Value::Finite(Complex64::new(0.0, 0.0)),
            (Value::Finite(a), Value::Finite(b)) => {
                if b.norm() == 0.0 {
                    Value::Pole
                } else {
                    Value::Finite(a / b)
                }
            }
        },
        Node::Power(b, e) => match eval_node(b, x) {
            Value::Finite(z) => pow_int(z, *e),
            Value::Pole if *e > 0 => Value::Pole,
            Value::Pole => Value::Finite(Complex64::new(0.0, 0.0)),
        },
    }
}

impl ExpressionAST {
    /// Evaluate at a validated polydisk point.
    pub fn evaluate(&self, point: &EvaluationPoint) -> Result<Value, ExprError> {
        self.check_dimension(point.len())?;
        Ok(eval_node(&self.root, point.coords()))
    }

    /// `log |P(x)|`: `-inf` at zeros (modulus under [`UNDERFLOW_FLOOR`]), `+inf` at poles.
    pub fn log_abs(&self, point: &EvaluationPoint) -> Result<f64, ExprError> {
        self.check_dimension(point.len())?;
        Ok(self.log_abs_slice(point.coords()))
    }

    /// Evaluate at raw coordinates without the disk check.
    ///
    /// The slice must have one entry per variable.
    pub fn evaluate_slice(&self, coords: &[Complex64]) -> Value {
        debug_assert_eq!(coords.len(), self.vars.len());
        eval_node(&self.root, coords)
    }

    pub fn log_abs_slice(&self, coords: &[Complex64]) -> f64 {
        log_abs_value(self.evaluate_slice(coords))
    }

    fn check_dimension(&self, got: usize) -> Result<(), ExprError> {
        if got != self.vars.len() {
            return Err(ExprError::DimensionMismatch {
                expected: self.vars.len(),
                got,
            });
        }
        Ok(())
    }
}

pub fn log_abs_value(v: Value) -> f64 {
    match v {
        Value::Pole => f64::INFINITY,
        Value::Finite(z) => {
            let m = z.norm();
            if m < UNDERFLOW_FLOOR {
                f64::NEG_INFINITY
            } else {
                m.ln()
            }
        }
    }
}
