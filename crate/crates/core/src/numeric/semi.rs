use std::f64::consts::PI;

use num_complex::Complex64;

use super::quad::{integrate, QuadratureSettings};
use super::NumericError;
use crate::closed::mm_linear;
use crate::expr::{ExpressionAST, Value};

const LINEARITY_TOL: f64 = 1e-9;
const BOUNDARY_SCAN: usize = 4096;
const RADIAL_SCAN: usize = 96;

/// `y ↦ P(x, y)` written as `c (y + g(x))` with `c` constant.
struct LinearSplit<'a> {
    expr: &'a ExpressionAST,
    outer: usize,
    inner: usize,
    c: Complex64,
}

impl LinearSplit<'_> {
    fn eval(&self, x: Complex64, y: Complex64) -> Value {
        let mut p = [Complex64::new(0.0, 0.0); 2];
        p[self.outer] = x;
        p[self.inner] = y;
        self.expr.evaluate_slice(&p)
    }

    /// g(x) = P(x, 0)/c; `None` at a pole.
    fn g(&self, x: Complex64) -> Option<Complex64> {
        self.eval(x, Complex64::new(0.0, 0.0)).finite().map(|v| v / self.c)
    }

    /// |g(x)|² − 1, +inf at poles.
    fn level(&self, x: Complex64) -> f64 {
        self.g(x).map_or(f64::INFINITY, |v| v.norm_sqr() - 1.0)
    }
}

fn split_linear<'a>(expr: &'a ExpressionAST, inner_var: &str) -> Result<LinearSplit<'a>, NumericError> {
    if expr.variable_count() != 2 {
        return Err(NumericError::Unsupported(format!(
            "semi-analytic quadrature needs exactly two variables, found {}",
            expr.variable_count()
        )));
    }
    let inner = expr.variable_index(inner_var).ok_or_else(|| {
        NumericError::Unsupported(format!("'{inner_var}' is not a variable of the expression"))
    })?;
    let outer = 1 - inner;
    let mut split = LinearSplit {
        expr,
        outer,
        inner,
        c: Complex64::new(1.0, 0.0),
    };
    let probes = [
        Complex64::new(0.13, 0.07),
        Complex64::new(-0.41, 0.52),
        Complex64::new(0.66, -0.29),
        Complex64::new(-0.05, -0.83),
    ];
    let t = Complex64::new(0.37, 0.21);
    let mut c: Option<Complex64> = None;
    let nonlinear = || {
        NumericError::Unsupported(format!(
            "expression is not of the form c*{inner_var} + g(x) with constant c"
        ))
    };
    for &x in &probes {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let (Some(p0), Some(p1), Some(pt)) = (
            split.eval(x, zero).finite(),
            split.eval(x, one).finite(),
            split.eval(x, t).finite(),
        ) else {
            continue;
        };
        let slope = p1 - p0;
        let scale = p0.norm().max(p1.norm()).max(1.0);
        if (pt - (p0 + t * slope)).norm() > LINEARITY_TOL * scale {
            return Err(nonlinear());
        }
        match c {
            None => c = Some(slope),
            Some(c0) if (c0 - slope).norm() > LINEARITY_TOL * scale => return Err(nonlinear()),
            _ => {}
        }
    }
    let c = c.ok_or_else(|| NumericError::Unsupported("expression has poles at every probe point".into()))?;
    if c.norm() == 0.0 {
        return Err(NumericError::Unsupported(format!(
            "expression does not depend on '{inner_var}'"
        )));
    }
    split.c = c;
    Ok(split)
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn sign_changes<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(a);
    for i in 1..=n {
        let x1 = a + (b - a) * i as f64 / n as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0) {
            roots.push(bisect(f, x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Angles where the kink set |g| = 1 meets the boundary or leaves the origin.
fn kink_angles(split: &LinearSplit<'_>) -> Vec<f64> {
    let mut angles = vec![-PI, -PI / 2.0, 0.0, PI / 2.0, PI];
    let on_circle = |th: f64| split.level(Complex64::from_polar(1.0, th));
    angles.extend(sign_changes(&on_circle, -PI, PI, BOUNDARY_SCAN));
    if let Some(g0) = split.g(Complex64::new(0.0, 0.0)) {
        if (g0.norm() - 1.0).abs() < 1e-12 {
            // |g(r e^{it})|^2 - 1 ~ 2 r Re(conj(g0) g'(0) e^{it})
            let h = 1e-6;
            let gp = split
                .g(Complex64::new(h, 0.0))
                .zip(split.g(Complex64::new(-h, 0.0)))
                .map(|(a, b)| (a - b) / (2.0 * h));
            if let Some(gp) = gp {
                let w = g0.conj() * gp;
                if w.norm() > 0.0 {
                    for side in [-1.0, 1.0] {
                        let mut t = -w.arg() + side * PI / 2.0;
                        while t <= -PI {
                            t += 2.0 * PI;
                        }
                        while t > PI {
                            t -= 2.0 * PI;
                        }
                        angles.push(t);
                    }
                }
            }
        }
    }
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    angles
}

/// m_D(P) for P linear in `inner_var`, by integrating that variable in closed
/// form and the remaining one by polar quadrature.
pub fn semi_analytic_mm(
    expr: &ExpressionAST,
    inner_var: &str,
    settings: &QuadratureSettings,
) -> Result<f64, NumericError> {
    let split = split_linear(expr, inner_var)?;
    let tol = settings.tolerance();
    let mut angle_splits = kink_angles(&split);
    angle_splits.extend_from_slice(settings.splits());
    let outer_settings = QuadratureSettings::new(tol * PI / 2.0, settings.max_depth(), angle_splits)?;
    // outer error is divided by pi; leave a tenth of the budget to the inner integrals
    let inner_tol = tol / 20.0;

    let radial = |theta: f64| -> f64 {
        let dir = Complex64::from_polar(1.0, theta);
        let level = |rho: f64| split.level(dir * rho);
        let roots = sign_changes(&level, 0.0, 1.0, RADIAL_SCAN);
        let Ok(s) = QuadratureSettings::new(inner_tol, settings.max_depth(), roots) else {
            return f64::NAN;
        };
        let f = |rho: f64| match split.g(dir * rho) {
            Some(g) => mm_linear(g) * rho,
            None => 0.0,
        };
        integrate(f, 0.0, 1.0, &s).map_or(f64::NAN, |r| r.value)
    };
    let outer = integrate(radial, -PI, PI, &outer_settings)?;
    if !outer.value.is_finite() {
        return Err(NumericError::NonConvergence(
            "radial quadrature did not converge".into(),
        ));
    }
    let value = outer.value;
    Ok(value / PI + split.c.norm().ln())
}
