use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{ClosedError, ClosedFormResult, Term, IMAGINARY_RESIDUAL_LIMIT};
use crate::special::{
    bernoulli, binomial, euler_number, gamma_real, zeta_int, zeta_minus_one, SeriesControl,
};

fn factorial(n: u32) -> f64 {
    (2..=n).map(|i| i as f64).product()
}

fn term(label: &str, value: Complex64) -> Term {
    Term {
        label: label.to_string(),
        value,
    }
}

/// m_{D,h}((1−x)/(1+x)) assembled in complex arithmetic from Bernoulli and
/// Euler numbers, ζ-values and log 2. Odd h gives 0.
pub fn mm_higher_moebius(h: u32) -> Result<ClosedFormResult, ClosedError> {
    if h == 0 {
        return Err(ClosedError::InvalidArgument("h must be positive".into()));
    }
    if h % 2 == 1 {
        return Ok(ClosedFormResult::from_terms(
            "thm5.3",
            vec![term("odd-h", Complex64::new(0.0, 0.0))],
        ));
    }
    let ctl = SeriesControl::default();
    let pi_i = Complex64::new(0.0, PI);
    let hf = h as f64;
    let b = |n: u32| bernoulli(n as usize).to_f64();
    let e = |n: u32| euler_number(n as usize).to_f64();
    let pow2 = |k: i32| 2f64.powi(k);

    let bernoulli_term = -2.0 * (hf - 1.0) * b(h) * pi_i.powu(h - 1);
    let euler_term = e(h) * pi_i.powu(h) / pow2(h as i32);
    let log_term =
        -e(h - 2) * pi_i.powu(h - 2) * hf * (hf - 1.0) / pow2(h as i32 - 2) * LN_2;

    // empty for h = 2
    let mut zeta_sum = Complex64::new(0.0, 0.0);
    for m in 2..h {
        let idx = h - m - 1;
        let en = e(idx);
        if en == 0.0 {
            continue;
        }
        let eta_factor = 1.0 - pow2(1 - m as i32);
        zeta_sum += eta_factor * zeta_int(m, &ctl)? * en * pi_i.powu(idx) / factorial(idx);
    }
    let zeta_term = -4.0 * factorial(h) / pow2(h as i32) * zeta_sum;

    let mut conv = 0.0;
    for m in 0..=h {
        let w = (1.0 - pow2(1 - m as i32)) * (1.0 - pow2(1 - (h - m) as i32));
        if w == 0.0 {
            continue;
        }
        let c = binomial(h as u64, m as u64).to_f64().unwrap_or(f64::INFINITY);
        conv += c * w * b(m) * b(h - m);
    }
    let conv_term = -2.0 * pi_i.powu(h - 1) * conv;

    let result = ClosedFormResult::from_terms(
        "thm5.3",
        vec![
            term("bernoulli", bernoulli_term),
            term("euler", euler_term),
            term("log2-euler", log_term),
            term("zeta-euler-sum", zeta_term),
            term("bernoulli-convolution", conv_term),
        ],
    );
    if result.imaginary_residual.abs() > IMAGINARY_RESIDUAL_LIMIT {
        return Err(ClosedError::ImaginaryResidual {
            residual: result.imaginary_residual,
            limit: IMAGINARY_RESIDUAL_LIMIT,
        });
    }
    Ok(result)
}

/// Which representation of Z_D(s, x+1) to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaForm {
    /// `exp(sum_{j>=2} (−1)^j/j (1 − 2^{1−j})(ζ(j) − 1) s^j)`, converging for |s| < 2.
    Product,
    /// `(s+1)/(s/2+1)² · Γ(s+1)/Γ(s/2+1)²`, valid for s > −1.
    Gamma,
}

const PRODUCT_MAX_TERMS: u32 = 400;

/// Areal zeta Mahler measure Z_D(s, x + 1).
pub fn zeta_mm_x_plus_1(s: f64, form: ZetaForm) -> Result<f64, ClosedError> {
    match form {
        ZetaForm::Gamma => {
            if !(s > -1.0) {
                return Err(ClosedError::InvalidArgument(format!(
                    "gamma form needs s > -1, got {s}"
                )));
            }
            let half = s / 2.0 + 1.0;
            let g = gamma_real(s + 1.0)? / gamma_real(half)?.powi(2);
            Ok((s + 1.0) / (half * half) * g)
        }
        ZetaForm::Product => {
            // (zeta(j) - 1) ~ 2^-j, so the log-series has radius 2
            if !(s.abs() < 2.0) {
                return Err(ClosedError::InvalidArgument(format!(
                    "product form diverges for |s| >= 2, got {s}"
                )));
            }
            let ctl = SeriesControl::default();
            let mut log = 0.0;
            let mut sj = s;
            for j in 2..PRODUCT_MAX_TERMS {
                sj *= s;
                let jf = j as f64;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                let t = sign / jf * (1.0 - 2f64.powi(1 - j as i32)) * zeta_minus_one(j, &ctl)? * sj;
                log += t;
                if t.abs() < 1e-18 * log.abs().max(1e-300) && j > 4 {
                    break;
                }
            }
            Ok(log.exp())
        }
    }
}

/// m_{D,k}(x + 1), the k-th derivative of Z_D(s, x+1) at s = 0, for k = 1..5.
pub fn higher_mm_x_plus_1(k: u32) -> Result<f64, ClosedError> {
    let ctl = SeriesControl::default();
    let z = |n: u32| zeta_int(n, &ctl);
    Ok(match k {
        1 => 0.0,
        2 => (z(2)? - 1.0) / 2.0,
        3 => -3.0 * (z(3)? - 1.0) / 2.0,
        4 => 3.0 * (19.0 * z(4)? - 4.0 * z(2)? - 12.0) / 8.0,
        5 => -15.0 * (3.0 * z(5)? + z(3)? * z(2)? - z(3)? - z(2)? - 2.0) / 2.0,
        _ => {
            return Err(ClosedError::InvalidArgument(format!(
                "k must be in 1..=5, got {k}"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_h2() {
        let r = mm_higher_moebius(2).unwrap();
        assert!((r.value - (PI * PI / 4.0 - 2.0 * LN_2)).abs() < 1e-13);
        assert_eq!(r.term("zeta-euler-sum").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(mm_higher_moebius(3).unwrap().value, 0.0);
    }

    #[test]
    fn zeta_forms() {
        assert!((zeta_mm_x_plus_1(0.0, ZetaForm::Product).unwrap() - 1.0).abs() < 1e-16);
        assert!((zeta_mm_x_plus_1(2.0, ZetaForm::Gamma).unwrap() - 1.5).abs() < 1e-13);
        assert!(zeta_mm_x_plus_1(2.5, ZetaForm::Product).is_err());
        assert!(higher_mm_x_plus_1(6).is_err());
    }
}
