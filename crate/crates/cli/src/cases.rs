use areal_core::closed::{
    mm_higher_coords, mm_higher_moebius, mm_linear, mm_max_coords, mm_moebius_areal,
    mm_monomial_sum, mm_smyth_areal, mm_sqrt2_areal, zeta_mm_x_plus_1, ClosedFormResult, ZetaForm,
};
use areal_core::{parse, ExactRational, SeriesControl};
use num_complex::Complex64;
use serde::Serialize;

use crate::CliError;

/// Registered case names and the result they mirror.
pub const CASES: &[(&str, &str)] = &[
    ("smyth-areal", "thm1.1"),
    ("sqrt2-areal", "thm1.2"),
    ("moebius-areal", "thm1.3"),
    ("monomial-sum", "thm2.2"),
    ("max-coords", "prop5.1"),
    ("higher-coords", "prop5.2"),
    ("higher-moebius", "thm5.3"),
    ("zeta-x1", "zeta-x1"),
];

/// Options consumed by the parametrized cases.
#[derive(Clone, Debug, Default)]
pub struct CaseOptions {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub h: Vec<u32>,
    pub s: Option<f64>,
    pub form: Option<ZetaForm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermReport {
    pub label: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedReport {
    pub case: String,
    pub theorem: String,
    pub value: f64,
    /// Exact rational value, when there is one.
    pub exact: Option<String>,
    pub terms: Vec<TermReport>,
}

impl ClosedReport {
    fn exact(case: &str, theorem: &str, q: ExactRational) -> Self {
        Self {
            case: case.into(),
            theorem: theorem.into(),
            value: q.to_f64(),
            exact: Some(q.to_string()),
            terms: Vec::new(),
        }
    }

    fn real(case: &str, theorem: &str, value: f64) -> Self {
        Self {
            case: case.into(),
            theorem: theorem.into(),
            value,
            exact: None,
            terms: Vec::new(),
        }
    }

    fn with_terms(case: &str, r: ClosedFormResult) -> Self {
        Self {
            case: case.into(),
            theorem: r.theorem.clone(),
            value: r.value,
            exact: None,
            terms: r
                .terms
                .iter()
                .map(|t| TermReport {
                    label: t.label.clone(),
                    re: t.value.re,
                    im: t.value.im,
                })
                .collect(),
        }
    }
}

fn theorem_of(name: &str) -> &'static str {
    CASES.iter().find(|(c, _)| *c == name).map_or("", |(_, t)| t)
}

/// Evaluates a registered case, or an expression of the form a·x + b.
pub fn closed_case(name: &str, opts: &CaseOptions) -> Result<ClosedReport, CliError> {
    let thm = theorem_of(name);
    let report = match name {
        "smyth-areal" => ClosedReport::with_terms(name, mm_smyth_areal()),
        "sqrt2-areal" => ClosedReport::with_terms(name, mm_sqrt2_areal(&SeriesControl::default())?),
        "moebius-areal" => ClosedReport::with_terms(name, mm_moebius_areal()),
        "monomial-sum" => {
            let m = opts.m.ok_or(CliError::MissingOption("--m"))?;
            let n = opts.n.ok_or(CliError::MissingOption("--n"))?;
            ClosedReport::exact(name, thm, mm_monomial_sum(m, n)?)
        }
        "max-coords" => {
            let n = opts.n.ok_or(CliError::MissingOption("--n"))?;
            ClosedReport::exact(name, thm, mm_max_coords(n)?)
        }
        "higher-coords" => {
            if opts.h.is_empty() {
                return Err(CliError::MissingOption("--h"));
            }
            ClosedReport::exact(name, thm, mm_higher_coords(&opts.h)?)
        }
        "higher-moebius" => {
            let h = match opts.h.as_slice() {
                [h] => *h,
                [] => return Err(CliError::MissingOption("--h")),
                _ => return Err(CliError::Unsupported("higher-moebius takes a single --h".into())),
            };
            ClosedReport::with_terms(name, mm_higher_moebius(h)?)
        }
        "zeta-x1" => {
            let s = opts.s.ok_or(CliError::MissingOption("--s"))?;
            let form = opts.form.unwrap_or(ZetaForm::Gamma);
            ClosedReport::real(name, thm, zeta_mm_x_plus_1(s, form)?)
        }
        _ => return linear_expression(name),
    };
    Ok(report)
}

/// m_D of a one-variable affine expression by the areal Jensen formula.
fn linear_expression(text: &str) -> Result<ClosedReport, CliError> {
    let expr = parse(text).map_err(|_| CliError::UnknownCase(text.into()))?;
    if expr.variable_count() != 1 {
        return Err(CliError::Unsupported(format!(
            "no closed form for '{text}': only registered cases and affine one-variable expressions"
        )));
    }
    let at = |x: Complex64| expr.evaluate_slice(&[x]).finite();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let probe = Complex64::new(0.31, -0.47);
    let (Some(b), Some(a1), Some(ap)) = (at(zero), at(one), at(probe)) else {
        return Err(CliError::Unsupported(format!("'{text}' has a pole")));
    };
    let a = a1 - b;
    let scale = b.norm().max(a1.norm()).max(1.0);
    if a.norm() == 0.0 || (ap - (b + a * probe)).norm() > 1e-9 * scale {
        return Err(CliError::Unsupported(format!("'{text}' is not of the form a*x + b with a != 0")));
    }
    let value = a.norm().ln() + mm_linear(-b / a);
    Ok(ClosedReport::real(text, "jensen", value))
}
