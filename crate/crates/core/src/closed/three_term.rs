use std::f64::consts::{LN_2, PI};

use super::{real_term, ClosedError, ClosedFormResult};
use crate::special::{dirichlet_l, gamma_real, hyper_pfq, Character, SeriesControl};

fn l3() -> f64 {
    dirichlet_l(Character::Minus3, 2, &SeriesControl::default()).expect("s = 2")
}

fn l4() -> f64 {
    dirichlet_l(Character::Minus4, 2, &SeriesControl::default()).expect("s = 2")
}

/// m_D(1 + x + y) = (3√3/4π) L(χ₋₃,2) + 1/6 − 11√3/(16π).
pub fn mm_smyth_areal() -> ClosedFormResult {
    let r3 = 3f64.sqrt();
    ClosedFormResult::from_terms(
        "thm1.1",
        vec![
            real_term("L-term", 3.0 * r3 / (4.0 * PI) * l3()),
            real_term("rational", 1.0 / 6.0),
            real_term("pi-term", -11.0 * r3 / (16.0 * PI)),
        ],
    )
}

/// Classical m(1 + x + y) = (3√3/4π) L(χ₋₃,2).
pub fn classical_smyth() -> f64 {
    3.0 * 3f64.sqrt() / (4.0 * PI) * l3()
}

/// The hypergeometric constant
/// Γ(3/4)²/√(2π³) ₄F₃(1/4,1/4,3/4,3/4; 1/2,5/4,5/4; 1)
/// − Γ(1/4)²/(72√(2π³)) ₄F₃(3/4,3/4,5/4,5/4; 3/2,7/4,7/4; 1).
pub fn c_sqrt2(ctl: &SeriesControl) -> Result<f64, ClosedError> {
    let f1 = hyper_pfq(&[0.25, 0.25, 0.75, 0.75], &[0.5, 1.25, 1.25], 1.0, ctl)?;
    let f2 = hyper_pfq(&[0.75, 0.75, 1.25, 1.25], &[1.5, 1.75, 1.75], 1.0, ctl)?;
    let norm = (2.0 * PI.powi(3)).sqrt();
    let g34 = gamma_real(0.75)?;
    let g14 = gamma_real(0.25)?;
    Ok(g34 * g34 / norm * f1 - g14 * g14 / (72.0 * norm) * f2)
}

/// m_D(√2 + x + y) = L(χ₋₄,2)/π + C_√2 + 3/8 − 3/(2π).
pub fn mm_sqrt2_areal(ctl: &SeriesControl) -> Result<ClosedFormResult, ClosedError> {
    Ok(ClosedFormResult::from_terms(
        "thm1.2",
        vec![
            real_term("L-term", l4() / PI),
            real_term("C_sqrt2", c_sqrt2(ctl)?),
            real_term("rational", 3.0 / 8.0),
            real_term("pi-term", -3.0 / (2.0 * PI)),
        ],
    ))
}

/// Classical m(√2 + x + y) = L(χ₋₄,2)/π + log(2)/4.
pub fn classical_sqrt2() -> f64 {
    l4() / PI + LN_2 / 4.0
}

/// m_D(y + (1−x)/(1+x)) = (6/π) L(χ₋₄,2) − log 2 − 1/2 − 1/π.
pub fn mm_moebius_areal() -> ClosedFormResult {
    ClosedFormResult::from_terms(
        "thm1.3",
        vec![
            real_term("L-term", 6.0 / PI * l4()),
            real_term("log-term", -LN_2),
            real_term("rational", -0.5),
            real_term("pi-term", -1.0 / PI),
        ],
    )
}

/// Classical m(y + (1−x)/(1+x)) = (2/π) L(χ₋₄,2).
pub fn classical_moebius() -> f64 {
    2.0 / PI * l4()
}
