use std::f64::consts::PI;

use super::rational::bernoulli;
use super::{SeriesControl, SpecialError};

/// The two odd primitive characters supported by [`dirichlet_l`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    /// χ₋₃, conductor 3.
    Minus3,
    /// χ₋₄, conductor 4.
    Minus4,
}

impl Character {
    pub fn conductor(self) -> u32 {
        match self {
            Character::Minus3 => 3,
            Character::Minus4 => 4,
        }
    }

    pub fn from_conductor(c: u32) -> Result<Self, SpecialError> {
        match c {
            3 => Ok(Character::Minus3),
            4 => Ok(Character::Minus4),
            _ => Err(SpecialError::Domain(format!(
                "only conductors 3 and 4 are supported, got {c}"
            ))),
        }
    }
}

const EM_DIRECT_TERMS: usize = 24;

/// Hurwitz zeta `sum_{k>=0} (k+a)^-s` for real `s > 1`, `a > 0`, by
/// Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: f64, a: f64, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    if !(s > 1.0) || !(a > 0.0) {
        return Err(SpecialError::Domain(format!(
            "hurwitz_zeta needs s > 1 and a > 0, got s={s}, a={a}"
        )));
    }
    let n = EM_DIRECT_TERMS;
    let mut head = 0.0;
    // smallest terms first
    for k in (0..n).rev() {
        head += (k as f64 + a).powf(-s);
    }
    let x = n as f64 + a;
    let mut tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut xpow = x.powf(-s - 1.0);
    let mut prev = f64::INFINITY;
    for j in 1..=30usize {
        let term = bernoulli(2 * j).to_f64() / fact * rising * xpow;
        if term.abs() > prev {
            break;
        }
        tail += term;
        prev = term.abs();
        if term.abs() < 1e-4 * ctl.tolerance() * (head + tail).abs().max(1.0) {
            break;
        }
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
        xpow /= x * x;
    }
    Ok(head + tail)
}

/// ζ(n) for integer `n >= 2`.
pub fn zeta_int(n: u32, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    if n < 2 {
        return Err(SpecialError::Domain(format!("zeta_int needs n >= 2, got {n}")));
    }
    if n % 2 == 0 && n <= 60 {
        // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
        let m = n / 2;
        let b = bernoulli(n as usize).to_f64();
        let mut f = 1.0;
        for i in 2..=n {
            f *= i as f64;
        }
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        return Ok(sign * b * (2.0 * PI).powi(n as i32) / (2.0 * f));
    }
    Ok(1.0 + zeta_minus_one(n, ctl)?)
}

/// ζ(n) − 1 without cancellation, for integer `n >= 2`.
pub fn zeta_minus_one(n: u32, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    if n < 2 {
        return Err(SpecialError::Domain(format!(
            "zeta_minus_one needs n >= 2, got {n}"
        )));
    }
    hurwitz_zeta(n as f64, 2.0, ctl)
}

/// L(χ, s) for integer `s >= 2`.
pub fn dirichlet_l(chi: Character, s: u32, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    if s < 2 {
        return Err(SpecialError::Domain(format!("dirichlet_l needs s >= 2, got {s}")));
    }
    let q = chi.conductor() as f64;
    let sf = s as f64;
    let (a1, a2) = (1.0 / q, (q - 1.0) / q);
    Ok(q.powf(-sf) * (hurwitz_zeta(sf, a1, ctl)? - hurwitz_zeta(sf, a2, ctl)?))
}

/// Catalan's constant, L(χ₋₄, 2).
pub fn catalan() -> f64 {
    dirichlet_l(Character::Minus4, 2, &SeriesControl::default()).expect("s = 2 is in range")
}
