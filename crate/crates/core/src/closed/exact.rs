use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;

use super::ClosedError;
use crate::special::{binomial, ExactRational};

/// m_D(x − α): `log|α|` outside the disk, `(|α|² − 1)/2` inside.
pub fn mm_linear(alpha: Complex64) -> f64 {
    let r = alpha.norm();
    if r >= 1.0 {
        r.ln()
    } else {
        0.5 * (r * r - 1.0)
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e as usize
}

/// `sum_{r=0}^{upto} C(top - r, k) 2^r`
fn weighted(top: u64, k: u64, upto: u64) -> BigInt {
    (0..=upto)
        .filter(|&r| r <= top)
        .map(|r| binomial(top - r, k) << r as usize)
        .sum()
}

/// m_D(x₁⋯x_m + y₁⋯y_n), exact.
pub fn mm_monomial_sum(m: u32, n: u32) -> Result<ExactRational, ClosedError> {
    if m == 0 || n == 0 {
        return Err(ClosedError::InvalidArgument(format!(
            "exponents must be positive, got ({m}, {n})"
        )));
    }
    let (m, n) = (m as u64, n as u64);
    if m == 1 && n == 1 {
        return Ok(ExactRational::new(-1, 4));
    }
    if m == 1 || n == 1 {
        let k = m.max(n);
        return Ok(ExactRational::new(1, pow2(k + 1)) - ExactRational::new(1, 2));
    }
    let big = pow2(m + n);
    let mut num = binomial(m + n - 2, m - 1) * 2;
    num -= weighted(m + n - 3, m - 2, n - 1) * 2;
    num -= weighted(m + n - 3, n - 2, m - 1) * 2;
    num -= weighted(m + n - 1, m, n - 1) * m;
    num -= weighted(m + n - 1, n, m - 1) * n;
    Ok(ExactRational::new(1, 4) + ExactRational::new(num, big * 2))
}

/// m_{D,max}(x₁, …, x_n) = −1/(2n).
pub fn mm_max_coords(n: u32) -> Result<ExactRational, ClosedError> {
    if n == 0 {
        return Err(ClosedError::InvalidArgument("need at least one coordinate".into()));
    }
    Ok(ExactRational::new(-1, 2 * n as i64))
}

fn check_powers(h: &[u32]) -> Result<(), ClosedError> {
    if h.is_empty() || h.contains(&0) {
        return Err(ClosedError::InvalidArgument(
            "powers must be a nonempty list of positive integers".into(),
        ));
    }
    Ok(())
}

fn higher_coords_numerator(h: &[u32]) -> (BigInt, u64) {
    let total: u64 = h.iter().map(|&x| x as u64).sum();
    let mut prod = BigInt::one();
    for &hj in h {
        for i in 2..=hj as u64 {
            prod *= i;
        }
    }
    if total % 2 == 1 {
        prod = -prod;
    }
    (prod, total)
}

/// m_{D,h₁,…,h_n}(x₁, …, x_n) = (−1)^{Σh} Π h_j! / 2^{Σh}.
///
/// This equals 2^n Π ∫₀¹ x log^{h_j} x dx and reduces to m_D(x) = −1/2 for n = h = 1.
pub fn mm_higher_coords(h: &[u32]) -> Result<ExactRational, ClosedError> {
    check_powers(h)?;
    let (num, total) = higher_coords_numerator(h);
    Ok(ExactRational::new(num, pow2(total)))
}

/// The same numerator over 2^{Σh+n}, an alternative normalization the integral
/// does not support; kept so reports can show which value the data favors.
pub fn mm_higher_coords_printed(h: &[u32]) -> Result<ExactRational, ClosedError> {
    check_powers(h)?;
    let (num, total) = higher_coords_numerator(h);
    Ok(ExactRational::new(num, pow2(total + h.len() as u64)))
}
