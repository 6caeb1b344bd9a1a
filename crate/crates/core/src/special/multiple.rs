use num_complex::Complex64;

use super::polylog::polylog;
use super::rational::binomial;
use super::{SeriesControl, SpecialError};
use num_traits::{ToPrimitive, Zero};

const CIRCLE_SLACK: f64 = 1e-12;

fn on_circle(name: &str, z: Complex64) -> Result<(), SpecialError> {
    if (z.norm() - 1.0).abs() > CIRCLE_SLACK {
        return Err(SpecialError::Domain(format!(
            "{name} must lie on the unit circle, |{name}| = {}",
            z.norm()
        )));
    }
    Ok(())
}

/// Li_{1,s}(u, v) = sum_{b>1} v^b / b^s * sum_{a<b} u^a / a on the unit torus.
pub fn multiple_polylog_1s(
    s: u32,
    u: Complex64,
    v: Complex64,
    ctl: &SeriesControl,
) -> Result<Complex64, SpecialError> {
    if s < 2 {
        return Err(SpecialError::Domain(format!(
            "multiple_polylog_1s needs s >= 2, got {s}"
        )));
    }
    on_circle("u", u)?;
    on_circle("v", v)?;
    let tol = ctl.tolerance();
    let sf = s as f64;
    let gap = (Complex64::new(1.0, 0.0) - u).norm();
    let u_is_one = gap < 1e-15;

    // Past N the inner sum is replaced by Li_1(u); |H_N(u) - Li_1(u)| <= 2/(|1-u| (N+1)).
    // For u = 1 there is no limit and the tail is bounded by
    // sum_{b>N} (log b + 1)/b^s.
    let needed = if u_is_one {
        let mut n = 16.0f64;
        while (n.ln() + 1.0 + 1.0 / (sf - 1.0)) / ((sf - 1.0) * n.powf(sf - 1.0)) > tol {
            n *= 1.25;
            if n > ctl.max_terms() as f64 {
                break;
            }
        }
        n.ceil()
    } else {
        (2.0 / (gap * sf * tol)).powf(1.0 / sf).ceil().max(16.0)
    };
    if needed > ctl.max_terms() as f64 {
        return Err(SpecialError::BudgetExhausted {
            terms: ctl.max_terms(),
            estimate: needed,
        });
    }
    let n_max = needed as u64;

    let mut inner = Complex64::zero(); // sum_{a<b} u^a / a
    let mut ua = Complex64::new(1.0, 0.0);
    let mut vb = Complex64::new(1.0, 0.0);
    let mut outer = Complex64::zero();
    let mut partial_v = Complex64::zero(); // sum_{b<=N} v^b / b^s
    for b in 1..=n_max {
        let bf = b as f64;
        vb *= v;
        let w = vb / bf.powf(sf);
        outer += w * inner;
        partial_v += w;
        ua *= u;
        inner += ua / bf;
        if b % 4096 == 0 {
            // keep the unit-modulus recurrences from drifting
            ua /= ua.norm();
            vb /= vb.norm();
        }
    }
    if !u_is_one {
        let li1 = polylog(1, u, ctl)?;
        let lis = polylog(s, v, ctl)?;
        outer += li1 * (lis - partial_v);
    }
    Ok(outer)
}

fn li_reg(m: u32, z: Complex64, ctl: &SeriesControl) -> Result<Complex64, SpecialError> {
    // Li_1(1) is taken as 0; the divergent pieces cancel in the reduction
    if m == 1 && z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::zero());
    }
    polylog(m, z, ctl)
}

fn binom_f(n: u32, k: u32) -> f64 {
    binomial(n as u64, k as u64).to_f64().unwrap_or(f64::INFINITY)
}

/// `2 Re_k Li_{r,s}(u, v)` (k = r + s) reduced to length-one polylogarithms.
///
/// `Re_k` is the real part for odd k and `i` times the imaginary part for even k.
pub fn nakamura_reduce(
    r: u32,
    s: u32,
    u: Complex64,
    v: Complex64,
    ctl: &SeriesControl,
) -> Result<Complex64, SpecialError> {
    if r == 0 || s == 0 {
        return Err(SpecialError::Domain("r and s must be positive".into()));
    }
    on_circle("u", u)?;
    on_circle("v", v)?;
    // snap to the circle so conj() is the inverse
    let (u, v) = (u / u.norm(), v / v.norm());
    if s == 1 && v == Complex64::new(1.0, 0.0) {
        return Err(SpecialError::Domain("v = 1 is not allowed when s = 1".into()));
    }
    let k = r + s;
    let sign = |e: u32| if e % 2 == 0 { 1.0 } else { -1.0 };
    let (ub, vb) = (u.conj(), v.conj());
    let uv = u * v;
    let uvb = uv.conj();
    let li = |m: u32, z: Complex64| li_reg(m, z, ctl);

    let lr_ub = li(r, ub)?;
    let mut total = sign(k) * li(k, uvb)?;
    total += sign(k + 1) * lr_ub * li(s, vb)?;
    total += sign(r - 1) * lr_ub * li(s, v)?;
    total += sign(r - 1) * (binom_f(k - 1, r - 1) * li(k, ub)? + binom_f(k - 1, s - 1) * li(k, v)?);
    for m in 1..k {
        let c1 = binom_f(m - 1, r - 1);
        let c2 = binom_f(m - 1, s - 1);
        let mut left = Complex64::zero();
        if c1 != 0.0 {
            left += c1 * li(m, ub)?;
        }
        if c2 != 0.0 {
            left += c2 * sign(k + m) * li(m, v)?;
        }
        if left == Complex64::zero() {
            continue;
        }
        let right = sign(r) * li(k - m, uv)? + sign(s + m) * li(k - m, uvb)?;
        total += left * right;
    }
    Ok(total)
}

/// `sum_{b>1} beta^b / b^(h+1) * sum_{a<b} a alpha^a` in closed form:
/// `(alpha Li_h(alpha beta) - alpha Li_{h+1}(alpha beta) - Li_h(alpha beta) + alpha Li_{h+1}(beta)) / (alpha - 1)^2`.
pub fn lemma_length1(
    alpha: Complex64,
    beta: Complex64,
    h: u32,
    ctl: &SeriesControl,
) -> Result<Complex64, SpecialError> {
    if h < 2 {
        return Err(SpecialError::Domain(format!("lemma_length1 needs h >= 2, got {h}")));
    }
    if alpha == Complex64::new(1.0, 0.0) {
        return Err(SpecialError::Domain("alpha = 1 is excluded".into()));
    }
    if beta.norm() == 0.0 {
        return Ok(Complex64::zero());
    }
    let ab = alpha * beta;
    let li_h = polylog(h, ab, ctl)?;
    let li_h1 = polylog(h + 1, ab, ctl)?;
    let li_h1_b = polylog(h + 1, beta, ctl)?;
    let d = alpha - 1.0;
    Ok((alpha * li_h - alpha * li_h1 - li_h + alpha * li_h1_b) / (d * d))
}
