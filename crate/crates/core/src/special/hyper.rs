use super::{SeriesControl, SpecialError};

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Ratio t_{n+1}/t_n of consecutive series terms.
fn ratio(a: &[f64], b: &[f64], z: f64, n: u64) -> f64 {
    let nf = n as f64;
    let mut r = z / (nf + 1.0);
    for ai in a {
        r *= ai + nf;
    }
    for bi in b {
        r /= bi + nf;
    }
    r
}

fn terminating(a: &[f64], b: &[f64], z: f64) -> f64 {
    let stop = a
        .iter()
        .filter(|x| is_nonpositive_integer(**x))
        .map(|x| (-x) as u64)
        .min()
        .expect("caller checked for a terminating parameter");
    let mut acc = Compensated::default();
    let mut t = 1.0;
    for n in 0..=stop {
        acc.add(t);
        t *= ratio(a, b, z, n);
    }
    acc.value()
}

fn direct(a: &[f64], b: &[f64], z: f64, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    let limit_ratio = if a.len() == b.len() + 1 { z.abs() } else { 0.0 };
    let mut acc = Compensated::default();
    let mut t = 1.0;
    for n in 0..ctl.max_terms() {
        acc.add(t);
        let r = ratio(a, b, z, n);
        let next = t * r;
        let rho = r.abs().max(limit_ratio);
        let target = (0.1 * ctl.tolerance()).min(0.1 * f64::EPSILON * acc.value().abs());
        if n > 2 && rho < 1.0 && next.abs() / (1.0 - rho) < target {
            acc.add(next);
            return Ok(acc.value());
        }
        t = next;
        if t == 0.0 {
            return Ok(acc.value());
        }
    }
    Err(SpecialError::BudgetExhausted {
        terms: ctl.max_terms(),
        estimate: t.abs(),
    })
}

const RICHARDSON_BASE: u64 = 64;
const RICHARDSON_LEVELS: usize = 8;

/// Unit argument with `p = q + 1`: partial sums behave like
/// `S + N^-d (c0 + c1/N + ...)` with `d = sum(b) - sum(a)`, so Richardson
/// extrapolation over N = N0, 2 N0, 4 N0, ... removes the tail.
fn unit_argument(a: &[f64], b: &[f64], ctl: &SeriesControl) -> Result<f64, SpecialError> {
    let d: f64 = b.iter().sum::<f64>() - a.iter().sum::<f64>();
    let mut base = RICHARDSON_BASE;
    loop {
        let levels = RICHARDSON_LEVELS;
        let last = base << (levels - 1);
        if last > ctl.max_terms() {
            return Err(SpecialError::BudgetExhausted {
                terms: ctl.max_terms(),
                estimate: f64::NAN,
            });
        }
        let mut partial = Vec::with_capacity(levels);
        let mut acc = Compensated::default();
        let mut t = 1.0;
        let mut n = 0u64;
        for k in 0..levels {
            let upto = base << k;
            while n < upto {
                acc.add(t);
                t *= ratio(a, b, 1.0, n);
                n += 1;
            }
            partial.push(acc.value());
        }
        let mut row = partial;
        let mut prev_best = f64::NAN;
        for j in 1..levels {
            let f = 2f64.powf(d + (j - 1) as f64) - 1.0;
            prev_best = *row.last().expect("nonempty");
            row = row.windows(2).map(|w| w[1] + (w[1] - w[0]) / f).collect();
        }
        let best = row[0];
        let estimate = (best - prev_best).abs();
        if estimate <= ctl.tolerance() {
            return Ok(best);
        }
        base *= 4;
    }
}

/// Generalized hypergeometric series pFq(a; b; z) for real parameters.
pub fn hyper_pfq(a: &[f64], b: &[f64], z: f64, ctl: &SeriesControl) -> Result<f64, SpecialError> {
    if let Some(bad) = b.iter().find(|x| is_nonpositive_integer(**x)) {
        return Err(SpecialError::Domain(format!(
            "lower parameter {bad} is a nonpositive integer"
        )));
    }
    if !z.is_finite() {
        return Err(SpecialError::Domain(format!("argument must be finite, got {z}")));
    }
    if a.iter().any(|x| is_nonpositive_integer(*x)) {
        return Ok(terminating(a, b, z));
    }
    let p = a.len();
    let q = b.len();
    if p > q + 1 && z != 0.0 {
        return Err(SpecialError::Divergent(format!(
            "{p}F{q} has zero radius of convergence"
        )));
    }
    if p == q + 1 {
        if z.abs() > 1.0 {
            return Err(SpecialError::Divergent(format!(
                "{p}F{q} diverges for |z| > 1, got z = {z}"
            )));
        }
        if z.abs() == 1.0 {
            let excess = b.iter().sum::<f64>() - a.iter().sum::<f64>();
            if excess <= 0.0 {
                return Err(SpecialError::Divergent(format!(
                    "sum(b) - sum(a) = {excess} <= 0 at |z| = 1"
                )));
            }
            if z == 1.0 {
                return unit_argument(a, b, ctl);
            }
        }
    }
    direct(a, b, z, ctl)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_identity() {
        let ctl = SeriesControl::default();
        let v = hyper_pfq(&[1.0, 1.0], &[2.0], 0.5, &ctl).unwrap();
        let want = -(1.0f64 - 0.5).ln() / 0.5;
        assert!((v - want).abs() < 1e-13);
    }

    #[test]
    fn gauss_sum_at_one() {
        // 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)); here 4/pi
        let ctl = SeriesControl::default();
        let v = hyper_pfq(&[-0.5, -0.5], &[1.0], 1.0, &ctl).unwrap();
        assert!((v - 4.0 / std::f64::consts::PI).abs() < 1e-13);
        // 2F1(1, 1; 5/2; 1) = 3
        let v = hyper_pfq(&[1.0, 1.0], &[2.5], 1.0, &ctl).unwrap();
        assert!((v - 3.0).abs() < 1e-12);
    }

    #[test]
    fn terminating_and_errors() {
        let ctl = SeriesControl::default();
        // 2F1(-2, 1; 1; z) = (1 - z)^2
        let v = hyper_pfq(&[-2.0, 1.0], &[1.0], 3.0, &ctl).unwrap();
        assert!((v - 4.0).abs() < 1e-15);
        assert!(hyper_pfq(&[1.0], &[0.0], 0.5, &ctl).is_err());
        assert!(matches!(
            hyper_pfq(&[1.0, 1.0], &[1.5], 1.0, &ctl),
            Err(SpecialError::Divergent(_))
        ));
    }
}
