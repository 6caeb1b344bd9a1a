use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Largest index held in the shared Bernoulli/Euler tables. Larger indices
/// are computed on demand and not retained.
pub const EXACT_CACHE_INDEX: usize = 64;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Nearest `f64`; correct to a few ulps even when numerator and
    /// denominator individually overflow.
    pub fn to_f64(&self) -> f64 {
        if let (Some(n), Some(d)) = (self.numer().to_f64(), self.denom().to_f64()) {
            if n.is_finite() && d.is_finite() {
                return n / d;
            }
        }
        let shift = self.numer().bits() as i64 - self.denom().bits() as i64;
        // scale into roughly [2^-60, 2^60] before dividing
        let scaled = if shift > 0 {
            &self.0 / BigRational::from_integer(BigInt::one() << (shift as usize))
        } else {
            &self.0 * BigRational::from_integer(BigInt::one() << ((-shift) as usize))
        };
        let n = scaled.numer().to_f64().unwrap_or(f64::NAN);
        let d = scaled.denom().to_f64().unwrap_or(f64::NAN);
        let mantissa = if n.is_finite() && d.is_finite() {
            n / d
        } else {
            // both sides still huge: drop low bits
            let drop = scaled.numer().bits().min(scaled.denom().bits()).saturating_sub(900);
            let n = (scaled.numer() >> drop as usize).to_f64().unwrap_or(f64::NAN);
            let d = (scaled.denom() >> drop as usize).to_f64().unwrap_or(f64::NAN);
            n / d
        };
        mantissa * 2f64.powi(shift as i32)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn pow(&self, e: i32) -> Self {
        Self(num_traits::Pow::pow(&self.0, e))
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bernoulli_table(upto: usize) -> Vec<BigRational> {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    let mut b: Vec<BigRational> = Vec::with_capacity(upto + 1);
    b.push(BigRational::one());
    for m in 1..=upto {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let mut s = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                s += BigRational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
            }
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn euler_table(upto: usize) -> Vec<BigInt> {
    // E_n = -sum_{k<n/2} C(n, 2k) E_{2k} for even n
    let mut e = vec![BigInt::zero(); upto + 1];
    e[0] = BigInt::one();
    for n in (2..=upto).step_by(2) {
        let mut s = BigInt::zero();
        for k in (0..n).step_by(2) {
            s += binomial(n as u64, k as u64) * &e[k];
        }
        e[n] = -s;
    }
    e
}

fn cached_bernoulli() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_table(EXACT_CACHE_INDEX))
}

fn cached_euler() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| euler_table(EXACT_CACHE_INDEX))
}

/// Bernoulli number B_n with B_1 = -1/2.
pub fn bernoulli(n: usize) -> ExactRational {
    match cached_bernoulli().get(n) {
        Some(b) => ExactRational(b.clone()),
        None => ExactRational(bernoulli_table(n).swap_remove(n)),
    }
}

/// Euler number E_n (the sech coefficients); zero for odd n.
pub fn euler_number(n: usize) -> ExactRational {
    let e = match cached_euler().get(n) {
        Some(e) => e.clone(),
        None => euler_table(n).swap_remove(n),
    };
    ExactRational::from_integer(e)
}

/// Left side of the Chu–Vandermonde variant
/// `sum_{r<=a} C(a+b-r, b) 2^r + sum_{r<=b} C(a+b-r, a) 2^r`, which equals `2^(a+b+1)`.
pub fn chu_vandermonde_sum(a: u64, b: u64) -> ExactRational {
    let mut s = BigInt::zero();
    for r in 0..=a {
        s += binomial(a + b - r, b) << r as usize;
    }
    for r in 0..=b {
        s += binomial(a + b - r, a) << r as usize;
    }
    ExactRational::from_integer(s)
}

/// `int_0^1 x^j log^k x dx = (-1)^k k! / (j+1)^(k+1)`.
pub fn xj_logk_integral(j: u64, k: u64) -> ExactRational {
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= i;
    }
    let den = num_traits::pow(BigInt::from(j + 1), k as usize + 1);
    let num = if k % 2 == 1 { -fact } else { fact };
    ExactRational::new(num, den)
}
