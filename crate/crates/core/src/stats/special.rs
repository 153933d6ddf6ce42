//! Special functions behind the F and t tail probabilities.

use super::StatsError;
use crate::scalar::Scalar;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7).
pub fn ln_gamma<T: Scalar>(x: T) -> T {
    let half = T::of(0.5);
    if x < half {
        // Reflection: Γ(x) Γ(1-x) = π / sin(πx)
        let pi = T::PI();
        return (pi / (pi * x).sin()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let mut acc = T::of(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::of(c) / (x + T::of_usize(i));
    }
    let t = x + T::of(LANCZOS_G) + half;
    half * (T::of(2.0) * T::PI()).ln() + (x + half) * t.ln() - t + acc.ln()
}

pub fn ln_beta<T: Scalar>(a: T, b: T) -> T {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Continued fraction for the incomplete beta function (modified Lentz).
fn beta_continued_fraction<T: Scalar>(a: T, b: T, x: T) -> T {
    let tiny = T::of(1e-300).max(T::min_positive_value());
    let eps = T::epsilon();
    let one = T::one();
    let two = T::of(2.0);
    let qab = a + b;
    let qap = a + one;
    let qam = a - one;
    let mut c = one;
    let mut d = one - qab * x / qap;
    if d.abs() < tiny {
        d = tiny;
    }
    d = one / d;
    let mut h = d;
    for m in 1..10_000 {
        let m = T::of_usize(m);
        let m2 = two * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = one + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = one + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = one / d;
        h = h * d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = one + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = one + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = one / d;
        let del = d * c;
        h = h * del;
        if (del - one).abs() <= eps {
            break;
        }
    }
    h
}

/// Regularized incomplete beta `I_x(a, b)` for `a, b > 0`, `0 <= x <= 1`.
pub fn regularized_incomplete_beta<T: Scalar>(x: T, a: T, b: T) -> T {
    let (zero, one) = (T::zero(), T::one());
    if x <= zero {
        return zero;
    }
    if x >= one {
        return one;
    }
    let ln_front = a * x.ln() + b * (one - x).ln() - ln_beta(a, b);
    let front = ln_front.exp();
    if x < (a + one) / (a + b + T::of(2.0)) {
        front * beta_continued_fraction(a, b, x) / a
    } else {
        one - front * beta_continued_fraction(b, a, one - x) / b
    }
}

/// `P(X > f)` for `X ~ F(df1, df2)`; degrees of freedom may be fractional.
pub fn f_upper_tail<T: Scalar>(f: T, df1: T, df2: T) -> Result<T, StatsError> {
    if !(f.is_finite() && df1.is_finite() && df2.is_finite()) {
        return Err(StatsError::NonFinite("f_upper_tail argument"));
    }
    if f < T::zero() || df1 <= T::zero() || df2 <= T::zero() {
        return Err(StatsError::Domain(format!("F={f}, df1={df1}, df2={df2}")));
    }
    let half = T::of(0.5);
    let x = df2 / (df2 + df1 * f);
    Ok(regularized_incomplete_beta(x, df2 * half, df1 * half))
}

/// Two-sided p-value of a Student t statistic.
pub fn t_two_sided<T: Scalar>(t: T, df: T) -> T {
    if t.is_infinite() {
        return T::zero();
    }
    let x = df / (df + t * t);
    regularized_incomplete_beta(x, df * T::of(0.5), T::of(0.5))
}

/// `P(X <= t)` for `X ~ t(df)`.
pub fn t_cdf<T: Scalar>(t: T, df: T) -> T {
    let tail = t_two_sided(t, df) * T::of(0.5);
    if t >= T::zero() {
        T::one() - tail
    } else {
        tail
    }
}

/// Quantile of the t distribution for `0 < p < 1`, by bisection on the CDF.
pub fn t_quantile<T: Scalar>(p: T, df: T) -> Result<T, StatsError> {
    let (zero, one, half) = (T::zero(), T::one(), T::of(0.5));
    if !(p > zero && p < one) || !(df > zero) {
        return Err(StatsError::Domain(format!("t quantile p={p}, df={df}")));
    }
    if p == half {
        return Ok(zero);
    }
    if p < half {
        return t_quantile(one - p, df).map(|q| -q);
    }
    let mut hi = one;
    while t_cdf(hi, df) < p {
        hi = hi * T::of(2.0);
        if !hi.is_finite() {
            return Err(StatsError::Domain(format!("t quantile p={p} out of range")));
        }
    }
    let mut lo = zero;
    for _ in 0..200 {
        let mid = (lo + hi) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        if t_cdf(mid, df) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * half)
}
