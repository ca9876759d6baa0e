//! Truncated power-series arithmetic on coefficient slices.

use num_complex::Complex64;

use crate::error::{BohrError, Result};

fn coeff(s: &[Complex64], n: usize) -> Complex64 {
    s.get(n).copied().unwrap_or_default()
}

/// Cauchy product truncated to `order`.
pub fn mul(a: &[Complex64], b: &[Complex64], order: usize) -> Vec<Complex64> {
    let b_len = b.iter().rposition(|c| *c != Complex64::default()).map_or(0, |i| i + 1);
    let mut out = vec![Complex64::default(); order + 1];
    for (i, &ai) in a.iter().enumerate().take(order + 1) {
        if ai == Complex64::default() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(b_len.min(order + 1 - i)) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Quotient `num / den` truncated to `order`; `den[0]` must be non-zero.
pub fn div(num: &[Complex64], den: &[Complex64], order: usize) -> Result<Vec<Complex64>> {
    let d0 = coeff(den, 0);
    if d0 == Complex64::default() {
        return Err(BohrError::InvalidParameter(
            "power-series division by a series with zero constant term".into(),
        ));
    }
    let deg = den.iter().rposition(|c| *c != Complex64::default()).unwrap_or(0);
    let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = coeff(num, n);
        for j in 1..=deg.min(n) {
            acc -= den[j] * q[n - j];
        }
        q.push(acc / d0);
    }
    Ok(q)
}

/// Horner evaluation of the series and its derivative at `z`.
pub fn eval_with_derivative(s: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::default();
    let mut deriv = Complex64::default();
    for &c in s.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}
