//! Pochhammer symbols, polylogarithms on `[0, 1)` and the Gauss
//! hypergeometric series.

use serde::{Deserialize, Serialize};

use crate::error::{check_unit_interval, BohrError, Result};
use crate::series::certified_sum;

/// Absolute error target for `polylog`.
const POLYLOG_ABS_TOL: f64 = 1e-15;

/// Relative tail target for `gauss_2f1`.
const HYP_REL_TOL: f64 = 2e-16;

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, n: u64) -> Result<f64> {
    let mut acc = 1.0;
    for j in 0..n {
        acc *= a + j as f64;
        if !acc.is_finite() {
            return Err(BohrError::Overflow { a, n });
        }
    }
    Ok(acc)
}

/// `Li_s(x) = sum_{n>=1} x^n / n^s` for `s` in `{1, 2, 3}` and `x` in `[0, 1)`.
pub fn polylog(s: u32, x: f64) -> Result<f64> {
    check_unit_interval("polylog argument", x)?;
    match s {
        1 => Ok(-(-x).ln_1p()),
        2 | 3 => polylog_series(s as i32, x),
        _ => Err(BohrError::InvalidParameter(format!(
            "polylog order {s} not supported (1, 2 or 3)"
        ))),
    }
}

fn polylog_series(s: i32, x: f64) -> Result<f64> {
    // t_{m+1}/t_m = x (m/(m+1))^s <= x
    certified_sum(1, POLYLOG_ABS_TOL, 0.0, |n| {
        let nf = n as f64;
        (x.powi(n as i32) / nf.powi(s), x)
    })
}

/// Positive real parameters `a, b, c` of `2F1(a, b; c; z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(BohrError::InvalidParameter(format!(
                    "hypergeometric parameter {name} = {v} must be positive"
                )));
            }
        }
        Ok(Self { a, b, c })
    }

    /// `gamma_{n+1} / gamma_n = (a+n)(b+n) / ((c+n)(1+n))`.
    pub fn ratio(&self, n: usize) -> f64 {
        let nf = n as f64;
        (self.a + nf) * (self.b + nf) / ((self.c + nf) * (1.0 + nf))
    }

    /// Upper bound on `ratio(m)` for every `m >= n`.
    pub(crate) fn ratio_bound(&self, n: usize) -> f64 {
        let nf = n as f64;
        ((self.a + nf) / (self.c + nf)).max(1.0) * ((self.b + nf) / (1.0 + nf)).max(1.0)
    }

    /// Coefficient `gamma_n = (a)_n (b)_n / ((c)_n n!)` by the ratio recurrence.
    pub fn gamma(&self, n: usize) -> f64 {
        (0..n).fold(1.0, |g, j| g * self.ratio(j))
    }

    /// `gamma_0, ..., gamma_{count-1}`.
    pub fn gamma_coefficients(&self, count: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(count);
        let mut g = 1.0;
        for n in 0..count {
            out.push(g);
            g *= self.ratio(n);
        }
        out
    }

    /// Whether `(a+n)(b+n) r - (c+n)(1+n) <= 0` holds for `0 <= n < n_max`.
    pub fn termwise_decreasing(&self, r: f64, n_max: usize) -> bool {
        (0..n_max).all(|n| {
            let nf = n as f64;
            (self.a + nf) * (self.b + nf) * r - (self.c + nf) * (1.0 + nf) <= 0.0
        })
    }
}

/// `2F1(a, b; c; z) = sum_{n>=0} gamma_n z^n` for `z` in `[0, 1)`.
pub fn gauss_2f1(params: &HypergeometricParams, z: f64) -> Result<f64> {
    check_unit_interval("2F1 argument", z)?;
    hypergeometric_tail(params, z, 0)
}

/// `sum_{n>=start} gamma_n z^n`.
pub(crate) fn hypergeometric_tail(params: &HypergeometricParams, z: f64, start: usize) -> Result<f64> {
    let mut t = params.gamma(start) * z.powi(start as i32);
    certified_sum(start, 0.0, HYP_REL_TOL, |n| {
        let current = t;
        t *= params.ratio(n) * z;
        (current, z * params.ratio_bound(n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Partial sums of `x^n / n^s` up to `n_terms`, plus the tail bound
    /// `x^{N+1} / ((N+1)^s (1-x))`.
    fn polylog_oracle(s: i32, x: f64, n_terms: usize) -> (f64, f64) {
        let mut sum = 0.0;
        for n in (1..=n_terms).rev() {
            sum += x.powi(n as i32) / (n as f64).powi(s);
        }
        let nn = (n_terms + 1) as f64;
        (sum, x.powi(n_terms as i32 + 1) / (nn.powi(s) * (1.0 - x)))
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(1.0, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(1.0, 5).unwrap(), 120.0);
        assert_eq!(pochhammer(2.5, 3).unwrap(), 2.5 * 3.5 * 4.5);
        assert_eq!(pochhammer(2.5, 3).unwrap(), 39.375);
    }

    #[test]
    fn pochhammer_overflow_is_reported() {
        assert!(matches!(pochhammer(10.0, 400), Err(BohrError::Overflow { .. })));
    }

    #[test]
    fn pochhammer_step_relation() {
        for &a in &[0.3, 1.0, 2.5, 7.25] {
            for n in 0..30u64 {
                let lhs = pochhammer(a, n + 1).unwrap();
                let rhs = pochhammer(a, n).unwrap() * (a + n as f64);
                assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * lhs.abs());
            }
        }
    }

    #[test]
    fn polylog_examples() {
        assert!((polylog(1, 0.5).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(polylog(2, 0.0).unwrap(), 0.0);
        let (oracle, tail) = polylog_oracle(2, 0.5, 60);
        assert!(tail < 1e-19);
        assert!((polylog(2, 0.5).unwrap() - oracle).abs() < 1e-14);
        // Li_2(1/2) = pi^2/12 - ln(2)^2/2
        let exact = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
        assert!((polylog(2, 0.5).unwrap() - exact).abs() < 1e-15);
    }

    #[test]
    fn polylog_against_partial_sum_oracle() {
        for s in [2, 3] {
            for i in 1..=9 {
                let x = i as f64 / 10.0;
                let (oracle, tail) = polylog_oracle(s, x, 2000);
                assert!(tail < 1e-15);
                let v = polylog(s as u32, x).unwrap();
                assert!((v - oracle).abs() <= 1e-14, "s={s} x={x}: {v} vs {oracle}");
            }
        }
    }

    #[test]
    fn polylog_one_matches_log() {
        for i in 0..=99 {
            let x = i as f64 / 100.0;
            assert!((polylog(1, x).unwrap() + (1.0 - x).ln()).abs() <= 1e-13);
        }
    }

    #[test]
    fn polylog_domain_errors() {
        assert!(matches!(polylog(2, 1.0), Err(BohrError::Domain { .. })));
        assert!(matches!(polylog(2, -0.1), Err(BohrError::Domain { .. })));
        assert!(matches!(polylog(4, 0.1), Err(BohrError::InvalidParameter(_))));
    }

    #[test]
    fn polylog_strictly_increasing() {
        for s in 1..=3 {
            let mut prev = polylog(s, 0.0).unwrap();
            for i in 1..100 {
                let v = polylog(s, i as f64 / 100.0).unwrap();
                assert!(v > prev);
                prev = v;
            }
        }
    }

    #[test]
    fn gauss_2f1_examples() {
        let p = HypergeometricParams::new(1.0, 1.0, 2.0).unwrap();
        let expected = -(0.5f64).ln() / 0.5;
        assert!((gauss_2f1(&p, 0.5).unwrap() - expected).abs() < 1e-13 * expected);
        assert!((expected - 1.386294361).abs() < 1e-9);
        assert_eq!(gauss_2f1(&p, 0.0).unwrap(), 1.0);
        let q = HypergeometricParams::new(0.5, 1.0, 1.0).unwrap();
        assert!((gauss_2f1(&q, 0.64).unwrap() - 5.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn gauss_2f1_binomial_case() {
        for &a in &[0.25, 0.5, 1.0, 2.0, 3.5] {
            let p = HypergeometricParams::new(a, 1.0, 1.0).unwrap();
            for i in 0..=9 {
                let z = i as f64 / 10.0;
                let exact = (1.0 - z).powf(-a);
                assert!((gauss_2f1(&p, z).unwrap() - exact).abs() <= 1e-12 * exact);
            }
        }
    }

    #[test]
    fn gamma_coefficients_match_pochhammer() {
        let p = HypergeometricParams::new(1.0, 1.0, 2.0).unwrap();
        let g = p.gamma_coefficients(3);
        let direct = pochhammer(1.0, 2).unwrap() * pochhammer(1.0, 2).unwrap()
            / (pochhammer(2.0, 2).unwrap() * pochhammer(1.0, 2).unwrap());
        assert_eq!(g[0], 1.0);
        assert!((g[1] - 0.5).abs() < 1e-16);
        assert!((g[2] - direct).abs() < 1e-16);
        assert!((p.gamma(2) - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn invalid_hypergeometric_params() {
        assert!(HypergeometricParams::new(0.0, 1.0, 1.0).is_err());
        assert!(HypergeometricParams::new(1.0, -1.0, 1.0).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, f64::NAN).is_err());
    }
}
