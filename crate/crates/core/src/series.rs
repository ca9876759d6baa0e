//! Certified summation of non-negative series.

use crate::error::{BohrError, Result};

/// Hard cap on the number of terms any series may consume.
pub const MAX_TERMS: usize = 1_000_000;

/// Relative size below which the current term is considered negligible.
pub const TERM_REL_EPS: f64 = 1e-16;

/// Neumaier compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Sums `t_first + t_{first+1} + ...` for a non-negative series.
///
/// `term(n)` yields `(t_n, q_n)` where `q_n` bounds every later ratio
/// `t_{m+1} / t_m`, `m >= n`. Summation stops once the current term is below
/// `TERM_REL_EPS` times the running sum and the geometric tail bound
/// `t_n q_n / (1 - q_n)` is within `max(abs_tol, rel_tol * sum)`.
pub fn certified_sum<F>(first: usize, abs_tol: f64, rel_tol: f64, mut term: F) -> Result<f64>
where
    F: FnMut(usize) -> (f64, f64),
{
    let mut acc = CompensatedSum::default();
    for n in first..first + MAX_TERMS {
        let (t, q) = term(n);
        if !t.is_finite() || t < 0.0 {
            return Err(BohrError::NonConvergence { terms: n - first });
        }
        acc.add(t);
        if q < 1.0 {
            let sum = acc.value();
            let tail = t * q / (1.0 - q);
            if t <= TERM_REL_EPS * sum && tail <= abs_tol.max(rel_tol * sum) {
                return Ok(sum);
            }
        }
    }
    Err(BohrError::NonConvergence { terms: MAX_TERMS })
}
