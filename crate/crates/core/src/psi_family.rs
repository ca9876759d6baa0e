//! Weight sequences `{psi_n(r)}` replacing the basis `{r^n}` in majorant
//! series, with the aggregate sums the radius functionals are built from.
//!
//! Every built-in family is non-negative and non-increasing in `n >= 1` on
//! `[0, 1)`; the hypergeometric family only under the termwise condition
//! checked by [`PsiFamily::is_decreasing_at`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{check_unit_interval, BohrError, Result};
use crate::series::certified_sum;
use crate::special_fn::{hypergeometric_tail, polylog, HypergeometricParams};

/// Absolute error target for tail sums and weighted square sums.
const SUM_ABS_TOL: f64 = 1e-15;

/// Slack allowed when testing `psi_{n+1} <= psi_n`.
const DECREASE_SLACK: f64 = 1e-15;

pub type TermFn = Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>;
pub type RatioFn = Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>;
pub type SumFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A user supplied weight sequence.
#[derive(Clone)]
pub struct CustomFamily {
    pub name: String,
    /// `psi_n(r)`.
    pub term: TermFn,
    /// Bound on `psi_{m+1}(r) / psi_m(r)` valid for every `m >= n`. Without
    /// it, tails are estimated from the observed ratio of the next terms.
    pub ratio_bound: Option<RatioFn>,
    /// Closed form of `sum_{n>=1} psi_n(r)`, if known.
    pub sum_from_one: Option<SumFn>,
}

impl CustomFamily {
    pub fn new(name: impl Into<String>, term: impl Fn(usize, f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            term: Arc::new(term),
            ratio_bound: None,
            sum_from_one: None,
        }
    }

    pub fn with_ratio_bound(mut self, bound: impl Fn(usize, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.ratio_bound = Some(Arc::new(bound));
        self
    }

    pub fn with_sum_from_one(mut self, sum: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.sum_from_one = Some(Arc::new(sum));
        self
    }
}

impl fmt::Debug for CustomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomFamily")
            .field("name", &self.name)
            .field("ratio_bound", &self.ratio_bound.is_some())
            .field("sum_from_one", &self.sum_from_one.is_some())
            .finish()
    }
}

#[derive(Debug, Clone)]
pub enum PsiFamily {
    /// `psi_n = r^n`.
    Geometric,
    /// `psi_0 = 1`, `psi_n = r^n / n`.
    HarmonicWeight,
    /// `psi_0 = 1`, `psi_n = r^n / n^2`.
    ZetaWeight,
    /// `psi_n = gamma_n r^n` with the `2F1` coefficients.
    Hypergeometric(HypergeometricParams),
    Custom(CustomFamily),
}

impl PsiFamily {
    /// `psi_n(r)`.
    pub fn psi(&self, n: usize, r: f64) -> Result<f64> {
        check_unit_interval("r", r)?;
        Ok(self.psi_unchecked(n, r))
    }

    fn psi_unchecked(&self, n: usize, r: f64) -> f64 {
        match self {
            PsiFamily::Geometric => r.powi(n as i32),
            PsiFamily::HarmonicWeight => {
                if n == 0 {
                    1.0
                } else {
                    r.powi(n as i32) / n as f64
                }
            }
            PsiFamily::ZetaWeight => {
                if n == 0 {
                    1.0
                } else {
                    let nf = n as f64;
                    r.powi(n as i32) / (nf * nf)
                }
            }
            PsiFamily::Hypergeometric(p) => p.gamma(n) * r.powi(n as i32),
            PsiFamily::Custom(c) => (c.term)(n, r),
        }
    }

    /// `psi_0(r), ..., psi_{count-1}(r)`.
    pub fn terms(&self, r: f64, count: usize) -> Result<Vec<f64>> {
        check_unit_interval("r", r)?;
        Ok(match self {
            PsiFamily::Hypergeometric(p) => {
                let mut out = Vec::with_capacity(count);
                let mut t = 1.0;
                for n in 0..count {
                    out.push(t);
                    t *= p.ratio(n) * r;
                }
                out
            }
            _ => (0..count).map(|n| self.psi_unchecked(n, r)).collect(),
        })
    }

    /// Bound on `psi_{m+1}(r) / psi_m(r)` for all `m >= n >= 1`.
    fn ratio_bound(&self, n: usize, r: f64) -> f64 {
        match self {
            PsiFamily::Geometric | PsiFamily::HarmonicWeight | PsiFamily::ZetaWeight => r,
            PsiFamily::Hypergeometric(p) => r * p.ratio_bound(n),
            PsiFamily::Custom(c) => match &c.ratio_bound {
                Some(bound) => bound(n, r),
                None => {
                    let t0 = (c.term)(n, r);
                    let t1 = (c.term)(n + 1, r);
                    let t2 = (c.term)(n + 2, r);
                    let q1 = if t0 > 0.0 { t1 / t0 } else { 0.0 };
                    let q2 = if t1 > 0.0 { t2 / t1 } else { 0.0 };
                    q1.max(q2)
                }
            },
        }
    }

    /// Stream of `psi_start(r), psi_{start+1}(r), ...`.
    fn stream(&self, r: f64, start: usize) -> Box<dyn FnMut() -> f64 + '_> {
        match self {
            PsiFamily::Hypergeometric(p) => {
                let mut n = start;
                let mut t = p.gamma(start) * r.powi(start as i32);
                Box::new(move || {
                    let current = t;
                    t *= p.ratio(n) * r;
                    n += 1;
                    current
                })
            }
            _ => {
                let mut n = start;
                Box::new(move || {
                    let current = self.psi_unchecked(n, r);
                    n += 1;
                    current
                })
            }
        }
    }

    /// Certified sum of `weight(n, psi_n)` for `n >= start`, where
    /// `ratio(n, q)` turns a psi ratio bound `q` into one for the weighted terms.
    fn weighted_series(
        &self,
        r: f64,
        start: usize,
        weight: impl Fn(usize, f64) -> f64,
        ratio: impl Fn(usize, f64) -> f64,
    ) -> Result<f64> {
        let mut next = self.stream(r, start);
        certified_sum(start, SUM_ABS_TOL, 0.0, |n| {
            let psi = next();
            (weight(n, psi), ratio(n, self.ratio_bound(n.max(1), r)))
        })
    }

    /// Tail sum `Psi_t(r) = sum_{k>=t} psi_k(r)` for `t >= 1`.
    pub fn sum_from(&self, t: usize, r: f64) -> Result<f64> {
        if t == 0 {
            return Err(BohrError::InvalidParameter("tail index t must be >= 1".into()));
        }
        check_unit_interval("r", r)?;
        match (self, t) {
            (PsiFamily::Geometric, _) => Ok(r.powi(t as i32) / (1.0 - r)),
            (PsiFamily::HarmonicWeight, 1) => polylog(1, r),
            (PsiFamily::ZetaWeight, 1) => polylog(2, r),
            (PsiFamily::Hypergeometric(p), _) => hypergeometric_tail(p, r, t),
            (PsiFamily::Custom(CustomFamily { sum_from_one: Some(sum), .. }), 1) => Ok(sum(r)),
            _ => self.weighted_series(r, t, |_, psi| psi, |_, q| q),
        }
    }

    /// `Psi_0(r), ..., Psi_upto(r)` via one certified tail and backward
    /// accumulation.
    pub fn tail_sums(&self, r: f64, upto: usize) -> Result<Vec<f64>> {
        let psi = self.terms(r, upto + 1)?;
        let mut out = vec![0.0; upto + 1];
        let mut acc = self.sum_from(upto.max(1), r)?;
        if upto == 0 {
            out[0] = psi[0] + acc;
            return Ok(out);
        }
        out[upto] = acc;
        for t in (0..upto).rev() {
            acc += psi[t];
            out[t] = acc;
        }
        Ok(out)
    }

    /// `sum_{n>=1} n psi_n(r)^2`.
    pub fn weighted_square_sum(&self, r: f64) -> Result<f64> {
        check_unit_interval("r", r)?;
        match self {
            PsiFamily::Geometric => {
                let r2 = r * r;
                Ok(r2 / ((1.0 - r2) * (1.0 - r2)))
            }
            PsiFamily::HarmonicWeight => polylog(1, r * r),
            PsiFamily::ZetaWeight => polylog(3, r * r),
            _ => self.weighted_series(
                r,
                1,
                |n, psi| n as f64 * psi * psi,
                |n, q| (n + 1) as f64 / n as f64 * q * q,
            ),
        }
    }

    /// `sum_{k>=m} k psi_k(r)`, used to bound truncated refined terms.
    pub(crate) fn moment_tail(&self, m: usize, r: f64) -> Result<f64> {
        let m = m.max(1);
        self.weighted_series(r, m, |n, psi| n as f64 * psi, |n, q| (n + 1) as f64 / n as f64 * q)
    }

    /// Whether `psi_{n+1}(r) <= psi_n(r)` for `1 <= n < n_max`; for the
    /// hypergeometric family also `(a+n)(b+n) r <= (c+n)(1+n)` for
    /// `0 <= n < n_max`.
    pub fn is_decreasing_at(&self, r: f64, n_max: usize) -> bool {
        let Ok(psi) = self.terms(r, n_max + 1) else {
            return false;
        };
        let monotone = (1..n_max).all(|n| psi[n + 1] <= psi[n] + DECREASE_SLACK);
        match self {
            PsiFamily::Hypergeometric(p) => monotone && p.termwise_decreasing(r, n_max),
            _ => monotone,
        }
    }

    /// Identifier accepted by [`PsiFamily::from_str`].
    pub fn id(&self) -> String {
        match self {
            PsiFamily::Geometric => "geometric".into(),
            PsiFamily::HarmonicWeight => "harmonic".into(),
            PsiFamily::ZetaWeight => "zeta2".into(),
            PsiFamily::Hypergeometric(p) => format!("hyp:{},{},{}", p.a, p.b, p.c),
            PsiFamily::Custom(c) => format!("custom:{}", c.name),
        }
    }
}

impl fmt::Display for PsiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for PsiFamily {
    type Err = BohrError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "geometric" => Ok(PsiFamily::Geometric),
            "harmonic" => Ok(PsiFamily::HarmonicWeight),
            "zeta2" => Ok(PsiFamily::ZetaWeight),
            other => {
                let Some(rest) = other.strip_prefix("hyp:") else {
                    return Err(BohrError::InvalidParameter(format!("unknown family '{other}'")));
                };
                let parts = rest
                    .split(',')
                    .map(|x| x.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| BohrError::InvalidParameter(format!("bad hyp parameters '{rest}': {e}")))?;
                match parts.as_slice() {
                    [a, b, c] => Ok(PsiFamily::Hypergeometric(HypergeometricParams::new(*a, *b, *c)?)),
                    _ => Err(BohrError::InvalidParameter(format!(
                        "hyp family needs three parameters a,b,c, got '{rest}'"
                    ))),
                }
            }
        }
    }
}
