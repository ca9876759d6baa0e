//! Radius functionals and their minimal positive roots.
//!
//! Each theorem variant reduces to a scalar functional `phi(r)` on `[0, 1)`
//! with `phi(0) < 0`; the sharp radius is the first point where it reaches
//! zero. Roots are located by a uniform scan followed by bisection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_unit_interval, BohrError, Result};
use crate::psi_family::PsiFamily;
use crate::special_fn::HypergeometricParams;

/// Default scan step for locating the first sign change.
pub const SCAN_STEP: f64 = 1e-3;

/// Right end of the scanned interval.
pub const SCAN_UPPER: f64 = 1.0 - 1e-6;

/// Default bisection tolerance.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Number of psi terms checked for monotonicity at each evaluation.
pub const DECREASE_CHECK_TERMS: usize = 64;

/// Truncation order used for the convolution hypothesis check at `r = 1`.
pub const CONVOLUTION_CHECK_TERMS: usize = 512;

/// Non-negative polynomial `G(x) = c_1 x + ... + c_N x^N`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PolynomialG {
    coefficients: Vec<f64>,
}

impl PolynomialG {
    /// Builds `G` from `c_1, ..., c_N`; every coefficient must be finite and `>= 0`.
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if let Some(c) = coefficients.iter().find(|c| !(c.is_finite() && **c >= 0.0)) {
            return Err(BohrError::InvalidParameter(format!(
                "G coefficients must be non-negative, got {c}"
            )));
        }
        Ok(Self { coefficients })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `G(x) = x`.
    pub fn identity() -> Self {
        Self {
            coefficients: vec![1.0],
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| (acc + c) * x)
    }
}

impl FromStr for PolynomialG {
    type Err = BohrError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let coefficients = s
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| BohrError::InvalidParameter(format!("bad G coefficients '{s}': {e}")))?;
        Self::new(coefficients)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Improved majorant with `G` applied to the area-type sum.
    T1,
    /// `T1` with `G = 0`.
    C1,
    /// Refined majorant with `G`.
    T2,
    /// `T2` with `G = 0`.
    C2,
    /// `|h(z)|`, `|h'(z)|` refined Bohr-Rogosinski form.
    T3,
    /// `|h(z)|^2`, `|h'(z)|` refined Bohr-Rogosinski form.
    T4,
    /// Hadamard product with `2F1(a, b; c; z)`.
    Convolution,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::T1,
        Theorem::C1,
        Theorem::T2,
        Theorem::C2,
        Theorem::T3,
        Theorem::T4,
        Theorem::Convolution,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::T1 => "t1",
            Theorem::C1 => "c1",
            Theorem::T2 => "t2",
            Theorem::C2 => "c2",
            Theorem::T3 => "t3",
            Theorem::T4 => "t4",
            Theorem::Convolution => "conv",
        }
    }

    /// Whether the majorant carries the `|a_n|^2 (psi_{2n}/(1+|a_0|) + Psi_{2n+1})` term.
    pub fn is_refined(self) -> bool {
        matches!(self, Theorem::T2 | Theorem::C2 | Theorem::T3 | Theorem::T4)
    }

    /// Whether `G` participates.
    pub fn uses_g(self) -> bool {
        matches!(self, Theorem::T1 | Theorem::T2)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = BohrError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t1" => Ok(Theorem::T1),
            "c1" => Ok(Theorem::C1),
            "t2" => Ok(Theorem::T2),
            "c2" => Ok(Theorem::C2),
            "t3" => Ok(Theorem::T3),
            "t4" => Ok(Theorem::T4),
            "conv" | "convolution" => Ok(Theorem::Convolution),
            other => Err(BohrError::InvalidParameter(format!("unknown theorem '{other}'"))),
        }
    }
}

/// A theorem instance: which functional, which weights, and the parameters.
#[derive(Debug, Clone)]
pub struct RadiusProblem {
    pub theorem: Theorem,
    pub family: PsiFamily,
    /// Quasiconformal distortion `K >= 1`.
    pub distortion: f64,
    /// Exponent on `|a_0|`, in `(0, 2]`.
    pub p: f64,
    /// Only read by `T1` / `T2`.
    pub g: PolynomialG,
}

impl RadiusProblem {
    pub fn new(theorem: Theorem, family: PsiFamily, distortion: f64, p: f64) -> Result<Self> {
        if theorem == Theorem::Convolution && !matches!(family, PsiFamily::Hypergeometric(_)) {
            return Err(BohrError::InvalidParameter(
                "the convolution theorem needs a hyp:a,b,c family".into(),
            ));
        }
        let problem = Self {
            theorem,
            family,
            distortion,
            p,
            g: PolynomialG::zero(),
        };
        problem.validate()?;
        Ok(problem)
    }

    /// Convolution with `2F1(a, b; c; z)`, i.e. weights `gamma_n r^n`.
    pub fn convolution(params: HypergeometricParams, distortion: f64, p: f64) -> Result<Self> {
        Self::new(Theorem::Convolution, PsiFamily::Hypergeometric(params), distortion, p)
    }

    pub fn with_g(mut self, g: PolynomialG) -> Self {
        self.g = g;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.distortion.is_finite() && self.distortion >= 1.0) {
            return Err(BohrError::InvalidParameter(format!(
                "K = {} must be >= 1",
                self.distortion
            )));
        }
        if !(self.p > 0.0 && self.p <= 2.0) {
            return Err(BohrError::InvalidParameter(format!("p = {} must lie in (0, 2]", self.p)));
        }
        Ok(())
    }

    /// Dilatation bound `k = (K - 1) / (K + 1)`.
    pub fn dilatation(&self) -> f64 {
        (self.distortion - 1.0) / (self.distortion + 1.0)
    }

    /// `2K / (K + 1) = 1 + k`.
    pub fn majorant_factor(&self) -> f64 {
        2.0 * self.distortion / (self.distortion + 1.0)
    }

    /// The polynomial actually applied: `G` for `T1`/`T2`, zero otherwise.
    pub fn effective_g(&self) -> PolynomialG {
        if self.theorem.uses_g() {
            self.g.clone()
        } else {
            PolynomialG::zero()
        }
    }

    pub fn hypergeometric_params(&self) -> Option<HypergeometricParams> {
        match self.family {
            PsiFamily::Hypergeometric(p) => Some(p),
            _ => None,
        }
    }
}

/// Solved radius with diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// `|phi(radius)|`.
    pub residual: f64,
    /// Final bisection bracket, `phi(lo) < 0 <= phi(hi)`.
    pub bracket: (f64, f64),
    /// `T3`/`T4` only: the minimal root of the auxiliary constraint equation.
    pub constraint_radius_r: Option<f64>,
    pub iterations: usize,
}

/// Value of the theorem's radius functional at `r`.
pub fn phi(problem: &RadiusProblem, r: f64) -> Result<f64> {
    problem.validate()?;
    check_unit_interval("r", r)?;
    if !problem.family.is_decreasing_at(r, DECREASE_CHECK_TERMS) {
        return Err(BohrError::Hypothesis(format!(
            "{} is not decreasing in n at r = {r}",
            problem.family
        )));
    }
    phi_unchecked(problem, r)
}

fn phi_unchecked(problem: &RadiusProblem, r: f64) -> Result<f64> {
    let fam = &problem.family;
    let factor = problem.majorant_factor();
    let k = problem.dilatation();
    let psi0 = fam.psi(0, r)?;
    match problem.theorem {
        Theorem::C1 | Theorem::C2 => Ok(factor * fam.sum_from(1, r)? - 0.5 * problem.p * psi0),
        Theorem::T1 | Theorem::T2 => {
            let g = &problem.g;
            let area = if g.is_zero() { 0.0 } else { g.eval(fam.weighted_square_sum(r)?) };
            Ok(factor * fam.sum_from(1, r)? + area - 0.5 * problem.p * psi0)
        }
        Theorem::T3 | Theorem::T4 => {
            if psi0 == 0.0 {
                return Err(BohrError::Hypothesis(format!("psi_0({r}) = 0")));
            }
            let psi1 = fam.psi(1, r)?;
            let inner = factor * fam.sum_from(2, r)? + k * psi1;
            let (lead, weight) = if problem.theorem == Theorem::T3 { (2.0, 2.0) } else { (1.0, 1.0) };
            Ok(lead * psi1 + weight * (1.0 + r) * (1.0 + r) * inner - (1.0 - r * r) * psi0)
        }
        Theorem::Convolution => {
            let d = problem.distortion;
            Ok(fam.sum_from(1, r)? - problem.p * (d + 1.0) / (4.0 * d))
        }
    }
}

/// Auxiliary constraint `c * psi_1(r) - (1 - r^2) psi_0(r)`: `c = 2` for `T3`,
/// `c = 1` for `T4`.
fn constraint_fn(problem: &RadiusProblem, r: f64) -> Result<f64> {
    let fam = &problem.family;
    let c = if problem.theorem == Theorem::T3 { 2.0 } else { 1.0 };
    Ok(c * fam.psi(1, r)? - (1.0 - r * r) * fam.psi(0, r)?)
}

/// First sign change of `f` on the scan grid, refined by bisection.
fn first_root<F>(mut f: F, step: f64, tol: f64) -> Result<RadiusResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut lo = 0.0;
    let mut f_lo = f(lo)?;
    if f_lo >= 0.0 {
        return Err(BohrError::Hypothesis(format!(
            "radius functional is non-negative at r = 0 ({f_lo})"
        )));
    }
    let mut hi = None;
    let mut i = 1usize;
    loop {
        let r = (i as f64 * step).min(SCAN_UPPER);
        let v = f(r)?;
        if v >= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
        f_lo = v;
        if r >= SCAN_UPPER {
            break;
        }
        i += 1;
    }
    let Some(mut hi) = hi else {
        return Err(BohrError::NoRoot { upper: SCAN_UPPER });
    };
    debug_assert!(f_lo < 0.0);
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let radius = 0.5 * (lo + hi);
    let residual = f(radius)?.abs();
    Ok(RadiusResult {
        radius,
        residual,
        bracket: (lo, hi),
        constraint_radius_r: None,
        iterations,
    })
}

/// Minimal positive root of the problem's functional, to bracket width `tol`.
pub fn solve_radius(problem: &RadiusProblem, tol: f64) -> Result<RadiusResult> {
    solve_radius_with_step(problem, tol, SCAN_STEP)
}

/// [`solve_radius`] with an explicit scan step.
pub fn solve_radius_with_step(problem: &RadiusProblem, tol: f64, step: f64) -> Result<RadiusResult> {
    if !(1e-14..=1e-6).contains(&tol) {
        return Err(BohrError::InvalidParameter(format!(
            "tolerance {tol:e} outside [1e-14, 1e-6]"
        )));
    }
    if !(step > 0.0 && step < 0.5) {
        return Err(BohrError::InvalidParameter(format!("scan step {step} outside (0, 0.5)")));
    }
    problem.validate()?;
    if let Some(params) = problem.hypergeometric_params() {
        if problem.theorem == Theorem::Convolution
            && !params.termwise_decreasing(1.0, CONVOLUTION_CHECK_TERMS)
        {
            return Err(BohrError::Hypothesis(format!(
                "(a+n)(b+n) r <= (c+n)(1+n) fails at r = 1 for {}",
                problem.family
            )));
        }
    }
    let mut result = first_root(|r| phi(problem, r), step, tol)?;
    log::debug!(
        "{} {} K={} p={}: radius {} after {} bisections",
        problem.theorem,
        problem.family,
        problem.distortion,
        problem.p,
        result.radius,
        result.iterations
    );
    if matches!(problem.theorem, Theorem::T3 | Theorem::T4) {
        let constraint = first_root(|r| constraint_fn(problem, r), step, tol)?;
        if result.radius > constraint.radius + tol {
            return Err(BohrError::Hypothesis(format!(
                "radius {} exceeds the constraint radius {}",
                result.radius, constraint.radius
            )));
        }
        result.constraint_radius_r = Some(constraint.radius);
    }
    Ok(result)
}

/// Known closed-form radii, used as test oracles.
///
/// For the geometric family with `G = 0`, `phi = (2K/(K+1)) r/(1-r) - p/2`
/// vanishes at `r = p(K+1) / (4K + p(K+1))`; `p = 1` and `p = 2` give
/// `(K+1)/(5K+1)` and `(K+1)/(3K+1)`.
pub fn closed_form_radius(problem: &RadiusProblem) -> Option<f64> {
    let geometric = matches!(problem.family, PsiFamily::Geometric);
    let catalogued = match problem.theorem {
        Theorem::C1 | Theorem::C2 => geometric,
        Theorem::T1 | Theorem::T2 => geometric && problem.g.is_zero(),
        _ => false,
    };
    if !catalogued {
        return None;
    }
    let k = problem.distortion;
    let m = problem.p * (k + 1.0);
    Some(m / (4.0 * k + m))
}
