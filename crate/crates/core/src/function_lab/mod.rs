//! Concrete bounded analytic functions and harmonic test maps, and the
//! left-hand sides of every majorant inequality evaluated on them.
//!
//! Test maps are built so that `||h||_inf` is known exactly: Möbius atoms
//! `(a - z)/(1 - a z)` and finite Blaschke products, with co-analytic part
//! `g = lambda k (h - h(0))` so that `|g'| = k |h'|`.

pub mod lemmas;
pub mod power_series;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_unit_interval, BohrError, Result};
use crate::psi_family::PsiFamily;
use crate::radius::{PolynomialG, RadiusProblem, RadiusResult, Theorem};

/// Default truncation order of test maps.
pub const DEFAULT_ORDER: usize = 512;

/// Largest certified truncation error tolerated in a majorant value.
pub const TAIL_BUDGET: f64 = 1e-10;

/// A witness must exceed the bound by more than this.
pub const VIOLATION_MARGIN: f64 = 1e-10;

/// Truncated Taylor series `h(z) = sum_{n<=M} a_n z^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSeries {
    pub coefficients: Vec<Complex64>,
    /// `||h||_inf` when known by construction.
    pub sup_norm: Option<f64>,
}

impl AnalyticSeries {
    pub fn new(coefficients: Vec<Complex64>, sup_norm: Option<f64>) -> Self {
        Self { coefficients, sup_norm }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, n: usize) -> Complex64 {
        self.coefficients.get(n).copied().unwrap_or_default()
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.norm()).collect()
    }

    pub fn is_unit_norm(&self) -> bool {
        self.sup_norm.is_some_and(|s| (s - 1.0).abs() <= 1e-15)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        power_series::eval_with_derivative(&self.coefficients, z).0
    }

    /// `(h(z), h'(z))`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        power_series::eval_with_derivative(&self.coefficients, z)
    }

    /// Multiplies by a unimodular constant; the sup norm is unchanged.
    pub fn rotate(mut self, angle: f64) -> Self {
        let u = Complex64::from_polar(1.0, angle);
        for c in &mut self.coefficients {
            *c *= u;
        }
        self
    }
}

/// `f = h + conj(g)` with `g(0) = 0` and dilatation bound `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    pub h: AnalyticSeries,
    pub g: AnalyticSeries,
    pub k: f64,
}

impl HarmonicMap {
    pub fn new(h: AnalyticSeries, g: AnalyticSeries, k: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k) {
            return Err(BohrError::Domain {
                what: "dilatation k",
                value: k,
                domain: "[0, 1)",
            });
        }
        if g.coefficient(0) != Complex64::default() {
            return Err(BohrError::InvalidParameter("g must vanish at the origin".into()));
        }
        Ok(Self { h, g, k })
    }

    /// `g = lambda k (h - h(0))`, the extremal co-analytic part.
    pub fn from_analytic(h: AnalyticSeries, k: f64, lambda: Complex64) -> Result<Self> {
        let mut g: Vec<Complex64> = h.coefficients.iter().map(|&c| lambda * k * c).collect();
        if let Some(first) = g.first_mut() {
            *first = Complex64::default();
        }
        Self::new(h, AnalyticSeries::new(g, None), k)
    }

    /// `K = (1 + k) / (1 - k)`.
    pub fn distortion(&self) -> f64 {
        (1.0 + self.k) / (1.0 - self.k)
    }

    pub fn order(&self) -> usize {
        self.h.order().max(self.g.order())
    }

    /// Largest `|g'(z)| / |h'(z)|` over a polar grid of radius `rho`;
    /// `None` when `h'` vanishes at a grid point.
    pub fn max_dilatation_on_circle(&self, rho: f64, samples: usize) -> Option<f64> {
        let mut worst = 0.0f64;
        for j in 0..samples {
            let z = Complex64::from_polar(rho, std::f64::consts::TAU * j as f64 / samples as f64);
            let dh = self.h.eval_with_derivative(z).1.norm();
            let dg = self.g.eval_with_derivative(z).1.norm();
            if dh == 0.0 {
                return None;
            }
            worst = worst.max(dg / dh);
        }
        Some(worst)
    }
}

/// `h(z) = (a - z)/(1 - a z)` with `g = lambda k (h - a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusAtom {
    pub a: f64,
    pub lambda: Complex64,
    pub k: f64,
}

impl MobiusAtom {
    pub fn new(a: f64, lambda: Complex64, k: f64) -> Result<Self> {
        check_unit_interval("Möbius parameter a", a)?;
        if (lambda.norm() - 1.0).abs() > 1e-12 {
            return Err(BohrError::InvalidParameter(format!("|lambda| = {} must be 1", lambda.norm())));
        }
        if !(0.0..1.0).contains(&k) {
            return Err(BohrError::Domain {
                what: "dilatation k",
                value: k,
                domain: "[0, 1)",
            });
        }
        Ok(Self { a, lambda, k })
    }

    /// `A_0 = a`, `A_n = -(1 - a^2) a^{n-1}`.
    pub fn h_coefficients(&self, order: usize) -> Vec<Complex64> {
        let a = self.a;
        let mut out = Vec::with_capacity(order + 1);
        out.push(Complex64::new(a, 0.0));
        let mut pow = 1.0;
        for _ in 1..=order {
            out.push(Complex64::new(-(1.0 - a * a) * pow, 0.0));
            pow *= a;
        }
        out
    }
}

/// Truncated harmonic map of a Möbius atom; `||h||_inf = 1`.
pub fn mobius_coefficients(atom: &MobiusAtom, order: usize) -> Result<HarmonicMap> {
    if order == 0 {
        return Err(BohrError::Precondition("truncation order must be >= 1".into()));
    }
    let h = AnalyticSeries::new(atom.h_coefficients(order), Some(1.0));
    HarmonicMap::from_analytic(h, atom.k, atom.lambda)
}

/// Taylor coefficients of `prod_j (w_j - z)/(1 - conj(w_j) z)` up to `order`.
pub fn blaschke_product(zeros: &[Complex64], order: usize) -> Result<AnalyticSeries> {
    if order == 0 || order < zeros.len() {
        return Err(BohrError::Precondition(format!(
            "order {order} must be >= 1 and >= the number of zeros {}",
            zeros.len()
        )));
    }
    let mut acc = vec![Complex64::new(1.0, 0.0)];
    for &w in zeros {
        if w.norm().is_nan() || w.norm() >= 1.0 {
            return Err(BohrError::ZeroOutsideDisk(w));
        }
        let factor = power_series::div(&[w, Complex64::new(-1.0, 0.0)], &[Complex64::new(1.0, 0.0), -w.conj()], order)?;
        acc = power_series::mul(&acc, &factor, order);
    }
    acc.resize(order + 1, Complex64::default());
    Ok(AnalyticSeries::new(acc, Some(1.0)))
}

/// `psi_0..psi_T` and `Psi_0..Psi_T` at one radius, shared by all
/// coefficient sums of a majorant.
#[derive(Debug, Clone)]
pub struct Weights {
    pub r: f64,
    pub psi: Vec<f64>,
    pub tails: Vec<f64>,
}

impl Weights {
    pub fn new(family: &PsiFamily, r: f64, upto: usize) -> Result<Self> {
        Ok(Self {
            r,
            psi: family.terms(r, upto + 1)?,
            tails: family.tail_sums(r, upto)?,
        })
    }

    /// Weights long enough for maps of truncation order `m`.
    pub fn for_order(family: &PsiFamily, r: f64, m: usize) -> Result<Self> {
        Self::new(family, r, 2 * m + 2)
    }

    /// `sum_{n>=from} |c_n| psi_n`.
    pub fn linear(&self, moduli: &[f64], from: usize) -> f64 {
        moduli.iter().zip(&self.psi).skip(from).map(|(c, w)| c * w).sum()
    }

    /// `sum_{n>=1} n |c_n|^2 psi_n^2`.
    pub fn area(&self, moduli: &[f64]) -> f64 {
        moduli
            .iter()
            .zip(&self.psi)
            .enumerate()
            .skip(1)
            .map(|(n, (c, w))| n as f64 * (c * w) * (c * w))
            .sum()
    }

    /// `sum_{n>=1} |c_n|^2 (psi_{2n} / (1 + |c_0|) + Psi_{2n+1})`.
    pub fn refined(&self, moduli: &[f64]) -> f64 {
        let c0 = moduli.first().copied().unwrap_or(0.0);
        moduli
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * c * (self.psi[2 * n] / (1.0 + c0) + self.tails[2 * n + 1]))
            .sum()
    }
}

/// Parts of the majorant before the theorem-specific combination.
#[derive(Debug, Clone, Copy)]
struct MajorantParts {
    a0: f64,
    linear_from_1: f64,
    linear_from_2: f64,
    co_analytic: f64,
    area: f64,
    refined: f64,
}

fn parts(map: &HarmonicMap, w: &Weights) -> MajorantParts {
    let a = map.h.moduli();
    let b = map.g.moduli();
    MajorantParts {
        a0: a.first().copied().unwrap_or(0.0),
        linear_from_1: w.linear(&a, 1),
        linear_from_2: w.linear(&a, 2),
        co_analytic: w.linear(&b, 1),
        area: w.area(&a),
        refined: w.refined(&a),
    }
}

/// Left-hand side of the selected theorem's inequality for `map` at radius `r`.
///
/// `z` is only read by `T3`/`T4` and must satisfy `|z| = r`; it defaults to
/// `-r`. The truncated coefficient tail is bounded with `|a_n| <= (s^2 -
/// |a_0|^2)/s` and `sum |b_n|^2 <= k^2 (s^2 - |a_0|^2)`, `s = ||h||_inf`; the
/// call fails if that bound exceeds [`TAIL_BUDGET`].
pub fn majorant_lhs(
    map: &HarmonicMap,
    theorem: Theorem,
    family: &PsiFamily,
    r: f64,
    p: f64,
    g: &PolynomialG,
    z: Option<Complex64>,
) -> Result<f64> {
    check_unit_interval("r", r)?;
    let w = Weights::for_order(family, r, map.order())?;
    majorant_lhs_with_weights(map, theorem, family, &w, p, g, z)
}

/// [`majorant_lhs`] with precomputed weights, for sweeps over many maps.
pub fn majorant_lhs_with_weights(
    map: &HarmonicMap,
    theorem: Theorem,
    family: &PsiFamily,
    w: &Weights,
    p: f64,
    g: &PolynomialG,
    z: Option<Complex64>,
) -> Result<f64> {
    let r = w.r;
    if !(p > 0.0 && p <= 2.0) {
        return Err(BohrError::InvalidParameter(format!("p = {p} must lie in (0, 2]")));
    }
    let m = map.order();
    if w.psi.len() < 2 * m + 3 {
        return Err(BohrError::Precondition(format!(
            "weights cover {} terms, order {m} needs {}",
            w.psi.len(),
            2 * m + 3
        )));
    }
    let s = map.h.sup_norm.ok_or_else(|| {
        BohrError::Precondition("majorant needs ||h||_inf; the series carries no sup norm".into())
    })?;
    let parts = parts(map, w);
    let g = if theorem.uses_g() { g.clone() } else { PolynomialG::zero() };

    // certified bound on everything beyond the stored coefficients
    let excess = (s * s - parts.a0 * parts.a0).max(0.0);
    let coef_bound = excess / s;
    let co_bound = map.k * excess.sqrt();
    let mut tail = (coef_bound + co_bound) * w.tails[m + 1];
    if theorem.is_refined() {
        tail += coef_bound * coef_bound * (w.tails[2 * m + 2] + family.moment_tail(2 * m + 2, r)?);
    }
    if !g.is_zero() {
        let delta = coef_bound * coef_bound * w.psi[m + 1] * family.moment_tail(m + 1, r)?;
        tail += g.eval(parts.area + delta) - g.eval(parts.area);
    }

    let value = match theorem {
        Theorem::T1 | Theorem::C1 | Theorem::T2 | Theorem::C2 | Theorem::Convolution => {
            let mut v = parts.a0.powf(p) * w.psi[0] + parts.linear_from_1 + parts.co_analytic;
            if !g.is_zero() {
                v += g.eval(parts.area);
            }
            if theorem.is_refined() {
                v += parts.refined;
            }
            v
        }
        Theorem::T3 | Theorem::T4 => {
            let z = match z {
                Some(z) if (z.norm() - r).abs() > 1e-12 => {
                    return Err(BohrError::Precondition(format!("|z| = {} differs from r = {r}", z.norm())));
                }
                Some(z) => z,
                None => Complex64::new(-r, 0.0),
            };
            let (hz, dhz) = map.h.eval_with_derivative(z);
            let rm = r.powi(m as i32);
            let err_h = coef_bound * rm * r / (1.0 - r);
            let err_dh = coef_bound * rm * ((m + 1) as f64 - m as f64 * r) / ((1.0 - r) * (1.0 - r));
            let modulus = hz.norm();
            let lead = if theorem == Theorem::T3 {
                tail += w.psi[0] * err_h;
                modulus
            } else {
                tail += w.psi[0] * (2.0 * (modulus + err_h) * err_h);
                modulus * modulus
            };
            tail += w.psi[1] * err_dh;
            lead * w.psi[0] + dhz.norm() * w.psi[1] + parts.linear_from_2 + parts.co_analytic + parts.refined
        }
    };
    if tail.is_nan() || tail > TAIL_BUDGET {
        return Err(BohrError::TruncationInsufficient {
            bound: tail,
            budget: TAIL_BUDGET,
        });
    }
    Ok(value)
}

/// Right-hand side `psi_0(r) ||h||_inf`.
pub fn majorant_rhs(map: &HarmonicMap, family: &PsiFamily, r: f64) -> Result<f64> {
    let s = map
        .h
        .sup_norm
        .ok_or_else(|| BohrError::Precondition("the series carries no sup norm".into()))?;
    Ok(family.psi(0, r)? * s)
}

/// A Möbius atom whose majorant exceeds the bound beyond the radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub a: f64,
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Default `a` values for sharpness probes.
pub const DEFAULT_PROBE_GRID: [f64; 4] = [0.9, 0.99, 0.999, 0.9999];

/// Evaluates Möbius atoms at `r = radius + epsilon` and returns the first one
/// violating the inequality, if any.
pub fn sharpness_probe(
    problem: &RadiusProblem,
    solved: &RadiusResult,
    epsilon: f64,
    a_grid: &[f64],
) -> Result<Option<Witness>> {
    if !(epsilon > 0.0 && epsilon < 1.0 - solved.radius) {
        return Err(BohrError::Precondition(format!(
            "epsilon = {epsilon} must lie in (0, {})",
            1.0 - solved.radius
        )));
    }
    let r = solved.radius + epsilon;
    let family = &problem.family;
    let weights = Weights::for_order(family, r, DEFAULT_ORDER)?;
    let g = problem.effective_g();
    for &a in a_grid {
        let atom = MobiusAtom::new(a, Complex64::new(1.0, 0.0), problem.dilatation())?;
        let map = mobius_coefficients(&atom, DEFAULT_ORDER)?;
        let lhs = majorant_lhs_with_weights(&map, problem.theorem, family, &weights, problem.p, &g, None)?;
        let rhs = majorant_rhs(&map, family, r)?;
        log::trace!("probe a={a} r={r}: lhs={lhs} rhs={rhs}");
        if lhs > rhs + VIOLATION_MARGIN {
            return Ok(Some(Witness { a, r, lhs, rhs }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::{solve_radius, DEFAULT_TOL};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn mobius_examples() {
        let map = mobius_coefficients(&MobiusAtom::new(0.0, c(1.0), 0.0).unwrap(), 3).unwrap();
        assert_eq!(map.h.coefficients, vec![c(0.0), c(-1.0), c(0.0), c(0.0)]);
        assert!(map.g.coefficients.iter().all(|b| *b == Complex64::default()));

        let map = mobius_coefficients(&MobiusAtom::new(0.5, c(1.0), 0.0).unwrap(), 3).unwrap();
        let expected = [0.5, -0.75, -0.375, -0.1875];
        for (got, want) in map.h.coefficients.iter().zip(expected) {
            assert!((got.re - want).abs() < 1e-16 && got.im == 0.0);
        }
        // series division oracle: (a - z) * sum (a z)^n
        let oracle = power_series::div(&[c(0.5), c(-1.0)], &[c(1.0), c(-0.5)], 3).unwrap();
        for (got, want) in map.h.coefficients.iter().zip(&oracle) {
            assert!((got - want).norm() < 1e-16);
        }

        let map = mobius_coefficients(&MobiusAtom::new(0.5, c(1.0), 1.0 / 3.0).unwrap(), 2).unwrap();
        let expected = [0.0, -0.25, -0.125];
        for (got, want) in map.g.coefficients.iter().zip(expected) {
            assert!((got.re - want).abs() < 1e-16);
        }
        assert!((map.distortion() - 2.0).abs() < 1e-15);
        assert!(mobius_coefficients(&MobiusAtom::new(0.5, c(1.0), 0.0).unwrap(), 0).is_err());
        assert!(MobiusAtom::new(1.0, c(1.0), 0.0).is_err());
        assert!(MobiusAtom::new(0.5, c(2.0), 0.0).is_err());
    }

    #[test]
    fn blaschke_examples() {
        let b = blaschke_product(&[c(0.0)], 2).unwrap();
        assert_eq!(b.coefficients, vec![c(0.0), c(-1.0), c(0.0)]);
        assert_eq!(b.sup_norm, Some(1.0));

        let b = blaschke_product(&[c(0.5)], 3).unwrap();
        for (got, want) in b.coefficients.iter().zip([0.5, -0.75, -0.375, -0.1875]) {
            assert!((got.re - want).abs() < 1e-16);
        }

        let b = blaschke_product(&[c(0.3), c(-0.4)], 4).unwrap();
        let f1 = MobiusAtom::new(0.3, c(1.0), 0.0).unwrap().h_coefficients(4);
        let f2: Vec<Complex64> = (0..=4)
            .map(|n| if n == 0 { c(-0.4) } else { c(-(1.0 - 0.16) * (-0.4f64).powi(n - 1)) })
            .collect();
        let oracle = power_series::mul(&f1, &f2, 4);
        for (got, want) in b.coefficients.iter().zip(&oracle) {
            assert!((got - want).norm() < 1e-15);
        }
    }

    #[test]
    fn blaschke_rejects_bad_zeros() {
        assert!(matches!(blaschke_product(&[c(1.0)], 3), Err(BohrError::ZeroOutsideDisk(_))));
        assert!(matches!(
            blaschke_product(&[Complex64::new(0.6, 0.8)], 3),
            Err(BohrError::ZeroOutsideDisk(_))
        ));
        assert!(blaschke_product(&[c(0.1), c(0.2)], 1).is_err());
    }

    #[test]
    fn blaschke_is_unimodular_on_the_circle() {
        let zeros = [Complex64::new(0.3, 0.2), Complex64::new(-0.5, 0.1)];
        let b = blaschke_product(&zeros, 200).unwrap();
        for j in 0..32 {
            let z = Complex64::from_polar(0.999, j as f64);
            let direct: Complex64 = zeros.iter().map(|&w| (w - z) / (1.0 - w.conj() * z)).product();
            assert!((b.eval(z) - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn extremal_map_has_constant_dilatation() {
        let h = blaschke_product(&[Complex64::new(0.2, 0.3)], 64).unwrap();
        let map = HarmonicMap::from_analytic(h, 0.4, Complex64::from_polar(1.0, 0.7)).unwrap();
        let d = map.max_dilatation_on_circle(0.5, 24).unwrap();
        assert!((d - 0.4).abs() < 1e-12);
        assert!(HarmonicMap::new(map.h.clone(), AnalyticSeries::new(vec![c(1.0)], None), 0.1).is_err());
    }

    #[test]
    fn majorant_examples() {
        let zero = PolynomialG::zero();
        let minus_z = mobius_coefficients(&MobiusAtom::new(0.0, c(1.0), 0.0).unwrap(), 64).unwrap();
        let v = majorant_lhs(&minus_z, Theorem::T1, &PsiFamily::Geometric, 1.0 / 3.0, 1.0, &zero, None).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);

        let atom = mobius_coefficients(&MobiusAtom::new(0.5, c(1.0), 0.0).unwrap(), DEFAULT_ORDER).unwrap();
        let v = majorant_lhs(&atom, Theorem::T1, &PsiFamily::Geometric, 0.2, 1.0, &zero, None).unwrap();
        let oracle: f64 = 0.5 + (1..200).map(|n| 0.75 * 0.5f64.powi(n - 1) * 0.2f64.powi(n)).sum::<f64>();
        assert!((v - 2.0 / 3.0).abs() < 1e-15);
        assert!((oracle - 2.0 / 3.0).abs() < 1e-15);

        let v = majorant_lhs(
            &minus_z,
            Theorem::T4,
            &PsiFamily::Geometric,
            0.3,
            1.0,
            &zero,
            Some(c(-0.3)),
        )
        .unwrap();
        // |h|^2 + |h'| r plus the refined term r^2 + r^3/(1-r)
        assert!((v - (0.09 + 0.3 + 0.09 + 0.027 / 0.7)).abs() < 1e-15);
    }

    #[test]
    fn majorant_refined_term_matches_closed_form() {
        // geometric family: sum |a_n|^2 (r^{2n}/(1+|a_0|) + r^{2n+1}/(1-r))
        let a = 0.6;
        let r = 0.3;
        let map = mobius_coefficients(&MobiusAtom::new(a, c(1.0), 0.0).unwrap(), DEFAULT_ORDER).unwrap();
        let zero = PolynomialG::zero();
        let plain = majorant_lhs(&map, Theorem::C1, &PsiFamily::Geometric, r, 1.0, &zero, None).unwrap();
        let refined = majorant_lhs(&map, Theorem::C2, &PsiFamily::Geometric, r, 1.0, &zero, None).unwrap();
        let s2: f64 = (1..400)
            .map(|n| ((1.0 - a * a) * a.powi(n - 1)).powi(2) * r.powi(2 * n))
            .sum();
        let expected = (1.0 / (1.0 + a) + r / (1.0 - r)) * s2;
        assert!((refined - plain - expected).abs() < 1e-15);
    }

    #[test]
    fn majorant_area_term_matches_area_integral_series() {
        let a: f64 = 0.4;
        let r: f64 = 0.35;
        let map = mobius_coefficients(&MobiusAtom::new(a, c(1.0), 0.0).unwrap(), DEFAULT_ORDER).unwrap();
        let g = PolynomialG::new(vec![2.0, 0.5]).unwrap();
        let zero = PolynomialG::zero();
        let with_g = majorant_lhs(&map, Theorem::T1, &PsiFamily::Geometric, r, 1.0, &g, None).unwrap();
        let without = majorant_lhs(&map, Theorem::T1, &PsiFamily::Geometric, r, 1.0, &zero, None).unwrap();
        let area: f64 = (1..400)
            .map(|n| n as f64 * ((1.0 - a * a) * a.powi(n - 1)).powi(2) * r.powi(2 * n))
            .sum();
        assert!((with_g - without - (2.0 * area + 0.5 * area * area)).abs() < 1e-15);
    }

    #[test]
    fn majorant_preconditions() {
        let zero = PolynomialG::zero();
        let map = mobius_coefficients(&MobiusAtom::new(0.5, c(1.0), 0.0).unwrap(), 32).unwrap();
        let bad_z = majorant_lhs(&map, Theorem::T3, &PsiFamily::Geometric, 0.3, 1.0, &zero, Some(c(0.5)));
        assert!(matches!(bad_z, Err(BohrError::Precondition(_))));
        let mut unknown = map.clone();
        unknown.h.sup_norm = None;
        assert!(majorant_lhs(&unknown, Theorem::C1, &PsiFamily::Geometric, 0.3, 1.0, &zero, None).is_err());
        // 32 coefficients cannot certify the tail at r = 0.9
        let short = majorant_lhs(&map, Theorem::C1, &PsiFamily::Geometric, 0.9, 1.0, &zero, None);
        assert!(matches!(short, Err(BohrError::TruncationInsufficient { .. })));
    }

    #[test]
    fn t3_default_point_is_the_extremal_one() {
        let zero = PolynomialG::zero();
        let map = mobius_coefficients(&MobiusAtom::new(0.7, c(1.0), 0.2).unwrap(), DEFAULT_ORDER).unwrap();
        let at_minus_r = majorant_lhs(&map, Theorem::T3, &PsiFamily::Geometric, 0.25, 1.0, &zero, None).unwrap();
        for j in 0..16 {
            let z = Complex64::from_polar(0.25, j as f64 * 0.4);
            let v = majorant_lhs(&map, Theorem::T3, &PsiFamily::Geometric, 0.25, 1.0, &zero, Some(z)).unwrap();
            assert!(v <= at_minus_r + 1e-15);
        }
    }

    #[test]
    fn sharpness_examples() {
        let prob = RadiusProblem::new(Theorem::C1, PsiFamily::Geometric, 1.0, 1.0).unwrap();
        let solved = solve_radius(&prob, DEFAULT_TOL).unwrap();
        let w = sharpness_probe(&prob, &solved, 0.05, &[0.999]).unwrap().unwrap();
        assert!(w.lhs > w.rhs && w.rhs == 1.0 && w.a == 0.999);
        assert!(sharpness_probe(&prob, &solved, 0.0, &[0.999]).is_err());
        assert!(sharpness_probe(&prob, &solved, -0.01, &[0.999]).is_err());

        let t4 = RadiusProblem::new(Theorem::T4, PsiFamily::Geometric, 1.0, 1.0).unwrap();
        let solved = solve_radius(&t4, DEFAULT_TOL).unwrap();
        assert!(sharpness_probe(&t4, &solved, 0.02, &DEFAULT_PROBE_GRID).unwrap().is_some());
    }

    #[test]
    fn no_witness_below_the_radius_side() {
        // just inside the radius nothing violates, so probing a grid of tiny a finds nothing either
        let prob = RadiusProblem::new(Theorem::C1, PsiFamily::Geometric, 2.0, 1.0).unwrap();
        let solved = solve_radius(&prob, DEFAULT_TOL).unwrap();
        assert_eq!(sharpness_probe(&prob, &solved, 0.01, &[0.0, 0.1]).unwrap(), None);
    }
}
