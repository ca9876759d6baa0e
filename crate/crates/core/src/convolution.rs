//! Hadamard convolution of harmonic maps with `2F1(a, b; c; z)`.

use crate::error::{check_unit_interval, BohrError, Result};
use crate::function_lab::{AnalyticSeries, HarmonicMap, TAIL_BUDGET};
use crate::psi_family::PsiFamily;
use crate::radius::CONVOLUTION_CHECK_TERMS;
use crate::special_fn::HypergeometricParams;

/// `f * F = h * F + conj(g * F)` together with the inputs.
#[derive(Debug, Clone)]
pub struct ConvolvedMap {
    pub base: HarmonicMap,
    pub params: HypergeometricParams,
    /// `gamma_0, ..., gamma_M`.
    pub gamma: Vec<f64>,
    pub map: HarmonicMap,
}

/// Multiplies the coefficients of `h` and `g` by `gamma_n` up to `order`.
pub fn convolve(map: &HarmonicMap, params: HypergeometricParams, order: usize) -> Result<ConvolvedMap> {
    if order > map.order() {
        return Err(BohrError::Precondition(format!(
            "order {order} exceeds the map order {}",
            map.order()
        )));
    }
    let gamma = params.gamma_coefficients(order + 1);
    let scale = |s: &AnalyticSeries| -> AnalyticSeries {
        let coefficients = s.coefficients.iter().zip(&gamma).map(|(c, g)| c * *g).collect();
        AnalyticSeries::new(coefficients, None)
    };
    let convolved = HarmonicMap::new(scale(&map.h), scale(&map.g), map.k)?;
    Ok(ConvolvedMap {
        base: map.clone(),
        params,
        gamma,
        map: convolved,
    })
}

/// `(lhs, rhs)` of the Bohr inequality for the convolved map:
/// `|a_0|^p + sum |a_n gamma_n| r^n + sum |b_n gamma_n| r^n` against
/// `||h||_inf`.
///
/// Requires `gamma_n` non-increasing (checked termwise up to 512 terms)
/// and `map.k <= (K - 1)/(K + 1)`.
pub fn convolution_bohr_check(
    map: &HarmonicMap,
    params: HypergeometricParams,
    distortion: f64,
    p: f64,
    r: f64,
) -> Result<(f64, f64)> {
    check_unit_interval("r", r)?;
    if !(distortion.is_finite() && distortion >= 1.0) {
        return Err(BohrError::InvalidParameter(format!("K = {distortion} must be >= 1")));
    }
    if !(p > 0.0 && p <= 2.0) {
        return Err(BohrError::InvalidParameter(format!("p = {p} must lie in (0, 2]")));
    }
    if !params.termwise_decreasing(1.0, CONVOLUTION_CHECK_TERMS) {
        return Err(BohrError::Hypothesis(format!(
            "(a+n)(b+n) <= (c+n)(1+n) fails for a={}, b={}, c={}",
            params.a, params.b, params.c
        )));
    }
    let k = (distortion - 1.0) / (distortion + 1.0);
    if map.k > k + 1e-15 {
        return Err(BohrError::Hypothesis(format!(
            "map dilatation {} exceeds (K-1)/(K+1) = {k}",
            map.k
        )));
    }
    let s = map
        .h
        .sup_norm
        .ok_or_else(|| BohrError::Precondition("the series carries no sup norm".into()))?;
    let m = map.order();
    let conv = convolve(map, params, m)?;

    let weighted = |series: &AnalyticSeries| -> f64 {
        let mut power = 1.0;
        let mut sum = 0.0;
        for c in series.coefficients.iter().skip(1) {
            power *= r;
            sum += c.norm() * power;
        }
        sum
    };
    let a0 = conv.map.h.coefficient(0).norm();
    let lhs = a0.powf(p) + weighted(&conv.map.h) + weighted(&conv.map.g);

    let base_a0 = map.h.coefficient(0).norm();
    let excess = (s * s - base_a0 * base_a0).max(0.0);
    let tail = (excess / s + map.k * excess.sqrt()) * PsiFamily::Hypergeometric(params).sum_from(m + 1, r)?;
    if tail.is_nan() || tail > TAIL_BUDGET {
        return Err(BohrError::TruncationInsufficient {
            bound: tail,
            budget: TAIL_BUDGET,
        });
    }
    Ok((lhs, s))
}
