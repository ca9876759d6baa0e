//! Numerical checks of the coefficient inequalities for bounded analytic
//! functions on random finite Blaschke products.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{blaschke_product, HarmonicMap, Weights};
use crate::error::{BohrError, Result};
use crate::psi_family::PsiFamily;

/// A check passes when its slack is at least `-SLACK_TOL`.
pub const SLACK_TOL: f64 = 1e-10;

/// Required accuracy of `|a_1| = 1 - |a_0|^2` on Möbius atoms.
pub const EQUALITY_TOL: f64 = 1e-14;

/// Largest modulus of a random zero.
pub const MAX_ZERO_MODULUS: f64 = 0.95;

const GRID_RADII: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const GRID_ANGLES: usize = 16;
const WEIGHT_RADII: [f64; 8] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];
const EQUALITY_ATOMS: [f64; 5] = [0.0, 0.1, 0.5, 0.9, 0.99];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// `|h(z)| <= (|a_0| + |z|) / (1 + |a_0| |z|)`.
    SchwarzPick,
    /// `|a_n| <= 1 - |a_0|^2` and `|h'(z)| <= (1 - |h(z)|^2) / (1 - |z|^2)`.
    CoefficientBound,
    /// `sum_{j<=k} |a_j|^2 + |a_{2k+1}| <= 1`.
    OddCoefficients,
    /// `sum_{j<k} |a_j|^2 + |a_k|^2 / (1 + |a_0|) + |a_{2k}| <= 1`.
    EvenCoefficients,
    /// `sum |b_n|^2 psi_n <= k^2 sum |a_n|^2 psi_n` for `g = lambda k (h - a_0)`.
    CoAnalytic,
    /// Refined coefficient sum from `n = 1` against `(1 - |a_0|^2) Psi_1`.
    RefinedFromOne,
    /// Refined coefficient sum from `n = 2` against `(1 - |a_0|^2) Psi_2`.
    RefinedFromTwo,
}

impl Lemma {
    pub const ALL: [Lemma; 7] = [
        Lemma::SchwarzPick,
        Lemma::CoefficientBound,
        Lemma::OddCoefficients,
        Lemma::EvenCoefficients,
        Lemma::CoAnalytic,
        Lemma::RefinedFromOne,
        Lemma::RefinedFromTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::SchwarzPick => "schwarz_pick",
            Lemma::CoefficientBound => "coefficient_bound",
            Lemma::OddCoefficients => "odd_coefficients",
            Lemma::EvenCoefficients => "even_coefficients",
            Lemma::CoAnalytic => "co_analytic",
            Lemma::RefinedFromOne => "refined_from_one",
            Lemma::RefinedFromTwo => "refined_from_two",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Smallest slack (bound minus value) seen for one inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaOutcome {
    pub lemma: Lemma,
    pub checks: usize,
    pub min_slack: f64,
}

impl LemmaOutcome {
    fn new(lemma: Lemma) -> Self {
        Self {
            lemma,
            checks: 0,
            min_slack: f64::INFINITY,
        }
    }

    fn record(&mut self, slack: f64) {
        self.checks += 1;
        self.min_slack = self.min_slack.min(slack);
    }

    fn merge(&mut self, other: &LemmaOutcome) {
        self.checks += other.checks;
        self.min_slack = self.min_slack.min(other.min_slack);
    }

    pub fn passed(&self) -> bool {
        self.min_slack >= -SLACK_TOL
    }
}

/// Weights of the three reference families on the check radii.
#[derive(Debug, Clone)]
pub struct LemmaWeights {
    sets: Vec<Weights>,
    order: usize,
}

impl LemmaWeights {
    pub fn new(order: usize) -> Result<Self> {
        let mut sets = Vec::new();
        for family in [PsiFamily::Geometric, PsiFamily::HarmonicWeight, PsiFamily::ZetaWeight] {
            for r in WEIGHT_RADII {
                sets.push(Weights::for_order(&family, r, order)?);
            }
        }
        Ok(Self { sets, order })
    }
}

/// Runs every inequality on one map. The analytic part must carry
/// `||h||_inf = 1`.
pub fn check_map(map: &HarmonicMap, weights: &LemmaWeights) -> Result<Vec<LemmaOutcome>> {
    let h = &map.h;
    if !h.is_unit_norm() {
        return Err(BohrError::Precondition(format!(
            "lemma checks need ||h||_inf = 1, got {:?}",
            h.sup_norm
        )));
    }
    if map.order() > weights.order {
        return Err(BohrError::Precondition(format!(
            "map order {} exceeds the weight order {}",
            map.order(),
            weights.order
        )));
    }
    let a = h.moduli();
    let b = map.g.moduli();
    let a0 = a[0];
    let m = h.order();
    let mut out: Vec<LemmaOutcome> = Lemma::ALL.iter().map(|&l| LemmaOutcome::new(l)).collect();

    for rho in GRID_RADII {
        for j in 0..GRID_ANGLES {
            let z = Complex64::from_polar(rho, TAU * j as f64 / GRID_ANGLES as f64);
            let (hz, dhz) = h.eval_with_derivative(z);
            let modulus = hz.norm();
            out[0].record((a0 + rho) / (1.0 + a0 * rho) - modulus);
            out[1].record((1.0 - modulus * modulus) / (1.0 - rho * rho) - dhz.norm());
        }
    }
    for &an in &a[1..] {
        out[1].record(1.0 - a0 * a0 - an);
    }

    let mut partial = 0.0;
    for k in 0..=m {
        // partial = sum_{j<k} |a_j|^2
        if 2 * k <= m && k >= 1 {
            out[3].record(1.0 - partial - a[k] * a[k] / (1.0 + a0) - a[2 * k]);
        }
        partial += a[k] * a[k];
        if 2 * k < m {
            out[2].record(1.0 - partial - a[2 * k + 1]);
        }
    }

    let excess = 1.0 - a0 * a0;
    for w in &weights.sets {
        let weighted = |c: &[f64]| -> f64 { c.iter().zip(&w.psi).skip(1).map(|(x, p)| x * x * p).sum() };
        out[4].record(map.k * map.k * weighted(&a) - weighted(&b));
        let refined = w.refined(&a);
        out[5].record(excess * w.tails[1] - w.linear(&a, 1) - refined);
        out[6].record(excess * w.tails[2] - w.linear(&a, 2) - refined);
    }
    Ok(out)
}

/// Aggregate result of a seeded run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaSuiteReport {
    pub seed: u64,
    pub functions: usize,
    pub order: usize,
    pub outcomes: Vec<LemmaOutcome>,
    /// `max | |a_1| - (1 - |a_0|^2) |` over real Möbius atoms.
    pub mobius_equality_gap: f64,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(LemmaOutcome::passed) && self.mobius_equality_gap <= EQUALITY_TOL
    }
}

/// Random Blaschke product with 1 to `max_zeros` zeros in `|w| <= 0.95` and
/// a random unimodular rotation.
pub fn random_blaschke(rng: &mut impl Rng, max_zeros: usize, order: usize) -> Result<super::AnalyticSeries> {
    let count = rng.gen_range(1..=max_zeros.max(1));
    let zeros: Vec<Complex64> = (0..count)
        .map(|_| {
            let rho = MAX_ZERO_MODULUS * rng.gen::<f64>().sqrt();
            Complex64::from_polar(rho, rng.gen_range(0.0..TAU))
        })
        .collect();
    Ok(blaschke_product(&zeros, order)?.rotate(rng.gen_range(0.0..TAU)))
}

/// Checks `count` random maps built from Blaschke products with up to four
/// zeros, each paired with `g = lambda k (h - a_0)` for random `k`, `lambda`.
pub fn run_lemma_suite(seed: u64, count: usize, order: usize) -> Result<LemmaSuiteReport> {
    if count == 0 {
        return Err(BohrError::InvalidParameter("count must be >= 1".into()));
    }
    if order < 4 {
        return Err(BohrError::InvalidParameter(format!("order {order} must be >= 4")));
    }
    let weights = LemmaWeights::new(order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes: Vec<LemmaOutcome> = Lemma::ALL.iter().map(|&l| LemmaOutcome::new(l)).collect();
    for i in 0..count {
        let h = random_blaschke(&mut rng, 4, order)?;
        let k = rng.gen_range(0.0..0.95);
        let lambda = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
        let map = HarmonicMap::from_analytic(h, k, lambda)?;
        for (total, single) in outcomes.iter_mut().zip(check_map(&map, &weights)?) {
            if !single.passed() {
                log::warn!("function {i}: {} slack {:e}", single.lemma, single.min_slack);
            }
            total.merge(&single);
        }
    }

    let mut gap = 0.0f64;
    for a in EQUALITY_ATOMS {
        let h = blaschke_product(&[Complex64::new(a, 0.0)], 2)?;
        let a0 = h.coefficient(0).norm();
        gap = gap.max((h.coefficient(1).norm() - (1.0 - a0 * a0)).abs());
    }

    Ok(LemmaSuiteReport {
        seed,
        functions: count,
        order,
        outcomes,
        mobius_equality_gap: gap,
    })
}
