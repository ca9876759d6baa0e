//! Generalized Bohr radii for sense-preserving `K`-quasiconformal harmonic
//! mappings `f = h + conj(g)` of the unit disk.
//!
//! * [`special_fn`]: Pochhammer symbols, polylogarithms, `2F1`.
//! * [`psi_family`]: weight sequences `psi_n(r)` and their tail sums.
//! * [`radius`]: the radius functionals and a bracketing root finder.
//! * [`function_lab`]: test maps with known sup norm, majorant evaluation,
//!   sharpness probes and coefficient-inequality checks.
//! * [`convolution`]: Hadamard products with the Gauss hypergeometric function.
//! * [`cli`]: the `bohr` command-line front end.

pub mod cli;
pub mod convolution;
pub mod error;
pub mod function_lab;
pub mod psi_family;
pub mod radius;
pub mod series;
pub mod special_fn;

pub use error::{BohrError, Result};
pub use function_lab::{
    blaschke_product, majorant_lhs, mobius_coefficients, sharpness_probe, AnalyticSeries, HarmonicMap,
    MobiusAtom, Witness,
};
pub use psi_family::PsiFamily;
pub use radius::{closed_form_radius, phi, solve_radius, PolynomialG, RadiusProblem, RadiusResult, Theorem};
pub use special_fn::{gauss_2f1, pochhammer, polylog, HypergeometricParams};
