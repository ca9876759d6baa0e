use bohr::function_lab::lemmas::{check_map, random_blaschke, LemmaWeights};
use bohr::function_lab::{majorant_lhs, majorant_rhs, mobius_coefficients, HarmonicMap, MobiusAtom};
use bohr::radius::{solve_radius, DEFAULT_TOL};
use bohr::{blaschke_product, polylog, PolynomialG, PsiFamily, RadiusProblem, Theorem};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = PsiFamily> {
    prop_oneof![
        Just(PsiFamily::Geometric),
        Just(PsiFamily::HarmonicWeight),
        Just(PsiFamily::ZetaWeight),
    ]
}

fn theorem() -> impl Strategy<Value = Theorem> {
    prop_oneof![
        Just(Theorem::T1),
        Just(Theorem::C1),
        Just(Theorem::T2),
        Just(Theorem::C2),
        Just(Theorem::T3),
        Just(Theorem::T4),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_maps_satisfy_the_main_inequality(
        seed in any::<u64>(),
        theorem in theorem(),
        family in family(),
        distortion in 1.0f64..8.0,
        p in 0.25f64..=2.0,
        fraction in 0.0f64..=1.0,
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let g = if theorem.uses_g() { PolynomialG::new(vec![0.5, 0.25]).unwrap() } else { PolynomialG::zero() };
        let problem = RadiusProblem::new(theorem, family.clone(), distortion, p).unwrap().with_g(g.clone());
        let radius = solve_radius(&problem, DEFAULT_TOL).unwrap().radius;
        let r = fraction * radius;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_blaschke(&mut rng, 4, 256).unwrap();
        let map = HarmonicMap::from_analytic(h, problem.dilatation(), Complex64::from_polar(1.0, angle)).unwrap();
        let z = Complex64::from_polar(r, angle);
        let lhs = majorant_lhs(&map, theorem, &family, r, p, &g, Some(z)).unwrap();
        let rhs = majorant_rhs(&map, &family, r).unwrap();
        prop_assert!(lhs <= rhs + 1e-10, "{lhs} > {rhs}");
    }

    #[test]
    fn random_blaschke_products_satisfy_the_coefficient_inequalities(seed in any::<u64>(), k in 0.0f64..0.95) {
        let weights = LemmaWeights::new(512).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_blaschke(&mut rng, 4, 512).unwrap();
        let map = HarmonicMap::from_analytic(h, k, Complex64::new(1.0, 0.0)).unwrap();
        for outcome in check_map(&map, &weights).unwrap() {
            prop_assert!(outcome.passed(), "{:?}", outcome);
        }
    }

    #[test]
    fn single_zero_blaschke_is_the_mobius_atom(a in 0.0f64..0.99) {
        let b = blaschke_product(&[Complex64::new(a, 0.0)], 32).unwrap();
        let m = mobius_coefficients(&MobiusAtom::new(a, Complex64::new(1.0, 0.0), 0.0).unwrap(), 32).unwrap();
        for (x, y) in b.coefficients.iter().zip(&m.h.coefficients) {
            prop_assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn polylog_is_increasing(s in 1u32..=3, x in 0.0f64..0.98, dx in 1e-6f64..0.01) {
        prop_assert!(polylog(s, x + dx).unwrap() > polylog(s, x).unwrap());
    }

    #[test]
    fn radius_decreases_with_distortion(family in family(), k in 1.0f64..20.0, dk in 0.1f64..5.0) {
        let solve = |k: f64| {
            let problem = RadiusProblem::new(Theorem::C2, family.clone(), k, 1.0).unwrap();
            solve_radius(&problem, DEFAULT_TOL).unwrap().radius
        };
        prop_assert!(solve(k + dk) < solve(k));
    }
}
