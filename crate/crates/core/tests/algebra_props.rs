use std::collections::HashMap;

use num_complex::Complex64;
use proptest::prelude::*;
use qbernoulli::algebra::{integer, Coeff, CycloElement, Monomial, Poly, RatFunc, Var};

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 0u32..4, 0u32..2, 0u32..2), 0..max_terms).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(c, a, b, d)| (Monomial([a, b, d, 0]), Coeff::from_int(c))),
        )
    })
}

fn den_factor() -> impl Strategy<Value = RatFunc> {
    let q = RatFunc::q();
    prop_oneof![
        (1i64..5).prop_map(|k| &integer(1) - &RatFunc::q_pow(k)),
        (1i64..3).prop_map(RatFunc::q_pow),
        Just(RatFunc::var(Var::L)),
        Just(&(&integer(2) * &q) - &integer(1)),
        Just(&RatFunc::var(Var::L) + &q),
        Just(&integer(1) - &RatFunc::var(Var::X)),
    ]
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(5), prop::collection::vec(den_factor(), 0..3)).prop_map(|(num, dens)| {
        let mut r = RatFunc::from_poly(num);
        for d in dens {
            r = r.checked_div(&d).unwrap();
        }
        r
    })
}

fn point() -> HashMap<Var, Complex64> {
    let mut m = HashMap::new();
    m.insert(Var::Q, Complex64::new(0.37, 0.21));
    m.insert(Var::L, Complex64::new(-0.8, 0.45));
    m.insert(Var::X, Complex64::new(0.61, -0.3));
    m.insert(Var::Y, Complex64::new(1.3, 0.2));
    m
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-8 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        let p = point();
        let (va, vb) = (a.eval_complex(&p).unwrap(), b.eval_complex(&p).unwrap());
        prop_assert!(close((&a + &b).eval_complex(&p).unwrap(), va + vb));
        prop_assert!(close((&a * &b).eval_complex(&p).unwrap(), va * vb));
    }

    #[test]
    fn q_power_substitution_matches_evaluation(a in ratfunc_strategy(), f in 1u32..4) {
        let s = a.substitute(Var::Q, &RatFunc::q_pow(f as i64)).unwrap();
        let mut p = point();
        let direct = s.eval_complex(&p).unwrap();
        p.insert(Var::Q, p[&Var::Q].powu(f));
        prop_assert!(close(direct, a.eval_complex(&p).unwrap()));
        let general = a.substitute(Var::Q, &(&RatFunc::q_pow(f as i64) + &RatFunc::zero())).unwrap();
        prop_assert_eq!(general, s);
    }

    #[test]
    fn q_inversion_matches_evaluation(a in ratfunc_strategy()) {
        let s = a.invert_q();
        let mut p = point();
        let direct = s.eval_complex(&p).unwrap();
        p.insert(Var::Q, p[&Var::Q].inv());
        prop_assert!(close(direct, a.eval_complex(&p).unwrap()));
        prop_assert_eq!(s.invert_q(), a);
    }

    #[test]
    fn variable_scaling_matches_evaluation(a in ratfunc_strategy(), k in -3i64..=3) {
        prop_assume!(k != 0);
        let s = a.scale_var(Var::L, &Coeff::from_int(k));
        let general = a.substitute(Var::L, &(&integer(k) * &RatFunc::var(Var::L))).unwrap();
        prop_assert_eq!(&s, &general);
        let mut p = point();
        let direct = s.eval_complex(&p).unwrap();
        p.insert(Var::L, p[&Var::L] * k as f64);
        prop_assert!(close(direct, a.eval_complex(&p).unwrap()));
    }

    #[test]
    fn json_round_trip(a in ratfunc_strategy()) {
        prop_assert_eq!(RatFunc::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn cyclotomic_coefficients(k in 0i64..12, a in ratfunc_strategy()) {
        let z = RatFunc::constant(Coeff::from_cyclo(CycloElement::root_of_unity(12, k)));
        let prod = &z * &a;
        prop_assert_eq!(prod.checked_div(&z).unwrap(), a.clone());
        prop_assert_eq!(RatFunc::from_json(&prod.to_json()).unwrap(), prod);
    }
}
