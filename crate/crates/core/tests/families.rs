use proptest::prelude::*;
use qbernoulli::beta::{evaluate, evaluate_with, int_arg, x_arg, BetaFamily, WeightSpec, ZeroMode};
use qbernoulli::characters::enumerate_characters;
use qbernoulli::{RatFunc, Var};

fn q() -> RatFunc {
    RatFunc::q()
}

fn c(v: i64) -> RatFunc {
    RatFunc::from(v)
}

fn bracket(k: i64) -> RatFunc {
    (0..k).fold(c(0), |acc, i| &acc + &RatFunc::q_pow(i))
}

fn choose(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

fn carlitz_at_zero(n: u32) -> RatFunc {
    evaluate(&BetaFamily::carlitz(n), &int_arg(0)).unwrap()
}

#[test]
fn first_carlitz_numbers() {
    assert_eq!(carlitz_at_zero(0), c(1));
    assert_eq!(carlitz_at_zero(1), (-&c(1)).checked_div(&bracket(2)).unwrap());
    assert_eq!(carlitz_at_zero(2), q().checked_div(&(&bracket(2) * &bracket(3))).unwrap());
}

#[test]
fn carlitz_umbral_recurrence() {
    // q(qβ+1)^n − β_n = [n = 1], expanded with β^k -> β_k
    let b: Vec<RatFunc> = (0..=9).map(carlitz_at_zero).collect();
    for n in 1..=9u32 {
        let mut lhs = -&b[n as usize];
        for k in 0..=n {
            let t = RatFunc::q_pow(i64::from(k) + 1).scale(&choose(n, k).into());
            lhs = &lhs + &(&t * &b[k as usize]);
        }
        assert_eq!(lhs, c(i64::from(n == 1)), "n={n}");
    }
}

// (1−q)^{−n} Σ_l C(n,l)(−1)^l X^l · l(1−q)/(1−q^l), the l = 0 term being (q−1)/L
fn twisted_by_expansion(n: u32, mode: ZeroMode) -> RatFunc {
    let one_minus_q = &c(1) - &q();
    let mut s = c(0);
    for l in 0..=n {
        let w = if l == 0 {
            match mode {
                ZeroMode::Log => (&q() - &c(1)).checked_div(&RatFunc::var(Var::L)).unwrap(),
                ZeroMode::Drop => c(0),
            }
        } else {
            (&c(i64::from(l)) * &one_minus_q).checked_div(&(&c(1) - &RatFunc::q_pow(i64::from(l)))).unwrap()
        };
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let xl = RatFunc::var(Var::X).pow(i64::from(l)).unwrap();
        s = &s + &(&(&xl * &w) * &c(sign * choose(n, l)));
    }
    s.checked_div(&one_minus_q.pow(i64::from(n)).unwrap()).unwrap()
}

#[test]
fn twisted_matches_binomial_expansion() {
    for n in 0..=7 {
        for mode in [ZeroMode::Log, ZeroMode::Drop] {
            let got = evaluate_with(&BetaFamily::twisted(n), &x_arg(), mode).unwrap();
            assert_eq!(got, twisted_by_expansion(n, mode), "n={n}");
        }
    }
}

#[test]
fn hr_with_h2_r1_is_carlitz_and_h1_is_twisted() {
    for n in 0..=7 {
        let x = x_arg();
        assert_eq!(evaluate(&BetaFamily::hr(n, 2, 1), &x).unwrap(), evaluate(&BetaFamily::carlitz(n), &x).unwrap());
        assert_eq!(evaluate(&BetaFamily::hr(n, 1, 1), &x).unwrap(), evaluate(&BetaFamily::twisted(n), &x).unwrap());
    }
}

#[test]
fn trivial_character_mod_one_is_the_plain_family() {
    let x = x_arg();
    for n in 0..=6 {
        assert_eq!(evaluate(&BetaFamily::chi(n, 1, 0), &x).unwrap(), evaluate(&BetaFamily::twisted(n), &x).unwrap());
        for r in 1..=2 {
            assert_eq!(
                evaluate(&BetaFamily::chi_order_r(n, r, 1, 0), &x).unwrap(),
                evaluate(&BetaFamily::order_r(n, r), &x).unwrap()
            );
            for h in -1..=3 {
                assert_eq!(
                    evaluate(&BetaFamily::chi_hr(n, h, r, 1, 0), &x).unwrap(),
                    evaluate(&BetaFamily::hr(n, h, r), &x).unwrap(),
                    "n={n} r={r} h={h}"
                );
            }
        }
    }
}

#[test]
fn barnes_with_unit_weights_is_hr() {
    let x = x_arg();
    for n in 0..=4 {
        let spec = WeightSpec::new(vec![(1, 2), (1, 1)]).unwrap();
        assert_eq!(evaluate(&BetaFamily::barnes(n, spec), &x).unwrap(), evaluate(&BetaFamily::hr(n, 3, 2), &x).unwrap());
    }
}

#[test]
fn principal_character_numbers_are_rational() {
    for f in 2..=6u64 {
        for ch in enumerate_characters(f) {
            let v = evaluate(&BetaFamily::chi(2, f, ch.index()), &int_arg(0)).unwrap();
            let rational = v.num().terms().all(|(_, a)| a.as_rational().is_some());
            if ch.order() <= 2 {
                assert!(rational, "f={f} chi={}", ch.index());
            }
        }
    }
}

fn family_strategy() -> impl Strategy<Value = BetaFamily> {
    (0u32..=4, 0usize..6, -1i64..=3, 1u32..=2, 1u64..=5, 0usize..4).prop_map(|(n, kind, h, r, f, chi)| {
        let chi = chi % enumerate_characters(f).len();
        match kind {
            0 => BetaFamily::carlitz(n),
            1 => BetaFamily::twisted(n),
            2 => BetaFamily::order_r(n, r),
            3 => BetaFamily::hr(n, h, r),
            4 => BetaFamily::chi(n, f, chi),
            _ => BetaFamily::chi_hr(n, h, r, f, chi),
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_argument_is_substitution(fam in family_strategy(), x in -3i64..=3) {
        let symbolic = evaluate(&fam, &x_arg()).unwrap();
        let direct = evaluate(&fam, &int_arg(x)).unwrap();
        prop_assert_eq!(symbolic.substitute(Var::X, &RatFunc::q_pow(x)).unwrap(), direct);
    }

    #[test]
    fn x_degree_at_most_n(fam in family_strategy()) {
        let v = evaluate(&fam, &x_arg()).unwrap();
        let deg = v.num().terms().map(|(m, _)| m.exp(Var::X)).max().unwrap_or(0);
        prop_assert!(deg <= fam.n);
        prop_assert!(v.den().terms().all(|(m, _)| m.exp(Var::X) == 0));
    }

    #[test]
    fn zero_modes_differ_only_by_the_l0_term(n in 0u32..=6) {
        let log = evaluate_with(&BetaFamily::twisted(n), &x_arg(), ZeroMode::Log).unwrap();
        let drop = evaluate_with(&BetaFamily::twisted(n), &x_arg(), ZeroMode::Drop).unwrap();
        let l0 = (&q() - &c(1)).checked_div(&RatFunc::var(Var::L)).unwrap();
        let want = l0.checked_div(&(&c(1) - &q()).pow(i64::from(n)).unwrap()).unwrap();
        prop_assert_eq!(&log - &drop, want);
    }
}
