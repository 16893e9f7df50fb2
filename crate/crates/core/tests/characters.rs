use proptest::prelude::*;
use qbernoulli::characters::{character, enumerate_characters, euler_phi, factorize};
use qbernoulli::Coeff;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// g(p) = p-2, g(p^k) = p^{k-2}(p-1)^2, multiplied over prime powers
fn primitive_count(f: u64) -> i64 {
    factorize(f)
        .into_iter()
        .map(|(p, k)| {
            let p = p as i64;
            if k == 1 {
                p - 2
            } else {
                p.pow(k - 2) * (p - 1) * (p - 1)
            }
        })
        .product()
}

proptest! {
    #[test]
    fn multiplicative_and_periodic(f in 1u64..=40, idx in 0usize..64, a in -200i64..200, b in -200i64..200) {
        let chars = enumerate_characters(f);
        let chi = &chars[idx % chars.len()];
        prop_assert_eq!(chi.value(a * b), &chi.value(a) * &chi.value(b));
        prop_assert_eq!(chi.value(a + f as i64), chi.value(a));
        if gcd(a.unsigned_abs(), f) != 1 {
            prop_assert!(chi.value(a).is_zero());
        }
    }

    #[test]
    fn values_are_roots_of_unity_of_the_order(f in 2u64..=40, idx in 0usize..64, a in 1i64..200) {
        let chars = enumerate_characters(f);
        let chi = &chars[idx % chars.len()];
        if gcd(a as u64, f) == 1 {
            prop_assert!(chi.value(a).pow(chi.order()).is_one());
        }
    }
}

#[test]
fn orthogonality_is_exact() {
    for f in 1..=24u64 {
        let chars = enumerate_characters(f);
        let phi = Coeff::from(euler_phi(f) as i64);
        assert_eq!(chars.len() as u64, euler_phi(f));
        let units: Vec<i64> = (0..f as i64).filter(|&a| gcd(a as u64, f) == 1).collect();
        for chi in &chars {
            for psi in &chars {
                let mut s = Coeff::zero();
                for &a in &units {
                    s = &s + &(&chi.value(a) * &psi.value(a).inverse().unwrap());
                }
                let want = if chi.index() == psi.index() { phi.clone() } else { Coeff::zero() };
                assert_eq!(s, want, "f={f} chi={} psi={}", chi.index(), psi.index());
            }
        }
        for a in 0..f as i64 {
            let mut s = Coeff::zero();
            for chi in &chars {
                s = &s + &chi.value(a);
            }
            let want = if (a as u64) % f == 1 % f && gcd(a as u64, f) == 1 { phi.clone() } else { Coeff::zero() };
            assert_eq!(s, want, "f={f} a={a}");
        }
    }
}

#[test]
fn primitive_characters_counted() {
    for f in 1..=60u64 {
        let n = enumerate_characters(f).iter().filter(|c| c.is_primitive()).count() as i64;
        assert_eq!(n, primitive_count(f), "f={f}");
    }
}

#[test]
fn trivial_character_mod_one() {
    let chars = enumerate_characters(1);
    assert_eq!(chars.len(), 1);
    for a in -5..5 {
        assert!(chars[0].value(a).is_one());
    }
}

#[test]
fn out_of_range_index_is_rejected() {
    assert!(character(5, 4).is_err());
    assert!(character(5, 3).is_ok());
}
