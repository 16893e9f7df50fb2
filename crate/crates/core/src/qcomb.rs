//! q-integers, q-factorials, Gaussian binomials and the classical Bernoulli numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, Coeff, Monomial, Poly, RatFunc, Rational, Var};

/// `[n]_q = (1 − q^n)/(1 − q)`.
pub fn q_int(n: i64) -> RatFunc {
    let m = n.unsigned_abs() as u32;
    let geometric = Poly::from_terms((0..m).map(|i| (Monomial::var(Var::Q, i), Coeff::one())));
    if n >= 0 {
        RatFunc::from_poly(geometric)
    } else {
        -(&RatFunc::from_poly(geometric) * &RatFunc::q_pow(n))
    }
}

pub fn q_factorial(n: u32) -> RatFunc {
    RatFunc::from_poly(int_poly(&q_factorial_coeffs(n)))
}

fn q_factorial_coeffs(n: u32) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for k in 1..=n {
        acc = mul_geometric(&acc, k);
    }
    acc
}

/// Multiplies by `1 + q + … + q^{k−1}`.
fn mul_geometric(p: &[BigInt], k: u32) -> Vec<BigInt> {
    let k = k as usize;
    let mut out = vec![BigInt::zero(); p.len() + k - 1];
    for (i, c) in p.iter().enumerate() {
        for slot in &mut out[i..i + k] {
            *slot += c;
        }
    }
    out
}

/// Exact division by `1 + q + … + q^{k−1}`; `None` if it leaves a remainder.
fn div_geometric(p: &[BigInt], k: u32) -> Option<Vec<BigInt>> {
    let k = k as usize;
    if k == 1 {
        return Some(p.to_vec());
    }
    if p.len() < k {
        return None;
    }
    // multiply by (1 − q), then divide by (1 − q^k)
    let mut t = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        t[i] += c;
        t[i + 1] -= c;
    }
    let qlen = t.len() - k;
    let mut quot = vec![BigInt::zero(); qlen];
    for j in 0..qlen {
        quot[j] = if j >= k { &t[j] + &quot[j - k] } else { t[j].clone() };
    }
    for j in qlen..t.len() {
        let carried = if j >= k { quot[j - k].clone() } else { BigInt::zero() };
        if &t[j] + carried != BigInt::zero() {
            return None;
        }
    }
    Some(quot)
}

fn int_poly(c: &[BigInt]) -> Poly {
    Poly::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (Monomial::var(Var::Q, i as u32), Coeff::from_bigint(v.clone()))),
    )
}

/// Integer coefficients of the Gaussian binomial, constant term first.
pub fn q_binom_coeffs(n: u32, k: i64) -> Vec<BigInt> {
    if k < 0 || k > n as i64 {
        return Vec::new();
    }
    let k = k as u32;
    let k = k.min(n - k);
    let mut acc = vec![BigInt::one()];
    for i in 0..k {
        acc = mul_geometric(&acc, n - i);
    }
    for i in 1..=k {
        acc = div_geometric(&acc, i).expect("Gaussian binomial is a polynomial");
    }
    acc
}

pub fn q_binom(n: u32, k: i64) -> RatFunc {
    RatFunc::from_poly(int_poly(&q_binom_coeffs(n, k)))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `C(a, k)` for any integer `a` and `k ≥ 0`.
pub fn binomial_signed(a: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` from `Σ_{k≤n} C(n+1,k) B_k = 0`.
pub fn classical_bernoulli_table(n: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::one());
    for m in 1..=n as u64 {
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, k as u64)) * bk;
        }
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn classical_bernoulli(n: u32) -> Rational {
    classical_bernoulli_table(n).pop().expect("nonempty")
}

/// `B_n(x) = Σ C(n,k) B_k x^{n−k}`.
pub fn classical_bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let b = classical_bernoulli_table(n);
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for k in (0..=n).rev() {
        acc += Rational::from_integer(binomial(n as u64, k as u64)) * &b[k as usize] * &xp;
        xp *= x;
    }
    acc
}

pub fn rational_binomial(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(int(1), |acc, k| acc * int(k))
}
