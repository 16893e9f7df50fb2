//! Dense univariate polynomials over an exact field.
//!
//! Used for cyclotomic residues, for cyclotomic trial division in the
//! q-direction and for the univariate gcd fallback in rational functions.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Minimal exact-field interface shared by `BigRational` and `Coeff`.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    /// Panics on zero divisor; callers check first.
    fn f_div(&self, other: &Self) -> Self;
    fn f_neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;
}

impl Field for BigRational {
    fn f_zero() -> Self {
        Zero::zero()
    }
    fn f_one() -> Self {
        One::one()
    }
    fn f_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_div(&self, other: &Self) -> Self {
        self / other
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

/// Coefficients listed from the constant term upwards, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePoly<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> DensePoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.f_is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly { coeffs: vec![F::f_one()] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_i64(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = F::f_zero();
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&z);
                    let b = other.coeffs.get(i).unwrap_or(&z);
                    a.f_add(b)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(F::f_neg).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.f_mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::f_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.f_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.f_is_zero() {
                    out[i + j] = out[i + j].f_add(&a.f_mul(b));
                }
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder. `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = F::f_one().f_div(divisor.lead().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::f_zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].f_is_zero() {
                continue;
            }
            let c = rem[i].f_mul(&lead_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].f_sub(&c.f_mul(d));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let inv = F::f_one().f_div(l);
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = F::f_one().f_div(&l);
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }
}

/// Exact division of `coeffs` by a monic integer polynomial, or `None` when
/// the remainder is nonzero.
pub fn div_exact_monic_int<F: Field>(coeffs: &[F], divisor: &[i64]) -> Option<Vec<F>> {
    let dd = divisor.len() - 1;
    debug_assert_eq!(divisor[dd], 1);
    if coeffs.is_empty() {
        return Some(Vec::new());
    }
    if coeffs.len() <= dd {
        return None;
    }
    let mut rem = coeffs.to_vec();
    let mut quot = vec![F::f_zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].f_is_zero() {
            continue;
        }
        let c = rem[i].clone();
        for (j, &d) in divisor.iter().enumerate().take(dd) {
            if d != 0 {
                rem[i - dd + j] = rem[i - dd + j].f_sub(&c.f_mul(&F::from_i64(d)));
            }
        }
        rem[i] = F::f_zero();
        quot[i - dd] = c;
    }
    if rem[..dd].iter().all(|c| c.f_is_zero()) {
        Some(quot)
    } else {
        None
    }
}

/// Integer coefficients of the `d`-th cyclotomic polynomial, from the Möbius
/// product `Φ_d = Π_{e|d} (z^e − 1)^{μ(d/e)}`.
pub fn cyclotomic_int(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    let divisors: Vec<u32> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut num: Vec<i64> = vec![1];
    let mut dens: Vec<u32> = Vec::new();
    for &e in &divisors {
        match mobius(d / e) {
            1 => num = mul_binomial(&num, e),
            -1 => dens.push(e),
            _ => {}
        }
    }
    for e in dens {
        num = div_binomial(&num, e);
    }
    num
}

// times (z^e − 1)
fn mul_binomial(p: &[i64], e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut out = vec![0i64; p.len() + e];
    for (i, &c) in p.iter().enumerate() {
        out[i] -= c;
        out[i + e] += c;
    }
    out
}

// exact division by (z^e − 1)
fn div_binomial(p: &[i64], e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut rem = p.to_vec();
    let mut quot = vec![0i64; p.len() - e];
    for i in (e..rem.len()).rev() {
        let c = rem[i];
        quot[i - e] = c;
        rem[i] = 0;
        rem[i - e] += c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

pub fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
