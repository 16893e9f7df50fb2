//! Rational functions in `q, L, X, Y`.
//!
//! Denominators are kept partially factored: a monomial, a product of
//! cyclotomic polynomials `Φ_d(q)`, and a monic residual polynomial. Every
//! denominator produced by the q-Bernoulli engine is of the first two kinds,
//! which makes gcd-cancellation a matter of trial division by known factors.
//! Equality is decided by cross-multiplication over the common denominator,
//! so correctness never depends on how far a value has been reduced.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::coeff::{int, Coeff, Rational};
use super::dense::{cyclotomic_int, euler_phi, DensePoly};
use super::monomial::{Monomial, Var};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
struct Den {
    mono: Monomial,
    /// `d -> e` stands for `Φ_d(q)^e`.
    cyclo: BTreeMap<u32, u32>,
    /// Leading coefficient 1, no monomial content.
    rest: Poly,
}

impl Den {
    fn one() -> Self {
        Den { mono: Monomial::ONE, cyclo: BTreeMap::new(), rest: Poly::one() }
    }

    fn monomial(m: Monomial) -> Self {
        Den { mono: m, ..Den::one() }
    }

    fn is_one(&self) -> bool {
        self.mono.is_one() && self.cyclo.is_empty() && self.rest.is_one()
    }

    fn cyclo_poly(cyclo: &BTreeMap<u32, u32>) -> Poly {
        let mut acc = Poly::one();
        for (&d, &e) in cyclo {
            let phi = Poly::from_int_dense(Var::Q, &cyclotomic_int(d));
            acc = &acc * &phi.pow(e);
        }
        acc
    }

    fn to_poly(&self) -> Poly {
        (&Self::cyclo_poly(&self.cyclo) * &self.rest).mul_monomial(&self.mono)
    }

    fn mul(&self, other: &Den) -> Den {
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            *cyclo.entry(d).or_insert(0) += e;
        }
        Den { mono: self.mono.mul(&other.mono), cyclo, rest: &self.rest * &other.rest }
    }

    /// Least common multiple and the two cofactors `lcm/self`, `lcm/other`.
    fn lcm(&self, other: &Den) -> (Den, Poly, Poly) {
        let mono = self.mono.lcm(&other.mono);
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            let slot = cyclo.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let missing = |mine: &BTreeMap<u32, u32>| -> BTreeMap<u32, u32> {
            cyclo
                .iter()
                .filter_map(|(&d, &e)| {
                    let have = mine.get(&d).copied().unwrap_or(0);
                    (e > have).then_some((d, e - have))
                })
                .collect()
        };
        let (rest, ra, rb) = if self.rest == other.rest {
            (self.rest.clone(), Poly::one(), Poly::one())
        } else if self.rest.is_one() {
            (other.rest.clone(), other.rest.clone(), Poly::one())
        } else if other.rest.is_one() {
            (self.rest.clone(), Poly::one(), self.rest.clone())
        } else if self.rest.is_univariate_q() && other.rest.is_univariate_q() {
            let a = self.rest.to_dense_q();
            let b = other.rest.to_dense_q();
            let g = a.gcd(&b);
            let (a_over_g, _) = a.div_rem(&g);
            let (b_over_g, _) = b.div_rem(&g);
            let ra = Poly::from_dense(Var::Q, &b_over_g.coeffs);
            let rb = Poly::from_dense(Var::Q, &a_over_g.coeffs);
            (&self.rest * &ra, ra, rb)
        } else {
            (&self.rest * &other.rest, other.rest.clone(), self.rest.clone())
        };
        let cof_a = (&Self::cyclo_poly(&missing(&self.cyclo)) * &ra).mul_monomial(&mono.div(&self.mono));
        let cof_b = (&Self::cyclo_poly(&missing(&other.cyclo)) * &rb).mul_monomial(&mono.div(&other.mono));
        (Den { mono, cyclo, rest }, cof_a, cof_b)
    }

    fn eval_complex(&self, point: &[Complex64; 4]) -> Complex64 {
        let mut acc = Poly::monomial(self.mono).eval_complex(point) * self.rest.eval_complex(point);
        for (&d, &e) in &self.cyclo {
            let phi = Poly::from_int_dense(Var::Q, &cyclotomic_int(d));
            acc *= phi.eval_complex(point).powu(e);
        }
        acc
    }

    /// Splits a nonzero polynomial as `unit · den`.
    fn factor(p: &Poly) -> (Coeff, Den) {
        assert!(!p.is_zero());
        let mono = p.monomial_content();
        let mut body = p.div_monomial(&mono);
        let mut cyclo = BTreeMap::new();
        if body.is_univariate_q() && body.degree_in(Var::Q) > 0 {
            let mut deg = body.degree_in(Var::Q);
            let bound = 6 * deg + 6;
            let mut d = 1;
            while d <= bound && deg > 0 {
                if euler_phi(d) <= deg && may_vanish_at_root(&body, d) {
                    let phi = cyclotomic_int(d);
                    if let Some(quot) = body.div_exact_q(&phi) {
                        body = quot;
                        deg -= euler_phi(d);
                        *cyclo.entry(d).or_insert(0) += 1;
                        continue;
                    }
                }
                d += 1;
            }
        }
        let lead = body.leading().map(|(_, c)| c.clone()).expect("nonzero");
        let rest = body.scale(&lead.inverse().expect("nonzero lead"));
        (lead, Den { mono, cyclo, rest })
    }
}

/// Fixed generic point for the non-`q` indeterminates used by numeric pruning.
const PROBE: [Complex64; 3] = [
    Complex64::new(0.713, 0.291),
    Complex64::new(-0.377, 0.822),
    Complex64::new(0.539, -0.645),
];

/// Cheap necessary condition for `Φ_d(q) | p`: `p(ζ_d, probe) ≈ 0`.
fn may_vanish_at_root(p: &Poly, d: u32) -> bool {
    let zeta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
    let point = [zeta, PROBE[0], PROBE[1], PROBE[2]];
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (m, c) in p.terms() {
        let mut t = c.to_complex();
        for v in Var::ALL {
            let e = m.exp(v);
            if e > 0 {
                t *= point[v.index()].powu(e);
            }
        }
        scale += t.norm();
        value += t;
    }
    if !scale.is_finite() || !value.norm().is_finite() {
        return true;
    }
    value.norm() <= 1e-7 * scale.max(1e-300)
}

/// Exact element of `Coeff(q, L, X, Y)`.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Den,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Den::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Den::one() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(Coeff::from_int(v))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(Coeff::Rat(r))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        let m = Monomial::var(Var::Q, e.unsigned_abs() as u32);
        if e >= 0 {
            Self::from_poly(Poly::monomial(m))
        } else {
            RatFunc { num: Poly::one(), den: Den::monomial(m) }
        }
    }

    /// `num / (mono · Π Φ_d(q)^e)` with the factorisation supplied by the caller.
    pub fn with_cyclotomic_den(num: Poly, mono: Monomial, factors: &[(u32, u32)]) -> Self {
        let mut cyclo = BTreeMap::new();
        for &(d, e) in factors {
            if e > 0 {
                *cyclo.entry(d).or_insert(0) += e;
            }
        }
        Self::reduced(num, Den { mono, cyclo, rest: Poly::one() })
    }

    /// `num / den` for arbitrary polynomials.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (unit, den) = Den::factor(&den);
        let inv = unit.inverse().ok_or(Error::DivisionByZero)?;
        Ok(Self::reduced(num.scale(&inv), den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// The expanded denominator (leading coefficient 1).
    pub fn den(&self) -> Poly {
        self.den.to_poly()
    }

    /// Cyclotomic part of the denominator as `(d, multiplicity)` pairs.
    pub fn den_cyclotomic_factors(&self) -> Vec<(u32, u32)> {
        self.den.cyclo.iter().map(|(&d, &e)| (d, e)).collect()
    }

    pub fn den_monomial(&self) -> Monomial {
        self.den.mono
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        if self.den.is_one() {
            self.num.as_constant()
        } else if self.num.is_zero() {
            Some(Coeff::zero())
        } else {
            None
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v)
            || self.den.mono.exp(v) > 0
            || self.den.rest.contains(v)
            || (v == Var::Q && !self.den.cyclo.is_empty())
    }

    fn reduced(num: Poly, den: Den) -> Self {
        let (num, den) = cancel(num, den);
        RatFunc { num, den }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.to_poly(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = RatFunc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitutes `v := c·v` for a nonzero constant `c` (`v ≠ q`).
    pub fn scale_var(&self, v: Var, c: &Coeff) -> Self {
        assert!(v != Var::Q, "use substitute for q");
        let scale_term = |m: &Monomial, a: &Coeff| (*m, a * &c.pow(m.exp(v)));
        let num = self.num.map_terms(scale_term);
        let (unit_rest, rest_den) = Den::factor(&self.den.rest.map_terms(scale_term));
        let mono_unit = c.pow(self.den.mono.exp(v));
        let unit = &unit_rest * &mono_unit;
        let den = Den {
            mono: self.den.mono.mul(&rest_den.mono),
            cyclo: merge_cyclo(&self.den.cyclo, &rest_den.cyclo),
            rest: rest_den.rest,
        };
        Self::reduced(num.scale(&unit.inverse().expect("nonzero scale")), den)
    }

    /// Substitutes `q := q^f` for `f ≥ 1`, keeping the cyclotomic structure.
    pub fn map_q_power(&self, f: u32) -> Self {
        assert!(f >= 1);
        if f == 1 {
            return self.clone();
        }
        let raise = |m: &Monomial, c: &Coeff| {
            let mut m = *m;
            m.0[0] *= f;
            (m, c.clone())
        };
        let num = self.num.map_terms(raise);
        let mut cyclo = BTreeMap::new();
        for (&d, &e) in &self.den.cyclo {
            for k in cyclotomic_at_power(d, f) {
                *cyclo.entry(k).or_insert(0) += e;
            }
        }
        let mut mono = self.den.mono;
        mono.0[0] *= f;
        let (unit, rest_den) = Den::factor(&self.den.rest.map_terms(raise));
        let den = Den {
            mono: mono.mul(&rest_den.mono),
            cyclo: merge_cyclo(&cyclo, &rest_den.cyclo),
            rest: rest_den.rest,
        };
        Self::reduced(num.scale(&unit.inverse().expect("nonzero")), den)
    }

    /// Substitutes `q := 1/q`, clearing the negative powers into the denominator.
    pub fn invert_q(&self) -> Self {
        let reverse = |p: &Poly| -> (Poly, u32) {
            let dq = p.degree_in(Var::Q);
            let rev = p.map_terms(|m, c| {
                let mut m = *m;
                m.0[0] = dq - m.0[0];
                (m, c.clone())
            });
            (rev, dq)
        };
        let (num, dn) = reverse(&self.num);
        // q-power carried by the denominator after reversal
        let mut e_den: i64 = self.den.mono.exp(Var::Q) as i64;
        let mut sign = Coeff::one();
        for (&d, &e) in &self.den.cyclo {
            e_den += (euler_phi(d) * e) as i64;
            if d == 1 && e % 2 == 1 {
                sign = -sign;
            }
        }
        let (rest_rev, dr) = reverse(&self.den.rest);
        e_den += dr as i64;
        let (unit, rest_den) = Den::factor(&rest_rev);
        let shift = e_den - dn as i64;
        let mut num = num.scale(&(&sign * &unit).inverse().expect("nonzero"));
        let mut mono = self.den.mono.without(Var::Q).mul(&rest_den.mono);
        if shift >= 0 {
            num = num.mul_monomial(&Monomial::var(Var::Q, shift as u32));
        } else {
            mono = mono.mul(&Monomial::var(Var::Q, (-shift) as u32));
        }
        let den = Den { mono, cyclo: merge_cyclo(&self.den.cyclo, &rest_den.cyclo), rest: rest_den.rest };
        Self::reduced(num, den)
    }

    /// General substitution `v := repl`.
    pub fn substitute(&self, v: Var, repl: &RatFunc) -> Result<Self> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        if let Some((num_m, c)) = repl.num.as_term() {
            let plain_den = repl.den.cyclo.is_empty() && repl.den.rest.is_one();
            if plain_den && v == Var::Q && c.is_one() && repl.den.mono.is_one() && num_m.without(Var::Q).is_one() {
                return Ok(self.map_q_power(num_m.exp(Var::Q)));
            }
            if plain_den && v == Var::Q && c.is_one() && num_m.is_one() && repl.den.mono == Monomial::var(Var::Q, 1) {
                return Ok(self.invert_q());
            }
            if plain_den && v != Var::Q && !self.den.rest.contains(v) {
                return Ok(self.substitute_monomial(v, &c, &num_m, &repl.den.mono));
            }
        }
        let n = horner(&self.num, v, repl)?;
        let d = horner(&self.den.to_poly(), v, repl)?;
        n.checked_div(&d)
    }

    /// `v := c·num_m/den_m` for `v ≠ q` not occurring in the residual denominator.
    fn substitute_monomial(&self, v: Var, c: &Coeff, num_m: &Monomial, den_m: &Monomial) -> Self {
        let dv = self.num.degree_in(v);
        let num = self.num.map_terms(|m, a| {
            let e = m.exp(v);
            let out = m.without(v).mul(&num_m.pow(e)).mul(&den_m.pow(dv - e));
            (out, a * &c.pow(e))
        });
        let b = self.den.mono.exp(v);
        // value = num / (den_m^dv · mono_without_v · (c·num_m/den_m)^b · cyclo · rest)
        let unit = c.pow(b).inverse().expect("nonzero substitution");
        let mono_num = den_m.pow(b);
        let mono_den = self.den.mono.without(v).mul(&den_m.pow(dv)).mul(&num_m.pow(b));
        let den = Den { mono: mono_den, cyclo: self.den.cyclo.clone(), rest: self.den.rest.clone() };
        Self::reduced(num.mul_monomial(&mono_num).scale(&unit), den)
    }

    /// Substitutes a constant for `v`.
    pub fn substitute_constant(&self, v: Var, c: &Coeff) -> Result<Self> {
        let at = |p: &Poly| p.map_terms(|m, a| (m.without(v), a * &c.pow(m.exp(v))));
        RatFunc::new(at(&self.num), at(&self.den.to_poly()))
    }

    /// Exact value when every indeterminate present is assigned.
    pub fn eval_exact(&self, assignment: &[(Var, Coeff)]) -> Result<Coeff> {
        let mut e = self.clone();
        for (v, c) in assignment {
            e = e.substitute_constant(*v, c)?;
        }
        for v in Var::ALL {
            if e.contains(v) {
                return Err(Error::Unassigned(v.name()));
            }
        }
        Ok(e.as_constant().expect("all indeterminates assigned"))
    }

    /// Floating evaluation; every indeterminate present must be assigned.
    pub fn eval_complex(&self, assignment: &HashMap<Var, Complex64>) -> Result<Complex64> {
        let mut point = [Complex64::new(f64::NAN, 0.0); 4];
        for v in Var::ALL {
            match assignment.get(&v) {
                Some(z) => point[v.index()] = *z,
                None if self.contains(v) => return Err(Error::Unassigned(v.name())),
                None => {}
            }
        }
        let den = self.den.eval_complex(&point);
        if den.norm().is_nan() || den.norm() <= 1e-300 {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval_complex(&point) / den)
    }

    /// Common denominator cofactors; `a == b` iff `a.num·ca == b.num·cb`.
    fn cross(&self, other: &RatFunc) -> (Den, Poly, Poly) {
        if self.den == other.den {
            return (self.den.clone(), self.num.clone(), other.num.clone());
        }
        let (lcm, ca, cb) = self.den.lcm(&other.den);
        (lcm, &self.num * &ca, &other.num * &cb)
    }

    fn add_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (den, a, b) = self.cross(other);
        Self::reduced(&a + &b, den)
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let (n1, d2) = cancel(self.num.clone(), other.den.clone());
        let (n2, d1) = cancel(other.num.clone(), self.den.clone());
        RatFunc { num: &n1 * &n2, den: d1.mul(&d2) }
    }
}

/// Cancels common factors between a numerator and a factored denominator.
fn cancel(mut num: Poly, mut den: Den) -> (Poly, Den) {
    if num.is_zero() {
        return (num, Den::one());
    }
    let g = num.monomial_content().gcd(&den.mono);
    if !g.is_one() {
        num = num.div_monomial(&g);
        den.mono = den.mono.div(&g);
    }
    let ds: Vec<u32> = den.cyclo.keys().copied().collect();
    for d in ds {
        let phi = cyclotomic_int(d);
        loop {
            let e = den.cyclo[&d];
            if e == 0 || !may_vanish_at_root(&num, d) {
                break;
            }
            match num.div_exact_q(&phi) {
                Some(quot) => {
                    num = quot;
                    den.cyclo.insert(d, e - 1);
                }
                None => break,
            }
        }
    }
    den.cyclo.retain(|_, e| *e > 0);
    if !den.rest.is_one() && den.rest.is_univariate_q() {
        let mut g: DensePoly<Coeff> = den.rest.to_dense_q();
        for slice in num.q_slices().values() {
            g = g.gcd(&DensePoly::new(slice.clone()));
            if g.degree() == Some(0) {
                break;
            }
        }
        if g.degree().is_some_and(|d| d > 0) {
            let (r, _) = den.rest.to_dense_q().div_rem(&g);
            den.rest = Poly::from_dense(Var::Q, &r.coeffs);
            let mut slices = num.q_slices();
            for s in slices.values_mut() {
                let (quot, _) = DensePoly::new(s.clone()).div_rem(&g);
                *s = quot.coeffs;
            }
            num = Poly::from_q_slices(&slices);
            // rest stays monic: g is monic and so was rest
        }
    }
    (num, den)
}

fn merge_cyclo(a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>) -> BTreeMap<u32, u32> {
    let mut out = a.clone();
    for (&d, &e) in b {
        *out.entry(d).or_insert(0) += e;
    }
    out
}

/// Indices `k` with `Φ_d(q^f) = Π Φ_k(q)`.
pub fn cyclotomic_at_power(d: u32, f: u32) -> Vec<u32> {
    // f = f1·f2 with rad(f1) | d and gcd(f2, d) = 1; Φ_d(q^f) = Π_{e|f2} Φ_{d·f1·e}(q)
    let mut f1 = 1;
    let mut f2 = f;
    let mut p = 2;
    let mut rem = f;
    while rem > 1 {
        if rem.is_multiple_of(p) {
            let mut pk = 1;
            while rem.is_multiple_of(p) {
                rem /= p;
                pk *= p;
            }
            if d.is_multiple_of(p) {
                f1 *= pk;
                f2 /= pk;
            }
        }
        p += 1;
    }
    (1..=f2).filter(|e| f2.is_multiple_of(*e)).map(|e| d * f1 * e).collect()
}

fn horner(p: &Poly, v: Var, repl: &RatFunc) -> Result<RatFunc> {
    let deg = p.degree_in(v);
    let mut by_exp: Vec<Poly> = vec![Poly::zero(); deg as usize + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        by_exp[e] = &by_exp[e] + &Poly::term(c.clone(), m.without(v));
    }
    let mut acc = RatFunc::zero();
    for coeff in by_exp.into_iter().rev() {
        acc = &(&acc * repl) + &RatFunc::from_poly(coeff);
    }
    Ok(acc)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        let (_, a, b) = self.cross(other);
        a == b
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

/// Panics on a zero divisor; use [`RatFunc::checked_div`] to get an error instead.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::from_int(v)
    }
}

impl From<Rational> for RatFunc {
    fn from(r: Rational) -> Self {
        RatFunc::from_rational(r)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let mut factors: Vec<String> = Vec::new();
        if !self.den.mono.is_one() {
            factors.push(self.den.mono.to_string());
        }
        for (&d, &e) in &self.den.cyclo {
            let phi = Poly::from_int_dense(Var::Q, &cyclotomic_int(d));
            if e == 1 {
                factors.push(format!("({phi})"));
            } else {
                factors.push(format!("({phi})^{e}"));
            }
        }
        if !self.den.rest.is_one() {
            factors.push(format!("({})", self.den.rest));
        }
        if factors.len() == 1 {
            write!(f, "/{}", factors[0])
        } else {
            write!(f, "/({})", factors.join("*"))
        }
    }
}

/// `n` as a rational function.
pub fn integer(n: i64) -> RatFunc {
    RatFunc::from_rational(int(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rat;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn one_minus_q() -> RatFunc {
        &integer(1) - &q()
    }

    #[test]
    fn additive_inverse() {
        let a = integer(1).checked_div(&one_minus_q()).unwrap();
        let b = -&a;
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn division_reduces_to_polynomial() {
        let num = &integer(1) - &q().pow(2).unwrap();
        let r = num.checked_div(&one_minus_q()).unwrap();
        assert_eq!(r, &integer(1) + &q());
        assert!(r.den().is_one());
    }

    #[test]
    fn multiplicative_inverse_pair() {
        let x = RatFunc::var(Var::X);
        let a = x.checked_div(&one_minus_q()).unwrap();
        assert_eq!(&a * &one_minus_q(), x);
        assert_eq!(integer(1).checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution_examples() {
        let e = integer(1).checked_div(&one_minus_q()).unwrap();
        let s = e.substitute(Var::Q, &q().pow(2).unwrap()).unwrap();
        assert_eq!(s, integer(1).checked_div(&(&integer(1) - &q().pow(2).unwrap())).unwrap());
        assert_eq!(s.den_cyclotomic_factors(), vec![(1, 1), (2, 1)]);

        let l = RatFunc::var(Var::L);
        assert_eq!(l.substitute(Var::L, &(&integer(2) * &l)).unwrap(), &integer(2) * &l);

        let lam = (&q() - &integer(1)).checked_div(&l).unwrap();
        let step = lam.substitute(Var::Q, &q().pow(2).unwrap()).unwrap();
        let both = step.substitute(Var::L, &(&integer(2) * &l)).unwrap();
        let expected = (&q().pow(2).unwrap() - &integer(1)).checked_div(&(&integer(2) * &l)).unwrap();
        assert_eq!(both, expected);
    }

    #[test]
    fn cyclotomic_power_rule() {
        assert_eq!(cyclotomic_at_power(1, 2), vec![1, 2]);
        assert_eq!(cyclotomic_at_power(2, 2), vec![4]);
        assert_eq!(cyclotomic_at_power(3, 4), vec![3, 6, 12]);
        assert_eq!(cyclotomic_at_power(6, 4), vec![24]);
    }

    #[test]
    fn invert_q_clears_denominators() {
        let q_int2 = &integer(1) + &q();
        let inv = q_int2.invert_q();
        assert_eq!(inv, (&integer(1) + &q()).checked_div(&q()).unwrap());
        let w = one_minus_q().checked_div(&(&integer(1) - &q().pow(3).unwrap())).unwrap();
        assert_eq!(w.invert_q().invert_q(), w);
    }

    #[test]
    fn complex_evaluation() {
        let mut at = HashMap::new();
        at.insert(Var::Q, Complex64::new(0.5, 0.0));
        let e = integer(1).checked_div(&one_minus_q()).unwrap();
        assert!((e.eval_complex(&at).unwrap() - Complex64::new(2.0, 0.0)).norm() < 1e-14);

        let lam = (&q() - &integer(1)).checked_div(&RatFunc::var(Var::L)).unwrap();
        at.insert(Var::L, Complex64::new(0.5f64.ln(), 0.0));
        assert!((lam.eval_complex(&at).unwrap().re - 0.721348).abs() < 1e-6);

        let x = RatFunc::var(Var::X).checked_div(&one_minus_q()).unwrap();
        at.insert(Var::Q, Complex64::new(0.3, 0.0));
        at.insert(Var::X, Complex64::new(0.3f64.powf(0.7), 0.0));
        let v = x.eval_complex(&at).unwrap();
        assert!((v.re - 0.6150166).abs() < 1e-6, "{v} {x}");

        let mut at = HashMap::new();
        at.insert(Var::Q, Complex64::new(1.0, 0.0));
        assert_eq!(e.eval_complex(&at), Err(Error::PoleAtPoint));
        assert_eq!(lam.eval_complex(&at), Err(Error::Unassigned("L")));
    }

    #[test]
    fn exact_evaluation() {
        let e = integer(-1).checked_div(&(&integer(1) + &q())).unwrap();
        let v = e.eval_exact(&[(Var::Q, Coeff::Rat(rat(1, 2)))]).unwrap();
        assert_eq!(v, Coeff::Rat(rat(-2, 3)));
    }

    #[test]
    fn display_factored() {
        let e = q().checked_div(&(&(&integer(1) + &q()) * &(&(&integer(1) + &q()) + &q().pow(2).unwrap()))).unwrap();
        assert_eq!(e.to_string(), "q/((1+q)*(1+q+q^2))");
    }
}
