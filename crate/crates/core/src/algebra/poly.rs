//! Sparse multivariate polynomials over `Coeff` in the indeterminates `q, L, X, Y`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::coeff::Coeff;
use super::dense::{div_exact_monic_int, DensePoly};
use super::monomial::{Monomial, Var};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Coeff::one(), Monomial::var(v, 1))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Coeff::one(), m)
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(iter: I) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in iter {
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Univariate polynomial in `v` from coefficients listed constant-first.
    pub fn from_dense(v: Var, coeffs: &[Coeff]) -> Self {
        Poly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone()))
                .collect(),
        }
    }

    pub fn from_int_dense(v: Var, coeffs: &[i64]) -> Self {
        let c: Vec<Coeff> = coeffs.iter().map(|&x| Coeff::from_int(x)).collect();
        Self::from_dense(v, &c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(Coeff::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coeff)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The term with the largest monomial in the graded order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// The constant value, if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(Monomial, Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// True when every monomial is a pure power of `q`.
    pub fn is_univariate_q(&self) -> bool {
        !self.contains(Var::L) && !self.contains(Var::X) && !self.contains(Var::Y)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Divides every term by `m`; the caller guarantees divisibility.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.div(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies a term-wise map; results are re-merged.
    pub fn map_terms<F>(&self, f: F) -> Poly
    where
        F: Fn(&Monomial, &Coeff) -> (Monomial, Coeff),
    {
        Poly::from_terms(self.terms.iter().map(|(m, c)| f(m, c)))
    }

    /// Groups terms by their non-`q` part, giving dense coefficient vectors in `q`.
    pub fn q_slices(&self) -> BTreeMap<Monomial, Vec<Coeff>> {
        let mut out: BTreeMap<Monomial, Vec<Coeff>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.without(Var::Q);
            let e = m.exp(Var::Q) as usize;
            let slot = out.entry(key).or_default();
            if slot.len() <= e {
                slot.resize(e + 1, Coeff::zero());
            }
            slot[e] = c.clone();
        }
        out
    }

    pub fn from_q_slices(slices: &BTreeMap<Monomial, Vec<Coeff>>) -> Poly {
        let mut terms = BTreeMap::new();
        for (key, coeffs) in slices {
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(key.mul(&Monomial::var(Var::Q, i as u32)), c.clone());
                }
            }
        }
        Poly { terms }
    }

    /// Exact division by a monic integer polynomial in `q` (given constant-first).
    pub fn div_exact_q(&self, divisor: &[i64]) -> Option<Poly> {
        let mut slices = self.q_slices();
        for coeffs in slices.values_mut() {
            *coeffs = div_exact_monic_int(coeffs, divisor)?;
        }
        Some(Self::from_q_slices(&slices))
    }

    /// Dense coefficients in `q`; only meaningful when `is_univariate_q`.
    pub fn to_dense_q(&self) -> DensePoly<Coeff> {
        let mut v = vec![Coeff::zero(); self.degree_in(Var::Q) as usize + 1];
        for (m, c) in &self.terms {
            v[m.exp(Var::Q) as usize] = c.clone();
        }
        DensePoly::new(v)
    }

    pub fn eval_complex(&self, point: &[Complex64; 4]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t *= point[v.index()].powu(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Largest cyclotomic order among the coefficients.
    pub fn coeff_order(&self) -> u32 {
        use num_integer::Integer;
        self.terms.values().fold(1, |acc, c| acc.lcm(&c.order()))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    let s = &*e + c;
                    if s.is_zero() {
                        terms.remove(m);
                    } else {
                        *e = s;
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        Poly { terms }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // low-degree terms first reads more naturally: 1+q+q^2
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = match c {
                Coeff::Rat(r) if r < &num_traits::Zero::zero() => (true, Coeff::Rat(-r)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{body}")?;
            } else if body.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{body}*{m}")?;
            }
        }
        Ok(())
    }
}
