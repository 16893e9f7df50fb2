//! Dirichlet characters with exact cyclotomic values.

use std::sync::Arc;

use num_integer::Integer;

use crate::algebra::{Coeff, CycloElement};
use crate::error::{Error, Result};

/// One cyclic factor of `(Z/f)*`, generated by `generator` modulo `prime_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFactor {
    pub prime: u64,
    pub prime_power: u64,
    pub generator: u64,
    pub order: u64,
    /// The generator lifted to a residue mod `f` that is `1` at every other prime.
    pub lifted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupStructure {
    pub modulus: u64,
    pub factors: Vec<CyclicFactor>,
}

pub fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u128 = 1;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Smallest primitive root modulo an odd prime.
pub fn primitive_root(p: u64) -> u64 {
    let ls: Vec<u64> = factorize(p - 1).into_iter().map(|(l, _)| l).collect();
    (2..p)
        .find(|&g| ls.iter().all(|&l| mod_pow(g, (p - 1) / l, p) != 1))
        .unwrap_or(1)
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut k = 1;
    while x != 1 % m {
        x = (x as u128 * g as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

/// `x ≡ a (mod m1)`, `x ≡ 1 (mod m2)` with coprime moduli.
fn crt_with_one(a: u64, m1: u64, m2: u64) -> u64 {
    let m = m1 * m2;
    (0..m2).map(|t| a + t * m1).find(|x| x % m2 == 1 % m2).unwrap_or(a) % m.max(1)
}

impl UnitGroupStructure {
    pub fn new(f: u64) -> Self {
        assert!(f >= 1, "modulus must be positive");
        let mut factors = Vec::new();
        for (p, e) in factorize(f) {
            let pe = p.pow(e);
            let others = f / pe;
            let mut push = |generator: u64, order: u64| {
                debug_assert_eq!(multiplicative_order(generator, pe), order);
                factors.push(CyclicFactor {
                    prime: p,
                    prime_power: pe,
                    generator,
                    order,
                    lifted: crt_with_one(generator, pe, others),
                });
            };
            if p == 2 {
                match e {
                    1 => {}
                    2 => push(3, 2),
                    _ => {
                        push(pe - 1, 2);
                        push(5, pe / 4);
                    }
                }
            } else {
                let mut g = primitive_root(p);
                if e > 1 && mod_pow(g, p - 1, p * p) == 1 {
                    g += p;
                }
                push(g, pe / p * (p - 1));
            }
        }
        UnitGroupStructure { modulus: f, factors }
    }

    pub fn group_order(&self) -> u64 {
        self.factors.iter().map(|c| c.order).product()
    }

    /// Residue with the given exponent on each generator.
    pub fn element(&self, exps: &[u64]) -> u64 {
        let f = self.modulus;
        self.factors
            .iter()
            .zip(exps)
            .fold(1 % f, |acc, (c, &e)| (acc as u128 * mod_pow(c.lifted, e, f) as u128 % f as u128) as u64)
    }

    /// Discrete logarithms of every residue mod `f`; `None` off the units.
    fn log_table(&self) -> Vec<Option<Vec<u64>>> {
        let f = self.modulus as usize;
        let mut table = vec![None; f];
        let mut exps = vec![0u64; self.factors.len()];
        loop {
            table[self.element(&exps) as usize] = Some(exps.clone());
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return table;
                }
                exps[i] += 1;
                if exps[i] < self.factors[i].order {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

/// A Dirichlet character mod `f`, `χ(a) = ζ_m^{k(a)}` on units and `0` elsewhere.
#[derive(Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    exponents: Vec<u64>,
    order: u32,
    /// `k(a)` for each residue, `None` for non-units.
    powers: Arc<Vec<Option<u32>>>,
}

impl std::fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "χ[{}.{} exps={:?} order={}]", self.modulus, self.index, self.exponents, self.order)
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    pub fn trivial(f: u64) -> Self {
        enumerate_characters(f).swap_remove(0)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Position in [`enumerate_characters`].
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Order of the character, i.e. `m` with values in `μ_m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// `k` with `χ(a) = ζ_m^k`, or `None` when `gcd(a, f) > 1`.
    pub fn power(&self, a: i64) -> Option<u32> {
        let r = a.rem_euclid(self.modulus as i64) as usize;
        self.powers[r]
    }

    pub fn value_cyclo(&self, a: i64) -> CycloElement {
        match self.power(a) {
            Some(k) => CycloElement::root_of_unity(self.order, k as i64),
            None => CycloElement::zero(self.order),
        }
    }

    pub fn value(&self, a: i64) -> Coeff {
        match self.power(a) {
            Some(0) => Coeff::one(),
            Some(k) => Coeff::from_cyclo(CycloElement::root_of_unity(self.order, k as i64)),
            None => Coeff::zero(),
        }
    }

    pub fn conductor(&self) -> u64 {
        let f = self.modulus;
        (1..=f)
            .filter(|d| f.is_multiple_of(*d))
            .find(|&d| {
                (0..f as i64)
                    .filter(|a| (*a as u64) % d == 1 % d)
                    .all(|a| matches!(self.power(a), Some(0) | None))
            })
            .unwrap_or(f)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }
}

/// All `φ(f)` characters mod `f`, ordered lexicographically by exponent tuple.
pub fn enumerate_characters(f: u64) -> Vec<DirichletCharacter> {
    let group = UnitGroupStructure::new(f);
    let logs = group.log_table();
    let orders: Vec<u64> = group.factors.iter().map(|c| c.order).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; orders.len()];
    loop {
        let m = exps
            .iter()
            .zip(&orders)
            .fold(1u64, |acc, (&e, &o)| acc.lcm(&(o / e.gcd(&o))));
        let powers = logs
            .iter()
            .map(|entry| {
                entry.as_ref().map(|ls| {
                    let k = exps.iter().zip(&orders).zip(ls).fold(0u64, |acc, ((&e, &o), &l)| {
                        let oi = o / e.gcd(&o);
                        acc + (e / e.gcd(&o)) * (m / oi) * l
                    });
                    (k % m) as u32
                })
            })
            .collect();
        out.push(DirichletCharacter {
            modulus: f,
            index: out.len(),
            exponents: exps.clone(),
            order: m as u32,
            powers: Arc::new(powers),
        });
        let mut i = exps.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
        }
    }
}

/// The character `f.index`.
pub fn character(f: u64, index: usize) -> Result<DirichletCharacter> {
    if f == 0 {
        return Err(Error::InvalidFamily("character modulus must be positive".into()));
    }
    let mut all = enumerate_characters(f);
    if index >= all.len() {
        return Err(Error::InvalidFamily(format!("mod {f} has only {} characters", all.len())));
    }
    Ok(all.swap_remove(index))
}

/// `Σ_{d|f} μ(f/d) φ(d)`.
pub fn primitive_count_formula(f: u64) -> i64 {
    (1..=f)
        .filter(|d| f.is_multiple_of(*d))
        .map(|d| mobius(f / d) * euler_phi(d) as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn structure_orders() {
        for f in 1..=60 {
            let g = UnitGroupStructure::new(f);
            assert_eq!(g.group_order(), euler_phi(f), "f={f}");
            for c in &g.factors {
                assert_eq!(multiplicative_order(c.generator, c.prime_power), c.order);
            }
        }
    }

    #[test]
    fn small_moduli() {
        let one = enumerate_characters(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].value(7), Coeff::one());

        let four = enumerate_characters(4);
        assert_eq!(four.len(), 2);
        assert!(four[0].is_trivial());
        assert_eq!(four[1].value(3), Coeff::from_int(-1));
        assert!(four[1].value(2).is_zero());

        let five = enumerate_characters(5);
        assert_eq!(five.len(), 4);
        let quad = five.iter().find(|c| c.order() == 2).unwrap();
        assert_eq!(quad.value(2), Coeff::from_int(-1));
        assert_eq!(quad.value(3), Coeff::from_int(-1));
        assert_eq!(quad.value(4), Coeff::from_int(1));
        let quartic = five.iter().find(|c| c.order() == 4 && c.power(2) == Some(1)).unwrap();
        assert_eq!(quartic.value(4), Coeff::from_int(-1));
    }

    #[test]
    fn conductors() {
        assert_eq!(DirichletCharacter::trivial(6).conductor(), 1);
        let eight = enumerate_characters(8);
        let induced = eight
            .iter()
            .find(|c| c.value(3) == Coeff::from_int(-1) && c.value(5) == Coeff::one())
            .unwrap();
        assert_eq!(induced.conductor(), 4);
        assert_eq!(enumerate_characters(3)[1].conductor(), 3);
    }

    #[test]
    fn cyclotomic_values_are_roots_of_unity() {
        let seven = enumerate_characters(7);
        for chi in &seven {
            for a in 1..7 {
                let v = chi.value(a);
                assert_eq!(v.pow(6), Coeff::one());
            }
        }
        assert_eq!(seven[1].value(0), Coeff::Rat(int(0)));
    }
}
