//! Cyclotomic fields `Q(ζ_m)`, stored as residues modulo `Φ_m`.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::dense::{cyclotomic_int, euler_phi, DensePoly, Field};
use crate::error::{Error, Result};

/// Univariate polynomial over Q in the reserved symbol `z`.
pub type UniPoly = DensePoly<BigRational>;

/// The `m`-th cyclotomic polynomial, obtained by dividing `z^m − 1` by every
/// `Φ_d` with `d | m`, `d < m`.
pub fn cyclo_phi(m: u32) -> UniPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut coeffs = vec![BigRational::zero(); m as usize + 1];
    coeffs[0] = -<BigRational as Field>::f_one();
    coeffs[m as usize] = <BigRational as Field>::f_one();
    let mut acc = UniPoly::new(coeffs);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem(&cyclo_phi(d));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// Element of `Q(ζ_m)` as `Σ c_i ζ^i`, `i < φ(m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycloElement {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        CycloElement { order, coeffs: vec![BigRational::zero(); euler_phi(order) as usize] }
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = r;
        e
    }

    /// `ζ_m^k`, with `k` taken modulo `m`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = <BigRational as Field>::f_one();
        Self::reduce_from(order, raw)
    }

    /// Builds an element from arbitrary-length coefficients, reducing mod `Φ_m`.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        Self::reduce_from(order, coeffs)
    }

    fn reduce_from(order: u32, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_int(order);
        let deg = phi.len() - 1;
        if raw.len() > deg {
            for i in (deg..raw.len()).rev() {
                if raw[i].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut raw[i], BigRational::zero());
                for (j, &d) in phi.iter().enumerate().take(deg) {
                    if d != 0 {
                        raw[i - deg + j] -= &c * BigRational::from_integer(d.into());
                    }
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        CycloElement { order, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express in `Q(ζ_target)` via `ζ_m = ζ_target^{target/m}`.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order), "lift target must be a multiple of the order");
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::reduce_from(target, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.order.lcm(&b.order);
        (a.lift(m), b.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloElement { order: a.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycloElement { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let n = a.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::reduce_from(a.order, raw)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloElement { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let a = UniPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&cyclo_phi(self.order));
        // Φ_m is irreducible, so the gcd is 1 for every nonzero residue.
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(Self::reduce_from(self.order, s.coeffs))
    }

    /// Complex embedding `ζ_m ↦ exp(2πi/m)`.
    pub fn to_complex(&self) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.order as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * w + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z{}", self.order)?,
                _ => write!(f, "{c}*z{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_small_orders() {
        assert_eq!(cyclo_phi(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclo_phi(4), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclo_phi(6), UniPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn product_of_phis_is_binomial() {
        for m in 1..=12u32 {
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(UniPoly::one(), |acc, d| acc.mul(&cyclo_phi(d)));
            let mut target = vec![0i64; m as usize + 1];
            target[0] = -1;
            target[m as usize] = 1;
            assert_eq!(prod, UniPoly::from_ints(&target), "m = {m}");
            let int: Vec<i64> = cyclotomic_int(m);
            assert_eq!(cyclo_phi(m), UniPoly::from_ints(&int));
        }
    }

    #[test]
    fn inverse_examples() {
        let z4 = CycloElement::root_of_unity(4, 1);
        assert_eq!(z4.inverse().unwrap(), z4.neg());
        let z3 = CycloElement::root_of_unity(3, 1);
        let expected = CycloElement::from_coeffs(3, vec![rat(-1, 1), rat(-1, 1)]);
        assert_eq!(z3.inverse().unwrap(), expected);
        assert_eq!(CycloElement::root_of_unity(3, 2), expected);
        let one = CycloElement::from_rational(5, rat(1, 1));
        assert_eq!(one.inverse().unwrap(), one);
        assert_eq!(CycloElement::zero(5).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn roots_close_the_cycle() {
        for m in 1..=12u32 {
            let z = CycloElement::root_of_unity(m, 1);
            let mut acc = CycloElement::from_rational(m, rat(1, 1));
            for _ in 0..m {
                acc = acc.mul(&z);
            }
            assert_eq!(acc.as_rational(), Some(rat(1, 1)));
        }
    }

    #[test]
    fn lifting_preserves_arithmetic() {
        let a = CycloElement::root_of_unity(4, 1);
        let b = CycloElement::root_of_unity(6, 1);
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, CycloElement::root_of_unity(12, 5));
        let back = prod.mul(&b.inverse().unwrap());
        assert_eq!(back, a.lift(12));
        assert!((a.lift(12).to_complex() - a.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn arbitrary_inverses() {
        let a = CycloElement::from_coeffs(7, vec![rat(2, 3), rat(-1, 1), rat(0, 1), rat(5, 2)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).as_rational(), Some(rat(1, 1)));
    }
}
