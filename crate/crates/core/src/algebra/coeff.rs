//! The coefficient ring: exact rationals, or elements of a cyclotomic field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclo::CycloElement;
use super::dense::Field;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Coefficient of a polynomial term.
///
/// A `Cyclo` value is never rational: constructors collapse those to `Rat`,
/// so the variant tag itself says whether a value lies in Q.
#[derive(Clone)]
pub enum Coeff {
    Rat(Rational),
    Cyclo(CycloElement),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Coeff::Rat(Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Coeff::Rat(int(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Coeff::Rat(Rational::from_integer(v))
    }

    pub fn from_cyclo(c: CycloElement) -> Self {
        match c.as_rational() {
            Some(r) => Coeff::Rat(r),
            None => Coeff::Cyclo(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Cyclo(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Rat(r) => Some(r),
            Coeff::Cyclo(_) => None,
        }
    }

    /// Cyclotomic order needed to hold this value (1 for rationals).
    pub fn order(&self) -> u32 {
        match self {
            Coeff::Rat(_) => 1,
            Coeff::Cyclo(c) => c.order(),
        }
    }

    fn as_cyclo(&self, order: u32) -> CycloElement {
        match self {
            Coeff::Rat(r) => CycloElement::from_rational(order, r.clone()),
            Coeff::Cyclo(c) => c.lift(order),
        }
    }

    fn lcm_order(&self, other: &Self) -> u32 {
        self.order().lcm(&other.order())
    }

    pub fn inverse(&self) -> Option<Self> {
        match self {
            Coeff::Rat(r) if r.is_zero() => None,
            Coeff::Rat(r) => Some(Coeff::Rat(r.recip())),
            Coeff::Cyclo(c) => c.inverse().ok().map(Coeff::from_cyclo),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coeff::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Coeff::Rat(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Coeff::Cyclo(c) => c.to_complex(),
        }
    }

    /// Crude magnitude used for numeric pruning.
    pub fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => a == b,
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => a.sub(b).is_zero(),
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{r}"),
            Coeff::Cyclo(c) => write!(f, "{c}"),
        }
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::Rat(r)
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_int(v)
    }
}

impl From<CycloElement> for Coeff {
    fn from(c: CycloElement) -> Self {
        Coeff::from_cyclo(c)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            _ => {
                let m = self.lcm_order(rhs);
                Coeff::from_cyclo(self.as_cyclo(m).add(&rhs.as_cyclo(m)))
            }
        }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Rat(a), Coeff::Cyclo(c)) | (Coeff::Cyclo(c), Coeff::Rat(a)) => {
                Coeff::from_cyclo(c.scale(a))
            }
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => Coeff::from_cyclo(a.mul(b)),
        }
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a / b),
            _ => self * &rhs.inverse().expect("division by zero coefficient"),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(-r),
            Coeff::Cyclo(c) => Coeff::Cyclo(c.neg()),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl Field for Coeff {
    fn f_zero() -> Self {
        Coeff::zero()
    }
    fn f_one() -> Self {
        Coeff::one()
    }
    fn f_is_zero(&self) -> bool {
        Coeff::is_zero(self)
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
        Coeff::from_int(v)
    }
}

/// Formats a rational as the `"a/b"` wire string.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_orders_lift_to_lcm() {
        let i = Coeff::from(CycloElement::root_of_unity(4, 1));
        let w = Coeff::from(CycloElement::root_of_unity(3, 1));
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(&(&p / &w), &i);
        // i² = −1 collapses back to a rational
        assert_eq!(&i * &i, Coeff::from_int(-1));
        assert!(matches!(&i * &i, Coeff::Rat(_)));
    }

    #[test]
    fn wire_strings() {
        assert_eq!(rational_to_string(&rat(-3, 6)), "-1/2");
        assert_eq!(parse_rational("4/-8"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
