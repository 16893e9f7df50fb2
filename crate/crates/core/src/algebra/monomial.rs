use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The closed indeterminate universe: base `q`, log-marker `L`, `X = q^x`, `Y = q^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "q")]
    Q,
    L,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::L, Var::X, Var::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::L => "L",
            Var::X => "X",
            Var::Y => "Y",
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "L" => Some(Var::L),
            "X" => Some(Var::X),
            "Y" => Some(Var::Y),
            _ => None,
        }
    }
}

/// Exponent vector `[q, L, X, Y]`.
///
/// Ordered graded-lexicographically with `q < L < X < Y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..4 {
            out.0[i] += other.0[i];
        }
        out
    }

    /// `self / other`, requiring divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..4 {
            out.0[i] = self.0[i].checked_sub(other.0[i]).expect("monomial not divisible");
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..4).all(|i| self.0[i] <= other.0[i])
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..4 {
            out.0[i] = self.0[i].min(other.0[i]);
        }
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..4 {
            out.0[i] = self.0[i].max(other.0[i]);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut out = *self;
        for x in out.0.iter_mut() {
            *x *= e;
        }
        out
    }

    pub fn without(&self, v: Var) -> Monomial {
        let mut out = *self;
        out.0[v.index()] = 0;
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0[3].cmp(&other.0[3]))
            .then_with(|| self.0[2].cmp(&other.0[2]))
            .then_with(|| self.0[1].cmp(&other.0[1]))
            .then_with(|| self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{e}", v.name())?;
            }
        }
        Ok(())
    }
}
