//! JSON wire format for rational functions.

use serde::{Deserialize, Serialize};

use super::coeff::{parse_rational, rational_to_string, Coeff};
use super::cyclo::CycloElement;
use super::monomial::{Monomial, Var};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum WireCoeff {
    Rational(String),
    Cyclotomic { m: u32, c: Vec<String> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WireTerm {
    pub e: [u32; 4],
    pub c: WireCoeff,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WireRatFunc {
    pub vars: Vec<String>,
    pub num: Vec<WireTerm>,
    pub den: Vec<WireTerm>,
}

fn coeff_to_wire(c: &Coeff) -> WireCoeff {
    match c {
        Coeff::Rat(r) => WireCoeff::Rational(rational_to_string(r)),
        Coeff::Cyclo(z) => WireCoeff::Cyclotomic {
            m: z.order(),
            c: z.coeffs().iter().map(rational_to_string).collect(),
        },
    }
}

fn coeff_from_wire(w: &WireCoeff) -> Result<Coeff> {
    let parse = |s: &str| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")));
    match w {
        WireCoeff::Rational(s) => Ok(Coeff::Rat(parse(s)?)),
        WireCoeff::Cyclotomic { m, c } => {
            if *m == 0 {
                return Err(Error::Parse("cyclotomic order 0".into()));
            }
            let coeffs = c.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
            Ok(Coeff::from_cyclo(CycloElement::from_coeffs(*m, coeffs)))
        }
    }
}

fn poly_to_wire(p: &Poly) -> Vec<WireTerm> {
    p.terms().map(|(m, c)| WireTerm { e: m.0, c: coeff_to_wire(c) }).collect()
}

fn poly_from_wire(terms: &[WireTerm], perm: &[usize; 4]) -> Result<Poly> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut e = [0u32; 4];
        for (i, &slot) in perm.iter().enumerate() {
            e[slot] = t.e[i];
        }
        out.push((Monomial(e), coeff_from_wire(&t.c)?));
    }
    Ok(Poly::from_terms(out))
}

impl RatFunc {
    pub fn to_wire(&self) -> WireRatFunc {
        WireRatFunc {
            vars: Var::ALL.iter().map(|v| v.name().to_string()).collect(),
            num: poly_to_wire(self.num()),
            den: poly_to_wire(&self.den()),
        }
    }

    pub fn from_wire(w: &WireRatFunc) -> Result<Self> {
        if w.vars.len() != 4 {
            return Err(Error::Parse("expected four variables".into()));
        }
        let mut perm = [0usize; 4];
        let mut seen = [false; 4];
        for (i, name) in w.vars.iter().enumerate() {
            let v = Var::parse(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            if seen[v.index()] {
                return Err(Error::Parse(format!("repeated variable {name:?}")));
            }
            seen[v.index()] = true;
            perm[i] = v.index();
        }
        let num = poly_from_wire(&w.num, &perm)?;
        let den = poly_from_wire(&w.den, &perm)?;
        RatFunc::new(num, den)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("wire format serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("wire format serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let w: WireRatFunc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(&w)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let w: WireRatFunc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(&w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratfunc::integer;

    #[test]
    fn round_trip_rational() {
        let q = RatFunc::q();
        let e = q.checked_div(&(&(&integer(1) + &q) * &(&(&integer(1) + &q) + &(&q * &q)))).unwrap();
        let s = e.to_json();
        assert!(s.contains("\"vars\":[\"q\",\"L\",\"X\",\"Y\"]"));
        assert_eq!(RatFunc::from_json(&s).unwrap(), e);
    }

    #[test]
    fn round_trip_cyclotomic() {
        let zeta = Coeff::from_cyclo(CycloElement::root_of_unity(3, 1));
        let e = RatFunc::constant(zeta).checked_div(&(&integer(1) - &RatFunc::var(Var::X))).unwrap();
        let s = e.to_json();
        assert!(s.contains("\"m\":3"));
        assert_eq!(RatFunc::from_json(&s).unwrap(), e);
    }

    #[test]
    fn rejects_malformed() {
        assert!(RatFunc::from_json("{\"vars\":[\"q\"],\"num\":[],\"den\":[]}").is_err());
        let zero_den = "{\"vars\":[\"q\",\"L\",\"X\",\"Y\"],\"num\":[],\"den\":[]}";
        assert_eq!(RatFunc::from_json(zero_den), Err(Error::DivisionByZero));
    }
}
