//! The q-Bernoulli engine.
//!
//! Every family is a finite alternating sum
//! `(1−q)^{−n} Σ_l C(n,l) (−1)^l arg^l Π_j w(l·w_j + δ_j)` with the weight
//! `w(k) = k(1−q)/(1−q^k)`. The weight at `k = 0` is the zero-mode, either the
//! formal `(q−1)/L` or dropped entirely.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{integer, Coeff, Monomial, Poly, RatFunc, Var};
use crate::characters::character;
use crate::error::{Error, Result};
use crate::qcomb::{binomial, q_int};

/// How the weight at argument 0 is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroMode {
    /// `(q−1)/L`, the limit `p^N/[p^N]_q` with `L` standing for `log q`.
    #[default]
    Log,
    /// The zero-mode contributes nothing.
    Drop,
}

/// Factors `(w_j, δ_j)`; factor `j` contributes `w(l·w_j + δ_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpec {
    factors: Vec<(i64, i64)>,
}

impl WeightSpec {
    pub fn new(factors: Vec<(i64, i64)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidFamily("weight spec needs at least one factor".into()));
        }
        if factors.iter().any(|&(w, _)| w == 0) {
            return Err(Error::InvalidFamily("multipliers must be nonzero".into()));
        }
        Ok(WeightSpec { factors })
    }

    pub fn carlitz() -> Self {
        WeightSpec { factors: vec![(1, 1)] }
    }

    pub fn twisted() -> Self {
        WeightSpec { factors: vec![(1, 0)] }
    }

    pub fn order_r(r: u32) -> Self {
        assert!(r >= 1);
        WeightSpec { factors: vec![(1, 0); r as usize] }
    }

    pub fn hr(h: i64, r: u32) -> Self {
        assert!(r >= 1);
        WeightSpec { factors: (1..=r as i64).map(|j| (1, h - j)).collect() }
    }

    pub fn factors(&self) -> &[(i64, i64)] {
        &self.factors
    }

    pub fn arity(&self) -> u32 {
        self.factors.len() as u32
    }
}

/// `q^d − 1 = Π_{d'|d} Φ_{d'}`; the factors with `d' > 1`.
fn proper_cyclotomic_divisors(k: u64) -> Vec<(u32, u32)> {
    (2..=k).filter(|d| k.is_multiple_of(*d)).map(|d| (d as u32, 1)).collect()
}

pub fn weight_with(k: i64, mode: ZeroMode) -> RatFunc {
    if k == 0 {
        return match mode {
            ZeroMode::Log => (&RatFunc::q() - &integer(1)).checked_div(&RatFunc::var(Var::L)).expect("L ≠ 0"),
            ZeroMode::Drop => RatFunc::zero(),
        };
    }
    let m = k.unsigned_abs();
    let num = if k > 0 {
        Poly::constant(Coeff::from_int(k))
    } else {
        Poly::term(Coeff::from_int(m as i64), Monomial::var(Var::Q, m as u32))
    };
    RatFunc::with_cyclotomic_den(num, Monomial::ONE, &proper_cyclotomic_divisors(m))
}

/// `k/[k]_q`, with the zero-mode `(q−1)/L` at `k = 0`.
pub fn weight(k: i64) -> RatFunc {
    weight_with(k, ZeroMode::Log)
}

/// `(1−q)^{−n}`.
pub fn inv_one_minus_q_pow(n: u32) -> RatFunc {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    RatFunc::with_cyclotomic_den(Poly::constant(Coeff::from_int(sign)), Monomial::ONE, &[(1, n)])
}

pub fn gen_beta_with(n: u32, spec: &WeightSpec, arg: &RatFunc, mode: ZeroMode) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut arg_pow = RatFunc::one();
    for l in 0..=n as i64 {
        let mut term = &RatFunc::from_rational(crate::algebra::Rational::from_integer(binomial(n as u64, l as u64)))
            * &arg_pow;
        if l % 2 == 1 {
            term = -term;
        }
        for &(w, d) in &spec.factors {
            term = &term * &weight_with(l * w + d, mode);
        }
        acc = &acc + &term;
        arg_pow = &arg_pow * arg;
    }
    &acc * &inv_one_minus_q_pow(n)
}

/// `(1−q)^{−n} Σ_l C(n,l) (−1)^l arg^l Π_j w(l·w_j + δ_j)`.
pub fn gen_beta(n: u32, spec: &WeightSpec, arg: &RatFunc) -> RatFunc {
    gen_beta_with(n, spec, arg, ZeroMode::Log)
}

/// Substitutes `q → q^f` together with `L → f·L`.
pub fn rebase(e: &RatFunc, f: u32) -> RatFunc {
    if f == 1 {
        return e.clone();
    }
    e.map_q_power(f).scale_var(Var::L, &Coeff::from_int(f as i64))
}

/// Substitutes `q → 1/q` together with `L → −L`.
pub fn invert_base(e: &RatFunc) -> RatFunc {
    e.invert_q().scale_var(Var::L, &Coeff::from_int(-1))
}

/// The symbolic argument `X = q^x`.
pub fn x_arg() -> RatFunc {
    RatFunc::var(Var::X)
}

/// `q^x` for an integer `x`.
pub fn int_arg(x: i64) -> RatFunc {
    RatFunc::q_pow(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Carlitz,
    Twisted,
    OrderR,
    Hr,
    Barnes,
    Chi,
    ChiOrderR,
    ChiHr,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Carlitz,
        FamilyKind::Twisted,
        FamilyKind::OrderR,
        FamilyKind::Hr,
        FamilyKind::Barnes,
        FamilyKind::Chi,
        FamilyKind::ChiOrderR,
        FamilyKind::ChiHr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Carlitz => "carlitz",
            FamilyKind::Twisted => "twisted",
            FamilyKind::OrderR => "order_r",
            FamilyKind::Hr => "hr",
            FamilyKind::Barnes => "barnes",
            FamilyKind::Chi => "chi",
            FamilyKind::ChiOrderR => "chi_order_r",
            FamilyKind::ChiHr => "chi_hr",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn is_character(self) -> bool {
        matches!(self, FamilyKind::Chi | FamilyKind::ChiOrderR | FamilyKind::ChiHr)
    }

    /// Integrand of the defining integral, for listings.
    pub fn integrand(self) -> &'static str {
        match self {
            FamilyKind::Carlitz => "[x]^n dμ_q(x)",
            FamilyKind::Twisted => "q^{-y}[x+y]^n dμ_q(y)",
            FamilyKind::OrderR => "q^{-Σy_j}[x+Σy_j]^n Π dμ_q(y_j)",
            FamilyKind::Hr => "q^{Σ(h-j-1)y_j}[x+Σy_j]^n Π dμ_q(y_j)",
            FamilyKind::Barnes => "q^{Σ(δ_j-1)y_j}[x+Σw_j y_j]^n Π dμ_q(y_j)",
            FamilyKind::Chi => "χ(y)q^{-y}[x+y]^n dμ_q(y)",
            FamilyKind::ChiOrderR => "Πχ(y_j)q^{-Σy_j}[x+Σy_j]^n Π dμ_q(y_j)",
            FamilyKind::ChiHr => "Πχ(y_j)q^{Σ(h-j-1)y_j}[x+Σy_j]^n Π dμ_q(y_j)",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fully parameterised family member `β_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaFamily {
    pub kind: FamilyKind,
    pub n: u32,
    pub r: u32,
    pub h: i64,
    /// Barnes factors; ignored by other kinds.
    pub spec: Option<WeightSpec>,
    /// Character modulus and index, for character kinds.
    pub f: u64,
    pub chi: usize,
}

impl BetaFamily {
    fn base(kind: FamilyKind, n: u32) -> Self {
        BetaFamily { kind, n, r: 1, h: 0, spec: None, f: 1, chi: 0 }
    }

    pub fn carlitz(n: u32) -> Self {
        Self::base(FamilyKind::Carlitz, n)
    }

    pub fn twisted(n: u32) -> Self {
        Self::base(FamilyKind::Twisted, n)
    }

    pub fn order_r(n: u32, r: u32) -> Self {
        BetaFamily { r, ..Self::base(FamilyKind::OrderR, n) }
    }

    pub fn hr(n: u32, h: i64, r: u32) -> Self {
        BetaFamily { r, h, ..Self::base(FamilyKind::Hr, n) }
    }

    pub fn barnes(n: u32, spec: WeightSpec) -> Self {
        BetaFamily { r: spec.arity(), spec: Some(spec), ..Self::base(FamilyKind::Barnes, n) }
    }

    pub fn chi(n: u32, f: u64, chi: usize) -> Self {
        BetaFamily { f, chi, ..Self::base(FamilyKind::Chi, n) }
    }

    pub fn chi_order_r(n: u32, r: u32, f: u64, chi: usize) -> Self {
        BetaFamily { r, f, chi, ..Self::base(FamilyKind::ChiOrderR, n) }
    }

    pub fn chi_hr(n: u32, h: i64, r: u32, f: u64, chi: usize) -> Self {
        BetaFamily { r, h, f, chi, ..Self::base(FamilyKind::ChiHr, n) }
    }

    pub fn with_n(&self, n: u32) -> Self {
        BetaFamily { n, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::InvalidFamily("order r must be at least 1".into()));
        }
        if self.kind == FamilyKind::Barnes && self.spec.is_none() {
            return Err(Error::InvalidFamily("barnes family needs multipliers and shifts".into()));
        }
        if self.kind.is_character() {
            character(self.f, self.chi)?;
        }
        Ok(())
    }

    pub fn weight_spec(&self) -> WeightSpec {
        match self.kind {
            FamilyKind::Carlitz => WeightSpec::carlitz(),
            FamilyKind::Twisted | FamilyKind::Chi => WeightSpec::twisted(),
            FamilyKind::OrderR | FamilyKind::ChiOrderR => WeightSpec::order_r(self.r),
            FamilyKind::Hr | FamilyKind::ChiHr => WeightSpec::hr(self.h, self.r),
            FamilyKind::Barnes => self.spec.clone().expect("validated barnes spec"),
        }
    }

    /// The plain family underlying a character family.
    pub fn plain(&self) -> BetaFamily {
        let kind = match self.kind {
            FamilyKind::Chi => FamilyKind::Twisted,
            FamilyKind::ChiOrderR => FamilyKind::OrderR,
            FamilyKind::ChiHr => FamilyKind::Hr,
            k => k,
        };
        BetaFamily { kind, f: 1, chi: 0, ..self.clone() }
    }
}

impl fmt::Display for BetaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}", self.kind, self.n)?;
        match self.kind {
            FamilyKind::OrderR | FamilyKind::ChiOrderR => write!(f, ",r={}", self.r)?,
            FamilyKind::Hr | FamilyKind::ChiHr => write!(f, ",h={},r={}", self.h, self.r)?,
            FamilyKind::Barnes => write!(f, ",spec={:?}", self.weight_spec().factors)?,
            _ => {}
        }
        if self.kind.is_character() {
            write!(f, ",chi={}.{}", self.f, self.chi)?;
        }
        write!(f, ")")
    }
}

/// Value of a non-character family at `arg = q^x`.
pub fn family_beta(fam: &BetaFamily, arg: &RatFunc) -> Result<RatFunc> {
    family_beta_with(fam, arg, ZeroMode::Log)
}

pub fn family_beta_with(fam: &BetaFamily, arg: &RatFunc, mode: ZeroMode) -> Result<RatFunc> {
    if fam.kind.is_character() {
        return Err(Error::InvalidFamily(format!("{} needs a character; use chi_beta", fam.kind)));
    }
    fam.validate()?;
    Ok(gen_beta_with(fam.n, &fam.weight_spec(), arg, mode))
}

/// Value of a character family, defined through the distribution over residues mod `f`:
/// `[f]^{n−r} Σ_a Πχ(a_j) q^{Σδ_j a_j} β_{n,q^f}((x + Σ w_j a_j)/f)`.
pub fn chi_beta(fam: &BetaFamily, arg: &RatFunc) -> Result<RatFunc> {
    chi_beta_with(fam, arg, ZeroMode::Log)
}

pub fn chi_beta_with(fam: &BetaFamily, arg: &RatFunc, mode: ZeroMode) -> Result<RatFunc> {
    if !fam.kind.is_character() {
        return Err(Error::InvalidFamily(format!("{} carries no character", fam.kind)));
    }
    fam.validate()?;
    let chi = character(fam.f, fam.chi)?;
    let spec = fam.weight_spec();
    let f = fam.f;
    let r = spec.arity() as usize;

    // (Σ w_j a_j, Σ δ_j a_j) -> Σ Π χ(a_j)
    let mut groups: BTreeMap<(i64, i64), Coeff> = BTreeMap::new();
    let mut a = vec![0i64; r];
    loop {
        let mut c = Coeff::one();
        for &aj in &a {
            c = &c * &chi.value(aj);
        }
        if !c.is_zero() {
            let k = spec.factors.iter().zip(&a).map(|(&(w, _), &aj)| w * aj).sum();
            let t = spec.factors.iter().zip(&a).map(|(&(_, d), &aj)| d * aj).sum();
            let slot = groups.entry((k, t)).or_insert_with(Coeff::zero);
            *slot = &*slot + &c;
        }
        let mut i = 0;
        loop {
            if i == r {
                break;
            }
            a[i] += 1;
            if (a[i] as u64) < f {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }

    let rebased = rebase(&gen_beta_with(fam.n, &spec, &x_arg(), mode), f as u32);
    let mut acc = RatFunc::zero();
    for ((k, t), c) in groups {
        if c.is_zero() {
            continue;
        }
        let shifted = rebased.substitute(Var::X, &(&RatFunc::q_pow(k) * arg))?;
        acc = &acc + &(&shifted * &RatFunc::q_pow(t)).scale(&c);
    }
    let scale = q_int(f as i64).pow(fam.n as i64 - r as i64)?;
    Ok(&acc * &scale)
}

/// Any family at `arg`.
pub fn evaluate(fam: &BetaFamily, arg: &RatFunc) -> Result<RatFunc> {
    evaluate_with(fam, arg, ZeroMode::Log)
}

pub fn evaluate_with(fam: &BetaFamily, arg: &RatFunc, mode: ZeroMode) -> Result<RatFunc> {
    if fam.kind.is_character() {
        chi_beta_with(fam, arg, mode)
    } else {
        family_beta_with(fam, arg, mode)
    }
}

/// Wire form of a family member, e.g. `{"family":"hr","n":4,"h":3,"r":2,"arg":"X"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct FamilyDescriptor {
    pub family: String,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<i64>>,
    /// `"X"` for the symbolic argument or an integer `x` (so `X = q^x`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arg: Option<String>,
}

impl FamilyDescriptor {
    pub fn to_family(&self) -> Result<BetaFamily> {
        let kind = FamilyKind::parse(&self.family)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{}`", self.family)))?;
        let r = self.r.unwrap_or(1);
        let h = self.h.unwrap_or(0);
        let f = self.f.unwrap_or(1);
        let chi = self.chi.unwrap_or(0);
        let needs = |field: &str, present: bool| {
            if present {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{} requires `{field}`", kind.name())))
            }
        };
        let fam = match kind {
            FamilyKind::Carlitz => BetaFamily::carlitz(self.n),
            FamilyKind::Twisted => BetaFamily::twisted(self.n),
            FamilyKind::OrderR => BetaFamily::order_r(self.n, r),
            FamilyKind::Hr => {
                needs("h", self.h.is_some())?;
                BetaFamily::hr(self.n, h, r)
            }
            FamilyKind::Barnes => {
                let w = self.w.clone().ok_or_else(|| Error::InvalidFamily("barnes requires `w`".into()))?;
                let delta = self.delta.clone().unwrap_or_else(|| vec![0; w.len()]);
                if w.len() != delta.len() {
                    return Err(Error::InvalidFamily("`w` and `delta` differ in length".into()));
                }
                BetaFamily::barnes(self.n, WeightSpec::new(w.into_iter().zip(delta).collect())?)
            }
            FamilyKind::Chi => {
                needs("f", self.f.is_some())?;
                BetaFamily::chi(self.n, f, chi)
            }
            FamilyKind::ChiOrderR => {
                needs("f", self.f.is_some())?;
                BetaFamily::chi_order_r(self.n, r, f, chi)
            }
            FamilyKind::ChiHr => {
                needs("f", self.f.is_some())?;
                needs("h", self.h.is_some())?;
                BetaFamily::chi_hr(self.n, h, r, f, chi)
            }
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn arg_value(&self) -> Result<RatFunc> {
        parse_arg(self.arg.as_deref().unwrap_or("X"))
    }

    pub fn from_family(fam: &BetaFamily, arg: Option<String>) -> Self {
        let mut d = FamilyDescriptor { family: fam.kind.name().into(), n: fam.n, arg, ..Default::default() };
        match fam.kind {
            FamilyKind::OrderR | FamilyKind::ChiOrderR => d.r = Some(fam.r),
            FamilyKind::Hr | FamilyKind::ChiHr => {
                d.r = Some(fam.r);
                d.h = Some(fam.h);
            }
            FamilyKind::Barnes => {
                let spec = fam.weight_spec();
                d.w = Some(spec.factors.iter().map(|p| p.0).collect());
                d.delta = Some(spec.factors.iter().map(|p| p.1).collect());
            }
            _ => {}
        }
        if fam.kind.is_character() {
            d.f = Some(fam.f);
            d.chi = Some(fam.chi);
        }
        d
    }
}

/// `"X"`/`"symbolic"` keeps `X`; an integer `x` gives `q^x`.
pub fn parse_arg(s: &str) -> Result<RatFunc> {
    match s.trim() {
        "X" | "x" | "symbolic" => Ok(x_arg()),
        t => t
            .parse::<i64>()
            .map(int_arg)
            .map_err(|_| Error::Parse(format!("argument must be `symbolic` or an integer, got `{t}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn lam() -> RatFunc {
        weight(0)
    }

    #[test]
    fn weights() {
        assert_eq!(weight(1), integer(1));
        assert_eq!(weight(2), integer(2).checked_div(&(&integer(1) + &q())).unwrap());
        assert_eq!(weight(0), (&q() - &integer(1)).checked_div(&RatFunc::var(Var::L)).unwrap());
        for k in -5i64..=6 {
            if k == 0 {
                continue;
            }
            let direct = (&integer(k) * &(&integer(1) - &q())).checked_div(&(&integer(1) - &RatFunc::q_pow(k))).unwrap();
            assert_eq!(weight(k), direct, "k={k}");
        }
    }

    #[test]
    fn gen_beta_examples() {
        let one = integer(1);
        assert_eq!(gen_beta(0, &WeightSpec::carlitz(), &one), one);
        let two = &integer(1) + &q();
        assert_eq!(gen_beta(1, &WeightSpec::carlitz(), &one), integer(-1).checked_div(&two).unwrap());
        let x = x_arg();
        let expected = (&lam() - &x).checked_div(&(&integer(1) - &q())).unwrap();
        assert_eq!(gen_beta(1, &WeightSpec::twisted(), &x), expected);
        let three = &two + &(&q() * &q());
        assert_eq!(gen_beta(2, &WeightSpec::carlitz(), &one), q().checked_div(&(&two * &three)).unwrap());
    }

    #[test]
    fn family_examples() {
        let one = integer(1);
        assert_eq!(family_beta(&BetaFamily::hr(0, 2, 1), &one).unwrap(), one);
        assert_eq!(family_beta(&BetaFamily::hr(0, 1, 1), &one).unwrap(), lam());
        assert!(matches!(family_beta(&BetaFamily::chi(1, 3, 1), &one), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn rebase_examples() {
        let expected = (&RatFunc::q_pow(2) - &integer(1))
            .checked_div(&(&integer(2) * &RatFunc::var(Var::L)))
            .unwrap();
        assert_eq!(rebase(&lam(), 2), expected);
        assert_eq!(rebase(&weight(1), 5), integer(1));
        for f in 1..=6u32 {
            let lhs = &integer(f as i64).checked_div(&q_int(f as i64)).unwrap() * &rebase(&lam(), f);
            assert_eq!(lhs, lam());
        }
    }

    #[test]
    fn invert_base_examples() {
        assert_eq!(invert_base(&q_int(2)), (&integer(1) + &q()).checked_div(&q()).unwrap());
        let expected = (&q() - &integer(1)).checked_div(&(&q() * &RatFunc::var(Var::L))).unwrap();
        assert_eq!(invert_base(&lam()), expected);
    }

    #[test]
    fn chi_examples() {
        let one = integer(1);
        // nontrivial mod 4, n = 0
        assert!(chi_beta(&BetaFamily::chi(0, 4, 1), &one).unwrap().is_zero());
        // order 2 mod 3, n = 1
        let expected = (-q()).checked_div(&q_int(3)).unwrap();
        assert_eq!(chi_beta(&BetaFamily::chi(1, 3, 1), &one).unwrap(), expected);
    }

    #[test]
    fn trivial_character_collapses() {
        let x = x_arg();
        for n in 0..=4 {
            assert_eq!(chi_beta(&BetaFamily::chi(n, 1, 0), &x).unwrap(), gen_beta(n, &WeightSpec::twisted(), &x));
            assert_eq!(
                chi_beta(&BetaFamily::chi_hr(n, 2, 2, 1, 0), &x).unwrap(),
                gen_beta(n, &WeightSpec::hr(2, 2), &x)
            );
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let d: FamilyDescriptor = serde_json::from_str(r#"{"family":"hr","n":4,"h":3,"r":2,"arg":"X"}"#).unwrap();
        let fam = d.to_family().unwrap();
        assert_eq!(fam, BetaFamily::hr(4, 3, 2));
        assert_eq!(FamilyDescriptor::from_family(&fam, Some("X".into())), d);
        let c: FamilyDescriptor = serde_json::from_str(r#"{"family":"chi","n":2,"f":5,"chi":1}"#).unwrap();
        assert_eq!(c.to_family().unwrap(), BetaFamily::chi(2, 5, 1));
        assert!(serde_json::from_str::<FamilyDescriptor>(r#"{"family":"hr","n":1,"bogus":1}"#).is_err());
        assert!(FamilyDescriptor { family: "chi".into(), n: 1, f: Some(5), chi: Some(9), ..Default::default() }
            .to_family()
            .is_err());
    }
}
