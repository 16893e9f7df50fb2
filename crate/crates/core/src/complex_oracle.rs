//! Floating-point checks of the convergent series for `|q| < 1` and of the `q → 1` limits.
//!
//! Series are truncated by an explicit geometric tail bound, never a fixed term count.
//! `L` is assigned the principal `Log q`.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{Coeff, Poly, RatFunc, Rational, Var};
use crate::beta::{evaluate_with, x_arg, BetaFamily, ZeroMode};
use crate::characters::{enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::identities::{assemble, ClaimReport, Counterexample, VerificationReport, Verdict};
use crate::qcomb::classical_bernoulli_poly;

/// Truncation stops once the tail bound drops below this.
pub const TAIL_TARGET: f64 = 1e-13;
/// Largest `|q₀|` accepted.
pub const MAX_MODULUS: f64 = 0.9;
/// Absolute agreement required on top of the reported bound.
pub const ABS_TOLERANCE: f64 = 1e-9;

const MAX_TERMS: usize = 1_000_000;

/// `q₀^{x₀}` on the principal branch.
pub fn q_power(q0: Complex64, x0: f64) -> Complex64 {
    (q0.ln() * x0).exp()
}

/// `[x₀ + m]_q` as a complex number.
fn bracket(q0: Complex64, s: f64) -> Complex64 {
    (Complex64::one() - q_power(q0, s)) / (Complex64::one() - q0)
}

fn assignment(q0: Complex64, x0: f64) -> HashMap<Var, Complex64> {
    let mut at = HashMap::new();
    at.insert(Var::Q, q0);
    at.insert(Var::X, q_power(q0, x0));
    at.insert(Var::L, q0.ln());
    at
}

/// Evaluates a closed form at `q = q₀`, `X = q₀^{x₀}`, `L = Log q₀`.
pub fn closed_form_at(e: &RatFunc, q0: Complex64, x0: f64) -> Result<Complex64> {
    e.eval_complex(&assignment(q0, x0))
}

/// `Σ |c|·|monomial|`: scale of the rounding error of a polynomial evaluation.
fn abs_eval(p: &Poly, at: &HashMap<Var, Complex64>) -> f64 {
    p.terms()
        .map(|(m, c)| {
            Var::ALL.iter().fold(c.to_complex().norm(), |acc, v| {
                let e = m.exp(*v);
                if e == 0 {
                    acc
                } else {
                    acc * at.get(v).map_or(f64::NAN, |z| z.norm()).powi(e as i32)
                }
            })
        })
        .sum()
}

/// Closed form at the point with a first-order rounding estimate.
pub fn closed_form_with_error(e: &RatFunc, q0: Complex64, x0: f64) -> Result<(Complex64, f64)> {
    let at = assignment(q0, x0);
    let value = e.eval_complex(&at)?;
    let den = e.den();
    let d = den.eval_complex(&point_array(&at)).norm();
    let err = 64.0 * f64::EPSILON * (abs_eval(e.num(), &at) + value.norm() * abs_eval(&den, &at)) / d;
    Ok((value, err))
}

fn point_array(at: &HashMap<Var, Complex64>) -> [Complex64; 4] {
    let mut pt = [Complex64::new(f64::NAN, 0.0); 4];
    for v in Var::ALL {
        if let Some(z) = at.get(&v) {
            pt[v.index()] = *z;
        }
    }
    pt
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "series", rename_all = "snake_case")]
pub enum SeriesKind {
    /// `−n Σ q^{x+m} [x+m]^{n−1}`.
    Twisted,
    /// `−n Σ q^{hm+x}[x+m]^{n−1} + (h−1)(1−q) Σ q^{(h−1)m}[x+m]^n`.
    HTwisted { h: i64 },
    /// `−n Σ χ(m) [x+m]^{n−1}`, optionally with the factor `q^{x+m}`.
    Character { f: u64, chi: usize, with_factor: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub n: u32,
    #[serde(serialize_with = "ser_complex")]
    pub q0: Complex64,
    pub x0: f64,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = if self.q0.im == 0.0 { format!("{}", self.q0.re) } else { format!("{}{:+}i", self.q0.re, self.q0.im) };
        match &self.kind {
            SeriesKind::Twisted => write!(f, "q={q},x={},n={}", self.x0, self.n),
            SeriesKind::HTwisted { h } => write!(f, "q={q},x={},h={h},n={}", self.x0, self.n),
            SeriesKind::Character { f: m, chi, .. } => write!(f, "q={q},x={},chi={m}.{chi},n={}", self.x0, self.n),
        }
    }
}

impl SeriesSpec {
    pub fn twisted(n: u32, q0: Complex64, x0: f64) -> Self {
        SeriesSpec { kind: SeriesKind::Twisted, n, q0, x0 }
    }

    pub fn h_twisted(n: u32, h: i64, q0: Complex64, x0: f64) -> Self {
        SeriesSpec { kind: SeriesKind::HTwisted { h }, n, q0, x0 }
    }

    pub fn character(n: u32, f: u64, chi: usize, with_factor: bool, q0: Complex64, x0: f64) -> Self {
        SeriesSpec { kind: SeriesKind::Character { f, chi, with_factor }, n, q0, x0 }
    }

    pub fn validate(&self) -> Result<()> {
        let rho = self.q0.norm();
        if rho.is_nan() || rho > MAX_MODULUS || rho == 0.0 {
            return Err(Error::DivergentSpec(format!("|q0| = {rho} is outside (0, {MAX_MODULUS}]")));
        }
        if !self.x0.is_finite() || self.x0 < 0.0 {
            return Err(Error::DivergentSpec(format!("x0 = {} must be finite and nonnegative", self.x0)));
        }
        match &self.kind {
            SeriesKind::HTwisted { h } if *h < 1 => Err(Error::DivergentSpec(format!(
                "q^((h-1)m) grows for h = {h} when |q| < 1"
            ))),
            SeriesKind::Character { f, chi, with_factor: false } => {
                let c = self.character_of(*f, *chi)?;
                if c.order() == 1 {
                    Err(Error::DivergentSpec("sum chi(m)[x+m]^{n-1} diverges for a principal character".into()))
                } else {
                    Ok(())
                }
            }
            SeriesKind::Character { f, chi, .. } => self.character_of(*f, *chi).map(|_| ()),
            _ => Ok(()),
        }
    }

    fn character_of(&self, f: u64, chi: usize) -> Result<DirichletCharacter> {
        crate::characters::character(f, chi)
    }

    /// Family whose closed form the series is compared against.
    pub fn family(&self) -> BetaFamily {
        match &self.kind {
            SeriesKind::Twisted => BetaFamily::twisted(self.n),
            SeriesKind::HTwisted { h } => BetaFamily::hr(self.n, *h, 1),
            SeriesKind::Character { f, chi, .. } => BetaFamily::chi(self.n, *f, *chi),
        }
    }

    /// Closed form of the family at this series' base and argument, with its rounding estimate.
    pub fn closed_form(&self, mode: ZeroMode) -> Result<(Complex64, f64)> {
        let e = evaluate_with(&self.family(), &x_arg(), mode)?;
        closed_form_with_error(&e, self.q0, self.x0)
    }

    /// Period the truncation point must respect.
    fn period(&self) -> usize {
        match &self.kind {
            SeriesKind::Character { f, .. } => *f as usize,
            _ => 1,
        }
    }

    /// Geometric pieces `(amplitude, ratio)` bounding `|term_m| ≤ Σ amp·ratio^m`.
    fn tail_pieces(&self) -> Vec<(f64, f64)> {
        let n = self.n as f64;
        let rho = self.q0.norm();
        let a = rho.powf(self.x0);
        let d = (Complex64::one() - self.q0).norm();
        let c = (1.0 + a) / d;
        let nm1 = self.n.saturating_sub(1) as i32;
        match &self.kind {
            SeriesKind::Twisted | SeriesKind::Character { with_factor: true, .. } => {
                vec![(n * a * c.powi(nm1), rho)]
            }
            SeriesKind::HTwisted { h } => {
                let mut v = vec![(n * a * c.powi(nm1), rho.powi(*h as i32))];
                if *h > 1 {
                    v.push(((*h - 1) as f64 * d * c.powi(self.n as i32), rho.powi(*h as i32 - 1)));
                }
                v
            }
            // The m-independent part of [x+m]^{n−1} cancels over whole periods; the rest
            // is bounded by (n−1)·2^{n−2}·a·ρ^m / |1−q|^{n−1}.
            SeriesKind::Character { with_factor: false, .. } => {
                if self.n < 2 {
                    vec![]
                } else {
                    let amp = n * (n - 1.0) * 2f64.powi(self.n as i32 - 2) * a / d.powi(nm1);
                    vec![(amp, rho)]
                }
            }
        }
    }

    /// Bound on the sum of the terms `m ≥ m0`.
    pub fn tail_bound(&self, m0: usize) -> f64 {
        self.tail_pieces().iter().map(|&(amp, r)| amp * r.powi(m0 as i32) / (1.0 - r)).sum()
    }

    /// Smallest multiple of the period whose tail bound is below [`TAIL_TARGET`].
    pub fn truncation(&self) -> Result<usize> {
        let step = self.period();
        let mut m = step;
        while self.tail_bound(m) >= TAIL_TARGET {
            m += step;
            if m > MAX_TERMS {
                return Err(Error::DivergentSpec(format!("tail bound not reached within {MAX_TERMS} terms")));
            }
        }
        Ok(m)
    }

    /// Coefficient weight of `[x+m]` in the series and in the generating function.
    fn weight(&self, m: usize, chi: Option<&DirichletCharacter>) -> Complex64 {
        let s = self.x0 + m as f64;
        match &self.kind {
            SeriesKind::Twisted => q_power(self.q0, s),
            SeriesKind::HTwisted { h } => q_power(self.q0, *h as f64 * m as f64 + self.x0),
            SeriesKind::Character { with_factor, .. } => {
                let c = chi.expect("character series").value(m as i64).to_complex();
                if *with_factor {
                    c * q_power(self.q0, s)
                } else {
                    c
                }
            }
        }
    }

    fn chi(&self) -> Result<Option<DirichletCharacter>> {
        match &self.kind {
            SeriesKind::Character { f, chi, .. } => Ok(Some(self.character_of(*f, *chi)?)),
            _ => Ok(None),
        }
    }
}

/// A truncated series with its error budget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesValue {
    #[serde(serialize_with = "ser_complex")]
    pub value: Complex64,
    pub terms: usize,
    pub tail_bound: f64,
    /// Floating-point accumulation estimate.
    pub rounding: f64,
}

impl SeriesValue {
    pub fn error_bound(&self) -> f64 {
        self.tail_bound + self.rounding
    }
}

fn rounding_estimate(abs_sum: f64, n: u32) -> f64 {
    64.0 * f64::EPSILON * (n as f64 + 2.0) * abs_sum
}

/// Direct truncated sum.
pub fn series_value(spec: &SeriesSpec) -> Result<SeriesValue> {
    spec.validate()?;
    let terms = spec.truncation()?;
    let chi = spec.chi()?;
    let n = spec.n;
    let mut acc = Complex64::zero();
    let mut abs_sum = 0.0;
    if n > 0 || matches!(spec.kind, SeriesKind::HTwisted { .. }) {
        for m in 0..terms {
            let b = bracket(spec.q0, spec.x0 + m as f64);
            let mut t = -(n as f64) * spec.weight(m, chi.as_ref()) * b.powu(n.saturating_sub(1));
            if n == 0 {
                t = Complex64::zero();
            }
            if let SeriesKind::HTwisted { h } = spec.kind {
                let second = (h - 1) as f64
                    * (Complex64::one() - spec.q0)
                    * q_power(spec.q0, (h - 1) as f64 * m as f64)
                    * b.powu(n);
                t += second;
            }
            abs_sum += t.norm();
            acc += t;
        }
    }
    Ok(SeriesValue { value: acc, terms, tail_bound: spec.tail_bound(terms), rounding: rounding_estimate(abs_sum, n) })
}

/// `n!·[t^n]` of `−t Σ_m w_m e^{[x+m]t}`, expanding each exponential to order `n`.
pub fn gf_coefficient(spec: &SeriesSpec) -> Result<SeriesValue> {
    if let SeriesKind::HTwisted { .. } = spec.kind {
        return Err(Error::InvalidFamily("no generating function is attached to the h-twisted series".into()));
    }
    spec.validate()?;
    let terms = spec.truncation()?;
    let chi = spec.chi()?;
    let n = spec.n as usize;
    if n == 0 {
        return Ok(SeriesValue { value: Complex64::zero(), terms, tail_bound: 0.0, rounding: 0.0 });
    }
    // Σ_m w_m e^{[x+m]t} to order t^{n−1}
    let mut coeffs = vec![Complex64::zero(); n];
    let mut abs_sum = 0.0;
    for m in 0..terms {
        let w = spec.weight(m, chi.as_ref());
        let b = bracket(spec.q0, spec.x0 + m as f64);
        let mut e = Complex64::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k > 0 {
                e = e * b / k as f64;
            }
            *slot += w * e;
        }
        abs_sum += (w * e).norm();
    }
    // multiply by −t, read t^n, scale by n!
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let value = -coeffs[n - 1] * factorial;
    let scale = factorial;
    Ok(SeriesValue {
        value,
        terms,
        tail_bound: spec.tail_bound(terms),
        rounding: rounding_estimate(abs_sum * scale, spec.n),
    })
}

/// Outcome of comparing a truncated sum with a closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesCheck {
    pub spec: String,
    #[serde(serialize_with = "ser_complex")]
    pub series: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub exact: Complex64,
    pub difference: f64,
    pub bound: f64,
    pub agrees: bool,
}

/// Compares a series value with a closed form; `bump` is added to the series side.
pub fn compare(spec: &SeriesSpec, series: &SeriesValue, exact: (Complex64, f64), bump: Complex64) -> SeriesCheck {
    let (exact, exact_err) = exact;
    let lhs = series.value + bump;
    let difference = (lhs - exact).norm();
    let bound = series.error_bound() + exact_err;
    SeriesCheck {
        spec: spec.to_string(),
        series: lhs,
        exact,
        difference,
        bound,
        agrees: difference <= bound && difference <= ABS_TOLERANCE,
    }
}

/// Series against the closed form with the given zero-mode.
pub fn check_series(spec: &SeriesSpec, mode: ZeroMode) -> Result<SeriesCheck> {
    let s = series_value(spec)?;
    Ok(compare(spec, &s, spec.closed_form(mode)?, Complex64::zero()))
}

/// Generating-function coefficient against the closed form with the given zero-mode.
pub fn check_gf(spec: &SeriesSpec, mode: ZeroMode) -> Result<SeriesCheck> {
    let s = gf_coefficient(spec)?;
    Ok(compare(spec, &s, spec.closed_form(mode)?, Complex64::zero()))
}

// Classical limits

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitRow {
    /// `1 − q` actually used.
    pub epsilon: f64,
    pub value: f64,
    pub target: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassicalLimitReport {
    pub family: String,
    pub x0: String,
    pub rows: Vec<LimitRow>,
}

/// `ln(1 − δ)` as a rational with error far below anything a `f64` can see.
fn log_one_minus(delta: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut power = delta.clone();
    let bound = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(80));
    let mut k = 1i64;
    while power.abs() / Rational::from_integer(k.into()) > bound {
        acc -= &power / Rational::from_integer(k.into());
        power = &power * delta;
        k += 1;
    }
    acc
}

/// `|β_n(x₀) at q = 1−ε − B_n(x₀)|` for each `ε`, evaluated exactly.
///
/// With `x₀ = a/b` the base is `q = s^b`, `s = 1 − ε/b`, so that `X = s^a` stays rational; `L`
/// is a rational approximation of `ln q` good to about 80 digits.
pub fn classical_limit_check(fam: &BetaFamily, x0: &Rational, epsilons: &[Rational]) -> Result<ClassicalLimitReport> {
    if fam.kind.is_character() || fam.weight_spec().arity() != 1 {
        return Err(Error::InvalidFamily(format!("{fam}: classical limit needs a single-fold plain family")));
    }
    let e = evaluate_with(fam, &x_arg(), ZeroMode::Log)?;
    let a = x0.numer().to_i64().ok_or_else(|| Error::DomainError("x0 numerator too large".into()))?;
    let b = x0.denom().to_i64().ok_or_else(|| Error::DomainError("x0 denominator too large".into()))?;
    if a < 0 {
        return Err(Error::DomainError("x0 must be nonnegative".into()));
    }
    let target = classical_bernoulli_poly(fam.n, x0);
    let mut rows = Vec::new();
    for eps in epsilons {
        if *eps <= Rational::zero() || *eps >= Rational::one() {
            return Err(Error::DomainError(format!("epsilon {eps} outside (0,1)")));
        }
        let delta = eps / Rational::from_integer(b.into());
        let s = Rational::one() - &delta;
        let q = num_traits::pow(s.clone(), b as usize);
        let x = num_traits::pow(s.clone(), a as usize);
        let l = log_one_minus(&delta) * Rational::from_integer(b.into());
        let value = e.eval_exact(&[(Var::Q, Coeff::Rat(q.clone())), (Var::X, Coeff::Rat(x)), (Var::L, Coeff::Rat(l))])?;
        let value = match value {
            Coeff::Rat(r) => r,
            Coeff::Cyclo(_) => return Err(Error::DomainError("cyclotomic value in a plain family".into())),
        };
        let err = (&value - &target).abs();
        rows.push(LimitRow {
            epsilon: (Rational::one() - q).to_f64().unwrap_or(f64::NAN),
            value: value.to_f64().unwrap_or(f64::NAN),
            target: target.to_f64().unwrap_or(f64::NAN),
            error: err.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(ClassicalLimitReport { family: fam.to_string(), x0: x0.to_string(), rows })
}

/// `|β^{(h,1)}_{n,1/q}(1−x) − (−1)^n q^{n+h−2} β^{(h,1)}_{n,q}(x)|` with both sides evaluated
/// numerically from the closed form, `L = ln` of the respective base.
pub fn reflection_check(n: u32, h: i64, q: f64, x: f64) -> Result<f64> {
    if q.is_nan() || q <= 0.0 || q == 1.0 {
        return Err(Error::DomainError(format!("reflection needs real q > 0, q ≠ 1, got {q}")));
    }
    let e = evaluate_with(&BetaFamily::hr(n, h, 1), &x_arg(), ZeroMode::Log)?;
    let at = |base: f64, arg: f64| -> Result<Complex64> {
        let mut m = HashMap::new();
        m.insert(Var::Q, Complex64::new(base, 0.0));
        m.insert(Var::X, Complex64::new(base.powf(arg), 0.0));
        m.insert(Var::L, Complex64::new(base.ln(), 0.0));
        e.eval_complex(&m)
    };
    let lhs = at(1.0 / q, 1.0 - x)?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = at(q, x)? * sign * q.powi(n as i32 + h as i32 - 2);
    Ok((lhs - rhs).norm())
}

// The series case of the identity suite.

pub const SERIES_CASE_ID: &str = "I11";
pub const SERIES_CASE_TITLE: &str = "convergent series and generating functions for |q| < 1";

/// Sample bases and arguments of the series case.
pub fn series_points() -> Vec<(Complex64, f64)> {
    let mut v = Vec::new();
    for q0 in [Complex64::new(0.3, 0.0), Complex64::new(0.5, 0.2)] {
        for x0 in [0.0, 0.7] {
            v.push((q0, x0));
        }
    }
    v
}

const SERIES_MAX_N: u32 = 6;
const SERIES_MAX_F: u64 = 4;

fn nonprincipal_characters() -> Vec<(u64, usize)> {
    (1..=SERIES_MAX_F)
        .flat_map(|f| enumerate_characters(f).into_iter().filter(|c| c.order() > 1).map(move |c| (f, c.index())))
        .collect()
}

/// Every series and generating-function check in its resolved form (zero-mode dropped,
/// `q^{x+m}` factor present) at the given points, for `n ≤ 6`, `h ∈ {1,2,3}` and every
/// nonprincipal character of modulus at most 4.
pub fn resolved_checks(points: &[(Complex64, f64)]) -> Result<Vec<(&'static str, SeriesCheck)>> {
    let mut out = Vec::new();
    for &(q0, x0) in points {
        for n in 0..=SERIES_MAX_N {
            let t = SeriesSpec::twisted(n, q0, x0);
            out.push(("twisted series", series_drop(&t)?));
            out.push(("generating function", gf_drop(&t)?));
            for h in 1..=3 {
                out.push(("h-twisted series", series_drop(&SeriesSpec::h_twisted(n, h, q0, x0))?));
            }
            for (f, chi) in nonprincipal_characters() {
                let c = SeriesSpec::character(n, f, chi, true, q0, x0);
                out.push(("character series", check_series(&c, ZeroMode::Log)?));
                out.push(("character generating function", check_gf(&c, ZeroMode::Log)?));
            }
        }
    }
    Ok(out)
}

type CheckFn = fn(&SeriesSpec) -> Result<SeriesCheck>;

struct NumericClaim {
    name: &'static str,
    formula: &'static str,
    specs: fn() -> Vec<SeriesSpec>,
    literal: CheckFn,
    variants: Vec<(&'static str, &'static str, CheckFn)>,
}

fn twisted_specs() -> Vec<SeriesSpec> {
    let mut v = Vec::new();
    for (q0, x0) in series_points() {
        for n in 0..=SERIES_MAX_N {
            v.push(SeriesSpec::twisted(n, q0, x0));
        }
    }
    v
}

fn h_twisted_specs() -> Vec<SeriesSpec> {
    let mut v = Vec::new();
    for (q0, x0) in series_points() {
        for h in 1..=3 {
            for n in 0..=SERIES_MAX_N {
                v.push(SeriesSpec::h_twisted(n, h, q0, x0));
            }
        }
    }
    v
}

fn character_specs() -> Vec<SeriesSpec> {
    let mut v = Vec::new();
    for (q0, x0) in series_points() {
        for (f, chi) in nonprincipal_characters() {
            for n in 0..=SERIES_MAX_N {
                v.push(SeriesSpec::character(n, f, chi, false, q0, x0));
            }
        }
    }
    v
}

fn with_factor(spec: &SeriesSpec) -> SeriesSpec {
    let mut s = spec.clone();
    if let SeriesKind::Character { with_factor, .. } = &mut s.kind {
        *with_factor = true;
    }
    s
}

fn series_log(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_series(spec, ZeroMode::Log)
}

fn series_drop(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_series(spec, ZeroMode::Drop)
}

fn gf_log(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_gf(spec, ZeroMode::Log)
}

fn gf_drop(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_gf(spec, ZeroMode::Drop)
}

fn character_series_factor(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_series(&with_factor(spec), ZeroMode::Log)
}

fn character_gf_factor(spec: &SeriesSpec) -> Result<SeriesCheck> {
    check_gf(&with_factor(spec), ZeroMode::Log)
}

fn numeric_claims() -> Vec<NumericClaim> {
    vec![
        NumericClaim {
            name: "twisted series",
            formula: "beta_n(x) = -n sum_m q^{m+x} [x+m]^{n-1}",
            specs: twisted_specs,
            literal: series_log,
            variants: vec![("zero-mode dropped", "same series against the closed form with the l=0 term set to 0", series_drop)],
        },
        NumericClaim {
            name: "h-twisted series",
            formula: "beta^(h,1)_n(x) = -n sum_m q^{hm+x}[x+m]^{n-1} + (h-1)(1-q) sum_m q^{(h-1)m}[x+m]^n, h >= 1",
            specs: h_twisted_specs,
            literal: series_log,
            variants: vec![("zero-mode dropped", "same series against the closed form with the l=0 term set to 0", series_drop)],
        },
        NumericClaim {
            name: "generating function",
            formula: "sum_n beta_n(x) t^n/n! = -t sum_m q^{x+m} e^{[x+m]t}",
            specs: twisted_specs,
            literal: gf_log,
            variants: vec![("zero-mode dropped", "same coefficients against the closed form with the l=0 term set to 0", gf_drop)],
        },
        NumericClaim {
            name: "character series",
            formula: "beta_{n,chi}(x) = -n sum_m chi(m) [x+m]^{n-1}",
            specs: character_specs,
            literal: series_log,
            variants: vec![("with q^{x+m} factor", "beta_{n,chi}(x) = -n sum_m chi(m) q^{x+m} [x+m]^{n-1}", character_series_factor)],
        },
        NumericClaim {
            name: "character generating function",
            formula: "sum_n beta_{n,chi}(x) t^n/n! = -t sum_m chi(m) e^{[x+m]t}",
            specs: character_specs,
            literal: gf_log,
            variants: vec![(
                "with q^{x+m} factor",
                "sum_n beta_{n,chi}(x) t^n/n! = -t sum_m chi(m) q^{x+m} e^{[x+m]t}",
                character_gf_factor,
            )],
        },
    ]
}

struct NumericOutcome {
    checked: usize,
    failed: usize,
    counterexamples: Vec<Counterexample>,
}

fn run_numeric(check: CheckFn, specs: &[SeriesSpec], perturb: bool) -> Result<NumericOutcome> {
    let mut o = NumericOutcome { checked: 0, failed: 0, counterexamples: Vec::new() };
    for spec in specs {
        let mut c = check(spec)?;
        if perturb {
            let bump = spec.q0 / (Complex64::one() + spec.q0);
            c.difference = (c.series + bump - c.exact).norm();
            c.agrees = c.difference <= c.bound && c.difference <= ABS_TOLERANCE;
        }
        o.checked += 1;
        if !c.agrees {
            o.failed += 1;
            if o.counterexamples.len() < 3 {
                o.counterexamples.push(Counterexample {
                    point: c.spec.clone(),
                    residual: format!("|difference| = {:.3e}, bound {:.3e}", c.difference, c.bound),
                });
            }
        }
    }
    Ok(o)
}

/// Report of the series case; `perturb` adds `q₀/(1+q₀)` to every series value.
pub fn series_case_report(perturb: bool) -> Result<VerificationReport> {
    let mut claims = Vec::new();
    let mut grid_points = 0;
    for claim in numeric_claims() {
        let specs = (claim.specs)();
        grid_points = grid_points.max(specs.len());
        let lit = run_numeric(claim.literal, &specs, perturb)?;
        let mut report = ClaimReport {
            name: claim.name.into(),
            formula: claim.formula.into(),
            verdict: Verdict::Pass,
            points_checked: lit.checked,
            points_undefined: 0,
            points_failed: lit.failed,
            variant: None,
            variant_formula: None,
            variants_tried: Vec::new(),
            counterexamples: lit.counterexamples,
        };
        if lit.failed > 0 {
            report.verdict = Verdict::Fail;
            for (name, formula, check) in &claim.variants {
                let out = run_numeric(*check, &specs, perturb)?;
                let holds = out.failed == 0 && out.checked > 0;
                report.variants_tried.push(((*name).into(), holds));
                if holds && report.variant.is_none() {
                    report.verdict = Verdict::VariantPass;
                    report.variant = Some((*name).into());
                    report.variant_formula = Some((*formula).into());
                }
            }
        }
        claims.push(report);
    }
    Ok(assemble(SERIES_CASE_ID, SERIES_CASE_TITLE, grid_points, claims))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn twisted_first_order_closed_form() {
        // −Σ q^{m+x} = −q^x/(1−q)
        let s = series_value(&SeriesSpec::twisted(1, c(0.3), 0.7)).unwrap();
        let expect = -(0.3f64.powf(0.7)) / 0.7;
        assert!((s.value.re - expect).abs() < 1e-12);
        assert!(s.tail_bound < TAIL_TARGET);
    }

    #[test]
    fn order_zero_series_vanishes() {
        let s = series_value(&SeriesSpec::twisted(0, c(0.3), 0.7)).unwrap();
        assert_eq!(s.value, Complex64::zero());
        let g = gf_coefficient(&SeriesSpec::twisted(0, c(0.3), 0.0)).unwrap();
        assert_eq!(g.value, Complex64::zero());
    }

    #[test]
    fn gf_first_coefficient_is_geometric() {
        let g = gf_coefficient(&SeriesSpec::twisted(1, c(0.3), 0.0)).unwrap();
        assert!((g.value.re + 1.0 / 0.7).abs() < 1e-12);
    }

    #[test]
    fn divergent_specs_are_rejected() {
        assert!(matches!(series_value(&SeriesSpec::h_twisted(2, 0, c(0.3), 0.0)), Err(Error::DivergentSpec(_))));
        assert!(matches!(series_value(&SeriesSpec::twisted(2, c(0.95), 0.0)), Err(Error::DivergentSpec(_))));
        assert!(matches!(
            series_value(&SeriesSpec::character(2, 3, 0, false, c(0.3), 0.0)),
            Err(Error::DivergentSpec(_))
        ));
    }

    #[test]
    fn log_series_bound_is_tiny() {
        let d = log_one_minus(&Rational::new(1.into(), 100.into()));
        assert!((d.to_f64().unwrap() - 0.99f64.ln()).abs() < 1e-15);
    }
}
