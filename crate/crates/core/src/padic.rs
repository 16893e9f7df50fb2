//! p-adic Riemann sums of the q-Volkenborn measure, checked against the exact closed forms.
//!
//! Everything lives in `Z/p^K` with `p^K` the largest power that fits a `u64`; products go
//! through `u128`. The exact side is the engine's rational function evaluated at `q = q₀`,
//! `X = q₀^{x₀}` and `L = log_p q₀`, with character values embedded through Teichmüller
//! roots of unity. Only integer `x₀` is supported: `q₀^{x₀}` for rational `x₀` needs a
//! p-adic exponential, which this oracle does not implement.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{Coeff, Poly, RatFunc, Rational, Var};
use crate::beta::{evaluate, BetaFamily};
use crate::characters::{primitive_root, DirichletCharacter};
use crate::error::{Error, Result};

/// Absolute precision used for exact zero; large enough never to be the binding minimum.
const EXACT: i64 = 1 << 40;

/// Largest `k` with `p^k` representable in a `u64`.
pub fn digit_cap(p: u64) -> u32 {
    let mut k = 0;
    let mut acc: u64 = 1;
    while let Some(next) = acc.checked_mul(p) {
        acc = next;
        k += 1;
    }
    k
}

fn ppow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("power within the digit cap")
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Inverse of a unit modulo `m`.
fn invmod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    debug_assert_eq!(r0, 1, "not a unit");
    t0.rem_euclid(m as i128) as u64
}

fn split_p(mut x: u64, p: u64) -> (u32, u64) {
    let mut v = 0;
    while x != 0 && x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    (v, x)
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `p^v · u` with the unit `u` known modulo `p^prec`; `u = 0` encodes `O(p^v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PadicApprox {
    p: u64,
    val: i64,
    unit: u64,
    prec: u32,
}

impl PadicApprox {
    /// Zero known to absolute precision `abs`.
    pub fn zero(p: u64, abs: i64) -> Self {
        PadicApprox { p, val: abs.min(EXACT), unit: 0, prec: 0 }
    }

    /// Normalises `p^val · x` where `x` is known modulo `p^digits`.
    fn normalise(p: u64, val: i64, x: u64, digits: u32) -> Self {
        let x = x % ppow(p, digits);
        if x == 0 {
            return Self::zero(p, val + digits as i64);
        }
        let (w, u) = split_p(x, p);
        let prec = digits - w;
        PadicApprox { p, val: val + w as i64, unit: u % ppow(p, prec), prec }
    }

    /// Residue `x mod p^digits`.
    pub fn from_residue(p: u64, x: u64, digits: u32) -> Self {
        Self::normalise(p, 0, x, digits)
    }

    pub fn from_i64(p: u64, v: i64) -> Self {
        if v == 0 {
            return Self::zero(p, EXACT);
        }
        let cap = digit_cap(p);
        let pk = ppow(p, cap);
        let r = (v as i128).rem_euclid(pk as i128) as u64;
        Self::normalise(p, 0, r, cap)
    }

    pub fn from_bigint(p: u64, v: &BigInt) -> Self {
        if v.is_zero() {
            return Self::zero(p, EXACT);
        }
        let bp = BigInt::from(p);
        let mut x = v.clone();
        let mut w = 0i64;
        loop {
            let (q, r) = x.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            x = q;
            w += 1;
        }
        let cap = digit_cap(p);
        let pk = BigInt::from(ppow(p, cap));
        let r = x.mod_floor(&pk).to_u64().expect("residue fits");
        Self::normalise(p, w, r, cap)
    }

    pub fn from_rational(p: u64, r: &Rational) -> Self {
        let num = Self::from_bigint(p, r.numer());
        let den = Self::from_bigint(p, r.denom());
        num.div(&den).expect("denominator is nonzero")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.unit == 0
    }

    /// `None` for a value that is zero to its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    /// Relative precision in digits.
    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The value is known modulo `p^abs_precision`.
    pub fn abs_precision(&self) -> i64 {
        if self.is_zero() {
            self.val
        } else {
            self.val + self.prec as i64
        }
    }

    /// Lower bound on `v_p(self)`: the exact valuation, or the precision for a zero.
    pub fn valuation_bound(&self) -> i64 {
        self.val
    }

    /// `x mod p^digits` for a value with nonnegative valuation.
    pub fn residue(&self, digits: u32) -> Option<u64> {
        if self.val < 0 || self.abs_precision() < digits as i64 {
            return None;
        }
        if self.is_zero() || self.val >= digits as i64 {
            return Some(0);
        }
        let m = ppow(self.p, digits);
        Some(mulmod(self.unit, ppow(self.p, self.val as u32), m))
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        let m = ppow(self.p, self.prec);
        PadicApprox { unit: (m - self.unit) % m, ..*self }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed primes");
        let p = self.p;
        let abs = self.abs_precision().min(other.abs_precision());
        let v = match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(p, abs),
            (true, false) => other.val,
            (false, true) => self.val,
            (false, false) => self.val.min(other.val),
        };
        if abs <= v {
            return Self::zero(p, abs);
        }
        let digits = (abs - v) as u32;
        let m = ppow(p, digits);
        let part = |a: &Self| -> u64 {
            if a.is_zero() || a.val - v >= digits as i64 {
                0
            } else {
                mulmod(a.unit, ppow(p, (a.val - v) as u32), m)
            }
        };
        Self::normalise(p, v, addmod(part(self), part(other), m), digits)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed primes");
        let p = self.p;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Self::zero(p, (self.val + other.val).min(EXACT)),
            (true, false) => Self::zero(p, (self.val + other.val).min(EXACT)),
            (false, true) => Self::zero(p, (self.val + other.val).min(EXACT)),
            (false, false) => {
                let prec = self.prec.min(other.prec);
                let m = ppow(p, prec);
                PadicApprox { p, val: self.val + other.val, unit: mulmod(self.unit, other.unit, m), prec }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::PrecisionExhausted(format!(
                "division by a value that is zero to {} digits",
                other.val
            )));
        }
        Ok(self.mul(&other.inverse_unchecked()))
    }

    fn inverse_unchecked(&self) -> Self {
        let m = ppow(self.p, self.prec);
        PadicApprox { p: self.p, val: -self.val, unit: invmod(self.unit, m), prec: self.prec }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_i64(self.p, 1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "O({}^{})", self.p, self.val)
        } else {
            write!(f, "{}^{}·{} + O({}^{})", self.p, self.val, self.unit, self.p, self.abs_precision())
        }
    }
}

/// `log_p(a)` by the Mercator series; needs `v_p(a − 1) ≥ 1`.
///
/// Term `k` has valuation at least `k − ⌊log_p k⌋`, so the series is cut once that exceeds
/// the working precision.
pub fn padic_log(a: &PadicApprox) -> Result<PadicApprox> {
    let p = a.p();
    let t = a.sub(&PadicApprox::from_i64(p, 1));
    let vt = t.valuation_bound();
    if vt < 1 {
        return Err(Error::DomainError(format!("log_p needs |a-1|_p < 1, got v_p(a-1) = {vt}")));
    }
    if t.is_zero() {
        return Ok(PadicApprox::zero(p, t.abs_precision()));
    }
    let target = t.abs_precision();
    let mut acc = PadicApprox::zero(p, EXACT);
    let mut power = t;
    let mut k: u64 = 1;
    loop {
        let vk = split_p(k, p).0 as i64;
        if (k as i64) * vt - vk > target {
            break;
        }
        let term = power.div(&PadicApprox::from_i64(p, k as i64))?;
        acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        power = power.mul(&t);
        k += 1;
    }
    Ok(acc)
}

/// Primitive `m`-th roots of unity in `Z_p`, chosen coherently: `ω_m = T(g)^{(p−1)/m}` for a
/// fixed primitive root `g` and its Teichmüller lift `T(g)`.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    p: u64,
    cap: u32,
    teichmuller: u64,
}

impl RootsOfUnity {
    pub fn new(p: u64) -> Self {
        let cap = digit_cap(p);
        let m = ppow(p, cap);
        let mut t = primitive_root(p) % m;
        for _ in 0..cap {
            t = powmod(t, p, m);
        }
        RootsOfUnity { p, cap, teichmuller: t }
    }

    /// `ω_m` as a residue modulo `p^cap`.
    pub fn primitive(&self, m: u32) -> Result<u64> {
        if !(self.p - 1).is_multiple_of(m as u64) {
            return Err(Error::CharacterNotEmbeddable { order: m, p: self.p });
        }
        Ok(powmod(self.teichmuller, (self.p - 1) / m as u64, ppow(self.p, self.cap)))
    }

    /// Image of an exact coefficient under `ζ_m ↦ ω_m`.
    pub fn embed(&self, c: &Coeff) -> Result<PadicApprox> {
        match c {
            Coeff::Rat(r) => Ok(PadicApprox::from_rational(self.p, r)),
            Coeff::Cyclo(e) => {
                let w = PadicApprox::from_residue(self.p, self.primitive(e.order())?, self.cap);
                let mut acc = PadicApprox::zero(self.p, EXACT);
                let mut wi = PadicApprox::from_i64(self.p, 1);
                for ci in e.coeffs() {
                    acc = acc.add(&PadicApprox::from_rational(self.p, ci).mul(&wi));
                    wi = wi.mul(&w);
                }
                Ok(acc)
            }
        }
    }
}

/// Oracle parameters; `q₀ = 1 + p·u₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub p: u64,
    pub u0: u64,
    pub x0: i64,
    pub level_min: u32,
    pub level_max: u32,
    /// Requested digits of the Riemann sum after normalisation.
    pub digits: u32,
    /// Largest number of integrand terms one sum may visit.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { p: 3, u0: 1, x0: 0, level_min: 2, level_max: 6, digits: 12, budget: 10_000_000 }
    }
}

impl OracleConfig {
    pub fn q0(&self) -> u64 {
        1 + self.p * self.u0
    }

    pub fn validate(&self) -> Result<()> {
        if !is_odd_prime(self.p) {
            return Err(Error::DomainError(format!("p = {} is not an odd prime", self.p)));
        }
        if self.u0 == 0 {
            return Err(Error::DomainError("u0 = 0 makes q0 = 1".into()));
        }
        if self.p.checked_mul(self.u0).and_then(|v| v.checked_add(1)).is_none() {
            return Err(Error::DomainError(format!("q0 = 1 + {}·{} does not fit in 64 bits", self.p, self.u0)));
        }
        if self.level_min > self.level_max {
            return Err(Error::DomainError("empty level range".into()));
        }
        Ok(())
    }
}

/// Integrand of a Riemann sum after absorbing the measure weight `q^{y_j}`:
/// `Π χ(y_j) · q^{Σ δ_j y_j} · [x₀ + Σ w_j y_j]^n` summed over `0 ≤ y_j < f p^N`.
#[derive(Debug, Clone)]
pub struct Integrand {
    pub n: u32,
    /// `(w_j, δ_j)` per coordinate.
    pub factors: Vec<(i64, i64)>,
    pub chi: Option<DirichletCharacter>,
}

impl Integrand {
    pub fn from_family(fam: &BetaFamily) -> Result<Self> {
        fam.validate()?;
        let chi = if fam.kind.is_character() {
            Some(crate::characters::character(fam.f, fam.chi)?)
        } else {
            None
        };
        Ok(Integrand { n: fam.n, factors: fam.weight_spec().factors().to_vec(), chi })
    }

    pub fn arity(&self) -> u32 {
        self.factors.len() as u32
    }

    fn period(&self) -> u64 {
        self.chi.as_ref().map_or(1, |c| c.modulus())
    }
}

/// Number of integrand terms visited at level `level`.
pub fn term_count(integrand: &Integrand, p: u64, level: u32) -> u128 {
    let side = integrand.period() as u128 * (p as u128).pow(level);
    side.pow(integrand.arity())
}

/// `q^k` and `[k]_q` for `k` in a window, modulo `p^cap`.
struct PowerTable {
    lo: i64,
    pow: Vec<u64>,
    bracket: Vec<u64>,
}

impl PowerTable {
    fn new(q: u64, lo: i64, hi: i64, m: u64) -> Self {
        let len = (hi - lo + 1) as usize;
        let qinv = invmod(q, m);
        let start = if lo >= 0 { powmod(q, lo as u64, m) } else { powmod(qinv, lo.unsigned_abs(), m) };
        let mut pow = Vec::with_capacity(len);
        let mut cur = start;
        for _ in 0..len {
            pow.push(cur);
            cur = mulmod(cur, q, m);
        }
        // [k+1] = [k] + q^k, anchored at [0] = 0.
        let mut bracket = vec![0u64; len];
        let zero = (-lo) as usize;
        for i in zero + 1..len {
            bracket[i] = addmod(bracket[i - 1], pow[i - 1], m);
        }
        for i in (0..zero).rev() {
            bracket[i] = addmod(bracket[i + 1], m - pow[i], m);
        }
        PowerTable { lo, pow, bracket }
    }

    fn q_pow(&self, k: i64) -> u64 {
        self.pow[(k - self.lo) as usize]
    }

    fn bracket(&self, k: i64) -> u64 {
        self.bracket[(k - self.lo) as usize]
    }
}

/// `(1/[f p^N]^r) Σ integrand` over the r-fold box.
pub fn multi_riemann_sum(integrand: &Integrand, level: u32, cfg: &OracleConfig) -> Result<PadicApprox> {
    cfg.validate()?;
    let p = cfg.p;
    let count = term_count(integrand, p, level);
    if count > cfg.budget as u128 {
        return Err(Error::BudgetExceeded(count));
    }
    let cap = digit_cap(p);
    let m = ppow(p, cap);
    let q = cfg.q0() % m;
    let side = integrand.period() * p.pow(level);
    let r = integrand.arity() as usize;

    let span = side as i64 - 1;
    let (mut lo, mut hi) = (cfg.x0.min(0), cfg.x0.max(0));
    let (mut elo, mut ehi) = (0i64, 0i64);
    for &(w, d) in &integrand.factors {
        lo += (w * span).min(0);
        hi += (w * span).max(0);
        elo += (d * span).min(0);
        ehi += (d * span).max(0);
    }
    let table = PowerTable::new(q, lo.min(elo).min(0), hi.max(ehi).max(side as i64), m);

    let roots = RootsOfUnity::new(p);
    let chi_table: Option<Vec<u64>> = match &integrand.chi {
        None => None,
        Some(c) => {
            let w = roots.primitive(c.order())?;
            Some(
                (0..c.modulus() as i64)
                    .map(|a| c.power(a).map_or(0, |k| powmod(w, k as u64, m)))
                    .collect(),
            )
        }
    };

    let mut sum = 0u64;
    let mut y = vec![0i64; r];
    loop {
        let mut weight = 1u64;
        if let Some(t) = &chi_table {
            for &yj in &y {
                weight = mulmod(weight, t[(yj as u64 % integrand.period()) as usize], m);
            }
        }
        if weight != 0 {
            let mut e = 0i64;
            let mut s = cfg.x0;
            for (&(w, d), &yj) in integrand.factors.iter().zip(&y) {
                e += d * yj;
                s += w * yj;
            }
            let term = mulmod(weight, table.q_pow(e), m);
            sum = addmod(sum, mulmod(term, powmod(table.bracket(s), integrand.n as u64, m), m), m);
        }
        let mut i = 0;
        while i < r {
            y[i] += 1;
            if (y[i] as u64) < side {
                break;
            }
            y[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }

    let norm = PadicApprox::from_residue(p, table.bracket(side as i64), cap).pow(r as u32);
    let value = PadicApprox::from_residue(p, sum, cap).div(&norm)?;
    if value.abs_precision() < cfg.digits as i64 + value.valuation_bound().min(0) {
        return Err(Error::PrecisionExhausted(format!(
            "level {level} leaves {} digits, {} requested",
            value.abs_precision(),
            cfg.digits
        )));
    }
    Ok(value)
}

/// One-dimensional Riemann sum; `integrand` must have a single coordinate.
pub fn riemann_sum(integrand: &Integrand, level: u32, cfg: &OracleConfig) -> Result<PadicApprox> {
    if integrand.arity() != 1 {
        return Err(Error::InvalidFamily(format!("riemann_sum takes one coordinate, got {}", integrand.arity())));
    }
    multi_riemann_sum(integrand, level, cfg)
}

/// Values substituted for the indeterminates when evaluating a closed form p-adically.
pub struct PadicPoint {
    pub q: PadicApprox,
    pub l: PadicApprox,
    pub x: PadicApprox,
    roots: RootsOfUnity,
}

impl PadicPoint {
    /// `q = q₀`, `L = log_p q₀`, `X = q₀^{x₀}`.
    pub fn new(cfg: &OracleConfig) -> Result<Self> {
        cfg.validate()?;
        let p = cfg.p;
        let q = PadicApprox::from_i64(p, cfg.q0() as i64);
        let l = padic_log(&q)?;
        let qx = q.pow(cfg.x0.unsigned_abs() as u32);
        let x = if cfg.x0 >= 0 { qx } else { PadicApprox::from_i64(p, 1).div(&qx)? };
        Ok(PadicPoint { q, l, x, roots: RootsOfUnity::new(p) })
    }

    fn eval_poly(&self, poly: &Poly) -> Result<PadicApprox> {
        let p = self.q.p();
        let mut acc = PadicApprox::zero(p, EXACT);
        for (m, c) in poly.terms() {
            if m.exp(Var::Y) > 0 {
                return Err(Error::Unassigned(Var::Y.name()));
            }
            let mut t = self.roots.embed(c)?;
            t = t.mul(&self.q.pow(m.exp(Var::Q)));
            t = t.mul(&self.l.pow(m.exp(Var::L)));
            t = t.mul(&self.x.pow(m.exp(Var::X)));
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    pub fn eval(&self, e: &RatFunc) -> Result<PadicApprox> {
        let num = self.eval_poly(e.num())?;
        let den = self.eval_poly(&e.den())?;
        num.div(&den)
    }
}

/// Exact target of a family at `x₀`, evaluated p-adically.
pub fn exact_value(fam: &BetaFamily, cfg: &OracleConfig) -> Result<PadicApprox> {
    let point = PadicPoint::new(cfg)?;
    point.eval(&evaluate(fam, &crate::beta::x_arg())?)
}

/// `v_p(a − b)`, or the working precision when the difference vanishes to it.
pub fn distance_digits(a: &PadicApprox, b: &PadicApprox) -> i64 {
    a.sub(b).valuation_bound()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelRow {
    pub level: u32,
    pub terms: u128,
    /// `|sum − exact|_p = p^{−distance_digits}`; a lower bound when `resolved` is false.
    pub distance_digits: i64,
    pub resolved: bool,
    pub sum: String,
}

impl LevelRow {
    /// Digits of agreement, with agreement to every carried digit read as exact.
    pub fn effective_digits(&self) -> i64 {
        if self.resolved {
            self.distance_digits
        } else {
            i64::MAX
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub family: String,
    pub p: u64,
    pub q0: u64,
    pub x0: i64,
    pub exact: String,
    pub levels: Vec<LevelRow>,
    /// Distances never grow from one level to the next.
    pub nonincreasing: bool,
}

impl ConvergenceReport {
    pub fn final_digits(&self) -> Option<i64> {
        self.levels.last().map(LevelRow::effective_digits)
    }
}

/// Riemann sums of `fam` at every configured level against the exact value.
pub fn validate_family(fam: &BetaFamily, cfg: &OracleConfig) -> Result<ConvergenceReport> {
    cfg.validate()?;
    let integrand = Integrand::from_family(fam)?;
    if let Some(c) = &integrand.chi {
        RootsOfUnity::new(cfg.p).primitive(c.order())?;
    }
    let exact = exact_value(fam, cfg)?;
    let mut levels = Vec::new();
    for level in cfg.level_min..=cfg.level_max {
        let sum = multi_riemann_sum(&integrand, level, cfg)?;
        let diff = sum.sub(&exact);
        levels.push(LevelRow {
            level,
            terms: term_count(&integrand, cfg.p, level),
            distance_digits: diff.valuation_bound(),
            resolved: !diff.is_zero(),
            sum: sum.to_string(),
        });
    }
    let nonincreasing = levels.windows(2).all(|w| w[1].effective_digits() >= w[0].effective_digits());
    Ok(ConvergenceReport {
        family: fam.to_string(),
        p: cfg.p,
        q0: cfg.q0(),
        x0: cfg.x0,
        exact: exact.to_string(),
        levels,
        nonincreasing,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroModeRow {
    pub level: u32,
    pub distance_digits: i64,
}

/// `v_p(p^N/[p^N]_q − (q−1)/log_p q)` for each level: the Riemann sum of `q^{−x}`
/// against the value assigned to the `l = 0` term.
pub fn zero_mode_check(cfg: &OracleConfig) -> Result<Vec<ZeroModeRow>> {
    cfg.validate()?;
    let p = cfg.p;
    let q = PadicApprox::from_i64(p, cfg.q0() as i64);
    let target = q.sub(&PadicApprox::from_i64(p, 1)).div(&padic_log(&q)?)?;
    let integrand = Integrand { n: 0, factors: vec![(1, 0)], chi: None };
    let mut rows = Vec::new();
    for level in cfg.level_min..=cfg.level_max {
        let sum = riemann_sum(&integrand, level, cfg)?;
        rows.push(ZeroModeRow { level, distance_digits: distance_digits(&sum, &target) });
    }
    Ok(rows)
}

/// `Σ_{x<p^N} q^x` divided by `[p^N]_q`; exactly one.
pub fn normalisation(cfg: &OracleConfig, level: u32) -> Result<PadicApprox> {
    riemann_sum(&Integrand { n: 0, factors: vec![(1, 1)], chi: None }, level, cfg)
}

/// Exact value of an arbitrary closed form at the configured point.
pub fn eval_at(e: &RatFunc, cfg: &OracleConfig) -> Result<PadicApprox> {
    PadicPoint::new(cfg)?.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let p = 5;
        let a = PadicApprox::from_rational(p, &Rational::new(7.into(), 25.into()));
        assert_eq!(a.valuation(), Some(-2));
        let b = PadicApprox::from_i64(p, 3);
        let c = a.mul(&b).div(&b).unwrap();
        assert_eq!(distance_digits(&c, &a), a.abs_precision());
    }

    #[test]
    fn log_of_four_at_three() {
        let a = PadicApprox::from_i64(3, 4);
        let l = padic_log(&a).unwrap();
        assert_eq!(l.valuation(), Some(1));
        // 3 − 9/2 + 27/3 mod 3^4
        let head = PadicApprox::from_rational(3, &Rational::new(3.into(), 1.into()))
            .sub(&PadicApprox::from_rational(3, &Rational::new(9.into(), 2.into())))
            .add(&PadicApprox::from_i64(3, 9));
        assert!(distance_digits(&l, &head) >= 4);
    }

    #[test]
    fn log_is_a_homomorphism() {
        for p in [3u64, 5, 7] {
            for t in 1..6i64 {
                let a = PadicApprox::from_i64(p, 1 + p as i64 * t);
                let la = padic_log(&a).unwrap();
                let la2 = padic_log(&a.mul(&a)).unwrap();
                let two = la.add(&la);
                assert!(distance_digits(&la2, &two) >= digit_cap(p) as i64 - 6, "p={p} t={t}");
            }
        }
    }

    #[test]
    fn teichmuller_roots_have_exact_order() {
        for p in [3u64, 5, 7, 13] {
            let roots = RootsOfUnity::new(p);
            let m = ppow(p, digit_cap(p));
            for order in (1..p as u32).filter(|d| (p - 1) % *d as u64 == 0) {
                let w = roots.primitive(order).unwrap();
                assert_eq!(powmod(w, order as u64, m), 1);
                for d in (1..order).filter(|d| order % d == 0) {
                    assert_ne!(powmod(w, d as u64, m), 1);
                }
            }
        }
        assert_eq!(RootsOfUnity::new(7).primitive(4), Err(Error::CharacterNotEmbeddable { order: 4, p: 7 }));
    }

    #[test]
    fn measure_is_normalised() {
        let cfg = OracleConfig::default();
        for level in 1..=5 {
            let one = normalisation(&cfg, level).unwrap();
            assert_eq!(distance_digits(&one, &PadicApprox::from_i64(3, 1)), one.abs_precision());
            assert!(one.abs_precision() >= 30);
        }
    }
}
