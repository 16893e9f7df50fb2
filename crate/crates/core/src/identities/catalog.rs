use crate::algebra::{integer, Coeff, RatFunc, Rational, Var};
use crate::beta::{chi_beta, family_beta, invert_base, rebase, BetaFamily, WeightSpec};
use crate::characters::{enumerate_characters, DirichletCharacter};
use crate::error::Result;
use crate::qcomb::{binomial, binomial_signed, factorial, q_binom, q_factorial, q_int};

use super::{Claim, GridLimits, IdentityCase, Point, Sides, Variant};

fn q() -> RatFunc {
    RatFunc::q()
}

fn qp(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

fn x() -> RatFunc {
    RatFunc::var(Var::X)
}

fn one() -> RatFunc {
    integer(1)
}

fn binom(n: u64, k: u64) -> RatFunc {
    RatFunc::from_rational(Rational::from_integer(binomial(n, k)))
}

fn sign(l: i64) -> RatFunc {
    integer(if l % 2 == 0 { 1 } else { -1 })
}

fn one_minus_q() -> RatFunc {
    &one() - &q()
}

/// `(1 − q)^e` for any integer `e`.
fn omq_pow(e: i64) -> Result<RatFunc> {
    one_minus_q().pow(e)
}

/// `[x]_q` for `arg = q^x`.
fn bracket(arg: &RatFunc) -> Result<RatFunc> {
    (&one() - arg).checked_div(&one_minus_q())
}

fn zero_mode() -> RatFunc {
    (&q() - &one()).checked_div(&RatFunc::var(Var::L)).expect("L ≠ 0")
}

/// `k/[k]_q` built from q-integers; the zero-mode at `k = 0`.
fn k_over_qk(k: i64) -> Result<RatFunc> {
    if k == 0 {
        Ok(zero_mode())
    } else {
        integer(k).checked_div(&q_int(k))
    }
}

/// `l/[lf]_q`; at `l = 0` the zero-mode divided by `f`.
fn l_over_qlf(l: i64, f: u64) -> Result<RatFunc> {
    if l == 0 {
        zero_mode().checked_div(&integer(f as i64))
    } else {
        integer(l).checked_div(&q_int(l * f as i64))
    }
}

/// `C(m,r)/C(m,r)_q · r!/[r]_q!` for any integer `m`; `None` when it reads `0/0`.
fn binomial_ratio(m: i64, r: u32) -> Result<Option<RatFunc>> {
    if (0..r as i64).contains(&m) {
        return Ok(None);
    }
    let classical = RatFunc::from_rational(Rational::from_integer(binomial_signed(m, r)));
    let mut gauss = one();
    for i in 0..r as i64 {
        gauss = &gauss * &q_int(m - i);
    }
    let gauss = gauss.checked_div(&q_factorial(r))?;
    let ratio = classical.checked_div(&gauss)?;
    let rf = RatFunc::from_rational(factorial(r));
    Ok(Some(&ratio * &rf.checked_div(&q_factorial(r))?))
}

fn pow(a: &RatFunc, e: u32) -> RatFunc {
    a.pow(e as i64).expect("nonnegative power")
}

fn hr(n: u32, h: i64, r: u32, arg: &RatFunc) -> Result<RatFunc> {
    family_beta(&BetaFamily::hr(n, h, r), arg)
}

fn order_r(n: u32, r: u32, arg: &RatFunc) -> Result<RatFunc> {
    family_beta(&BetaFamily::order_r(n, r), arg)
}

fn twisted(n: u32, arg: &RatFunc) -> Result<RatFunc> {
    family_beta(&BetaFamily::twisted(n), arg)
}

fn residue_tuples(f: u64, r: u32) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..f as i64).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

fn char_product(chi: Option<&DirichletCharacter>, a: &[i64]) -> Coeff {
    match chi {
        None => Coeff::one(),
        Some(c) => a.iter().fold(Coeff::one(), |acc, &ai| &acc * &c.value(ai)),
    }
}

/// `[f]^{n−r} Σ_a Πχ(a_j) q^{twist(a)} P_{q^f}(q^{Σa}·arg)` with `P` given in the symbol `X`.
fn distribution(
    n: u32,
    r: u32,
    f: u64,
    base: &RatFunc,
    chi: Option<&DirichletCharacter>,
    twist: impl Fn(&[i64]) -> i64,
    arg: &RatFunc,
) -> Result<RatFunc> {
    let rebased = rebase(base, f as u32);
    let mut acc = RatFunc::zero();
    for a in residue_tuples(f, r) {
        let c = char_product(chi, &a);
        if c.is_zero() {
            continue;
        }
        let s: i64 = a.iter().sum();
        let term = rebased.substitute(Var::X, &(&qp(s) * arg))?;
        acc = &acc + &(&term * &qp(twist(&a))).scale(&c);
    }
    Ok(&acc * &q_int(f as i64).pow(n as i64 - r as i64)?)
}

fn chi_of(p: &Point) -> DirichletCharacter {
    enumerate_characters(p.f()).swap_remove(p.chi())
}

// grids

fn h_values(l: &GridLimits) -> impl Iterator<Item = i64> {
    l.h_min..=l.h_max
}

fn grid_n(l: &GridLimits) -> Vec<Point> {
    (0..=l.max_n as i64).map(|n| Point::new(&[("n", n)])).collect()
}

fn grid_k(l: &GridLimits) -> Vec<Point> {
    (1..=l.max_n.max(8) as i64).map(|k| Point::new(&[("k", k)])).collect()
}

fn grid_nr(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for r in 1..=l.max_r as i64 {
        for n in 0..=l.max_n as i64 {
            out.push(Point::new(&[("n", n), ("r", r)]));
        }
    }
    out
}

fn grid_nrf(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for r in 1..=l.max_r as i64 {
            for n in 0..=l.max_n as i64 {
                out.push(Point::new(&[("n", n), ("r", r), ("f", f)]));
            }
        }
    }
    out
}

fn grid_nrf_chi(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for chi in 0..enumerate_characters(f as u64).len() as i64 {
            for r in 1..=l.max_r as i64 {
                for n in 0..=l.max_n as i64 {
                    out.push(Point::new(&[("n", n), ("r", r), ("f", f), ("chi", chi)]));
                }
            }
        }
    }
    out
}

fn grid_nf_chi(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for chi in 0..enumerate_characters(f as u64).len() as i64 {
            for n in 0..=l.max_n as i64 {
                out.push(Point::new(&[("n", n), ("f", f), ("chi", chi)]));
            }
        }
    }
    out
}

fn grid_nh(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for h in h_values(l) {
        for n in 0..=l.max_n as i64 {
            out.push(Point::new(&[("n", n), ("h", h)]));
        }
    }
    out
}

fn grid_nhr(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for r in 1..=l.max_r as i64 {
        for h in h_values(l) {
            for n in 0..=l.max_n as i64 {
                out.push(Point::new(&[("n", n), ("h", h), ("r", r)]));
            }
        }
    }
    out
}

fn grid_nhrf(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for p in grid_nhr(l) {
            out.push(Point::new(&[("n", p.get("n")), ("h", p.h()), ("r", p.get("r")), ("f", f)]));
        }
    }
    out
}

fn grid_nhf(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for p in grid_nh(l) {
            out.push(Point::new(&[("n", p.get("n")), ("h", p.h()), ("f", f)]));
        }
    }
    out
}

fn grid_nhrf_chi(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for f in 1..=l.max_f as i64 {
        for chi in 0..enumerate_characters(f as u64).len() as i64 {
            for p in grid_nhr(l) {
                out.push(Point::new(&[("n", p.get("n")), ("h", p.h()), ("r", p.get("r")), ("f", f), ("chi", chi)]));
            }
        }
    }
    out
}

fn grid_barnes(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for w in [1i64, 2, -1] {
        for d in h_values(l) {
            for r in 1..=l.max_r as i64 {
                for n in 0..=l.max_n as i64 {
                    out.push(Point::new(&[("n", n), ("r", r), ("w", w), ("d", d)]));
                }
            }
        }
    }
    out
}

fn grid_pascal(l: &GridLimits) -> Vec<Point> {
    let mut out = Vec::new();
    for n in 0..=l.max_n.max(8) as i64 {
        for k in 0..=n {
            out.push(Point::new(&[("n", n), ("k", k)]));
        }
    }
    out
}

// I1: twisted closed forms

fn i1_line1(p: &Point) -> Result<Sides> {
    let n = p.n();
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&-&x(), l as u32)) * &k_over_qk(l)?);
    }
    Ok(Some((twisted(n, &x())?, &s * &omq_pow(-(n as i64))?)))
}

fn i1_line2(p: &Point) -> Result<Sides> {
    let n = p.n();
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let t = if l == 0 {
            zero_mode().checked_div(&one_minus_q())?
        } else {
            integer(l).checked_div(&(&one() - &qp(l)))?
        };
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&-&x(), l as u32)) * &t);
    }
    Ok(Some((twisted(n, &x())?, &s * &omq_pow(1 - n as i64)?)))
}

fn i1_shifted(n: u32, flip: bool) -> Result<RatFunc> {
    let mut s = RatFunc::zero();
    for l in 0..n as i64 {
        let sg = if flip { sign(l) } else { sign(l + 1) };
        let t = pow(&x(), l as u32 + 1).checked_div(&(&one() - &qp(l + 1)))?;
        s = &s + &(&(&binom(n as u64 - 1, l as u64) * &t) * &sg);
    }
    Ok(&(&integer(n as i64) * &s) * &omq_pow(1 - n as i64)?)
}

fn i1_line3(p: &Point) -> Result<Sides> {
    Ok(Some((twisted(p.n(), &x())?, i1_shifted(p.n(), false)?)))
}

fn i1_line3_zero_mode(p: &Point) -> Result<Sides> {
    let n = p.n();
    let restored = &i1_shifted(n, false)? + &(&zero_mode() * &omq_pow(-(n as i64))?);
    Ok(Some((twisted(n, &x())?, restored)))
}

fn i1_line3_flipped(p: &Point) -> Result<Sides> {
    Ok(Some((twisted(p.n(), &x())?, i1_shifted(p.n(), true)?)))
}

// I2: umbral recurrence

fn i2_recurrence(p: &Point) -> Result<Sides> {
    let k = p.get("k") as u32;
    let mut s = RatFunc::zero();
    for i in 0..=k {
        let b = family_beta(&BetaFamily::carlitz(i), &one())?;
        s = &s + &(&(&binom(k as u64, i as u64) * &qp(i as i64)) * &b);
    }
    let lhs = &(&q() * &s) - &family_beta(&BetaFamily::carlitz(k), &one())?;
    let rhs = integer(if k == 1 { 1 } else { 0 });
    Ok(Some((lhs, rhs)))
}

// I3: order-r distribution

fn i3_lsum(p: &Point) -> Result<Sides> {
    let (n, r, f) = (p.n(), p.r(), p.f());
    let tuples = residue_tuples(f, r);
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let w = pow(&l_over_qlf(l, f)?, r);
        let c = &binom(n as u64, l as u64) * &sign(l);
        for a in &tuples {
            let sa: i64 = a.iter().sum();
            s = &s + &(&(&c * &(&qp(l * sa) * &pow(&x(), l as u32))) * &w);
        }
    }
    Ok(Some((order_r(n, r, &x())?, &s * &omq_pow(-(n as i64))?)))
}

fn i3_distribution(p: &Point) -> Result<Sides> {
    let (n, r, f) = (p.n(), p.r(), p.f());
    let rhs = distribution(n, r, f, &order_r(n, r, &x())?, None, |_| 0, &x())?;
    Ok(Some((order_r(n, r, &x())?, rhs)))
}

// I4: character order-r family

fn i4_lhs(p: &Point) -> Result<RatFunc> {
    chi_beta(&BetaFamily::chi_order_r(p.n(), p.r(), p.f(), p.chi()), &x())
}

fn i4_lsum(p: &Point) -> Result<Sides> {
    let (n, r, f) = (p.n(), p.r(), p.f());
    let chi = chi_of(p);
    let tuples = residue_tuples(f, r);
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let mut inner = RatFunc::zero();
        for a in &tuples {
            let c = char_product(Some(&chi), a);
            if !c.is_zero() {
                inner = &inner + &qp(l * a.iter().sum::<i64>()).scale(&c);
            }
        }
        let term = &(&binom(n as u64, l as u64) * &pow(&-&x(), l as u32)) * &inner;
        s = &s + &(&term * &pow(&l_over_qlf(l, f)?, r));
    }
    Ok(Some((i4_lhs(p)?, &s * &omq_pow(-(n as i64))?)))
}

fn i4_distribution(p: &Point) -> Result<Sides> {
    let (n, r, f) = (p.n(), p.r(), p.f());
    let chi = chi_of(p);
    let rhs = distribution(n, r, f, &order_r(n, r, &x())?, Some(&chi), |_| 0, &x())?;
    Ok(Some((i4_lhs(p)?, rhs)))
}

// I5: (h,r) closed forms

fn i5_ratio(p: &Point) -> Result<Sides> {
    let (n, h, r) = (p.n(), p.h(), p.r());
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let Some(ratio) = binomial_ratio(l + h - 1, r)? else {
            return Ok(None);
        };
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&-&x(), l as u32)) * &ratio);
    }
    Ok(Some((hr(n, h, r, &x())?, &s * &omq_pow(-(n as i64))?)))
}

fn i5_distribution(p: &Point) -> Result<Sides> {
    let (n, h, r, f) = (p.n(), p.h(), p.r(), p.f());
    let twist = |a: &[i64]| a.iter().enumerate().map(|(j, &aj)| (h - 1 - j as i64) * aj).sum();
    let rhs = distribution(n, r, f, &hr(n, h, r, &x())?, None, twist, &x())?;
    Ok(Some((hr(n, h, r, &x())?, rhs)))
}

// I6: h-recurrence of the numbers

fn i6_recurrence(p: &Point) -> Result<Sides> {
    let (n, h, r) = (p.n(), p.h(), p.r());
    let rhs = &(&(&q() - &one()) * &hr(n + 1, h - 1, r, &one())?) + &hr(n, h - 1, r, &one())?;
    Ok(Some((hr(n, h, r, &one())?, rhs)))
}

// I7, I8: binomial transforms of the numbers

fn i7_lhs(n: u32, r: u32) -> Result<RatFunc> {
    let mut s = RatFunc::zero();
    for l in 0..=n {
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&(&q() - &one()), l)) * &hr(l, 0, r, &one())?);
    }
    Ok(s)
}

fn i7_weights(p: &Point) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    let mut rhs = one();
    for i in 0..r as i64 {
        rhs = &rhs * &k_over_qk(n as i64 - 1 - i)?;
    }
    Ok(Some((i7_lhs(n, r)?, rhs)))
}

fn i7_ratio(p: &Point) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    match binomial_ratio(n as i64 - 1, r)? {
        None => Ok(None),
        Some(rhs) => Ok(Some((i7_lhs(n, r)?, rhs))),
    }
}

fn i8_transform(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let mut s = RatFunc::zero();
    for l in 0..=n {
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&(&q() - &one()), l)) * &hr(l, h, 1, &one())?);
    }
    Ok(Some((s, k_over_qk(n as i64 + h - 1)?)))
}

// I9: transform pair for the (0,r) polynomials

fn i9_forward(p: &Point, printed: bool) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let factor = if printed {
            match binomial_ratio(l - 1, r)? {
                Some(v) => v,
                None => return Ok(None),
            }
        } else {
            let mut w = one();
            for i in 0..r as i64 {
                w = &w * &k_over_qk(l - 1 - i)?;
            }
            w
        };
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&-&x(), l as u32)) * &factor);
    }
    Ok(Some((&omq_pow(n as i64)? * &hr(n, 0, r, &x())?, s)))
}

fn i9_forward_weights(p: &Point) -> Result<Sides> {
    i9_forward(p, false)
}

fn i9_forward_ratio(p: &Point) -> Result<Sides> {
    i9_forward(p, true)
}

fn i9_inverse(p: &Point, printed: bool) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    let factor = if printed {
        match binomial_ratio(n as i64 - 1, r)? {
            Some(v) => v,
            None => return Ok(None),
        }
    } else {
        let mut w = one();
        for i in 0..r as i64 {
            w = &w * &k_over_qk(n as i64 - 1 - i)?;
        }
        w
    };
    let mut s = RatFunc::zero();
    for l in 0..=n {
        s = &s + &(&(&binom(n as u64, l as u64) * &pow(&(&q() - &one()), l)) * &hr(l, 0, r, &x())?);
    }
    Ok(Some((&pow(&x(), n) * &factor, s)))
}

fn i9_inverse_weights(p: &Point) -> Result<Sides> {
    i9_inverse(p, false)
}

fn i9_inverse_ratio(p: &Point) -> Result<Sides> {
    i9_inverse(p, true)
}

// I10: addition theorems for the (0,r) polynomials

fn i10_about_x(p: &Point) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    let bx = bracket(&x())?;
    let mut s = RatFunc::zero();
    for l in 0..=n {
        let t = &(&binom(n as u64, l as u64) * &pow(&bx, n - l)) * &pow(&x(), l);
        s = &s + &(&t * &hr(l, 0, r, &one())?);
    }
    Ok(Some((hr(n, 0, r, &x())?, s)))
}

fn i10_two_args(p: &Point) -> Result<Sides> {
    let (n, r) = (p.n(), p.r());
    let y = RatFunc::var(Var::Y);
    let by = bracket(&y)?;
    let mut s = RatFunc::zero();
    for l in 0..=n {
        let t = &(&binom(n as u64, l as u64) * &pow(&by, n - l)) * &pow(&y, l);
        s = &s + &(&t * &hr(l, 0, r, &x())?);
    }
    Ok(Some((hr(n, 0, r, &(&x() * &y))?, s)))
}

// I12: the (h,1) polynomials

fn b1(n: u32, h: i64, arg: &RatFunc) -> Result<RatFunc> {
    hr(n, h, 1, arg)
}

fn i12_about_x(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let bx = bracket(&x())?;
    let mut s = RatFunc::zero();
    for l in 0..=n {
        let t = &(&binom(n as u64, l as u64) * &pow(&bx, n - l)) * &pow(&x(), l);
        s = &s + &(&t * &b1(l, h, &one())?);
    }
    Ok(Some((b1(n, h, &x())?, s)))
}

fn i12_difference_rhs(n: u32, h: i64) -> Result<RatFunc> {
    let bx = bracket(&x())?;
    let first = if n == 0 {
        RatFunc::zero()
    } else {
        &(&x() * &integer(n as i64)) * &pow(&bx, n - 1)
    };
    let qm1 = &q() - &one();
    let second = &(&integer(h) * &qm1) * &pow(&bx, n);
    Ok(&(&first + &second) - &(&qm1 * &pow(&bx, n)))
}

fn i12_difference_printed(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let lhs = &(&qp(h - 1) * &b1(n, h, &(&q() * &x()))?) - &b1(n, h, &one())?;
    Ok(Some((lhs, i12_difference_rhs(n, h)?)))
}

fn i12_difference_x(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let lhs = &(&qp(h - 1) * &b1(n, h, &(&q() * &x()))?) - &b1(n, h, &x())?;
    Ok(Some((lhs, i12_difference_rhs(n, h)?)))
}

fn kronecker(n: u32, at: u32) -> RatFunc {
    integer(if n == at { 1 } else { 0 })
}

fn order_zero_correction(n: u32, h: i64) -> RatFunc {
    if n == 0 {
        &integer(h - 1) * &(&q() - &one())
    } else {
        RatFunc::zero()
    }
}

fn i12_at_zero_lhs(n: u32, h: i64) -> Result<RatFunc> {
    Ok(&(&qp(h - 1) * &b1(n, h, &q())?) - &b1(n, h, &one())?)
}

fn i12_at_zero(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    Ok(Some((i12_at_zero_lhs(n, h)?, kronecker(n, 1))))
}

fn i12_at_zero_corrected(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    Ok(Some((i12_at_zero_lhs(n, h)?, &kronecker(n, 1) + &order_zero_correction(n, h))))
}

fn i12_shifted_lhs(n: u32, h: i64) -> Result<RatFunc> {
    let a = &(&qp(h - 2) * &(&q() - &one())) * &b1(n + 1, h - 1, &q())?;
    let b = &qp(h - 2) * &b1(n, h - 1, &q())?;
    Ok(&(&a + &b) - &b1(n, h, &one())?)
}

fn i12_shifted(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    Ok(Some((i12_shifted_lhs(n, h)?, kronecker(n, 1))))
}

fn i12_shifted_corrected(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    Ok(Some((i12_shifted_lhs(n, h)?, &kronecker(n, 1) + &order_zero_correction(n, h))))
}

fn i12_h_shift(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let rhs = &(&(&q() - &one()) * &b1(n + 1, h - 1, &x())?) + &b1(n, h - 1, &x())?;
    Ok(Some((&x() * &b1(n, h, &x())?, rhs)))
}

fn i12_order_zero(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    if n != 0 || h == 1 {
        return Ok(None);
    }
    Ok(Some((b1(0, h, &one())?, integer(h - 1).checked_div(&q_int(h - 1))?)))
}

// I13: base inversion

fn i13_reflection(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    let inverted = invert_base(&b1(n, h, &x())?);
    let lhs = inverted.substitute(Var::X, &x().checked_div(&q())?)?;
    let rhs = &(&sign(n as i64) * &qp(n as i64 + h - 2)) * &b1(n, h, &x())?;
    Ok(Some((lhs, rhs)))
}

fn i13_at_one(p: &Point) -> Result<Sides> {
    let (n, h) = (p.n(), p.h());
    if n < 2 {
        return Ok(None);
    }
    let lhs = invert_base(&b1(n, h, &one())?);
    let rhs = &(&sign(n as i64) * &qp(n as i64 - 1)) * &b1(n, h, &one())?;
    Ok(Some((lhs, rhs)))
}

// I14: distributions of the (h,1) polynomials

fn i14_scaled(p: &Point) -> Result<Sides> {
    let (n, h, f) = (p.n(), p.h(), p.f());
    let rebased = rebase(&b1(n, h, &x())?, f as u32);
    let xf = pow(&x(), f as u32);
    let mut s = RatFunc::zero();
    for l in 0..f as i64 {
        let term = rebased.substitute(Var::X, &(&xf * &qp(l)))?;
        s = &s + &(&qp(l * (h - 1)) * &term);
    }
    let lhs = &s * &q_int(f as i64).pow(n as i64 - 1)?;
    Ok(Some((lhs, b1(n, h, &xf)?)))
}

fn i14_residue_printed(p: &Point) -> Result<Sides> {
    let (n, h, f) = (p.n(), p.h(), p.f());
    let rebased = rebase(&b1(n, h, &x())?, f as u32);
    let mut s = RatFunc::zero();
    for i in 0..f as i64 {
        let term = rebased.substitute(Var::X, &(&qp(i) * &x()))?;
        s = &s + &(&(&qp((h - 1) * i) * &pow(&q_int(i), n)) * &term);
    }
    Ok(Some((b1(n, h, &x())?, s.checked_div(&q_int(f as i64))?)))
}

fn i14_residue_corrected(p: &Point) -> Result<Sides> {
    let (n, h, f) = (p.n(), p.h(), p.f());
    let rhs = distribution(n, 1, f, &b1(n, h, &x())?, None, |a| (h - 1) * a[0], &x())?;
    Ok(Some((b1(n, h, &x())?, rhs)))
}

// I15: the character family against its l-sum

fn i15_lhs(p: &Point) -> Result<RatFunc> {
    chi_beta(&BetaFamily::chi(p.n(), p.f(), p.chi()), &x())
}

fn i15_lsum(p: &Point) -> Result<Sides> {
    let (n, f) = (p.n(), p.f());
    let chi = chi_of(p);
    let mut s = RatFunc::zero();
    for a in 0..f as i64 {
        let c = chi.value(a);
        if c.is_zero() {
            continue;
        }
        let mut inner = RatFunc::zero();
        for l in 0..=n as i64 {
            let t = &(&(&binom(n as u64, l as u64) * &sign(l)) * &pow(&x(), l as u32)) * &qp(l * a);
            inner = &inner + &(&t * &l_over_qlf(l, f)?);
        }
        s = &s + &inner.scale(&c);
    }
    Ok(Some((i15_lhs(p)?, &s * &omq_pow(-(n as i64))?)))
}

fn i15_distribution(p: &Point) -> Result<Sides> {
    let (n, f) = (p.n(), p.f());
    let chi = chi_of(p);
    let rhs = distribution(n, 1, f, &twisted(n, &x())?, Some(&chi), |_| 0, &x())?;
    Ok(Some((i15_lhs(p)?, rhs)))
}

// I16: h-recurrence of the character numbers

fn i16_recurrence(p: &Point) -> Result<Sides> {
    let (n, h, r, f, c) = (p.n(), p.h(), p.r(), p.f(), p.chi());
    let fam = |n, h| BetaFamily::chi_hr(n, h, r, f, c);
    let rhs = &(&(&q() - &one()) * &chi_beta(&fam(n + 1, h - 1), &one())?) + &chi_beta(&fam(n, h - 1), &one())?;
    Ok(Some((chi_beta(&fam(n, h), &one())?, rhs)))
}

// I17: Barnes type

fn i17_spec(p: &Point) -> Result<WeightSpec> {
    let (r, w, d) = (p.r() as i64, p.get("w"), p.get("d"));
    WeightSpec::new((0..r).map(|i| (w, d + i)).collect())
}

fn i17_explicit(p: &Point) -> Result<Sides> {
    let n = p.n();
    let spec = i17_spec(p)?;
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let mut t = &(&binom(n as u64, l as u64) * &sign(l)) * &pow(&x(), l as u32);
        for &(w, d) in spec.factors() {
            t = &t * &k_over_qk(l * w + d)?;
        }
        s = &s + &t;
    }
    let lhs = family_beta(&BetaFamily::barnes(n, spec), &x())?;
    Ok(Some((lhs, &s * &omq_pow(-(n as i64))?)))
}

fn i17_ratio(p: &Point) -> Result<Sides> {
    let (n, r, w, d) = (p.n(), p.r(), p.get("w"), p.get("d"));
    let mut s = RatFunc::zero();
    for l in 0..=n as i64 {
        let Some(ratio) = binomial_ratio(l * w + d + r as i64 - 1, r)? else {
            return Ok(None);
        };
        s = &s + &(&(&(&binom(n as u64, l as u64) * &sign(l)) * &pow(&x(), l as u32)) * &ratio);
    }
    let lhs = family_beta(&BetaFamily::barnes(n, i17_spec(p)?), &x())?;
    Ok(Some((lhs, &s * &omq_pow(-(n as i64))?)))
}

// I18: distribution for h = 0

fn i18_distribution(p: &Point) -> Result<Sides> {
    let (n, r, f) = (p.n(), p.r(), p.f());
    let twist = |a: &[i64]| -a.iter().enumerate().map(|(j, &aj)| (j as i64 + 1) * aj).sum::<i64>();
    let rhs = distribution(n, r, f, &hr(n, 0, r, &x())?, None, twist, &x())?;
    Ok(Some((hr(n, 0, r, &x())?, rhs)))
}

// I19: Gaussian binomials

fn pk(p: &Point) -> (u32, i64) {
    (p.n(), p.get("k"))
}

fn i19_first(p: &Point) -> Result<Sides> {
    let (n, k) = pk(p);
    let rhs = &q_binom(n, k - 1) + &(&qp(k) * &q_binom(n, k));
    Ok(Some((q_binom(n + 1, k), rhs)))
}

fn i19_second(p: &Point, shift: i64) -> Result<Sides> {
    let (n, k) = pk(p);
    let rhs = &(&qp(n as i64 - k + shift) * &q_binom(n, k - 1)) + &q_binom(n, k);
    Ok(Some((q_binom(n + 1, k), rhs)))
}

fn i19_second_printed(p: &Point) -> Result<Sides> {
    i19_second(p, 0)
}

fn i19_second_corrected(p: &Point) -> Result<Sides> {
    i19_second(p, 1)
}

fn i19_factorials(p: &Point) -> Result<Sides> {
    let (n, k) = pk(p);
    let ku = k as u32;
    let ratio = q_factorial(n).checked_div(&(&q_factorial(n - ku) * &q_factorial(ku)))?;
    Ok(Some((q_binom(n, k), ratio)))
}

fn i19_falling(p: &Point) -> Result<Sides> {
    let (n, k) = pk(p);
    let mut prod = one();
    for i in 0..k {
        prod = &prod * &q_int(n as i64 - i);
    }
    Ok(Some((q_binom(n, k), prod.checked_div(&q_factorial(k as u32))?)))
}

fn i19_limit(p: &Point) -> Result<Sides> {
    let (n, k) = pk(p);
    let at_one = q_binom(n, k).substitute_constant(Var::Q, &Coeff::one())?;
    Ok(Some((at_one, binom(n as u64, k as u64))))
}

fn claim(name: &'static str, formula: &'static str, build: super::Builder) -> Claim {
    Claim { name, formula, build, variants: Vec::new() }
}

fn claim_with(name: &'static str, formula: &'static str, build: super::Builder, variants: Vec<Variant>) -> Claim {
    Claim { name, formula, build, variants }
}

fn variant(name: &'static str, formula: &'static str, build: super::Builder) -> Variant {
    Variant { name, formula, build }
}

pub fn catalog() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "I1",
            title: "twisted polynomials: equivalent finite closed forms",
            grid: grid_n,
            claims: vec![
                claim(
                    "l-sum with l/[l]_q",
                    "beta_n(x) = (1-q)^{-n} sum_l C(n,l) (-q^x)^l l/[l]_q",
                    i1_line1,
                ),
                claim(
                    "l-sum with l/(1-q^l)",
                    "beta_n(x) = (1-q)^{1-n} sum_l C(n,l) (-q^x)^l l/(1-q^l)",
                    i1_line2,
                ),
                claim_with(
                    "shifted (n-1)-sum",
                    "beta_n(x) = n (1-q)^{1-n} sum_{l<n} C(n-1,l) q^{(l+1)x} (-1)^{l+1}/(1-q^{l+1})",
                    i1_line3,
                    vec![
                        variant(
                            "zero-mode restored",
                            "shifted (n-1)-sum + ((q-1)/L)/(1-q)^n",
                            i1_line3_zero_mode,
                        ),
                        variant("sign (-1)^l", "shifted (n-1)-sum with (-1)^l", i1_line3_flipped),
                    ],
                ),
            ],
        },
        IdentityCase {
            id: "I2",
            title: "Carlitz umbral recurrence",
            grid: grid_k,
            claims: vec![claim(
                "umbral recurrence",
                "q sum_i C(k,i) q^i beta_i - beta_k = [k=1]",
                i2_recurrence,
            )],
        },
        IdentityCase {
            id: "I3",
            title: "order-r polynomials: distribution over residues mod f",
            grid: grid_nrf,
            claims: vec![
                claim(
                    "l-sum over residues",
                    "beta^(r)_n(x) = (1-q)^{-n} sum_l sum_a C(n,l)(-1)^l q^{l(a_1+..+a_r+x)} l^r/[lf]^r",
                    i3_lsum,
                ),
                claim(
                    "distribution",
                    "beta^(r)_n(x) = [f]^{n-r} sum_a beta^(r)_{n,q^f}((a_1+..+a_r+x)/f)",
                    i3_distribution,
                ),
            ],
        },
        IdentityCase {
            id: "I4",
            title: "character order-r polynomials: l-sum and distribution",
            grid: grid_nrf_chi,
            claims: vec![
                claim(
                    "l-sum over residues",
                    "beta^(r)_{n,chi}(x) = (1-q)^{-n} sum_l C(n,l)(-q^x)^l sum_a prod chi(a_i) q^{l sum a} l^r/[lf]^r",
                    i4_lsum,
                ),
                claim(
                    "distribution",
                    "beta^(r)_{n,chi}(x) = [f]^{n-r} sum_a prod chi(a_i) beta^(r)_{n,q^f}((x+sum a)/f)",
                    i4_distribution,
                ),
            ],
        },
        IdentityCase {
            id: "I5",
            title: "(h,r) polynomials: binomial-ratio form and distribution",
            grid: grid_nhrf,
            claims: vec![
                claim(
                    "binomial-ratio closed form",
                    "beta^(h,r)_n(x) = (1-q)^{-n} sum_l C(n,l)(-q^x)^l C(l+h-1,r)/C(l+h-1,r)_q r!/[r]_q!",
                    i5_ratio,
                ),
                claim(
                    "distribution with residue twist",
                    "beta^(h,r)_n(x) = [f]^{n-r} sum_a q^{sum (h-j)a_j} beta^(h,r)_{n,q^f}((x+sum a)/f)",
                    i5_distribution,
                ),
            ],
        },
        IdentityCase {
            id: "I6",
            title: "(h,r) numbers: recurrence in h",
            grid: grid_nhr,
            claims: vec![claim(
                "recurrence in h",
                "beta^(h,r)_n = (q-1) beta^(h-1,r)_{n+1} + beta^(h-1,r)_n",
                i6_recurrence,
            )],
        },
        IdentityCase {
            id: "I7",
            title: "(0,r) numbers: binomial transform",
            grid: grid_nr,
            claims: vec![
                claim(
                    "weight product",
                    "sum_l C(n,l)(q-1)^l beta^(0,r)_l = prod_{i<r} (n-1-i)/[n-1-i]_q",
                    i7_weights,
                ),
                claim(
                    "binomial ratio",
                    "sum_l C(n,l)(q-1)^l beta^(0,r)_l = C(n-1,r)/C(n-1,r)_q r!/[r]_q!",
                    i7_ratio,
                ),
            ],
        },
        IdentityCase {
            id: "I8",
            title: "(h,1) numbers: binomial transform",
            grid: grid_nh,
            claims: vec![claim(
                "binomial transform",
                "sum_l C(n,l)(q-1)^l beta^(h,1)_l = (n+h-1)/[n+h-1]_q",
                i8_transform,
            )],
        },
        IdentityCase {
            id: "I9",
            title: "(0,r) polynomials: transform pair",
            grid: grid_nr,
            claims: vec![
                claim(
                    "forward transform",
                    "(1-q)^n beta^(0,r)_n(x) = sum_l C(n,l)(-1)^l q^{lx} prod_{i<r} (l-1-i)/[l-1-i]_q",
                    i9_forward_weights,
                ),
                claim(
                    "forward transform, binomial ratio",
                    "(1-q)^n beta^(0,r)_n(x) = sum_l C(n,l)(-1)^l q^{lx} C(l-1,r)/C(l-1,r)_q r!/[r]_q!",
                    i9_forward_ratio,
                ),
                claim(
                    "inverse transform",
                    "q^{nx} prod_{i<r} (n-1-i)/[n-1-i]_q = sum_l C(n,l)(q-1)^l beta^(0,r)_l(x)",
                    i9_inverse_weights,
                ),
                claim(
                    "inverse transform, binomial ratio",
                    "q^{nx} C(n-1,r)/C(n-1,r)_q r!/[r]_q! = sum_l C(n,l)(q-1)^l beta^(0,r)_l(x)",
                    i9_inverse_ratio,
                ),
            ],
        },
        IdentityCase {
            id: "I10",
            title: "(0,r) polynomials: addition theorems",
            grid: grid_nr,
            claims: vec![
                claim(
                    "expansion about x",
                    "beta^(0,r)_n(x) = sum_l C(n,l) [x]^{n-l} q^{lx} beta^(0,r)_l",
                    i10_about_x,
                ),
                claim(
                    "two arguments",
                    "beta^(0,r)_n(x+y) = sum_l C(n,l) [y]^{n-l} q^{ly} beta^(0,r)_l(x)",
                    i10_two_args,
                ),
            ],
        },
        IdentityCase {
            id: "I12",
            title: "(h,1) polynomials: addition, difference and recurrences",
            grid: grid_nh,
            claims: vec![
                claim(
                    "expansion about x",
                    "beta^(h,1)_n(x) = sum_l C(n,l) [x]^{n-l} q^{lx} beta^(h,1)_l",
                    i12_about_x,
                ),
                claim_with(
                    "difference equation",
                    "q^{h-1} beta^(h,1)_n(x+1) - beta^(h,1)_n = q^x n [x]^{n-1} + h(q-1)[x]^n - (q-1)[x]^n",
                    i12_difference_printed,
                    vec![variant(
                        "x-dependent second term",
                        "q^{h-1} beta^(h,1)_n(x+1) - beta^(h,1)_n(x) = q^x n [x]^{n-1} + (h-1)(q-1)[x]^n",
                        i12_difference_x,
                    )],
                ),
                claim_with(
                    "recurrence at x=0",
                    "q^{h-1} beta^(h,1)_n(1) - beta^(h,1)_n = [n=1]",
                    i12_at_zero,
                    vec![variant(
                        "order-zero correction",
                        "q^{h-1} beta^(h,1)_n(1) - beta^(h,1)_n = [n=1] + (h-1)(q-1)[n=0]",
                        i12_at_zero_corrected,
                    )],
                ),
                claim_with(
                    "shifted-order recurrence",
                    "q^{h-2}(q-1) beta^(h-1,1)_{n+1}(1) + q^{h-2} beta^(h-1,1)_n(1) - beta^(h,1)_n = [n=1]",
                    i12_shifted,
                    vec![variant(
                        "order-zero correction",
                        "same left side = [n=1] + (h-1)(q-1)[n=0]",
                        i12_shifted_corrected,
                    )],
                ),
                claim(
                    "shift in h",
                    "q^x beta^(h,1)_n(x) = (q-1) beta^(h-1,1)_{n+1}(x) + beta^(h-1,1)_n(x)",
                    i12_h_shift,
                ),
                claim("order-zero value", "beta^(h,1)_0 = (h-1)/[h-1]_q", i12_order_zero),
            ],
        },
        IdentityCase {
            id: "I13",
            title: "(h,1) polynomials: inversion of the base",
            grid: grid_nh,
            claims: vec![
                claim(
                    "reflection",
                    "beta^(h,1)_{n,1/q}(1-x) = (-1)^n q^{n+h-2} beta^(h,1)_{n,q}(x)",
                    i13_reflection,
                ),
                claim(
                    "value at x=1",
                    "beta^(h,1)_{n,1/q} = (-1)^n q^{n-1} beta^(h,1)_{n,q} for n > 1",
                    i13_at_one,
                ),
            ],
        },
        IdentityCase {
            id: "I14",
            title: "(h,1) polynomials: distributions",
            grid: grid_nhf,
            claims: vec![
                claim(
                    "scaled argument",
                    "[f]^{n-1} sum_{l<f} q^{l(h-1)} beta^(h,1)_{n,q^f}(x + l/f) = beta^(h,1)_n(fx)",
                    i14_scaled,
                ),
                claim_with(
                    "residue-weighted distribution",
                    "beta^(h,1)_n(x) = (1/[f]) sum_{i<f} q^{(h-1)i} [i]^n beta^(h,1)_{n,q^f}((x+i)/f)",
                    i14_residue_printed,
                    vec![variant(
                        "[f]^{n-1} normalisation",
                        "beta^(h,1)_n(x) = [f]^{n-1} sum_{i<f} q^{(h-1)i} beta^(h,1)_{n,q^f}((x+i)/f)",
                        i14_residue_corrected,
                    )],
                ),
            ],
        },
        IdentityCase {
            id: "I15",
            title: "character polynomials: l-sum and distribution",
            grid: grid_nf_chi,
            claims: vec![
                claim(
                    "l-sum over residues",
                    "beta_{n,chi}(x) = (1-q)^{-n} sum_a chi(a) sum_l C(n,l)(-1)^l q^{l(x+a)} l/[lf]",
                    i15_lsum,
                ),
                claim(
                    "distribution",
                    "beta_{n,chi}(x) = [f]^{n-1} sum_a chi(a) beta_{n,q^f}((a+x)/f)",
                    i15_distribution,
                ),
            ],
        },
        IdentityCase {
            id: "I16",
            title: "character (h,r) numbers: recurrence in h",
            grid: grid_nhrf_chi,
            claims: vec![claim(
                "recurrence in h",
                "beta^(h,r)_{n,chi} = (q-1) beta^(h-1,r)_{n+1,chi} + beta^(h-1,r)_{n,chi}",
                i16_recurrence,
            )],
        },
        IdentityCase {
            id: "I17",
            title: "Barnes type: explicit sum and consecutive shifts",
            grid: grid_barnes,
            claims: vec![
                claim(
                    "explicit weight sum",
                    "beta^(r)_n(x|w:delta) = (1-q)^{-n} sum_l C(n,l)(-1)^l q^{lx} prod_j (l w_j+delta_j)/[l w_j+delta_j]",
                    i17_explicit,
                ),
                claim(
                    "consecutive shifts",
                    "beta^(r)_n(x|w..w:d,..,d+r-1) = (1-q)^{-n} sum_l C(n,l)(-1)^l q^{lx} C(lw+d+r-1,r)/C(lw+d+r-1,r)_q r!/[r]_q!",
                    i17_ratio,
                ),
            ],
        },
        IdentityCase {
            id: "I18",
            title: "(0,r) polynomials: distribution",
            grid: grid_nrf,
            claims: vec![claim(
                "distribution",
                "beta^(0,r)_n(x) = [f]^{n-r} sum_i q^{-i_1-2i_2-..-r i_r} beta^(0,r)_{n,q^f}((x+sum i)/f)",
                i18_distribution,
            )],
        },
        IdentityCase {
            id: "I19",
            title: "Gaussian binomials: Pascal rules and factorial form",
            grid: grid_pascal,
            claims: vec![
                claim("first rule", "C(n+1,k)_q = C(n,k-1)_q + q^k C(n,k)_q", i19_first),
                claim_with(
                    "second rule",
                    "C(n+1,k)_q = q^{n-k} C(n,k-1)_q + C(n,k)_q",
                    i19_second_printed,
                    vec![variant("exponent n-k+1", "C(n+1,k)_q = q^{n-k+1} C(n,k-1)_q + C(n,k)_q", i19_second_corrected)],
                ),
                claim("factorial ratio", "C(n,k)_q = [n]!/([n-k]![k]!)", i19_factorials),
                claim("falling product", "C(n,k)_q = [n][n-1]..[n-k+1]/[k]!", i19_falling),
                claim("limit q -> 1", "C(n,k)_q at q=1 = C(n,k)", i19_limit),
            ],
        },
    ]
}
