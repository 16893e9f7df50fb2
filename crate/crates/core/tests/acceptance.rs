//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use qbernoulli::algebra::rat;
use qbernoulli::beta::{evaluate, int_arg, x_arg, BetaFamily};
use qbernoulli::characters::{enumerate_characters, euler_phi};
use qbernoulli::complex_oracle::{classical_limit_check, reflection_check, resolved_checks, series_points};
use qbernoulli::identities::{catalog, run_case, run_suite, GridLimits, Point, Verdict};
use qbernoulli::padic::{validate_family, zero_mode_check, OracleConfig};
use qbernoulli::{Coeff, RatFunc, Var};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn c(v: i64) -> RatFunc {
    RatFunc::from(v)
}

fn bracket(k: i64) -> RatFunc {
    (0..k).fold(c(0), |acc, i| &acc + &RatFunc::q_pow(i))
}

fn carlitz_values() -> Outcome {
    let b = |n| evaluate(&BetaFamily::carlitz(n), &int_arg(0)).unwrap();
    let want = [
        c(1),
        (-&c(1)).checked_div(&bracket(2)).unwrap(),
        RatFunc::q().checked_div(&(&bracket(2) * &bracket(3))).unwrap(),
    ];
    for (n, w) in want.iter().enumerate() {
        if &b(n as u32) != w {
            return fail(format!("beta_{n} = {}", b(n as u32)));
        }
    }
    let r = run_case("I2", &GridLimits::default(), false).unwrap();
    let max_k = r.claims[0].points_checked;
    if r.verdict != Verdict::Pass || max_k < 8 {
        return fail(format!("recurrence {} over {max_k} points", r.verdict));
    }
    pass(format!("beta_0..2 exact, recurrence PASS for k = 1..{max_k}"))
}

fn identity_suite() -> Outcome {
    let report = run_suite(None, &GridLimits::default(), false).unwrap();
    let summary: Vec<String> = report.cases.iter().map(|c| format!("{}:{}", c.id, c.verdict)).collect();
    if report.all_expected() {
        pass(format!("{} cases, 0 unexpected [{}]", report.cases.len(), summary.join(" ")))
    } else {
        fail(format!("unexpected: {}", report.unexpected.join(", ")))
    }
}

fn distribution_seed() -> Outcome {
    let q = RatFunc::q();
    let target = &(-&c(1)).checked_div(&RatFunc::var(Var::L)).unwrap()
        - &RatFunc::var(Var::X).checked_div(&(&c(1) - &q)).unwrap();
    let case = catalog().into_iter().find(|c| c.id == "I3").unwrap();
    let point = Point::new(&[("n", 1), ("r", 1), ("f", 2)]);
    for claim in &case.claims {
        let Some((lhs, rhs)) = (claim.build)(&point).unwrap() else {
            return fail(format!("{} undefined at the seed point", claim.name));
        };
        if lhs != target || rhs != target {
            return fail(format!("{}: {lhs} vs {rhs}", claim.name));
        }
    }
    pass(format!("{} claims, both sides = {target}", case.claims.len()))
}

fn padic_oracle() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in [3u64, 5] {
        let mut fams = Vec::new();
        for n in 0..=4 {
            fams.push((BetaFamily::carlitz(n), 6));
            fams.push((BetaFamily::twisted(n), 6));
        }
        for h in 1..=3 {
            for n in 0..=3 {
                fams.push((BetaFamily::hr(n, h, 1), 6));
            }
        }
        fams.push((BetaFamily::hr(2, 3, 2), 3));
        for (fam, top) in fams {
            let cfg = OracleConfig { p, u0: 1, level_min: 1, level_max: top, ..OracleConfig::default() };
            let r = validate_family(&fam, &cfg).unwrap();
            let digits: Vec<i64> = r.levels.iter().map(|l| l.effective_digits()).collect();
            let fin = r.final_digits().unwrap();
            count += 1;
            if !r.nonincreasing || fin < i64::from(top) - 2 {
                let shown: Vec<String> =
                    digits.iter().map(|d| if *d == i64::MAX { "exact".into() } else { d.to_string() }).collect();
                bad.push(format!("p={p} {fam} digits by N=1..{top}: [{}]", shown.join(",")));
            }
        }
        let cfg = OracleConfig { p, u0: 1, level_min: 6, level_max: 6, ..OracleConfig::default() };
        let z = zero_mode_check(&cfg).unwrap();
        if z[0].distance_digits < 5 {
            bad.push(format!("p={p} zero-mode digits {} at N=6", z[0].distance_digits));
        }
    }
    if bad.is_empty() {
        pass(format!("{count} families converge monotonically; zero-mode within p^-5 at N=6"))
    } else {
        fail(bad.join("; "))
    }
}

fn complex_oracle() -> Outcome {
    let checks = resolved_checks(&series_points()).unwrap();
    let worst = checks.iter().map(|(_, c)| c.difference).fold(0.0, f64::max);
    let bad: Vec<String> =
        checks.iter().filter(|(_, c)| !c.agrees).map(|(n, c)| format!("{n} {} diff {:e}", c.spec, c.difference)).collect();
    if bad.is_empty() {
        pass(format!("{} checks within their tail bounds, worst difference {worst:.1e}", checks.len()))
    } else {
        fail(bad.join("; "))
    }
}

fn classical_limits() -> Outcome {
    let mut worst_ratio: f64 = 0.0;
    for n in 0..=6 {
        let r = classical_limit_check(&BetaFamily::carlitz(n), &rat(0, 1), &[rat(1, 100), rat(1, 1000)]).unwrap();
        for row in r.rows {
            worst_ratio = worst_ratio.max(row.error / row.epsilon);
        }
    }
    let mut worst_refl: f64 = 0.0;
    for n in 0..=6 {
        for h in 1..=3 {
            for x in [0.0, 0.3, 0.7, 1.0] {
                worst_refl = worst_refl.max(reflection_check(n, h, 0.4, x).unwrap());
            }
        }
    }
    let detail = format!("max |beta_n - B_n|/eps = {worst_ratio:.3}, reflection residual {worst_refl:.1e}");
    if worst_ratio <= 5.0 && worst_refl <= 1e-10 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn character_layer() -> Outcome {
    for f in 1..=24u64 {
        let chars = enumerate_characters(f);
        for chi in &chars {
            for psi in &chars {
                let mut s = Coeff::zero();
                for a in (0..f as i64).filter(|&a| gcd(a as u64, f) == 1) {
                    s = &s + &(&chi.value(a) * &psi.value(a).inverse().unwrap());
                }
                let want = if chi.index() == psi.index() { euler_phi(f) as i64 } else { 0 };
                if s != Coeff::from(want) {
                    return fail(format!("orthogonality mod {f}"));
                }
            }
        }
    }
    let x = x_arg();
    for n in 0..=6 {
        let mut pairs = vec![(BetaFamily::chi(n, 1, 0), BetaFamily::twisted(n))];
        for r in 1..=2 {
            pairs.push((BetaFamily::chi_order_r(n, r, 1, 0), BetaFamily::order_r(n, r)));
            for h in -1..=3 {
                pairs.push((BetaFamily::chi_hr(n, h, r, 1, 0), BetaFamily::hr(n, h, r)));
            }
        }
        for (a, b) in pairs {
            if evaluate(&a, &x).unwrap() != evaluate(&b, &x).unwrap() {
                return fail(format!("{a} differs from {b}"));
            }
        }
    }
    let limits = GridLimits { max_n: 4, max_r: 2, max_f: 4, h_min: -1, h_max: 3 };
    let r = run_case("I4", &limits, false).unwrap();
    if r.verdict != Verdict::Pass {
        return fail(format!("I4 {}", r.verdict));
    }
    pass(format!("orthogonality f <= 24, trivial character mod 1 for n <= 6, I4 PASS on {} points", r.grid_points))
}

fn perturbation() -> Outcome {
    let report = run_suite(None, &GridLimits::default(), true).unwrap();
    let survivors: Vec<&str> =
        report.cases.iter().filter(|c| c.verdict != Verdict::Fail).map(|c| c.id.as_str()).collect();
    if survivors.is_empty() {
        pass(format!("all {} cases FAIL under +q/(1+q)", report.cases.len()))
    } else {
        fail(format!("still passing: {}", survivors.join(", ")))
    }
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact Carlitz values and recurrence", carlitz_values, Duration::from_secs(1)),
        ("identity suite on the default grid", identity_suite, Duration::from_secs(600)),
        ("distribution seed instance", distribution_seed, Duration::from_secs(1)),
        ("p-adic Riemann sums", padic_oracle, Duration::from_secs(120)),
        ("complex series", complex_oracle, Duration::from_secs(30)),
        ("classical limit and reflection", classical_limits, Duration::from_secs(60)),
        ("character layer", character_layer, Duration::from_secs(60)),
        ("perturbation is detected", perturbation, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if took > *limit {
            out.ok = false;
            out.detail = format!("{} (over the {:?} limit)", out.detail, limit);
        }
        if !out.ok {
            failed += 1;
        }
        println!(
            "{} {}. {name} [{:.2}s]: {}",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64(),
            out.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
