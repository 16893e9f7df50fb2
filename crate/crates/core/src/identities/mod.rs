//! Executable identity checks with PASS / VARIANT-PASS / FAIL verdicts.
//!
//! A case holds claims. Each claim has a literal builder producing an
//! `(lhs, rhs)` pair at a grid point and optional corrected variants. A claim
//! passes when the literal form holds at every defined grid point; if it does
//! not, the first variant that holds at every point is reported instead.

mod catalog;
pub mod errata;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::algebra::{integer, RatFunc};
use crate::error::{Error, Result};

pub use catalog::catalog;
pub use errata::{errata_manifest, ErrataEntry};

/// Parameter ranges for the grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridLimits {
    pub max_n: u32,
    pub max_r: u32,
    pub max_f: u64,
    pub h_min: i64,
    pub h_max: i64,
}

impl Default for GridLimits {
    fn default() -> Self {
        GridLimits { max_n: 5, max_r: 2, max_f: 4, h_min: -1, h_max: 3 }
    }
}

/// Named integer parameters of one grid point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Point(BTreeMap<&'static str, i64>);

impl Point {
    pub fn new(entries: &[(&'static str, i64)]) -> Self {
        Point(entries.iter().copied().collect())
    }

    pub fn get(&self, name: &str) -> i64 {
        *self.0.get(name).unwrap_or_else(|| panic!("grid point lacks `{name}`"))
    }

    pub fn n(&self) -> u32 {
        self.get("n") as u32
    }

    pub fn r(&self) -> u32 {
        self.get("r") as u32
    }

    pub fn h(&self) -> i64 {
        self.get("h")
    }

    pub fn f(&self) -> u64 {
        self.get("f") as u64
    }

    pub fn chi(&self) -> usize {
        self.get("chi") as usize
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// `None` when the printed form is undefined at the point (a `0/0` factor).
pub type Sides = Option<(RatFunc, RatFunc)>;
pub type Builder = fn(&Point) -> Result<Sides>;

pub struct Variant {
    pub name: &'static str,
    pub formula: &'static str,
    pub build: Builder,
}

pub struct Claim {
    pub name: &'static str,
    pub formula: &'static str,
    pub build: Builder,
    pub variants: Vec<Variant>,
}

pub struct IdentityCase {
    pub id: &'static str,
    pub title: &'static str,
    pub grid: fn(&GridLimits) -> Vec<Point>,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "VARIANT-PASS")]
    VariantPass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::VariantPass => "VARIANT-PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub point: String,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub name: String,
    pub formula: String,
    pub verdict: Verdict,
    pub points_checked: usize,
    pub points_undefined: usize,
    pub points_failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant_formula: Option<String>,
    /// Variants tried and whether each held everywhere.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variants_tried: Vec<(String, bool)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub title: String,
    pub verdict: Verdict,
    /// Verdict is PASS, or VARIANT-PASS with every variant listed in the errata manifest.
    pub expected: bool,
    pub grid_points: usize,
    pub claims: Vec<ClaimReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub limits: GridLimits,
    pub perturbed: bool,
    pub cases: Vec<VerificationReport>,
    pub unexpected: Vec<String>,
}

impl SuiteReport {
    pub fn all_expected(&self) -> bool {
        self.unexpected.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<5} {:<13} {:>6} {:>9}  title", "id", "verdict", "points", "expected");
        for c in &self.cases {
            let _ = writeln!(
                out,
                "{:<5} {:<13} {:>6} {:>9}  {}",
                c.id,
                c.verdict.to_string(),
                c.grid_points,
                if c.expected { "yes" } else { "NO" },
                c.title
            );
            for cl in &c.claims {
                let mut line = format!("      - {:<40} {}", cl.name, cl.verdict);
                if let Some(v) = &cl.variant {
                    let _ = write!(line, " via {v}");
                }
                if cl.points_undefined > 0 {
                    let _ = write!(line, " ({} undefined points skipped)", cl.points_undefined);
                }
                let _ = writeln!(out, "{line}");
            }
        }
        let _ = writeln!(
            out,
            "{} cases, {} unexpected",
            self.cases.len(),
            self.unexpected.len()
        );
        out
    }
}

/// Added to the left-hand side by the metamorphic self-test.
pub fn perturbation() -> RatFunc {
    RatFunc::q().checked_div(&(&integer(1) + &RatFunc::q())).expect("1+q ≠ 0")
}

const MAX_COUNTEREXAMPLES: usize = 3;
const MAX_RESIDUAL_CHARS: usize = 400;

fn residual_string(lhs: &RatFunc, rhs: &RatFunc) -> String {
    let mut s = (lhs - rhs).to_string();
    if s.len() > MAX_RESIDUAL_CHARS {
        let cut = (0..=MAX_RESIDUAL_CHARS).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        s.truncate(cut);
        s.push('…');
    }
    s
}

struct Outcome {
    checked: usize,
    undefined: usize,
    failed: usize,
    counterexamples: Vec<Counterexample>,
}

fn check(build: Builder, points: &[Point], perturb: bool) -> Result<Outcome> {
    let mut o = Outcome { checked: 0, undefined: 0, failed: 0, counterexamples: Vec::new() };
    let bump = perturbation();
    for p in points {
        match build(p)? {
            None => o.undefined += 1,
            Some((lhs, rhs)) => {
                o.checked += 1;
                let lhs = if perturb { &lhs + &bump } else { lhs };
                if lhs != rhs {
                    o.failed += 1;
                    if o.counterexamples.len() < MAX_COUNTEREXAMPLES {
                        o.counterexamples.push(Counterexample { point: p.to_string(), residual: residual_string(&lhs, &rhs) });
                    }
                }
            }
        }
    }
    Ok(o)
}

fn run_claim(claim: &Claim, points: &[Point], perturb: bool) -> Result<ClaimReport> {
    let lit = check(claim.build, points, perturb)?;
    let mut report = ClaimReport {
        name: claim.name.into(),
        formula: claim.formula.into(),
        verdict: Verdict::Pass,
        points_checked: lit.checked,
        points_undefined: lit.undefined,
        points_failed: lit.failed,
        variant: None,
        variant_formula: None,
        variants_tried: Vec::new(),
        counterexamples: lit.counterexamples,
    };
    if lit.failed == 0 {
        return Ok(report);
    }
    report.verdict = Verdict::Fail;
    for v in &claim.variants {
        let out = check(v.build, points, perturb)?;
        let holds = out.failed == 0 && out.checked > 0;
        report.variants_tried.push((v.name.into(), holds));
        if holds && report.variant.is_none() {
            report.verdict = Verdict::VariantPass;
            report.variant = Some(v.name.into());
            report.variant_formula = Some(v.formula.into());
        }
    }
    Ok(report)
}

fn expected_for(case_id: &str, claims: &[ClaimReport]) -> bool {
    let manifest = errata_manifest();
    claims.iter().all(|c| match c.verdict {
        Verdict::Pass => true,
        Verdict::Fail => false,
        Verdict::VariantPass => manifest.iter().any(|e| {
            e.case == case_id && e.claim == c.name && Some(e.variant) == c.variant.as_deref()
        }),
    })
}

/// Assembles a case report from claim reports.
pub fn assemble(id: &str, title: &str, grid_points: usize, claims: Vec<ClaimReport>) -> VerificationReport {
    let verdict = claims.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Pass);
    let expected = expected_for(id, &claims);
    VerificationReport { id: id.into(), title: title.into(), verdict, expected, grid_points, claims }
}

pub fn run_identity(case: &IdentityCase, limits: &GridLimits, perturb: bool) -> Result<VerificationReport> {
    let points = (case.grid)(limits);
    let mut claims = Vec::new();
    for claim in &case.claims {
        claims.push(run_claim(claim, &points, perturb)?);
    }
    Ok(assemble(case.id, case.title, points.len(), claims))
}

/// Ids of every case, in report order.
pub fn case_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = catalog().iter().map(|c| c.id).collect();
    ids.push(crate::complex_oracle::SERIES_CASE_ID);
    ids.sort_by_key(|id| id[1..].parse::<u32>().unwrap_or(u32::MAX));
    ids
}

pub fn case_titles() -> Vec<(&'static str, &'static str)> {
    let mut out: Vec<(&'static str, &'static str)> = catalog().iter().map(|c| (c.id, c.title)).collect();
    out.push((crate::complex_oracle::SERIES_CASE_ID, crate::complex_oracle::SERIES_CASE_TITLE));
    out.sort_by_key(|(id, _)| id[1..].parse::<u32>().unwrap_or(u32::MAX));
    out
}

pub fn run_case(id: &str, limits: &GridLimits, perturb: bool) -> Result<VerificationReport> {
    if id == crate::complex_oracle::SERIES_CASE_ID {
        return crate::complex_oracle::series_case_report(perturb);
    }
    let cases = catalog();
    let case = cases.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.into()))?;
    run_identity(case, limits, perturb)
}

/// Runs the cases whose ids are listed, or all of them for `None`.
pub fn run_suite(filter: Option<&[String]>, limits: &GridLimits, perturb: bool) -> Result<SuiteReport> {
    let ids: Vec<String> = match filter {
        None => case_ids().into_iter().map(String::from).collect(),
        Some(list) => {
            let known = case_ids();
            for id in list {
                if !known.contains(&id.as_str()) {
                    return Err(Error::UnknownCase(id.clone()));
                }
            }
            known.into_iter().filter(|k| list.iter().any(|l| l == k)).map(String::from).collect()
        }
    };
    let mut cases = Vec::new();
    for id in &ids {
        cases.push(run_case(id, limits, perturb)?);
    }
    let unexpected = cases.iter().filter(|c| !c.expected).map(|c| c.id.clone()).collect();
    Ok(SuiteReport { limits: *limits, perturbed: perturb, cases, unexpected })
}
