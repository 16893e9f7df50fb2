mod config;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qbernoulli::algebra::coeff::parse_rational;
use qbernoulli::beta::{evaluate_with, parse_arg, FamilyDescriptor, FamilyKind, ZeroMode};
use qbernoulli::complex_oracle::{closed_form_at, resolved_checks, series_case_report, SERIES_CASE_ID};
use qbernoulli::identities::{case_titles, errata_manifest, run_suite, GridLimits, SuiteReport};
use qbernoulli::padic::{validate_family, zero_mode_check, OracleConfig};
use qbernoulli::{Coeff, RatFunc, Var};
use serde_json::json;

/// Exact q-Bernoulli families, identity checks and numerical oracles.
#[derive(Parser)]
#[command(name = "qbern", version)]
struct Cli {
    /// TOML file of flag values; flags on the command line take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed form of one family member.
    Compute(ComputeArgs),
    /// CSV of a family over a range of n.
    Table(TableArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Numerical cross-checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Identity cases, families and known misprints.
    List(ListArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// p-adic Riemann sums against the exact value.
    Padic(PadicArgs),
    /// Convergent complex series for |q| < 1.
    Complex(ComplexArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// carlitz, twisted, order_r, hr, barnes, chi, chi_order_r, chi_hr
    #[arg(long)]
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<i64>,
    #[arg(long)]
    r: Option<u32>,
    /// Character modulus.
    #[arg(long)]
    f: Option<u64>,
    /// Character index among those of modulus f.
    #[arg(long)]
    chi: Option<usize>,
    /// Barnes weights, comma separated.
    #[arg(long, value_delimiter = ',', action = ArgAction::Set, allow_hyphen_values = true)]
    w: Option<Vec<i64>>,
    /// Barnes shifts, comma separated.
    #[arg(long, value_delimiter = ',', action = ArgAction::Set, allow_hyphen_values = true)]
    delta: Option<Vec<i64>>,
}

impl FamilyArgs {
    fn descriptor(&self, n: u32, arg: Option<String>) -> FamilyDescriptor {
        FamilyDescriptor {
            family: self.family.clone(),
            n,
            h: self.h,
            r: self.r,
            f: self.f,
            chi: self.chi,
            w: self.w.clone(),
            delta: self.delta.clone(),
            arg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Log,
    Drop,
}

impl From<Mode> for ZeroMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Log => ZeroMode::Log,
            Mode::Drop => ZeroMode::Drop,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct ComputeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: u32,
    /// `symbolic` (keeps X = q^x) or an integer x.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    arg: String,
    #[arg(long, value_enum, default_value = "log")]
    zero_mode: Mode,
    /// Substitute a rational for a variable, e.g. `q=1/2`. Repeatable.
    #[arg(long, value_name = "VAR=VALUE")]
    at: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write the JSON form here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Inclusive range `a..b` (or a single n), at most 12.
    #[arg(long, default_value = "0..6")]
    n: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    arg: String,
    #[arg(long, value_enum, default_value = "log")]
    zero_mode: Mode,
    /// Complex base for a numeric column, e.g. `0.5+0.2i`.
    #[arg(long, allow_hyphen_values = true)]
    eval_q: Option<String>,
    /// Real x with X = q^x for the numeric column.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    eval_x: f64,
    /// Write the CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct VerifyArgs {
    /// Case ids, comma separated; all when absent.
    #[arg(long, value_delimiter = ',', action = ArgAction::Set)]
    identity: Option<Vec<String>>,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    max_r: Option<u32>,
    #[arg(long)]
    max_f: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    h_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    h_max: Option<i64>,
    /// Add q/(1+q) to every left side; every case should then fail.
    #[arg(long)]
    perturb: bool,
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct PadicArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    p: u64,
    /// `1+p`, `1+kp`, or an integer congruent to 1 mod p.
    #[arg(long, default_value = "1+p")]
    q0: String,
    /// Inclusive level range `a..b`.
    #[arg(long = "N", default_value = "2..6")]
    levels: String,
    #[arg(long, default_value_t = 12)]
    digits: u32,
    /// Integer argument; X = q0^x0.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x0: String,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Also report how fast p^N/[p^N]_q approaches (q-1)/log q.
    #[arg(long)]
    zero_mode: bool,
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct ComplexArgs {
    #[arg(long, default_value = SERIES_CASE_ID)]
    identity: String,
    /// Base with |q| < 1; with --x, checks only this point.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// Truncation; only `auto` (from the tail bound) is supported.
    #[arg(long, default_value = "auto")]
    terms: String,
    #[arg(long)]
    perturb: bool,
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_override_self = true)]
struct ListArgs {
    #[arg(long)]
    identities: bool,
    #[arg(long)]
    families: bool,
    #[arg(long)]
    errata: bool,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

/// Failure of a run: `Verify` maps to exit 1, `Usage` to exit 2.
enum Failure {
    Verify(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn parse_range(s: &str, what: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("{what}: expected `a..b` or an integer, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok((a, b))
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    s.trim().parse::<Complex64>().map_err(|_| Failure::Usage(format!("not a complex number: `{s}`")))
}

fn substitute(mut value: RatFunc, assignments: &[String]) -> Result<RatFunc, Failure> {
    for a in assignments {
        let (name, v) = a.split_once('=').ok_or_else(|| usage(format!("--at expects VAR=VALUE, got `{a}`")))?;
        let var = Var::parse(name.trim()).ok_or_else(|| usage(format!("unknown variable `{name}`")))?;
        let c = parse_rational(v).ok_or_else(|| usage(format!("not a rational: `{v}`")))?;
        value = value.substitute_constant(var, &Coeff::from(c)).map_err(usage)?;
    }
    Ok(value)
}

fn compute(a: &ComputeArgs) -> Outcome {
    let fam = a.family.descriptor(a.n, Some(a.arg.clone())).to_family().map_err(usage)?;
    let arg = parse_arg(&a.arg).map_err(usage)?;
    let value = evaluate_with(&fam, &arg, a.zero_mode.into()).map_err(usage)?;
    let value = substitute(value, &a.at)?;
    match a.format {
        Format::Json => println!("{}", value.to_json()),
        Format::Text => println!("{value}"),
    }
    if let Some(p) = &a.json {
        write_file(p, &value.to_json())?;
    }
    Ok(())
}

const TABLE_MAX_N: u32 = 12;

fn table(a: &TableArgs) -> Outcome {
    let (lo, hi) = parse_range(&a.n, "--n")?;
    if hi > TABLE_MAX_N {
        return Err(usage(format!("--n: at most {TABLE_MAX_N}")));
    }
    let arg = parse_arg(&a.arg).map_err(usage)?;
    let q = a.eval_q.as_deref().map(parse_complex).transpose()?;
    let mut w = csv::Writer::from_writer(vec![]);
    let mut header = vec!["n", "value", "json"];
    if q.is_some() {
        header.extend(["re", "im"]);
    }
    w.write_record(&header).map_err(usage)?;
    for n in lo..=hi {
        let fam = a.family.descriptor(n, Some(a.arg.clone())).to_family().map_err(usage)?;
        let value = evaluate_with(&fam, &arg, a.zero_mode.into()).map_err(usage)?;
        let mut row = vec![n.to_string(), value.to_string(), value.to_json()];
        if let Some(q) = q {
            let z = closed_form_at(&value, q, a.eval_x).map_err(usage)?;
            row.push(z.re.to_string());
            row.push(z.im.to_string());
        }
        w.write_record(&row).map_err(usage)?;
    }
    let bytes = w.into_inner().map_err(usage)?;
    let text = String::from_utf8(bytes).map_err(usage)?;
    match &a.output {
        Some(p) => write_file(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(a: &VerifyArgs) -> Outcome {
    let d = GridLimits::default();
    let limits = GridLimits {
        max_n: a.max_n.unwrap_or(d.max_n),
        max_r: a.max_r.unwrap_or(d.max_r),
        max_f: a.max_f.unwrap_or(d.max_f),
        h_min: a.h_min.unwrap_or(d.h_min),
        h_max: a.h_max.unwrap_or(d.h_max),
    };
    let report: SuiteReport = run_suite(a.identity.as_deref(), &limits, a.perturb).map_err(usage)?;
    print!("{}", report.to_table());
    if let Some(p) = &a.json {
        write_file(p, &report.to_json())?;
    }
    if report.all_expected() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("unexpected verdicts: {}", report.unexpected.join(", "))))
    }
}

fn parse_q0(s: &str, p: u64) -> Result<u64, Failure> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || usage(format!("--q0: expected `1+p`, `1+kp` or an integer = 1 mod p, got `{s}`"));
    if let Some(rest) = t.strip_prefix("1+") {
        if rest == "p" {
            return Ok(1);
        }
        if let Some(k) = rest.strip_suffix('p') {
            let k = k.trim_end_matches('*');
            return k.parse::<u64>().map_err(|_| bad());
        }
    }
    let q: u64 = t.parse().map_err(|_| bad())?;
    if q < 1 || !(q - 1).is_multiple_of(p) {
        return Err(bad());
    }
    Ok((q - 1) / p)
}

fn padic(a: &PadicArgs) -> Outcome {
    let fam = a.family.descriptor(a.n, None).to_family().map_err(usage)?;
    let (level_min, level_max) = parse_range(&a.levels, "--N")?;
    let x0: i64 = a.x0.trim().parse().map_err(|_| usage(format!("--x0 must be an integer, got `{}`", a.x0)))?;
    let cfg = OracleConfig {
        p: a.p,
        u0: parse_q0(&a.q0, a.p)?,
        x0,
        level_min,
        level_max,
        digits: a.digits,
        budget: a.budget,
    };
    let report = validate_family(&fam, &cfg).map_err(usage)?;
    let mut out = String::new();
    let _ = writeln!(out, "{} at p={}, q0={}, x0={}", report.family, report.p, report.q0, report.x0);
    let _ = writeln!(out, "exact = {}", report.exact);
    let _ = writeln!(out, "{:>3} {:>12} {:>8}", "N", "terms", "digits");
    for row in &report.levels {
        let digits = if row.resolved { row.distance_digits.to_string() } else { format!(">={}", row.distance_digits) };
        let _ = writeln!(out, "{:>3} {:>12} {:>8}", row.level, row.terms, digits);
    }
    let _ = writeln!(out, "nonincreasing distance: {}", if report.nonincreasing { "yes" } else { "NO" });
    let zero = if a.zero_mode { Some(zero_mode_check(&cfg).map_err(usage)?) } else { None };
    if let Some(rows) = &zero {
        let _ = writeln!(out, "zero-mode digits by N:");
        for r in rows {
            let _ = writeln!(out, "{:>3} {:>8}", r.level, r.distance_digits);
        }
    }
    print!("{out}");
    if let Some(p) = &a.json {
        let v = json!({ "convergence": report, "zero_mode": zero });
        write_file(p, &serde_json::to_string_pretty(&v).map_err(usage)?)?;
    }
    let need = i64::from(level_max) - 2;
    let final_ok = report.final_digits().is_some_and(|d| d >= need);
    if report.nonincreasing && final_ok {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "convergence check failed (nonincreasing: {}, final digits >= {need}: {final_ok})",
            report.nonincreasing
        )))
    }
}

fn complex(a: &ComplexArgs) -> Outcome {
    if a.identity != SERIES_CASE_ID {
        return Err(usage(format!("the complex oracle covers only {SERIES_CASE_ID}")));
    }
    if a.terms != "auto" {
        return Err(usage("--terms: only `auto` is supported"));
    }
    if a.q.is_none() && a.x.is_none() {
        let report = series_case_report(a.perturb).map_err(usage)?;
        println!("{} {}", report.id, report.verdict);
        for c in &report.claims {
            let via = c.variant.as_deref().map(|v| format!(" via {v}")).unwrap_or_default();
            println!("  - {:<32} {}{via} ({} points)", c.name, c.verdict, c.points_checked);
        }
        if let Some(p) = &a.json {
            write_file(p, &serde_json::to_string_pretty(&report).map_err(usage)?)?;
        }
        return if report.expected { Ok(()) } else { Err(Failure::Verify(format!("{} verdict unexpected", report.id))) };
    }
    if a.perturb {
        return Err(usage("--perturb applies to the full case, not a single point"));
    }
    let q = parse_complex(a.q.as_deref().unwrap_or("0.3"))?;
    let x = a.x.unwrap_or(0.0);
    let checks = resolved_checks(&[(q, x)]).map_err(usage)?;
    let mut failed = 0;
    for (name, c) in &checks {
        if !c.agrees {
            failed += 1;
        }
        println!(
            "{:<22} {:<28} diff {:.2e} bound {:.2e} {}",
            name,
            c.spec,
            c.difference,
            c.bound,
            if c.agrees { "ok" } else { "FAIL" }
        );
    }
    println!("{} checks, {failed} failed", checks.len());
    if let Some(p) = &a.json {
        let v: Vec<_> = checks.iter().map(|(n, c)| json!({ "check": n, "result": c })).collect();
        write_file(p, &serde_json::to_string_pretty(&v).map_err(usage)?)?;
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verify(format!("{failed} checks outside their bounds")))
    }
}

fn list(a: &ListArgs) -> Outcome {
    let all = !(a.identities || a.families || a.errata);
    let mut v = serde_json::Map::new();
    if all || a.identities {
        let ids: Vec<_> = case_titles().into_iter().map(|(id, t)| json!({ "id": id, "title": t })).collect();
        v.insert("identities".into(), ids.into());
    }
    if all || a.families {
        let fams: Vec<_> =
            FamilyKind::ALL.iter().map(|k| json!({ "family": k.name(), "integrand": k.integrand() })).collect();
        v.insert("families".into(), fams.into());
    }
    if all || a.errata {
        v.insert("errata".into(), serde_json::to_value(errata_manifest()).map_err(usage)?);
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&v).map_err(usage)?);
        return Ok(());
    }
    if let Some(ids) = v.get("identities").and_then(|x| x.as_array()) {
        println!("identities:");
        for i in ids {
            println!("  {:<4} {}", i["id"].as_str().unwrap_or(""), i["title"].as_str().unwrap_or(""));
        }
    }
    if let Some(fams) = v.get("families").and_then(|x| x.as_array()) {
        println!("families:");
        for f in fams {
            println!("  {:<12} {}", f["family"].as_str().unwrap_or(""), f["integrand"].as_str().unwrap_or(""));
        }
    }
    if all || a.errata {
        println!("errata:");
        for e in errata_manifest() {
            let via = if e.variant.is_empty() { String::new() } else { format!(" -> {}", e.variant) };
            println!("  {} {}{via}: {}", e.case, e.claim, e.note.split_whitespace().collect::<Vec<_>>().join(" "));
        }
    }
    Ok(())
}

/// Splices flags from `--config` in after the verb so explicit flags still win.
fn expand_args(raw: Vec<String>) -> Result<Vec<String>, String> {
    let root = Cli::command();
    let (cfg, verb) = config::locate(&raw, &root);
    let (Some(cfg), Some((path, end))) = (cfg, verb) else {
        return Ok(raw);
    };
    let table = config::load(Path::new(&cfg))?;
    let extra = config::flags_for(&table, &root, &path)?;
    let mut out = raw[..end].to_vec();
    out.extend(extra);
    out.extend_from_slice(&raw[end..]);
    Ok(out)
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (`qbern list | head`) instead of panicking in println!
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args = match expand_args(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(OracleCommand::Padic(a)) => padic(a),
        Command::Oracle(OracleCommand::Complex(a)) => complex(a),
        Command::List(a) => list(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
