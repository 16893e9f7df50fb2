//! Config files mirror the command-line flags.
//!
//! Keys at the top level apply to every verb that has a flag of that name; keys under a
//! `[verb]` table (or `[oracle.padic]`, `[oracle.complex]`) must all be flags of that verb.
//! The resulting flags are spliced in right after the verb, so anything typed on the
//! command line comes later and wins.

use std::path::Path;

use clap::Command;
use toml::{Table, Value};

fn flag_names(cmd: &Command) -> Vec<String> {
    cmd.get_arguments().filter_map(|a| a.get_long().map(str::to_owned)).collect()
}

fn render(key: &str, value: &Value) -> Result<Vec<String>, String> {
    let flag = format!("--{}", key.replace('_', "-"));
    let scalar = |v: &Value| -> Result<String, String> {
        match v {
            Value::String(s) => Ok(s.clone()),
            Value::Integer(i) => Ok(i.to_string()),
            Value::Float(f) => Ok(f.to_string()),
            other => Err(format!("config key `{key}`: unsupported value {other}")),
        }
    };
    match value {
        Value::Boolean(true) => Ok(vec![flag]),
        Value::Boolean(false) => Ok(vec![]),
        Value::Array(items) => {
            let parts: Result<Vec<String>, String> = items.iter().map(scalar).collect();
            Ok(vec![flag, parts?.join(",")])
        }
        v => Ok(vec![flag, scalar(v)?]),
    }
}

fn section<'a>(table: &'a Table, path: &[String]) -> Option<&'a Table> {
    let mut cur = table;
    for p in path {
        cur = cur.get(p)?.as_table()?;
    }
    Some(cur)
}

/// Flags contributed by the config for the verb at `path` (e.g. `["oracle", "padic"]`).
pub fn flags_for(table: &Table, root: &Command, path: &[String]) -> Result<Vec<String>, String> {
    let mut cmd = root;
    for p in path {
        cmd = cmd.find_subcommand(p).ok_or_else(|| format!("unknown verb `{p}`"))?;
    }
    let known = flag_names(cmd);
    let normalise = |k: &str| k.replace('_', "-");
    let mut out = Vec::new();
    for (k, v) in table {
        if v.is_table() || k == "config" {
            continue;
        }
        if known.contains(&normalise(k)) {
            out.extend(render(k, v)?);
        }
    }
    if let Some(sec) = section(table, path) {
        for (k, v) in sec {
            if v.is_table() {
                continue;
            }
            if !known.contains(&normalise(k)) {
                return Err(format!("config: `{}` has no flag `--{}`", path.join(" "), normalise(k)));
            }
            out.extend(render(k, v)?);
        }
    }
    Ok(out)
}

pub fn load(path: &Path) -> Result<Table, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    text.parse::<Table>().map_err(|e| format!("{}: {e}", path.display()))
}

/// Finds `--config PATH` / `--config=PATH` and the verb path in raw arguments.
/// Returns the config path and the index just past the verb path.
pub fn locate(args: &[String], root: &Command) -> (Option<String>, Option<(Vec<String>, usize)>) {
    let mut config = None;
    let mut path = Vec::new();
    let mut end = None;
    let mut cmd = root;
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if a == "--config" {
            config = args.get(i + 1).cloned();
            i += 2;
            continue;
        }
        if let Some(v) = a.strip_prefix("--config=") {
            config = Some(v.to_owned());
            i += 1;
            continue;
        }
        if a.starts_with('-') {
            if end.is_some() {
                break;
            }
            i += 1;
            continue;
        }
        match cmd.find_subcommand(a) {
            Some(sub) if end.is_none() || end == Some(i) => {
                path.push(a.clone());
                cmd = sub;
                end = Some(i + 1);
            }
            _ => break,
        }
        i += 1;
    }
    // keep scanning for a trailing --config
    while i < args.len() {
        if args[i] == "--config" {
            config = args.get(i + 1).cloned();
            i += 1;
        } else if let Some(v) = args[i].strip_prefix("--config=") {
            config = Some(v.to_owned());
        }
        i += 1;
    }
    (config, end.map(|e| (path, e)))
}
