//! CSV and table-file plumbing shared by the commands.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{domain, Result};

/// 17 significant digits; `inf`, `-inf` and `NaN` pass through.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Renders rows of optional numbers as CSV; `None` becomes an empty field.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<Option<f64>>>) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        let fields: Vec<String> = row.into_iter().map(|v| v.map(num).unwrap_or_default()).collect();
        let _ = writeln!(s, "{}", fields.join(","));
    }
    s
}

/// Reads per-theta boundary samples.
///
/// One value per line, or `theta,value` pairs (the last field is used).
/// Blank lines and lines starting with `#` are skipped, as is a
/// non-numeric first line (a header).
pub fn read_table(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?;
    parse_table(&text).map_err(|e| domain(format!("{}: {e}", path.display())))
}

pub fn parse_table(text: &str) -> std::result::Result<Vec<f64>, String> {
    let mut out = Vec::new();
    let mut first = true;
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let field = line.rsplit(',').next().unwrap_or(line).trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => out.push(v),
            Ok(_) => return Err(format!("line {}: non-finite value", k + 1)),
            Err(_) if first => {}
            Err(_) => return Err(format!("line {}: cannot parse {field:?}", k + 1)),
        }
        first = false;
    }
    if out.is_empty() {
        return Err("no samples".into());
    }
    Ok(out)
}

/// Parses a flat `key = value` config file into `--key value` arguments.
///
/// Boolean flags are written `key = true`; `false` drops the flag.
pub fn config_args(text: &str) -> std::result::Result<Vec<String>, String> {
    let mut args = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", k + 1))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            return Err(format!("line {}: empty key", k + 1));
        }
        match value {
            "true" => args.push(format!("--{key}")),
            "false" => {}
            _ => args.push(format!("--{key}={value}")),
        }
    }
    Ok(args)
}
