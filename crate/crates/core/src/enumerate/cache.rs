//! Census cache files.
//!
//! ```text
//! # order=3 p=9 pnl=1
//! 000
//! 000 001
//! ...
//! ```
//!
//! One canonical representative per line, its words separated by single
//! spaces. Everything is re-verified when a cache is read back.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::time::Duration;

use crate::canon::canonical_form;
use crate::enumerate::census::CensusReport;
use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};
use crate::zeta::{is_linear, is_powerful};

pub fn render_cache(report: &CensusReport) -> Result<String> {
    let classes = report
        .classes
        .as_ref()
        .ok_or_else(|| Error::Cache("report carries no representatives".into()))?;
    let mut out = format!(
        "# order={} p={} pnl={}\n",
        report.n, report.p, report.p_nonlinear
    );
    for set in classes {
        out.push_str(&set.to_lines().join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn header_field(header: &str, key: &str) -> Result<u64> {
    header
        .split_whitespace()
        .find_map(|f| f.strip_prefix(key)?.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Cache(format!("header lacks {key}=")))
}

/// Parses and verifies a cache for order `n`.
pub fn parse_cache(text: &str, n: usize) -> Result<CensusReport> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .and_then(|h| h.strip_prefix('#'))
        .ok_or_else(|| Error::Cache("missing header line".into()))?;
    let order = header_field(header, "order")?;
    let p = header_field(header, "p")?;
    let pnl = header_field(header, "pnl")?;
    if order != n as u64 {
        return Err(Error::Cache(format!("cache is for order {order}, not {n}")));
    }

    let mut classes = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line_no = i + 2;
        let words = line
            .split_whitespace()
            .map(|t| match Word::parse_text(t) {
                Some((w, len)) if len == n => Ok(w),
                _ => Err(Error::Cache(format!("line {line_no}: bad word {t:?}"))),
            })
            .collect::<Result<Vec<Word>>>()?;
        let set = BinarySet::new(n, words)?;
        if !is_powerful(&set)? {
            return Err(Error::Cache(format!("line {line_no}: not powerful")));
        }
        if canonical_form(&set)?.words != set.words() {
            return Err(Error::Cache(format!(
                "line {line_no}: not in canonical form"
            )));
        }
        if !seen.insert(set.clone()) {
            return Err(Error::Cache(format!("line {line_no}: repeated class")));
        }
        classes.push(set);
    }
    classes.sort_unstable();
    let nonlinear = classes.iter().filter(|s| !is_linear(s)).count() as u64;
    if classes.len() as u64 != p || nonlinear != pnl {
        return Err(Error::Cache(format!(
            "header says p={p} pnl={pnl}, body has p={} pnl={nonlinear}",
            classes.len()
        )));
    }
    Ok(CensusReport {
        n,
        p,
        p_nonlinear: pnl,
        labelled: 0,
        antichains: 0,
        classes: Some(classes),
        wall_time: Duration::ZERO,
    })
}

pub fn read_cache(path: &Path, n: usize) -> Result<CensusReport> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    parse_cache(&text, n)
}

pub fn write_cache(path: &Path, report: &CensusReport) -> Result<()> {
    fs::write(path, render_cache(report)?)
        .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}
