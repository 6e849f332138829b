//! The `betti v1` text format.
//!
//! ```text
//! betti v1
//! mode canonical
//! entry 0 0 1
//! entry 1 1 3/2
//! ```
//!
//! Blank lines, `#` comments and `key: value` lines are skipped, so the
//! output of `resolve` (a table followed by metadata) reads back as a
//! table.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::BigRational;

use crate::betti::{BettiTable, TailMode};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn parse_table<S: Scalar>(text: &str) -> Result<BettiTable<S>> {
    let mut header = false;
    let mut table: Option<BettiTable<S>> = None;
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        if words[0].ends_with(':') {
            continue;
        }
        match words.as_slice() {
            ["betti", "v1"] if !header => header = true,
            _ if !header => return Err(err(format!("expected `betti v1`, found `{line}`"))),
            ["mode", m] if table.is_none() => {
                let mode = match *m {
                    "canonical" => TailMode::Canonical,
                    "explicit" => TailMode::Explicit,
                    _ => return Err(err(format!("unknown mode `{m}`"))),
                };
                table = Some(BettiTable::new(mode));
            }
            ["entry", i, j, a] => {
                let t = table
                    .as_mut()
                    .ok_or_else(|| err("`entry` before `mode`".into()))?;
                let i: usize = i.parse().map_err(|_| err(format!("bad row `{i}`")))?;
                let j: i64 = j.parse().map_err(|_| err(format!("bad degree `{j}`")))?;
                let q: BigRational = a.parse().map_err(|_| err(format!("bad value `{a}`")))?;
                let value = S::from_rational(&q)
                    .ok_or_else(|| err(format!("value `{a}` does not fit the scalar type")))?;
                if !seen.insert((i, j)) {
                    return Err(err(format!("duplicate entry ({i},{j})")));
                }
                t.set(i, j, value).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("unrecognized line `{line}`"))),
        }
    }
    if !header {
        return Err(Error::Parse {
            line: 0,
            msg: "missing `betti v1` header".into(),
        });
    }
    table.ok_or(Error::Parse {
        line: 0,
        msg: "missing `mode` line".into(),
    })
}

/// Entries sorted by `(i, j)`, values in lowest terms.
pub fn print_table<S: Scalar>(t: &BettiTable<S>) -> String {
    let mode = match t.mode() {
        TailMode::Canonical => "canonical",
        TailMode::Explicit => "explicit",
    };
    let mut out = format!("betti v1\nmode {mode}\n");
    for (i, j, x) in t.iter() {
        let _ = writeln!(out, "entry {i} {j} {}", x.to_rational());
    }
    out
}
