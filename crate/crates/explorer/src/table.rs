//! Candidate tables: serialisable rows and the fixed-width text rendering.

use std::fmt::Write as _;

use energy_core::CompletionCandidate;
use serde::{Deserialize, Serialize};

/// Four-decimal rendering used in every table.
pub fn fmt4(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_owned()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowDisplay {
    pub x: String,
    pub y: String,
    pub energy: String,
    pub third_moment_over_6: String,
    /// `+` when the third moment test passes, `-` otherwise.
    pub mark: String,
}

/// A completion candidate as served by the API. `root` is 0 for the larger
/// `x` of its `p`, 1 for the smaller.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateRow {
    pub p: usize,
    pub q: usize,
    pub root: usize,
    pub x: f64,
    pub y: f64,
    pub energy: f64,
    pub third_moment_over_6: f64,
    pub passes_moment_test: bool,
    pub sign_split: bool,
    pub coincident: bool,
    pub x_in_known: bool,
    pub y_in_known: bool,
    pub display: RowDisplay,
}

pub fn rows(cands: &[CompletionCandidate]) -> Vec<CandidateRow> {
    let mut out = Vec::with_capacity(cands.len());
    let mut last_p = 0;
    let mut root = 0;
    for c in cands {
        root = if c.p == last_p { root + 1 } else { 0 };
        last_p = c.p;
        out.push(CandidateRow {
            p: c.p,
            q: c.q,
            root,
            x: c.x,
            y: c.y,
            energy: c.energy,
            third_moment_over_6: c.third_moment_over_6,
            passes_moment_test: c.passes_moment_test,
            sign_split: c.sign_split,
            coincident: c.coincident,
            x_in_known: c.x_in_known,
            y_in_known: c.y_in_known,
            display: RowDisplay {
                x: fmt4(c.x),
                y: fmt4(c.y),
                energy: fmt4(c.energy),
                third_moment_over_6: fmt4(c.third_moment_over_6),
                mark: if c.passes_moment_test { "+" } else { "-" }.to_owned(),
            },
        });
    }
    out
}

/// Text table with columns `p q x y E third/6 test`. A trailing `!` marks
/// rows whose `x` and `y` share a sign, `=` a coincident root.
pub fn render(rows: &[CandidateRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3} {:>3} {:>10} {:>10} {:>10} {:>12}  test",
        "p", "q", "x", "y", "E", "third/6"
    );
    for r in rows {
        let mut flags = String::new();
        if !r.sign_split {
            flags.push('!');
        }
        if r.coincident {
            flags.push('=');
        }
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>10} {:>10} {:>10} {:>12}  {:<4}{}",
            r.p,
            r.q,
            r.display.x,
            r.display.y,
            r.display.energy,
            r.display.third_moment_over_6,
            r.display.mark,
            flags
        );
    }
    s
}
