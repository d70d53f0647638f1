//! Generator-matrix text format.
//!
//! ```text
//! # comment lines start with '#'
//! q n k
//! k lines of n space-separated integers in [0, q)
//! ```

use std::sync::Arc;

use super::{CodeError, LinearCode, RankPolicy};
use crate::gf::FieldSpec;

fn parse_err(line: usize, message: impl Into<String>) -> CodeError {
    CodeError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u64>, CodeError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| {
                parse_err(
                    line,
                    format!("expected a non-negative integer, found `{tok}`"),
                )
            })
        })
        .collect()
}

/// Parses a generator-matrix file. Dependent rows are rejected unless
/// `policy` is [`RankPolicy::AutoReduce`].
pub fn parse_generator(text: &str, policy: RankPolicy) -> Result<LinearCode, CodeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `q n k` header"))?;
    let header = parse_numbers(hline, header)?;
    let [q, n, k] = header[..] else {
        return Err(parse_err(
            hline,
            format!("header needs 3 integers `q n k`, found {}", header.len()),
        ));
    };
    if n == 0 || k == 0 {
        return Err(CodeError::EmptyMatrix);
    }
    let field = Arc::new(FieldSpec::new(q)?);

    let mut rows = Vec::with_capacity(k as usize);
    for (lineno, line) in lines.by_ref() {
        let row = parse_numbers(lineno, line)?;
        if row.len() as u64 != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
        if rows.len() as u64 == k {
            break;
        }
    }
    if (rows.len() as u64) < k {
        return Err(parse_err(
            hline,
            format!("header declares {k} rows, found {}", rows.len()),
        ));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(lineno, format!("unexpected data after {k} rows")));
    }
    LinearCode::from_rows(field, rows, policy)
}

/// Renders a code in the generator-matrix format, without comments.
pub fn write_generator(code: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", code.q(), code.len(), code.dimension());
    for row in code.rows() {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
