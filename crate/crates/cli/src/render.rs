//! Report formatting.
//!
//! Field order is fixed per format. CSV output starts with a header row and
//! quotes weight-set cells. JSON objects are built as `serde_json::Value`
//! maps, so keys come out sorted. Weight sets are listed in descending order
//! everywhere; an empty set renders as `-`.

use std::fmt::Write as _;

use serde_json::{json, Value};
use wbound_core::bounds::BoundVerdict;
use wbound_core::code::{write_generator, CodeParams, Residual, WeightSpectrum};
use wbound_core::exclusion::{Audit, ExclusionReport, WeightSet};
use wbound_core::properties::PropertyReport;
use wbound_core::reproduce::{CellComparison, CellVerdict, RowComparison, TableComparison};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Md,
    Csv,
    Json,
}

/// Sets longer than this are shown as descending `hi-lo` runs in table reports.
const COMPACT_ABOVE: usize = 10;

pub fn set_desc(set: &WeightSet) -> String {
    if set.is_empty() {
        return "-".into();
    }
    set.iter()
        .rev()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Descending, with runs of three or more written `hi-lo`.
pub fn set_runs(set: &WeightSet) -> String {
    if set.is_empty() {
        return "-".into();
    }
    let ws: Vec<u64> = set.iter().rev().copied().collect();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < ws.len() {
        let mut j = i;
        while j + 1 < ws.len() && ws[j + 1] + 1 == ws[j] {
            j += 1;
        }
        if j - i >= 2 {
            parts.push(format!("{}-{}", ws[i], ws[j]));
        } else {
            parts.extend(ws[i..=j].iter().map(u64::to_string));
        }
        i = j + 1;
    }
    parts.join(" ")
}

fn set_table(set: &WeightSet) -> String {
    if set.len() > COMPACT_ABOVE {
        set_runs(set)
    } else {
        set_desc(set)
    }
}

fn set_json(set: &WeightSet) -> Value {
    Value::Array(set.iter().rev().map(|&w| json!(w)).collect())
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn params_json(p: &CodeParams) -> Value {
    json!({ "n": p.n, "k": p.k, "d": p.d, "q": p.q })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn bounds(
    params: &CodeParams,
    w: Option<u64>,
    verdicts: &[BoundVerdict],
    fmt: Format,
) -> String {
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = write!(out, "{params}");
            if let Some(w) = w {
                let _ = write!(out, " w={w}");
            }
            out.push('\n');
            for v in verdicts {
                let _ = writeln!(out, "{v}");
            }
        }
        Format::Md => {
            out.push_str(
                "| bound | lhs | relation | rhs | holds | tight |\n|---|---|---|---|---|---|\n",
            );
            for v in verdicts {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    v.name, v.lhs, v.relation, v.rhs, v.holds, v.tight
                );
            }
        }
        Format::Csv => {
            out.push_str("name,lhs,relation,rhs,holds,tight\n");
            for v in verdicts {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    v.name, v.lhs, v.relation, v.rhs, v.holds, v.tight
                );
            }
        }
        Format::Json => {
            let list: Vec<Value> = verdicts
                .iter()
                .map(|v| {
                    json!({
                        "name": v.name, "lhs": v.lhs, "relation": v.relation.to_string(),
                        "rhs": v.rhs, "holds": v.holds, "tight": v.tight,
                    })
                })
                .collect();
            out = pretty(&json!({ "params": params_json(params), "w": w, "verdicts": list }));
        }
    }
    out
}

pub fn exclusion(report: &ExclusionReport, methods: &[&str], fmt: Format) -> String {
    let p = &report.params;
    let sets: Vec<(&str, &WeightSet)> = methods
        .iter()
        .map(|&m| (m, report.set(m).expect("known method")))
        .collect();
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let range = if report.clamped {
                format!("clamped to [1, {}]", p.n)
            } else {
                "raw".into()
            };
            let _ = writeln!(out, "{p}  {range}");
            for (m, s) in &sets {
                let _ = writeln!(out, "{m:<10} {}", set_desc(s));
            }
            for n in &report.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        Format::Md => {
            let _ = writeln!(
                out,
                "**{p}**\n\n| criterion | excluded weights |\n|---|---|"
            );
            for (m, s) in &sets {
                let _ = writeln!(out, "| {m} | {} |", set_desc(s));
            }
            if !report.notes.is_empty() {
                out.push('\n');
                for n in &report.notes {
                    let _ = writeln!(out, "- {n}");
                }
            }
        }
        Format::Csv => {
            let header: Vec<String> = methods.iter().map(|m| m.replace('-', "_")).collect();
            let _ = writeln!(out, "n,k,d,q,{}", header.join(","));
            let cells: Vec<String> = sets.iter().map(|(_, s)| quote(&set_desc(s))).collect();
            let _ = writeln!(out, "{},{},{},{},{}", p.n, p.k, p.d, p.q, cells.join(","));
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("params".into(), params_json(p));
            obj.insert("clamped".into(), json!(report.clamped));
            obj.insert("notes".into(), json!(report.notes));
            for (m, s) in &sets {
                obj.insert(m.replace('-', "_"), set_json(s));
            }
            out = pretty(&Value::Object(obj));
        }
    }
    out
}

pub fn spectrum(params: &CodeParams, spec: &WeightSpectrum, fmt: Format) -> String {
    let nz = spec.nonzero();
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let parts: Vec<String> = nz.iter().map(|(w, c)| format!("A_{w}={c}")).collect();
            let _ = writeln!(out, "{}", parts.join(" "));
        }
        Format::Md => {
            let _ = writeln!(out, "**{params}**\n\n| w | A_w |\n|---|---|");
            for (w, c) in &nz {
                let _ = writeln!(out, "| {w} | {c} |");
            }
        }
        Format::Csv => {
            out.push_str("weight,count\n");
            for (w, c) in &nz {
                let _ = writeln!(out, "{w},{c}");
            }
        }
        Format::Json => {
            let counts: serde_json::Map<String, Value> =
                nz.iter().map(|(w, c)| (w.to_string(), json!(c))).collect();
            out = pretty(&json!({ "params": params_json(params), "spectrum": counts }));
        }
    }
    out
}

fn digits(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn residual(
    parent: &CodeParams,
    message: &[u32],
    codeword: &[u32],
    r: &Residual,
    rd: usize,
    fmt: Format,
) -> String {
    let (len, dim, q) = (r.code.len(), r.code.dimension(), r.code.q());
    let floor = r.distance_floor();
    let mut out = String::new();
    match fmt {
        Format::Text | Format::Md => {
            let _ = writeln!(out, "parent    {parent}");
            let _ = writeln!(out, "message   {}", digits(message));
            let _ = writeln!(out, "codeword  {} (weight {})", digits(codeword), r.weight);
            let sup: Vec<String> = r.support.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "support   {}", sup.join(" "));
            let _ = writeln!(out, "residual  [{len},{dim},{rd}]_{q}");
            if r.in_window {
                let _ = writeln!(out, "window    in (distance floor {floor})");
            } else {
                let _ = writeln!(out, "window    out");
            }
            if let Some(w) = &r.warning {
                let _ = writeln!(out, "warning: {w}");
            }
            out.push_str("generator\n");
            out.push_str(&write_generator(&r.code));
        }
        Format::Csv => {
            out.push_str("parent_n,parent_k,parent_d,q,weight,in_window,length,dimension,distance,distance_floor\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{len},{dim},{rd},{floor}",
                parent.n, parent.k, parent.d, parent.q, r.weight, r.in_window
            );
        }
        Format::Json => {
            out = pretty(&json!({
                "parent": params_json(parent),
                "message": message,
                "codeword": codeword,
                "support": r.support,
                "weight": r.weight,
                "in_window": r.in_window,
                "warning": r.warning,
                "residual": { "n": len, "k": dim, "d": rd, "q": q },
                "distance_floor": floor,
                "generator": r.code.rows(),
            }));
        }
    }
    out
}

pub fn audit(a: &Audit, fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Json => {
            let violations: Vec<Value> = a
                .violations
                .iter()
                .map(|v| json!({ "criterion": v.criterion, "weight": v.weight, "count": v.count }))
                .collect();
            let counts: serde_json::Map<String, Value> = a
                .spectrum
                .nonzero()
                .iter()
                .map(|(w, c)| (w.to_string(), json!(c)))
                .collect();
            let sets: serde_json::Map<String, Value> = ["chen-xie", "singleton", "griesmer"]
                .iter()
                .map(|m| {
                    (
                        m.replace('-', "_"),
                        set_json(a.report.set(m).expect("known")),
                    )
                })
                .collect();
            out = pretty(&json!({
                "params": params_json(&a.params),
                "spectrum": counts,
                "excluded": sets,
                "violations": violations,
                "sound": a.is_sound(),
            }));
        }
        Format::Csv => {
            out.push_str("criterion,excluded,violations\n");
            for m in ["chen-xie", "singleton", "griesmer"] {
                let bad: Vec<String> = a
                    .violations
                    .iter()
                    .filter(|v| v.criterion == m)
                    .map(|v| v.weight.to_string())
                    .collect();
                let bad = if bad.is_empty() {
                    "-".into()
                } else {
                    bad.join(" ")
                };
                let _ = writeln!(
                    out,
                    "{m},{},{}",
                    quote(&set_desc(a.report.set(m).expect("known"))),
                    quote(&bad)
                );
            }
        }
        Format::Text | Format::Md => {
            let _ = writeln!(out, "{}", a.params);
            out.push_str(&spectrum(&a.params, &a.spectrum, Format::Text));
            for m in ["chen-xie", "singleton", "griesmer"] {
                let _ = writeln!(out, "{m:<10} {}", set_desc(a.report.set(m).expect("known")));
            }
            for v in &a.violations {
                let _ = writeln!(
                    out,
                    "VIOLATION {}: weight {} occurs {} time(s)",
                    v.criterion, v.weight, v.count
                );
            }
            let _ = writeln!(
                out,
                "status: {}",
                if a.is_sound() { "sound" } else { "UNSOUND" }
            );
        }
    }
    out
}

pub fn selftest(r: &PropertyReport, fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Json => out = pretty(&serde_json::to_value(r).expect("report serializes")),
        Format::Csv => {
            out.push_str("property,checks,violations\n");
            for p in &r.properties {
                let _ = writeln!(out, "{},{},{}", p.name, p.checks, p.violations);
            }
        }
        Format::Text | Format::Md => {
            let _ = writeln!(out, "selftest: {} trials, seed {}", r.trials, r.seed);
            for p in &r.properties {
                let _ = writeln!(
                    out,
                    "{:<20} {:>8} checks {:>4} violations",
                    p.name, p.checks, p.violations
                );
                if let Some(f) = &p.first_violation {
                    let _ = writeln!(out, "  first: {f}");
                }
            }
            let _ = writeln!(out, "status: {}", if r.passes() { "PASS" } else { "FAIL" });
        }
    }
    out
}

struct Tally {
    exact: usize,
    clamped: usize,
    mismatch: usize,
}

fn tally(t: &TableComparison) -> Tally {
    let mut s = Tally {
        exact: 0,
        clamped: 0,
        mismatch: 0,
    };
    for r in &t.rows {
        match r.verdict() {
            CellVerdict::Exact => s.exact += 1,
            CellVerdict::ExactAfterClamp => s.clamped += 1,
            CellVerdict::Mismatch => s.mismatch += 1,
        }
    }
    s
}

fn summary(t: &TableComparison) -> String {
    let s = tally(t);
    format!(
        "{} rows: {} exact, {} exact-after-clamp, {} mismatch; {} flagged; {} failing",
        t.rows.len(),
        s.exact,
        s.clamped,
        s.mismatch,
        t.flagged().count(),
        t.failing().count()
    )
}

fn status(t: &TableComparison) -> &'static str {
    if t.passes() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn diff_lines(c: &CellComparison) -> Vec<String> {
    let mut out = Vec::new();
    if c.verdict == CellVerdict::Mismatch {
        let got = &c.computed_clamped;
        let missing: WeightSet = c.printed.difference(got).copied().collect();
        let extra: WeightSet = got.difference(&c.printed).copied().collect();
        out.push(format!("printed  {}", set_table(&c.printed)));
        out.push(format!("missing  {}", set_table(&missing)));
        out.push(format!("extra    {}", set_table(&extra)));
    }
    if !c.count_ok {
        out.push(format!(
            "count    printed {}, computed {}",
            c.printed_count,
            c.matched().len()
        ));
    }
    out
}

fn cell_status(c: &CellComparison) -> String {
    if c.count_ok {
        c.verdict.to_string()
    } else {
        format!("{}, count mismatch", c.verdict)
    }
}

pub fn table(t: &TableComparison, fmt: Format) -> String {
    let mut out = String::new();
    let columns = t.columns();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "table {}: {}", t.table, columns.join(", "));
            for r in &t.rows {
                let mark = if r.flags.is_empty() { "" } else { "  FLAGGED" };
                let _ = writeln!(out, "\n{}  {}{mark}", r.row.params, r.verdict());
                for c in &r.cells {
                    let _ = writeln!(
                        out,
                        "  {:<10} {:<22} {}",
                        c.criterion,
                        cell_status(c),
                        set_table(c.matched())
                    );
                    for d in diff_lines(c) {
                        let _ = writeln!(out, "    {d}");
                    }
                }
                for f in &r.flags {
                    let _ = writeln!(out, "  flag: {f}");
                }
            }
            let _ = writeln!(out, "\nflagged:");
            for r in t.flagged() {
                let _ = writeln!(out, "  {}", r.row.params);
            }
            if t.flagged().count() == 0 {
                let _ = writeln!(out, "  none");
            }
            let _ = writeln!(out, "{}", summary(t));
            let _ = writeln!(out, "status: {}", status(t));
        }
        Format::Md => {
            let _ = writeln!(out, "## Table {}\n", t.table);
            let _ = writeln!(out, "| code | {} | verdict |", columns.join(" | "));
            let _ = writeln!(out, "|---|{}---|", "---|".repeat(columns.len()));
            let mut notes: Vec<String> = Vec::new();
            for r in &t.rows {
                let mut lines: Vec<String> = Vec::new();
                for c in &r.cells {
                    if c.verdict != CellVerdict::Exact {
                        lines.push(format!("{}: {}", c.criterion, c.verdict));
                    }
                    for d in diff_lines(c) {
                        lines.push(format!(
                            "{}: {}",
                            c.criterion,
                            d.split_whitespace().collect::<Vec<_>>().join(" ")
                        ));
                    }
                }
                lines.extend(r.flags.iter().map(|f| format!("flag: {f}")));
                let marker = if lines.is_empty() {
                    String::new()
                } else {
                    notes.push(format!("{}: {}", r.row.params, lines.join("; ")));
                    format!(" [^{}]", notes.len())
                };
                let cells: Vec<String> = r.cells.iter().map(|c| set_table(c.matched())).collect();
                let _ = writeln!(
                    out,
                    "| {} | {} | {}{marker} |",
                    r.row.params.to_string().replace('_', "\\_"),
                    cells.join(" | "),
                    r.verdict()
                );
            }
            let _ = writeln!(out, "\n### Discrepancies\n");
            if notes.is_empty() {
                let _ = writeln!(out, "None.");
            }
            for (i, n) in notes.iter().enumerate() {
                let _ = writeln!(out, "[^{}]: {}", i + 1, n.replace('_', "\\_"));
            }
            let _ = writeln!(out, "\n{}. Status: {}.", summary(t), status(t));
        }
        Format::Csv => {
            out.push_str("table,n,k,d,q,criterion,verdict,printed_count,computed_count,count_ok,printed,computed,flags\n");
            for r in &t.rows {
                let p = &r.row.params;
                let flags = quote(&r.flags.join("; "));
                for c in &r.cells {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                        t.table,
                        p.n,
                        p.k,
                        p.d,
                        p.q,
                        c.criterion,
                        c.verdict,
                        c.printed_count,
                        c.matched().len(),
                        c.count_ok,
                        quote(&set_desc(&c.printed)),
                        quote(&set_desc(c.matched())),
                        flags
                    );
                }
            }
        }
        Format::Json => {
            let rows: Vec<Value> = t.rows.iter().map(row_json).collect();
            out = pretty(&json!({
                "table": t.table,
                "passes": t.passes(),
                "flagged": t.flagged().map(|r| r.row.params.to_string()).collect::<Vec<_>>(),
                "rows": rows,
            }));
        }
    }
    out
}

fn row_json(r: &RowComparison) -> Value {
    let cells: Vec<Value> = r
        .cells
        .iter()
        .map(|c| {
            json!({
                "criterion": c.criterion,
                "verdict": c.verdict.to_string(),
                "printed": set_json(&c.printed),
                "printed_count": c.printed_count,
                "computed_raw": set_json(&c.computed_raw),
                "computed_clamped": set_json(&c.computed_clamped),
                "count_ok": c.count_ok,
            })
        })
        .collect();
    json!({
        "params": params_json(&r.row.params),
        "verdict": r.verdict().to_string(),
        "passes": r.passes(),
        "cells": cells,
        "flags": r.flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_render_descending() {
        assert_eq!(set_desc(&WeightSet::new()), "-");
        assert_eq!(set_desc(&WeightSet::from([11, 9, 10, 7])), "11 10 9 7");
        assert_eq!(set_runs(&WeightSet::from([1, 2, 3, 5, 7, 8])), "8 7 5 3-1");
    }

    #[test]
    fn csv_row_for_first_table_row() {
        let r = wbound_core::exclusion::compare_methods(&CodeParams::new(15, 5, 7, 2)).unwrap();
        let s = exclusion(
            &r,
            &["chen-xie", "singleton", "griesmer", "union"],
            Format::Csv,
        );
        let row = s.lines().nth(1).unwrap();
        assert!(row.starts_with("15,5,7,2,\"13 12\",\"13 12 11\","), "{row}");
    }

    #[test]
    fn json_spectrum_omits_zero_counts() {
        let spec = WeightSpectrum::from_counts(vec![1, 0, 0, 0, 0, 0, 6, 0, 1, 0, 0, 0]);
        let v: Value = serde_json::from_str(&spectrum(
            &CodeParams::new(11, 3, 6, 2),
            &spec,
            Format::Json,
        ))
        .unwrap();
        let keys: Vec<&String> = v["spectrum"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["0", "6", "8"]);
    }
}
