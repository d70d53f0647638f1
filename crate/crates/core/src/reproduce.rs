//! Recomputes the printed comparison tables and grades every cell.
//!
//! A cell is `exact` when the unclamped computed set equals the printed set,
//! `exact-after-clamp` when only the set clamped to `[1, n]` does, and a
//! `mismatch` otherwise. The printed "(N weights)" annotation is checked
//! separately against the matched set.
//!
//! The printed tables do not use one clamping convention throughout, so each
//! column is also scanned for convention outliers: among rows where clamping
//! changes the set, rows following the minority convention are flagged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{table_rows, TableRow};
use crate::exclusion::{criterion, ExclusionError, WeightSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellVerdict {
    Exact,
    ExactAfterClamp,
    Mismatch,
}

impl fmt::Display for CellVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellVerdict::Exact => "exact",
            CellVerdict::ExactAfterClamp => "exact-after-clamp",
            CellVerdict::Mismatch => "mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComparison {
    pub criterion: String,
    pub printed: WeightSet,
    pub printed_count: u64,
    pub computed_raw: WeightSet,
    pub computed_clamped: WeightSet,
    pub verdict: CellVerdict,
    /// The printed count equals the size of the matched computed set.
    pub count_ok: bool,
}

impl CellComparison {
    fn new(
        criterion: &str,
        printed: WeightSet,
        printed_count: u64,
        raw: WeightSet,
        n: u64,
    ) -> Self {
        let clamped: WeightSet = raw
            .iter()
            .copied()
            .filter(|w| (1..=n).contains(w))
            .collect();
        let verdict = if raw == printed {
            CellVerdict::Exact
        } else if clamped == printed {
            CellVerdict::ExactAfterClamp
        } else {
            CellVerdict::Mismatch
        };
        let matched = match verdict {
            CellVerdict::Exact => &raw,
            _ => &clamped,
        };
        let count_ok = matched.len() as u64 == printed_count;
        CellComparison {
            criterion: criterion.to_string(),
            printed,
            printed_count,
            computed_raw: raw,
            computed_clamped: clamped,
            verdict,
            count_ok,
        }
    }

    /// The computed set that the verdict refers to.
    pub fn matched(&self) -> &WeightSet {
        match self.verdict {
            CellVerdict::Exact => &self.computed_raw,
            _ => &self.computed_clamped,
        }
    }

    pub fn clamping_matters(&self) -> bool {
        self.computed_raw != self.computed_clamped
    }

    pub fn passes(&self) -> bool {
        self.verdict != CellVerdict::Mismatch && self.count_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowComparison {
    pub row: TableRow,
    pub cells: Vec<CellComparison>,
    pub flags: Vec<String>,
}

impl RowComparison {
    pub fn passes(&self) -> bool {
        self.cells.iter().all(CellComparison::passes)
    }

    /// Worst cell verdict.
    pub fn verdict(&self) -> CellVerdict {
        self.cells
            .iter()
            .map(|c| c.verdict)
            .max()
            .unwrap_or(CellVerdict::Exact)
    }

    pub fn cell(&self, criterion: &str) -> Option<&CellComparison> {
        self.cells.iter().find(|c| c.criterion == criterion)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableComparison {
    pub table: u8,
    pub rows: Vec<RowComparison>,
}

impl TableComparison {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(RowComparison::passes)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &RowComparison> {
        self.rows.iter().filter(|r| !r.flags.is_empty())
    }

    pub fn failing(&self) -> impl Iterator<Item = &RowComparison> {
        self.rows.iter().filter(|r| !r.passes())
    }

    /// Criterion columns present in this table.
    pub fn columns(&self) -> Vec<String> {
        self.rows
            .first()
            .map(|r| r.cells.iter().map(|c| c.criterion.clone()).collect())
            .unwrap_or_default()
    }
}

fn compare_row(row: TableRow) -> Result<RowComparison, ExclusionError> {
    let n = row.params.n;
    let raw = |name: &str| {
        criterion(name)
            .expect("registered criterion")
            .excluded(&row.params, false)
    };
    let mut cells = vec![
        CellComparison::new(
            "chen-xie",
            row.expected_chen_xie.clone(),
            row.printed_counts.chen_xie,
            raw("chen-xie")?,
            n,
        ),
        CellComparison::new(
            "singleton",
            row.expected_singleton.clone(),
            row.printed_counts.singleton,
            raw("singleton")?,
            n,
        ),
    ];
    if let Some(expected) = &row.expected_griesmer {
        cells.push(CellComparison::new(
            "griesmer",
            expected.clone(),
            row.printed_counts.griesmer.unwrap_or(expected.len() as u64),
            raw("griesmer")?,
            n,
        ));
    }
    let mut flags = Vec::new();
    for c in &cells {
        if c.printed.len() as u64 != c.printed_count {
            flags.push(format!(
                "{}: printed count ({} weights) differs from the {} weights listed",
                c.criterion,
                c.printed_count,
                c.printed.len()
            ));
        }
    }
    Ok(RowComparison { row, cells, flags })
}

fn flag_convention_outliers(rows: &mut [RowComparison]) {
    let Some(first) = rows.first() else { return };
    let columns: Vec<String> = first.cells.iter().map(|c| c.criterion.clone()).collect();
    for (col, name) in columns.iter().enumerate() {
        let relevant: Vec<(usize, CellVerdict)> = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.cells[col].clamping_matters())
            .map(|(i, r)| (i, r.cells[col].verdict))
            .filter(|(_, v)| *v != CellVerdict::Mismatch)
            .collect();
        let clamped = relevant
            .iter()
            .filter(|(_, v)| *v == CellVerdict::ExactAfterClamp)
            .count();
        let unclamped = relevant.len() - clamped;
        if clamped == 0 || unclamped == 0 {
            continue;
        }
        let minority = if clamped <= unclamped {
            CellVerdict::ExactAfterClamp
        } else {
            CellVerdict::Exact
        };
        let others = clamped.max(unclamped);
        for &(i, v) in &relevant {
            if v != minority {
                continue;
            }
            let msg = match minority {
                CellVerdict::ExactAfterClamp => format!(
                    "{name}: printed set is clamped to [1, n], while {others} other row(s) of this column print weights above n"
                ),
                _ => format!(
                    "{name}: printed set includes weights above n, while {others} other row(s) of this column clamp to [1, n]"
                ),
            };
            rows[i].flags.push(msg);
        }
    }
}

/// Compares every row of table `which` (1, 2 or 3).
pub fn compare_table(which: u8) -> Result<TableComparison, ExclusionError> {
    let mut rows = table_rows(which)
        .into_iter()
        .map(compare_row)
        .collect::<Result<Vec<_>, _>>()?;
    flag_convention_outliers(&mut rows);
    Ok(TableComparison { table: which, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeParams;

    #[test]
    fn first_row_is_exact() {
        let t = compare_table(1).unwrap();
        let r = &t.rows[0];
        assert_eq!(r.verdict(), CellVerdict::Exact);
        assert!(r.passes() && r.flags.is_empty());
    }

    #[test]
    fn rows_above_n_match_after_clamping() {
        let t = compare_table(1).unwrap();
        let row = t
            .rows
            .iter()
            .find(|r| r.row.params == CodeParams::new(93, 5, 48, 2))
            .unwrap();
        assert_eq!(
            row.cell("chen-xie").unwrap().verdict,
            CellVerdict::ExactAfterClamp
        );
        assert_eq!(row.cell("singleton").unwrap().verdict, CellVerdict::Exact);
        assert!(row.flags.is_empty());
    }

    #[test]
    fn only_row_90_5_46_is_a_convention_outlier() {
        let t = compare_table(1).unwrap();
        let flagged: Vec<CodeParams> = t.flagged().map(|r| r.row.params).collect();
        assert_eq!(flagged, vec![CodeParams::new(90, 5, 46, 2)]);
        assert!(t.passes());
    }

    #[test]
    fn table_two_is_exact_or_clamped() {
        let t = compare_table(2).unwrap();
        assert!(t.passes());
        assert_eq!(t.flagged().count(), 0);
    }

    #[test]
    fn cell_grading() {
        let c = CellComparison::new(
            "x",
            WeightSet::from([4, 5]),
            2,
            WeightSet::from([4, 5, 6]),
            5,
        );
        assert_eq!(c.verdict, CellVerdict::ExactAfterClamp);
        assert!(c.passes());
        let c = CellComparison::new("x", WeightSet::from([3]), 1, WeightSet::from([4]), 5);
        assert_eq!(c.verdict, CellVerdict::Mismatch);
        assert!(!c.passes());
        let c = CellComparison::new("x", WeightSet::from([4]), 2, WeightSet::from([4]), 5);
        assert_eq!(c.verdict, CellVerdict::Exact);
        assert!(!c.count_ok);
    }
}
