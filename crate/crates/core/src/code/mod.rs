//! Linear codes given by generator matrices.

mod format;
mod residual;
mod spectrum;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, FieldError, FieldSpec};

pub use format::{parse_generator, write_generator};
pub use residual::{residual, residual_with_distance, Residual};
pub use spectrum::{
    engine, engines, spectrum, spectrum_with, BinaryGrayEngine, CodewordWalker, GenericEngine,
    SpectrumEngine, WeightSpectrum, DEFAULT_ENUMERATION_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator matrix has no rows")]
    EmptyMatrix,
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at row {row}, column {col} is not an element of GF({q})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        q: u32,
    },
    #[error("generator rows are dependent: {rows} rows span rank {rank}")]
    RankDeficient { rows: usize, rank: usize },
    #[error("enumeration needs {required} codewords, limit is {limit}")]
    EnumerationTooLarge { required: u128, limit: u64 },
    #[error("vector is not a codeword")]
    NotACodeword,
    #[error("residual requires a nonzero codeword")]
    ZeroCodeword,
    #[error("vector has length {found}, code length is {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("residual code of length {length} has dimension 0")]
    TrivialResidual { length: usize },
    #[error("residual has dimension {found}, expected {expected} inside the weight window")]
    ResidualRankMismatch { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The tuple `[n, k, d]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
}

impl CodeParams {
    pub fn new(n: u64, k: u64, d: u64, q: u64) -> Self {
        CodeParams { n, k, d, q }
    }

    /// Checks `1 <= d <= n`, `1 <= k <= n`, `q >= 2`.
    pub fn is_valid(&self) -> bool {
        (1..=self.n).contains(&self.d) && (1..=self.n).contains(&self.k) && self.q >= 2
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_{}", self.n, self.k, self.d, self.q)
    }
}

/// What to do when supplied rows are linearly dependent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankPolicy {
    #[default]
    Reject,
    /// Replace the rows with a reduced row-echelon basis of their span.
    AutoReduce,
}

/// Reduced row-echelon form of a set of vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    /// Nonzero rows, each with leading entry 1.
    pub basis: Vec<Vec<Elem>>,
    /// Pivot column of each basis row.
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, field: &FieldSpec, v: &mut [Elem]) {
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            let c = v[col];
            if c != 0 {
                field.axpy(v, field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, field: &FieldSpec, v: &[Elem]) -> bool {
        let mut v = v.to_vec();
        self.reduce(field, &mut v);
        v.iter().all(|&x| x == 0)
    }
}

/// Gauss-Jordan elimination. Pivots are chosen leftmost column first, then topmost row.
pub fn row_reduce(field: &FieldSpec, rows: &[Vec<Elem>]) -> RowEchelon {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = field.neg(row[col]);
                field.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    RowEchelon { basis: m, pivots }
}

/// A linear code over GF(q), stored as `k` linearly independent rows of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Arc<FieldSpec>,
    n: usize,
    rows: Vec<Vec<Elem>>,
}

impl LinearCode {
    /// Validates entries and rank. Under [`RankPolicy::Reject`] the supplied rows
    /// are kept verbatim, so codeword enumeration follows them.
    pub fn from_rows(
        field: Arc<FieldSpec>,
        rows: Vec<Vec<u64>>,
        policy: RankPolicy,
    ) -> Result<Self, CodeError> {
        let n = rows.first().map(Vec::len).ok_or(CodeError::EmptyMatrix)?;
        if n == 0 {
            return Err(CodeError::EmptyMatrix);
        }
        let q = field.order();
        let mut converted = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CodeError::RaggedRows {
                    row: r,
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some((c, &value)) = row.iter().enumerate().find(|(_, &v)| !field.contains(v)) {
                return Err(CodeError::EntryOutOfRange {
                    row: r,
                    col: c,
                    value,
                    q,
                });
            }
            converted.push(row.iter().map(|&v| v as Elem).collect::<Vec<_>>());
        }
        let echelon = row_reduce(&field, &converted);
        let rows = if echelon.rank() == converted.len() {
            converted
        } else {
            match policy {
                RankPolicy::Reject => {
                    return Err(CodeError::RankDeficient {
                        rows: converted.len(),
                        rank: echelon.rank(),
                    })
                }
                RankPolicy::AutoReduce if echelon.rank() == 0 => {
                    return Err(CodeError::RankDeficient {
                        rows: converted.len(),
                        rank: 0,
                    })
                }
                RankPolicy::AutoReduce => echelon.basis,
            }
        };
        Ok(LinearCode { field, n, rows })
    }

    /// Rows already known to be independent and in range.
    pub(crate) fn from_basis(field: Arc<FieldSpec>, rows: Vec<Vec<Elem>>) -> Self {
        let n = rows[0].len();
        LinearCode { field, n, rows }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        (self.q() as u128).saturating_pow(self.dimension() as u32)
    }

    pub fn echelon(&self) -> RowEchelon {
        row_reduce(&self.field, &self.rows)
    }

    /// Row-space membership test.
    pub fn contains(&self, v: &[Elem]) -> Result<bool, CodeError> {
        if v.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        if let Some(&x) = v.iter().find(|&&x| x >= self.q()) {
            return Err(FieldError::ElementOutOfRange {
                value: x as u64,
                q: self.q(),
            }
            .into());
        }
        Ok(self.echelon().contains(&self.field, v))
    }

    /// `sum_i message[i] * rows[i]`.
    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        assert_eq!(message.len(), self.dimension());
        let mut cw = vec![0; self.n];
        for (&m, row) in message.iter().zip(&self.rows) {
            self.field.axpy(&mut cw, m, row);
        }
        cw
    }

    /// Exact `(n, k, d, q)`, with `d` taken from the full weight spectrum.
    pub fn params(&self, limit: u64) -> Result<CodeParams, CodeError> {
        let spec = spectrum(self, limit)?;
        Ok(self.params_from(&spec))
    }

    pub fn params_from(&self, spectrum: &WeightSpectrum) -> CodeParams {
        CodeParams::new(
            self.n as u64,
            self.dimension() as u64,
            spectrum.min_distance().unwrap_or(0) as u64,
            self.q() as u64,
        )
    }
}

/// Builds a code, rejecting dependent rows unless `auto_reduce` is set.
pub fn code_from_matrix(
    field: Arc<FieldSpec>,
    rows: Vec<Vec<u64>>,
    auto_reduce: bool,
) -> Result<LinearCode, CodeError> {
    let policy = if auto_reduce {
        RankPolicy::AutoReduce
    } else {
        RankPolicy::Reject
    };
    LinearCode::from_rows(field, rows, policy)
}

/// Smallest nonzero weight, computed from the full spectrum.
pub fn min_distance(code: &LinearCode, limit: u64) -> Result<usize, CodeError> {
    let spec = spectrum(code, limit)?;
    Ok(spec
        .min_distance()
        .expect("a code of dimension >= 1 has nonzero codewords"))
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn support(v: &[Elem]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter_map(|(i, &x)| (x != 0).then_some(i))
        .collect()
}
