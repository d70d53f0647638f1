//! Named codes, printed table data, and seeded random codes.

mod rng;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::code::{code_from_matrix, row_reduce, CodeError, LinearCode, WeightSpectrum};
use crate::gf::{Elem, FieldError, FieldSpec};

pub use rng::SplitMix64;
pub use tables::{parse_weight_list, table_rows, PrintedCounts, TableRef, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown code name `{0}`")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Codes constructed explicitly from their definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedCode {
    /// The binary `[11,3,6]` Griesmer code with nonzero weights {6, 8}.
    Example11_3_6,
    /// `[q+1, 2, q]_q`: rows `(1,…,1,0)` and `(α_1,…,α_q,1)`.
    Ratio(u64),
    /// First-order Reed–Muller code RM(1, m).
    ReedMuller1(u32),
    /// Ternary Hamming `[13,10,3]`.
    TernaryHamming13,
}

impl FromStr for NamedCode {
    type Err = CorpusError;

    /// Accepts `example_11_3_6`, `ratio_code(q)`, `rm_1_m`, `hamming_13_10_3_ternary`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CorpusError::UnknownName(s.to_string());
        match s {
            "example_11_3_6" => return Ok(NamedCode::Example11_3_6),
            "hamming_13_10_3_ternary" => return Ok(NamedCode::TernaryHamming13),
            _ => {}
        }
        if let Some(q) = s
            .strip_prefix("ratio_code(")
            .and_then(|r| r.strip_suffix(')'))
        {
            return q.parse().map(NamedCode::Ratio).map_err(|_| unknown());
        }
        if let Some(m) = s.strip_prefix("rm_1_") {
            return m.parse().map(NamedCode::ReedMuller1).map_err(|_| unknown());
        }
        Err(unknown())
    }
}

impl fmt::Display for NamedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCode::Example11_3_6 => f.write_str("example_11_3_6"),
            NamedCode::Ratio(q) => write!(f, "ratio_code({q})"),
            NamedCode::ReedMuller1(m) => write!(f, "rm_1_{m}"),
            NamedCode::TernaryHamming13 => f.write_str("hamming_13_10_3_ternary"),
        }
    }
}

fn field(q: u64) -> Result<Arc<FieldSpec>, CorpusError> {
    Ok(Arc::new(FieldSpec::new(q)?))
}

fn to_u64(rows: Vec<Vec<Elem>>) -> Vec<Vec<u64>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(u64::from).collect())
        .collect()
}

/// Builds a named code by its exact generator matrix.
pub fn named_code(name: &str) -> Result<LinearCode, CorpusError> {
    build(name.parse()?)
}

pub fn build(code: NamedCode) -> Result<LinearCode, CorpusError> {
    match code {
        NamedCode::Example11_3_6 => {
            let rows = vec![
                vec![1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
                vec![1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0],
                vec![1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1],
            ];
            Ok(code_from_matrix(field(2)?, rows, false)?)
        }
        NamedCode::Ratio(q) => {
            let f = field(q)?;
            let mut ones = vec![1u64; q as usize];
            ones.push(0);
            let mut alphas: Vec<u64> = (0..q).collect();
            alphas.push(1);
            Ok(code_from_matrix(f, vec![ones, alphas], false)?)
        }
        NamedCode::ReedMuller1(m) => {
            if !(1..=16).contains(&m) {
                return Err(CorpusError::ParamRange(format!(
                    "rm_1_m needs 1 <= m <= 16, got {m}"
                )));
            }
            let n = 1usize << m;
            let mut rows = vec![vec![1u64; n]];
            // Row i+1 is bit (m-1-i) of the column index.
            for i in 0..m {
                let bit = m - 1 - i;
                rows.push((0..n).map(|j| ((j >> bit) & 1) as u64).collect());
            }
            Ok(code_from_matrix(field(2)?, rows, false)?)
        }
        NamedCode::TernaryHamming13 => {
            let f = field(3)?;
            let check = projective_points(&f, 3);
            let check_rows: Vec<Vec<Elem>> = (0..3)
                .map(|i| check.iter().map(|pt| pt[i]).collect())
                .collect();
            let rows = null_space(&f, &check_rows);
            Ok(code_from_matrix(f, to_u64(rows), false)?)
        }
    }
}

/// Points of PG(dim-1, q) as vectors whose first nonzero coordinate is 1, in
/// lexicographic order.
pub fn projective_points(field: &FieldSpec, dim: usize) -> Vec<Vec<Elem>> {
    let q = field.order() as u64;
    let total = q.pow(dim as u32);
    (0..total)
        .map(|t| {
            let mut v = vec![0; dim];
            let mut rest = t;
            for x in v.iter_mut().rev() {
                *x = (rest % q) as Elem;
                rest /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Basis of `{x : H x = 0}`, one vector per free column of the reduced `H`,
/// in ascending column order.
pub fn null_space(field: &FieldSpec, check_rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let n = check_rows[0].len();
    let e = row_reduce(field, check_rows);
    (0..n)
        .filter(|c| !e.pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &p) in e.basis.iter().zip(&e.pivots) {
                v[p] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

/// Weight enumerators of codes that are named but whose generator matrices are
/// not printed. Fixture files can be checked against these.
pub fn published_enumerator(name: &str) -> Option<WeightSpectrum> {
    let (n, entries): (usize, &[(usize, u64)]) = match name {
        "ternary_27_8_14" => (
            27,
            &[
                (0, 1),
                (14, 810),
                (15, 702),
                (17, 1404),
                (18, 780),
                (20, 2106),
                (21, 702),
                (26, 54),
                (27, 2),
            ],
        ),
        "cyclic_15_10_4" => (
            15,
            &[(0, 1), (4, 105), (6, 280), (8, 435), (10, 168), (12, 35)],
        ),
        _ => return None,
    };
    let mut counts = vec![0; n + 1];
    for &(w, c) in entries {
        counts[w] = c;
    }
    Some(WeightSpectrum::from_counts(counts))
}

/// Deterministic random full-rank `k x n` generator matrix over GF(q).
///
/// Rows are drawn entry by entry with [`SplitMix64::below`] seeded by `seed`,
/// and a row is kept only if it raises the rank.
pub fn random_code(seed: u64, q: u64, n: usize, k: usize) -> Result<LinearCode, CorpusError> {
    if !matches!(q, 2..=4) || k < 1 || k > n || n > 14 || k > 5 {
        return Err(CorpusError::ParamRange(format!(
            "random_code needs q in {{2,3,4}}, 1 <= k <= n <= 14, k <= 5; got q={q}, n={n}, k={k}"
        )));
    }
    let f = field(q)?;
    let mut rng = SplitMix64::new(seed);
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(k);
    while rows.len() < k {
        let row: Vec<Elem> = (0..n).map(|_| rng.below(q) as Elem).collect();
        rows.push(row);
        if row_reduce(&f, &rows).rank() < rows.len() {
            rows.pop();
        }
    }
    Ok(code_from_matrix(f, to_u64(rows), false)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{spectrum, DEFAULT_ENUMERATION_LIMIT};

    fn spec(code: &LinearCode) -> WeightSpectrum {
        spectrum(code, DEFAULT_ENUMERATION_LIMIT).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for name in [
            "example_11_3_6",
            "ratio_code(4)",
            "rm_1_4",
            "hamming_13_10_3_ternary",
        ] {
            assert_eq!(name.parse::<NamedCode>().unwrap().to_string(), name);
        }
        for bad in ["example", "ratio_code(x)", "rm_1_", "ratio_code4"] {
            assert!(matches!(
                bad.parse::<NamedCode>(),
                Err(CorpusError::UnknownName(_))
            ));
        }
        assert!(matches!(
            named_code("ratio_code(6)"),
            Err(CorpusError::Field(_))
        ));
    }

    #[test]
    fn example_code() {
        let c = named_code("example_11_3_6").unwrap();
        let s = spec(&c);
        assert_eq!(s.min_distance(), Some(6));
        assert_eq!(s.nonzero_weights(), vec![6, 8]);
        assert_eq!((s.count(6), s.count(8)), (6, 1));
    }

    #[test]
    fn ratio_codes() {
        for q in [2u64, 3, 4, 5] {
            let c = build(NamedCode::Ratio(q)).unwrap();
            assert_eq!((c.len(), c.dimension()), (q as usize + 1, 2));
            assert_eq!(spec(&c).min_distance(), Some(q as usize));
        }
        let c = build(NamedCode::Ratio(2)).unwrap();
        assert_eq!(c.rows(), &[vec![1, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn reed_muller() {
        let c = named_code("rm_1_4").unwrap();
        assert_eq!((c.len(), c.dimension()), (16, 5));
        let s = spec(&c);
        assert_eq!(
            s.nonzero(),
            [(0, 1), (8, 30), (16, 1)].into_iter().collect()
        );
        assert!(matches!(
            named_code("rm_1_0"),
            Err(CorpusError::ParamRange(_))
        ));
    }

    #[test]
    fn ternary_hamming() {
        let f = FieldSpec::new(3).unwrap();
        let pts = projective_points(&f, 3);
        assert_eq!(pts.len(), 13);
        assert_eq!(pts[0], vec![0, 0, 1]);
        assert_eq!(pts[12], vec![1, 2, 2]);
        let c = named_code("hamming_13_10_3_ternary").unwrap();
        assert_eq!((c.len(), c.dimension()), (13, 10));
        let s = spec(&c);
        assert_eq!(s.min_distance(), Some(3));
        assert!(s.count(4) > 0);
        // Every basis vector is orthogonal to every check row.
        let check: Vec<Vec<Elem>> = (0..3).map(|i| pts.iter().map(|p| p[i]).collect()).collect();
        for row in c.rows() {
            for h in &check {
                let dot = row
                    .iter()
                    .zip(h)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn random_codes_are_full_rank_and_deterministic() {
        for seed in 0..50 {
            let a = random_code(seed, 2, 10, 3).unwrap();
            assert_eq!(a.dimension(), 3);
            assert_eq!(a, random_code(seed, 2, 10, 3).unwrap());
            for q in 2..=4 {
                assert_eq!(random_code(seed, q, 5, 5).unwrap().dimension(), 5);
            }
        }
        assert_ne!(
            random_code(1, 3, 8, 4).unwrap(),
            random_code(2, 3, 8, 4).unwrap()
        );
        assert!(random_code(0, 5, 8, 4).is_err());
        assert!(random_code(0, 2, 15, 4).is_err());
        assert!(random_code(0, 2, 8, 6).is_err());
        assert!(random_code(0, 2, 3, 4).is_err());
    }

    #[test]
    fn published_enumerators_sum_to_code_size() {
        assert_eq!(
            published_enumerator("ternary_27_8_14").unwrap().total(),
            3u128.pow(8)
        );
        assert_eq!(
            published_enumerator("cyclic_15_10_4").unwrap().total(),
            1 << 10
        );
        assert!(published_enumerator("golay").is_none());
    }
}
