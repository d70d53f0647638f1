//! Residual codes: puncture a code on the support of one of its codewords.

use super::{row_reduce, spectrum, support, CodeError, LinearCode, DEFAULT_ENUMERATION_LIMIT};
use crate::bounds::{ceil_div, weight_in_window};
use crate::gf::Elem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub code: LinearCode,
    /// Deleted coordinates, `supp(c)`.
    pub support: Vec<usize>,
    pub weight: usize,
    /// Minimum distance of the parent code.
    pub parent_distance: usize,
    /// `wt(c)(q-1) < q d`: the dimension is then exactly `k - 1` and the
    /// distance is at least [`Residual::distance_floor`].
    pub in_window: bool,
    /// Set when the window hypothesis fails and no guarantee applies.
    pub warning: Option<String>,
}

impl Residual {
    /// `d - w + ceil(w / q)`.
    pub fn distance_floor(&self) -> i64 {
        let q = self.code.q() as u64;
        self.parent_distance as i64 - self.weight as i64 + ceil_div(self.weight as u64, q) as i64
    }
}

/// Residual of `code` with respect to `c`, computing the parent distance by enumeration.
pub fn residual(code: &LinearCode, c: &[Elem]) -> Result<Residual, CodeError> {
    let d = spectrum(code, DEFAULT_ENUMERATION_LIMIT)?
        .min_distance()
        .expect("nonzero dimension");
    residual_with_distance(code, c, d)
}

/// Residual of `code` with respect to `c`, given the code's minimum distance `d`.
pub fn residual_with_distance(
    code: &LinearCode,
    c: &[Elem],
    d: usize,
) -> Result<Residual, CodeError> {
    if !code.contains(c)? {
        return Err(CodeError::NotACodeword);
    }
    let supp = support(c);
    if supp.is_empty() {
        return Err(CodeError::ZeroCodeword);
    }
    let w = supp.len();
    let length = code.len() - w;
    let punctured: Vec<Vec<Elem>> = code
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| c[*j] == 0)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    let echelon = if length == 0 {
        None
    } else {
        Some(row_reduce(code.field(), &punctured))
    };
    let rank = echelon.as_ref().map_or(0, |e| e.rank());
    let q = code.q() as u64;
    let in_window = weight_in_window(d as u64, q, w as u64);
    let k = code.dimension();
    if in_window && rank + 1 != k {
        if rank == 0 {
            return Err(CodeError::TrivialResidual { length });
        }
        return Err(CodeError::ResidualRankMismatch {
            expected: k - 1,
            found: rank,
        });
    }
    let Some(echelon) = echelon.filter(|e| e.rank() > 0) else {
        return Err(CodeError::TrivialResidual { length });
    };
    let warning = (!in_window).then(|| {
        format!(
            "weight {w} is outside the window w(q-1) < qd (d = {d}, q = {q}); \
             residual has dimension {rank}, no distance guarantee"
        )
    });
    Ok(Residual {
        code: LinearCode::from_basis(code.field_arc().clone(), echelon.basis),
        support: supp,
        weight: w,
        parent_distance: d,
        in_window,
        warning,
    })
}
