//! Classical and weight-aware bounds on `[n, k, d]_q` codes.
//!
//! Everything here is exact integer arithmetic. The window `w < qd/(q-1)` is
//! always evaluated as `w(q-1) < qd`; the rational threshold is never formed.
//!
//! These are arithmetic statements about parameter tuples. None of them
//! assumes that a code with the given parameters exists.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("weight {w} is outside the window d <= w, w(q-1) < qd for d = {d}, q = {q}")]
    WindowViolated { d: u64, q: u64, w: u64 },
}

fn range_err(msg: impl Into<String>) -> BoundsError {
    BoundsError::ParamRange(msg.into())
}

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `ceil(a / q^i)`; once `q^i` exceeds `a` every term is 1 (for `a >= 1`).
fn ceil_div_pow(a: u64, q: u64, i: u32) -> u64 {
    match q.checked_pow(i) {
        Some(qi) => ceil_div(a, qi),
        None => u64::from(a > 0),
    }
}

/// `n - k + 1`.
pub fn singleton_max_d(n: u64, k: u64) -> Result<u64, BoundsError> {
    if !(1..=n).contains(&k) {
        return Err(range_err(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(n - k + 1)
}

/// `sum_{i=0}^{k-1} ceil(d / q^i)`.
pub fn griesmer_min_n(k: u64, d: u64, q: u64) -> Result<u64, BoundsError> {
    if k < 1 || d < 1 || q < 2 {
        return Err(range_err(format!(
            "need k >= 1, d >= 1, q >= 2, got k={k}, d={d}, q={q}"
        )));
    }
    Ok((0..k).map(|i| ceil_div_pow(d, q, i as u32)).sum())
}

/// `w(q-1) < qd`.
pub fn weight_in_window(d: u64, q: u64, w: u64) -> bool {
    (w as u128) * (q as u128 - 1) < (q as u128) * (d as u128)
}

/// `n - k - ceil(w/q) + 2`. A code holding a weight-`w` codeword inside the
/// window has `d` at most this value. May be negative.
pub fn residual_singleton_max_d(n: u64, k: u64, q: u64, w: u64) -> Result<i64, BoundsError> {
    if !(1..=n).contains(&k) || !(1..=n).contains(&w) || q < 2 {
        return Err(range_err(format!(
            "need 1 <= k <= n, 1 <= w <= n, q >= 2, got n={n}, k={k}, w={w}, q={q}"
        )));
    }
    Ok(n as i64 - k as i64 - ceil_div(w, q) as i64 + 2)
}

/// `d + ceil(w/q) + sum_{i=1}^{k-2} ceil((d - w + ceil(w/q)) / q^i)`.
///
/// A code with `k >= 2` holding a weight-`w` codeword inside the window has
/// length at least this value.
pub fn residual_griesmer_min_n(k: u64, d: u64, q: u64, w: u64) -> Result<u64, BoundsError> {
    if k < 2 || d < 1 || q < 2 || w < 1 {
        return Err(range_err(format!(
            "need k >= 2, d >= 1, q >= 2, w >= 1, got k={k}, d={d}, q={q}, w={w}"
        )));
    }
    if !weight_in_window(d, q, w) {
        return Err(BoundsError::WindowViolated { d, q, w });
    }
    let head = ceil_div(w, q);
    // Window guarantees this is at least 1.
    let residual_d = d + head - w;
    let tail: u64 = (1..=k - 2)
        .map(|i| ceil_div_pow(residual_d, q, i as u32))
        .sum();
    Ok(d + head + tail)
}

/// `q(n - d)`: every nonzero weight of a code with `k > 1` is at most this.
pub fn global_weight_max(n: u64, d: u64, q: u64) -> Result<u64, BoundsError> {
    if !(1..=n).contains(&d) || q < 2 {
        return Err(range_err(format!(
            "need 1 <= d <= n, q >= 2, got n={n}, d={d}, q={q}"
        )));
    }
    Ok(q * (n - d))
}

/// `(q+1)d <= qn`, required of every code with `k > 1`.
pub fn distance_ratio_holds(n: u64, d: u64, q: u64) -> BoundVerdict {
    BoundVerdict::new(
        "distance-ratio",
        ((q + 1) * d) as i64,
        Relation::Le,
        (q * n) as i64,
    )
}

/// For an MDS code with a codeword of weight `d <= w` inside the window: `w <= q`.
pub fn mds_weight_ok(q: u64, d: u64, w: u64) -> Result<bool, BoundsError> {
    if w < d || !weight_in_window(d, q, w) {
        return Err(BoundsError::WindowViolated { d, q, w });
    }
    Ok(w <= q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// Outcome of checking one inequality `lhs (<= | >=) rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub name: String,
    pub holds: bool,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub tight: bool,
}

impl BoundVerdict {
    pub fn new(name: &str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        };
        BoundVerdict {
            name: name.to_string(),
            holds,
            lhs,
            relation,
            rhs,
            tight: lhs == rhs,
        }
    }
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.holds, self.tight) {
            (true, true) => "holds (tight)",
            (true, false) => "holds",
            (false, _) => "VIOLATED",
        };
        write!(
            f,
            "{}: {} {} {} {}",
            self.name, self.lhs, self.relation, self.rhs, status
        )
    }
}

/// Every bound that applies to `params`, plus the weight-aware ones when `w` is given.
/// Weight-aware bounds whose hypotheses fail are skipped.
pub fn evaluate(params: &CodeParams, w: Option<u64>) -> Result<Vec<BoundVerdict>, BoundsError> {
    let CodeParams { n, k, d, q } = *params;
    if !params.is_valid() {
        return Err(range_err(format!("invalid code parameters {params}")));
    }
    let mut out = vec![
        BoundVerdict::new(
            "singleton",
            d as i64,
            Relation::Le,
            singleton_max_d(n, k)? as i64,
        ),
        BoundVerdict::new(
            "griesmer",
            n as i64,
            Relation::Ge,
            griesmer_min_n(k, d, q)? as i64,
        ),
    ];
    if k > 1 {
        out.push(distance_ratio_holds(n, d, q));
    }
    let Some(w) = w else {
        return Ok(out);
    };
    if !(1..=n).contains(&w) {
        return Err(range_err(format!("need 1 <= w <= n, got w={w}, n={n}")));
    }
    if weight_in_window(d, q, w) {
        out.push(BoundVerdict::new(
            "residual-singleton",
            d as i64,
            Relation::Le,
            residual_singleton_max_d(n, k, q, w)?,
        ));
        if k >= 2 {
            out.push(BoundVerdict::new(
                "residual-griesmer",
                n as i64,
                Relation::Ge,
                residual_griesmer_min_n(k, d, q, w)? as i64,
            ));
        }
        if d == n - k + 1 && w >= d {
            out.push(BoundVerdict::new(
                "mds-weight",
                w as i64,
                Relation::Le,
                q as i64,
            ));
        }
    }
    if k > 1 {
        out.push(BoundVerdict::new(
            "global-weight",
            w as i64,
            Relation::Le,
            global_weight_max(n, d, q)? as i64,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_max_d(11, 3), Ok(9));
        assert_eq!(singleton_max_d(5, 2), Ok(4));
        assert_eq!(singleton_max_d(7, 7), Ok(1));
        assert!(singleton_max_d(3, 4).is_err());
        assert!(singleton_max_d(3, 0).is_err());
    }

    #[test]
    fn griesmer_examples() {
        for d in 1..20 {
            assert_eq!(griesmer_min_n(1, d, 3), Ok(d));
        }
        assert_eq!(griesmer_min_n(5, 7, 2), Ok(15));
        assert_eq!(griesmer_min_n(3, 6, 2), Ok(11));
        assert_eq!(griesmer_min_n(70, 3, 1 << 20), Ok(3 + 69));
        assert!(griesmer_min_n(0, 3, 2).is_err());
        assert!(griesmer_min_n(2, 3, 1).is_err());
    }

    #[test]
    fn window_examples() {
        assert!(weight_in_window(6, 2, 11));
        assert!(!weight_in_window(6, 2, 12));
        assert!(weight_in_window(132, 2, 263));
        assert!(!weight_in_window(132, 2, 264));
    }

    #[test]
    fn residual_singleton_examples() {
        assert_eq!(residual_singleton_max_d(13, 10, 3, 4), Ok(3));
        assert_eq!(residual_singleton_max_d(27, 8, 3, 20), Ok(14));
        assert_eq!(residual_singleton_max_d(15, 10, 2, 6), Ok(4));
        assert_eq!(residual_singleton_max_d(10, 10, 2, 10), Ok(-3));
        assert!(residual_singleton_max_d(10, 3, 2, 11).is_err());
    }

    #[test]
    fn residual_griesmer_examples() {
        assert_eq!(residual_griesmer_min_n(5, 7, 2, 7), Ok(15));
        assert_eq!(residual_griesmer_min_n(5, 16, 2, 16), Ok(31));
        for (d, q, w) in [(6, 2, 7), (5, 3, 7), (9, 4, 11)] {
            assert_eq!(residual_griesmer_min_n(2, d, q, w), Ok(d + ceil_div(w, q)));
        }
        assert_eq!(
            residual_griesmer_min_n(3, 6, 2, 12),
            Err(BoundsError::WindowViolated { d: 6, q: 2, w: 12 })
        );
        assert!(matches!(
            residual_griesmer_min_n(1, 6, 2, 6),
            Err(BoundsError::ParamRange(_))
        ));
    }

    #[test]
    fn global_weight_examples() {
        assert_eq!(global_weight_max(16, 8, 2), Ok(16));
        assert_eq!(global_weight_max(9, 9, 3), Ok(0));
        assert_eq!(global_weight_max(11, 6, 2), Ok(10));
        assert!(global_weight_max(5, 6, 2).is_err());
    }

    #[test]
    fn distance_ratio_examples() {
        for q in 2..8 {
            let v = distance_ratio_holds(q + 1, q, q);
            assert!(v.holds && v.tight);
        }
        let v = distance_ratio_holds(16, 8, 2);
        assert!(v.holds && !v.tight);
        assert_eq!((v.lhs, v.rhs), (24, 32));
        let v = distance_ratio_holds(3, 3, 2);
        assert!(!v.holds);
        assert_eq!((v.lhs, v.rhs), (9, 6));
    }

    #[test]
    fn mds_weight_examples() {
        assert_eq!(mds_weight_ok(4, 4, 4), Ok(true));
        assert_eq!(mds_weight_ok(4, 4, 5), Ok(false));
        assert_eq!(mds_weight_ok(2, 2, 3), Ok(false));
        assert_eq!(
            mds_weight_ok(2, 2, 4),
            Err(BoundsError::WindowViolated { d: 2, q: 2, w: 4 })
        );
        assert!(mds_weight_ok(4, 4, 3).is_err());
    }

    #[test]
    fn evaluate_lists_applicable_bounds() {
        let v = evaluate(&CodeParams::new(15, 5, 7, 2), Some(7)).unwrap();
        let names: Vec<&str> = v.iter().map(|b| b.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "singleton",
                "griesmer",
                "distance-ratio",
                "residual-singleton",
                "residual-griesmer",
                "global-weight"
            ]
        );
        assert!(v.iter().all(|b| b.holds));
        let rg = v.iter().find(|b| b.name == "residual-griesmer").unwrap();
        assert!(rg.tight);

        let mds = evaluate(&CodeParams::new(5, 2, 4, 4), Some(4)).unwrap();
        assert!(mds.iter().any(|b| b.name == "mds-weight" && b.holds));

        let bad = evaluate(&CodeParams::new(3, 2, 3, 2), None).unwrap();
        assert!(bad.iter().any(|b| !b.holds));
        assert!(evaluate(&CodeParams::new(3, 4, 3, 2), None).is_err());
    }

    /// Grid: q in {2,3,4}, d <= 40, 2 <= k <= 8, every window weight.
    fn grid() -> impl Iterator<Item = (u64, u64, u64, u64)> {
        [2u64, 3, 4].into_iter().flat_map(|q| {
            (1..=40u64).flat_map(move |d| {
                (2..=8u64).flat_map(move |k| {
                    (1..)
                        .take_while(move |&w| weight_in_window(d, q, w))
                        .map(move |w| (q, d, k, w))
                })
            })
        })
    }

    #[test]
    fn residual_griesmer_refines_and_implies_residual_singleton() {
        for (q, d, k, w) in grid() {
            let rg = residual_griesmer_min_n(k, d, q, w).unwrap();
            let rd = d + ceil_div(w, q) - w;
            assert!(rg >= w + rd + (k - 2));
            for n in rg.max(w).max(k)..rg + 5 {
                let rs = residual_singleton_max_d(n, k, q, w).unwrap();
                assert!(d as i64 <= rs, "q={q} d={d} k={k} w={w} n={n}");
            }
        }
    }

    #[test]
    fn residual_griesmer_at_minimum_weight_is_griesmer() {
        for q in [2u64, 3, 4] {
            for d in 1..=40 {
                for k in 2..=8 {
                    assert_eq!(residual_griesmer_min_n(k, d, q, d), griesmer_min_n(k, d, q));
                }
            }
        }
    }
}
