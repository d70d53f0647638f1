//! Excluded-weight criteria.
//!
//! Each criterion maps `(n, k, d, q)` to a set of weights that no code with
//! those parameters can contain. Criteria are registered by name:
//!
//! | name        | rule                                                              |
//! |-------------|-------------------------------------------------------------------|
//! | `chen-xie`  | `n-k+2 <= w <= floor(qd/(q-1)) - 1`                               |
//! | `singleton` | `max(d, q(n-k-d+2)+1) <= w <= ceil(qd/(q-1)) - 1`, needs `k >= 2` |
//! | `griesmer`  | `d <= w`, `w(q-1) < qd`, `n < residual_griesmer_min_n(k,d,q,w)`   |
//!
//! With clamping every set is intersected with `[1, n]`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{griesmer_min_n, residual_griesmer_min_n, weight_in_window};
use crate::code::{spectrum, CodeError, CodeParams, LinearCode, WeightSpectrum};

pub type WeightSet = BTreeSet<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExclusionError {
    #[error("invalid code parameters {0}")]
    ParamRange(CodeParams),
    #[error("criterion `{0}` requires k >= 2")]
    DimensionTooSmall(&'static str),
    #[error("singleton set does not contain chen-xie set for {0}")]
    DominanceViolated(CodeParams),
    #[error(transparent)]
    Code(#[from] CodeError),
}

fn validate(params: &CodeParams) -> Result<(), ExclusionError> {
    if params.is_valid() {
        Ok(())
    } else {
        Err(ExclusionError::ParamRange(*params))
    }
}

fn clamp_to(set: WeightSet, n: u64, clamp: bool) -> WeightSet {
    if clamp {
        set.into_iter().filter(|w| (1..=n).contains(w)).collect()
    } else {
        set
    }
}

fn interval(lo: u64, hi: u64) -> WeightSet {
    (lo..=hi).collect()
}

pub trait ExclusionCriterion: Send + Sync {
    /// Registry key, e.g. `chen-xie`.
    fn name(&self) -> &'static str;

    fn excluded(&self, params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError>;
}

pub struct ChenXie;

impl ExclusionCriterion for ChenXie {
    fn name(&self) -> &'static str {
        "chen-xie"
    }

    fn excluded(&self, params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
        validate(params)?;
        let CodeParams { n, k, d, q } = *params;
        let lo = n - k + 2;
        // largest integer <= qd/(q-1) - 1
        let hi = (q * d / (q - 1)).saturating_sub(1);
        Ok(clamp_to(interval(lo, hi), n, clamp))
    }
}

/// Chen–Xie exclusions taken as the union over every admissible slack `v >= 0`
/// of `qd/(q-1) - v - 1 <= w <= qd/(q-1) - 1`, subject to `n-k+2 < qd/(q-1) - v`.
/// Independent of the closed form in [`ChenXie`]; kept as a cross-check.
pub fn chen_xie_by_slack(params: &CodeParams) -> Result<WeightSet, ExclusionError> {
    validate(params)?;
    let CodeParams { n, k, d, q } = *params;
    let (qd, q1) = (q * d, q - 1);
    let mut out = WeightSet::new();
    // (n-k+2+v)(q-1) < qd
    let mut v = 0;
    while (n - k + 2 + v) * q1 < qd {
        // (w+v+1)(q-1) >= qd and (w+1)(q-1) <= qd
        out.extend(
            (1..)
                .take_while(|w| (w + 1) * q1 <= qd)
                .filter(|w| (w + v + 1) * q1 >= qd),
        );
        v += 1;
    }
    Ok(out)
}

pub struct SingletonCriterion;

impl ExclusionCriterion for SingletonCriterion {
    fn name(&self) -> &'static str {
        "singleton"
    }

    fn excluded(&self, params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
        validate(params)?;
        let CodeParams { n, k, d, q } = *params;
        // A 0-dimensional residual carries no Singleton constraint.
        if k < 2 {
            return Ok(WeightSet::new());
        }
        // q(n-k-d+2) can be negative when d > n-k+2.
        let base = q as i64 * (n as i64 - k as i64 - d as i64 + 2) + 1;
        let lo = base.max(d as i64) as u64;
        // largest integer strictly below qd/(q-1)
        let hi = (q * d).div_ceil(q - 1) - 1;
        Ok(clamp_to(interval(lo, hi), n, clamp))
    }
}

pub struct GriesmerCriterion;

impl ExclusionCriterion for GriesmerCriterion {
    fn name(&self) -> &'static str {
        "griesmer"
    }

    fn excluded(&self, params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
        validate(params)?;
        let CodeParams { n, k, d, q } = *params;
        if k < 2 {
            return Err(ExclusionError::DimensionTooSmall("griesmer"));
        }
        let mut out = WeightSet::new();
        for w in (d..).take_while(|&w| weight_in_window(d, q, w)) {
            if clamp && w > n {
                break;
            }
            let need = residual_griesmer_min_n(k, d, q, w).expect("w is inside the window");
            if n < need {
                out.insert(w);
            }
        }
        Ok(out)
    }
}

static CRITERIA: [&dyn ExclusionCriterion; 3] = [&ChenXie, &SingletonCriterion, &GriesmerCriterion];

/// All registered criteria in report order.
pub fn criteria() -> &'static [&'static dyn ExclusionCriterion] {
    &CRITERIA
}

pub fn criterion(name: &str) -> Option<&'static dyn ExclusionCriterion> {
    CRITERIA.iter().copied().find(|c| c.name() == name)
}

pub fn chen_xie_excluded(params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
    ChenXie.excluded(params, clamp)
}

pub fn singleton_excluded(params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
    SingletonCriterion.excluded(params, clamp)
}

pub fn griesmer_excluded(params: &CodeParams, clamp: bool) -> Result<WeightSet, ExclusionError> {
    GriesmerCriterion.excluded(params, clamp)
}

/// The three excluded-weight sets for one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    pub params: CodeParams,
    pub chen_xie: WeightSet,
    pub singleton: WeightSet,
    pub griesmer: WeightSet,
    pub union: WeightSet,
    pub clamped: bool,
    pub notes: Vec<String>,
}

impl ExclusionReport {
    pub fn build(params: &CodeParams, clamp: bool) -> Result<Self, ExclusionError> {
        validate(params)?;
        let CodeParams { n, k, d, q } = *params;
        let mut notes = Vec::new();
        if d > 1 {
            notes.push(format!(
                "weights 1..={} are trivially absent (below d)",
                d - 1
            ));
        }

        let chen_xie = ChenXie.excluded(params, clamp)?;
        let slack = chen_xie_by_slack(params)?;
        if clamp_to(slack, n, clamp) != chen_xie {
            notes.push("chen-xie closed form disagrees with slack enumeration".into());
        }
        let singleton = SingletonCriterion.excluded(params, clamp)?;
        if k < 2 {
            notes.push("singleton and griesmer criteria need k >= 2".into());
        }
        let griesmer = match GriesmerCriterion.excluded(params, clamp) {
            Ok(set) => set,
            Err(ExclusionError::DimensionTooSmall(_)) => WeightSet::new(),
            Err(e) => return Err(e),
        };

        if clamp {
            for c in criteria() {
                let raw = c.excluded(params, false).unwrap_or_default();
                let dropped: Vec<String> =
                    raw.iter().filter(|&&w| w > n).map(u64::to_string).collect();
                if !dropped.is_empty() {
                    notes.push(format!(
                        "{}: raw weights above n dropped: {}",
                        c.name(),
                        dropped.join(" ")
                    ));
                }
            }
        }

        let feasible = d <= n - k + 1;
        if !feasible {
            notes.push("parameters violate the Singleton bound; no such code exists".into());
        } else if n < griesmer_min_n(k, d, q).expect("valid parameters") {
            notes.push("parameters violate the Griesmer bound; no such code exists".into());
        }

        // Left-endpoint dominance whenever the Chen–Xie interval is feasible.
        if feasible && k >= 2 && (q - 1) * (n - k + 2) < q * d && !chen_xie.is_subset(&singleton) {
            return Err(ExclusionError::DominanceViolated(*params));
        }

        let union = chen_xie
            .iter()
            .chain(&singleton)
            .chain(&griesmer)
            .copied()
            .collect();
        Ok(ExclusionReport {
            params: *params,
            chen_xie,
            singleton,
            griesmer,
            union,
            clamped: clamp,
            notes,
        })
    }

    /// Set for a registered criterion name.
    pub fn set(&self, name: &str) -> Option<&WeightSet> {
        match name {
            "chen-xie" => Some(&self.chen_xie),
            "singleton" => Some(&self.singleton),
            "griesmer" => Some(&self.griesmer),
            "union" => Some(&self.union),
            _ => None,
        }
    }
}

/// Clamped report for all three criteria.
pub fn compare_methods(params: &CodeParams) -> Result<ExclusionReport, ExclusionError> {
    ExclusionReport::build(params, true)
}

/// An excluded weight that the code actually contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub criterion: String,
    pub weight: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub params: CodeParams,
    pub spectrum: WeightSpectrum,
    pub report: ExclusionReport,
    pub violations: Vec<Violation>,
}

impl Audit {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every criterion against the code's true spectrum.
pub fn audit_against_spectrum(code: &LinearCode, limit: u64) -> Result<Audit, ExclusionError> {
    let spec = spectrum(code, limit)?;
    audit_with_spectrum(code, spec)
}

pub fn audit_with_spectrum(
    code: &LinearCode,
    spec: WeightSpectrum,
) -> Result<Audit, ExclusionError> {
    let params = code.params_from(&spec);
    let report = compare_methods(&params)?;
    let mut violations = Vec::new();
    for c in criteria() {
        for &w in report.set(c.name()).expect("registered criterion") {
            let count = spec.count(w as usize);
            if count > 0 {
                violations.push(Violation {
                    criterion: c.name().to_string(),
                    weight: w,
                    count,
                });
            }
        }
    }
    Ok(Audit {
        params,
        spectrum: spec,
        report,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, k: u64, d: u64, q: u64) -> CodeParams {
        CodeParams::new(n, k, d, q)
    }

    fn set(ws: impl IntoIterator<Item = u64>) -> WeightSet {
        ws.into_iter().collect()
    }

    #[test]
    fn chen_xie_examples() {
        assert_eq!(
            chen_xie_excluded(&p(15, 5, 7, 2), true).unwrap(),
            set([12, 13])
        );
        assert_eq!(
            chen_xie_excluded(&p(27, 4, 18, 3), true).unwrap(),
            set([25, 26])
        );
        assert_eq!(
            chen_xie_excluded(&p(93, 5, 48, 2), false).unwrap(),
            set(90..=95)
        );
        assert_eq!(
            chen_xie_excluded(&p(93, 5, 48, 2), true).unwrap(),
            set(90..=93)
        );
        // qd/(q-1) = 121.5 is not an integer
        assert_eq!(
            chen_xie_excluded(&p(120, 4, 81, 3), false).unwrap(),
            set(118..=120)
        );
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(
            singleton_excluded(&p(15, 5, 7, 2), true).unwrap(),
            set(11..=13)
        );
        assert_eq!(
            singleton_excluded(&p(11, 3, 6, 2), true).unwrap(),
            set(9..=11)
        );
        assert_eq!(
            singleton_excluded(&p(27, 4, 18, 3), true).unwrap(),
            set(22..=26)
        );
        assert_eq!(
            singleton_excluded(&p(120, 4, 81, 3), false).unwrap(),
            set(112..=121)
        );
        assert!(singleton_excluded(&p(5, 1, 5, 2), true).unwrap().is_empty());
    }

    #[test]
    fn griesmer_examples() {
        let g = griesmer_excluded(&p(11, 3, 6, 2), true).unwrap();
        assert_eq!(g, set([7, 9, 10, 11]));
        assert!(g.contains(&7) && g.contains(&9) && !g.contains(&8));

        let mut expected = set(133..=135);
        expected.extend([167, 183, 191, 195, 215, 223, 227, 239, 243, 251]);
        expected.extend(
            (197..=199)
                .chain(229..=231)
                .chain(245..=247)
                .chain(253..=255)
                .chain(257..=263),
        );
        let g = griesmer_excluded(&p(267, 8, 132, 2), true).unwrap();
        assert_eq!(g.len(), 32);
        assert_eq!(g, expected);

        assert_eq!(
            griesmer_excluded(&p(5, 1, 5, 2), true),
            Err(ExclusionError::DimensionTooSmall("griesmer"))
        );
    }

    #[test]
    fn griesmer_never_excludes_minimum_weight_of_griesmer_feasible_params() {
        for q in [2u64, 3, 4] {
            for d in 1..=30 {
                for k in 2..=6 {
                    let g = crate::bounds::griesmer_min_n(k, d, q).unwrap();
                    for n in g..g + 4 {
                        assert!(!griesmer_excluded(&p(n, k, d, q), true)
                            .unwrap()
                            .contains(&d));
                    }
                }
            }
        }
    }

    #[test]
    fn compare_example_code() {
        let r = compare_methods(&p(11, 3, 6, 2)).unwrap();
        assert_eq!(r.chen_xie, set([10, 11]));
        assert_eq!(r.singleton, set([9, 10, 11]));
        assert_eq!(r.griesmer, set([7, 9, 10, 11]));
        assert_eq!(r.union, set([7, 9, 10, 11]));
        assert!(r.chen_xie.is_subset(&r.singleton) && r.chen_xie != r.singleton);
        assert!(r.singleton.is_subset(&r.griesmer) && r.singleton != r.griesmer);

        let r = compare_methods(&p(15, 5, 7, 2)).unwrap();
        assert_eq!((r.chen_xie.len(), r.singleton.len()), (2, 3));
    }

    #[test]
    fn void_interval_gives_empty_report() {
        // n - k + 2 = 12 > floor(qd/(q-1)) - 1 = 5
        let r = compare_methods(&p(12, 2, 3, 2)).unwrap();
        assert!(r.chen_xie.is_empty() && r.singleton.is_empty() && r.griesmer.is_empty());
        assert!(r.union.is_empty());
    }

    #[test]
    fn clamped_report_notes_dropped_weights() {
        let r = compare_methods(&p(93, 5, 48, 2)).unwrap();
        assert!(r
            .notes
            .iter()
            .any(|n| n.starts_with("chen-xie: raw weights above n dropped: 94 95")));
        let raw = ExclusionReport::build(&p(93, 5, 48, 2), false).unwrap();
        assert!(raw.chen_xie.contains(&95) && !raw.clamped);
    }

    #[test]
    fn invalid_params_are_rejected() {
        for c in criteria() {
            assert!(matches!(
                c.excluded(&p(5, 6, 2, 2), true),
                Err(ExclusionError::ParamRange(_))
            ));
            assert!(matches!(
                c.excluded(&p(5, 2, 0, 2), true),
                Err(ExclusionError::ParamRange(_))
            ));
            assert!(matches!(
                c.excluded(&p(5, 2, 2, 1), true),
                Err(ExclusionError::ParamRange(_))
            ));
        }
    }

    #[test]
    fn registry_lookup() {
        let names: Vec<_> = criteria().iter().map(|c| c.name()).collect();
        assert_eq!(names, ["chen-xie", "singleton", "griesmer"]);
        assert!(criterion("griesmer").is_some());
        assert!(criterion("lp").is_none());
    }

    #[test]
    fn closed_form_matches_slack_union() {
        for q in [2u64, 3, 4, 5] {
            for n in 1..=40 {
                for k in 1..=n {
                    for d in 1..=n {
                        let params = p(n, k, d, q);
                        assert_eq!(
                            chen_xie_excluded(&params, false).unwrap(),
                            chen_xie_by_slack(&params).unwrap(),
                            "{params}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn clamping_is_intersection_with_one_to_n() {
        for q in [2u64, 3, 4] {
            for n in 1..=30 {
                for k in 2..=n.min(6) {
                    for d in 1..=n {
                        let params = p(n, k, d, q);
                        for c in criteria() {
                            let raw = c.excluded(&params, false).unwrap();
                            let clamped = c.excluded(&params, true).unwrap();
                            let expected: WeightSet =
                                raw.into_iter().filter(|w| (1..=n).contains(w)).collect();
                            assert_eq!(clamped, expected, "{} {params}", c.name());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unclamped_linear_criteria_are_intervals() {
        for q in [2u64, 3, 4] {
            for n in 1..=30 {
                for k in 1..=n {
                    for d in 1..=n {
                        for c in [&ChenXie as &dyn ExclusionCriterion, &SingletonCriterion] {
                            let s = c.excluded(&p(n, k, d, q), false).unwrap();
                            if let (Some(lo), Some(hi)) = (s.first(), s.last()) {
                                assert_eq!(s.len() as u64, hi - lo + 1);
                            }
                        }
                    }
                }
            }
        }
    }
}
