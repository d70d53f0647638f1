//! Seeded property suite over random small codes.
//!
//! Trial `i` draws a code from a master [`SplitMix64`] stream: one output is
//! the code's seed, then `q` uniform in {2,3,4}, `k` uniform in `2..=5` and
//! `n` uniform in `k..=14`. Each code is checked against:
//!
//! * `spectrum`: `sum A_w = q^k`, `A_0 = 1`, all engines agree;
//! * `residual-window`: for every codeword with `w(q-1) < qd`, the residual
//!   has length `n - w`, dimension `k - 1` and distance `>= d - w + ceil(w/q)`;
//! * `global-weight`: every nonzero weight is `<= q(n - d)`;
//! * `distance-ratio`: `(q+1)d <= qn`;
//! * `criterion-soundness`: no excluded weight occurs in the spectrum.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{ceil_div, distance_ratio_holds, global_weight_max, weight_in_window};
use crate::code::{
    engines, residual_with_distance, spectrum, spectrum_with, support, CodeError, CodewordWalker,
    LinearCode,
};
use crate::corpus::{random_code, SplitMix64};
use crate::exclusion::audit_with_spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyStat {
    pub name: String,
    pub checks: u64,
    pub violations: u64,
    /// Description of the first violation, if any.
    pub first_violation: Option<String>,
}

impl PropertyStat {
    fn new(name: &str) -> Self {
        PropertyStat {
            name: name.to_string(),
            checks: 0,
            violations: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub trials: u64,
    pub seed: u64,
    pub properties: Vec<PropertyStat>,
}

impl PropertyReport {
    pub fn passes(&self) -> bool {
        self.properties.iter().all(|p| p.violations == 0)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyStat> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// Parameters and seed of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialSpec {
    pub index: u64,
    pub seed: u64,
    pub q: u64,
    pub n: usize,
    pub k: usize,
}

/// The trial stream for a master seed.
pub fn trial_specs(trials: u64, seed: u64) -> impl Iterator<Item = TrialSpec> {
    let mut rng = SplitMix64::new(seed);
    (0..trials).map(move |index| {
        let code_seed = rng.next_u64();
        let q = 2 + rng.below(3);
        let k = 2 + rng.below(4) as usize;
        let n = k + rng.below(15 - k as u64) as usize;
        TrialSpec {
            index,
            seed: code_seed,
            q,
            n,
            k,
        }
    })
}

pub fn trial_code(t: &TrialSpec) -> LinearCode {
    random_code(t.seed, t.q, t.n, t.k).expect("trial parameters are within random_code's range")
}

struct Stats {
    spectrum: PropertyStat,
    residual: PropertyStat,
    global: PropertyStat,
    ratio: PropertyStat,
    soundness: PropertyStat,
}

/// Runs every property over `trials` random codes.
pub fn run_property_suite(trials: u64, seed: u64, limit: u64) -> Result<PropertyReport, CodeError> {
    let mut s = Stats {
        spectrum: PropertyStat::new("spectrum"),
        residual: PropertyStat::new("residual-window"),
        global: PropertyStat::new("global-weight"),
        ratio: PropertyStat::new("distance-ratio"),
        soundness: PropertyStat::new("criterion-soundness"),
    };
    for t in trial_specs(trials, seed) {
        check_code(
            &trial_code(&t),
            &format!("trial {} (seed {:#x})", t.index, t.seed),
            limit,
            &mut s,
        )?;
    }
    Ok(PropertyReport {
        trials,
        seed,
        properties: vec![s.spectrum, s.residual, s.global, s.ratio, s.soundness],
    })
}

fn check_code(code: &LinearCode, label: &str, limit: u64, s: &mut Stats) -> Result<(), CodeError> {
    let spec = spectrum(code, limit)?;
    let (n, k, q) = (code.len() as u64, code.dimension(), code.q() as u64);

    let mut consistent = spec.total() == code.size() && spec.count(0) == 1;
    for e in engines().iter().filter(|e| e.supports(code)) {
        consistent &= spectrum_with(code, *e, limit)? == spec;
    }
    s.spectrum.record(consistent, || {
        format!("{label}: spectrum {:?}", spec.counts())
    });

    let d = spec.min_distance().expect("k >= 1") as u64;

    if k > 1 {
        let cap = global_weight_max(n, d, q).expect("1 <= d <= n");
        for w in spec.nonzero_weights() {
            let count = spec.count(w);
            for _ in 0..count {
                s.global.record(w as u64 <= cap, || {
                    format!("{label}: weight {w} > q(n-d) = {cap}")
                });
            }
        }
        let v = distance_ratio_holds(n, d, q);
        s.ratio.record(v.holds, || {
            format!("{label}: (q+1)d = {} > qn = {}", v.lhs, v.rhs)
        });
    }

    match audit_with_spectrum(code, spec.clone()) {
        Ok(audit) => {
            let bad = audit.violations.len();
            s.soundness
                .record(bad == 0, || format!("{label}: {:?}", audit.violations));
        }
        Err(e) => s.soundness.record(false, || format!("{label}: {e}")),
    }

    // The residual depends only on supp(c); cache outcomes by support.
    let mut cache: HashMap<Vec<usize>, Result<(), String>> = HashMap::new();
    let mut walker = CodewordWalker::new(code);
    while walker.advance() {
        let c = walker.codeword();
        let w = super::code::weight(c) as u64;
        if w == 0 || !weight_in_window(d, q, w) {
            continue;
        }
        let supp = support(c);
        let outcome = cache
            .entry(supp)
            .or_insert_with(|| check_residual(code, c, d as usize, limit))
            .clone();
        s.residual.record(outcome.is_ok(), || {
            format!("{label}: {}", outcome.unwrap_err())
        });
    }
    Ok(())
}

fn check_residual(code: &LinearCode, c: &[u32], d: usize, limit: u64) -> Result<(), String> {
    let w = super::code::weight(c);
    let r = residual_with_distance(code, c, d).map_err(|e| format!("weight {w}: {e}"))?;
    let q = code.q() as u64;
    if r.code.len() != code.len() - w {
        return Err(format!("weight {w}: residual length {}", r.code.len()));
    }
    if r.code.dimension() != code.dimension() - 1 {
        return Err(format!(
            "weight {w}: residual dimension {}",
            r.code.dimension()
        ));
    }
    let rd = spectrum(&r.code, limit)
        .map_err(|e| e.to_string())?
        .min_distance()
        .expect("dimension >= 1") as i64;
    let floor = d as i64 - w as i64 + ceil_div(w as u64, q) as i64;
    if rd < floor {
        return Err(format!("weight {w}: residual distance {rd} < {floor}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUMERATION_LIMIT;

    #[test]
    fn trial_stream_is_deterministic_and_in_range() {
        let a: Vec<_> = trial_specs(200, 9).collect();
        let b: Vec<_> = trial_specs(200, 9).collect();
        assert_eq!(a, b);
        for t in &a {
            assert!((2..=4).contains(&t.q));
            assert!((2..=5).contains(&t.k));
            assert!(t.k <= t.n && t.n <= 14);
        }
        for q in 2..=4 {
            assert!(a.iter().any(|t| t.q == q));
        }
    }

    #[test]
    fn small_suite_is_clean() {
        let r = run_property_suite(40, 1, DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert!(r.passes(), "{r:?}");
        assert!(r.get("residual-window").unwrap().checks > 0);
        assert_eq!(
            r,
            run_property_suite(40, 1, DEFAULT_ENUMERATION_LIMIT).unwrap()
        );
    }
}
