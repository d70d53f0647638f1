//! Exhaustive weight enumeration.
//!
//! Engines are interchangeable strategies behind [`SpectrumEngine`]; every
//! engine must produce identical counts for the codes it supports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CodeError, LinearCode};
use crate::gf::Elem;

/// Default cap on enumerated codewords (2^26).
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 26;

/// Number of codewords of each Hamming weight `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpectrum {
    counts: Vec<u64>,
}

impl WeightSpectrum {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        WeightSpectrum { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.len() <= 1
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        (1..self.counts.len()).rev().find(|&w| self.counts[w] > 0)
    }

    /// Weights `w >= 1` with `A_w > 0`.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len())
            .filter(|&w| self.counts[w] > 0)
            .collect()
    }

    /// Nonzero entries only, keyed by weight.
    pub fn nonzero(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }
}

pub trait SpectrumEngine: Send + Sync {
    fn name(&self) -> &'static str;

    fn supports(&self, code: &LinearCode) -> bool;

    /// Counts weights of all `q^k` codewords. The caller has checked the limit.
    fn count(&self, code: &LinearCode) -> WeightSpectrum;
}

/// Walks every codeword in message order: messages are visited in
/// lexicographic order with the coefficient of row 0 most significant.
pub struct CodewordWalker<'a> {
    code: &'a LinearCode,
    message: Vec<Elem>,
    codeword: Vec<Elem>,
    /// `deltas[i][a]` is the change in the codeword when digit `i` steps from `a` to `a + 1 mod q`.
    deltas: Vec<Vec<Vec<Elem>>>,
    started: bool,
    done: bool,
}

impl<'a> CodewordWalker<'a> {
    pub fn new(code: &'a LinearCode) -> Self {
        let field = code.field();
        let q = field.order();
        let deltas = code
            .rows()
            .iter()
            .map(|row| {
                (0..q)
                    .map(|a| {
                        let next = if a + 1 == q { 0 } else { a + 1 };
                        let step = field.sub(next, a);
                        row.iter().map(|&x| field.mul(step, x)).collect()
                    })
                    .collect()
            })
            .collect();
        CodewordWalker {
            code,
            message: vec![0; code.dimension()],
            codeword: vec![0; code.len()],
            deltas,
            started: false,
            done: false,
        }
    }

    /// Moves to the next codeword; `false` once all `q^k` have been visited.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let field = self.code.field();
        let q = field.order();
        for i in (0..self.message.len()).rev() {
            let a = self.message[i];
            for (c, &d) in self.codeword.iter_mut().zip(&self.deltas[i][a as usize]) {
                *c = field.add(*c, d);
            }
            if a + 1 < q {
                self.message[i] = a + 1;
                return true;
            }
            self.message[i] = 0;
        }
        self.done = true;
        false
    }

    pub fn message(&self) -> &[Elem] {
        &self.message
    }

    pub fn codeword(&self) -> &[Elem] {
        &self.codeword
    }
}

/// Field-generic enumeration by message-vector odometer.
pub struct GenericEngine;

impl SpectrumEngine for GenericEngine {
    fn name(&self) -> &'static str {
        "generic"
    }

    fn supports(&self, _code: &LinearCode) -> bool {
        true
    }

    fn count(&self, code: &LinearCode) -> WeightSpectrum {
        let mut counts = vec![0u64; code.len() + 1];
        let mut walker = CodewordWalker::new(code);
        while walker.advance() {
            counts[super::weight(walker.codeword())] += 1;
        }
        WeightSpectrum { counts }
    }
}

/// Binary codes only: Gray-code walk over bit-packed rows, one XOR per codeword.
pub struct BinaryGrayEngine;

impl SpectrumEngine for BinaryGrayEngine {
    fn name(&self) -> &'static str {
        "binary-gray"
    }

    fn supports(&self, code: &LinearCode) -> bool {
        code.q() == 2 && code.dimension() < 64
    }

    fn count(&self, code: &LinearCode) -> WeightSpectrum {
        let words = code.len().div_ceil(64);
        let packed: Vec<Vec<u64>> = code
            .rows()
            .iter()
            .map(|row| {
                let mut bits = vec![0u64; words];
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        bits[j / 64] |= 1 << (j % 64);
                    }
                }
                bits
            })
            .collect();
        let mut counts = vec![0u64; code.len() + 1];
        let mut acc = vec![0u64; words];
        counts[0] = 1;
        for t in 1u64..(1u64 << code.dimension()) {
            let row = &packed[t.trailing_zeros() as usize];
            let mut w = 0;
            for (a, &r) in acc.iter_mut().zip(row) {
                *a ^= r;
                w += a.count_ones() as usize;
            }
            counts[w] += 1;
        }
        WeightSpectrum { counts }
    }
}

static ENGINES: [&dyn SpectrumEngine; 2] = [&BinaryGrayEngine, &GenericEngine];

/// Registered engines, most specialized first.
pub fn engines() -> &'static [&'static dyn SpectrumEngine] {
    &ENGINES
}

pub fn engine(name: &str) -> Option<&'static dyn SpectrumEngine> {
    ENGINES.iter().copied().find(|e| e.name() == name)
}

fn check_limit(code: &LinearCode, limit: u64) -> Result<(), CodeError> {
    let required = code.size();
    if required > limit as u128 {
        return Err(CodeError::EnumerationTooLarge { required, limit });
    }
    Ok(())
}

/// Weight spectrum using the first registered engine that supports the code.
pub fn spectrum(code: &LinearCode, limit: u64) -> Result<WeightSpectrum, CodeError> {
    let engine = ENGINES
        .iter()
        .find(|e| e.supports(code))
        .expect("the generic engine supports every code");
    spectrum_with(code, *engine, limit)
}

pub fn spectrum_with(
    code: &LinearCode,
    engine: &dyn SpectrumEngine,
    limit: u64,
) -> Result<WeightSpectrum, CodeError> {
    check_limit(code, limit)?;
    assert!(
        engine.supports(code),
        "engine {} does not support GF({}) codes",
        engine.name(),
        code.q()
    );
    Ok(engine.count(code))
}
