//! Finite fields GF(q), q = p^m.
//!
//! An element of GF(p^m) is encoded as the integer whose base-p digits are the
//! coefficients of its polynomial representative (digit `i` is the coefficient
//! of `x^i`). Thus `0` is the additive identity and `1` the multiplicative
//! identity for every field order, and generator-matrix files stay independent
//! of the field size.
//!
//! Multiplication goes through exp/log tables built from a primitive element;
//! [`FieldSpec::mul_by_definition`] is the polynomial reference the tables are
//! checked against.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Raw element value in `[0, q)`.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Orders up to this size get a dense addition table.
const DENSE_ADD_MAX: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element belongs to GF({found}), expected GF({expected})")]
    FieldMismatch { expected: u32, found: u32 },
    #[error("value {value} is not an element of GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// An element tagged with the order of the field it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: Elem,
    order: u32,
}

impl FieldElement {
    pub fn value(self) -> Elem {
        self.value
    }

    pub fn order(self) -> u32 {
        self.order
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// GF(q) with its modulus and arithmetic tables. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: u32,
    p: u32,
    m: u32,
    /// Monic modulus, low-degree coefficient first, `m + 1` entries. Empty for prime fields.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i` in `[0, 2(q-1))`.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<Elem>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Builds GF(q). See [`FieldSpec::new`].
pub fn make_field(q: u64) -> Result<FieldSpec, FieldError> {
    FieldSpec::new(q)
}

impl FieldSpec {
    /// Builds GF(q). For `m > 1` the modulus is the lexicographically smallest
    /// monic irreducible polynomial of degree `m`, comparing coefficients from
    /// the constant term upwards.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q < 2 {
            return Err(FieldError::InvalidOrder(q));
        }
        let (p, m) = prime_power(q).ok_or(FieldError::NotAPrimePower(q))?;
        if q > MAX_ORDER as u64 {
            return Err(FieldError::TooLarge(q));
        }
        let (q, p) = (q as u32, p as u32);
        let modulus = if m == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, m)
        };
        let mut field = FieldSpec {
            q,
            p,
            m,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add: None,
        };
        field.neg = (0..q).map(|a| field.neg_by_digits(a)).collect();
        if q <= DENSE_ADD_MAX {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_by_digits(a, b);
                }
            }
            field.add = Some(table);
        }
        field.build_log_tables();
        Ok(field)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let mut exp = vec![0; 2 * order as usize];
        let mut log = vec![0; q as usize];
        let mut seen = vec![false; q as usize];
        'candidates: for g in 1..q {
            if q > 2 && g == 1 {
                continue;
            }
            seen.iter_mut().for_each(|s| *s = false);
            let mut acc: Elem = 1;
            for i in 0..order {
                if seen[acc as usize] {
                    continue 'candidates;
                }
                seen[acc as usize] = true;
                exp[i as usize] = acc;
                log[acc as usize] = i;
                acc = self.mul_by_definition(acc, g);
            }
            for i in order..2 * order {
                exp[i as usize] = exp[(i - order) as usize];
            }
            self.exp = exp;
            self.log = log;
            return;
        }
        unreachable!("GF({q}) has no primitive element; modulus is not irreducible");
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Modulus coefficients, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn contains(&self, value: u64) -> bool {
        value < self.q as u64
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if !self.contains(value) {
            return Err(FieldError::ElementOutOfRange { value, q: self.q });
        }
        Ok(FieldElement {
            value: value as Elem,
            order: self.q,
        })
    }

    fn check(&self, a: FieldElement) -> Result<Elem, FieldError> {
        if a.order != self.q {
            return Err(FieldError::FieldMismatch {
                expected: self.q,
                found: a.order,
            });
        }
        Ok(a.value)
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement {
            value,
            order: self.q,
        }
    }

    pub fn arith(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: ArithOp,
    ) -> Result<FieldElement, FieldError> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        let value = match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        };
        Ok(self.wrap(value))
    }

    pub fn inv_element(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        self.inv(a).map(|v| self.wrap(v))
    }

    pub fn neg_element(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        Ok(self.wrap(self.neg(a)))
    }

    // Raw arithmetic. Callers guarantee operands are `< q`.

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        match &self.add {
            Some(table) => table[(a * self.q + b) as usize],
            None => self.add_by_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    fn digits(&self, mut a: Elem) -> Vec<u32> {
        let mut out = vec![0; self.m as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn compose(&self, digits: &[u32]) -> Elem {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_by_digits(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.compose(&sum)
    }

    fn neg_by_digits(&self, a: Elem) -> Elem {
        let d: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.compose(&d)
    }

    /// Schoolbook polynomial product reduced modulo the field modulus.
    pub fn mul_by_definition(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u64;
        if self.m == 1 {
            return ((a as u64 * b as u64) % p) as Elem;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
        for top in (m..prod.len()).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &c) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + lead * (p - c as u64)) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.compose(&digits)
    }

    fn check_len(u: &[Elem], v: &[Elem]) -> Result<(), FieldError> {
        if u.len() != v.len() {
            return Err(FieldError::LengthMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        Ok(())
    }

    fn check_vec(&self, v: &[Elem]) -> Result<(), FieldError> {
        match v.iter().find(|&&x| x >= self.q) {
            Some(&x) => Err(FieldError::ElementOutOfRange {
                value: x as u64,
                q: self.q,
            }),
            None => Ok(()),
        }
    }

    /// Componentwise sum.
    pub fn add_vec(&self, u: &[Elem], v: &[Elem]) -> Result<Vec<Elem>, FieldError> {
        Self::check_len(u, v)?;
        self.check_vec(u)?;
        self.check_vec(v)?;
        Ok(u.iter().zip(v).map(|(&a, &b)| self.add(a, b)).collect())
    }

    /// `alpha * v`.
    pub fn scale_vec(&self, alpha: FieldElement, v: &[Elem]) -> Result<Vec<Elem>, FieldError> {
        let alpha = self.check(alpha)?;
        self.check_vec(v)?;
        Ok(v.iter().map(|&a| self.mul(alpha, a)).collect())
    }

    /// `u += alpha * v` in place, unchecked.
    pub(crate) fn axpy(&self, u: &mut [Elem], alpha: Elem, v: &[Elem]) {
        if alpha == 0 {
            return;
        }
        for (x, &y) in u.iter_mut().zip(v) {
            *x = self.add(*x, self.mul(alpha, y));
        }
    }
}

/// Returns `(p, m)` with `q = p^m`, or `None` if `q` has two distinct prime factors.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..)
        .take_while(|d| d * d <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Coefficients of a polynomial over GF(p), constant term first.
type Poly = Vec<u32>;

fn poly_rem_is_zero(num: &[u32], den: &[u32], p: u32) -> bool {
    // `den` is monic.
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = den.len() - 1;
    for top in (dd..r.len()).rev() {
        let lead = r[top];
        if lead == 0 {
            continue;
        }
        for (i, &c) in den.iter().enumerate() {
            let idx = top - dd + i;
            r[idx] = (r[idx] + (p - lead) * c as u64) % p;
        }
    }
    r[..dd].iter().all(|&c| c == 0)
}

/// Monic polynomials of the given degree, in low-degree-first lexicographic order.
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Poly> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |t| {
        let mut coeffs = vec![0; degree as usize + 1];
        let mut rest = t;
        // Constant term is the most significant digit.
        for i in (0..degree as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[degree as usize] = 1;
        coeffs
    })
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|f| !poly_rem_is_zero(poly, &f, p)))
}

fn smallest_irreducible(p: u32, m: u32) -> Poly {
    monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
