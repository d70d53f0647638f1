//! Finite fields, linear codes over them, and weight-aware bounds and
//! excluded-weight criteria for codes with given `[n, k, d]_q` parameters.

pub mod bounds;
pub mod code;
pub mod corpus;
pub mod exclusion;
pub mod gf;
pub mod properties;
pub mod reproduce;

pub use code::{CodeError, CodeParams, LinearCode};
pub use exclusion::{ExclusionCriterion, ExclusionReport, WeightSet};
pub use gf::{make_field, FieldError, FieldSpec};
