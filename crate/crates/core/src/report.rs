//! JSON shapes. Every number is emitted as a decimal string so that no
//! consumer has to assume a native integer width.

use std::fmt::Display;

use serde::{Serialize, Serializer};

use crate::algebra::{Matrix, Polynomial, Ring, RingTag};

pub fn ser_decimal<S: Serializer, T: Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_decimal_vec<S: Serializer, T: Display>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixJson {
    #[serde(flatten)]
    pub ring: RingTag,
    pub rows: Vec<Vec<String>>,
}

impl<R: Ring> From<&Matrix<R>> for MatrixJson {
    fn from(m: &Matrix<R>) -> Self {
        MatrixJson {
            ring: R::tag(m.ctx()),
            rows: (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyJson {
    #[serde(flatten)]
    pub ring: RingTag,
    /// Constant term first.
    pub coefficients: Vec<String>,
    pub display: String,
}

impl<R: Ring> From<&Polynomial<R>> for PolyJson {
    fn from(p: &Polynomial<R>) -> Self {
        PolyJson {
            ring: R::tag(p.ctx()),
            coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
            display: p.to_string(),
        }
    }
}

/// Outcome of one claim on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Claim {
    Pass,
    Fail { detail: String },
    NotApplicable { reason: String },
}

impl Claim {
    pub fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Claim::Pass
        } else {
            Claim::Fail { detail: detail() }
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Claim::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Claim::Pass)
    }

    /// `Some(bool)` for decided claims, `None` when not applicable.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Claim::Pass => Some(true),
            Claim::Fail { .. } => Some(false),
            Claim::NotApplicable { .. } => None,
        }
    }
}

/// Serializes to a pretty JSON string with a trailing newline.
pub fn to_json_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}
