//! Curve parameters for plane models of the form f(y) = g(x).
//!
//! A curve here is described purely by the pair (a, b) of coprime degrees:
//! `a` rational points P_2, ..., P_{a+1} together with the point P_1 satisfy
//! the divisor relations aP_1 ~ P_2 + ... + P_{a+1} and bP_i ~ bP_j, and the
//! one-point semigroup at P_1 is <a, b>. Points are abstract labels; no field
//! arithmetic is performed anywhere in this crate.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors raised while validating curve parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("degrees must be coprime: gcd({a}, {b}) = {gcd}")]
    NotCoprime { a: u64, b: u64, gcd: u64 },
    #[error("degree {name} must be at least 2, got {value}")]
    DegreeTooSmall { name: &'static str, value: u64 },
    #[error("parameters too large: a*b = {a}*{b} exceeds the supported range")]
    TooLarge { a: u64, b: u64 },
    #[error("invalid preset: {0}")]
    BadPreset(String),
}

/// Optional preset metadata carried along with (a, b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    /// The family y^q + y = x^{q^r + 1} with r odd, giving (a, b) = (q, q^r + 1).
    HermitianLike { q: u64, r: u64 },
}

/// The pair (a, b) with gcd(a, b) = 1, plus the genus (a-1)(b-1)/2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveParams {
    a: u64,
    b: u64,
    genus: u64,
    preset: Option<Preset>,
}

/// Largest allowed product a*b. Keeps every derived quantity comfortably
/// inside i64/u64 arithmetic (divisor coefficients, box bounds, gap values).
const MAX_PRODUCT: u64 = 1 << 31;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

impl CurveParams {
    /// Validate and construct parameters for a curve with plane model
    /// f(y) = g(x), deg f = a, deg g = b.
    pub fn new(a: u64, b: u64) -> Result<Self, CurveError> {
        if a < 2 {
            return Err(CurveError::DegreeTooSmall { name: "a", value: a });
        }
        if b < 2 {
            return Err(CurveError::DegreeTooSmall { name: "b", value: b });
        }
        let g = gcd(a, b);
        if g != 1 {
            return Err(CurveError::NotCoprime { a, b, gcd: g });
        }
        match a.checked_mul(b) {
            Some(p) if p <= MAX_PRODUCT => {}
            _ => return Err(CurveError::TooLarge { a, b }),
        }
        // (a-1)(b-1) is even: a and b are coprime so not both even,
        // and if both odd the product of the two even numbers a-1, b-1 is even.
        let genus = (a - 1) * (b - 1) / 2;
        Ok(CurveParams { a, b, genus, preset: None })
    }

    /// Parameters of the quotient-Hermitian family y^q + y = x^{q^r + 1},
    /// i.e. (a, b) = (q, q^r + 1). Requires odd r.
    pub fn hermitian_like(q: u64, r: u64) -> Result<Self, CurveError> {
        if r == 0 || r.is_multiple_of(2) {
            return Err(CurveError::BadPreset(format!(
                "hermitian-like preset needs odd r >= 1, got r = {r}"
            )));
        }
        if q < 2 {
            return Err(CurveError::BadPreset(format!(
                "hermitian-like preset needs q >= 2, got q = {q}"
            )));
        }
        let qr = (0..r).try_fold(1u64, |acc, _| acc.checked_mul(q));
        let b = qr
            .and_then(|p| p.checked_add(1))
            .ok_or(CurveError::TooLarge { a: q, b: u64::MAX })?;
        let mut params = CurveParams::new(q, b)?;
        params.preset = Some(Preset::HermitianLike { q, r });
        Ok(params)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// The genus (a-1)(b-1)/2.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn preset(&self) -> Option<&Preset> {
        self.preset.as_ref()
    }

    /// Number of labeled points P_1, ..., P_{a+1}.
    pub fn point_count(&self) -> usize {
        self.a as usize + 1
    }

    /// Valid tuple lengths for the multi-point semigroup: 2 <= m <= a+1.
    pub fn m_range(&self) -> std::ops::RangeInclusive<usize> {
        2..=self.point_count()
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, genus={})", self.a, self.b, self.genus)
    }
}
