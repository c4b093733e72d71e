//! The coordinatewise partial order on N_0^m and least upper bounds.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of N_0^m: a candidate or confirmed member of H(P_1, ..., P_m).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PoleVector(Vec<u64>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("vector length mismatch: expected {expected}, got {got}")]
pub struct LengthMismatch {
    pub expected: usize,
    pub got: usize,
}

impl PoleVector {
    pub fn new(coords: Vec<u64>) -> Self {
        PoleVector(coords)
    }

    pub fn zeros(m: usize) -> Self {
        PoleVector(vec![0; m])
    }

    pub fn uniform(m: usize, value: u64) -> Self {
        PoleVector(vec![value; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    /// Componentwise <=.
    pub fn le(&self, other: &PoleVector) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    /// Strictly below: <= and not equal.
    pub fn lt(&self, other: &PoleVector) -> bool {
        self.le(other) && self != other
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &PoleVector) -> Result<PoleVector, LengthMismatch> {
        check_len(self, other)?;
        Ok(PoleVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect()))
    }
}

impl fmt::Display for PoleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_len(a: &PoleVector, b: &PoleVector) -> Result<(), LengthMismatch> {
    if a.len() != b.len() {
        return Err(LengthMismatch { expected: a.len(), got: b.len() });
    }
    Ok(())
}

/// Coordinatewise maximum of a nonempty list of equal-length vectors.
pub fn lub(vectors: &[PoleVector]) -> Result<PoleVector, LengthMismatch> {
    let first = vectors.first().expect("lub of a nonempty list");
    let mut out = first.0.clone();
    for v in &vectors[1..] {
        check_len(first, v)?;
        for (o, &c) in out.iter_mut().zip(&v.0) {
            *o = (*o).max(c);
        }
    }
    Ok(PoleVector(out))
}
