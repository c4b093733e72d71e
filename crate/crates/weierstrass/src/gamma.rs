//! Closed-form enumeration of the minimal generating set Gamma(P_1, ..., P_m).
//!
//! For tuples starting at P_1 the minimal generating set is exactly
//!
//! ```text
//! { (tb - ia, s_2 b + i, ..., s_m b + i) :
//!       t + s_2 + ... + s_m = a + 1 - m,  0 < ia < tb,  s_j >= 0 }
//! ```
//!
//! so enumeration reduces to walking compositions of a+1-m and the finitely
//! many admissible i per t. For m = a+1 the index set is empty and so is the
//! set. m = 1 is excluded here: Gamma(P_1) = H(P_1) is infinite and handled
//! by [`crate::semigroup`].

use crate::curve::CurveParams;
use crate::poset::PoleVector;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Errors from index validation and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("m = {m} out of range; need 2 <= m <= a+1 = {max}")]
    MOutOfRange { m: usize, max: usize },
    #[error("index constraint t + sum(s_j) = a+1-m violated: t={t}, sum={sum}, need {need}")]
    CompositionViolated { t: u64, sum: u64, need: u64 },
    #[error("index constraint 0 < ia < tb violated: i*a = {ia}, t*b = {tb}")]
    SlopeViolated { ia: u64, tb: u64 },
}

/// An admissible index (t, i, s_2..s_m): t + sum(s_j) = a+1-m and 0 < ia < tb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaIndex {
    pub t: u64,
    pub i: u64,
    /// s_2, ..., s_m (length m-1).
    pub s: Vec<u64>,
}

impl GammaIndex {
    pub fn new(t: u64, i: u64, s: Vec<u64>) -> Self {
        GammaIndex { t, i, s }
    }

    pub fn m(&self) -> usize {
        self.s.len() + 1
    }

    /// Check both defining constraints against (a, b, m).
    pub fn validate(&self, params: &CurveParams, m: usize) -> Result<(), GammaError> {
        check_m(params, m)?;
        if self.s.len() != m - 1 {
            return Err(GammaError::CompositionViolated {
                t: self.t,
                sum: self.s.iter().sum(),
                need: params.a() + 1 - m as u64,
            });
        }
        let need = params.a() + 1 - m as u64;
        let sum: u64 = self.s.iter().sum();
        if self.t + sum != need || self.t == 0 {
            return Err(GammaError::CompositionViolated { t: self.t, sum, need });
        }
        let ia = self.i * params.a();
        let tb = self.t * params.b();
        if self.i == 0 || ia >= tb {
            return Err(GammaError::SlopeViolated { ia, tb });
        }
        Ok(())
    }
}

/// An element of Gamma(P_1, ..., P_m); all coordinates strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaVector {
    pub coords: Vec<u64>,
}

impl GammaVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.coords
    }

    pub fn to_pole_vector(&self) -> PoleVector {
        PoleVector::new(self.coords.clone())
    }
}

fn check_m(params: &CurveParams, m: usize) -> Result<(), GammaError> {
    let max = params.point_count();
    if m < 2 || m > max {
        return Err(GammaError::MOutOfRange { m, max });
    }
    Ok(())
}

/// The vector (tb - ia, s_2 b + i, ..., s_m b + i) for a valid index.
pub fn gamma_element(
    params: &CurveParams,
    m: usize,
    idx: &GammaIndex,
) -> Result<GammaVector, GammaError> {
    idx.validate(params, m)?;
    let (a, b) = (params.a(), params.b());
    let mut coords = Vec::with_capacity(m);
    coords.push(idx.t * b - idx.i * a);
    for &sj in &idx.s {
        coords.push(sj * b + idx.i);
    }
    debug_assert!(coords.iter().all(|&c| c > 0));
    Ok(GammaVector { coords })
}

/// Walk every admissible index for (a, b, m).
pub fn gamma_indices(params: &CurveParams, m: usize) -> Result<Vec<GammaIndex>, GammaError> {
    check_m(params, m)?;
    let (a, b) = (params.a(), params.b());
    let budget = a + 1 - m as u64;
    let mut out = Vec::new();
    for t in 1..=budget {
        // 0 < ia < tb  <=>  1 <= i <= ceil(tb/a) - 1 = floor((tb-1)/a)
        let i_max = (t * b - 1) / a;
        let mut comps = Vec::new();
        compositions(budget - t, m - 1, &mut Vec::new(), &mut comps);
        for s in comps {
            for i in 1..=i_max {
                out.push(GammaIndex { t, i, s: s.clone() });
            }
        }
    }
    Ok(out)
}

/// All weak compositions of `total` into `parts` nonnegative parts.
fn compositions(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// The full set Gamma(P_1, ..., P_m), in lexicographic order on coordinates.
pub fn enumerate_gamma(params: &CurveParams, m: usize) -> Result<Vec<GammaVector>, GammaError> {
    let set: BTreeSet<GammaVector> = gamma_indices(params, m)?
        .iter()
        .map(|idx| gamma_element(params, m, idx).expect("enumerated index is valid"))
        .collect();
    Ok(set.into_iter().collect())
}

/// |Gamma(P_1, ..., P_m)| without materializing the set:
/// sum over t of (compositions of a+1-m-t into m-2+1 parts) * floor((tb-1)/a).
pub fn gamma_cardinality(params: &CurveParams, m: usize) -> Result<u64, GammaError> {
    check_m(params, m)?;
    let (a, b) = (params.a(), params.b());
    let budget = a + 1 - m as u64;
    let mut total = 0u64;
    for t in 1..=budget {
        let comps = binomial(budget - t + m as u64 - 2, m as u64 - 2);
        total += comps * ((t * b - 1) / a);
    }
    Ok(total)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for idx in 0..k {
        acc = acc * (n - idx) / (idx + 1);
    }
    acc
}
