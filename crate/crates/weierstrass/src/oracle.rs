//! Independent brute-force construction of pole-vector semigroups from
//! monomial functions.
//!
//! Everything here is built only from the two generator families with known
//! divisors, y and the (x - alpha_j):
//!
//! ```text
//! div( y^c * prod_j (x - alpha_j)^{e_j} ) = (-ca - b*sum(e)) P_1
//!                                           + sum_j (c + b*e_j) P_j
//! ```
//!
//! A monomial whose divisor is nonnegative outside the chosen support
//! witnesses its pole part as a semigroup element. The closure of those pole
//! vectors under vector addition (function products) and least upper bounds
//! is a lower bound of the true semigroup; it is reported as such
//! (`certified = false`) except where a gap count proves exactness.

use crate::boxset::{
    additive_closure, lub_closure, lub_generating_closure, minimal_nabla_elements, BoxError,
    BoxSet, BoxShape,
};
use crate::curve::CurveParams;
use crate::hbox::SemigroupBox;
use crate::poset::PoleVector;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("support must be distinct point indices in 1..={max}, got {got:?}")]
    BadSupport { got: Vec<usize>, max: usize },
    #[error("bound length {got} does not match support length {want}")]
    BadBound { got: usize, want: usize },
    #[error("m = {m} out of range; need 2 <= m <= a+1 = {max}")]
    MOutOfRange { m: usize, max: usize },
    #[error(transparent)]
    Box(#[from] BoxError),
}

/// Exponent ranges and box for one enumeration run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// 1-based point indices, sorted and distinct.
    pub support: Vec<usize>,
    /// Per-support-coordinate pole bound.
    pub bound: Vec<u64>,
    /// y-exponent range [0, c_max].
    pub c_max: u64,
    /// (x - alpha_j)-exponent range [e_min, 0].
    pub e_min: i64,
}

impl OracleConfig {
    /// Ranges sufficient to realize every pole vector the monomial family can
    /// produce inside the box:
    ///
    /// - c in [0, a*(1 + max(bound))]: a y-power beyond that cannot keep P_1
    ///   inside the box once the e_j compensate, and negative c never deepens
    ///   a pole that nonnegative c cannot reach (replace y^b by the product
    ///   of all x - alpha_j, which has the same divisor);
    /// - e_j in [-((max(bound) + c_max)/b) - 1, 0]: a pole of order v at P_j
    ///   needs e_j = -(c + v)/b >= -((c_max + max(bound))/b); positive e_j
    ///   only adds zeros at P_j, and the pole it forces at P_1 is reachable
    ///   with e_j <= 0 by the same divisor rewrite.
    pub fn for_box(
        params: &CurveParams,
        support: Vec<usize>,
        bound: Vec<u64>,
    ) -> Result<Self, OracleError> {
        let max_pt = params.point_count();
        let sorted = support.windows(2).all(|w| w[0] < w[1]);
        if support.is_empty()
            || !sorted
            || support.iter().any(|&p| p == 0 || p > max_pt)
        {
            return Err(OracleError::BadSupport { got: support, max: max_pt });
        }
        if bound.len() != support.len() {
            return Err(OracleError::BadBound { got: bound.len(), want: support.len() });
        }
        let max_bound = bound.iter().copied().max().unwrap_or(0);
        let c_max = params.a() * (1 + max_bound);
        let e_min = -(((max_bound + c_max) / params.b()) as i64) - 1;
        Ok(OracleConfig { support, bound, c_max, e_min })
    }
}

fn ceil_div(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    n.div_euclid(d) + i64::from(n.rem_euclid(d) != 0)
}

/// Enumerate the distinct pole vectors (in support-coordinate order) of every
/// admissible monomial, calling `emit` once per vector occurrence.
///
/// The walk is over c plus one choice per support coordinate (its pole order,
/// or a pole-free exponent range); exponents of pole-free and out-of-support
/// coordinates only matter through their sum, which ranges over an interval.
/// This visits exactly the pole vectors the full exponent cross product
/// would, without materializing it.
fn enumerate_pole_vectors<F: FnMut(&[u64])>(
    params: &CurveParams,
    config: &OracleConfig,
    emit: &mut F,
) {
    let a = params.a() as i64;
    let b = params.b() as i64;
    let has_p1 = config.support[0] == 1;
    let tail_points: &[usize] = if has_p1 { &config.support[1..] } else { &config.support };
    let tail_bounds: &[u64] = if has_p1 { &config.bound[1..] } else { &config.bound };
    let bound1 = if has_p1 { config.bound[0] as i64 } else { 0 };
    // Points 2..=a+1 outside the support contribute free exponents only.
    let outside = (params.a() as usize) - tail_points.len();
    let mut tail = vec![0u64; tail_points.len()];
    let mut out = vec![0u64; config.support.len()];

    for c in 0..=config.c_max as i64 {
        let free_lo = config.e_min.max(-(c / b));
        let ca = c * a;
        let z_hi = (-ca).div_euclid(b);
        // Options per tail coordinate: (pole order, fixed exponent) plus the
        // pole-free choice encoded as order 0.
        let r = (b - c.rem_euclid(b)) % b;
        walk_tail(
            0,
            0,
            outside as i64,
            &mut tail,
            &mut |e_fixed: i64, n_free: i64, tail: &[u64]| {
                let e_hi = e_fixed;
                let e_lo = e_fixed + n_free * free_lo;
                if has_p1 {
                    if e_lo <= e_hi.min(z_hi) {
                        out[0] = 0;
                        out[1..].copy_from_slice(tail);
                        emit(&out);
                    }
                    let lo1 = e_lo.max(ceil_div(1 - ca, b));
                    let hi1 = e_hi.min((bound1 - ca).div_euclid(b));
                    for e in lo1..=hi1 {
                        out[0] = (ca + b * e) as u64;
                        out[1..].copy_from_slice(tail);
                        emit(&out);
                    }
                } else if e_lo <= e_hi.min(z_hi) {
                    emit(tail);
                }
            },
            &|coord: usize| -> Vec<(u64, i64, bool)> {
                // options for tail coordinate `coord`: (order, e_fixed, free?)
                let mut opts = vec![(0u64, 0i64, true)];
                let bj = tail_bounds[coord] as i64;
                let mut v = if r == 0 { b } else { r };
                while v <= bj {
                    let e = -((c + v) / b);
                    if e >= config.e_min {
                        opts.push((v as u64, e, false));
                    }
                    v += b;
                }
                opts
            },
        );
    }
}

/// Depth-first product over per-coordinate options.
fn walk_tail<F, G>(
    coord: usize,
    e_fixed: i64,
    n_free: i64,
    tail: &mut Vec<u64>,
    leaf: &mut F,
    options: &G,
) where
    F: FnMut(i64, i64, &[u64]),
    G: Fn(usize) -> Vec<(u64, i64, bool)>,
{
    if coord == tail.len() {
        leaf(e_fixed, n_free, tail);
        return;
    }
    for (v, e, free) in options(coord) {
        tail[coord] = v;
        walk_tail(
            coord + 1,
            e_fixed + e,
            n_free + i64::from(free),
            tail,
            leaf,
            options,
        );
    }
}

/// The distinct pole vectors of all admissible monomials, restricted to the
/// support and bounded by the box.
pub fn monomial_pole_vectors(
    params: &CurveParams,
    config: &OracleConfig,
) -> BTreeSet<PoleVector> {
    let mut set = BTreeSet::new();
    enumerate_pole_vectors(params, config, &mut |v: &[u64]| {
        set.insert(PoleVector::new(v.to_vec()));
    });
    set
}

/// Monomial pole vectors as a dense box set plus the distinct list.
fn pole_vector_seed(
    params: &CurveParams,
    config: &OracleConfig,
) -> Result<(std::sync::Arc<BoxShape>, Vec<Vec<u64>>), OracleError> {
    let shape = BoxShape::new(&config.bound)?;
    let mut seed = BoxSet::empty(&shape);
    enumerate_pole_vectors(params, config, &mut |v: &[u64]| seed.insert(v));
    let points: Vec<Vec<u64>> = seed.iter_points().collect();
    Ok((shape, points))
}

/// Closure of the monomial pole vectors under vector addition and lub within
/// the box, for an arbitrary support. Always reported uncertified: it is a
/// lower bound of the true semigroup by construction.
pub fn oracle_box_support(
    params: &CurveParams,
    support: &[usize],
    bound: &[u64],
) -> Result<SemigroupBox, OracleError> {
    let config = OracleConfig::for_box(params, support.to_vec(), bound.to_vec())?;
    let (shape, points) = pole_vector_seed(params, &config)?;
    let (additive, _coins) = lub_generating_closure(&shape, &points);
    let members = lub_closure(&additive);
    Ok(SemigroupBox::from_parts(members, false))
}

/// Closure for the standard support P_1..P_m.
pub fn oracle_box_semigroup(
    params: &CurveParams,
    m: usize,
    bound: &[u64],
) -> Result<SemigroupBox, OracleError> {
    check_m(params, m)?;
    if bound.len() != m {
        return Err(OracleError::BadBound { got: bound.len(), want: m });
    }
    let support: Vec<usize> = (1..=m).collect();
    oracle_box_support(params, &support, bound)
}

/// Minimal nabla_i elements (all coordinates positive) of the oracle box for
/// an arbitrary support.
pub fn oracle_gamma_support(
    params: &CurveParams,
    support: &[usize],
    bound: &[u64],
) -> Result<Vec<PoleVector>, OracleError> {
    let sbox = oracle_box_support(params, support, bound)?;
    let mins = minimal_nabla_elements(sbox.bitset());
    Ok(mins.iter_points().map(PoleVector::new).collect())
}

/// Minimal nabla_i elements of the oracle box for P_1..P_m; intended to
/// equal the closed-form enumeration whenever the bound dominates it.
pub fn oracle_gamma(
    params: &CurveParams,
    m: usize,
    bound: &[u64],
) -> Result<Vec<PoleVector>, OracleError> {
    check_m(params, m)?;
    if bound.len() != m {
        return Err(OracleError::BadBound { got: bound.len(), want: m });
    }
    let support: Vec<usize> = (1..=m).collect();
    oracle_gamma_support(params, &support, bound)
}

fn check_m(params: &CurveParams, m: usize) -> Result<(), OracleError> {
    let max = params.point_count();
    if m < 2 || m > max {
        return Err(OracleError::MOutOfRange { m, max });
    }
    Ok(())
}

/// An enumerated subsemigroup of H(P_l) with a gap-count certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedSemigroup {
    /// Minimal additive generators discovered within the bound.
    pub generators: Vec<u64>,
    /// Gap count of the generated semigroup; exact when `certified`, a
    /// truncated lower-bound count otherwise.
    pub gap_count: u64,
    /// True iff the gap count equals the genus, which forces equality with
    /// H(P_l) (a subsemigroup of it with the same number of gaps).
    pub certified: bool,
}

impl CertifiedSemigroup {
    /// Members of the generated semigroup in [0, bound].
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        let shape = BoxShape::new(&[bound]).expect("1-D box");
        let gens: Vec<Vec<u64>> = self.generators.iter().map(|&g| vec![g]).collect();
        let (closure, _) = additive_closure(&shape, &gens);
        closure.iter_points().map(|v| v[0]).collect()
    }
}

/// Additive closure of the monomial pole orders at P_l (l >= 2) up to
/// `bound`, certified exact iff its gap count equals the genus.
pub fn singleton_semigroup(
    params: &CurveParams,
    point: usize,
    bound: u64,
) -> Result<CertifiedSemigroup, OracleError> {
    let max_pt = params.point_count();
    if point < 2 || point > max_pt {
        return Err(OracleError::BadSupport { got: vec![point], max: max_pt });
    }
    let config = OracleConfig::for_box(params, vec![point], vec![bound])?;
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    enumerate_pole_vectors(params, &config, &mut |v: &[u64]| {
        orders.insert(v[0]);
    });
    orders.remove(&0);
    let genus = params.genus();
    let ab = params.a() * params.b();
    if orders.is_empty() {
        // Nothing realized: the closure is {0}; count gaps below a fixed
        // horizon so the count still dominates the genus.
        return Ok(CertifiedSemigroup { generators: vec![], gap_count: 2 * ab, certified: false });
    }
    let gens_in: Vec<Vec<u64>> = orders.iter().map(|&v| vec![v]).collect();
    let mut limit = bound.max(2 * ab);
    loop {
        let shape = BoxShape::new(&[limit]).expect("1-D box");
        let (closure, coins) = additive_closure(&shape, &gens_in);
        let generators: Vec<u64> = coins.iter().map(|c| c[0]).collect();
        let g = generators.iter().fold(0u64, |acc, &x| crate::curve::gcd(acc, x));
        let members: Vec<bool> = {
            let mut mask = vec![false; (limit + 1) as usize];
            for v in closure.iter_points() {
                mask[v[0] as usize] = true;
            }
            mask
        };
        if g != 1 {
            let gap_count = members.iter().skip(1).filter(|&&m| !m).count() as u64;
            return Ok(CertifiedSemigroup { generators, gap_count, certified: false });
        }
        let smallest = generators[0] as usize;
        let saturated = members[members.len() - smallest..].iter().all(|&m| m);
        if saturated {
            let gap_count = members.iter().skip(1).filter(|&&m| !m).count() as u64;
            let certified = gap_count == genus;
            return Ok(CertifiedSemigroup { generators, gap_count, certified });
        }
        if limit > (1 << 26) {
            let gap_count = members.iter().skip(1).filter(|&&m| !m).count() as u64;
            return Ok(CertifiedSemigroup { generators, gap_count, certified: false });
        }
        limit *= 2;
    }
}
