//! Box-bounded generation of H(P_1, ..., P_m) from subset generating sets.
//!
//! Every member of the semigroup inside a box is a least upper bound of
//! embedded generating-set elements of the sub-tuples (zero-padded to m
//! coordinates). Since a lub of any family equals a lub of at most m of its
//! members (one witness per coordinate), the member set is computed as the
//! lub closure of the embedded vectors.
//!
//! Subset generating sets come from a [`GammaProvider`]: the closed form for
//! tuples containing P_1, the one-point semigroup <a, b> for {P_1} itself,
//! and the monomial oracle otherwise. Oracle-supplied inputs that cannot be
//! gap-certified leave the box marked uncertified.

use crate::boxset::{lub_closure, minimal_nabla_elements, BoxError, BoxSet, BoxShape};
use crate::curve::CurveParams;
use crate::gamma::{enumerate_gamma, GammaError};
use crate::oracle::{oracle_gamma_support, singleton_semigroup, OracleError};
use crate::poset::PoleVector;
use crate::semigroup::OnePointSemigroup;
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HBoxError {
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Box(#[from] BoxError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("bound length {got} does not match m = {want}")]
    BadBound { got: usize, want: usize },
    #[error("vector {0} is not a member of the box")]
    NotAMember(PoleVector),
    #[error("m = {0} points means 2^m sub-tuples; refusing m > 24")]
    TooManyPoints(usize),
}

/// A box-truncated member set of H(P_1, ..., P_m).
#[derive(Debug, Clone)]
pub struct SemigroupBox {
    members: BoxSet,
    certified: bool,
    /// Sub-tuples whose generating set came from an uncertified oracle run.
    uncertified_subsets: Vec<Vec<usize>>,
}

impl SemigroupBox {
    pub(crate) fn from_parts(members: BoxSet, certified: bool) -> Self {
        SemigroupBox { members, certified, uncertified_subsets: Vec::new() }
    }

    /// The sub-tuples (1-based point indices) whose generating-set input was
    /// not certified exact; empty for fully certified boxes.
    pub fn uncertified_subsets(&self) -> &[Vec<usize>] {
        &self.uncertified_subsets
    }

    pub fn m(&self) -> usize {
        self.members.shape().m()
    }

    pub fn bound(&self) -> Vec<u64> {
        self.members.shape().bound()
    }

    /// True iff every generating-set input was exact (no uncertified oracle
    /// output went into the construction).
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn member_count(&self) -> u64 {
        self.members.count()
    }

    pub fn contains(&self, v: &PoleVector) -> bool {
        self.members.contains(v.coords())
    }

    pub fn contains_coords(&self, v: &[u64]) -> bool {
        self.members.contains(v)
    }

    /// Members in lexicographic order. Intended for small boxes; the count
    /// can be as large as the box itself.
    pub fn members(&self) -> impl Iterator<Item = PoleVector> + '_ {
        self.members.iter_points().map(PoleVector::new)
    }

    pub fn same_members(&self, other: &SemigroupBox) -> bool {
        self.members.same_members(&other.members)
    }

    pub(crate) fn bitset(&self) -> &BoxSet {
        &self.members
    }
}

/// A subset generating set: the vectors (in sub-tuple coordinate order,
/// truncated to the sub-box) plus an exactness flag.
#[derive(Debug, Clone)]
pub struct ProviderGamma {
    pub vectors: Vec<Vec<u64>>,
    pub certified: bool,
}

/// Supplies the generating set of every sub-tuple of points.
pub trait GammaProvider {
    fn subset_gamma(
        &self,
        params: &CurveParams,
        subset: &[usize],
        bound: &[u64],
    ) -> Result<ProviderGamma, HBoxError>;
}

/// Default provider: closed form where available, oracle elsewhere, with a
/// cache keyed by (contains P_1, subset size, bound). Points P_2..P_{a+1}
/// are interchangeable in the divisor relations, so equal-size subsets with
/// equal bounds share their generating set.
/// Cache key: (a, b, contains P_1, subset size, restricted bound). Points
/// P_2..P_{a+1} are interchangeable, so the subset itself is not needed.
type SubsetKey = (u64, u64, bool, usize, Vec<u64>);

#[derive(Default)]
pub struct DefaultGammaProvider {
    cache: Mutex<HashMap<SubsetKey, ProviderGamma>>,
}

impl DefaultGammaProvider {
    pub fn new() -> Self {
        Self::default()
    }
}

impl GammaProvider for DefaultGammaProvider {
    fn subset_gamma(
        &self,
        params: &CurveParams,
        subset: &[usize],
        bound: &[u64],
    ) -> Result<ProviderGamma, HBoxError> {
        assert_eq!(subset.len(), bound.len());
        let has_p1 = subset[0] == 1;
        let key = (params.a(), params.b(), has_p1, subset.len(), bound.to_vec());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let result = if subset == [1] {
            let semi = OnePointSemigroup::new(params);
            ProviderGamma {
                vectors: semi.members_up_to(bound[0]).into_iter().map(|n| vec![n]).collect(),
                certified: true,
            }
        } else if subset.len() == 1 {
            let cert = singleton_semigroup(params, subset[0], bound[0])?;
            ProviderGamma {
                vectors: cert.members_up_to(bound[0]).into_iter().map(|n| vec![n]).collect(),
                certified: cert.certified,
            }
        } else if has_p1 {
            let vectors = enumerate_gamma(params, subset.len())?
                .into_iter()
                .map(|g| g.coords)
                .filter(|v| v.iter().zip(bound).all(|(c, b)| c <= b))
                .collect();
            ProviderGamma { vectors, certified: true }
        } else {
            let vectors = oracle_gamma_support(params, subset, bound)?
                .into_iter()
                .map(|v| v.into_coords())
                .collect();
            ProviderGamma { vectors, certified: false }
        };
        self.cache.lock().unwrap().insert(key, result.clone());
        Ok(result)
    }
}

/// The default box bound (a*b on every coordinate), which dominates every
/// closed-form generating-set element.
pub fn default_bound(params: &CurveParams, m: usize) -> Vec<u64> {
    vec![params.a() * params.b(); m]
}

/// Generate the member set of H(P_1, ..., P_m) inside the box as the lub
/// closure of zero-padded subset generating sets.
pub fn generate_h_box<P: GammaProvider>(
    params: &CurveParams,
    m: usize,
    bound: &[u64],
    provider: &P,
) -> Result<SemigroupBox, HBoxError> {
    let max = params.point_count();
    if m < 2 || m > max {
        return Err(GammaError::MOutOfRange { m, max }.into());
    }
    if bound.len() != m {
        return Err(HBoxError::BadBound { got: bound.len(), want: m });
    }
    if m > 24 {
        return Err(HBoxError::TooManyPoints(m));
    }
    let shape = BoxShape::new(bound)?;
    let mut seed = BoxSet::empty(&shape);
    let mut uncertified = Vec::new();
    let mut embedded = vec![0u64; m];
    for mask in 1u64..(1 << m) {
        let subset: Vec<usize> = (0..m).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        let sub_bound: Vec<u64> = subset.iter().map(|&p| bound[p - 1]).collect();
        let pg = provider.subset_gamma(params, &subset, &sub_bound)?;
        if !pg.certified {
            uncertified.push(subset.clone());
        }
        for v in &pg.vectors {
            embedded.iter_mut().for_each(|c| *c = 0);
            for (k, &p) in subset.iter().enumerate() {
                embedded[p - 1] = v[k];
            }
            if shape.contains(&embedded) {
                seed.insert(&embedded);
            }
        }
    }
    let members = lub_closure(&seed);
    let mut sbox = SemigroupBox::from_parts(members, uncertified.is_empty());
    sbox.uncertified_subsets = uncertified;
    Ok(sbox)
}

/// True iff no other member below `v` shares its `axis` coordinate
/// (0-based axis).
pub fn is_minimal_in_nabla(
    v: &PoleVector,
    axis: usize,
    sbox: &SemigroupBox,
) -> Result<bool, HBoxError> {
    if !sbox.contains(v) {
        return Err(HBoxError::NotAMember(v.clone()));
    }
    let mut probe = vec![0u64; v.len()];
    Ok(!dominates_below(sbox, v.coords(), axis, 0, &mut probe))
}

fn dominates_below(
    sbox: &SemigroupBox,
    v: &[u64],
    axis: usize,
    coord: usize,
    probe: &mut Vec<u64>,
) -> bool {
    if coord == v.len() {
        return probe != v && sbox.contains_coords(probe);
    }
    if coord == axis {
        probe[coord] = v[coord];
        return dominates_below(sbox, v, axis, coord + 1, probe);
    }
    for c in 0..=v[coord] {
        probe[coord] = c;
        if dominates_below(sbox, v, axis, coord + 1, probe) {
            return true;
        }
    }
    false
}

/// All members with strictly positive coordinates that are minimal in
/// nabla_i for some i. Only elements inside the box bound are reported.
pub fn extract_minimal_generating(sbox: &SemigroupBox) -> Vec<PoleVector> {
    minimal_nabla_elements(sbox.bitset())
        .iter_points()
        .map(PoleVector::new)
        .collect()
}

/// All vectors below the bound that are not members.
pub fn gap_set_box(sbox: &SemigroupBox) -> Vec<PoleVector> {
    sbox.bitset().complement().iter_points().map(PoleVector::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: u64, b: u64) -> CurveParams {
        CurveParams::new(a, b).unwrap()
    }

    fn hbox(a: u64, b: u64, m: usize, bound: &[u64]) -> SemigroupBox {
        let p = params(a, b);
        generate_h_box(&p, m, bound, &DefaultGammaProvider::new()).unwrap()
    }

    fn pv(coords: &[u64]) -> PoleVector {
        PoleVector::new(coords.to_vec())
    }

    #[test]
    fn membership_examples_5_7() {
        let sbox = hbox(5, 7, 2, &[25, 25]);
        assert!(sbox.contains_coords(&[23, 1]));
        assert!(!sbox.contains_coords(&[23, 0]));
        assert!(sbox.contains_coords(&[0, 0]));
        assert!(sbox.contains_coords(&[5, 0]));
        assert!(sbox.contains_coords(&[7, 0]));
        assert!(sbox.contains_coords(&[23, 22])); // lub{(23,1),(2,22)}
        assert!(sbox.certified()); // m = 2: every input certified
    }

    #[test]
    fn extract_matches_closed_form() {
        let p = params(5, 7);
        let sbox = hbox(5, 7, 2, &[24, 23]);
        let got: Vec<PoleVector> = extract_minimal_generating(&sbox);
        let expect: Vec<PoleVector> = enumerate_gamma(&p, 2)
            .unwrap()
            .into_iter()
            .map(|g| g.to_pole_vector())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn extract_small_cases() {
        let sbox = hbox(3, 4, 2, &[12, 12]);
        let got: Vec<Vec<u64>> =
            extract_minimal_generating(&sbox).into_iter().map(|v| v.into_coords()).collect();
        assert_eq!(got, vec![vec![1, 5], vec![2, 2], vec![5, 1]]);

        let sbox = hbox(5, 7, 5, &[3, 2, 2, 2, 2]);
        let got: Vec<Vec<u64>> =
            extract_minimal_generating(&sbox).into_iter().map(|v| v.into_coords()).collect();
        assert_eq!(got, vec![vec![2, 1, 1, 1, 1]]);
    }

    #[test]
    fn minimality_examples() {
        let sbox = hbox(5, 7, 2, &[25, 25]);
        assert!(is_minimal_in_nabla(&pv(&[23, 1]), 0, &sbox).unwrap());
        assert!(is_minimal_in_nabla(&pv(&[23, 1]), 1, &sbox).unwrap());
        assert!(!is_minimal_in_nabla(&pv(&[23, 22]), 0, &sbox).unwrap());
        assert!(is_minimal_in_nabla(&pv(&[0, 0]), 0, &sbox).unwrap());
        assert!(is_minimal_in_nabla(&pv(&[0, 0]), 1, &sbox).unwrap());
        assert!(matches!(
            is_minimal_in_nabla(&pv(&[23, 0]), 0, &sbox),
            Err(HBoxError::NotAMember(_))
        ));
    }

    #[test]
    fn nabla_minimality_agrees_across_axes() {
        // Minimality in one nabla_i forces minimality in all of them for
        // vectors with every coordinate positive, checked exhaustively on two
        // small boxes. Members with a zero coordinate are excluded: (0,6) is
        // minimal in nabla_2 but sits above (0,0) in nabla_1.
        for (a, b, bound) in [(5u64, 7u64, vec![24u64, 23]), (3, 4, vec![12, 12])] {
            let sbox = hbox(a, b, 2, &bound);
            for v in sbox.members().filter(|v| v.all_positive()) {
                let m0 = is_minimal_in_nabla(&v, 0, &sbox).unwrap();
                let m1 = is_minimal_in_nabla(&v, 1, &sbox).unwrap();
                assert_eq!(m0, m1, "({a},{b}) at {v}");
            }
        }
    }

    #[test]
    fn gap_set_examples() {
        let sbox = hbox(5, 7, 2, &[25, 25]);
        let gaps = gap_set_box(&sbox);
        assert!(gaps.contains(&pv(&[1, 1])));
        assert!(!gaps.contains(&pv(&[0, 0])));
    }

    #[test]
    fn closure_under_lub_and_addition() {
        let sbox = hbox(3, 4, 2, &[12, 12]);
        let members: Vec<PoleVector> = sbox.members().collect();
        for u in &members {
            for v in &members {
                let l = crate::poset::lub(&[u.clone(), v.clone()]).unwrap();
                assert!(sbox.contains(&l), "lub of {u} and {v}");
                let s = u.add(v).unwrap();
                if s.coords().iter().zip(&sbox.bound()).all(|(c, b)| c <= b) {
                    assert!(sbox.contains(&s), "sum of {u} and {v}");
                }
            }
        }
    }

    #[test]
    fn uncertified_when_oracle_subsets_appear() {
        // m = 3 needs Gamma({P_2, P_3}), which only the oracle supplies; the
        // singleton inputs certify once the bound reaches the generator 17.
        let sbox = hbox(5, 7, 3, &[20, 20, 20]);
        assert!(!sbox.certified());
        assert_eq!(sbox.uncertified_subsets(), &[vec![2, 3]]);

        // A tiny bound also leaves the singletons uncertified (<6, 7> has
        // 15 gaps, not the genus 12).
        let sbox = hbox(5, 7, 3, &[10, 10, 10]);
        assert_eq!(sbox.uncertified_subsets(), &[vec![2], vec![3], vec![2, 3]]);

        let sbox = hbox(5, 7, 2, &[25, 25]);
        assert!(sbox.certified());
        assert!(sbox.uncertified_subsets().is_empty());
    }

    #[test]
    fn provider_cache_keys_on_curve() {
        // One provider serving two curves must not mix their entries.
        let provider = DefaultGammaProvider::new();
        let p1 = params(3, 4);
        let p2 = params(2, 3);
        let g1 = provider.subset_gamma(&p1, &[1, 2], &[12, 12]).unwrap();
        let g2 = provider.subset_gamma(&p2, &[1, 2], &[12, 12]).unwrap();
        let expect1: Vec<Vec<u64>> =
            enumerate_gamma(&p1, 2).unwrap().into_iter().map(|g| g.coords).collect();
        let expect2: Vec<Vec<u64>> =
            enumerate_gamma(&p2, 2).unwrap().into_iter().map(|g| g.coords).collect();
        assert_eq!(g1.vectors, expect1);
        assert_eq!(g2.vectors, expect2);
    }

    #[test]
    fn rejects_bad_arguments() {
        let p = params(5, 7);
        let provider = DefaultGammaProvider::new();
        assert!(matches!(
            generate_h_box(&p, 1, &[5], &provider),
            Err(HBoxError::Gamma(GammaError::MOutOfRange { .. }))
        ));
        assert!(matches!(
            generate_h_box(&p, 2, &[5], &provider),
            Err(HBoxError::BadBound { .. })
        ));
    }
}
