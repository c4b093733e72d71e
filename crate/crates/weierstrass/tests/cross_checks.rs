//! Broader cross-construction sweeps than the fixed acceptance instances:
//! every coprime pair with a small product, all valid m, plus a large-b
//! two-point case.

use std::collections::BTreeSet;
use weierstrass::{
    enumerate_gamma, extract_minimal_generating, generate_h_box, oracle_box_semigroup,
    oracle_gamma, CurveParams, DefaultGammaProvider, PoleVector,
};

fn gamma_set(p: &CurveParams, m: usize) -> BTreeSet<Vec<u64>> {
    enumerate_gamma(p, m).unwrap().into_iter().map(|g| g.coords).collect()
}

#[test]
fn oracle_matches_closed_form_small_grid() {
    for a in 2..=6u64 {
        for b in 2..=13u64 {
            if a * b > 26 {
                continue;
            }
            let Ok(p) = CurveParams::new(a, b) else { continue };
            let provider = DefaultGammaProvider::new();
            for m in p.m_range() {
                let bound = vec![a * b; m];
                let oracle_box = oracle_box_semigroup(&p, m, &bound).unwrap();
                let got: BTreeSet<Vec<u64>> = extract_minimal_generating(&oracle_box)
                    .into_iter()
                    .map(PoleVector::into_coords)
                    .collect();
                assert_eq!(got, gamma_set(&p, m), "gamma a={a} b={b} m={m}");
                let h_box = generate_h_box(&p, m, &bound, &provider).unwrap();
                assert!(h_box.same_members(&oracle_box), "members a={a} b={b} m={m}");
            }
        }
    }
}

#[test]
fn oracle_matches_closed_form_large_b_two_points() {
    let p = CurveParams::hermitian_like(5, 3).unwrap();
    let bound = vec![630u64; 2];
    let got: BTreeSet<Vec<u64>> = oracle_gamma(&p, 2, &bound)
        .unwrap()
        .into_iter()
        .map(PoleVector::into_coords)
        .collect();
    let expect = gamma_set(&p, 2);
    assert_eq!(expect.len(), 250);
    assert_eq!(got, expect);
}

#[test]
fn off_p1_subset_gamma_invariants() {
    // Gamma(P_2, P_3) for (5,7) from the oracle: coordinates must be gaps of
    // H(P_2) = H(P_3) = <6,7,17>, and the set must be swap-symmetric. The
    // twelve elements are frozen from the deterministic closure.
    let p = CurveParams::new(5, 7).unwrap();
    let got: BTreeSet<Vec<u64>> =
        weierstrass::oracle::oracle_gamma_support(&p, &[2, 3], &[35, 35])
            .unwrap()
            .into_iter()
            .map(PoleVector::into_coords)
            .collect();
    let expected: BTreeSet<Vec<u64>> = [
        [1, 22], [2, 16], [3, 10], [4, 11], [5, 5], [8, 15],
        [9, 9], [10, 3], [11, 4], [15, 8], [16, 2], [22, 1],
    ]
    .into_iter()
    .map(|v| v.to_vec())
    .collect();
    assert_eq!(got, expected);
    let singleton_gaps: BTreeSet<u64> =
        [1, 2, 3, 4, 5, 8, 9, 10, 11, 15, 16, 22].into_iter().collect();
    for v in &got {
        assert!(v.iter().all(|c| singleton_gaps.contains(c)), "{v:?}");
        let swapped = vec![v[1], v[0]];
        assert!(got.contains(&swapped), "swap of {v:?}");
    }
}
