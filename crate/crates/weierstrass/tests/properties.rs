//! Property tests for the structural invariants.

use proptest::prelude::*;
use std::collections::{BTreeSet, HashSet};
use weierstrass::boxset::{lub_closure, lub_generating_closure, BoxShape, BoxSet};
use weierstrass::{
    enumerate_gamma, gamma_cardinality, lub, CurveParams, OnePointSemigroup, PoleVector,
    RelationLattice,
};

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (2u64..=9, 2u64..=16).prop_filter("coprime", |(a, b)| {
        num_gcd(*a, *b) == 1
    })
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gap_count_and_representations((a, b) in coprime_pair()) {
        let p = CurveParams::new(a, b).unwrap();
        let s = OnePointSemigroup::new(&p);
        let gaps = s.gaps();
        prop_assert_eq!(gaps.len() as u64, p.genus());
        for &n in &gaps {
            let rep = s.gap_representation(n).unwrap();
            prop_assert_eq!(a * b - rep.i * a - rep.j * b, n);
            prop_assert!((1..=b - 1).contains(&rep.i));
            prop_assert!((1..=a - 1).contains(&rep.j));
        }
    }

    #[test]
    fn membership_xor_gap((a, b) in coprime_pair(), n in 0u64..200) {
        let p = CurveParams::new(a, b).unwrap();
        let s = OnePointSemigroup::new(&p);
        let n = n % (2 * a * b + 1);
        if n == 0 {
            prop_assert!(s.contains(0));
        } else {
            prop_assert_ne!(s.contains(n), s.gap_representation(n).is_some());
        }
    }

    #[test]
    fn gamma_invariants((a, b) in coprime_pair(), m_seed in 0usize..8) {
        let p = CurveParams::new(a, b).unwrap();
        let m = 2 + m_seed % (p.point_count() - 1);
        let s = OnePointSemigroup::new(&p);
        let gamma = enumerate_gamma(&p, m).unwrap();
        prop_assert_eq!(gamma.len() as u64, gamma_cardinality(&p, m).unwrap());
        let set: BTreeSet<Vec<u64>> = gamma.iter().map(|g| g.coords.clone()).collect();
        prop_assert_eq!(set.len(), gamma.len());
        for g in &gamma {
            // first coordinate is a gap of <a, b>
            prop_assert!(!s.contains(g.coords[0]));
            // shared residue i mod b on the tail, first coordinate = -ia mod b
            if m >= 2 {
                let i = g.coords[1] % b;
                prop_assert!(i > 0);
                prop_assert!(g.coords[1..].iter().all(|&c| c % b == i));
                prop_assert_eq!((g.coords[0] + i * a) % b, 0);
                let sum: u64 = g.coords.iter().sum();
                prop_assert_eq!(sum, (a + 1 - m as u64) * (b - i));
            }
            // permuting the tail stays inside the set
            let mut w = g.coords.clone();
            w[1..].reverse();
            prop_assert!(set.contains(&w));
        }
    }

    #[test]
    fn lub_is_a_join(xs in proptest::collection::vec(proptest::collection::vec(0u64..50, 3), 1..6)) {
        let vs: Vec<PoleVector> = xs.iter().map(|v| PoleVector::new(v.clone())).collect();
        let l = lub(&vs).unwrap();
        for v in &vs {
            prop_assert!(v.le(&l));
        }
        // idempotent and order-insensitive
        let mut rev = vs.clone();
        rev.reverse();
        prop_assert_eq!(lub(&rev).unwrap(), l.clone());
        let mut doubled = vs.clone();
        doubled.extend(vs.iter().cloned());
        prop_assert_eq!(lub(&doubled).unwrap(), l);
    }

    #[test]
    fn equivalence_matches_congruence_oracle(
        (a, b) in coprime_pair(),
        coeffs in proptest::collection::vec(-9i64..=9, 2..8),
        balance in proptest::prelude::any::<bool>(),
    ) {
        let p = CurveParams::new(a, b).unwrap();
        let lattice = RelationLattice::new(&p);
        let n = p.point_count();
        let mut c = vec![0i64; n];
        for (k, &x) in coeffs.iter().enumerate() {
            c[1 + k % (n - 1)] += x;
        }
        // optionally make it degree zero, exercising both outcomes
        c[0] = if balance { -c[1..].iter().sum::<i64>() } else { 1 - c[1..].iter().sum::<i64>() };
        let d = weierstrass::FormalDivisor::from_coeffs(c);
        let zero = weierstrass::FormalDivisor::zero(n);
        let expected = d.degree() == 0 && {
            let r = d.coeffs()[1].rem_euclid(b as i64);
            d.coeffs()[1..].iter().all(|&x| x.rem_euclid(b as i64) == r)
        };
        prop_assert_eq!(lattice.is_equivalent(&d, &zero), expected);
    }

    #[test]
    fn or_coin_closure_matches_naive(
        bound in proptest::collection::vec(2u64..6, 1..4),
        coin_seed in proptest::collection::vec(0u64..4, 4),
        seeds in proptest::collection::vec(0u64..1000, 1..12),
    ) {
        let shape = BoxShape::new(&bound).unwrap();
        let m = bound.len();
        let coin: Vec<u64> = (0..m).map(|k| coin_seed[k % coin_seed.len()] % (bound[k] + 1)).collect();
        prop_assume!(coin.iter().any(|&c| c > 0));
        let cells: u64 = bound.iter().map(|&b| b + 1).product();
        let pts: Vec<Vec<u64>> = seeds
            .iter()
            .map(|s| {
                let mut idx = s % cells;
                let mut v = Vec::with_capacity(m);
                for &b in &bound {
                    v.push(idx % (b + 1));
                    idx /= b + 1;
                }
                v
            })
            .collect();
        let mut set = BoxSet::empty(&shape);
        for v in &pts {
            set.insert(v);
        }
        set.or_coin(&coin);
        let mut naive: HashSet<Vec<u64>> = pts.iter().cloned().collect();
        loop {
            let mut grew = false;
            for v in naive.iter().cloned().collect::<Vec<_>>() {
                let w: Vec<u64> = v.iter().zip(&coin).map(|(x, c)| x + c).collect();
                if shape.contains(&w) && naive.insert(w) {
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let got: HashSet<Vec<u64>> = set.iter_points().collect();
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn or_coin_multiword_lines_match_naive(
        last_bound in 60u64..180,
        first_bound in 1u64..4,
        step in 1u64..70,
        seeds in proptest::collection::vec(0u64..100_000, 1..10),
        first_step in 0u64..2,
    ) {
        // Lines longer than one word exercise the cross-word cascade.
        let bound = vec![first_bound, last_bound];
        let shape = BoxShape::new(&bound).unwrap();
        let coin = vec![first_step, step % (last_bound + 1)];
        prop_assume!(coin.iter().any(|&c| c > 0));
        let cells = (first_bound + 1) * (last_bound + 1);
        let pts: Vec<Vec<u64>> = seeds
            .iter()
            .map(|s| {
                let idx = s % cells;
                vec![idx / (last_bound + 1), idx % (last_bound + 1)]
            })
            .collect();
        let mut set = BoxSet::empty(&shape);
        for v in &pts {
            set.insert(v);
        }
        set.or_coin(&coin);
        let mut naive: HashSet<Vec<u64>> = pts.iter().cloned().collect();
        loop {
            let mut grew = false;
            for v in naive.iter().cloned().collect::<Vec<_>>() {
                let w: Vec<u64> = v.iter().zip(&coin).map(|(x, c)| x + c).collect();
                if shape.contains(&w) && naive.insert(w) {
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let got: HashSet<Vec<u64>> = set.iter_points().collect();
        prop_assert_eq!(got, naive);

        // dilation along the long axis on the same seed
        let mut d = BoxSet::empty(&shape);
        let mut naive_d: HashSet<Vec<u64>> = HashSet::new();
        for v in &pts {
            d.insert(v);
            let mut w = v.clone();
            while w[1] <= last_bound {
                naive_d.insert(w.clone());
                w[1] += 1;
            }
        }
        d.dilate_axis(1);
        let got_d: HashSet<Vec<u64>> = d.iter_points().collect();
        prop_assert_eq!(got_d, naive_d);
    }

    #[test]
    fn joint_closure_matches_naive_on_random_seeds(
        seeds in proptest::collection::vec(0u64..625, 1..10),
    ) {
        let bound = vec![4u64; 4];
        let shape = BoxShape::new(&bound).unwrap();
        let pts: Vec<Vec<u64>> = seeds
            .iter()
            .map(|s| {
                let mut idx = *s;
                (0..4)
                    .map(|_| {
                        let c = idx % 5;
                        idx /= 5;
                        c
                    })
                    .collect()
            })
            .collect();
        let (add, _) = lub_generating_closure(&shape, &pts);
        let closed = lub_closure(&add);

        let mut naive: Vec<Vec<u64>> = pts.clone();
        naive.push(vec![0; 4]);
        naive.sort();
        naive.dedup();
        let mut first = 0;
        while first < naive.len() {
            let mut next = 0;
            while next < naive.len() {
                let sum: Vec<u64> =
                    naive[first].iter().zip(&naive[next]).map(|(a, b)| a + b).collect();
                if shape.contains(&sum) && !naive.contains(&sum) {
                    naive.push(sum);
                }
                let l: Vec<u64> =
                    naive[first].iter().zip(&naive[next]).map(|(a, b)| *a.max(b)).collect();
                if !naive.contains(&l) {
                    naive.push(l);
                }
                next += 1;
            }
            first += 1;
        }
        let naive: HashSet<Vec<u64>> = naive.into_iter().collect();
        let got: HashSet<Vec<u64>> = closed.iter_points().collect();
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn certificates_pass_for_every_valid_index((a, b) in coprime_pair(), m_seed in 0usize..6, pick in 0usize..32) {
        let p = CurveParams::new(a, b).unwrap();
        let m = 2 + m_seed % (p.point_count() - 1);
        let indices = weierstrass::gamma::gamma_indices(&p, m).unwrap();
        prop_assume!(!indices.is_empty());
        let idx = &indices[pick % indices.len()];
        let chain = weierstrass::certificate::verify_equivalence_chain(&p, m, idx).unwrap();
        prop_assert!(chain.overall);
        let disc = weierstrass::certificate::verify_discrepancy_certificate(&p, m, idx).unwrap();
        prop_assert!(disc.overall);
    }
}
