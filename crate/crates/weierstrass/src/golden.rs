//! Embedded reference tables for the worked examples, and the set
//! comparison used by the `reproduce` command.
//!
//! Tables are stored in their original listing order for display; all
//! comparisons are as sets. The (5, 126) table is stored as four arithmetic
//! progressions and expanded on demand.

use crate::curve::CurveParams;
use crate::gamma::enumerate_gamma;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A named expected table for Gamma(P_1, ..., P_m) of one curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub name: String,
    pub a: u64,
    pub b: u64,
    pub m: usize,
    pub vectors: Vec<Vec<u64>>,
}

pub const GAMMA_5_7_M2: [[u64; 2]; 12] = [
    [23, 1], [18, 2], [13, 3], [8, 4], [3, 5], [16, 8],
    [11, 9], [6, 10], [1, 11], [9, 15], [4, 16], [2, 22],
];

pub const GAMMA_5_7_M3: [[u64; 3]; 11] = [
    [2, 8, 8], [2, 15, 1], [2, 1, 15], [9, 8, 1], [9, 1, 8],
    [4, 9, 2], [4, 2, 9], [16, 1, 1], [11, 2, 2], [6, 3, 3], [1, 4, 4],
];

pub const GAMMA_5_7_M4: [[u64; 4]; 5] =
    [[2, 8, 1, 1], [2, 1, 8, 1], [2, 1, 1, 8], [9, 1, 1, 1], [4, 2, 2, 2]];

pub const GAMMA_5_7_M5: [[u64; 5]; 1] = [[2, 1, 1, 1, 1]];

/// The 125-element Gamma(P_1..P_4) for (a, b) = (5, 126) as four arithmetic
/// progressions start + i * (-5, 1, 1, 1).
pub const GAMMA_5_126_M4_FAMILIES: [([i64; 4], u64); 4] = [
    ([126, 0, 0, 126], 25),
    ([126, 0, 126, 0], 25),
    ([126, 126, 0, 0], 25),
    ([252, 0, 0, 0], 50),
];

pub fn expand_families() -> Vec<Vec<u64>> {
    let step = [-5i64, 1, 1, 1];
    let mut out = Vec::with_capacity(125);
    for (start, count) in GAMMA_5_126_M4_FAMILIES {
        for i in 1..=count as i64 {
            out.push(
                start
                    .iter()
                    .zip(step)
                    .map(|(s, d)| u64::try_from(s + i * d).expect("family entry nonnegative"))
                    .collect(),
            );
        }
    }
    out
}

/// Membership of a vector in family `k` (0-based): start + i * step for some
/// admissible i.
pub fn family_member(k: usize, v: &[u64]) -> bool {
    let (start, count) = GAMMA_5_126_M4_FAMILIES[k];
    let step = [-5i64, 1, 1, 1];
    (1..=count as i64).any(|i| {
        start
            .iter()
            .zip(step)
            .zip(v)
            .all(|((s, d), &c)| s + i * d == c as i64)
    })
}

/// The five embedded tables.
pub fn embedded_tables() -> Vec<GoldenTable> {
    let mut tables = vec![
        GoldenTable {
            name: "gamma_5_7_m2".into(),
            a: 5,
            b: 7,
            m: 2,
            vectors: GAMMA_5_7_M2.iter().map(|v| v.to_vec()).collect(),
        },
        GoldenTable {
            name: "gamma_5_7_m3".into(),
            a: 5,
            b: 7,
            m: 3,
            vectors: GAMMA_5_7_M3.iter().map(|v| v.to_vec()).collect(),
        },
        GoldenTable {
            name: "gamma_5_7_m4".into(),
            a: 5,
            b: 7,
            m: 4,
            vectors: GAMMA_5_7_M4.iter().map(|v| v.to_vec()).collect(),
        },
        GoldenTable {
            name: "gamma_5_7_m5".into(),
            a: 5,
            b: 7,
            m: 5,
            vectors: GAMMA_5_7_M5.iter().map(|v| v.to_vec()).collect(),
        },
    ];
    tables.push(GoldenTable {
        name: "gamma_5_126_m4".into(),
        a: 5,
        b: 126,
        m: 4,
        vectors: expand_families(),
    });
    tables
}

/// Outcome of one table comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableReport {
    pub name: String,
    pub pass: bool,
    pub expected: usize,
    pub computed: usize,
    /// Expected vectors the computation did not produce.
    pub missing: Vec<Vec<u64>>,
    /// Computed vectors absent from the table.
    pub extra: Vec<Vec<u64>>,
}

/// Recompute each table from (a, b, m) and compare as sets.
pub fn check_tables(tables: &[GoldenTable]) -> Vec<TableReport> {
    tables
        .iter()
        .map(|t| {
            let expected: BTreeSet<Vec<u64>> = t.vectors.iter().cloned().collect();
            let computed: BTreeSet<Vec<u64>> = CurveParams::new(t.a, t.b)
                .ok()
                .and_then(|p| enumerate_gamma(&p, t.m).ok())
                .map(|gs| gs.into_iter().map(|g| g.coords).collect())
                .unwrap_or_default();
            let missing: Vec<Vec<u64>> = expected.difference(&computed).cloned().collect();
            let extra: Vec<Vec<u64>> = computed.difference(&expected).cloned().collect();
            TableReport {
                name: t.name.clone(),
                pass: missing.is_empty() && extra.is_empty(),
                expected: expected.len(),
                computed: computed.len(),
                missing,
                extra,
            }
        })
        .collect()
}

/// Check the five embedded tables.
pub fn reproduce() -> Vec<TableReport> {
    check_tables(&embedded_tables())
}
