//! Cross-verification sweeps: certificates for every admissible index,
//! oracle vs closed-form generating sets, singleton certification, and
//! equality of the two box constructions.

use crate::certificate::{verify_discrepancy_certificate, verify_equivalence_chain};
use crate::curve::CurveParams;
use crate::gamma::{enumerate_gamma, gamma_indices};
use crate::hbox::{generate_h_box, DefaultGammaProvider, HBoxError};
use crate::oracle::{oracle_box_semigroup, oracle_gamma, singleton_semigroup};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub overall: bool,
}

fn outcome(name: String, pass: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name, pass, detail }
}

/// Run the full sweep for m in [m_lo, m_hi] with a uniform per-coordinate
/// bound (defaults to a*b).
pub fn verify_all(
    params: &CurveParams,
    m_lo: usize,
    m_hi: usize,
    bound_value: Option<u64>,
) -> Result<VerifyReport, HBoxError> {
    let bound_value = bound_value.unwrap_or(params.a() * params.b());
    let mut checks = Vec::new();

    for m in m_lo..=m_hi {
        let indices = gamma_indices(params, m)?;
        let total = indices.len();
        let mut chain_fail = 0usize;
        let mut disc_fail = 0usize;
        for idx in &indices {
            if !verify_equivalence_chain(params, m, idx)?.overall {
                chain_fail += 1;
            }
            if !verify_discrepancy_certificate(params, m, idx)?.overall {
                disc_fail += 1;
            }
        }
        checks.push(outcome(
            format!("equivalence chain m={m}"),
            chain_fail == 0,
            format!("{}/{} indices pass", total - chain_fail, total),
        ));
        checks.push(outcome(
            format!("discrepancy certificates m={m}"),
            disc_fail == 0,
            format!("{}/{} indices pass", total - disc_fail, total),
        ));
    }

    for point in 2..=params.point_count() {
        let cert = singleton_semigroup(params, point, bound_value)?;
        checks.push(outcome(
            format!("singleton H(P_{point}) certified"),
            cert.certified,
            format!("generators {:?}, {} gaps (genus {})", cert.generators, cert.gap_count, params.genus()),
        ));
    }

    let provider = DefaultGammaProvider::new();
    for m in m_lo..=m_hi {
        let bound = vec![bound_value; m];
        let closed: BTreeSet<Vec<u64>> = enumerate_gamma(params, m)?
            .into_iter()
            .map(|g| g.coords)
            .collect();
        let from_oracle: BTreeSet<Vec<u64>> = oracle_gamma(params, m, &bound)?
            .into_iter()
            .map(|v| v.into_coords())
            .collect();
        checks.push(outcome(
            format!("oracle gamma = closed form m={m}"),
            from_oracle == closed,
            format!("{} oracle vs {} closed-form elements", from_oracle.len(), closed.len()),
        ));

        let oracle_box = oracle_box_semigroup(params, m, &bound)?;
        let h_box = generate_h_box(params, m, &bound, &provider)?;
        checks.push(outcome(
            format!("lub construction = oracle closure m={m}"),
            h_box.same_members(&oracle_box),
            format!(
                "{} vs {} members (certified: {})",
                h_box.member_count(),
                oracle_box.member_count(),
                h_box.certified()
            ),
        ));
    }

    let overall = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { checks, overall })
}
