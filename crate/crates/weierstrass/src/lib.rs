//! Multi-point Weierstrass semigroups for curves with plane model
//! f(y) = g(x).
//!
//! Given coprime degrees (a, b), the curve carries a+1 labeled points with
//! the divisor relations a P_1 ~ P_2 + ... + P_{a+1} and b P_i ~ b P_j, and
//! H(P_1) = <a, b>. This crate computes, exactly and with no field
//! arithmetic:
//!
//! - the one-point semigroup, its gaps and their (i, j) representations
//!   ([`semigroup`]);
//! - the minimal generating set Gamma(P_1, ..., P_m) in closed form
//!   ([`gamma`]);
//! - box-truncated member sets of H(P_1, ..., P_m) by lub closure of subset
//!   generating sets ([`hbox`]) and independently by brute-force closure of
//!   monomial pole vectors ([`oracle`]);
//! - the symbolic divisor calculus and the discrepancy certificates behind
//!   the closed form ([`divisor`], [`certificate`]);
//! - cross-checks tying all of the above together ([`verify`], [`golden`]).
//!
//! The dense closure kernels run data-parallel with rayon by default; build
//! with `--no-default-features` for a sequential build, or switch at runtime
//! through [`exec::set_mode`].

pub mod boxset;
pub mod certificate;
pub mod curve;
pub mod divisor;
pub mod exec;
pub mod gamma;
pub mod golden;
pub mod hbox;
mod lattice;
pub mod oracle;
pub mod poset;
pub mod semigroup;
pub mod verify;

pub use certificate::{CertCheck, CertificateReport};
pub use curve::{CurveError, CurveParams, Preset};
pub use divisor::{canonical_divisor, FormalDivisor, MonomialFunction, RelationLattice};
pub use gamma::{enumerate_gamma, gamma_cardinality, gamma_element, GammaError, GammaIndex, GammaVector};
pub use hbox::{
    default_bound, extract_minimal_generating, gap_set_box, generate_h_box, is_minimal_in_nabla,
    DefaultGammaProvider, GammaProvider, HBoxError, ProviderGamma, SemigroupBox,
};
pub use oracle::{
    monomial_pole_vectors, oracle_box_semigroup, oracle_gamma, singleton_semigroup,
    CertifiedSemigroup, OracleConfig, OracleError,
};
pub use poset::{lub, PoleVector};
pub use semigroup::{GapRep, OnePointSemigroup};
pub use verify::{verify_all, CheckOutcome, VerifyReport};
