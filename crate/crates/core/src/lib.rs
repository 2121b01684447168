//! Exact computations on two-dimensional cyclic quotient singularities
//! `Y(n,q)`: Hirzebruch–Jung continued fractions, Hilbert bases, minimal and
//! maximal toric resolutions with discrepancies, and the P-resolutions (and
//! their M-resolutions) indexed by chains representing zero.
//!
//! ```
//! use cqsres_core::{enumerate_presolutions, CyclicQuotient};
//!
//! let y = CyclicQuotient::new(19, 7).unwrap();
//! let records = enumerate_presolutions(&y).unwrap();
//! assert_eq!(records.len(), 3);
//! ```

pub mod contfrac;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod oracle;
pub mod presolutions;
pub mod resolutions;
pub mod sweep;

pub use contfrac::{
    all_triangulations, chain_from_triangulation, dual_chain, enumerate_zero_chains, eval_cf, expand_hj, is_zero_chain,
    q_sequence, zero_chains_bounded, CfValue, Chain, QSequence, Triangulation,
};
pub use error::{Error, Result};
pub use invariants::{
    cone_of, invariants, normal_form, roof, t_classify, CqsInvariants, CyclicQuotient, NormalForm, Roof, TType,
};
pub use lattice::{
    det2, dual_cone, hilbert_basis, hilbert_basis_dual, interior_lattice_points, interior_primitive_points, pairing,
    primitive, Cone2, DualCone2, ExactRational, MVector, NVector, RVector,
};
pub use presolutions::{
    admissible_chains, build_presolution, enumerate_presolutions, m_resolution, milnor_numbers, verify_presolution,
    ConeRecord, PResolutionRecord, VerificationReport,
};
pub use resolutions::{
    discrepancies, maximal_resolution, maximal_resolution_iterative, minimal_resolution, roof_sign, self_intersections,
    DiscrepancyData, Fan, RoofSign,
};
