//! Fermionic Fock spaces `H_{m,d}` over the rationals: Slater determinants,
//! creation and annihilation operators, the spin action and its invariants,
//! and the excitation operators realizing the excitation ring.

mod invariants;
mod linalg;
mod operator;
mod space;

pub use invariants::{
    anticommutation_failures, apply_to_reference, evaluate_on_operators, excitation_basis,
    excitation_span_report, invariant_dimension, invariant_subspace, invariant_subspace_with_budget,
    particle_hole, particle_hole_map, particle_hole_preserves_invariant_support, reference_state, support,
    verify_cubic_relations, verify_fock, verify_fock_with_progress, CubicRelationReport,
    ExcitationBasisElement, FockCheck, FockReport, SpanReport,
};
pub use linalg::{rank, Echelon, SparseRow};
pub use operator::{annihilation, creation, excitation_operator, sl2_action, LinearOperator, Sl2Generator};
pub use space::{
    fock_dimension, slater_basis, slater_basis_with_budget, SlaterBasisVector, Spin, SpinOrbital,
    StateVector, MAX_ORBITALS,
};
