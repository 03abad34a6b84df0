//! Executable forms of the structural claims about transition matrices.

mod checks;
mod instance;
mod prop1;
mod witness;

pub use checks::{
    geometric_sum_check, lemma3_residues, odd_coefficients_check, petrie_check,
    z2_similarity_to_companion, zp_similarity,
};
pub use instance::{
    verify_instance, Claims, InstanceId, InstanceReport, VerifyOptions, WitnessMode,
    WitnessReport,
};
pub use prop1::{
    apply_row_ops, prop1_case1_check, prop1_case2_check, Prop1Outcome, RowDerivation, RowOp,
};
pub use witness::{basis_witness, coprime_pairs, BasisWitness};
