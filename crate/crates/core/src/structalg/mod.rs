//! Algebras given by structure constants: identities, derivations, invariant forms.

mod checks;
mod derivations;
mod forms;
mod subalg;
mod table;

pub use checks::{check_jordan, check_lie, is_automorphism, AxiomReport};
pub use derivations::{derivations, is_derivation, DerivationAlgebra};
pub use forms::{gram_matrix, killing_form, killing_ratio, killing_signature, proportionality, twist_z2};
pub use subalg::{
    center, closure, derived_algebra, ideal_generated, is_semisimple_element, simplicity_evidence,
    SimplicityEvidence, Subspace,
};
pub use table::{change_basis, to_dense, to_sparse, AlgebraKind, AlgebraTable, AlgebraTableJson, SparseVec};
