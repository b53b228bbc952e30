//! Exact integer toolkit for lattices over the dihedral group
//! `D_n = <σ, τ | σ^n = τ^2 = 1, τστ^{-1} = σ^{-1}>`.
//!
//! Matrices act on column vectors and `ρ(gh) = ρ(g)ρ(h)` throughout.

pub mod checks;
pub mod cohomology;
pub mod error;
pub mod group;
pub mod int;
pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod relation;
mod sparse;
pub mod witness;

pub use checks::{run_check, run_suite, verdict, CheckResult, Status, Verdict};
pub use cohomology::{
    anisotropic_part, h1, is_coflabby, is_flabby, profile, tate_minus1, tate_zero_hat, CohomologyProfile,
    CohomologyTriple, Vanishing,
};
pub use error::{Error, Result};
pub use group::{subgroups, GroupElement, Subgroup, SubgroupKind};
pub use int::Integer;
pub use lattice::{lattice_by_name, DnLattice, LatticeDoc, LATTICE_NAMES};
pub use linalg::{
    circulant, circulant_closed_forms, cokernel_invariants, det, hnf_column_span, kernel_basis, kernel_basis_rows,
    smith_invariants, snf, solve_integer, solve_integer_many, AbelianInvariants, SnfResult,
};
pub use matrix::{IntMatrix, MatrixDoc};
pub use relation::{relation_module, FreeWord, GroupRingVector};
pub use witness::{
    has_section, verify_equivariant, verify_iso, verify_ses, IsoWitness, LatticeMap, ShortExactSequence, WitnessDoc,
};
