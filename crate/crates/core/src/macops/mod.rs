//! Macdonald operators: the determinantal operators in finitely many
//! variables, their limits `A^(k)` at infinity, and the step operators.

mod finite;
mod infinity;
mod step;
mod ufamily;

pub use finite::{apply_an, apply_dn, dn_eigenvalue, UPolyOp};
pub use infinity::{a_eigen, a_k_apply, a_k_eigen};
pub use step::{
    bc_matrix_coeff, iskip, iskipla, pieri_down_coeff, pieri_up_coeff, step_evaluate, step_family,
    step_series_apply, StepKind, StepValue,
};
pub use ufamily::{pochhammer_tinv, Linear, UFamily, UPoly, URational};
pub(crate) use finite::permutations;
