//! The classical families: Hall-Littlewood, Schur, Macdonald, the Green
//! polynomials and the structure constants `phi` and `psi`.

mod green;
mod hall_littlewood;
mod macdonald;

pub use green::{green_table, GreenTable};
pub use hall_littlewood::{
    hall_littlewood, hall_littlewood_p_m, hl_alternant, hl_alternant_int, morris_phi, psi_coeff,
    q_row_series, schur, HlKind,
};
pub use macdonald::{macdonald_degree, macdonald_m};
