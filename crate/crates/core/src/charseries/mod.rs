//! Series graded by the positive root lattice and the identities built on
//! them.

pub mod character;
pub mod correction;
pub mod gk;
pub mod hpoly;
pub mod kostant;
pub mod lattice;
pub mod specialize;

pub use character::{freudenthal, weyl_kac_character};
pub use correction::{correction_product, correction_sum, verify_correction_factor};
pub use gk::{gk_product, gk_sum, verify_gk_full, verify_gk_imag, verify_gk_real, CombIndex, ProductMode};
pub use hpoly::{chi_q_rho_check, h_poly, h_poly_via_kinfty, verify_cs, verify_h_via_kinfty, verify_support_law};
pub use kostant::{
    alternating_k1_sum, carlitz_check, kostant_suite, verify_gr_tensor, verify_kostant_conv, verify_kostant_recur,
    verify_q_kostant, KostantOracle,
};
pub use lattice::{Grid, LatticeSeries, TruncProfile};
pub use specialize::{ev_specialize, ev_specialize_stable, verify_basic_specialization};
