//! Isomorphism and isotopy classification of the Type V algebras.
//!
//! Isomorphisms come from the automorphism group of the triple system
//! acting on the subalgebra line `h_{x,y,z}`. Isotopies additionally allow
//! conjugating the line by `Ad(exp ξ)` for `ξ ∈ B`.

mod iso;
mod isotopy;
mod orbit;
mod printed;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use iso::{
    action_on_params, action_on_params_f64, auto_matrix, canonical_form_iso,
    canonical_form_iso_f64, extend_to_g, find_iso_witness, AutoParams, AutoParamsF64, IsoClass,
    IsoClassF64, IsoLabel, ParamsF64,
};
pub use isotopy::{
    ad_matrix, adjoint, canonical_form_isotopy, isotopy_class, isotopy_transform, p_clearing_x,
    printed_ad, printed_adjoint, printed_isotopy_representatives, printed_isotopy_transform,
    IsotopyClass, IsotopyElement, IsotopyReduction,
};
pub use orbit::{orbit_agrees, orbit_search, OrbitGrid};
pub use printed::{isotopy_list_check, printed_automorphism_matrix, printed_display_checks};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassificationError {
    #[error("automorphism parameter b must be nonzero")]
    ZeroScale,
    #[error("eps must be +1 or -1, got {0}")]
    BadEps(i8),
    #[error("transformed line has no e4 component")]
    OffChart,
    #[error("no reduction to the representative found")]
    NoReduction,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
