//! Exact 2-adic valuations: the tame field Q(2^{1/r}) and Laurent
//! polynomials in a weighted formal parameter.

pub mod laurent;
pub mod tame;
pub mod twist;

pub use laurent::{
    laurent_residue, laurent_val, reduce_laurent_poly, AffineForm, FormalParam, LocalLaurent,
    ParamKind, WeightInterval,
};
pub use tame::{tame_val, TameElem};
pub use twist::normalize_twist;
