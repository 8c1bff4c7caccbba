//! Concrete node algorithms behind the common [`NodeAlgorithm`] contract,
//! plus the name-keyed registry used to select one at runtime.
//!
//! [`NodeAlgorithm`]: crate::model::NodeAlgorithm

mod cole_vishkin;
mod controls;
mod largest_id;
mod log_star;
mod registry;

use thiserror::Error;

use crate::model::Colour;

pub use cole_vishkin::{
    cole_vishkin, cole_vishkin_trace, cv_reduce_colour, ColeVishkin, CvConfig, CvStage, CvTrace,
};
pub use controls::{AlwaysContinue, ConstantColour, FixedRadiusDigest};
pub use largest_id::{largest_id_step, LargestId};
pub use log_star::{log_star, log_star_pow2};
pub use registry::{AlgorithmParams, AlgorithmRegistry};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgorithmError {
    #[error("both colours equal {colour}; the reduction step needs a proper colouring")]
    EqualColours { colour: Colour },
    #[error("log* requires a positive argument, got {value}")]
    NonPositiveArgument { value: f64 },
    #[error("unknown algorithm '{name}' (available: {available})")]
    UnknownAlgorithm { name: String, available: String },
}
