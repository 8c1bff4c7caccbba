//! Adversarial instance construction: hard-permutation search, ball slices,
//! and the concatenated ring whose slice centres keep their original views.

mod linial;
mod search;
mod slice;

pub use linial::{build_linial_instance, HardnessTarget, LinialConstruction, SliceRecord};
pub use search::{
    search_hard_permutation, search_hard_permutation_over, Objective, SearchBudget, SearchMode,
    SearchOutcome,
};
pub use slice::{
    concatenate_slices, extract_slice, verify_ball_preservation, AdversaryError, IdSlice,
    SliceSource,
};
