//! Deterministic toolkit for ball-growing algorithms on oriented rings.
//!
//! A node algorithm sees the ring only through its [`model::Ball`]: the
//! ordered identifiers within some radius of the node. The runner grows each
//! node's ball until the algorithm commits, producing a
//! [`model::RadiusProfile`] that carries both classic worst-case statistics
//! (the maximum stopping radius) and the average stopping radius as an exact
//! rational. The interesting phenomenon this crate measures is the gap
//! between the two: largest-id leader election needs a linear maximum radius
//! but only a logarithmic average, even on its worst-case instances, while
//! the Cole-Vishkin 3-colouring pipeline spends the same fixed radius
//! everywhere.
//!
//! Modules:
//!
//! * [`model`] - ring instances, balls, the execution contract, verifiers;
//! * [`algorithms`] - the strategies (largest-id, Cole-Vishkin, controls)
//!   behind one trait, selectable by name through a registry;
//! * [`analysis`] - the worst-case segment recurrence, its popcount-sum
//!   oracle, exhaustive search, and the explicit worst-case builder;
//! * [`adversary`] - hard-permutation search and slice concatenation for
//!   adversarial instances;
//! * [`rng`] - seeded, portable instance generation.

pub mod adversary;
pub mod algorithms;
pub mod analysis;
pub mod model;
mod permute;
pub mod rng;

pub use model::{
    build_ring, run_all, run_all_par, run_node, Ball, Colour, Decision, Id, LeaderVerdict,
    ModelError, NodeAlgorithm, Output, RadiusProfile, RingInstance,
};
