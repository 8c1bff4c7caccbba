//! Core model: ring instances, ball semantics, the ball-growing execution
//! contract, and output verifiers.
//!
//! Everything here is an immutable value or a pure function over one, so
//! nodes and instances can be evaluated concurrently without shared state.

mod ball;
mod ring;
mod runner;
mod verify;

pub use ball::Ball;
pub use ring::{build_ring, Id, ModelError, RingInstance};
pub use runner::{
    run_all, run_all_par, run_node, Colour, Decision, LeaderVerdict, NodeAlgorithm, Output,
    RadiusProfile,
};
pub use verify::{verify_colouring, verify_largest_id};
