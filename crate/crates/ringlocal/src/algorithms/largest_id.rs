//! Largest-id leader election: grow the ball until a larger identifier shows
//! up, or until the whole cycle has been seen.

use crate::model::{Ball, Decision, LeaderVerdict, NodeAlgorithm, Output};

/// One ball evaluation of the largest-id algorithm: answer No on any witness
/// of a larger identifier, Yes once the cycle has wrapped with no such
/// witness, and keep growing otherwise.
pub fn largest_id_step(ball: &Ball) -> Decision {
    let own = ball.center_id();
    if ball.entries().iter().any(|&id| id > own) {
        return Decision::Output(Output::Leader(LeaderVerdict::No));
    }
    if ball.is_wrapped() {
        Decision::Output(Output::Leader(LeaderVerdict::Yes))
    } else {
        Decision::Continue
    }
}

/// The largest-id algorithm as a registrable strategy.
#[derive(Debug, Clone, Copy, Default)]
pub struct LargestId;

impl NodeAlgorithm for LargestId {
    fn name(&self) -> &str {
        "largest-id"
    }

    fn decide(&self, ball: &Ball) -> Decision {
        largest_id_step(ball)
    }

    // Both the larger-id witness and wrap detection are direction-blind.
    fn reflection_symmetric(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_ring;

    #[test]
    fn step_examples() {
        let ring = build_ring(4, vec![4, 1, 3, 2]).unwrap();
        assert_eq!(
            largest_id_step(&ring.ball(1, 1).unwrap()),
            Decision::Output(Output::Leader(LeaderVerdict::No))
        );
        assert_eq!(largest_id_step(&ring.ball(0, 1).unwrap()), Decision::Continue);
        assert_eq!(
            largest_id_step(&ring.ball(0, 2).unwrap()),
            Decision::Output(Output::Leader(LeaderVerdict::Yes))
        );
    }

    #[test]
    fn never_yes_without_wrap_never_no_without_witness() {
        let ring = build_ring(6, vec![6, 2, 5, 1, 4, 3]).unwrap();
        for node in 0..6 {
            for radius in 0..=4 {
                let ball = ring.ball(node, radius).unwrap();
                match largest_id_step(&ball) {
                    Decision::Output(Output::Leader(LeaderVerdict::Yes)) => {
                        assert!(ball.is_wrapped())
                    }
                    Decision::Output(Output::Leader(LeaderVerdict::No)) => {
                        assert!(ball.entries().iter().any(|&id| id > ball.center_id()))
                    }
                    Decision::Output(Output::Colour(_)) => unreachable!(),
                    Decision::Continue => {}
                }
            }
        }
    }
}
