//! Control strategies: degenerate algorithms used as negative controls and
//! as probes for the execution contract.

use crate::model::{Ball, Colour, Decision, NodeAlgorithm, Output};

/// Outputs the same colour at radius 0 everywhere. Never a proper colouring
/// for n >= 2; the harness uses it to show that construction fidelity does
/// not certify colouring correctness.
#[derive(Debug, Clone, Copy)]
pub struct ConstantColour(pub Colour);

impl NodeAlgorithm for ConstantColour {
    fn name(&self) -> &str {
        "constant-colour"
    }

    fn decide(&self, _ball: &Ball) -> Decision {
        Decision::Output(Output::Colour(self.0))
    }

    fn reflection_symmetric(&self) -> bool {
        true
    }
}

/// Violates the contract by never committing; the runner must flag it.
#[derive(Debug, Clone, Copy)]
pub struct AlwaysContinue;

impl NodeAlgorithm for AlwaysContinue {
    fn name(&self) -> &str {
        "always-continue"
    }

    fn decide(&self, _ball: &Ball) -> Decision {
        Decision::Continue
    }
}

/// Commits at a fixed radius to a digest of the centred window of that
/// radius. Because the committed value depends only on the radius-`radius`
/// window, larger balls repeat the same output, which makes this a
/// well-behaved probe for decision-transfer properties at small radii.
#[derive(Debug, Clone, Copy)]
pub struct FixedRadiusDigest {
    pub radius: usize,
}

impl NodeAlgorithm for FixedRadiusDigest {
    fn name(&self) -> &str {
        "fixed-radius-digest"
    }

    fn decide(&self, ball: &Ball) -> Decision {
        if ball.radius() < self.radius {
            return Decision::Continue;
        }
        let window = ball.window(self.radius).expect("radius reached");
        let digest = window.iter().fold(0u64, |acc, &id| acc.wrapping_add(id)) % 3;
        Decision::Output(Output::Colour(digest))
    }

    fn radius_bound(&self, n: usize) -> usize {
        n.div_ceil(2).max(self.radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_ring, run_all, run_node, verify_colouring, ModelError};

    #[test]
    fn constant_colour_is_not_a_colouring() {
        let ring = build_ring(4, vec![4, 1, 3, 2]).unwrap();
        let profile = run_all(&ConstantColour(0), &ring).unwrap();
        assert!(profile.radii.iter().all(|&r| r == 0));
        assert!(!verify_colouring(&ring, &profile.outputs, 3));
    }

    #[test]
    fn always_continue_is_flagged() {
        let ring = build_ring(2, vec![1, 2]).unwrap();
        assert_eq!(
            run_all(&AlwaysContinue, &ring),
            Err(ModelError::NonTerminating { node: 0, radius: 1 })
        );
    }

    #[test]
    fn digest_commits_at_its_radius() {
        let ring = build_ring(7, vec![7, 3, 6, 1, 5, 2, 4]).unwrap();
        let probe = FixedRadiusDigest { radius: 2 };
        for node in 0..7 {
            let (output, radius) = run_node(&probe, &ring, node).unwrap();
            assert_eq!(radius, 2);
            let expected = ring.ball(node, 2).unwrap();
            assert_eq!(probe.decide(&expected), Decision::Output(output));
        }
    }

    #[test]
    fn digest_radius_may_exceed_wrap() {
        let ring = build_ring(3, vec![3, 1, 2]).unwrap();
        let probe = FixedRadiusDigest { radius: 4 };
        let (_, radius) = run_node(&probe, &ring, 0).unwrap();
        assert_eq!(radius, 4);
    }
}
