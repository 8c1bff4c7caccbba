//! Output verifiers for the two problems.

use super::ring::RingInstance;
use super::runner::{Colour, LeaderVerdict, Output};

/// True iff `outputs` is a correct largest-id answer: every entry is a
/// Yes/No verdict, exactly one node says Yes, and it holds the maximum id.
pub fn verify_largest_id(instance: &RingInstance, outputs: &[Output]) -> bool {
    if outputs.len() != instance.n() {
        return false;
    }
    let mut yes_at = None;
    for (node, output) in outputs.iter().enumerate() {
        match output {
            Output::Leader(LeaderVerdict::Yes) => {
                if yes_at.is_some() {
                    return false;
                }
                yes_at = Some(node);
            }
            Output::Leader(LeaderVerdict::No) => {}
            Output::Colour(_) => return false,
        }
    }
    yes_at == Some(instance.argmax_id())
}

/// True iff `outputs` is a proper colouring of the cycle with colours drawn
/// from `[0, palette_size)`. A single node only needs an in-range colour.
pub fn verify_colouring(instance: &RingInstance, outputs: &[Output], palette_size: Colour) -> bool {
    let n = instance.n();
    if outputs.len() != n {
        return false;
    }
    let mut colours = Vec::with_capacity(n);
    for output in outputs {
        match output {
            Output::Colour(c) if *c < palette_size => colours.push(*c),
            _ => return false,
        }
    }
    if n == 1 {
        return true;
    }
    (0..n).all(|v| colours[v] != colours[(v + 1) % n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_ring;

    fn leaders(bits: &[bool]) -> Vec<Output> {
        bits.iter()
            .map(|&yes| {
                Output::Leader(if yes { LeaderVerdict::Yes } else { LeaderVerdict::No })
            })
            .collect()
    }

    fn colours(values: &[Colour]) -> Vec<Output> {
        values.iter().map(|&c| Output::Colour(c)).collect()
    }

    #[test]
    fn largest_id_verdicts() {
        let ring = build_ring(4, vec![4, 1, 3, 2]).unwrap();
        assert!(verify_largest_id(&ring, &leaders(&[true, false, false, false])));
        assert!(!verify_largest_id(&ring, &leaders(&[false, false, false, false])));
        assert!(!verify_largest_id(&ring, &leaders(&[true, false, true, false])));
        assert!(!verify_largest_id(&ring, &leaders(&[false, true, false, false])));
        assert!(!verify_largest_id(&ring, &leaders(&[true, false, false])));
    }

    #[test]
    fn colouring_verdicts() {
        let ring = build_ring(4, vec![4, 1, 3, 2]).unwrap();
        assert!(verify_colouring(&ring, &colours(&[0, 1, 0, 2]), 3));
        assert!(!verify_colouring(&ring, &colours(&[0, 1, 0, 3]), 3));
        let triangle = build_ring(3, vec![3, 1, 2]).unwrap();
        assert!(!verify_colouring(&triangle, &colours(&[0, 1, 0]), 3));
        let single = build_ring(1, vec![5]).unwrap();
        assert!(verify_colouring(&single, &colours(&[2]), 3));
        assert!(!verify_colouring(&single, &colours(&[3]), 3));
    }

    #[test]
    fn colouring_rejects_leader_outputs() {
        let ring = build_ring(2, vec![1, 2]).unwrap();
        assert!(!verify_colouring(&ring, &leaders(&[true, false]), 3));
    }
}
