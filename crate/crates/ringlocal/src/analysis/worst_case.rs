//! Worst-case instances for the largest-id measure: exhaustive search over
//! identifier permutations, and the explicit recursive construction that
//! attains the recurrence bound.

use thiserror::Error;

use crate::model::{run_all, Id, ModelError, NodeAlgorithm, RadiusProfile, RingInstance};
use crate::permute::for_each_permutation;

use super::recurrence::{predicted_worst_sum, recurrence_table, RecurrenceTable};

/// Default bound on exhaustive permutation enumeration; 9 keeps the search
/// at `8!/2` simulations.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("exhaustive enumeration of {n} ids exceeds the cap of {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Outcome of an exhaustive worst-case search.
#[derive(Debug, Clone)]
pub struct WorstCaseReport {
    pub n: usize,
    /// Maximum radius sum over the enumerated permutations.
    pub max_sum: u64,
    /// Lexicographically smallest maximiser, max id rotated to node 0.
    pub witness: RingInstance,
    /// Profile of the witness under the searched algorithm.
    pub witness_profile: RadiusProfile,
    /// `ceil(n/2) + a(n-1)`.
    pub predicted: u64,
}

/// Segment permutation canonical under reflection: itself or its reverse,
/// whichever is lexicographically smaller.
fn reflection_canonical(segment: &[Id]) -> Vec<Id> {
    let reversed: Vec<Id> = segment.iter().rev().copied().collect();
    if reversed.as_slice() < segment {
        reversed
    } else {
        segment.to_vec()
    }
}

/// Exhaustively enumerates rings over identifiers `{1..n}` and reports the
/// maximum radius sum of `algorithm`, with a witness.
///
/// The maximum identifier is pinned to node 0: every ball algorithm's radii
/// are invariant under rotation, so each rotation class is simulated once.
/// When the algorithm declares itself reflection-symmetric, mirrored
/// segments are skipped as well, halving the enumeration; the skip is
/// validated against the unquotiented search in the test suite.
pub fn brute_force_worst_sum(
    n: usize,
    algorithm: &dyn NodeAlgorithm,
    cap: usize,
) -> Result<WorstCaseReport, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::Model(ModelError::EmptyRing));
    }
    if n > cap {
        return Err(AnalysisError::EnumerationCapExceeded { n, cap });
    }
    let quotient_reflection = algorithm.reflection_symmetric();
    let mut segment: Vec<Id> = (1..n as Id).collect();
    let mut best_sum = 0u64;
    let mut best_ids: Option<Vec<Id>> = None;
    let mut result: Result<(), ModelError> = Ok(());
    for_each_permutation(&mut segment, |segment| {
        if result.is_err() {
            return;
        }
        let canonical_segment;
        let segment = if quotient_reflection {
            canonical_segment = reflection_canonical(segment);
            if canonical_segment.as_slice() != segment {
                return; // mirrored twin already enumerated
            }
            canonical_segment.as_slice()
        } else {
            segment
        };
        let mut ids = Vec::with_capacity(n);
        ids.push(n as Id);
        ids.extend_from_slice(segment);
        let instance = RingInstance::new(ids).expect("permutation of 1..=n");
        match run_all(algorithm, &instance) {
            Ok(profile) => {
                let candidate = instance.ids().to_vec();
                let better = profile.sum_radii > best_sum
                    || (profile.sum_radii == best_sum
                        && best_ids.as_ref().is_none_or(|best| candidate < *best));
                if better {
                    best_sum = profile.sum_radii;
                    best_ids = Some(candidate);
                }
            }
            Err(err) => result = Err(err),
        }
    });
    result?;
    let witness = RingInstance::new(best_ids.expect("at least one permutation"))
        .expect("validated above");
    let witness_profile = run_all(algorithm, &witness)?;
    let predicted = predicted_worst_sum(n, &recurrence_table(n.saturating_sub(1)));
    Ok(WorstCaseReport { n, max_sum: best_sum, witness, witness_profile, predicted })
}

/// Deterministic worst-case ring for the largest-id algorithm on identifiers
/// `{1..n}`.
///
/// The maximum `n` sits at node 0. The remaining `p = n - 1` positions form
/// a segment bounded by larger identifiers on both ends and are filled
/// recursively: the segment's largest identifier goes `k*` positions from
/// the end adjacent to node 0 (walking against the orientation), where `k*`
/// is the recurrence's smallest maximising split; the `k* - 1` positions
/// between it and node 0 receive the largest remaining identifiers, and both
/// sub-segments recurse. Only relative order matters inside a sub-segment,
/// since both of its bounding identifiers are strictly larger.
///
/// Simulating largest-id on the result attains `ceil(n/2) + a(n-1)`.
pub fn worst_case_builder(n: usize) -> RingInstance {
    assert!(n >= 1, "ring needs at least one node");
    let table = recurrence_table(n.saturating_sub(1));
    let mut ids: Vec<Id> = vec![0; n];
    ids[0] = n as Id;
    fill_segment(&mut ids, &table, 1, n - 1, (n - 1) as Id);
    RingInstance::new(ids).expect("permutation of 1..=n")
}

/// Fills positions `lo..=hi` with the value range `top-(hi-lo) ..= top`.
fn fill_segment(ids: &mut [Id], table: &RecurrenceTable, lo: usize, hi: usize, top: Id) {
    if lo > hi {
        return;
    }
    let p = hi - lo + 1;
    if p == 1 {
        ids[lo] = top;
        return;
    }
    let k = table.argmax(p).expect("p >= 2");
    let pos = hi - (k - 1);
    ids[pos] = top;
    // the k-1 positions above `pos` take the largest remaining values
    fill_segment(ids, table, pos + 1, hi, top - 1);
    fill_segment(ids, table, lo, pos - 1, top - k as Id);
}
