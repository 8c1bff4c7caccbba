//! Identifier slices: contiguous, order-preserving extracts of a ball,
//! and their concatenation into new rings.

use thiserror::Error;

use crate::model::{Id, ModelError, RingInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdversaryError {
    #[error("a radius-{rho} slice needs 2*{rho}+1 <= n, but n = {n}")]
    SliceTooLarge { rho: usize, n: usize },
    #[error("id {id} occurs in more than one slice or in the leftover")]
    DuplicateAcrossSlices { id: Id },
    #[error("slices and leftover hold {actual} ids, target ring needs {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("exhaustive search over {n} ids exceeds the cap of {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Where a slice was cut from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceSource {
    pub ring_fingerprint: u64,
    pub node: usize,
    pub rho: usize,
}

/// A contiguous run of `2*rho + 1` identifiers read off a ball in
/// orientation order; the ball's centre sits at offset `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdSlice {
    pub ids: Vec<Id>,
    pub center_offset: usize,
    pub source: SliceSource,
}

/// Cuts the radius-`rho` ball around `center` out of `instance` as a slice.
/// The ball must not wrap, otherwise the run would not be contiguous.
pub fn extract_slice(
    instance: &RingInstance,
    center: usize,
    rho: usize,
) -> Result<IdSlice, AdversaryError> {
    let n = instance.n();
    if 2 * rho + 1 > n {
        return Err(AdversaryError::SliceTooLarge { rho, n });
    }
    let ball = instance.ball(center, rho)?;
    debug_assert!(!ball.is_wrapped());
    Ok(IdSlice {
        ids: ball.entries().to_vec(),
        center_offset: rho,
        source: SliceSource { ring_fingerprint: instance.fingerprint(), node: center, rho },
    })
}

/// Builds the ring `slice_1 || slice_2 || ... || leftover`, with the leftover
/// identifiers appended in ascending order (the fixed "arbitrary order").
pub fn concatenate_slices(
    slices: &[IdSlice],
    leftover: &[Id],
    target_n: usize,
) -> Result<RingInstance, AdversaryError> {
    let mut ids: Vec<Id> = Vec::new();
    for slice in slices {
        ids.extend_from_slice(&slice.ids);
    }
    let mut rest = leftover.to_vec();
    rest.sort_unstable();
    ids.extend_from_slice(&rest);
    if ids.len() != target_n {
        return Err(AdversaryError::LengthMismatch { expected: target_n, actual: ids.len() });
    }
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(AdversaryError::DuplicateAcrossSlices { id: w[0] });
    }
    Ok(RingInstance::new(ids)?)
}

/// True iff the radius-`rho` balls at the two centres carry identical views,
/// so any ball algorithm behaves identically at both up to radius `rho`.
pub fn verify_ball_preservation(
    source: &RingInstance,
    built: &RingInstance,
    source_center: usize,
    built_center: usize,
    rho: usize,
) -> bool {
    match (source.ball(source_center, rho), built.ball(built_center, rho)) {
        (Ok(a), Ok(b)) => {
            a.entries() == b.entries()
                && a.center_index() == b.center_index()
                && a.known_cycle_length() == b.known_cycle_length()
        }
        _ => false,
    }
}
