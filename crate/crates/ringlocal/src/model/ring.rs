//! Ring instances: an oriented cycle with a bijective identifier assignment.

use thiserror::Error;

/// Node identifier. Identifiers are plain unsigned integers drawn from a
/// power-of-two universe `[0, 2^bits)`.
pub type Id = u64;

/// Errors raised by instance construction and by the execution engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("ring must contain at least one node")]
    EmptyRing,
    #[error("expected {expected} ids, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("duplicate id {id}")]
    DuplicateId { id: Id },
    #[error("id {id} does not fit in a {bits}-bit universe")]
    IdOutOfUniverse { id: Id, bits: u32 },
    #[error("universe bits must lie in 1..=64, got {bits}")]
    InvalidUniverseBits { bits: u32 },
    #[error("node {node} out of range for a ring of {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("algorithm at node {node} still continues on the radius-{radius} ball")]
    NonTerminating { node: usize, radius: usize },
}

/// An `n`-node oriented cycle. Position `p` of `ids` holds the identifier of
/// node `p`; the successor of node `p` is node `(p + 1) mod n`.
///
/// Instances are immutable after construction and validated on entry:
/// identifiers are pairwise distinct and fit in the configured universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingInstance {
    ids: Vec<Id>,
    universe_bits: u32,
}

impl RingInstance {
    /// Builds an instance over the default 64-bit identifier universe.
    pub fn new(ids: Vec<Id>) -> Result<Self, ModelError> {
        Self::with_universe_bits(ids, 64)
    }

    /// Builds an instance whose identifiers must fit in `bits` bits.
    pub fn with_universe_bits(ids: Vec<Id>, bits: u32) -> Result<Self, ModelError> {
        if !(1..=64).contains(&bits) {
            return Err(ModelError::InvalidUniverseBits { bits });
        }
        if ids.is_empty() {
            return Err(ModelError::EmptyRing);
        }
        if bits < 64 {
            if let Some(&id) = ids.iter().find(|&&id| id >> bits != 0) {
                return Err(ModelError::IdOutOfUniverse { id, bits });
            }
        }
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ModelError::DuplicateId { id: w[0] });
        }
        Ok(Self { ids, universe_bits: bits })
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[Id] {
        &self.ids
    }

    pub fn universe_bits(&self) -> u32 {
        self.universe_bits
    }

    /// Identifier of `node`. Panics if `node` is out of range.
    pub fn id(&self, node: usize) -> Id {
        self.ids[node]
    }

    /// Index of the node holding the globally maximum identifier.
    pub fn argmax_id(&self) -> usize {
        let mut best = 0;
        for (node, &id) in self.ids.iter().enumerate() {
            if id > self.ids[best] {
                best = node;
            }
        }
        best
    }

    /// The same cycle rotated so that the maximum identifier sits at node 0.
    /// Rotation does not change any node's view, so stopping radii are
    /// preserved up to the same rotation.
    pub fn canonical_rotation(&self) -> RingInstance {
        let start = self.argmax_id();
        let mut ids = Vec::with_capacity(self.n());
        ids.extend_from_slice(&self.ids[start..]);
        ids.extend_from_slice(&self.ids[..start]);
        RingInstance { ids, universe_bits: self.universe_bits }
    }

    /// FNV-1a digest of the id sequence; used to tag slice provenance.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &id in &self.ids {
            for byte in id.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
        h
    }
}

/// Validated constructor matching the `(n, ids)` calling convention: the
/// declared node count must agree with the id sequence.
pub fn build_ring(n: usize, ids: Vec<Id>) -> Result<RingInstance, ModelError> {
    if ids.len() != n {
        return Err(ModelError::LengthMismatch { expected: n, actual: ids.len() });
    }
    if n == 0 {
        return Err(ModelError::EmptyRing);
    }
    RingInstance::new(ids)
}
