//! Balls: the radius-`r` view a node gathers of the ring around itself.

use super::ring::{Id, ModelError, RingInstance};

/// The information a node holds after growing its view to radius `r`: the
/// ordered identifiers at cyclic offsets `-r..=+r` along the orientation.
///
/// A node does not know the cycle length a priori. It learns it exactly when
/// its two arms overlap on an already-seen node, which happens at the first
/// radius with `2r >= n`. From that point on the ball carries the whole cycle
/// (each node once) and `known_cycle_length` is populated with `n`.
///
/// For a wrapped ball the stored window covers offsets
/// `-floor((n-1)/2) ..= +ceil((n-1)/2)`, which extends the last unwrapped
/// window, so consecutive balls always nest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    center: usize,
    radius: usize,
    entries: Vec<Id>,
    center_index: usize,
    known_cycle_length: Option<usize>,
}

impl Ball {
    pub fn center(&self) -> usize {
        self.center
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Identifiers in orientation order; the centre sits at `center_index`.
    pub fn entries(&self) -> &[Id] {
        &self.entries
    }

    pub fn center_index(&self) -> usize {
        self.center_index
    }

    pub fn center_id(&self) -> Id {
        self.entries[self.center_index]
    }

    pub fn known_cycle_length(&self) -> Option<usize> {
        self.known_cycle_length
    }

    pub fn is_wrapped(&self) -> bool {
        self.known_cycle_length.is_some()
    }

    /// Identifier at a signed cyclic offset from the centre, if the ball
    /// contains that information. Unwrapped balls answer for `|offset| <= r`;
    /// wrapped balls answer for every offset because the whole cycle is known.
    pub fn id_at_offset(&self, offset: isize) -> Option<Id> {
        match self.known_cycle_length {
            Some(n) => {
                let n = n as isize;
                let fwd = offset.rem_euclid(n) as usize;
                let right = self.entries.len() - 1 - self.center_index;
                let index = if fwd <= right {
                    self.center_index + fwd
                } else {
                    self.center_index + fwd - n as usize
                };
                Some(self.entries[index])
            }
            None => {
                if offset.unsigned_abs() > self.radius {
                    return None;
                }
                Some(self.entries[(self.center_index as isize + offset) as usize])
            }
        }
    }

    /// The centred sub-window of radius `rho`, in orientation order.
    /// `None` when the ball does not determine some requested offset.
    pub fn window(&self, rho: usize) -> Option<Vec<Id>> {
        let rho = rho as isize;
        (-rho..=rho).map(|off| self.id_at_offset(off)).collect()
    }

    /// For a wrapped ball, the full cycle starting at the centre and walking
    /// in successor direction.
    pub fn cycle_ids(&self) -> Option<Vec<Id>> {
        let n = self.known_cycle_length?;
        Some((0..n).map(|off| self.id_at_offset(off as isize).unwrap()).collect())
    }
}

impl RingInstance {
    /// The radius-`radius` ball of `node`.
    pub fn ball(&self, node: usize, radius: usize) -> Result<Ball, ModelError> {
        let n = self.n();
        if node >= n {
            return Err(ModelError::NodeOutOfRange { node, n });
        }
        let wrapped = radius >= n.div_ceil(2);
        let (left, right) = if wrapped {
            ((n - 1) / 2, n - 1 - (n - 1) / 2)
        } else {
            (radius, radius)
        };
        // the window covers at most n nodes, so it splits into at most two
        // contiguous runs of the id array
        let len = left + right + 1;
        let start = (node + n - left) % n;
        let ids = self.ids();
        let mut entries = Vec::with_capacity(len);
        if start + len <= n {
            entries.extend_from_slice(&ids[start..start + len]);
        } else {
            entries.extend_from_slice(&ids[start..]);
            entries.extend_from_slice(&ids[..start + len - n]);
        }
        Ok(Ball {
            center: node,
            radius,
            entries,
            center_index: left,
            known_cycle_length: wrapped.then_some(n),
        })
    }
}
