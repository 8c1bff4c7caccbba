//! Building the concatenated hard permutation: repeatedly search a hard
//! permutation of the remaining identifiers, cut out the target-radius ball
//! around its hardest vertex, and append the slices, then the leftover, into
//! a single ring.

use crate::algorithms::log_star;
use crate::model::{run_all, Id, NodeAlgorithm, Output, RadiusProfile, RingInstance};

use super::search::{search_hard_permutation_over, Objective, SearchBudget, SearchOutcome};
use super::slice::{concatenate_slices, extract_slice, AdversaryError, IdSlice};

/// The slice radius `rho(n) = ceil(log*(n/2) / 2)`; the fractional target
/// must be rounded up to index a ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardnessTarget {
    pub target_radius: usize,
}

impl HardnessTarget {
    pub fn for_ring(n: usize) -> Self {
        let ls = log_star(n as f64 / 2.0).expect("n >= 1");
        Self { target_radius: (ls as usize).div_ceil(2) }
    }
}

/// One extracted slice together with both views of its centre: in the source
/// ring the slice was cut from, and in the built ring.
#[derive(Debug, Clone)]
pub struct SliceRecord {
    pub slice_index: usize,
    /// Ring the slice was cut from (the search result on the remaining ids).
    pub source: RingInstance,
    pub slice: IdSlice,
    pub source_center: usize,
    pub source_radius: usize,
    pub source_output: Output,
    /// Position of the slice centre in the built ring.
    pub pi_center: usize,
    pub pi_radius: usize,
    pub pi_output: Output,
}

/// The built ring with the algorithm's profile on it and per-slice records.
#[derive(Debug, Clone)]
pub struct LinialConstruction {
    pub instance: RingInstance,
    pub profile: RadiusProfile,
    pub slices: Vec<SliceRecord>,
    pub target: HardnessTarget,
    /// True when any per-iteration search ran in randomized mode.
    pub best_effort: bool,
}

impl LinialConstruction {
    pub fn slice_centres(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.pi_center).collect()
    }
}

fn hardest_vertex(outcome: &SearchOutcome) -> usize {
    let radii = &outcome.profile.radii;
    let mut best = 0;
    for (node, &radius) in radii.iter().enumerate() {
        if radius > radii[best] {
            best = node;
        }
    }
    best
}

/// Iterates the construction until fewer than `n/2` identifiers remain,
/// appends the leftover ascending, and measures `algorithm` on the result:
/// search a hard permutation of the remaining identifiers under `objective`,
/// cut the target-radius ball around its hardest vertex, append it.
///
/// Per-iteration searches reuse `budget` with the seed advanced by the
/// iteration index, so the whole construction is reproducible from one seed.
pub fn build_linial_instance(
    algorithm: &dyn NodeAlgorithm,
    n: usize,
    budget: &SearchBudget,
    objective: Objective,
    cap: usize,
) -> Result<LinialConstruction, AdversaryError> {
    let target = HardnessTarget::for_ring(n);
    let rho = target.target_radius;
    let mut remaining: Vec<Id> = (1..=n as Id).collect();
    let mut slices: Vec<IdSlice> = Vec::new();
    let mut partial: Vec<(RingInstance, usize, usize, Output)> = Vec::new();
    let mut best_effort = false;
    let mut iteration = 0u64;
    // "fewer than n/2 remain" with exact arithmetic: continue while 2m >= n
    while 2 * remaining.len() >= n {
        let iteration_budget = SearchBudget {
            seed: budget.seed.wrapping_add(iteration),
            ..*budget
        };
        let outcome = search_hard_permutation_over(
            algorithm,
            remaining.clone(),
            &iteration_budget,
            objective,
            cap,
        )?;
        best_effort |= outcome.best_effort;
        let center = hardest_vertex(&outcome);
        let slice = extract_slice(&outcome.instance, center, rho)?;
        let removed: std::collections::HashSet<Id> = slice.ids.iter().copied().collect();
        remaining.retain(|id| !removed.contains(id));
        partial.push((
            outcome.instance,
            center,
            outcome.profile.radii[center],
            outcome.profile.outputs[center],
        ));
        slices.push(slice);
        iteration += 1;
    }
    let instance = concatenate_slices(&slices, &remaining, n)?;
    let profile = run_all(algorithm, &instance)?;
    let slice_len = 2 * rho + 1;
    let records = slices
        .into_iter()
        .zip(partial)
        .enumerate()
        .map(|(index, (slice, (source, source_center, source_radius, source_output)))| {
            let pi_center = index * slice_len + rho;
            SliceRecord {
                slice_index: index,
                source,
                slice,
                source_center,
                source_radius,
                source_output,
                pi_center,
                pi_radius: profile.radii[pi_center],
                pi_output: profile.outputs[pi_center],
            }
        })
        .collect();
    Ok(LinialConstruction { instance, profile, slices: records, target, best_effort })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{ColeVishkin, ConstantColour, CvConfig, LargestId};
    use crate::model::verify_colouring;

    #[test]
    fn target_radius_values() {
        assert_eq!(HardnessTarget::for_ring(1).target_radius, 0);
        assert_eq!(HardnessTarget::for_ring(2).target_radius, 0);
        assert_eq!(HardnessTarget::for_ring(4).target_radius, 1);
        assert!(HardnessTarget::for_ring(4).target_radius >= 1);
        assert_eq!(HardnessTarget::for_ring(16).target_radius, 2);
        assert_eq!(HardnessTarget::for_ring(1000).target_radius, 2);
    }

    #[test]
    fn cole_vishkin_centres_keep_uniform_radius() {
        let config = CvConfig::new(8);
        let algorithm = ColeVishkin::new(config);
        let built =
            build_linial_instance(&algorithm, 16, &SearchBudget::randomized(24, 3), Objective::MaxRadius, 9).unwrap();
        assert_eq!(built.slices.len(), 2);
        for record in &built.slices {
            assert_eq!(record.source_radius, config.total_radius());
            assert_eq!(record.pi_radius, config.total_radius());
        }
        assert!(verify_colouring(&built.instance, &built.profile.outputs, 3));
    }

    #[test]
    fn constant_colour_is_reported_as_non_colouring() {
        let built =
            build_linial_instance(&ConstantColour(0), 8, &SearchBudget::randomized(8, 1), Objective::MaxRadius, 9)
                .unwrap();
        assert!(!verify_colouring(&built.instance, &built.profile.outputs, 3));
    }

    #[test]
    fn construction_is_deterministic() {
        let budget = SearchBudget::randomized(30, 42);
        let a = build_linial_instance(&LargestId, 20, &budget, Objective::MaxRadius, 9).unwrap();
        let b = build_linial_instance(&LargestId, 20, &budget, Objective::MaxRadius, 9).unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.profile, b.profile);
        assert!(a.best_effort);
    }
}
