//! Searching for identifier permutations that force large radii.
//!
//! Exhaustive mode enumerates rotation classes (the maximum identifier is
//! pinned to node 0; rotation never changes any node's view) and returns the
//! true argmax of the objective. Randomized mode runs seeded random restarts
//! with best-improvement hill climbing over adjacent transpositions and is
//! flagged best-effort.

use crate::model::{run_all, Id, NodeAlgorithm, RadiusProfile, RingInstance};
use crate::rng::SeededRng;

use super::slice::AdversaryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Randomized,
}

/// Search effort and reproducibility token.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub mode: SearchMode,
    /// Profile evaluations allowed in randomized mode (ignored when
    /// exhaustive).
    pub max_evaluations: u64,
    pub seed: u64,
}

impl SearchBudget {
    pub fn exhaustive() -> Self {
        Self { mode: SearchMode::Exhaustive, max_evaluations: 0, seed: 0 }
    }

    pub fn randomized(max_evaluations: u64, seed: u64) -> Self {
        Self { mode: SearchMode::Randomized, max_evaluations, seed }
    }
}

/// What the search maximises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    MaxRadius,
    /// Maximising the average is maximising the radius sum at fixed n.
    AverageRadius,
}

impl Objective {
    fn score(&self, profile: &RadiusProfile) -> u64 {
        match self {
            Objective::MaxRadius => profile.max_radius as u64,
            Objective::AverageRadius => profile.sum_radii,
        }
    }
}

/// Best instance found, canonically rotated (maximum identifier at node 0).
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub instance: RingInstance,
    pub profile: RadiusProfile,
    pub objective_value: u64,
    pub evaluations: u64,
    /// True when the search was randomized, i.e. the outcome is a lower
    /// bound on the true optimum rather than a certified argmax.
    pub best_effort: bool,
}

/// Searches over permutations of `{1..n}`.
pub fn search_hard_permutation(
    algorithm: &dyn NodeAlgorithm,
    n: usize,
    budget: &SearchBudget,
    objective: Objective,
    cap: usize,
) -> Result<SearchOutcome, AdversaryError> {
    search_hard_permutation_over(algorithm, (1..=n as Id).collect(), budget, objective, cap)
}

/// Searches over permutations of an explicit identifier set.
pub fn search_hard_permutation_over(
    algorithm: &dyn NodeAlgorithm,
    ids: Vec<Id>,
    budget: &SearchBudget,
    objective: Objective,
    cap: usize,
) -> Result<SearchOutcome, AdversaryError> {
    match budget.mode {
        SearchMode::Exhaustive => exhaustive_search(algorithm, ids, objective, cap),
        SearchMode::Randomized => randomized_search(algorithm, ids, budget, objective),
    }
}

struct Best {
    ids: Vec<Id>,
    score: u64,
}

impl Best {
    /// Larger objective wins; ties go to the lexicographically smaller
    /// canonical rotation, making the reduction order-independent.
    fn offer(&mut self, canonical_ids: &[Id], score: u64) {
        let take = self.ids.is_empty()
            || score > self.score
            || (score == self.score && canonical_ids < self.ids.as_slice());
        if take {
            self.ids = canonical_ids.to_vec();
            self.score = score;
        }
    }
}

fn exhaustive_search(
    algorithm: &dyn NodeAlgorithm,
    mut ids: Vec<Id>,
    objective: Objective,
    cap: usize,
) -> Result<SearchOutcome, AdversaryError> {
    let n = ids.len();
    if n == 0 {
        return Err(AdversaryError::Model(crate::model::ModelError::EmptyRing));
    }
    if n > cap {
        return Err(AdversaryError::EnumerationCapExceeded { n, cap });
    }
    ids.sort_unstable();
    let max_id = ids.pop().expect("non-empty");
    let mut evaluations = 0u64;
    let mut best = Best { ids: Vec::new(), score: 0 };
    let mut failure: Option<AdversaryError> = None;
    crate::permute::for_each_permutation(&mut ids, |segment| {
        if failure.is_some() {
            return;
        }
        let mut ring_ids = Vec::with_capacity(n);
        ring_ids.push(max_id);
        ring_ids.extend_from_slice(segment);
        let instance = RingInstance::new(ring_ids).expect("distinct ids");
        match run_all(algorithm, &instance) {
            Ok(profile) => {
                evaluations += 1;
                best.offer(instance.ids(), objective.score(&profile));
            }
            Err(err) => failure = Some(err.into()),
        }
    });
    if let Some(err) = failure {
        return Err(err);
    }
    finish(algorithm, best, evaluations, false)
}

fn randomized_search(
    algorithm: &dyn NodeAlgorithm,
    ids: Vec<Id>,
    budget: &SearchBudget,
    objective: Objective,
) -> Result<SearchOutcome, AdversaryError> {
    let n = ids.len();
    if n == 0 {
        return Err(AdversaryError::Model(crate::model::ModelError::EmptyRing));
    }
    let mut rng = SeededRng::new(budget.seed);
    let mut evaluations = 0u64;
    let mut best = Best { ids: Vec::new(), score: 0 };
    let max_evaluations = budget.max_evaluations.max(1);
    'restarts: while evaluations < max_evaluations {
        let mut current = ids.clone();
        rng.shuffle(&mut current);
        let mut current_score = {
            let instance = RingInstance::new(current.clone()).expect("distinct ids");
            let profile = run_all(algorithm, &instance)?;
            evaluations += 1;
            let score = objective.score(&profile);
            best.offer(instance.canonical_rotation().ids(), score);
            score
        };
        // best-improvement hill climbing over adjacent transpositions
        loop {
            let mut improved: Option<(usize, u64)> = None;
            for i in 0..n {
                if evaluations >= max_evaluations {
                    break 'restarts;
                }
                let j = (i + 1) % n;
                current.swap(i, j);
                let instance = RingInstance::new(current.clone()).expect("distinct ids");
                let profile = run_all(algorithm, &instance)?;
                evaluations += 1;
                let score = objective.score(&profile);
                best.offer(instance.canonical_rotation().ids(), score);
                current.swap(i, j);
                if score > current_score
                    && improved.is_none_or(|(_, best_score)| score > best_score)
                {
                    improved = Some((i, score));
                }
            }
            match improved {
                Some((i, score)) => {
                    current.swap(i, (i + 1) % n);
                    current_score = score;
                }
                None => break,
            }
        }
    }
    finish(algorithm, best, evaluations, true)
}

fn finish(
    algorithm: &dyn NodeAlgorithm,
    best: Best,
    evaluations: u64,
    best_effort: bool,
) -> Result<SearchOutcome, AdversaryError> {
    let instance = RingInstance::new(best.ids).expect("canonical ids");
    let profile = run_all(algorithm, &instance)?;
    Ok(SearchOutcome {
        objective_value: best.score,
        instance,
        profile,
        evaluations,
        best_effort,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{ColeVishkin, CvConfig, LargestId};

    #[test]
    fn exhaustive_cap_guard() {
        let err =
            search_hard_permutation(&LargestId, 20, &SearchBudget::exhaustive(), Objective::MaxRadius, 9)
                .unwrap_err();
        assert_eq!(err, AdversaryError::EnumerationCapExceeded { n: 20, cap: 9 });
    }

    #[test]
    fn exhaustive_matches_brute_force_sum() {
        use crate::analysis::{brute_force_worst_sum, DEFAULT_ENUMERATION_CAP};
        for n in 3..=6 {
            let outcome = search_hard_permutation(
                &LargestId,
                n,
                &SearchBudget::exhaustive(),
                Objective::AverageRadius,
                DEFAULT_ENUMERATION_CAP,
            )
            .unwrap();
            let report = brute_force_worst_sum(n, &LargestId, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(outcome.objective_value, report.max_sum, "n={n}");
            assert!(!outcome.best_effort);
        }
    }

    #[test]
    fn cole_vishkin_search_is_degenerate() {
        let algorithm = ColeVishkin::new(CvConfig::new(4));
        let outcome = search_hard_permutation(
            &algorithm,
            4,
            &SearchBudget::exhaustive(),
            Objective::MaxRadius,
            9,
        )
        .unwrap();
        assert_eq!(outcome.objective_value, 8); // T = R(4) + 6
        assert_eq!(outcome.profile.max_radius, 8);
        // degenerate objective: the lexicographically smallest rotation wins
        assert_eq!(outcome.instance.ids(), &[4, 1, 2, 3]);
    }

    #[test]
    fn randomized_is_deterministic_per_seed() {
        let budget = SearchBudget::randomized(40, 11);
        let a = search_hard_permutation(&LargestId, 12, &budget, Objective::AverageRadius, 9)
            .unwrap();
        let b = search_hard_permutation(&LargestId, 12, &budget, Objective::AverageRadius, 9)
            .unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.objective_value, b.objective_value);
        assert_eq!(a.evaluations, b.evaluations);
        assert!(a.best_effort);
    }

    #[test]
    fn randomized_with_ample_budget_matches_exhaustive_at_small_n() {
        for n in 4..=6 {
            let exhaustive = search_hard_permutation(
                &LargestId,
                n,
                &SearchBudget::exhaustive(),
                Objective::AverageRadius,
                9,
            )
            .unwrap();
            let randomized = search_hard_permutation(
                &LargestId,
                n,
                &SearchBudget::randomized(4000, 5),
                Objective::AverageRadius,
                9,
            )
            .unwrap();
            assert_eq!(randomized.objective_value, exhaustive.objective_value, "n={n}");
        }
    }
}
