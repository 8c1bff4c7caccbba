//! Construction fidelity of the concatenated hard permutation: slice
//! preservation, decision transfer, and validity of the built rings.

use ringlocal::adversary::{
    build_linial_instance, concatenate_slices, extract_slice, search_hard_permutation,
    verify_ball_preservation, HardnessTarget, Objective, SearchBudget,
};
use ringlocal::algorithms::{FixedRadiusDigest, LargestId};
use ringlocal::model::{run_node, NodeAlgorithm, RingInstance};

#[test]
fn slice_fidelity_and_count_across_algorithms() {
    for n in [8usize, 16, 33] {
        let rho = HardnessTarget::for_ring(n).target_radius;
        let digest = FixedRadiusDigest { radius: rho };
        let algorithms: [&dyn NodeAlgorithm; 2] = [&LargestId, &digest];
        for (which, algorithm) in algorithms.into_iter().enumerate() {
            let budget = SearchBudget::randomized(40, 7 + which as u64);
            let built = build_linial_instance(algorithm, n, &budget, Objective::MaxRadius, 9).unwrap();

            // built ring revalidates from scratch
            assert!(RingInstance::new(built.instance.ids().to_vec()).is_ok());
            assert_eq!(built.instance.n(), n);

            // each slice removes 2*rho+1 ids until fewer than n/2 remain
            let floor = n.div_ceil(2).div_ceil(2 * rho + 1);
            assert!(built.slices.len() >= floor, "n={n} algo={}", algorithm.name());

            for record in &built.slices {
                assert!(
                    verify_ball_preservation(
                        &record.source,
                        &built.instance,
                        record.source_center,
                        record.pi_center,
                        rho,
                    ),
                    "n={n} slice={} algo={}",
                    record.slice_index,
                    algorithm.name()
                );
            }
        }
    }
}

/// When a slice centre stops within the preserved radius, its behaviour
/// transfers to the built ring exactly: same stopping radius, same output.
#[test]
fn decision_transfer_at_preserved_centres() {
    let mut non_vacuous = 0usize;
    for n in [8usize, 16, 33] {
        let rho = HardnessTarget::for_ring(n).target_radius;
        let digest = FixedRadiusDigest { radius: rho };
        let algorithms: [&dyn NodeAlgorithm; 2] = [&digest, &LargestId];
        for algorithm in algorithms {
            let budget = SearchBudget::randomized(30, 11);
            let built = build_linial_instance(algorithm, n, &budget, Objective::MaxRadius, 9).unwrap();
            for record in &built.slices {
                if record.source_radius <= rho {
                    non_vacuous += 1;
                    assert_eq!(record.pi_radius, record.source_radius);
                    assert_eq!(record.pi_output, record.source_output);
                    let (output, radius) =
                        run_node(algorithm, &record.source, record.source_center).unwrap();
                    assert_eq!((output, radius), (record.source_output, record.source_radius));
                }
            }
        }
    }
    assert!(non_vacuous > 0, "the digest control must exercise the transfer");
}

/// Beyond the preserved radius the views typically diverge at the slice
/// boundary.
#[test]
fn preservation_degrades_past_the_slice_radius() {
    let source = RingInstance::new(vec![6, 1, 5, 2, 4, 3]).unwrap();
    let slice = extract_slice(&source, 2, 1).unwrap();
    assert_eq!(slice.ids, vec![1, 5, 2]);
    let built = concatenate_slices(&[slice], &[3, 4, 6], 6).unwrap();
    assert_eq!(built.ids(), &[1, 5, 2, 3, 4, 6]);
    assert!(verify_ball_preservation(&source, &built, 2, 1, 1));
    assert!(!verify_ball_preservation(&source, &built, 2, 1, 2));
}

#[test]
fn exhaustive_search_certifies_small_instances() {
    let outcome = search_hard_permutation(
        &LargestId,
        6,
        &SearchBudget::exhaustive(),
        Objective::AverageRadius,
        9,
    )
    .unwrap();
    assert!(!outcome.best_effort);
    // ceil(6/2) + a(5) = 3 + 7
    assert_eq!(outcome.objective_value, 10);

    let randomized = search_hard_permutation(
        &LargestId,
        6,
        &SearchBudget::randomized(3000, 1),
        Objective::AverageRadius,
        9,
    )
    .unwrap();
    assert!(randomized.best_effort);
    assert_eq!(randomized.objective_value, outcome.objective_value);
}
