//! Pipeline-level properties of the Cole-Vishkin strategy: properness at
//! every intermediate stage, colour-range contraction, and locality of the
//! ball-based recomputation.

use ringlocal::algorithms::{cole_vishkin, cole_vishkin_trace, ColeVishkin, CvConfig, CvStage};
use ringlocal::model::{run_all, run_node, verify_colouring, Colour, Output, RingInstance};
use ringlocal::rng::{random_ring, random_ring_in_universe};

fn assert_proper(colours: &[Colour], context: &str) {
    let n = colours.len();
    if n <= 1 {
        return;
    }
    for v in 0..n {
        assert_ne!(colours[v], colours[(v + 1) % n], "{context}: nodes {v},{}", (v + 1) % n);
    }
}

fn stage_bound(config: &CvConfig, stage: CvStage) -> u64 {
    match stage {
        CvStage::Initial => config.max_colour_after(0),
        CvStage::Reduction { round } => config.max_colour_after(round),
        CvStage::Shift { eliminating } => eliminating,
        CvStage::Recolour { eliminating } => eliminating - 1,
    }
}

#[test]
fn every_stage_stays_proper_and_contracts() {
    let cases = [
        (2usize, 8u32, 100u64),
        (3, 8, 101),
        (4, 4, 102),
        (5, 16, 103),
        (8, 8, 104),
        (16, 8, 105),
        (33, 16, 106),
        (100, 32, 107),
        (257, 64, 108),
    ];
    for (n, bits, seed) in cases {
        let ring = random_ring_in_universe(n, seed, bits);
        let config = CvConfig::new(bits);
        let trace = cole_vishkin_trace(&ring, &config).unwrap();
        assert_eq!(
            trace.stages.len() as u32,
            1 + config.reduction_rounds() + 6,
            "one entry per stage"
        );
        for (stage, colours) in &trace.stages {
            assert_proper(colours, &format!("n={n} bits={bits} stage={stage:?}"));
            let bound = stage_bound(&config, *stage);
            assert!(
                colours.iter().all(|&c| c <= bound),
                "n={n} stage={stage:?}: colour above {bound}"
            );
        }
        let finals = trace.final_colours();
        assert!(finals.iter().all(|&c| c <= 2));
    }
}

#[test]
fn single_node_and_pair_edge_cases() {
    let single = RingInstance::new(vec![9]).unwrap();
    let config = CvConfig::new(8);
    let (colours, profile) = cole_vishkin(&single, &config).unwrap();
    assert_eq!(colours, vec![0]);
    assert_eq!(profile.radii, vec![0]);

    let pair = RingInstance::new(vec![3, 5]).unwrap();
    let (colours, profile) = cole_vishkin(&pair, &config).unwrap();
    assert_ne!(colours[0], colours[1]);
    assert!(colours.iter().all(|&c| c <= 2));
    assert_eq!(profile.radii, vec![config.total_radius(); 2]);
}

/// Recomputing any node from its radius-T ball alone reproduces the global
/// synchronous simulation, at a size where the ball wraps (n=16) and at one
/// where it does not (n=1000).
#[test]
fn ball_recomputation_matches_global_simulation() {
    let config = CvConfig::new(64);
    assert_eq!(config.total_radius(), 10);
    let algorithm = ColeVishkin::new(config);
    for n in [16usize, 1000] {
        for run in 0..100u64 {
            let seed = run * 2 + n as u64;
            let ring = if run % 2 == 0 {
                random_ring_in_universe(n, seed, 64)
            } else {
                random_ring(n, seed)
            };
            let (colours, _) = cole_vishkin(&ring, &config).unwrap();
            let outputs: Vec<Output> = colours.iter().map(|&c| Output::Colour(c)).collect();
            assert!(verify_colouring(&ring, &outputs, 3));
            for (node, &colour) in colours.iter().enumerate() {
                let (output, radius) = run_node(&algorithm, &ring, node).unwrap();
                assert_eq!(output, Output::Colour(colour), "n={n} seed={seed} node={node}");
                assert_eq!(radius, config.total_radius());
            }
        }
    }
}

#[test]
fn uniform_radius_through_the_generic_runner() {
    let config = CvConfig::new(16);
    let algorithm = ColeVishkin::new(config);
    let ring = random_ring(64, 9);
    let profile = run_all(&algorithm, &ring).unwrap();
    assert!(profile.radii.iter().all(|&r| r == config.total_radius()));
    assert!(verify_colouring(&ring, &profile.outputs, 3));
    assert_eq!(profile.max_radius, config.total_radius());
    assert_eq!(
        profile.average_radius,
        num_rational::Ratio::from_integer(config.total_radius() as u64)
    );
}
