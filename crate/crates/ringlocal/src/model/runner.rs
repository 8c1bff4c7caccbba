//! The ball-growing execution contract: a node algorithm is a pure function
//! from balls to decisions, and the runner grows each node's ball until the
//! algorithm commits to an output.

use std::fmt;
use std::thread;

use num_rational::Ratio;

use super::ball::Ball;
use super::ring::{ModelError, RingInstance};

/// Colour values produced by colouring algorithms. Initial Cole-Vishkin
/// colours are raw identifiers, so the full 64-bit range is needed.
pub type Colour = u64;

/// Verdict of the largest-id problem: does this node hold the maximum?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeaderVerdict {
    Yes,
    No,
}

/// A committed per-node output, problem-specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Output {
    Leader(LeaderVerdict),
    Colour(Colour),
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Leader(LeaderVerdict::Yes) => write!(f, "Yes"),
            Output::Leader(LeaderVerdict::No) => write!(f, "No"),
            Output::Colour(c) => write!(f, "{c}"),
        }
    }
}

/// A node algorithm's verdict for one ball: keep growing, or commit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Continue,
    Output(Output),
}

/// A deterministic ball-to-decision node algorithm.
///
/// Implementations must satisfy the monotone-commitment contract: once
/// `decide` returns `Output(v)` for some ball of a node, it returns the same
/// `Output(v)` for every larger ball of that node.
pub trait NodeAlgorithm: Send + Sync {
    /// Registry name, also used in CSV output.
    fn name(&self) -> &str;

    fn decide(&self, ball: &Ball) -> Decision;

    /// Largest radius at which the algorithm may still be undecided on an
    /// `n`-ring. Reaching this radius with `Continue` is a contract
    /// violation. The default is the full-knowledge radius `ceil(n/2)`;
    /// fixed-round algorithms that run past wrap detection override it.
    fn radius_bound(&self, n: usize) -> usize {
        n.div_ceil(2)
    }

    /// Whether the algorithm's stopping radii are invariant under reversing
    /// the ring orientation. Enables the reflection quotient in exhaustive
    /// searches.
    fn reflection_symmetric(&self) -> bool {
        false
    }
}

/// Grows `node`'s ball from radius 0 and returns the committed output
/// together with the stopping radius r(v).
pub fn run_node<A>(
    algorithm: &A,
    instance: &RingInstance,
    node: usize,
) -> Result<(Output, usize), ModelError>
where
    A: NodeAlgorithm + ?Sized,
{
    let bound = algorithm.radius_bound(instance.n());
    for radius in 0..=bound {
        match algorithm.decide(&instance.ball(node, radius)?) {
            Decision::Output(value) => return Ok((value, radius)),
            Decision::Continue => {}
        }
    }
    Err(ModelError::NonTerminating { node, radius: bound })
}

/// Per-node outputs and stopping radii of one run, with exact statistics.
/// The average is kept as a reduced rational so equality tests are bit-exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusProfile {
    pub outputs: Vec<Output>,
    pub radii: Vec<usize>,
    pub sum_radii: u64,
    pub max_radius: usize,
    pub average_radius: Ratio<u64>,
}

impl RadiusProfile {
    pub fn new(outputs: Vec<Output>, radii: Vec<usize>) -> Self {
        assert_eq!(outputs.len(), radii.len());
        assert!(!radii.is_empty(), "profile of an empty ring");
        let sum_radii: u64 = radii.iter().map(|&r| r as u64).sum();
        let max_radius = radii.iter().copied().max().unwrap();
        let average_radius = Ratio::new(sum_radii, radii.len() as u64);
        Self { outputs, radii, sum_radii, max_radius, average_radius }
    }

    pub fn n(&self) -> usize {
        self.radii.len()
    }
}

/// Runs the algorithm at every node sequentially. This is the reference
/// semantics; `run_all_par` computes the same profile on worker threads.
pub fn run_all<A>(algorithm: &A, instance: &RingInstance) -> Result<RadiusProfile, ModelError>
where
    A: NodeAlgorithm + ?Sized,
{
    let n = instance.n();
    let mut outputs = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for node in 0..n {
        let (output, radius) = run_node(algorithm, instance, node)?;
        outputs.push(output);
        radii.push(radius);
    }
    Ok(RadiusProfile::new(outputs, radii))
}

/// Same profile as `run_all`, evaluated with nodes striped across threads.
/// Node evaluations are independent pure functions, so the result does not
/// depend on the schedule; errors are reported for the smallest node index.
pub fn run_all_par<A>(algorithm: &A, instance: &RingInstance) -> Result<RadiusProfile, ModelError>
where
    A: NodeAlgorithm + ?Sized,
{
    let n = instance.n();
    let workers = thread::available_parallelism().map_or(1, |p| p.get()).min(n);
    if workers <= 1 {
        return run_all(algorithm, instance);
    }
    let mut slots: Vec<Option<(Output, usize)>> = vec![None; n];
    let mut first_error: Option<(usize, ModelError)> = None;
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| {
                scope.spawn(move || {
                    let mut local = Vec::new();
                    let mut node = worker;
                    while node < n {
                        match run_node(algorithm, instance, node) {
                            Ok(result) => local.push((node, result)),
                            Err(err) => return Err((node, err)),
                        }
                        node += workers;
                    }
                    Ok(local)
                })
            })
            .collect();
        for handle in handles {
            match handle.join().expect("worker panicked") {
                Ok(local) => {
                    for (node, result) in local {
                        slots[node] = Some(result);
                    }
                }
                Err((node, err)) => {
                    if first_error.as_ref().is_none_or(|(seen, _)| node < *seen) {
                        first_error = Some((node, err));
                    }
                }
            }
        }
    });
    if let Some((_, err)) = first_error {
        return Err(err);
    }
    let mut outputs = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for slot in slots {
        let (output, radius) = slot.expect("every node evaluated");
        outputs.push(output);
        radii.push(radius);
    }
    Ok(RadiusProfile::new(outputs, radii))
}
