//! Cole-Vishkin 3-colouring with a fixed, instance-independent round budget.
//!
//! Starting from identifiers read as `L`-bit colour strings, each node
//! repeatedly replaces its colour by `2i + b`, where `i` is the lowest bit
//! position at which its colour differs from its successor's and `b` is its
//! own bit there. After `R(L)` such rounds at most six colours remain; three
//! shift-and-recolour passes then eliminate colours 5, 4 and 3.
//!
//! Every node stops at the same radius `T = R(L) + 6`: one radius unit per
//! reduction round, and two per eliminated colour (the shift needs the
//! successor's fresh colour, the recolour both neighbours' post-shift
//! colours). A node's final colour is a function of its radius-`T` ball
//! alone, which is what the `NodeAlgorithm` form evaluates.

use crate::model::{
    Ball, Colour, Decision, Id, NodeAlgorithm, Output, RadiusProfile, RingInstance,
};

use super::AlgorithmError;

/// Colours eliminated after the reduction phase, in order.
const ELIMINATED_COLOURS: [Colour; 3] = [5, 4, 3];

/// Number of radius units consumed by the elimination phase: two per colour.
const ELIMINATION_ROUNDS: u32 = 6;

fn bit_length(x: u64) -> u32 {
    u64::BITS - x.leading_zeros()
}

/// Round budget for a given initial colour length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CvConfig {
    initial_bits: u32,
    reduction_rounds: u32,
    elimination_rounds: u32,
    total_radius: usize,
}

impl CvConfig {
    /// Budget for identifiers drawn from a `2^initial_bits` universe.
    /// `initial_bits` must lie in `1..=64`.
    pub fn new(initial_bits: u32) -> Self {
        assert!(
            (1..=64).contains(&initial_bits),
            "initial colour length must lie in 1..=64"
        );
        let mut max_colour = if initial_bits == 64 {
            u64::MAX
        } else {
            (1u64 << initial_bits) - 1
        };
        let mut reduction_rounds = 0;
        while max_colour > 5 {
            // one 2i+b round: i < bit_length, so the new maximum is 2*len - 1
            max_colour = 2 * u64::from(bit_length(max_colour)) - 1;
            reduction_rounds += 1;
        }
        CvConfig {
            initial_bits,
            reduction_rounds,
            elimination_rounds: ELIMINATION_ROUNDS,
            total_radius: reduction_rounds as usize + ELIMINATION_ROUNDS as usize,
        }
    }

    pub fn initial_bits(&self) -> u32 {
        self.initial_bits
    }

    pub fn reduction_rounds(&self) -> u32 {
        self.reduction_rounds
    }

    pub fn elimination_rounds(&self) -> u32 {
        self.elimination_rounds
    }

    pub fn total_radius(&self) -> usize {
        self.total_radius
    }

    /// Largest colour value that can be in play after `round` reductions.
    pub fn max_colour_after(&self, round: u32) -> u64 {
        let mut max_colour = if self.initial_bits == 64 {
            u64::MAX
        } else {
            (1u64 << self.initial_bits) - 1
        };
        for _ in 0..round {
            max_colour = 2 * u64::from(bit_length(max_colour)) - 1;
        }
        max_colour
    }

    /// The colour bit-length sequence `L_0 = L, L_{t+1} = bitlength(2 L_t - 1)`
    /// up to and including the first repeated (stabilised) value.
    pub fn colour_length_sequence(&self) -> Vec<u32> {
        let mut lengths = vec![self.initial_bits];
        loop {
            let current = *lengths.last().unwrap();
            let next = bit_length(2 * u64::from(current) - 1);
            lengths.push(next);
            if next == current {
                return lengths;
            }
        }
    }
}

/// The classic `2i + b` colour reduction against the successor's colour.
pub fn cv_reduce_colour(own: Colour, succ: Colour) -> Result<Colour, AlgorithmError> {
    if own == succ {
        return Err(AlgorithmError::EqualColours { colour: own });
    }
    let i = u64::from((own ^ succ).trailing_zeros());
    let b = (own >> i) & 1;
    Ok(2 * i + b)
}

/// Smallest colour in {0, 1, 2} different from both arguments.
fn free_colour(left: Colour, right: Colour) -> Colour {
    (0..3).find(|&c| c != left && c != right).unwrap()
}

/// Pipeline stages, recorded so tests can check properness throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CvStage {
    Initial,
    Reduction { round: u32 },
    Shift { eliminating: Colour },
    Recolour { eliminating: Colour },
}

/// Colour vectors after every stage of the synchronous pipeline.
#[derive(Debug, Clone)]
pub struct CvTrace {
    pub stages: Vec<(CvStage, Vec<Colour>)>,
}

impl CvTrace {
    pub fn final_colours(&self) -> &[Colour] {
        &self.stages.last().expect("non-empty trace").1
    }
}

fn run_pipeline(ids: &[Id], config: &CvConfig) -> Result<CvTrace, AlgorithmError> {
    let n = ids.len();
    if n == 1 {
        // No neighbour to conflict with; colour 0 immediately.
        return Ok(CvTrace { stages: vec![(CvStage::Initial, vec![0])] });
    }
    let mut colours: Vec<Colour> = ids.to_vec();
    let mut stages = vec![(CvStage::Initial, colours.clone())];
    for round in 1..=config.reduction_rounds {
        colours = (0..n)
            .map(|v| cv_reduce_colour(colours[v], colours[(v + 1) % n]))
            .collect::<Result<_, _>>()?;
        stages.push((CvStage::Reduction { round }, colours.clone()));
    }
    for x in ELIMINATED_COLOURS {
        colours = (0..n).map(|v| colours[(v + 1) % n]).collect();
        stages.push((CvStage::Shift { eliminating: x }, colours.clone()));
        let before = colours.clone();
        for v in 0..n {
            if before[v] == x {
                colours[v] = free_colour(before[(v + n - 1) % n], before[(v + 1) % n]);
            }
        }
        stages.push((CvStage::Recolour { eliminating: x }, colours.clone()));
    }
    Ok(CvTrace { stages })
}

/// Runs the full synchronous pipeline and keeps every intermediate colouring.
pub fn cole_vishkin_trace(
    instance: &RingInstance,
    config: &CvConfig,
) -> Result<CvTrace, AlgorithmError> {
    run_pipeline(instance.ids(), config)
}

/// Runs the synchronous pipeline and reports the colours together with the
/// uniform stopping profile: every node commits at radius `T` (radius 0 on a
/// single-node ring).
pub fn cole_vishkin(
    instance: &RingInstance,
    config: &CvConfig,
) -> Result<(Vec<Colour>, RadiusProfile), AlgorithmError> {
    let trace = cole_vishkin_trace(instance, config)?;
    let colours = trace.final_colours().to_vec();
    let radius = if instance.n() == 1 { 0 } else { config.total_radius };
    let outputs = colours.iter().map(|&c| Output::Colour(c)).collect();
    let radii = vec![radius; instance.n()];
    Ok((colours, RadiusProfile::new(outputs, radii)))
}

/// Recomputes the centre's final colour from an unwrapped window of
/// identifiers: offsets `-T..=+T` around the centre. The usable window
/// shrinks from the right through the reduction rounds and shifts, and from
/// both sides through the recolour steps; with `T = R + 6` the centre stays
/// determined throughout.
fn window_colour(window: &[Id], config: &CvConfig) -> Result<Colour, AlgorithmError> {
    let mut win: Vec<Colour> = window.to_vec();
    let centre = window.len() / 2;
    let mut lo = 0usize;
    let mut hi = win.len() - 1;
    for _ in 0..config.reduction_rounds {
        for i in lo..hi {
            win[i] = cv_reduce_colour(win[i], win[i + 1])?;
        }
        hi -= 1;
    }
    for x in ELIMINATED_COLOURS {
        for i in lo..hi {
            win[i] = win[i + 1];
        }
        hi -= 1;
        let before = win.clone();
        for i in (lo + 1)..hi {
            if before[i] == x {
                win[i] = free_colour(before[i - 1], before[i + 1]);
            }
        }
        lo += 1;
        hi -= 1;
    }
    debug_assert!(lo <= centre && centre <= hi);
    Ok(win[centre])
}

/// Cole-Vishkin as a ball-to-decision strategy: continue until radius `T`,
/// then commit to the colour determined by the ball.
///
/// On rings small enough that the radius-`T` ball has wrapped, the ball
/// contains the whole cycle and the node simply simulates the synchronous
/// pipeline on it; otherwise the centred window suffices.
#[derive(Debug, Clone, Copy)]
pub struct ColeVishkin {
    config: CvConfig,
}

impl ColeVishkin {
    pub fn new(config: CvConfig) -> Self {
        Self { config }
    }

    pub fn config(&self) -> &CvConfig {
        &self.config
    }

    fn colour_from_ball(&self, ball: &Ball) -> Colour {
        // A valid instance has distinct identifiers, so the pipeline cannot
        // encounter equal colours.
        if let Some(cycle) = ball.cycle_ids() {
            let trace = run_pipeline(&cycle, &self.config).expect("distinct ids");
            trace.final_colours()[0]
        } else {
            let window = ball
                .window(self.config.total_radius)
                .expect("ball of radius >= T");
            window_colour(&window, &self.config).expect("distinct ids")
        }
    }
}

impl NodeAlgorithm for ColeVishkin {
    fn name(&self) -> &str {
        "cole-vishkin"
    }

    fn decide(&self, ball: &Ball) -> Decision {
        if ball.radius() < self.config.total_radius {
            return Decision::Continue;
        }
        Decision::Output(Output::Colour(self.colour_from_ball(ball)))
    }

    // Fixed round budget: the algorithm ignores wrap detection and always
    // answers at radius T, even on rings with n <= 2T.
    fn radius_bound(&self, _n: usize) -> usize {
        self.config.total_radius
    }
}
