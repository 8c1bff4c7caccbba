//! Command execution: each subcommand renders one CSV document into a
//! string, so file output and stdout are byte-identical.

use std::fmt::Write as _;

use ringlocal::adversary::{
    build_linial_instance, AdversaryError, Objective, SearchBudget, SearchMode,
};
use ringlocal::algorithms::{AlgorithmError, AlgorithmParams, AlgorithmRegistry, LargestId};
use ringlocal::analysis::{
    brute_force_worst_sum, recurrence_table, worst_case_builder, AnalysisError,
    DEFAULT_ENUMERATION_CAP,
};
use ringlocal::model::{run_all_par, ModelError, RadiusProfile, RingInstance};
use ringlocal::rng::random_ring;

use crate::args::{Command, ModeArg, ObjectiveArg};

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV_VAR: &str = "RINGLOCAL_ENUM_CAP";

/// Largest permitted enumeration cap; factorial growth makes anything above
/// this unusable anyway.
pub const MAX_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    OracleMismatch { p: usize },
    CapExceeded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::OracleMismatch { .. } => 2,
            CliError::CapExceeded(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(message) => write!(f, "{message}"),
            CliError::OracleMismatch { p } => {
                write!(f, "recurrence disagrees with the popcount-sum oracle, first at p={p}")
            }
            CliError::CapExceeded(message) => write!(f, "{message}"),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        CliError::Validation(err.to_string())
    }
}

impl From<AlgorithmError> for CliError {
    fn from(err: AlgorithmError) -> Self {
        CliError::Validation(err.to_string())
    }
}

impl From<AnalysisError> for CliError {
    fn from(err: AnalysisError) -> Self {
        match err {
            AnalysisError::EnumerationCapExceeded { .. } => CliError::CapExceeded(err.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<AdversaryError> for CliError {
    fn from(err: AdversaryError) -> Self {
        match err {
            AdversaryError::EnumerationCapExceeded { .. } => {
                CliError::CapExceeded(err.to_string())
            }
            other => CliError::Validation(other.to_string()),
        }
    }
}

/// Renders the CSV for one command. Errors leave partial CSV undefined; the
/// binary only publishes the document on success.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Recurrence { p_max, .. } => recurrence_csv(*p_max),
        Command::Simulate { algorithm, ids, builder, random, n, seed, universe_bits, .. } => {
            simulate_csv(algorithm, ids.as_deref(), *builder, *random, *n, *seed, *universe_bits)
        }
        Command::Sweep { algorithm, n_range, universe_bits, .. } => {
            sweep_csv(algorithm, n_range, *universe_bits)
        }
        Command::Bruteforce { n, cap, .. } => bruteforce_csv(*n, *cap),
        Command::Adversary {
            algorithm,
            n,
            mode,
            max_evals,
            seed,
            objective,
            cap,
            universe_bits,
            ..
        } => adversary_csv(
            algorithm,
            *n,
            *mode,
            *max_evals,
            *seed,
            *objective,
            *cap,
            *universe_bits,
        ),
    }
}

pub fn output_path(command: &Command) -> Option<&std::path::Path> {
    match command {
        Command::Recurrence { out, .. }
        | Command::Simulate { out, .. }
        | Command::Sweep { out, .. }
        | Command::Bruteforce { out, .. }
        | Command::Adversary { out, .. } => out.as_deref(),
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    let cap = match flag {
        Some(cap) => cap,
        None => match std::env::var(CAP_ENV_VAR) {
            Ok(raw) => raw.parse::<usize>().map_err(|_| {
                CliError::Validation(format!("{CAP_ENV_VAR} must be an integer, got '{raw}'"))
            })?,
            Err(_) => DEFAULT_ENUMERATION_CAP,
        },
    };
    if !(1..=MAX_CAP).contains(&cap) {
        return Err(CliError::Validation(format!(
            "enumeration cap must lie in 1..={MAX_CAP}, got {cap}"
        )));
    }
    Ok(cap)
}

fn bit_length(x: u64) -> u32 {
    u64::BITS - x.leading_zeros()
}

/// Instances on identifiers {1..n} need the universe to hold the value n.
fn check_generated_universe(n: usize, universe_bits: u32) -> Result<(), CliError> {
    if bit_length(n as u64) > universe_bits {
        return Err(CliError::Validation(format!(
            "identifiers 1..={n} do not fit in a {universe_bits}-bit universe"
        )));
    }
    Ok(())
}

fn recurrence_csv(p_max: usize) -> Result<String, CliError> {
    let table = recurrence_table(p_max);
    let mut csv = String::from("p,a_p,oracle,match\n");
    let mut oracle_acc = 0u64;
    let mut first_mismatch = None;
    for p in 0..=p_max {
        oracle_acc += u64::from((p as u64).count_ones());
        let value = table.value(p);
        let matched = value == oracle_acc;
        if !matched && first_mismatch.is_none() {
            first_mismatch = Some(p);
        }
        writeln!(csv, "{p},{value},{oracle_acc},{matched}").expect("string write");
    }
    match first_mismatch {
        Some(p) => Err(CliError::OracleMismatch { p }),
        None => Ok(csv),
    }
}

fn profile_summary_row(profile: &RadiusProfile) -> String {
    format!(
        "{},{},{},{},{}",
        profile.n(),
        profile.sum_radii,
        profile.max_radius,
        profile.average_radius.numer(),
        profile.average_radius.denom()
    )
}

fn simulate_csv(
    algorithm: &str,
    ids: Option<&[u64]>,
    builder: bool,
    random: bool,
    n: Option<usize>,
    seed: u64,
    universe_bits: u32,
) -> Result<String, CliError> {
    let sources = usize::from(ids.is_some()) + usize::from(builder) + usize::from(random);
    if sources != 1 {
        return Err(CliError::Validation(
            "choose exactly one instance source: --ids, --builder or --random".into(),
        ));
    }
    let instance = if let Some(ids) = ids {
        RingInstance::with_universe_bits(ids.to_vec(), universe_bits)?
    } else {
        let n = n.ok_or_else(|| {
            CliError::Validation("--builder and --random need --n".into())
        })?;
        if n == 0 {
            return Err(CliError::Validation("--n must be at least 1".into()));
        }
        check_generated_universe(n, universe_bits)?;
        if builder {
            worst_case_builder(n)
        } else {
            random_ring(n, seed)
        }
    };
    let params = AlgorithmParams { universe_bits };
    let algorithm = AlgorithmRegistry::with_builtins().create(algorithm, &params)?;
    let profile = run_all_par(algorithm.as_ref(), &instance)?;
    let mut csv = String::from("node,id,output,radius\n");
    for node in 0..instance.n() {
        writeln!(
            csv,
            "{node},{},{},{}",
            instance.id(node),
            profile.outputs[node],
            profile.radii[node]
        )
        .expect("string write");
    }
    csv.push_str(&profile_summary_row(&profile));
    csv.push('\n');
    Ok(csv)
}

fn parse_n_range(spec: &str) -> Result<Vec<usize>, CliError> {
    let invalid =
        || CliError::Validation(format!("invalid --n-range '{spec}', expected a:b or a:b:geom"));
    let parts: Vec<&str> = spec.split(':').collect();
    let (bounds, geometric) = match parts.as_slice() {
        [a, b] => ((*a, *b), false),
        [a, b, "geom"] => ((*a, *b), true),
        _ => return Err(invalid()),
    };
    let a: usize = bounds.0.parse().map_err(|_| invalid())?;
    let b: usize = bounds.1.parse().map_err(|_| invalid())?;
    if a == 0 {
        return Err(CliError::Validation("--n-range start must be at least 1".into()));
    }
    let mut values = Vec::new();
    if geometric {
        let mut n = a;
        while n <= b {
            values.push(n);
            match n.checked_mul(2) {
                Some(next) => n = next,
                None => break,
            }
        }
    } else {
        values.extend(a..=b);
    }
    Ok(values)
}

fn sweep_csv(algorithm: &str, n_range: &str, universe_bits: u32) -> Result<String, CliError> {
    let range = parse_n_range(n_range)?;
    let params = AlgorithmParams { universe_bits };
    let algorithm = AlgorithmRegistry::with_builtins().create(algorithm, &params)?;
    let mut csv = String::from("n,max_radius,sum_radii,avg_num,avg_den\n");
    for n in range {
        check_generated_universe(n, universe_bits)?;
        let profile = run_all_par(algorithm.as_ref(), &worst_case_builder(n))?;
        writeln!(
            csv,
            "{n},{},{},{},{}",
            profile.max_radius,
            profile.sum_radii,
            profile.average_radius.numer(),
            profile.average_radius.denom()
        )
        .expect("string write");
    }
    Ok(csv)
}

fn bruteforce_csv(n: usize, cap: Option<usize>) -> Result<String, CliError> {
    let cap = resolve_cap(cap)?;
    let report = brute_force_worst_sum(n, &LargestId, cap)?;
    let witness: Vec<String> = report.witness.ids().iter().map(u64::to_string).collect();
    let mut csv = String::from("n,max_sum,max_radius,witness,predicted\n");
    writeln!(
        csv,
        "{n},{},{},\"{}\",{}",
        report.max_sum,
        report.witness_profile.max_radius,
        witness.join(","),
        report.predicted
    )
    .expect("string write");
    Ok(csv)
}

#[allow(clippy::too_many_arguments)]
fn adversary_csv(
    algorithm: &str,
    n: usize,
    mode: ModeArg,
    max_evals: u64,
    seed: u64,
    objective: ObjectiveArg,
    cap: Option<usize>,
    universe_bits: u32,
) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Validation("--n must be at least 1".into()));
    }
    let cap = resolve_cap(cap)?;
    check_generated_universe(n, universe_bits)?;
    let params = AlgorithmParams { universe_bits };
    let algorithm = AlgorithmRegistry::with_builtins().create(algorithm, &params)?;
    let budget = SearchBudget {
        mode: match mode {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::Randomized => SearchMode::Randomized,
        },
        max_evaluations: max_evals,
        seed,
    };
    let objective = match objective {
        ObjectiveArg::Max => Objective::MaxRadius,
        ObjectiveArg::Average => Objective::AverageRadius,
    };
    let built = build_linial_instance(algorithm.as_ref(), n, &budget, objective, cap)?;
    let mut csv = String::from("slice,centre,source_radius,pi_radius\n");
    for record in &built.slices {
        writeln!(
            csv,
            "{},{},{},{}",
            record.slice_index, record.pi_center, record.source_radius, record.pi_radius
        )
        .expect("string write");
    }
    Ok(csv)
}
