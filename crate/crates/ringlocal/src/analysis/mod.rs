//! Combinatorics of the largest-id worst case: the segment-sum recurrence,
//! its popcount-sum oracle, exhaustive search over permutations, and the
//! explicit worst-case construction.

mod recurrence;
mod worst_case;

pub use recurrence::{
    average_radius_closed_form, popcount_sum_oracle, predicted_worst_sum, recurrence_table,
    recurrence_table_exhaustive, RecurrenceTable,
};
pub use worst_case::{
    brute_force_worst_sum, worst_case_builder, AnalysisError, WorstCaseReport,
    DEFAULT_ENUMERATION_CAP,
};
