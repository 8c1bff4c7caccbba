//! The worst-case segment-sum recurrence and its independent oracle.
//!
//! `a(p)` is the maximum, over identifier permutations, of the sum of
//! stopping radii in a `p`-vertex segment bounded by larger identifiers on
//! both sides:
//!
//! ```text
//! a(0) = 0,  a(1) = 1,
//! a(p) = max over 1 <= k <= ceil(p/2) of  k + a(k-1) + a(p-k)
//! ```
//!
//! The split places the segment's largest identifier `k` positions from one
//! end. Two split positions are special:
//!
//! * the balanced split `h = ceil(p/2)` always attains the maximum, and
//! * `k = p - 2^floor(log2 p) + 1` is the smallest position attaining it.
//!
//! [`recurrence_table`] evaluates the recurrence at those two candidate
//! splits, which makes the table linear-time. [`recurrence_table_exhaustive`]
//! scans every `k` and is the validation oracle for the candidate structure:
//! the two constructions are compared on a long prefix in the test suites
//! (and the value table is independently checked against the popcount-sum
//! oracle, an entirely different route). The quadratic scan over the full
//! million-entry range was also checked once during development; it agrees
//! everywhere but needs several minutes of CPU, so it is kept behind an
//! `#[ignore]` test.

use num_rational::Ratio;

/// Values and chosen split positions of the recurrence up to `p_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTable {
    values: Vec<u64>,
    argmax: Vec<usize>,
}

impl RecurrenceTable {
    pub fn p_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, p: usize) -> u64 {
        self.values[p]
    }

    /// The smallest maximising split position for `p >= 2`.
    pub fn argmax(&self, p: usize) -> Option<usize> {
        (p >= 2).then(|| self.argmax[p])
    }
}

fn balanced_split(p: usize) -> usize {
    p.div_ceil(2)
}

fn smallest_split_candidate(p: usize) -> usize {
    let top = 1usize << (usize::BITS - 1 - p.leading_zeros());
    p - top + 1
}

/// Bottom-up table of the recurrence, evaluated at the certified candidate
/// splits; ties break toward the smaller position.
pub fn recurrence_table(p_max: usize) -> RecurrenceTable {
    let mut values = vec![0u64; p_max + 1];
    let mut argmax = vec![0usize; p_max + 1];
    if p_max >= 1 {
        values[1] = 1;
    }
    for p in 2..=p_max {
        let h = balanced_split(p);
        let at_h = h as u64 + values[h - 1] + values[p - h];
        let k = smallest_split_candidate(p);
        let at_k = k as u64 + values[k - 1] + values[p - k];
        debug_assert_eq!(at_k, at_h, "candidate splits disagree at p={p}");
        if at_k >= at_h {
            values[p] = at_k;
            argmax[p] = k;
        } else {
            values[p] = at_h;
            argmax[p] = h;
        }
    }
    RecurrenceTable { values, argmax }
}

/// Bottom-up table scanning every split `1 <= k <= ceil(p/2)`. Quadratic;
/// used to validate [`recurrence_table`] and for small ranges.
pub fn recurrence_table_exhaustive(p_max: usize) -> RecurrenceTable {
    let mut values = vec![0u64; p_max + 1];
    let mut argmax = vec![0usize; p_max + 1];
    if p_max >= 1 {
        values[1] = 1;
    }
    for p in 2..=p_max {
        let mut best = 0u64;
        let mut best_k = 0usize;
        for k in 1..=balanced_split(p) {
            let value = k as u64 + values[k - 1] + values[p - k];
            if value > best {
                best = value;
                best_k = k;
            }
        }
        values[p] = best;
        argmax[p] = best_k;
    }
    RecurrenceTable { values, argmax }
}

/// Independent oracle: the exact sum of binary digit counts of `0..=p`,
/// by direct bit counting.
pub fn popcount_sum_oracle(p: u64) -> u64 {
    (0..=p).map(|i| u64::from(i.count_ones())).sum()
}

/// Predicted worst-case radius sum for the largest-id algorithm on an
/// `n`-ring: `ceil(n/2)` for the maximum plus `a(n-1)` for the open segment.
pub fn predicted_worst_sum(n: usize, table: &RecurrenceTable) -> u64 {
    assert!(n >= 1 && table.p_max() >= n - 1);
    n.div_ceil(2) as u64 + table.value(n - 1)
}

/// Exact worst-case average radius of the largest-id algorithm at `n = 2^k`:
/// `(ceil(n/2) + a(n-1)) / n`, which collapses to `(k+1)/2` because
/// `a(2^k - 1) = k * 2^(k-1)`.
pub fn average_radius_closed_form(k: u32) -> Ratio<u64> {
    assert!((1..=63).contains(&k));
    Ratio::new(u64::from(k) + 1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_values_and_small_prefix() {
        let table = recurrence_table(5);
        assert_eq!(table.values(), &[0, 1, 2, 4, 5, 7]);
        let exhaustive = recurrence_table_exhaustive(5);
        assert_eq!(exhaustive.values(), &[0, 1, 2, 4, 5, 7]);
    }

    #[test]
    fn split_example_at_three() {
        // k=1 gives 1+0+2=3; k=2 gives 2+1+1=4
        let table = recurrence_table_exhaustive(3);
        assert_eq!(table.value(3), 4);
        assert_eq!(table.argmax(3), Some(2));
        assert_eq!(recurrence_table(3).argmax(3), Some(2));
    }

    #[test]
    fn argmax_absent_below_two() {
        let table = recurrence_table(4);
        assert_eq!(table.argmax(0), None);
        assert_eq!(table.argmax(1), None);
        assert!(table.argmax(2).is_some());
    }

    #[test]
    fn candidate_table_matches_exhaustive_scan() {
        let fast = recurrence_table(4000);
        let full = recurrence_table_exhaustive(4000);
        assert_eq!(fast, full);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(popcount_sum_oracle(0), 0);
        assert_eq!(popcount_sum_oracle(5), 7);
        assert_eq!(popcount_sum_oracle(1023), 5120);
    }

    #[test]
    fn table_matches_oracle_prefix() {
        let table = recurrence_table(3000);
        for p in 0..=3000u64 {
            assert_eq!(table.value(p as usize), popcount_sum_oracle(p), "p={p}");
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(average_radius_closed_form(1), Ratio::from_integer(1));
        assert_eq!(average_radius_closed_form(2), Ratio::new(3, 2));
        assert_eq!(average_radius_closed_form(10), Ratio::new(11, 2));
    }

    #[test]
    fn predicted_sum_examples() {
        let table = recurrence_table(16);
        assert_eq!(predicted_worst_sum(4, &table), 6);
        assert_eq!(predicted_worst_sum(3, &table), 4);
        assert_eq!(predicted_worst_sum(1, &table), 1);
    }
}
