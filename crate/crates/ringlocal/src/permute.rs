//! In-place permutation enumeration (Heap's algorithm).

/// Visits every permutation of `items` exactly once, including the initial
/// order.
pub(crate) fn for_each_permutation<T, F>(items: &mut [T], mut visit: F)
where
    F: FnMut(&[T]),
{
    let n = items.len();
    visit(items);
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            visit(items);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visits_each_order_once() {
        for n in 0..=5usize {
            let mut items: Vec<usize> = (0..n).collect();
            let mut seen = std::collections::HashSet::new();
            for_each_permutation(&mut items, |perm| {
                assert!(seen.insert(perm.to_vec()));
            });
            let factorial: usize = (1..=n.max(1)).product();
            assert_eq!(seen.len(), factorial);
        }
    }
}
