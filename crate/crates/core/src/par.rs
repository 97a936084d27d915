//! Data-parallel execution helpers.
//!
//! With the `parallel` feature (on by default) these fan work out across the
//! rayon thread pool; without it they run sequentially with identical
//! results. Every caller imposes output order by input index, so the two
//! builds are observationally equivalent and scheduling never leaks into
//! results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(feature = "parallel")]
pub fn ordered_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(not(feature = "parallel"))]
pub fn ordered_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// True iff `f` holds for every item.
#[cfg(feature = "parallel")]
pub fn all_of<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.par_iter().all(f)
}

/// True iff `f` holds for every item.
#[cfg(not(feature = "parallel"))]
pub fn all_of<T, F>(items: &[T], f: F) -> bool
where
    F: Fn(&T) -> bool,
{
    items.iter().all(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_map_preserves_input_order() {
        let items: Vec<u64> = (0..1000).collect();
        let doubled = ordered_map(&items, |&x| x * 2);
        assert_eq!(doubled, (0..1000).map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn all_of_matches_sequential_semantics() {
        let items: Vec<u64> = (0..1000).collect();
        assert!(all_of(&items, |&x| x < 1000));
        assert!(!all_of(&items, |&x| x != 999));
        assert!(all_of(&[] as &[u64], |_| false));
    }
}
