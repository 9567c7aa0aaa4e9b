//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! work out over rayon; without it every call runs sequentially. Results
//! never depend on the execution mode: maps are collected in index order and
//! reductions must be associative and commutative.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually runs on the thread pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `(0..n).map(f).collect()`, in index order.
pub fn map_indices<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Maps every index and folds the results with `reduce`.
pub fn map_reduce<T, F, R>(exec: Execution, n: usize, map: F, identity: T, reduce: R) -> T
where
    T: Send + Sync + Clone,
    F: Fn(usize) -> T + Send + Sync,
    R: Fn(T, T) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n)
            .into_par_iter()
            .map(map)
            .reduce(|| identity.clone(), &reduce);
    }
    let _ = exec;
    (0..n).map(map).fold(identity, reduce)
}

/// Keeps the larger key; ties go to the smaller index so the winner is
/// independent of how work was split.
pub fn max_by_key_index<K: Ord, V>(a: Option<(K, usize, V)>, b: Option<(K, usize, V)>) -> Option<(K, usize, V)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = map_indices(Execution::Sequential, 100, |i| i * i);
        let par = map_indices(Execution::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);
        let s = map_reduce(Execution::Sequential, 1000, |i| i as u64, 0, |a, b| a + b);
        let p = map_reduce(Execution::Parallel, 1000, |i| i as u64, 0, |a, b| a + b);
        assert_eq!(s, p);
    }

    #[test]
    fn max_tie_break_prefers_lower_index() {
        let a = Some((5, 7, "a"));
        let b = Some((5, 3, "b"));
        assert_eq!(max_by_key_index(a, b).unwrap().2, "b");
        assert_eq!(max_by_key_index(Some((5, 3, "b")), Some((5, 7, "a"))).unwrap().2, "b");
    }
}
