//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the indexed maps run on the rayon
//! pool. Reductions are performed afterwards in index order, so results are
//! bitwise independent of the thread count. Building without the feature
//! compiles the same entry points down to plain sequential loops.

/// Maps `f` over `0..n` and collects results in index order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference path, available regardless of features.
pub fn map_collect_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Compensated (Neumaier) sum in slice order.
pub fn sum_ordered(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_matches_seq() {
        let f = |i: usize| (i as f64).sin();
        assert_eq!(map_collect(1000, f), map_collect_seq(1000, f));
    }

    #[test]
    fn compensated_sum_is_exactish() {
        // 0.1 summed 10^5 times accumulates visible error with a naive fold.
        let v = vec![0.1f64; 100_000];
        let s = sum_ordered(&v);
        assert!((s - 10_000.0).abs() < 1e-9);
    }
}
