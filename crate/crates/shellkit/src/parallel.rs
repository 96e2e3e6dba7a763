//! Small deterministic parallelism helpers: work is split by index and
//! results come back in index order, so the outcome never depends on the
//! thread count.

use rayon::prelude::*;

pub fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction")
}

/// Runs `f` on every index `0..n` and collects the results in index order.
pub fn run_indexed<T, F>(n: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    pool(threads).install(|| (0..n).into_par_iter().map(f).collect())
}
