//! Execution mode switch. Parallel paths use rayon when the `parallel`
//! feature is enabled and fall back to sequential loops otherwise.

use crate::qalgebra::LaurentQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// True only when parallel execution is both requested and compiled in.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// Concatenation of `f(v)` for `v` in `lo..=hi`, in order.
pub(crate) fn par_flat_map_range<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> Vec<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let parts: Vec<Vec<T>> = (lo..=hi).into_par_iter().map(f).collect();
        parts.into_iter().flatten().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..=hi).flat_map(f).collect()
    }
}

/// `sum f(x)` over `items`; exact, so the result does not depend on the
/// reduction tree.
pub fn sum_laurent<T, F>(items: &[T], mode: ExecMode, f: F) -> LaurentQ
where
    T: Sync,
    F: Fn(&T) -> LaurentQ + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items
            .par_iter()
            .with_min_len(64)
            .fold(LaurentQ::zero, |mut acc, x| {
                acc += f(x);
                acc
            })
            .reduce(LaurentQ::zero, |a, b| a + b);
    }
    let _ = mode;
    items.iter().map(f).sum()
}

/// Runs `f` in a pool of `threads` workers when parallelism is compiled in.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(k) = threads {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}
