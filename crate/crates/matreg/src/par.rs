//! Data-parallel kernels with a sequential fallback.
//!
//! With the `parallel` feature (default) the slice combinators fan out over
//! rayon; without it, or with `parallel: false`, they run sequentially.
//! Output order is identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_slice<T: Sync, U: Send, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(&f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

pub fn filter_map_slice<T: Sync, U: Send, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().filter_map(&f).collect();
    }
    let _ = parallel;
    items.iter().filter_map(&f).collect()
}

/// Map over a range of u64 values, collecting the Some results in order.
pub fn filter_map_range<U: Send, F>(range: std::ops::Range<u64>, parallel: bool, f: F) -> Vec<U>
where
    F: Fn(u64) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return range.into_par_iter().filter_map(&f).collect();
    }
    let _ = parallel;
    range.filter_map(f).collect()
}
