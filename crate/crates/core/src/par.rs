//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature these dispatch to rayon; without it they are
//! plain iterator loops. Every helper preserves input order in its output,
//! so callers get the same result regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, keeping the input order.
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Keeps the items for which `keep` holds, in input order.
pub fn filter<T, F>(items: Vec<T>, keep: F) -> Vec<T>
where
    T: Send,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().filter(|x| keep(x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().filter(|x| keep(x)).collect()
    }
}

/// Maps and flattens, keeping the input order.
pub fn flat_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().flat_map(f).collect()
    }
}

/// First element (in range order) of `lo..hi` mapped to `Some` by `f`.
///
/// The parallel version still returns the least index, not whichever thread
/// finishes first.
pub fn find_first_in_range<R, F>(lo: i64, hi: i64, f: F) -> Option<R>
where
    R: Send,
    F: Fn(i64) -> Option<R> + Sync + Send,
{
    if hi <= lo {
        return None;
    }
    #[cfg(feature = "parallel")]
    {
        // Small ranges are not worth the scheduling overhead.
        if hi - lo < 4096 {
            return (lo..hi).find_map(f);
        }
        (lo..hi).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..hi).find_map(f)
    }
}

/// Whether rayon is compiled in.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
