//! Data-parallel helpers. With the `parallel` feature (default) the batch
//! maps run on rayon; without it they fall back to plain iterators. Results
//! preserve input order either way, so callers are deterministic.

#[cfg(feature = "parallel")]
pub(crate) fn map_batch<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_batch<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
