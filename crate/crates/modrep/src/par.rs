//! Data-parallel mapping for corpus checks.
//!
//! With the `parallel` feature (the default) independent items are evaluated
//! on the rayon pool; without it the same code runs sequentially. Checks
//! must derive any randomness from their own content, never from evaluation
//! order, so the two modes produce identical results.

#[cfg(feature = "parallel")]
pub fn map<T: Sync, U: Send, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Always-sequential mapping, kept for benchmark baselines.
pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

pub fn enabled() -> bool {
    cfg!(feature = "parallel")
}
