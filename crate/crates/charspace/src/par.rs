//! Thin switch between rayon data-parallel loops and sequential fallbacks.
//!
//! Built with the `parallel` feature (the default) the helpers fan work out
//! over the global rayon pool; without it they run the same closures on the
//! current thread.  Results are deterministic either way: mapping preserves
//! order and reductions are only used with associative, commutative merges.

#[cfg(feature = "parallel")]
pub fn map_vec<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    F: Fn(I) -> O,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn fold_reduce<I, A, FInit, FFold, FMerge>(
    items: Vec<I>,
    init: FInit,
    fold: FFold,
    merge: FMerge,
) -> A
where
    I: Send,
    A: Send,
    FInit: Fn() -> A + Sync + Send,
    FFold: Fn(A, I) -> A + Sync + Send,
    FMerge: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;
    items
        .into_par_iter()
        .fold(&init, &fold)
        .reduce(&init, &merge)
}

#[cfg(not(feature = "parallel"))]
pub fn fold_reduce<I, A, FInit, FFold, FMerge>(
    items: Vec<I>,
    init: FInit,
    fold: FFold,
    _merge: FMerge,
) -> A
where
    FInit: Fn() -> A,
    FFold: Fn(A, I) -> A,
{
    items.into_iter().fold(init(), fold)
}
