//! Data-parallel helpers.
//!
//! With the `parallel` feature these dispatch to rayon's global pool (or to
//! whatever pool the caller has installed); without it they run on the
//! calling thread. Results keep the input order in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let out = items.par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    let out = items.iter().map(f).collect();

    out
}

pub fn map_range<R, F>(range: std::ops::Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let out = range.into_par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    let out = range.map(f).collect();

    out
}

pub fn all<T, F>(items: &[T], pred: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let ok = items.par_iter().all(pred);

    #[cfg(not(feature = "parallel"))]
    let ok = items.iter().all(pred);

    ok
}

/// First item (in input order) for which `pred` fails, if any.
pub fn find_failure<T, F>(items: &[T], pred: F) -> Option<&T>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let bad = items.par_iter().find_first(|x| !pred(x));

    #[cfg(not(feature = "parallel"))]
    let bad = items.iter().find(|x| !pred(x));

    bad
}

pub fn count<T, F>(items: &[T], pred: F) -> usize
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let n = items.par_iter().filter(|x| pred(x)).count();

    #[cfg(not(feature = "parallel"))]
    let n = items.iter().filter(|x| pred(x)).count();

    n
}
