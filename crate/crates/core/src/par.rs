//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they fall back to plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn par_range<U: Send>(n: u64, f: impl Fn(u64) -> U + Sync + Send) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_range<U: Send>(n: u64, f: impl Fn(u64) -> U + Sync + Send) -> Vec<U> {
    (0..n).map(f).collect()
}

/// First index in `0..n` (smallest) for which `f` returns `Some`.
#[cfg(feature = "parallel")]
pub fn par_find_first<U: Send>(n: u64, f: impl Fn(u64) -> Option<U> + Sync + Send) -> Option<U> {
    (0..n).into_par_iter().filter_map(f).find_first(|_| true)
}

#[cfg(not(feature = "parallel"))]
pub fn par_find_first<U: Send>(n: u64, f: impl Fn(u64) -> Option<U> + Sync + Send) -> Option<U> {
    (0..n).find_map(f)
}

pub fn par_all(n: u64, f: impl Fn(u64) -> bool + Sync + Send) -> bool {
    par_find_first(n, |i| if f(i) { None } else { Some(()) }).is_none()
}
