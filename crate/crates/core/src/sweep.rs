//! Sweeps over many independent parameters. With the `parallel` feature the
//! work is spread over a rayon pool; results always come back in input order.

use crate::graph::{connectivity_report_d, ConnectivityReport};
use crate::Result;

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    map_seq(items, f)
}

/// Sequential [`map`], always available for comparison.
pub fn map_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

/// Connectivity reports for every `d` in `ds`.
pub fn connectivity_sweep(
    p: u32,
    ds: impl IntoIterator<Item = u32>,
) -> Result<Vec<ConnectivityReport>> {
    map(ds.into_iter().collect(), |d| connectivity_report_d(p, d))
        .into_iter()
        .collect()
}

pub fn connectivity_sweep_seq(
    p: u32,
    ds: impl IntoIterator<Item = u32>,
) -> Result<Vec<ConnectivityReport>> {
    map_seq(ds.into_iter().collect(), |d| connectivity_report_d(p, d))
        .into_iter()
        .collect()
}
