//! Exhaustive labeled-graph catalogs and the order-preserving parallel map
//! that every catalog scan runs on.
//!
//! With the `parallel` feature (default) work is spread over rayon's global
//! pool; without it, or with [`Execution::Sequential`], everything runs on
//! the calling thread. Results come back in input order either way.

use std::ops::Range;

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order the built-in generator enumerates by default.
pub const EXHAUSTIVE_LIMIT: usize = 6;
/// Largest order reachable with `allow_large`.
pub const LARGE_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("exhaustive catalogs need 1 <= n <= {limit}, got {n}")]
    OrderOutOfRange { n: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Number of labeled graphs on `n` vertices, `2^C(n,2)`.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Checks `n` against the generator caps.
pub fn check_order(n: usize, allow_large: bool) -> Result<(), CatalogError> {
    let limit = if allow_large { LARGE_LIMIT } else { EXHAUSTIVE_LIMIT };
    if n == 0 || n > limit {
        Err(CatalogError::OrderOutOfRange { n, limit })
    } else {
        Ok(())
    }
}

/// The labeled graph whose edge set is given by `mask` over [`pairs`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![VertexSet::empty(n); n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i].insert(j);
            rows[j].insert(i);
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// All labeled graphs on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize, allow_large: bool) -> Result<impl Iterator<Item = Graph>, CatalogError> {
    check_order(n, allow_large)?;
    let pairs = pairs(n);
    Ok((0..labeled_count(n)).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// Maps `f` over `items`, dropping `None`s, preserving input order.
pub fn filter_map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items
                .par_iter()
                .enumerate()
                .filter_map(|(i, t)| f(i, t))
                .collect()
        }
        _ => items
            .iter()
            .enumerate()
            .filter_map(|(i, t)| f(i, t))
            .collect(),
    }
}

/// Maps `f` over a range of masks, dropping `None`s, preserving order.
pub fn filter_map_range<R, F>(range: Range<u64>, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            range.into_par_iter().filter_map(f).collect()
        }
        _ => range.filter_map(f).collect(),
    }
}

/// Runs `f` on every labeled graph on `n` vertices (with its mask).
pub fn filter_map_exhaustive<R, F>(
    n: usize,
    allow_large: bool,
    exec: Execution,
    f: F,
) -> Result<Vec<R>, CatalogError>
where
    R: Send,
    F: Fn(u64, &Graph) -> Option<R> + Sync + Send,
{
    check_order(n, allow_large)?;
    let pairs = pairs(n);
    Ok(filter_map_range(0..labeled_count(n), exec, |mask| {
        f(mask, &graph_from_mask(n, &pairs, mask))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_caps() {
        assert_eq!(labeled_count(1), 1);
        assert_eq!(labeled_count(4), 64);
        assert_eq!(labeled_count(6), 32_768);
        assert_eq!(labeled_graphs(4, false).unwrap().count(), 64);
        assert!(labeled_graphs(7, false).is_err());
        assert!(check_order(7, true).is_ok());
        assert!(check_order(8, true).is_err());
        assert!(check_order(0, false).is_err());
    }

    #[test]
    fn masks_enumerate_distinct_graphs() {
        let all: Vec<Graph> = labeled_graphs(4, false).unwrap().collect();
        for (m, g) in all.iter().enumerate() {
            assert_eq!(g.edge_count() as u32, (m as u64).count_ones());
        }
        let mut sorted: Vec<String> = all.iter().map(crate::graph6::encode).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 64);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |mask: u64, g: &Graph| g.edge_count().is_multiple_of(3).then_some(mask);
        let seq = filter_map_exhaustive(5, false, Execution::Sequential, f).unwrap();
        let par = filter_map_exhaustive(5, false, Execution::Parallel, f).unwrap();
        assert_eq!(seq, par);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
    }
}
