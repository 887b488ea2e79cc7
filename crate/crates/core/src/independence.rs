//! The independence complex at the resolutions the deciders need: facets
//! (maximal independent sets), the independence number, and the ridges
//! (independent sets of size `alpha - 1`) with their fibers.

use serde::Serialize;

use crate::error::IndependenceError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An independent set of size `alpha - 1` and the vertices completing it to
/// a maximum independent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ridge {
    pub face: VertexSet,
    pub fiber: VertexSet,
}

/// Facets, purity and codimension-one data of the independence complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceProfile {
    pub alpha: usize,
    /// All maximal independent sets, in colex order.
    pub facets: Vec<VertexSet>,
    /// Every facet has size `alpha` (the graph is well-covered).
    pub is_pure: bool,
    /// All independent `(alpha - 1)`-sets in colex order. For `alpha == 1`
    /// this is the single empty ridge.
    pub ridges: Vec<Ridge>,
}

impl IndependenceProfile {
    /// Smallest fiber size over all ridges.
    pub fn min_fiber(&self) -> usize {
        self.ridges
            .iter()
            .map(|r| r.fiber.len())
            .min()
            .expect("every graph has at least one ridge")
    }
}

/// Maximal independent sets in colex order.
///
/// These are the maximal cliques of the complement, enumerated by pivoting
/// Bron–Kerbosch over the complement's adjacency rows.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let full = g.vertices();
    let compat: Vec<VertexSet> = (0..n)
        .map(|v| full.difference(g.neighbors(v)).without(v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(
        &compat,
        VertexSet::empty(n),
        full,
        VertexSet::empty(n),
        &mut out,
    );
    out.sort_unstable();
    out
}

/// Maximal cliques of the graph whose adjacency rows are `rows`.
fn bron_kerbosch(
    rows: &[VertexSet],
    current: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current);
        }
        return;
    }
    let pivot = candidates
        .union(&excluded)
        .iter()
        .max_by_key(|&u| candidates.intersection(&rows[u]).len())
        .expect("candidates nonempty");
    for v in candidates.difference(&rows[pivot]).iter() {
        bron_kerbosch(
            rows,
            current.with(v),
            candidates.intersection(&rows[v]),
            excluded.intersection(&rows[v]),
            out,
        );
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Independence number by branch and bound.
pub fn alpha(g: &Graph) -> usize {
    let mut best = 0;
    max_independent(g, g.vertices(), 0, &mut best);
    best
}

fn max_independent(g: &Graph, candidates: VertexSet, size: usize, best: &mut usize) {
    if size + candidates.len() <= *best {
        return;
    }
    let Some((v, deg)) = candidates
        .iter()
        .map(|v| (v, g.neighbors(v).intersection(&candidates).len()))
        .max_by_key(|&(_, d)| d)
    else {
        *best = size;
        return;
    };
    if deg == 0 {
        *best = size + candidates.len();
        return;
    }
    let closed = g.neighbors(v).with(v);
    max_independent(g, candidates.difference(&closed), size + 1, best);
    max_independent(g, candidates.without(v), size, best);
}

/// True iff every maximal independent set has the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    let facets = maximal_independent_sets(g);
    facets.iter().all(|f| f.len() == facets[0].len())
}

/// Independent sets of exactly `k` vertices, in colex order.
pub fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    extend_independent(g, VertexSet::empty(g.n()), g.vertices(), k, &mut out);
    out.sort_unstable();
    out
}

fn extend_independent(
    g: &Graph,
    current: VertexSet,
    allowed: VertexSet,
    k: usize,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == k {
        out.push(current);
        return;
    }
    if current.len() + allowed.len() < k {
        return;
    }
    let mut allowed = allowed;
    while let Some(v) = allowed.first() {
        allowed.remove(v);
        let next = allowed.difference(g.neighbors(v));
        extend_independent(g, current.with(v), next, k, out);
    }
}

/// Vertices `x` outside `s` such that `s ∪ {x}` is independent of size
/// `target`. Assumes `s` is independent.
fn extension_set(g: &Graph, s: &VertexSet, target: usize) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    if s.len() + 1 != target {
        return out;
    }
    for x in 0..g.n() {
        if !s.contains(x) && g.neighbors(x).is_disjoint(s) {
            out.insert(x);
        }
    }
    out
}

/// The fiber over a ridge: vertices completing `s` to a maximum independent set.
pub fn fiber(g: &Graph, s: &VertexSet) -> Result<VertexSet, IndependenceError> {
    if !g.is_independent(s) {
        return Err(IndependenceError::NotIndependent);
    }
    let a = alpha(g);
    if s.len() + 1 != a {
        return Err(IndependenceError::WrongSize {
            expected: a - 1,
            found: s.len(),
        });
    }
    Ok(extension_set(g, s, a))
}

pub fn profile(g: &Graph) -> IndependenceProfile {
    let facets = maximal_independent_sets(g);
    let alpha = facets.iter().map(VertexSet::len).max().unwrap_or(0);
    let is_pure = facets.iter().all(|f| f.len() == alpha);
    let ridges = independent_sets_of_size(g, alpha - 1)
        .into_iter()
        .map(|face| Ridge {
            face,
            fiber: extension_set(g, &face, alpha),
        })
        .collect();
    IndependenceProfile {
        alpha,
        facets,
        is_pure,
        ridges,
    }
}
