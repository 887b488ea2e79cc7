//! Immutable simple graphs over vertices `0..n` with bit-vector adjacency rows.

use std::fmt;

use serde::Serialize;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A finite simple graph with at least one vertex.
///
/// Row `v` of the adjacency is the open neighborhood of `v`. Rows are
/// symmetric and loop-free; every constructor enforces both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with its relabeling.
///
/// `vertices[new] = old`; relabeling preserves the parent's vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Subgraph {
    /// Parent label of a subgraph vertex.
    pub fn to_parent(&self, v: usize) -> usize {
        self.vertices[v]
    }

    /// Maps a subgraph vertex set back to parent labels.
    pub fn set_to_parent(&self, s: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_vertices(parent_n, s.iter().map(|v| self.vertices[v]))
    }

    /// Subgraph label of a parent vertex, if it was kept.
    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Result of removing a closed neighborhood: either the remaining graph or
/// an explicit signal that nothing is left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Localized {
    Empty,
    Graph(Subgraph),
}

impl Localized {
    /// Number of remaining vertices (0 for the empty signal).
    pub fn order(&self) -> usize {
        match self {
            Localized::Empty => 0,
            Localized::Graph(sub) => sub.graph.n(),
        }
    }

    pub fn as_subgraph(&self) -> Option<&Subgraph> {
        match self {
            Localized::Empty => None,
            Localized::Graph(sub) => Some(sub),
        }
    }
}

/// A graph built from blocks (product classes or union components).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partitioned {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::check_order(n)?;
        let mut adj = vec![VertexSet::empty(n); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            let e = Edge::new(a, b)?;
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        Self::check_order(n)?;
        for (v, row) in rows.iter().enumerate() {
            if row.universe_size() != n {
                return Err(GraphError::UniverseMismatch {
                    expected: n,
                    found: row.universe_size(),
                });
            }
            if row.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Rows already known to be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph { adj: rows }
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::check_order(n)?;
        let full = VertexSet::full(n);
        Ok(Graph {
            adj: (0..n).map(|v| full.without(v)).collect(),
        })
    }

    fn check_order(n: usize) -> Result<(), GraphError> {
        if n == 0 {
            Err(GraphError::EmptyGraph)
        } else if n > MAX_VERTICES {
            Err(GraphError::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    /// Non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| !self.adj[u].contains(v))
                .map(move |v| Edge { u, v })
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(*s, |acc, v| acc.union(&self.adj[v]))
    }

    /// `N(S) = N[S] \ S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.closed_neighborhood(s).difference(s)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, row)| full.difference(row).without(v))
                .collect(),
        }
    }

    /// `G - e`, same vertex set.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.require_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u].remove(e.v);
        adj[e.v].remove(e.u);
        Ok(Graph { adj })
    }

    /// `G + e`, same vertex set. Rejects pairs that are already edges.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if e.v >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: e.v,
                n: self.n(),
            });
        }
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::AlreadyAnEdge { u: e.u, v: e.v });
        }
        let mut adj = self.adj.clone();
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
        Ok(Graph { adj })
    }

    fn require_edge(&self, e: Edge) -> Result<(), GraphError> {
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(GraphError::NotAnEdge { u: e.u, v: e.v })
        }
    }

    /// The subgraph induced by `keep`, relabeled in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Subgraph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptySubgraph);
        }
        let vertices = keep.to_vec();
        let m = vertices.len();
        let adj = vertices
            .iter()
            .map(|&old| {
                let row = self.adj[old].intersection(keep);
                VertexSet::from_vertices(
                    m,
                    vertices
                        .iter()
                        .enumerate()
                        .filter(|(_, &w)| row.contains(w))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Ok(Subgraph {
            graph: Graph { adj },
            vertices,
        })
    }

    /// `G_S = G - N[S]`.
    pub fn localization(&self, s: &VertexSet) -> Localized {
        let rest = self.closed_neighborhood(s).complement();
        match self.induced_subgraph(&rest) {
            Ok(sub) => Localized::Graph(sub),
            Err(_) => Localized::Empty,
        }
    }

    /// `G_xy = G - (N(x) ∪ N(y))` for an edge `xy`.
    pub fn edge_localization(&self, e: Edge) -> Result<Localized, GraphError> {
        self.require_edge(e)?;
        let removed = self.adj[e.u].union(&self.adj[e.v]);
        Ok(match self.induced_subgraph(&removed.complement()) {
            Ok(sub) => Localized::Graph(sub),
            Err(_) => Localized::Empty,
        })
    }

    /// Lexicographic product `G[K_q]`: vertex `(i, j)` gets label `i * q + j`.
    /// Class `i` is a `q`-clique, and classes `i`, `i'` are completely joined
    /// exactly when `i ~ i'` in `G`.
    pub fn lexicographic_product(&self, q: usize) -> Result<Partitioned, GraphError> {
        if q == 0 {
            return Err(GraphError::ZeroCliqueSize);
        }
        let n = self.n();
        let total = n * q;
        Self::check_order(total)?;
        let classes: Vec<VertexSet> = (0..n)
            .map(|i| VertexSet::from_vertices(total, i * q..(i + 1) * q))
            .collect();
        let mut adj = Vec::with_capacity(total);
        for i in 0..n {
            let across = self.adj[i]
                .iter()
                .fold(VertexSet::empty(total), |acc, k| acc.union(&classes[k]));
            for j in 0..q {
                adj.push(across.union(&classes[i]).without(i * q + j));
            }
        }
        Ok(Partitioned {
            graph: Graph { adj },
            blocks: classes,
        })
    }

    /// Block-diagonal union, components labeled consecutively in input order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Partitioned, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::EmptyUnion);
        }
        let total: usize = parts.iter().map(Graph::n).sum();
        Self::check_order(total)?;
        let mut adj = Vec::with_capacity(total);
        let mut blocks = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for g in parts {
            blocks.push(VertexSet::from_vertices(total, offset..offset + g.n()));
            for row in &g.adj {
                adj.push(VertexSet::from_vertices(
                    total,
                    row.iter().map(|v| v + offset),
                ));
            }
            offset += g.n();
        }
        Ok(Partitioned {
            graph: Graph { adj },
            blocks,
        })
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = self.open_neighborhood(&frontier).difference(&comp);
                comp = comp.union(&reach);
                frontier = reach;
            }
            unseen = unseen.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Maximum over pairs of shortest-path distance; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let n = self.n();
        let mut diam = 0;
        for v in 0..n {
            let mut seen = VertexSet::singleton(n, v);
            let mut frontier = seen;
            let mut depth = 0;
            while seen.len() < n {
                let next = self.open_neighborhood(&frontier).difference(&seen);
                if next.is_empty() {
                    return None;
                }
                depth += 1;
                seen = seen.union(&next);
                frontier = next;
            }
            diam = diam.max(depth);
        }
        Some(diam)
    }

    /// Vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        Graph::new(self.n(), self.edges().map(|e| (perm[e.u], perm[e.v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn zero_vertices_rejected() {
        assert_eq!(Graph::edgeless(0), Err(GraphError::EmptyGraph));
        assert!(matches!(
            Graph::edgeless(MAX_VERTICES + 1),
            Err(GraphError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn constructor_rejects_loops_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        let mut rows = vec![VertexSet::empty(2); 2];
        rows[0].insert(1);
        assert!(matches!(
            Graph::from_rows(rows),
            Err(GraphError::Asymmetric { .. })
        ));
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        for n in 1..8 {
            assert_eq!(
                Graph::complete(n).unwrap().complement(),
                Graph::edgeless(n).unwrap()
            );
        }
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5);
        // 0-2-4-1-3-0 is the complement's Hamilton cycle.
        let perm = [0, 2, 4, 1, 3];
        let mut inv = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        assert_eq!(c5.complement().relabel(&inv).unwrap(), c5);
    }

    #[test]
    fn delete_edge_from_cycle_gives_path() {
        let c5 = cycle(5);
        let p = c5.delete_edge(Edge::new(4, 0).unwrap()).unwrap();
        assert_eq!(p, path(5));
        assert_eq!(p.edge_count(), 4);
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            k2.delete_edge(Edge::new(0, 1).unwrap()).unwrap(),
            Graph::edgeless(2).unwrap()
        );
    }

    #[test]
    fn delete_non_edge_rejected() {
        let p = path(3);
        assert_eq!(
            p.delete_edge(Edge::new(0, 2).unwrap()),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn induced_subgraph_of_c7_on_alternate_vertices() {
        let sub = cycle(7)
            .induced_subgraph(&VertexSet::from_vertices(7, [0, 2, 4]))
            .unwrap();
        assert_eq!(sub.graph, Graph::edgeless(3).unwrap());
        assert_eq!(sub.vertices, vec![0, 2, 4]);
        assert_eq!(sub.from_parent(4), Some(2));
        assert_eq!(sub.from_parent(3), None);
    }

    #[test]
    fn induced_subgraph_identity_and_cliques() {
        let g = cycle(6);
        assert_eq!(g.induced_subgraph(&g.vertices()).unwrap().graph, g);
        let k5 = Graph::complete(5).unwrap();
        let sub = k5
            .induced_subgraph(&VertexSet::from_vertices(5, [0, 3, 4]))
            .unwrap();
        assert_eq!(sub.graph, Graph::complete(3).unwrap());
        assert_eq!(
            g.induced_subgraph(&VertexSet::empty(6)),
            Err(GraphError::EmptySubgraph)
        );
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5);
        assert!(c5.closed_neighborhood(&VertexSet::empty(5)).is_empty());
        assert_eq!(
            c5.open_neighborhood(&VertexSet::singleton(5, 0)),
            VertexSet::from_vertices(5, [1, 4])
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.closed_neighborhood(&VertexSet::singleton(4, 2)),
            k4.vertices()
        );
    }

    #[test]
    fn localization_edge_cases() {
        let g = cycle(6);
        match g.localization(&VertexSet::empty(6)) {
            Localized::Graph(sub) => assert_eq!(sub.graph, g),
            Localized::Empty => panic!("empty set localizes to the whole graph"),
        }
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.edge_localization(Edge::new(1, 2).unwrap()).unwrap(),
            Localized::Empty
        );
        assert!(k4.edge_localization(Edge::new(1, 2).unwrap()).is_ok());
        let p = path(3);
        assert!(p.edge_localization(Edge::new(0, 2).unwrap()).is_err());
    }

    #[test]
    fn lexicographic_product_counts() {
        let c7 = cycle(7);
        let prod = c7.lexicographic_product(2).unwrap();
        assert_eq!(prod.graph.n(), 14);
        assert_eq!(prod.graph.edge_count(), 35);
        assert_eq!(c7.lexicographic_product(1).unwrap().graph, c7);
        assert_eq!(
            c7.lexicographic_product(0),
            Err(GraphError::ZeroCliqueSize)
        );
        let classes = &prod.blocks;
        for i in 0..7 {
            assert!(prod.graph.is_clique(&classes[i]));
            for k in 0..7 {
                if k == i {
                    continue;
                }
                let joined = classes[i]
                    .iter()
                    .all(|a| classes[k].is_subset(prod.graph.neighbors(a)));
                let separated = classes[i]
                    .iter()
                    .all(|a| classes[k].is_disjoint(prod.graph.neighbors(a)));
                let consecutive = (i + 1) % 7 == k || (k + 1) % 7 == i;
                assert_eq!(joined, consecutive);
                assert_eq!(separated, !consecutive);
            }
        }
    }

    #[test]
    fn disjoint_union_of_cliques() {
        let k3 = Graph::complete(3).unwrap();
        let u = Graph::disjoint_union(&[k3.clone(), k3.clone()]).unwrap();
        assert_eq!(u.graph.n(), 6);
        assert_eq!(u.graph.edge_count(), 6);
        assert_eq!(u.graph.components(), u.blocks);
        assert_eq!(Graph::disjoint_union(std::slice::from_ref(&k3)).unwrap().graph, k3);
        assert_eq!(Graph::disjoint_union(&[]), Err(GraphError::EmptyUnion));
    }

    #[test]
    fn diameter_of_cycle_and_disconnected() {
        assert_eq!(cycle(7).diameter(), Some(3));
        assert_eq!(Graph::edgeless(2).unwrap().diameter(), None);
        assert_eq!(Graph::edgeless(1).unwrap().diameter(), Some(0));
    }
}
