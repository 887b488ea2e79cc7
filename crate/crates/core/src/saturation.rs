//! Complement-side machinery: clique search, `K_t`-saturation, clique
//! uniformity and codegrees, and the numeric consequences for complements of
//! alpha-critical `W_p` graphs.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::SaturationError;
use crate::graph::{Edge, Graph};
use crate::independence::maximal_independent_sets;
use crate::vertex_set::VertexSet;

/// True iff `within` contains a clique of `k` vertices.
pub fn has_clique(h: &Graph, within: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if within.len() < k {
        return false;
    }
    let mut rest = *within;
    while let Some(v) = rest.first() {
        rest.remove(v);
        if rest.len() + 1 < k {
            return false;
        }
        if has_clique(h, &rest.intersection(h.neighbors(v)), k - 1) {
            return true;
        }
    }
    false
}

/// All `k`-cliques in colex order. `k = 0` yields the empty clique.
pub fn cliques_of_size(h: &Graph, k: usize) -> Vec<VertexSet> {
    fn grow(h: &Graph, cur: VertexSet, allowed: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur);
            return;
        }
        let mut allowed = allowed;
        while let Some(v) = allowed.first() {
            allowed.remove(v);
            if cur.len() + 1 + allowed.len() < k {
                break;
            }
            grow(h, cur.with(v), allowed.intersection(h.neighbors(v)), k, out);
        }
    }
    let mut out = Vec::new();
    grow(h, VertexSet::empty(h.n()), h.vertices(), k, &mut out);
    out.sort_unstable();
    out
}

/// Panics if `t < 2`.
pub fn is_kt_free(h: &Graph, t: usize) -> bool {
    assert!(t >= 2, "K_t-freeness needs t >= 2");
    !has_clique(h, &h.vertices(), t)
}

/// `K_t`-free, and adding any non-edge creates a `K_t`. The new copy must
/// use the added pair, so it is a `K_{t-2}` among their common neighbors.
pub fn is_kt_saturated(h: &Graph, t: usize) -> bool {
    first_unsaturated_pair(h, t).is_none() && is_kt_free(h, t)
}

/// A non-edge whose addition creates no `K_t`, if one exists.
pub fn first_unsaturated_pair(h: &Graph, t: usize) -> Option<Edge> {
    assert!(t >= 2, "K_t-saturation needs t >= 2");
    h.non_edges().find(|e| {
        let common = h.neighbors(e.u).intersection(h.neighbors(e.v));
        !has_clique(h, &common, t - 2)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueUniformity {
    pub uniform: bool,
    /// Clique number of the graph.
    pub clique_number: usize,
    /// A maximal clique smaller than the clique number, when not uniform.
    #[serde(skip)]
    pub small_clique: Option<VertexSet>,
}

/// Whether every maximal clique has the same size.
pub fn maximal_clique_sizes_uniform(h: &Graph) -> CliqueUniformity {
    let cliques = maximal_independent_sets(&h.complement());
    let clique_number = cliques.iter().map(VertexSet::len).max().unwrap_or(0);
    let small_clique = cliques.into_iter().find(|c| c.len() != clique_number);
    CliqueUniformity {
        uniform: small_clique.is_none(),
        clique_number,
        small_clique,
    }
}

/// Number of vertices extending the clique `q` to a clique one larger.
/// The empty clique has codegree `n`.
pub fn clique_codegree(h: &Graph, q: &VertexSet) -> Result<usize, SaturationError> {
    if !h.is_clique(q) {
        return Err(SaturationError::NotAClique);
    }
    Ok(common_neighbors(h, q).len())
}

fn common_neighbors(h: &Graph, q: &VertexSet) -> VertexSet {
    q.iter()
        .fold(h.vertices(), |acc, v| acc.intersection(h.neighbors(v)))
        .difference(q)
}

/// Minimum codegree over all `(r-1)`-cliques; `n` when `r = 1`. `None` when
/// there are no `(r-1)`-cliques to minimize over.
pub fn min_clique_codegree(h: &Graph, r: usize) -> Option<usize> {
    assert!(r >= 1, "clique codegree needs r >= 1");
    if r == 1 {
        return Some(h.n());
    }
    cliques_of_size(h, r - 1)
        .iter()
        .map(|q| common_neighbors(h, q).len())
        .min()
}

/// An `(r-1)`-clique attaining the minimum codegree.
pub fn thinnest_clique(h: &Graph, r: usize) -> Option<(VertexSet, usize)> {
    cliques_of_size(h, r - 1)
        .into_iter()
        .map(|q| (q, common_neighbors(h, &q).len()))
        .min_by_key(|&(_, c)| c)
}

/// Why a graph fails the complement-side characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SaturationViolation {
    /// A non-edge whose addition creates no `K_{r+1}`.
    UnsaturatedPair { pair: Edge },
    /// The graph already contains a `K_{r+1}`.
    ContainsLargeClique { clique_number: usize },
    /// A maximal clique of the wrong size.
    SmallMaximalClique { clique: VertexSet },
    /// An `(r-1)`-clique with fewer than `p` extensions.
    ThinClique { clique: VertexSet, codegree: usize },
}

/// The three complement-side conditions for a given `r` and `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementConditions {
    pub r: usize,
    pub p: usize,
    pub saturated: bool,
    pub uniform: bool,
    pub min_codegree: Option<usize>,
    pub holds: bool,
    pub violation: Option<SaturationViolation>,
}

/// `H` is `K_{r+1}`-saturated, every maximal clique has size `r`, and every
/// `(r-1)`-clique extends in at least `p` ways.
pub fn complement_conditions(h: &Graph, r: usize, p: usize) -> ComplementConditions {
    let uniformity = maximal_clique_sizes_uniform(h);
    let free = is_kt_free(h, r + 1);
    let unsaturated = first_unsaturated_pair(h, r + 1);
    let saturated = free && unsaturated.is_none();
    let uniform = uniformity.uniform && uniformity.clique_number == r;
    let thin = thinnest_clique(h, r);
    let min_codegree = if r == 1 {
        Some(h.n())
    } else {
        thin.map(|(_, c)| c)
    };
    let codegree_ok = min_codegree.is_some_and(|c| c >= p);

    let violation = if !free {
        Some(SaturationViolation::ContainsLargeClique {
            clique_number: uniformity.clique_number,
        })
    } else if let Some(pair) = unsaturated {
        Some(SaturationViolation::UnsaturatedPair { pair })
    } else if !uniform {
        uniformity
            .small_clique
            .map(|clique| SaturationViolation::SmallMaximalClique { clique })
            .or(Some(SaturationViolation::ContainsLargeClique {
                clique_number: uniformity.clique_number,
            }))
    } else if !codegree_ok {
        Some(match (r, thin) {
            (1, _) | (_, None) => SaturationViolation::ThinClique {
                clique: VertexSet::empty(h.n()),
                codegree: min_codegree.unwrap_or(0),
            },
            (_, Some((clique, codegree))) => SaturationViolation::ThinClique { clique, codegree },
        })
    } else {
        None
    };

    ComplementConditions {
        r,
        p,
        saturated,
        uniform,
        min_codegree,
        holds: saturated && uniform && codegree_ok,
        violation,
    }
}

/// Maximal triangle-free with minimum degree at least `p`.
pub fn alpha2_check(h: &Graph, p: usize) -> bool {
    is_kt_saturated(h, 3) && h.min_degree() >= p
}

/// Fewest triangles through any edge; `None` for edgeless graphs.
pub fn min_edge_triangles(h: &Graph) -> Option<usize> {
    h.edges()
        .map(|e| h.neighbors(e.u).intersection(h.neighbors(e.v)).len())
        .min()
}

/// `K_4`-saturated, every maximal clique a triangle, and every edge in at
/// least `p` triangles.
pub fn alpha3_check(h: &Graph, p: usize) -> bool {
    let uniformity = maximal_clique_sizes_uniform(h);
    is_kt_saturated(h, 4)
        && uniformity.uniform
        && uniformity.clique_number == 3
        && min_edge_triangles(h).is_some_and(|t| t >= p)
}

/// If every component of `g` is complete, the component vertex sets.
pub fn disjoint_clique_components(g: &Graph) -> Option<Vec<VertexSet>> {
    let comps = g.components();
    comps.iter().all(|c| g.is_clique(c)).then_some(comps)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RigidityVerdict {
    HypothesisUnmet,
    Holds { parts: Vec<usize> },
    Violation { reason: String },
}

/// For the complement `H` of an alpha-critical `W_p` graph with
/// `alpha = r >= 2` and `delta(H) > (3r-4)/(3r-1) n`: `H` must be complete
/// `r`-partite with every part of size at least `p`.
///
/// The hypotheses are checked here; when any fails the verdict is
/// [`RigidityVerdict::HypothesisUnmet`].
pub fn dense_rigidity_check(h: &Graph, r: usize, p: usize) -> RigidityVerdict {
    let n = h.n() as u64;
    let (r64, p) = (r as u64, p);
    if r < 2 || !complement_conditions(h, r, p).holds {
        return RigidityVerdict::HypothesisUnmet;
    }
    if (h.min_degree() as u64) * (3 * r64 - 1) <= (3 * r64 - 4) * n {
        return RigidityVerdict::HypothesisUnmet;
    }
    multipartite_verdict(h, r, p, false)
}

/// Recognizes `H` as complete `r`-partite (on the complement), with parts of
/// size at least `p`, or exactly `p` when `exact`.
fn multipartite_verdict(h: &Graph, r: usize, p: usize, exact: bool) -> RigidityVerdict {
    let Some(parts) = disjoint_clique_components(&h.complement()) else {
        return RigidityVerdict::Violation {
            reason: "complement has a non-complete component".into(),
        };
    };
    let sizes: Vec<usize> = parts.iter().map(VertexSet::len).collect();
    if sizes.len() != r {
        return RigidityVerdict::Violation {
            reason: format!("{} parts, expected {r}", sizes.len()),
        };
    }
    if sizes.iter().any(|&s| s < p || (exact && s != p)) {
        return RigidityVerdict::Violation {
            reason: format!("part sizes {sizes:?} with p = {p}"),
        };
    }
    RigidityVerdict::Holds { parts: sizes }
}

/// Numeric consequences for the complement `H` of an alpha-critical `W_p`
/// graph with `alpha = r >= 2`.
///
/// Inequality flags are derived from the stored fields on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub r: u64,
    pub p: u64,
    /// Complement-side characterization holds for `(r, p)`.
    pub hypotheses_hold: bool,
    /// `(r-1) n - C(r, 2)`.
    pub ehm_bound: u64,
    /// `ceil(n p (r-1) / 2)`.
    pub p_bound: u64,
    pub e_actual: u64,
    pub min_degree: u64,
    /// `p (r-1)`.
    pub degree_bound: u64,
    pub conical_vertex: Option<usize>,
    /// `(3r-1)(r-1)p`, numerator of the small-order threshold.
    pub rigidity_numerator: u64,
    /// `3r-4`, its denominator.
    pub rigidity_denominator: u64,
    /// Component sizes when the complement of `H` is a disjoint union of cliques.
    pub complement_clique_sizes: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    pub applicable: bool,
    pub ehm_pass: bool,
    pub ehm_tight: bool,
    pub p_bound_pass: bool,
    pub p_bound_tight: bool,
    pub degree_pass: bool,
    pub degree_tight: bool,
    pub no_conical_pass: bool,
    pub small_order: bool,
    pub small_order_rigidity_pass: bool,
    pub rp_rigidity_pass: bool,
}

pub fn bound_report(h: &Graph, r: usize, p: usize) -> BoundReport {
    let n = h.n() as u64;
    let (r64, p64) = (r as u64, p as u64);
    let rm1 = r64.saturating_sub(1);
    BoundReport {
        n,
        r: r64,
        p: p64,
        hypotheses_hold: r >= 1 && complement_conditions(h, r, p).holds,
        ehm_bound: (rm1 * n).saturating_sub(r64 * rm1 / 2),
        p_bound: (n * p64 * rm1).div_ceil(2),
        e_actual: h.edge_count() as u64,
        min_degree: h.min_degree() as u64,
        degree_bound: p64 * rm1,
        conical_vertex: (0..h.n()).find(|&v| h.degree(v) + 1 == h.n()),
        rigidity_numerator: (3 * r64).saturating_sub(1) * rm1 * p64,
        rigidity_denominator: (3 * r64).saturating_sub(4),
        complement_clique_sizes: disjoint_clique_components(&h.complement())
            .map(|parts| parts.iter().map(VertexSet::len).collect()),
    }
}

impl BoundReport {
    pub fn flags(&self) -> BoundFlags {
        let parts_ok = |exact: bool| match &self.complement_clique_sizes {
            Some(sizes) => {
                sizes.len() as u64 == self.r
                    && sizes
                        .iter()
                        .all(|&s| s as u64 >= self.p && (!exact || s as u64 == self.p))
            }
            None => false,
        };
        let small_order = self.r >= 2 && self.n * self.rigidity_denominator < self.rigidity_numerator;
        BoundFlags {
            applicable: self.r >= 2,
            ehm_pass: self.e_actual >= self.ehm_bound,
            ehm_tight: self.e_actual == self.ehm_bound,
            p_bound_pass: self.e_actual >= self.p_bound,
            p_bound_tight: self.e_actual == self.p_bound,
            degree_pass: self.min_degree >= self.degree_bound,
            degree_tight: self.min_degree == self.degree_bound,
            no_conical_pass: self.p < 2 || self.conical_vertex.is_none(),
            small_order,
            small_order_rigidity_pass: !small_order || parts_ok(false),
            rp_rigidity_pass: self.n != self.r * self.p || parts_ok(true),
        }
    }

    /// Names of failed inequalities. Empty when the bounds do not apply
    /// (`r < 2`).
    pub fn violations(&self) -> Vec<&'static str> {
        let f = self.flags();
        if !f.applicable {
            return Vec::new();
        }
        [
            (f.ehm_pass, "ehm_bound"),
            (f.p_bound_pass, "p_bound"),
            (f.degree_pass, "degree_bound"),
            (f.no_conical_pass, "conical_vertex"),
            (f.small_order_rigidity_pass, "small_order_rigidity"),
            (f.rp_rigidity_pass, "rp_rigidity"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundReport", 15)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("hypotheses_hold", &self.hypotheses_hold)?;
        s.serialize_field("ehm_bound", &self.ehm_bound)?;
        s.serialize_field("p_bound", &self.p_bound)?;
        s.serialize_field("e_actual", &self.e_actual)?;
        s.serialize_field("min_degree", &self.min_degree)?;
        s.serialize_field("degree_bound", &self.degree_bound)?;
        s.serialize_field("conical_vertex", &self.conical_vertex)?;
        s.serialize_field("rigidity_numerator", &self.rigidity_numerator)?;
        s.serialize_field("rigidity_denominator", &self.rigidity_denominator)?;
        s.serialize_field("complement_clique_sizes", &self.complement_clique_sizes)?;
        s.serialize_field("flags", &self.flags())?;
        s.serialize_field("violations", &self.violations())?;
        s.end()
    }
}

/// The sets `X_u = {x not in C - u : (C - u) + x is an r-clique}` for each
/// `u` in `C - v`, where `C` is an `r`-clique through `v`.
pub fn extension_sets(
    h: &Graph,
    clique: &VertexSet,
    v: usize,
) -> Result<Vec<(usize, VertexSet)>, SaturationError> {
    if !h.is_clique(clique) {
        return Err(SaturationError::NotAClique);
    }
    if !clique.contains(v) {
        return Err(SaturationError::WrongSize {
            expected: clique.len(),
            found: 0,
        });
    }
    Ok(clique
        .without(v)
        .iter()
        .map(|u| (u, common_neighbors(h, &clique.without(u))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn fam(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().graph
    }

    #[test]
    fn petersen_and_c5_are_triangle_saturated() {
        assert!(is_kt_saturated(&fam("petersen"), 3));
        assert!(is_kt_saturated(&fam("cycle:n=5"), 3));
        assert!(!is_kt_saturated(&fam("cycle:n=6"), 3));
        assert!(!is_kt_saturated(&fam("complete:n=3"), 3));
    }

    #[test]
    fn complete_graph_is_vacuously_saturated() {
        for r in 1..6 {
            assert!(is_kt_saturated(&Graph::complete(r).unwrap(), r + 1));
        }
        assert!(is_kt_saturated(&Graph::edgeless(3).unwrap(), 2));
        assert!(!is_kt_saturated(&fam("path:n=3"), 2));
    }

    #[test]
    fn clique_uniformity() {
        let k222 = fam("complete_multipartite:parts=2,2,2");
        let u = maximal_clique_sizes_uniform(&k222);
        assert!(u.uniform);
        assert_eq!(u.clique_number, 3);
        let pet = maximal_clique_sizes_uniform(&fam("petersen"));
        assert!(pet.uniform);
        assert_eq!(pet.clique_number, 2);
        let p3 = maximal_clique_sizes_uniform(&fam("path:n=3"));
        assert!(p3.uniform);
        assert_eq!(p3.clique_number, 2);
        // K_3 plus a pendant vertex: maximal cliques of sizes 3 and 2.
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let u = maximal_clique_sizes_uniform(&g);
        assert!(!u.uniform);
        assert_eq!(u.small_clique, Some(VertexSet::from_vertices(4, [2, 3])));
    }

    #[test]
    fn codegrees() {
        let pet = fam("petersen");
        assert_eq!(clique_codegree(&pet, &VertexSet::singleton(10, 4)), Ok(3));
        assert_eq!(min_clique_codegree(&pet, 2), Some(3));
        assert_eq!(min_clique_codegree(&pet, 1), Some(10));
        assert_eq!(
            clique_codegree(&pet, &VertexSet::from_vertices(10, [0, 2])),
            Err(SaturationError::NotAClique)
        );
        for p in 1..=3 {
            let h = generate(&FamilySpec::CompleteMultipartite { parts: vec![p; 3] })
                .unwrap()
                .graph;
            for q in cliques_of_size(&h, 2) {
                assert_eq!(clique_codegree(&h, &q), Ok(p));
            }
        }
        assert_eq!(min_clique_codegree(&Graph::edgeless(3).unwrap(), 3), None);
    }

    #[test]
    fn small_alpha_checks() {
        let pet = fam("petersen");
        assert!(alpha2_check(&pet, 3));
        assert!(!alpha2_check(&pet, 4));
        assert!(alpha2_check(&fam("cycle:n=5"), 2));
        assert!(alpha3_check(&fam("c7_blowup:q=2").complement(), 2));
        assert!(alpha3_check(&fam("disjoint_cliques:r=3,p=2").complement(), 2));
        assert!(!alpha3_check(&fam("cycle:n=7").complement(), 2));
        assert!(alpha3_check(&fam("cycle:n=7").complement(), 1));
    }

    #[test]
    fn dense_rigidity() {
        let k33 = fam("complete_multipartite:parts=3,3");
        assert_eq!(
            dense_rigidity_check(&k33, 2, 3),
            RigidityVerdict::Holds { parts: vec![3, 3] }
        );
        assert_eq!(
            dense_rigidity_check(&fam("petersen"), 2, 3),
            RigidityVerdict::HypothesisUnmet
        );
        for p in 2..=5 {
            let h = generate(&FamilySpec::CompleteMultipartite { parts: vec![p, p] })
                .unwrap()
                .graph;
            assert_eq!(
                dense_rigidity_check(&h, 2, p),
                RigidityVerdict::Holds { parts: vec![p, p] }
            );
        }
    }

    #[test]
    fn petersen_bounds_are_tight() {
        let rep = bound_report(&fam("petersen"), 2, 3);
        assert_eq!((rep.ehm_bound, rep.p_bound, rep.e_actual), (9, 15, 15));
        let f = rep.flags();
        assert!(f.ehm_pass && f.p_bound_pass && f.p_bound_tight && !f.ehm_tight);
        assert!(f.degree_pass && f.degree_tight);
        assert!(rep.hypotheses_hold);
        assert!(rep.violations().is_empty());
    }

    #[test]
    fn c4_bound_and_rp_rigidity() {
        let c4 = fam("cycle:n=4");
        let rep = bound_report(&c4, 2, 2);
        assert_eq!(rep.p_bound, 4);
        assert!(rep.flags().p_bound_tight);
        assert_eq!(rep.complement_clique_sizes, Some(vec![2, 2]));
        assert!(rep.flags().rp_rigidity_pass);
        assert!(rep.violations().is_empty());
    }

    #[test]
    fn conical_vertex_flagged() {
        // A star has a conical centre.
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rep = bound_report(&star, 2, 2);
        assert_eq!(rep.conical_vertex, Some(0));
        assert!(rep.violations().contains(&"conical_vertex"));
    }

    #[test]
    fn extension_sets_are_disjoint_in_multipartite() {
        let h = fam("complete_multipartite:parts=2,2,2");
        let c = VertexSet::from_vertices(6, [0, 2, 4]);
        let xs = extension_sets(&h, &c, 0).unwrap();
        assert_eq!(xs.len(), 2);
        assert!(xs[0].1.is_disjoint(&xs[1].1));
        assert!(xs.iter().map(|(_, x)| x.len()).sum::<usize>() <= h.degree(0));
    }
}
