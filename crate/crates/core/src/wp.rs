//! `W_p` membership, the W-index, alpha-criticality and the main-theorem
//! cross-check.
//!
//! Membership is decided three independent ways:
//!
//! * [`is_in_wp_oracle`] enumerates every ordered `p`-tuple of pairwise
//!   disjoint independent sets and searches for disjoint maximum supersets.
//!   Exponential; guarded by a vertex limit.
//! * [`is_in_wp_ridge`] checks purity and that every ridge fiber has at
//!   least `p` vertices.
//! * [`is_in_wp_localization`] recurses through vertex localizations down to
//!   complete graphs.

use serde::{Serialize, Serializer};

use crate::error::{GraphError, WpError};
use crate::graph::{Edge, Graph, Localized};
use crate::independence::{self, alpha, IndependenceProfile};
use crate::saturation::{self, SaturationViolation};
use crate::vertex_set::VertexSet;

/// Default vertex limit for the exhaustive oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_vertices: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_vertices: DEFAULT_ORACLE_LIMIT,
        }
    }
}

impl OracleOptions {
    pub fn unlimited() -> Self {
        OracleOptions {
            max_vertices: usize::MAX,
        }
    }
}

/// Outcome of the exhaustive oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Member,
    /// Fewer than `p` vertices.
    TooFewVertices,
    /// An ordered family with no disjoint maximum extension.
    Unextendable(Vec<VertexSet>),
}

impl OracleOutcome {
    pub fn is_member(&self) -> bool {
        matches!(self, OracleOutcome::Member)
    }
}

pub fn is_in_wp_oracle(g: &Graph, p: usize) -> Result<bool, WpError> {
    wp_oracle(g, p, &OracleOptions::default()).map(|o| o.is_member())
}

/// Literal `W_p` test: `n >= p`, and every ordered `p`-tuple of pairwise
/// disjoint independent sets (empty sets included) extends to pairwise
/// disjoint maximum independent sets.
pub fn wp_oracle(g: &Graph, p: usize, opts: &OracleOptions) -> Result<OracleOutcome, WpError> {
    assert!(p >= 1, "W_p needs p >= 1");
    if g.n() > opts.max_vertices {
        return Err(WpError::SizeGuard {
            n: g.n(),
            limit: opts.max_vertices,
        });
    }
    if g.n() < p {
        return Ok(OracleOutcome::TooFewVertices);
    }

    let sets = all_independent_sets(g);
    let max_size = sets.iter().map(VertexSet::len).max().unwrap_or(0);
    let maximum: Vec<VertexSet> = sets.iter().copied().filter(|s| s.len() == max_size).collect();
    // For each independent set, the maximum independent sets containing it.
    let supersets: Vec<Vec<usize>> = sets
        .iter()
        .map(|a| {
            maximum
                .iter()
                .enumerate()
                .filter(|(_, m)| a.is_subset(m))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let search = TupleSearch {
        sets: &sets,
        maximum: &maximum,
        supersets: &supersets,
        p,
    };
    let mut tuple = Vec::with_capacity(p);
    let mut used = VertexSet::empty(g.n());
    Ok(match search.find_unextendable(&mut tuple, &mut used) {
        Some(family) => OracleOutcome::Unextendable(family),
        None => OracleOutcome::Member,
    })
}

/// Every independent set, the empty set included.
fn all_independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn walk(g: &Graph, cur: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(cur);
        let mut allowed = allowed;
        while let Some(v) = allowed.first() {
            allowed.remove(v);
            walk(g, cur.with(v), allowed.difference(g.neighbors(v)), out);
        }
    }
    let mut out = Vec::new();
    walk(g, VertexSet::empty(g.n()), g.vertices(), &mut out);
    out
}

struct TupleSearch<'a> {
    sets: &'a [VertexSet],
    maximum: &'a [VertexSet],
    supersets: &'a [Vec<usize>],
    p: usize,
}

impl TupleSearch<'_> {
    /// Extends the partial tuple (indices into `sets`) in every way and
    /// returns the first full tuple that cannot be extended.
    fn find_unextendable(&self, tuple: &mut Vec<usize>, used: &mut VertexSet) -> Option<Vec<VertexSet>> {
        if tuple.len() == self.p {
            let mut chosen = VertexSet::empty(used.universe_size());
            return (!self.extends(tuple, 0, &mut chosen))
                .then(|| tuple.iter().map(|&i| self.sets[i]).collect());
        }
        for (i, a) in self.sets.iter().enumerate() {
            if !a.is_disjoint(used) {
                continue;
            }
            tuple.push(i);
            let before = *used;
            *used = used.union(a);
            let found = self.find_unextendable(tuple, used);
            *used = before;
            tuple.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Assigns pairwise disjoint maximum supersets to `tuple[k..]`.
    fn extends(&self, tuple: &[usize], k: usize, chosen: &mut VertexSet) -> bool {
        if k == tuple.len() {
            return true;
        }
        for &m in &self.supersets[tuple[k]] {
            let cand = self.maximum[m];
            if cand.is_disjoint(chosen) {
                let before = *chosen;
                *chosen = chosen.union(&cand);
                let ok = self.extends(tuple, k + 1, chosen);
                *chosen = before;
                if ok {
                    return true;
                }
            }
        }
        false
    }
}

/// Pure independence complex and every ridge fiber of size at least `p`.
pub fn is_in_wp_ridge(g: &Graph, p: usize) -> bool {
    assert!(p >= 1, "W_p needs p >= 1");
    let prof = independence::profile(g);
    prof.is_pure && prof.min_fiber() >= p
}

/// Recursion through vertex localizations: for `alpha >= 2`, every `G_x` is
/// nonempty, has independence number one less, and is itself in `W_p`; for
/// `alpha = 1`, the graph is complete with at least `p` vertices.
pub fn is_in_wp_localization(g: &Graph, p: usize) -> bool {
    assert!(p >= 1, "W_p needs p >= 1");
    let r = alpha(g);
    if r == 1 {
        return g.edge_count() == g.n() * (g.n() - 1) / 2 && g.n() >= p;
    }
    (0..g.n()).all(|x| match g.localization(&VertexSet::singleton(g.n(), x)) {
        Localized::Empty => false,
        Localized::Graph(sub) => alpha(&sub.graph) == r - 1 && is_in_wp_localization(&sub.graph, p),
    })
}

/// Largest `p` with `G` in `W_p`, or the non-well-covered signal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WIndex {
    Value(usize),
    NotWellCovered,
}

impl WIndex {
    pub fn value(self) -> Option<usize> {
        match self {
            WIndex::Value(w) => Some(w),
            WIndex::NotWellCovered => None,
        }
    }
}

impl Serialize for WIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            WIndex::Value(w) => serializer.serialize_u64(*w as u64),
            WIndex::NotWellCovered => serializer.serialize_str("not-well-covered"),
        }
    }
}

pub fn w_index(g: &Graph) -> WIndex {
    w_index_of(&independence::profile(g))
}

pub fn w_index_of(prof: &IndependenceProfile) -> WIndex {
    if prof.is_pure {
        WIndex::Value(prof.min_fiber())
    } else {
        WIndex::NotWellCovered
    }
}

/// Alpha-criticality verdict. Edgeless graphs are critical vacuously.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Criticality {
    pub critical: bool,
    pub vacuous: bool,
    /// First failing edge: non-critical (direct test) or uncovered (fiber test).
    pub witness: Option<Edge>,
}

impl Criticality {
    fn from_witness(g: &Graph, witness: Option<Edge>) -> Self {
        Criticality {
            critical: witness.is_none(),
            vacuous: g.edge_count() == 0,
            witness,
        }
    }
}

/// `alpha(G - e) > alpha(G)`.
pub fn is_edge_alpha_critical(g: &Graph, e: Edge) -> Result<bool, GraphError> {
    Ok(alpha(&g.delete_edge(e)?) > alpha(g))
}

/// Deletes each edge in turn and recomputes the independence number.
pub fn is_alpha_critical_direct(g: &Graph) -> Criticality {
    let a = alpha(g);
    let witness = g.edges().find(|&e| {
        let minus = g.delete_edge(e).expect("edge from edge iterator");
        alpha(&minus) <= a
    });
    Criticality::from_witness(g, witness)
}

/// Every edge lies inside some ridge fiber.
pub fn is_alpha_critical_fibers(g: &Graph) -> Criticality {
    alpha_critical_fibers_of(g, &independence::profile(g))
}

pub fn alpha_critical_fibers_of(g: &Graph, prof: &IndependenceProfile) -> Criticality {
    let witness = g.edges().find(|e| {
        !prof
            .ridges
            .iter()
            .any(|r| r.fiber.contains(e.u) && r.fiber.contains(e.v))
    });
    Criticality::from_witness(g, witness)
}

/// A concrete reason one of the main-theorem conditions fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Deleting this edge does not raise the independence number.
    NonCriticalEdge { edge: Edge },
    /// Fewer vertices than `p`.
    TooFewVertices { n: usize, p: usize },
    /// Pairwise disjoint independent sets with no disjoint maximum extension.
    UnextendableFamily { family: Vec<VertexSet> },
    /// A facet smaller than the independence number.
    ImpureFacet { facet: VertexSet },
    /// A ridge whose fiber (or link) has fewer than `p` vertices.
    ThinRidge { ridge: VertexSet, fiber: VertexSet },
    /// An edge not inside any ridge fiber.
    UncoveredEdge { edge: Edge },
    /// A complement-side failure.
    Saturation { violation: SaturationViolation },
}

/// The four conditions of the main characterization, each evaluated by its
/// own code path.
///
/// * `cond_a`: alpha-critical (edge deletion) and in `W_p` (oracle).
/// * `cond_b`: pure complex, every ridge link has at least `p` vertices, and
///   every edge of `G` (missing edge of the complex) lies in some ridge link.
/// * `cond_c`: well-covered, every fiber has at least `p` vertices, and the
///   fiber cliques cover the edges.
/// * `cond_d`: the complement is `K_{r+1}`-saturated with uniform maximal
///   cliques of size `r` and minimum `(r-1)`-clique-codegree at least `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub p: usize,
    pub r: usize,
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
    /// Oracle membership on its own (the `W_p` half of `cond_a`).
    pub in_wp_oracle: bool,
    /// Direct alpha-criticality on its own (the other half of `cond_a`).
    pub alpha_critical: bool,
    pub witness_a: Option<Witness>,
    pub witness_b: Option<Witness>,
    pub witness_c: Option<Witness>,
    pub witness_d: Option<Witness>,
}

impl TheoremReport {
    pub fn all_true(&self) -> bool {
        self.cond_a && self.cond_b && self.cond_c && self.cond_d
    }

    pub fn all_equal(&self) -> bool {
        self.cond_a == self.cond_b && self.cond_b == self.cond_c && self.cond_c == self.cond_d
    }
}

pub fn main_theorem_report(g: &Graph, p: usize, opts: &OracleOptions) -> Result<TheoremReport, WpError> {
    assert!(p >= 1, "W_p needs p >= 1");
    let r = alpha(g);

    // (a) edge deletion plus the literal definition.
    let direct = is_alpha_critical_direct(g);
    let oracle = wp_oracle(g, p, opts)?;
    let witness_a = if let Some(edge) = direct.witness {
        Some(Witness::NonCriticalEdge { edge })
    } else {
        match &oracle {
            OracleOutcome::Member => None,
            OracleOutcome::TooFewVertices => Some(Witness::TooFewVertices { n: g.n(), p }),
            OracleOutcome::Unextendable(family) => Some(Witness::UnextendableFamily {
                family: family.clone(),
            }),
        }
    };

    let prof = independence::profile(g);
    let witness_b = complex_condition(g, &prof, p);
    let witness_c = fiber_condition(g, &prof, p);

    // (d) on the complement.
    let h = g.complement();
    let comp = saturation::complement_conditions(&h, r, p);
    let witness_d = comp
        .violation
        .clone()
        .filter(|_| !comp.holds)
        .map(|violation| Witness::Saturation { violation });

    Ok(TheoremReport {
        p,
        r,
        cond_a: direct.critical && oracle.is_member(),
        cond_b: witness_b.is_none(),
        cond_c: witness_c.is_none(),
        cond_d: comp.holds,
        in_wp_oracle: oracle.is_member(),
        alpha_critical: direct.critical,
        witness_a,
        witness_b,
        witness_c,
        witness_d,
    })
}

/// Independence-complex reading: links are computed as localizations.
fn complex_condition(g: &Graph, prof: &IndependenceProfile, p: usize) -> Option<Witness> {
    if let Some(&facet) = prof.facets.iter().find(|f| f.len() != prof.alpha) {
        return Some(Witness::ImpureFacet { facet });
    }
    let links: Vec<(VertexSet, VertexSet)> = prof
        .ridges
        .iter()
        .map(|r| {
            let link = match g.localization(&r.face) {
                Localized::Empty => VertexSet::empty(g.n()),
                Localized::Graph(sub) => sub.set_to_parent(&sub.graph.vertices(), g.n()),
            };
            (r.face, link)
        })
        .collect();
    if let Some(&(ridge, fiber)) = links.iter().find(|(_, link)| link.len() < p) {
        return Some(Witness::ThinRidge { ridge, fiber });
    }
    g.edges()
        .find(|e| {
            !links
                .iter()
                .any(|(_, link)| link.contains(e.u) && link.contains(e.v))
        })
        .map(|edge| Witness::UncoveredEdge { edge })
}

/// Graph reading: well-covered, fiber sizes, fiber cover of the edges.
fn fiber_condition(g: &Graph, prof: &IndependenceProfile, p: usize) -> Option<Witness> {
    if !independence::is_well_covered(g) {
        let facet = *prof
            .facets
            .iter()
            .find(|f| f.len() != prof.alpha)
            .expect("a non-well-covered graph has a small facet");
        return Some(Witness::ImpureFacet { facet });
    }
    if let Some(r) = prof.ridges.iter().find(|r| r.fiber.len() < p) {
        return Some(Witness::ThinRidge {
            ridge: r.face,
            fiber: r.fiber,
        });
    }
    alpha_critical_fibers_of(g, prof)
        .witness
        .map(|edge| Witness::UncoveredEdge { edge })
}

/// Verdict on `G_ab` for one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeLocalizationVerdict {
    InClass,
    NotInClass,
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeLocalizationEntry {
    pub edge: Edge,
    /// Vertices remaining in `G_ab`.
    pub order: usize,
    pub verdict: EdgeLocalizationVerdict,
}

/// For each edge `ab`, whether `G_ab` lies in `W_{p-1}`. Panics if `p < 2`.
pub fn edge_localization_scan(g: &Graph, p: usize) -> Vec<EdgeLocalizationEntry> {
    assert!(p >= 2, "edge-localization scan needs p >= 2");
    g.edges()
        .map(|edge| {
            let loc = g.edge_localization(edge).expect("edge from edge iterator");
            let verdict = match &loc {
                Localized::Empty => EdgeLocalizationVerdict::Empty,
                Localized::Graph(sub) if is_in_wp_ridge(&sub.graph, p - 1) => {
                    EdgeLocalizationVerdict::InClass
                }
                Localized::Graph(_) => EdgeLocalizationVerdict::NotInClass,
            };
            EdgeLocalizationEntry {
                edge,
                order: loc.order(),
                verdict,
            }
        })
        .collect()
}

/// The combinatorial equivalences for triangle-free graphs without isolated
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GorensteinCheck {
    /// The graph has an isolated vertex.
    Inapplicable,
    Evaluated {
        /// Triangle-free and in `W_2` (oracle).
        b: bool,
        /// Triangle-free, well-covered, every fiber of size at least 2.
        c: bool,
        /// Complement: maximal cliques all of size `r`, independence number 2,
        /// minimum `(r-1)`-clique-codegree at least 2.
        d: bool,
    },
}

pub fn gorenstein_combinatorial_check(g: &Graph, opts: &OracleOptions) -> Result<GorensteinCheck, WpError> {
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok(GorensteinCheck::Inapplicable);
    }
    let triangle_free = saturation::is_kt_free(g, 3);
    let b = triangle_free && wp_oracle(g, 2, opts)?.is_member();

    let prof = independence::profile(g);
    let c = triangle_free
        && independence::is_well_covered(g)
        && prof.ridges.iter().all(|r| r.fiber.len() >= 2);

    let h = g.complement();
    let r = prof.alpha;
    let uniformity = saturation::maximal_clique_sizes_uniform(&h);
    let d = uniformity.uniform
        && uniformity.clique_number == r
        && alpha(&h) == 2
        && saturation::min_clique_codegree(&h, r).is_some_and(|c| c >= 2);
    Ok(GorensteinCheck::Evaluated { b, c, d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn fam(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().graph
    }

    fn all_deciders(g: &Graph, p: usize) -> [bool; 3] {
        [
            wp_oracle(g, p, &OracleOptions::unlimited()).unwrap().is_member(),
            is_in_wp_ridge(g, p),
            is_in_wp_localization(g, p),
        ]
    }

    #[test]
    fn complete_graph_membership_is_order() {
        let k3 = fam("complete:n=3");
        assert_eq!(all_deciders(&k3, 3), [true; 3]);
        assert_eq!(all_deciders(&k3, 4), [false; 3]);
        assert_eq!(
            wp_oracle(&k3, 4, &OracleOptions::default()).unwrap(),
            OracleOutcome::TooFewVertices
        );
    }

    #[test]
    fn cycle_seven_is_exactly_w1() {
        let c7 = fam("cycle:n=7");
        assert_eq!(all_deciders(&c7, 1), [true; 3]);
        assert_eq!(all_deciders(&c7, 2), [false; 3]);
        assert_eq!(w_index(&c7), WIndex::Value(1));
    }

    #[test]
    fn blowups_have_index_q() {
        for q in 1..=4 {
            let g = fam(&format!("c7_blowup:q={q}"));
            assert_eq!(w_index(&g), WIndex::Value(q));
            assert!(is_in_wp_ridge(&g, q));
            assert!(!is_in_wp_ridge(&g, q + 1));
            assert!(is_in_wp_localization(&g, q));
            assert!(!is_in_wp_localization(&g, q + 1));
        }
        let g2 = fam("c7_blowup:q=2");
        assert!(wp_oracle(&g2, 2, &OracleOptions::unlimited()).unwrap().is_member());
        assert!(matches!(
            is_in_wp_oracle(&g2, 2),
            Err(WpError::SizeGuard { n: 14, limit: 10 })
        ));
    }

    #[test]
    fn petersen_complement_is_w3_not_w4() {
        let g = fam("petersen-complement");
        assert_eq!(all_deciders(&g, 3), [true; 3]);
        assert_eq!(all_deciders(&g, 4), [false; 3]);
        assert_eq!(w_index(&g), WIndex::Value(3));
    }

    #[test]
    fn path_three_fails_localization() {
        let p3 = fam("path:n=3");
        assert!(!is_in_wp_localization(&p3, 1));
        assert_eq!(w_index(&p3), WIndex::NotWellCovered);
    }

    #[test]
    fn disjoint_cliques_index() {
        for (r, p) in [(2, 2), (3, 2), (2, 3), (3, 1)] {
            let g = generate(&FamilySpec::DisjointCliques { r, p }).unwrap().graph;
            assert_eq!(w_index(&g), WIndex::Value(p));
        }
    }

    #[test]
    fn criticality() {
        let blowup = fam("c7_blowup:q=2");
        for e in blowup.edges() {
            assert!(is_edge_alpha_critical(&blowup, e).unwrap());
        }
        let p4 = fam("path:n=4");
        let middle = Edge::new(1, 2).unwrap();
        assert!(!is_edge_alpha_critical(&p4, middle).unwrap());
        let direct = is_alpha_critical_direct(&p4);
        assert!(!direct.critical);
        assert_eq!(direct.witness, Some(middle));
        let fibers = is_alpha_critical_fibers(&p4);
        assert_eq!(fibers.witness, Some(middle));
        for n in 2..6 {
            let k = Graph::complete(n).unwrap();
            assert!(is_alpha_critical_direct(&k).critical);
        }
        assert!(is_alpha_critical_fibers(&fam("cycle:n=7")).critical);
        assert!(is_alpha_critical_fibers(&fam("petersen-complement")).critical);
        assert!(matches!(
            is_edge_alpha_critical(&p4, Edge::new(0, 3).unwrap()),
            Err(GraphError::NotAnEdge { .. })
        ));
        let empty = Graph::edgeless(3).unwrap();
        let verdict = is_alpha_critical_direct(&empty);
        assert!(verdict.critical && verdict.vacuous);
    }

    #[test]
    fn theorem_reports() {
        let pc = fam("petersen-complement");
        let rep = main_theorem_report(&pc, 3, &OracleOptions::default()).unwrap();
        assert!(rep.all_true());
        assert_eq!(rep.r, 2);
        let p4 = fam("path:n=4");
        let rep = main_theorem_report(&p4, 1, &OracleOptions::default()).unwrap();
        assert!(!rep.cond_a && !rep.cond_b && !rep.cond_c && !rep.cond_d);
        assert!(rep.witness_a.is_some() && rep.witness_d.is_some());
        for (r, p) in [(2, 2), (3, 2), (2, 3)] {
            let g = generate(&FamilySpec::DisjointCliques { r, p }).unwrap().graph;
            let rep = main_theorem_report(&g, p, &OracleOptions::default()).unwrap();
            assert!(rep.all_true(), "{r}K_{p}");
        }
    }

    #[test]
    fn edge_localization_scans() {
        let g = fam("c7_blowup:q=2");
        let scan = edge_localization_scan(&g, 2);
        // a = vertex 2 in V_1, b = vertex 4 in V_2.
        let entry = scan.iter().find(|e| e.edge == Edge::new(2, 4).unwrap()).unwrap();
        assert_eq!(entry.order, 6);
        assert_eq!(entry.verdict, EdgeLocalizationVerdict::NotInClass);

        let pc = fam("petersen-complement");
        let scan = edge_localization_scan(&pc, 3);
        assert_eq!(scan.len(), 30);
        assert!(scan
            .iter()
            .all(|e| e.order == 1 && e.verdict == EdgeLocalizationVerdict::NotInClass));

        let dc = fam("disjoint_cliques:r=3,p=2");
        assert!(edge_localization_scan(&dc, 2)
            .iter()
            .all(|e| e.order == 4 && e.verdict == EdgeLocalizationVerdict::InClass));
    }

    #[test]
    fn gorenstein_checks() {
        let opts = OracleOptions::default();
        assert_eq!(
            gorenstein_combinatorial_check(&fam("cycle:n=5"), &opts).unwrap(),
            GorensteinCheck::Evaluated { b: true, c: true, d: true }
        );
        assert_eq!(
            gorenstein_combinatorial_check(&fam("cycle:n=7"), &opts).unwrap(),
            GorensteinCheck::Evaluated { b: false, c: false, d: false }
        );
        assert_eq!(
            gorenstein_combinatorial_check(&fam("complete:n=3"), &opts).unwrap(),
            GorensteinCheck::Evaluated { b: false, c: false, d: false }
        );
        assert_eq!(
            gorenstein_combinatorial_check(&Graph::edgeless(2).unwrap(), &opts).unwrap(),
            GorensteinCheck::Inapplicable
        );
    }
}
