//! Named verification suites. Each criterion reports pass/fail with a short
//! detail line; the CLI prints them as a table and the `acceptance` test
//! target asserts them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{self, Execution};
use crate::families::{generate, FamilySpec, Structure};
use crate::graph::{Edge, Graph, Localized};
use crate::graph6;
use crate::independence;
use crate::saturation;
use crate::scan::{self, ScanConfig, ScanMode};
use crate::vertex_set::VertexSet;
use crate::wp::{self, EdgeLocalizationVerdict, OracleOptions, WIndex};

/// Orders covered by the exhaustive catalog criteria.
pub const CATALOG_MAX_N: usize = 6;
/// Levels checked on the catalog.
pub const CATALOG_PS: [usize; 3] = [1, 2, 3];

const MAX_EXAMPLES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} [{}] {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// The two worked example families.
    Examples,
    /// Exhaustive labeled catalog criteria.
    Catalog,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "examples" => Ok(Suite::Examples),
            "catalog" => Ok(Suite::Catalog),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite `{other}` (expected examples, catalog or all)"
            )),
        }
    }
}

pub fn run_suite(suite: Suite, exec: Execution) -> Vec<CriterionOutcome> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Examples | Suite::All) {
        out.push(criterion_3());
        out.push(criterion_4());
    }
    if matches!(suite, Suite::Catalog | Suite::All) {
        let audit = audit_catalog(CATALOG_MAX_N, &CATALOG_PS, exec);
        out.push(criterion_1(&audit));
        out.push(criterion_2(&audit));
        out.push(criterion_5(&audit));
        out.push(criterion_6(&audit));
        out.push(criterion_7(&audit));
        out.push(criterion_8(exec));
        out.push(criterion_9(&audit));
        out.push(criterion_10(&audit));
    }
    out.sort_by_key(|c| c.id);
    out
}

/// Failure tallies from one pass over every labeled graph on `1..=max_n`
/// vertices.
#[derive(Clone, Debug, Default)]
pub struct CatalogAudit {
    pub graphs: u64,
    pub decider: Failures,
    pub conditions: Failures,
    pub alpha2: Failures,
    pub w_duality: Failures,
    pub w_checked: u64,
    pub bounds: Failures,
    pub bounds_checked: u64,
    pub criticality: Failures,
    pub codec: Failures,
}

#[derive(Clone, Debug, Default)]
pub struct Failures {
    pub count: u64,
    pub examples: Vec<String>,
}

impl Failures {
    fn record(&mut self, example: String) {
        self.count += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(example);
        }
    }

    fn merge(&mut self, other: Failures) {
        self.count += other.count;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    fn summary(&self) -> String {
        if self.count == 0 {
            "0 failures".into()
        } else {
            format!("{} failures, e.g. {}", self.count, self.examples.join("; "))
        }
    }
}

impl CatalogAudit {
    fn merge(&mut self, other: CatalogAudit) {
        self.graphs += other.graphs;
        self.decider.merge(other.decider);
        self.conditions.merge(other.conditions);
        self.alpha2.merge(other.alpha2);
        self.w_duality.merge(other.w_duality);
        self.w_checked += other.w_checked;
        self.bounds.merge(other.bounds);
        self.bounds_checked += other.bounds_checked;
        self.criticality.merge(other.criticality);
        self.codec.merge(other.codec);
    }
}

fn audit_graph(g: &Graph, ps: &[usize]) -> CatalogAudit {
    let mut a = CatalogAudit {
        graphs: 1,
        ..Default::default()
    };
    let g6 = graph6::encode(g);
    let opts = OracleOptions::default();
    let h = g.complement();
    let prof = independence::profile(g);
    let r = prof.alpha;

    if graph6::decode(&g6).as_ref() != Ok(g) {
        a.codec.record(g6.clone());
    }

    let direct = wp::is_alpha_critical_direct(g).critical;
    let fibers = wp::alpha_critical_fibers_of(g, &prof).critical;
    if direct != fibers {
        a.criticality.record(format!("{g6} direct={direct} fibers={fibers}"));
    }

    if let WIndex::Value(w) = wp::w_index_of(&prof) {
        a.w_checked += 1;
        let codeg = saturation::min_clique_codegree(&h, r);
        if codeg != Some(w) {
            a.w_duality.record(format!("{g6} w={w} codegree={codeg:?}"));
        }
    }

    for &p in ps {
        let rep = match wp::main_theorem_report(g, p, &opts) {
            Ok(rep) => rep,
            Err(e) => {
                a.decider.record(format!("{g6} p={p}: {e}"));
                continue;
            }
        };
        let ridge = wp::is_in_wp_ridge(g, p);
        let loc = wp::is_in_wp_localization(g, p);
        if rep.in_wp_oracle != ridge || ridge != loc {
            a.decider.record(format!(
                "{g6} p={p} oracle={} ridge={ridge} localization={loc}",
                rep.in_wp_oracle
            ));
        }
        if !rep.all_equal() {
            a.conditions.record(format!(
                "{g6} p={p} a={} b={} c={} d={}",
                rep.cond_a, rep.cond_b, rep.cond_c, rep.cond_d
            ));
        }
        let alpha2 = saturation::alpha2_check(&h, p);
        let theorem = rep.all_true() && rep.r == 2;
        if alpha2 != theorem {
            a.alpha2.record(format!(
                "H={} p={p} alpha2={alpha2} theorem={theorem}",
                graph6::encode(&h)
            ));
        }
        if rep.cond_a && r >= 2 {
            a.bounds_checked += 1;
            let violations = saturation::bound_report(&h, r, p).violations();
            if !violations.is_empty() {
                a.bounds.record(format!("{g6} p={p} {violations:?}"));
            }
            if let Some((clique, v)) = scan::extension_sets_overlap(&h, r) {
                a.bounds
                    .record(format!("{g6} p={p} extension sets overlap at {clique:?}, v={v}"));
            }
        }
    }
    a
}

pub fn audit_catalog(max_n: usize, ps: &[usize], exec: Execution) -> CatalogAudit {
    let mut total = CatalogAudit::default();
    for n in 1..=max_n {
        let per_graph = catalog::filter_map_exhaustive(n, true, exec, |_, g| Some(audit_graph(g, ps)))
            .expect("orders within the catalog cap");
        for a in per_graph {
            total.merge(a);
        }
    }
    total
}

fn outcome(id: u8, name: &'static str, passed: bool, detail: String) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
    }
}

pub fn criterion_1(a: &CatalogAudit) -> CriterionOutcome {
    outcome(
        1,
        "decider equivalence",
        a.decider.count == 0,
        format!("{} graphs x p in {{1,2,3}}: {}", a.graphs, a.decider.summary()),
    )
}

pub fn criterion_2(a: &CatalogAudit) -> CriterionOutcome {
    outcome(
        2,
        "four-way condition equivalence",
        a.conditions.count == 0,
        format!("{} graphs x p in {{1,2,3}}: {}", a.graphs, a.conditions.summary()),
    )
}

pub fn criterion_5(a: &CatalogAudit) -> CriterionOutcome {
    outcome(
        5,
        "alpha = 2 specialization",
        a.alpha2.count == 0,
        format!("{} complements x p in {{1,2,3}}: {}", a.graphs, a.alpha2.summary()),
    )
}

pub fn criterion_6(a: &CatalogAudit) -> CriterionOutcome {
    outcome(
        6,
        "W-index duality",
        a.w_duality.count == 0 && a.w_checked > 0,
        format!("{} well-covered graphs: {}", a.w_checked, a.w_duality.summary()),
    )
}

pub fn criterion_7(a: &CatalogAudit) -> CriterionOutcome {
    let petersen = generate(&FamilySpec::Petersen).expect("petersen").graph;
    let rep = saturation::bound_report(&petersen, 2, 3);
    let tight = rep.e_actual == 15 && rep.p_bound == 15 && rep.flags().p_bound_tight;
    outcome(
        7,
        "edge, degree and conical bounds",
        a.bounds.count == 0 && a.bounds_checked > 0 && tight && rep.violations().is_empty(),
        format!(
            "{} (graph, p) instances with cond_a: {}; Petersen e(H)={} p_bound={} tight={tight}",
            a.bounds_checked,
            a.bounds.summary(),
            rep.e_actual,
            rep.p_bound
        ),
    )
}

pub fn criterion_9(a: &CatalogAudit) -> CriterionOutcome {
    outcome(
        9,
        "fiber-cover criterion",
        a.criticality.count == 0,
        format!("{} graphs: {}", a.graphs, a.criticality.summary()),
    )
}

pub fn criterion_10(a: &CatalogAudit) -> CriterionOutcome {
    let mut failures = Vec::new();
    for spec in family_fixtures() {
        let g = generate(&spec).expect("fixture").graph;
        if graph6::decode(&graph6::encode(&g)).as_ref() != Ok(&g) {
            failures.push(spec.to_string());
        }
    }
    let k1 = graph6::encode(&Graph::complete(1).expect("K_1"));
    let k5 = graph6::encode(&Graph::complete(5).expect("K_5"));
    if k1 != "@" {
        failures.push(format!("K_1 encoded as {k1:?}"));
    }
    if k5 != "D~{" {
        failures.push(format!("K_5 encoded as {k5:?}"));
    }
    outcome(
        10,
        "graph6 codec",
        a.codec.count == 0 && failures.is_empty(),
        format!(
            "catalog round-trip: {}; {} family fixtures; K_1={k1:?} K_5={k5:?}{}",
            a.codec.summary(),
            family_fixtures().len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", failures.join(", "))
            }
        ),
    )
}

/// Every named family at the sizes the examples use, up to `C_7[K_4]`.
pub fn family_fixtures() -> Vec<FamilySpec> {
    let mut specs = vec![FamilySpec::Petersen, FamilySpec::PetersenComplement];
    specs.extend((3..=10).map(|n| FamilySpec::Cycle { n }));
    specs.extend((1..=8).map(|n| FamilySpec::Path { n }));
    specs.extend((1..=8).map(|n| FamilySpec::Complete { n }));
    specs.extend((1..=4).map(|q| FamilySpec::C7Blowup { q }));
    for (r, p) in [(1, 1), (2, 2), (3, 2), (2, 3), (4, 3), (3, 4)] {
        specs.push(FamilySpec::DisjointCliques { r, p });
        specs.push(FamilySpec::CompleteMultipartite { parts: vec![p; r] });
    }
    specs.push(FamilySpec::CompleteMultipartite {
        parts: vec![1, 2, 3, 4],
    });
    specs
}

/// Petersen complement: every quantity the worked example names.
pub fn criterion_3() -> CriterionOutcome {
    let g = generate(&FamilySpec::PetersenComplement).expect("petersen complement").graph;
    let h = g.complement();
    let mut failures: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    check(independence::alpha(&g) == 2, "alpha = 2");
    check(independence::is_well_covered(&g), "well-covered");
    check(wp::w_index(&g) == WIndex::Value(3), "w_index = 3");
    check(wp::is_alpha_critical_direct(&g).critical, "alpha-critical (direct)");
    check(wp::is_alpha_critical_fibers(&g).critical, "alpha-critical (fibers)");
    check(saturation::is_kt_saturated(&h, 3), "complement K_3-saturated");
    check(h.min_degree() == 3, "complement min degree 3");
    let opts = OracleOptions::default();
    for p in 1..=4 {
        let expected = p <= 3;
        let oracle = wp::wp_oracle(&g, p, &opts).map(|o| o.is_member());
        check(oracle == Ok(expected), &format!("oracle W_{p} = {expected}"));
        check(wp::is_in_wp_ridge(&g, p) == expected, &format!("ridge W_{p} = {expected}"));
        check(
            wp::is_in_wp_localization(&g, p) == expected,
            &format!("localization W_{p} = {expected}"),
        );
    }
    let entries = wp::edge_localization_scan(&g, 3);
    check(entries.len() == 30, "30 edges scanned");
    let k1_everywhere = entries.iter().all(|e| {
        let loc = g.edge_localization(e.edge).expect("edge");
        let sub = match &loc {
            Localized::Graph(sub) => sub,
            Localized::Empty => return false,
        };
        e.order == 1
            && e.verdict == EdgeLocalizationVerdict::NotInClass
            && sub.graph.n() == 1
            && wp::is_in_wp_ridge(&sub.graph, 1)
            && !wp::is_in_wp_ridge(&sub.graph, 2)
    });
    check(k1_everywhere, "every G_ab is K_1, in W_1 and not W_2");

    let passed = failures.is_empty();
    outcome(
        3,
        "Petersen complement example",
        passed,
        if passed {
            "alpha=2, w=3, critical, W_3 not W_4, 30 edge localizations are K_1".into()
        } else {
            format!("failed: {}", failures.join(", "))
        },
    )
}

/// `C_7[K_q]` for `q = 1..=4`.
pub fn criterion_4() -> CriterionOutcome {
    let mut failures: Vec<String> = Vec::new();
    for q in 1..=4 {
        let fam = generate(&FamilySpec::C7Blowup { q }).expect("blow-up");
        let g = &fam.graph;
        let Structure::Classes(classes) = &fam.structure else {
            failures.push(format!("q={q}: missing class structure"));
            continue;
        };
        let mut check = |ok: bool, what: &str| {
            if !ok {
                failures.push(format!("q={q}: {what}"));
            }
        };
        check(independence::alpha(g) == 3, "alpha = 3");
        check(independence::is_well_covered(g), "well-covered");
        check(wp::w_index(g) == WIndex::Value(q), "w_index = q");
        check(wp::is_alpha_critical_direct(g).critical, "alpha-critical (direct)");
        check(wp::is_alpha_critical_fibers(g).critical, "alpha-critical (fibers)");

        let ridge = VertexSet::from_vertices(g.n(), [classes[1].first().unwrap(), classes[4].first().unwrap()]);
        let fiber = independence::fiber(g, &ridge);
        check(fiber.as_ref().map(VertexSet::len) == Ok(q), "ridge {1,4} has fiber size q");
        check(fiber == Ok(classes[6]), "ridge {1,4} fiber is V_6");

        let a = classes[1].first().unwrap();
        let b = classes[2].first().unwrap();
        let expected = classes[4] | classes[5] | classes[6];
        match g.edge_localization(Edge::new(a, b).expect("distinct")) {
            Ok(Localized::Graph(sub)) => {
                check(
                    sub.set_to_parent(&sub.graph.vertices(), g.n()) == expected,
                    "G_ab induced on V_4 + V_5 + V_6",
                );
                if q >= 2 {
                    check(!independence::is_well_covered(&sub.graph), "G_ab not well-covered");
                }
            }
            _ => check(false, "G_ab nonempty"),
        }
    }
    let passed = failures.is_empty();
    outcome(
        4,
        "C_7[K_q] blow-up example",
        passed,
        if passed {
            "q=1..4: alpha=3, well-covered, w=q, critical, fiber over {1,4} is V_6, G_ab = V_4+V_5+V_6".into()
        } else {
            format!("failed: {}", failures.join(", "))
        },
    )
}

/// Number of labelings of `r` disjoint copies of `K_p`: `(rp)! / (p!^r r!)`.
pub fn disjoint_clique_labelings(r: u64, p: u64) -> u64 {
    let fact = |k: u64| (1..=k).product::<u64>();
    fact(r * p) / (fact(p).pow(r as u32) * fact(r))
}

/// Find-mode at `n = rp` returns exactly the labeled copies of `r K_p`.
pub fn criterion_8(exec: Execution) -> CriterionOutcome {
    let mut details = Vec::new();
    let mut passed = true;
    for (r, p) in [(2usize, 2usize), (3, 2), (2, 3)] {
        let mut config = ScanConfig::new(ScanMode::Find, vec![p]);
        config.r = Some(r);
        config.exec = exec;
        let n = r * p;
        let found = scan::scan_exhaustive(n, false, &config).expect("n <= 6");
        let all_disjoint_cliques = found.iter().all(|f| {
            let g = graph6::decode(&f.graph6).expect("scan output decodes");
            saturation::disjoint_clique_components(&g)
                .is_some_and(|parts| parts.len() == r && parts.iter().all(|c| c.len() == p))
        });
        let expected = disjoint_clique_labelings(r as u64, p as u64);
        let ok = all_disjoint_cliques && found.len() as u64 == expected;
        passed &= ok;
        details.push(format!("({r},{p}): {} found, {expected} expected", found.len()));
    }
    outcome(8, "rigidity at n = rp", passed, details.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeling_counts() {
        assert_eq!(disjoint_clique_labelings(2, 2), 3);
        assert_eq!(disjoint_clique_labelings(3, 2), 15);
        assert_eq!(disjoint_clique_labelings(2, 3), 10);
    }

    #[test]
    fn suite_names() {
        assert_eq!("examples".parse(), Ok(Suite::Examples));
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_audit_is_clean() {
        let a = audit_catalog(4, &CATALOG_PS, Execution::Parallel);
        assert_eq!(a.graphs, 1 + 2 + 8 + 64);
        for c in [criterion_1(&a), criterion_2(&a), criterion_5(&a), criterion_9(&a)] {
            assert!(c.passed, "{c}");
        }
    }
}
