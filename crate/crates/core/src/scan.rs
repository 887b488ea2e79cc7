//! Catalog scans: decider equivalence, corollary checks, and searches for
//! graphs satisfying the characterization.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{self, CatalogError, Execution};
use crate::graph::Graph;
use crate::graph6;
use crate::independence;
use crate::saturation::{self, RigidityVerdict};
use crate::vertex_set::VertexSet;
use crate::wp::{self, OracleOptions, WIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Deciders and main-theorem conditions must agree.
    Equivalence,
    /// Corollary inequalities and specializations must hold.
    Corollaries,
    /// Emit graphs satisfying condition (a).
    Find,
}

impl FromStr for ScanMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "equivalence" => Ok(ScanMode::Equivalence),
            "corollaries" => Ok(ScanMode::Corollaries),
            "find" => Ok(ScanMode::Find),
            other => Err(format!("unknown scan mode `{other}`")),
        }
    }
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanMode::Equivalence => "equivalence",
            ScanMode::Corollaries => "corollaries",
            ScanMode::Find => "find",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub mode: ScanMode,
    pub ps: Vec<usize>,
    /// Find mode only: restrict matches to this independence number.
    pub r: Option<usize>,
    pub oracle: OracleOptions,
    pub exec: Execution,
}

impl ScanConfig {
    pub fn new(mode: ScanMode, ps: Vec<usize>) -> Self {
        ScanConfig {
            mode,
            ps,
            r: None,
            oracle: OracleOptions::default(),
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FindingKind {
    DeciderDisagreement {
        oracle: bool,
        ridge: bool,
        localization: bool,
    },
    ConditionMismatch {
        cond_a: bool,
        cond_b: bool,
        cond_c: bool,
        cond_d: bool,
    },
    CriticalityDisagreement {
        direct: bool,
        fibers: bool,
    },
    WIndexMismatch {
        w_index: usize,
        min_codegree: Option<usize>,
    },
    BoundViolation {
        violations: Vec<&'static str>,
    },
    ExtensionSetsOverlap {
        clique: VertexSet,
        vertex: usize,
    },
    RigidityViolation {
        reason: String,
    },
    Alpha2Mismatch {
        alpha2: bool,
        theorem: bool,
    },
    Alpha3Mismatch {
        alpha3: bool,
        theorem: bool,
    },
    /// The oracle refused the graph (size guard).
    OracleSkipped {
        reason: String,
    },
    /// Find mode hit.
    Match {
        r: usize,
    },
}

impl FindingKind {
    /// Counterexamples to a proven statement.
    pub fn is_violation(&self) -> bool {
        !matches!(self, FindingKind::Match { .. } | FindingKind::OracleSkipped { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    /// Mask for exhaustive catalogs, 1-based line number for streams.
    pub index: u64,
    pub graph6: String,
    pub p: Option<usize>,
    #[serde(flatten)]
    pub kind: FindingKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: u64,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub mode: String,
    pub graphs: u64,
    pub parse_errors: u64,
    pub violations: u64,
    pub matches: u64,
    pub skipped: u64,
}

impl ScanSummary {
    pub fn tally(mode: ScanMode, graphs: u64, parse_errors: u64, findings: &[Finding]) -> Self {
        let mut s = ScanSummary {
            mode: mode.to_string(),
            graphs,
            parse_errors,
            ..Default::default()
        };
        for f in findings {
            match f.kind {
                FindingKind::Match { .. } => s.matches += 1,
                FindingKind::OracleSkipped { .. } => s.skipped += 1,
                _ => s.violations += 1,
            }
        }
        s
    }
}

/// All findings for one graph.
pub fn check_graph(g: &Graph, config: &ScanConfig) -> Vec<(Option<usize>, FindingKind)> {
    match config.mode {
        ScanMode::Equivalence => check_equivalence(g, config),
        ScanMode::Corollaries => check_corollaries(g, config),
        ScanMode::Find => find_matches(g, config),
    }
}

fn check_equivalence(g: &Graph, config: &ScanConfig) -> Vec<(Option<usize>, FindingKind)> {
    let mut out = Vec::new();
    let direct = wp::is_alpha_critical_direct(g);
    let fibers = wp::is_alpha_critical_fibers(g);
    if direct.critical != fibers.critical {
        out.push((
            None,
            FindingKind::CriticalityDisagreement {
                direct: direct.critical,
                fibers: fibers.critical,
            },
        ));
    }
    for &p in &config.ps {
        let ridge = wp::is_in_wp_ridge(g, p);
        let localization = wp::is_in_wp_localization(g, p);
        match wp::main_theorem_report(g, p, &config.oracle) {
            Ok(rep) => {
                if rep.in_wp_oracle != ridge || ridge != localization {
                    out.push((
                        Some(p),
                        FindingKind::DeciderDisagreement {
                            oracle: rep.in_wp_oracle,
                            ridge,
                            localization,
                        },
                    ));
                }
                if !rep.all_equal() {
                    out.push((
                        Some(p),
                        FindingKind::ConditionMismatch {
                            cond_a: rep.cond_a,
                            cond_b: rep.cond_b,
                            cond_c: rep.cond_c,
                            cond_d: rep.cond_d,
                        },
                    ));
                }
            }
            Err(e) => {
                out.push((Some(p), FindingKind::OracleSkipped { reason: e.to_string() }));
                if ridge != localization {
                    out.push((
                        Some(p),
                        FindingKind::DeciderDisagreement {
                            oracle: ridge,
                            ridge,
                            localization,
                        },
                    ));
                }
            }
        }
    }
    out
}

/// Pairwise disjointness and the degree bound for the extension sets of
/// every `r`-clique through every vertex.
pub fn extension_sets_overlap(h: &Graph, r: usize) -> Option<(VertexSet, usize)> {
    for clique in saturation::cliques_of_size(h, r) {
        for v in clique.iter() {
            let sets = saturation::extension_sets(h, &clique, v).expect("clique from enumeration");
            let total: usize = sets.iter().map(|(_, x)| x.len()).sum();
            let union = sets
                .iter()
                .fold(VertexSet::empty(h.n()), |acc, (_, x)| acc.union(x));
            let disjoint = union.len() == total;
            let in_neighborhood = union.is_subset(h.neighbors(v));
            if !disjoint || !in_neighborhood || total > h.degree(v) {
                return Some((clique, v));
            }
        }
    }
    None
}

fn check_corollaries(g: &Graph, config: &ScanConfig) -> Vec<(Option<usize>, FindingKind)> {
    let mut out = Vec::new();
    let h = g.complement();
    let prof = independence::profile(g);
    let r = prof.alpha;
    if let WIndex::Value(w) = wp::w_index_of(&prof) {
        let min_codegree = saturation::min_clique_codegree(&h, r);
        if min_codegree != Some(w) {
            out.push((None, FindingKind::WIndexMismatch { w_index: w, min_codegree }));
        }
    }
    for &p in &config.ps {
        let rep = match wp::main_theorem_report(g, p, &config.oracle) {
            Ok(rep) => rep,
            Err(e) => {
                out.push((Some(p), FindingKind::OracleSkipped { reason: e.to_string() }));
                continue;
            }
        };
        let theorem = rep.all_true();
        let alpha2 = saturation::alpha2_check(&h, p);
        if alpha2 != (theorem && r == 2) {
            out.push((Some(p), FindingKind::Alpha2Mismatch { alpha2, theorem }));
        }
        let alpha3 = saturation::alpha3_check(&h, p);
        if alpha3 != (theorem && r == 3) {
            out.push((Some(p), FindingKind::Alpha3Mismatch { alpha3, theorem }));
        }
        if !rep.cond_a || r < 2 {
            continue;
        }
        let bounds = saturation::bound_report(&h, r, p);
        let violations = bounds.violations();
        if !violations.is_empty() {
            out.push((Some(p), FindingKind::BoundViolation { violations }));
        }
        if let RigidityVerdict::Violation { reason } = saturation::dense_rigidity_check(&h, r, p) {
            out.push((Some(p), FindingKind::RigidityViolation { reason }));
        }
        if let Some((clique, vertex)) = extension_sets_overlap(&h, r) {
            out.push((Some(p), FindingKind::ExtensionSetsOverlap { clique, vertex }));
        }
    }
    out
}

fn find_matches(g: &Graph, config: &ScanConfig) -> Vec<(Option<usize>, FindingKind)> {
    let mut out = Vec::new();
    for &p in &config.ps {
        match wp::main_theorem_report(g, p, &config.oracle) {
            Ok(rep) if rep.cond_a && config.r.is_none_or(|r| r == rep.r) => {
                out.push((Some(p), FindingKind::Match { r: rep.r }));
            }
            Ok(_) => {}
            Err(e) => out.push((Some(p), FindingKind::OracleSkipped { reason: e.to_string() })),
        }
    }
    out
}

fn to_findings(index: u64, g: &Graph, config: &ScanConfig) -> Option<Vec<Finding>> {
    let found = check_graph(g, config);
    if found.is_empty() {
        return None;
    }
    let graph6 = graph6::encode(g);
    Some(
        found
            .into_iter()
            .map(|(p, kind)| Finding {
                index,
                graph6: graph6.clone(),
                p,
                kind,
            })
            .collect(),
    )
}

/// Scans indexed graphs, returning findings in input order.
pub fn scan_graphs(graphs: &[(u64, Graph)], config: &ScanConfig) -> Vec<Finding> {
    catalog::filter_map_ordered(graphs, config.exec, |_, (index, g)| to_findings(*index, g, config))
        .into_iter()
        .flatten()
        .collect()
}

/// Scans every labeled graph on `n` vertices.
pub fn scan_exhaustive(n: usize, allow_large: bool, config: &ScanConfig) -> Result<Vec<Finding>, CatalogError> {
    Ok(
        catalog::filter_map_exhaustive(n, allow_large, config.exec, |mask, g| to_findings(mask, g, config))?
            .into_iter()
            .flatten()
            .collect(),
    )
}

/// Reads graph6 lines; blank lines are skipped and bad lines are reported
/// with their 1-based line numbers.
pub fn read_graph6<R: BufRead>(reader: R) -> (Vec<(u64, Graph)>, Vec<ParseFailure>) {
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i as u64 + 1;
        let line = match line {
            Ok(line) => line,
            Err(e) => {
                failures.push(ParseFailure {
                    line: line_no,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == graph6::HEADER {
            continue;
        }
        match graph6::decode(trimmed) {
            Ok(g) => graphs.push((line_no, g)),
            Err(e) => failures.push(ParseFailure {
                line: line_no,
                message: e.to_string(),
            }),
        }
    }
    (graphs, failures)
}
