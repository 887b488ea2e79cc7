//! Per-graph analysis report, serialized by the CLI with a fixed key order.

use serde::Serialize;

use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::independence;
use crate::saturation::{self, BoundReport};
use crate::wp::{self, EdgeLocalizationVerdict, OracleOptions, WIndex};

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub ps: Vec<usize>,
    pub localization_scan: bool,
    /// Level for the edge-localization scan; defaults to the W-index when
    /// that is at least 2, else 2.
    pub scan_p: Option<usize>,
    pub oracle: OracleOptions,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            ps: vec![1, 2, 3],
            localization_scan: false,
            scan_p: None,
            oracle: OracleOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputIdentity {
    pub graph6: String,
    pub n: usize,
    pub e: usize,
    pub family: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalitySummary {
    pub critical: bool,
    pub direct: bool,
    pub fibers: bool,
    pub agree: bool,
    pub vacuous: bool,
    pub witness: Option<Edge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conditions {
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub cond_d: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipRow {
    pub p: usize,
    /// `None` when the oracle's size guard refused the graph.
    pub oracle: Option<bool>,
    pub ridge: bool,
    pub localization: bool,
    pub conditions: Option<Conditions>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplementSummary {
    /// `K_{r+1}`-saturation with `r` the independence number.
    pub saturated: bool,
    pub saturation_level: usize,
    pub clique_uniform: bool,
    pub clique_number: usize,
    pub min_clique_codegree: Option<usize>,
    pub min_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationScanSummary {
    pub p: usize,
    pub edges: usize,
    pub in_class: usize,
    pub not_in_class: usize,
    pub empty: usize,
    /// Edges whose localization is empty or outside `W_{p-1}`.
    pub failing_edges: Vec<Edge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: InputIdentity,
    pub alpha: usize,
    pub well_covered: bool,
    pub edgeless: bool,
    pub w_index: WIndex,
    pub alpha_critical: CriticalitySummary,
    pub membership: Vec<MembershipRow>,
    pub complement: ComplementSummary,
    /// Evaluated at `p = max(w_index, 1)`.
    pub bounds: BoundReport,
    pub edge_localization: Option<LocalizationScanSummary>,
}

pub fn analyze(g: &Graph, family: Option<String>, opts: &AnalysisOptions) -> AnalysisReport {
    let prof = independence::profile(g);
    let r = prof.alpha;
    let w = wp::w_index_of(&prof);
    let direct = wp::is_alpha_critical_direct(g);
    let fibers = wp::alpha_critical_fibers_of(g, &prof);

    let membership = opts
        .ps
        .iter()
        .map(|&p| {
            let report = wp::main_theorem_report(g, p, &opts.oracle).ok();
            MembershipRow {
                p,
                oracle: report.as_ref().map(|r| r.in_wp_oracle),
                ridge: wp::is_in_wp_ridge(g, p),
                localization: wp::is_in_wp_localization(g, p),
                conditions: report.map(|r| Conditions {
                    cond_a: r.cond_a,
                    cond_b: r.cond_b,
                    cond_c: r.cond_c,
                    cond_d: r.cond_d,
                }),
            }
        })
        .collect();

    let h = g.complement();
    let uniformity = saturation::maximal_clique_sizes_uniform(&h);
    let complement = ComplementSummary {
        saturated: saturation::is_kt_saturated(&h, r + 1),
        saturation_level: r + 1,
        clique_uniform: uniformity.uniform,
        clique_number: uniformity.clique_number,
        min_clique_codegree: saturation::min_clique_codegree(&h, r),
        min_degree: h.min_degree(),
    };

    let bound_p = w.value().unwrap_or(1).max(1);
    let bounds = saturation::bound_report(&h, r, bound_p);

    let edge_localization = opts.localization_scan.then(|| {
        let p = opts
            .scan_p
            .unwrap_or_else(|| w.value().filter(|&w| w >= 2).unwrap_or(2));
        let entries = wp::edge_localization_scan(g, p);
        let count = |v| entries.iter().filter(|e| e.verdict == v).count();
        LocalizationScanSummary {
            p,
            edges: entries.len(),
            in_class: count(EdgeLocalizationVerdict::InClass),
            not_in_class: count(EdgeLocalizationVerdict::NotInClass),
            empty: count(EdgeLocalizationVerdict::Empty),
            failing_edges: entries
                .iter()
                .filter(|e| e.verdict != EdgeLocalizationVerdict::InClass)
                .map(|e| e.edge)
                .collect(),
        }
    });

    AnalysisReport {
        input: InputIdentity {
            graph6: graph6::encode(g),
            n: g.n(),
            e: g.edge_count(),
            family,
        },
        alpha: r,
        well_covered: prof.is_pure,
        edgeless: g.edge_count() == 0,
        w_index: w,
        alpha_critical: CriticalitySummary {
            critical: direct.critical,
            direct: direct.critical,
            fibers: fibers.critical,
            agree: direct.critical == fibers.critical,
            vacuous: direct.vacuous,
            witness: direct.witness,
        },
        membership,
        complement,
        bounds,
        edge_localization,
    }
}
