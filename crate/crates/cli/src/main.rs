use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ridgewp::analysis::{self, AnalysisOptions, AnalysisReport};
use ridgewp::catalog::Execution;
use ridgewp::families::{generate, FamilySpec};
use ridgewp::scan::{self, Finding, FindingKind, ScanConfig, ScanMode, ScanSummary};
use ridgewp::verify::{self, Suite};
use ridgewp::wp::OracleOptions;
use ridgewp::{graph6, FamilyError, Graph};

#[derive(Parser)]
#[command(name = "ridgewp", version, about = "W_p membership, W-index and alpha-criticality of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph (graph6 or family spec).
    Analyze(AnalyzeArgs),
    /// Scan a graph6 stream or the exhaustive labeled catalog.
    Scan(ScanArgs),
    /// Print the graph6 line of a named family.
    Family(FamilyArgs),
    /// Run an acceptance suite: examples, catalog or all.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 string or family spec such as `c7_blowup:q=2`.
    graph: Option<String>,
    /// Read the graph from the first non-empty line of FILE.
    #[arg(long, value_name = "FILE", conflicts_with = "graph")]
    input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    p: Vec<usize>,
    /// Include the per-edge localization scan.
    #[arg(long)]
    localization_scan: bool,
    /// Level for the localization scan (default: W-index if at least 2, else 2).
    #[arg(long)]
    scan_p: Option<usize>,
    /// Lift the brute-force oracle's vertex guard.
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan every labeled graph on N vertices.
    #[arg(long, value_name = "N", conflicts_with = "input")]
    exhaustive: Option<usize>,
    /// graph6 stream; stdin when neither this nor --exhaustive is given.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "equivalence")]
    mode: ScanMode,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    p: Vec<usize>,
    /// Find mode: only report graphs with this independence number.
    #[arg(long)]
    r: Option<usize>,
    /// Allow N = 7 and lift the oracle's vertex guard.
    #[arg(long)]
    allow_large: bool,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
    /// Exit 2 when the stream had unparsable lines.
    #[arg(long)]
    strict: bool,
    /// Print the summary as JSON on stdout instead of text on stderr.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    spec: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(default_value = "all")]
    suite: Suite,
    #[arg(long)]
    sequential: bool,
    #[arg(long)]
    json: bool,
}

/// Failure that maps to exit code 2.
struct UsageError {
    kind: &'static str,
    message: String,
}

impl UsageError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        UsageError {
            kind,
            message: message.into(),
        }
    }
}

type CmdResult = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Scan(args) => run_scan(args),
        Command::Family(args) => family(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind, "message": e.message }));
            ExitCode::from(2)
        }
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn check_ps(ps: &[usize]) -> Result<(), UsageError> {
    if ps.is_empty() || ps.contains(&0) {
        return Err(UsageError::new("usage", "--p values must be positive"));
    }
    Ok(())
}

fn oracle_options(allow_large: bool) -> OracleOptions {
    if allow_large {
        OracleOptions::unlimited()
    } else {
        OracleOptions::default()
    }
}

fn open_input(path: &PathBuf) -> Result<BufReader<File>, UsageError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| UsageError::new("io", format!("{}: {e}", path.display())))
}

/// Family spec first, graph6 when the name is not a known family.
fn resolve_graph(text: &str) -> Result<(Graph, Option<String>), UsageError> {
    match text.parse::<FamilySpec>() {
        Ok(spec) => {
            let fam = generate(&spec).map_err(|e| UsageError::new("family", e.to_string()))?;
            Ok((fam.graph, Some(spec.to_string())))
        }
        Err(FamilyError::UnknownFamily(_)) => graph6::decode(text)
            .map(|g| (g, None))
            .map_err(|e| UsageError::new("parse", format!("not a family spec or graph6 string: {e}"))),
        Err(e) => Err(UsageError::new("family", e.to_string())),
    }
}

fn analyze(args: AnalyzeArgs) -> CmdResult {
    check_ps(&args.p)?;
    let text = match (&args.graph, &args.input) {
        (Some(g), _) => g.clone(),
        (None, Some(path)) => open_input(path)?
            .lines()
            .map_while(Result::ok)
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| UsageError::new("parse", format!("{}: no graph found", path.display())))?,
        (None, None) => return Err(UsageError::new("usage", "give a graph6 string, family spec or --input FILE")),
    };
    let (g, family) = resolve_graph(text.trim())?;
    let opts = AnalysisOptions {
        ps: args.p,
        localization_scan: args.localization_scan || args.scan_p.is_some(),
        scan_p: args.scan_p,
        oracle: oracle_options(args.allow_large),
    };
    if opts.scan_p == Some(0) {
        return Err(UsageError::new("usage", "--scan-p must be positive"));
    }
    let report = analysis::analyze(&g, family, &opts);
    let mut out = io::stdout().lock();
    if args.json {
        let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        let _ = write_analysis_text(&mut out, &report);
    }
    Ok(analysis_consistent(&report))
}

/// Deciders agree, conditions agree and no bound is violated.
fn analysis_consistent(r: &AnalysisReport) -> bool {
    let rows_ok = r.membership.iter().all(|m| {
        m.ridge == m.localization
            && m.oracle.is_none_or(|o| o == m.ridge)
            && m.conditions
                .as_ref()
                .is_none_or(|c| c.cond_a == c.cond_b && c.cond_b == c.cond_c && c.cond_c == c.cond_d)
    });
    rows_ok && r.alpha_critical.agree && r.bounds.violations().is_empty()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_analysis_text(out: &mut impl Write, r: &AnalysisReport) -> io::Result<()> {
    let name = r.input.family.as_deref().unwrap_or("-");
    writeln!(out, "graph      {} ({name}), n={}, e={}", r.input.graph6, r.input.n, r.input.e)?;
    writeln!(out, "alpha      {}", r.alpha)?;
    writeln!(out, "covered    {}", yes(r.well_covered))?;
    match r.w_index.value() {
        Some(w) => writeln!(out, "w_index    {w}")?,
        None => writeln!(out, "w_index    not well-covered")?,
    }
    let c = &r.alpha_critical;
    writeln!(
        out,
        "critical   {} (direct={} fibers={}{})",
        yes(c.critical),
        yes(c.direct),
        yes(c.fibers),
        if c.vacuous { ", vacuous" } else { "" }
    )?;
    writeln!(out, "p  oracle  ridge  local  a b c d")?;
    for m in &r.membership {
        let oracle = m.oracle.map_or("skip", yes);
        let conds = m.conditions.as_ref().map_or("- - - -".to_string(), |c| {
            [c.cond_a, c.cond_b, c.cond_c, c.cond_d]
                .iter()
                .map(|&b| if b { "T" } else { "F" })
                .collect::<Vec<_>>()
                .join(" ")
        });
        writeln!(
            out,
            "{:<2} {:<7} {:<6} {:<6} {conds}",
            m.p,
            oracle,
            yes(m.ridge),
            yes(m.localization)
        )?;
    }
    let h = &r.complement;
    writeln!(
        out,
        "complement K_{}-saturated={} uniform={} clique_number={} min_codegree={} min_degree={}",
        h.saturation_level,
        yes(h.saturated),
        yes(h.clique_uniform),
        h.clique_number,
        h.min_clique_codegree.map_or("-".to_string(), |v| v.to_string()),
        h.min_degree
    )?;
    let violations = r.bounds.violations();
    writeln!(
        out,
        "bounds     p={} hypotheses={} violations={}",
        r.bounds.p,
        yes(r.bounds.hypotheses_hold),
        if violations.is_empty() {
            "none".to_string()
        } else {
            violations.join(",")
        }
    )?;
    if let Some(s) = &r.edge_localization {
        writeln!(
            out,
            "edge scan  p={} edges={} in_class={} not_in_class={} empty={}",
            s.p, s.edges, s.in_class, s.not_in_class, s.empty
        )?;
        for e in &s.failing_edges {
            writeln!(out, "  failing edge {}-{}", e.u, e.v)?;
        }
    }
    Ok(())
}

fn run_scan(args: ScanArgs) -> CmdResult {
    check_ps(&args.p)?;
    let config = ScanConfig {
        mode: args.mode,
        ps: args.p.clone(),
        r: args.r,
        oracle: oracle_options(args.allow_large),
        exec: execution(args.sequential),
    };
    let (findings, graphs, failures) = match args.exhaustive {
        Some(n) => {
            let findings = scan::scan_exhaustive(n, args.allow_large, &config)
                .map_err(|e| UsageError::new("usage", e.to_string()))?;
            (findings, ridgewp::catalog::labeled_count(n), Vec::new())
        }
        None => {
            let (graphs, failures) = match &args.input {
                Some(path) => scan::read_graph6(open_input(path)?),
                None => scan::read_graph6(io::stdin().lock()),
            };
            (scan::scan_graphs(&graphs, &config), graphs.len() as u64, failures)
        }
    };

    let mut out = io::stdout().lock();
    for f in &findings {
        let _ = write_finding(&mut out, args.mode, f);
    }
    for failure in &failures {
        eprintln!("{}", json!({ "parse_error": { "line": failure.line, "message": failure.message } }));
    }
    let summary = ScanSummary::tally(args.mode, graphs, failures.len() as u64, &findings);
    if args.json {
        let _ = writeln!(out, "{}", serde_json::to_string(&json!({ "summary": summary })).expect("summary serializes"));
    } else {
        eprintln!(
            "{} scan: {} graphs, {} violations, {} matches, {} skipped, {} parse errors",
            summary.mode, summary.graphs, summary.violations, summary.matches, summary.skipped, summary.parse_errors
        );
    }
    if summary.violations > 0 {
        return Ok(false);
    }
    if args.strict && summary.parse_errors > 0 {
        return Err(UsageError::new(
            "parse",
            format!("{} unparsable line(s) in input", summary.parse_errors),
        ));
    }
    Ok(true)
}

/// Find mode writes plain graph6; other modes write one JSON object per line.
fn write_finding(out: &mut impl Write, mode: ScanMode, f: &Finding) -> io::Result<()> {
    match (mode, &f.kind) {
        (ScanMode::Find, FindingKind::Match { .. }) => writeln!(out, "{}", f.graph6),
        _ => writeln!(out, "{}", serde_json::to_string(f).expect("finding serializes")),
    }
}

fn family(args: FamilyArgs) -> CmdResult {
    let spec: FamilySpec = args.spec.parse().map_err(|e: FamilyError| UsageError::new("family", e.to_string()))?;
    let fam = generate(&spec).map_err(|e| UsageError::new("family", e.to_string()))?;
    let g6 = graph6::encode(&fam.graph);
    if args.json {
        println!(
            "{}",
            json!({ "spec": spec.to_string(), "n": fam.graph.n(), "e": fam.graph.edge_count(), "graph6": g6 })
        );
    } else {
        println!("{g6}");
    }
    Ok(true)
}

fn run_verify(args: VerifyArgs) -> CmdResult {
    let outcomes = verify::run_suite(args.suite, execution(args.sequential));
    if args.json {
        println!("{}", serde_json::to_string(&outcomes).expect("outcomes serialize"));
    } else {
        for c in &outcomes {
            println!("{c}");
        }
    }
    Ok(outcomes.iter().all(|c| c.passed))
}
