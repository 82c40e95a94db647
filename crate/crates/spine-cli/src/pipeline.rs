//! The analysis pipeline behind the `spine` binary: load an edge list,
//! reduce it, and run the requested stage (signature, centers, diameter,
//! verification, or the full report). Identical configurations produce
//! byte-identical reports and DOT files.

use std::collections::BTreeMap;
use std::path::PathBuf;

use spine_core::{
    balance_conditions, center_containment_check, centrality_report, component_diameters, connective_complexity, estimate_diameter, exact_diameter, gen,
    is_irreducible, longest_cycle_intersection, longest_cycles, reduce, reduce_with_order,
    ContainmentVerdict, Cycle, Graph, NodeId, NodeSet, ReductionResult,
};
use thiserror::Error;

use crate::dot::write_dot;
use crate::edgelist::parse_edge_list;
use crate::report::{
    AnalysisReport, CentersComponentJson, CentersSection, DiameterComponentJson, DiameterSection,
    InputSummary, MajorCyclesJson, ParametersInfo, RatioJson, ReductionSection, SignatureSection,
    ToolInfo, write_report,
};

pub const TOOL_NAME: &str = "spine";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, or an unusable configuration. Exit 1.
    #[error("{0}")]
    Input(String),
    /// A `verify` check failed. Exit 2.
    #[error("verification failed:\n{}", .0.join("\n"))]
    Verification(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Verification(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Reduce,
    Signature,
    Centers,
    Diameter,
    Verify,
    Report,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Reduce => "reduce",
            CommandKind::Signature => "signature",
            CommandKind::Centers => "centers",
            CommandKind::Diameter => "diameter",
            CommandKind::Verify => "verify",
            CommandKind::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VisitOrder {
    Ascending,
    Seed(u64),
}

impl VisitOrder {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "ascending" {
            return Ok(VisitOrder::Ascending);
        }
        if let Some(seed) = s.strip_prefix("seed:") {
            return seed
                .parse()
                .map(VisitOrder::Seed)
                .map_err(|_| format!("invalid seed in visit order '{s}'"));
        }
        Err(format!(
            "visit order must be 'ascending' or 'seed:<integer>', got '{s}'"
        ))
    }

    pub fn describe(self) -> String {
        match self {
            VisitOrder::Ascending => "ascending".to_string(),
            VisitOrder::Seed(s) => format!("seed:{s}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub command: CommandKind,
    pub max_k: usize,
    pub visit_order: VisitOrder,
    pub exact_diameter: bool,
    pub report_path: Option<PathBuf>,
    pub dot_path: Option<PathBuf>,
    /// `longest:<i>` — embolden the i-th major cycle in the DOT output.
    pub highlight: Option<usize>,
    pub threads: usize,
}

impl RunConfig {
    pub fn new(input: PathBuf, command: CommandKind) -> Self {
        RunConfig {
            input,
            command,
            max_k: 32,
            visit_order: VisitOrder::Ascending,
            exact_diameter: false,
            report_path: None,
            dot_path: None,
            highlight: None,
            threads: 1,
        }
    }
}

/// Executes the configured command, streaming human-readable output to
/// `out`. Report/DOT files are written as side effects.
pub fn run(config: &RunConfig, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    if config.max_k < 3 {
        return Err(CliError::Input(format!(
            "--max-k must be at least 3, got {}",
            config.max_k
        )));
    }
    if config.highlight.is_some() && config.dot_path.is_none() {
        return Err(CliError::Input(
            "--highlight has no effect without --dot".to_string(),
        ));
    }

    let text = std::fs::read_to_string(&config.input)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", config.input.display())))?;
    let parsed = parse_edge_list(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", config.input.display())))?;
    let g = parsed.graph;

    let r = match config.visit_order {
        VisitOrder::Ascending => reduce(&g),
        VisitOrder::Seed(seed) => {
            let order = gen::seeded_visit_order(&g, seed);
            reduce_with_order(&g, &order).expect("seeded order is a permutation")
        }
    };

    let mut report = AnalysisReport {
        schema_version: 1,
        tool: ToolInfo {
            name: TOOL_NAME,
            version: TOOL_VERSION,
        },
        parameters: ParametersInfo {
            command: config.command.name().to_string(),
            max_k: config.max_k,
            visit_order: config.visit_order.describe(),
            exact_diameter: config.exact_diameter,
        },
        input: InputSummary {
            nodes: g.node_count(),
            edges: g.edge_count(),
            duplicate_edges_ignored: parsed.duplicate_edges,
        },
        reduction: Some(reduction_section(&g, &r)),
        signature: None,
        centers: None,
        diameter: None,
    };

    let mut spine_cycles: Option<Vec<Cycle>> = None;
    let compute_cycles = |spine: &Graph, cache: &mut Option<Vec<Cycle>>| -> Vec<Cycle> {
        cache
            .get_or_insert_with(|| crate::parallel_chordless_cycles(spine, 3, config.max_k, config.threads))
            .clone()
    };

    let stage_signature = matches!(config.command, CommandKind::Signature | CommandKind::Report);
    let stage_centers = matches!(config.command, CommandKind::Centers | CommandKind::Report);
    let stage_diameter = matches!(config.command, CommandKind::Diameter | CommandKind::Report);
    // `report` to stdout emits the JSON alone; narration would pollute it.
    let narrate = config.command != CommandKind::Report || config.report_path.is_some();

    match config.command {
        CommandKind::Reduce => {
            writeln!(
                out,
                "reduce: spine {} of {} nodes, {} edges, {} iterations, {} subsumptions",
                r.survivors().len(),
                g.node_count(),
                r.spine().edge_count(),
                r.iterations(),
                r.trace().len()
            )
            .ok();
        }
        CommandKind::Verify => {
            let failures = run_verify(&g, &r, out);
            if !failures.is_empty() {
                finish_outputs(config, &g, &r, &report, &mut spine_cycles)?;
                return Err(CliError::Verification(failures));
            }
            writeln!(out, "verify: all checks passed").ok();
        }
        _ => {}
    }

    if stage_signature {
        let cycles = compute_cycles(r.spine(), &mut spine_cycles);
        let section = signature_section(&g, &r, &cycles, config.max_k);
        if narrate {
            writeln!(out, "signature (chordless cycles of the spine, k ≤ {}):", config.max_k).ok();
            if section.counts.is_empty() {
                writeln!(out, "  none — the spine is cycle-free").ok();
            }
            for (k, n) in &section.counts {
                writeln!(out, "  k={k}: {n}").ok();
            }
            if let Some(cc) = &section.connective_complexity_spine {
                writeln!(out, "  CC = {} ({}) over spine nodes", cc.fraction, cc.decimal).ok();
            }
            if let Some(m) = &section.major_cycles {
                writeln!(
                    out,
                    "  major cycles: {} of length {}; {} common nodes, {} common edges",
                    m.count,
                    m.length,
                    m.common_nodes.len(),
                    m.common_edges.len()
                )
                .ok();
            }
        }
        report.signature = Some(section);
    }

    if stage_centers {
        let section = centers_section(&g, &r);
        if narrate {
            writeln!(out, "distance center: {}", join_or_none(&section.distance_center)).ok();
            writeln!(out, "betweenness center: {}", join_or_none(&section.betweenness_center)).ok();
            writeln!(out, "balance conditions: {}", if section.balance_conditions_hold { "hold" } else { "do not hold" }).ok();
            writeln!(out, "center containment: {}", section.containment).ok();
        }
        report.centers = Some(section);
    }

    if stage_diameter {
        let section = diameter_section(&g, &r, config.exact_diameter);
        if narrate {
            match (&section.estimate, &section.endpoints) {
                (Some(est), Some([a, b])) => {
                    writeln!(
                        out,
                        "diameter estimate: {} ({}) via {} .. {}; spine diameter {}",
                        est.fraction,
                        est.decimal,
                        a,
                        b,
                        section.spine_diameter.unwrap_or(0)
                    )
                    .ok();
                }
                _ => {
                    writeln!(out, "diameter estimate: undefined (empty or disconnected spine)").ok();
                }
            }
            if config.exact_diameter {
                match section.exact {
                    Some(d) => writeln!(out, "exact diameter: {d}").ok(),
                    None => writeln!(out, "exact diameter: infinite (disconnected or empty)").ok(),
                };
            }
        }
        report.diameter = Some(section);
    }

    finish_outputs(config, &g, &r, &report, &mut spine_cycles)?;

    if config.command == CommandKind::Report && config.report_path.is_none() {
        write!(out, "{}", write_report(&report)).ok();
    }
    Ok(())
}

/// Writes the report and DOT files if requested.
fn finish_outputs(
    config: &RunConfig,
    _g: &Graph,
    r: &ReductionResult,
    report: &AnalysisReport,
    spine_cycles: &mut Option<Vec<Cycle>>,
) -> Result<(), CliError> {
    if let Some(path) = &config.report_path {
        std::fs::write(path, write_report(report))
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &config.dot_path {
        let highlight = match config.highlight {
            None => None,
            Some(i) => {
                let cycles = spine_cycles.get_or_insert_with(|| {
                    crate::parallel_chordless_cycles(r.spine(), 3, config.max_k, config.threads)
                });
                let majors = longest_cycles(cycles);
                if i >= majors.len() {
                    return Err(CliError::Input(format!(
                        "--highlight longest:{i} out of range: {} major cycle(s)",
                        majors.len()
                    )));
                }
                Some(majors[i].clone())
            }
        };
        let dot = write_dot(r.spine(), Some(r), highlight.as_ref())
            .map_err(|e| CliError::Input(e.to_string()))?;
        std::fs::write(path, dot)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn join_or_none(labels: &[String]) -> String {
    if labels.is_empty() {
        "(none)".to_string()
    } else {
        labels.join(" ")
    }
}

fn labels(g: &Graph, set: &NodeSet) -> Vec<String> {
    let mut out: Vec<String> = set.iter().map(|v| g.label(v).to_string()).collect();
    out.sort();
    out
}

fn reduction_section(g: &Graph, r: &ReductionResult) -> ReductionSection {
    let mut tau = BTreeMap::new();
    let mut beta = BTreeMap::new();
    let mut edges_absorbed = BTreeMap::new();
    for (y, t) in r.tau_table() {
        let label = g.label(y).to_string();
        tau.insert(label.clone(), t);
        beta.insert(label.clone(), labels(g, r.beta(y)));
        edges_absorbed.insert(label, r.edges_absorbed(y));
    }
    ReductionSection {
        spine_nodes: r.survivors().len(),
        spine_edges: r.spine().edge_count(),
        iterations: r.iterations(),
        subsumptions: r.trace().len(),
        tau,
        beta,
        edges_absorbed,
    }
}

fn signature_section(
    g: &Graph,
    r: &ReductionResult,
    cycles: &[Cycle],
    max_k: usize,
) -> SignatureSection {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for c in cycles {
        *counts.entry(c.len()).or_insert(0) += 1;
    }
    let sig = spine_core::Signature {
        counts: counts.clone(),
        max_k_searched: max_k,
        cc: None,
    };
    let spine = r.spine();
    let majors = longest_cycles(cycles);
    let major_cycles = if majors.is_empty() {
        None
    } else {
        let (nodes, edges) = longest_cycle_intersection(spine, &majors);
        Some(MajorCyclesJson {
            length: majors[0].len(),
            count: majors.len(),
            cycles: majors
                .iter()
                .map(|c| c.vertices().iter().map(|&v| g.label(v).to_string()).collect())
                .collect(),
            common_nodes: labels(g, &nodes),
            common_edges: edges
                .iter()
                .map(|&(a, b)| [g.label(a).to_string(), g.label(b).to_string()])
                .collect(),
        })
    };
    SignatureSection {
        max_k_searched: max_k,
        counts,
        connective_complexity_spine: connective_complexity(&sig, spine.node_count())
            .map(RatioJson::new),
        connective_complexity_original: connective_complexity(&sig, g.node_count())
            .map(RatioJson::new),
        major_cycles,
    }
}

fn verdict_name(v: ContainmentVerdict) -> &'static str {
    match v {
        ContainmentVerdict::Contained => "contained",
        ContainmentVerdict::NotContained => "not_contained",
        ContainmentVerdict::HypothesesUnmet => "hypotheses_unmet",
    }
}

fn centers_section(g: &Graph, r: &ReductionResult) -> CentersSection {
    let centrality = centrality_report(g);
    let containment = center_containment_check(g, r);
    let components = containment
        .components
        .iter()
        .map(|c| CentersComponentJson {
            representative: g.label(c.members.first().expect("nonempty component")).to_string(),
            nodes: c.members.len(),
            balance_holds: c.balance_holds,
            verdict: verdict_name(c.verdict).to_string(),
            distance_center: labels(g, &c.cc_center),
            betweenness_center: labels(g, &c.cb_center),
            cc_spine_witnesses: labels(g, &c.cc_spine),
            cb_spine_witnesses: labels(g, &c.cb_spine),
            cc_outside: labels(g, &c.cc_outside),
            cb_outside: labels(g, &c.cb_outside),
        })
        .collect();
    CentersSection {
        distance_center: labels(g, &centrality.cc_center),
        betweenness_center: labels(g, &centrality.cb_center),
        balance_conditions_hold: balance_conditions(r).values().all(|&b| b),
        containment: verdict_name(containment.overall()).to_string(),
        components,
    }
}

fn diameter_section(g: &Graph, r: &ReductionResult, exact: bool) -> DiameterSection {
    let estimates = estimate_diameter(r);
    let components: Vec<DiameterComponentJson> = estimates
        .iter()
        .map(|e| DiameterComponentJson {
            representative: g
                .label(e.component.first().expect("nonempty component"))
                .to_string(),
            nodes: e.component.len(),
            spine_diameter: e.spine_diameter,
            estimate: RatioJson::new(e.estimate),
            endpoints: [
                g.label(e.endpoints.0).to_string(),
                g.label(e.endpoints.1).to_string(),
            ],
            pendants: [RatioJson::new(e.pendants.0), RatioJson::new(e.pendants.1)],
        })
        .collect();
    let connected = estimates.len() == 1;
    let overall = connected.then(|| &estimates[0]);
    DiameterSection {
        spine_connected: connected,
        spine_diameter: overall.map(|e| e.spine_diameter),
        estimate: overall.map(|e| RatioJson::new(e.estimate)),
        endpoints: overall.map(|e| {
            [
                g.label(e.endpoints.0).to_string(),
                g.label(e.endpoints.1).to_string(),
            ]
        }),
        pendants: overall.map(|e| [RatioJson::new(e.pendants.0), RatioJson::new(e.pendants.1)]),
        components,
        exact: if exact { exact_diameter(g) } else { None },
        exact_per_component: exact.then(|| {
            component_diameters(g)
                .into_iter()
                .map(|(_, d)| d)
                .collect()
        }),
    }
}

/// The `verify` checks: the input is expected to be an irreducible spine,
/// and its (identity) reduction must satisfy every structural invariant.
/// Returns the failure messages.
fn run_verify(g: &Graph, r: &ReductionResult, out: &mut dyn std::io::Write) -> Vec<String> {
    let mut failures = Vec::new();
    let mut check = |name: &str, result: Result<(), String>, out: &mut dyn std::io::Write| {
        match result {
            Ok(()) => {
                writeln!(out, "verify {name}: ok").ok();
            }
            Err(msg) => {
                writeln!(out, "verify {name}: FAIL — {msg}").ok();
                failures.push(format!("{name}: {msg}"));
            }
        }
    };

    check(
        "input-irreducible",
        if is_irreducible(g) {
            Ok(())
        } else {
            Err(format!(
                "input is not an irreducible spine ({} of {} nodes subsumable)",
                g.node_count() - r.survivors().len(),
                g.node_count()
            ))
        },
        out,
    );
    check(
        "spine-irreducible",
        if is_irreducible(r.spine()) {
            Ok(())
        } else {
            Err("reduced spine is not irreducible".to_string())
        },
        out,
    );
    let total: u64 = r.tau_table().map(|(_, t)| t).sum();
    check(
        "tau-conservation",
        if total == g.node_count() as u64 {
            Ok(())
        } else {
            Err(format!("Σ τ = {total}, expected {}", g.node_count()))
        },
        out,
    );
    let mut union = NodeSet::empty(g.universe());
    let mut partition_ok = true;
    for y in r.survivors() {
        if !union.is_disjoint(r.beta(y)) || !r.beta(y).contains(y) {
            partition_ok = false;
        }
        union.union_with(r.beta(y));
    }
    partition_ok &= &union == g.active_set();
    check(
        "beta-partition",
        if partition_ok {
            Ok(())
        } else {
            Err("β sets do not partition the nodes".to_string())
        },
        out,
    );
    let bad_degree: Vec<NodeId> = r
        .spine()
        .nodes()
        .filter(|&v| r.spine().degree(v) == 1)
        .collect();
    check(
        "spine-min-degree",
        if bad_degree.is_empty() {
            Ok(())
        } else {
            Err(format!("degree-1 spine nodes: {bad_degree:?}"))
        },
        out,
    );
    // Distance preservation, on a deterministic sample of survivors.
    let sample: Vec<NodeId> = r.survivors().iter().take(24).collect();
    let mut preserved = Ok(());
    'outer: for &u in &sample {
        let orig = g.bfs_distances(u);
        let red = r.spine().bfs_distances(u);
        for &v in &sample {
            if orig[v.index()] != red[v.index()] {
                preserved = Err(format!(
                    "distance {}–{} changed: {:?} → {:?}",
                    g.label(u),
                    g.label(v),
                    orig[v.index()],
                    red[v.index()]
                ));
                break 'outer;
            }
        }
    }
    check("distance-preservation", preserved, out);
    failures
}
