//! The JSON analysis report (schema version 1).
//!
//! Canonical form: `serde_json` pretty-printing over `BTreeMap`s and
//! fixed-order structs, so identical inputs and parameters always produce
//! byte-identical reports. Rationals appear as exact `"p/q"` fractions plus
//! a 6-place decimal rendering; node references use the input's labels.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioJson {
    pub fraction: String,
    pub decimal: String,
}

impl RatioJson {
    pub fn new(r: Ratio<u64>) -> Self {
        RatioJson {
            fraction: format!("{}/{}", r.numer(), r.denom()),
            decimal: decimal6(*r.numer(), *r.denom()),
        }
    }
}

/// `p/q` rounded half-up to six decimal places, via integer arithmetic.
fn decimal6(p: u64, q: u64) -> String {
    let scaled = (p as u128 * 1_000_000 + q as u128 / 2) / q as u128;
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub parameters: ParametersInfo,
    pub input: InputSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centers: Option<CentersSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<DiameterSection>,
}

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct ParametersInfo {
    pub command: String,
    pub max_k: usize,
    pub visit_order: String,
    pub exact_diameter: bool,
}

#[derive(Serialize)]
pub struct InputSummary {
    pub nodes: usize,
    pub edges: usize,
    pub duplicate_edges_ignored: u64,
}

#[derive(Serialize)]
pub struct ReductionSection {
    pub spine_nodes: usize,
    pub spine_edges: usize,
    pub iterations: u32,
    pub subsumptions: usize,
    pub tau: BTreeMap<String, u64>,
    pub beta: BTreeMap<String, Vec<String>>,
    pub edges_absorbed: BTreeMap<String, u64>,
}

#[derive(Serialize)]
pub struct SignatureSection {
    pub max_k_searched: usize,
    pub counts: BTreeMap<usize, u64>,
    /// CC over the spine's node count (the graph the cycles were counted on).
    pub connective_complexity_spine: Option<RatioJson>,
    /// CC over the original graph's node count.
    pub connective_complexity_original: Option<RatioJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub major_cycles: Option<MajorCyclesJson>,
}

#[derive(Serialize)]
pub struct MajorCyclesJson {
    pub length: usize,
    pub count: usize,
    pub cycles: Vec<Vec<String>>,
    pub common_nodes: Vec<String>,
    pub common_edges: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct CentersSection {
    pub distance_center: Vec<String>,
    pub betweenness_center: Vec<String>,
    /// Both balance conditions, summed over the whole spine.
    pub balance_conditions_hold: bool,
    /// Overall verdict: `contained`, `not_contained`, or `hypotheses_unmet`.
    pub containment: String,
    pub components: Vec<CentersComponentJson>,
}

#[derive(Serialize)]
pub struct CentersComponentJson {
    pub representative: String,
    pub nodes: usize,
    pub balance_holds: bool,
    pub verdict: String,
    pub distance_center: Vec<String>,
    pub betweenness_center: Vec<String>,
    pub cc_spine_witnesses: Vec<String>,
    pub cb_spine_witnesses: Vec<String>,
    pub cc_outside: Vec<String>,
    pub cb_outside: Vec<String>,
}

#[derive(Serialize)]
pub struct DiameterSection {
    pub spine_connected: bool,
    /// Spine diameter / estimate of the single component; `null` when the
    /// spine is empty or split (no finite overall value).
    pub spine_diameter: Option<u32>,
    pub estimate: Option<RatioJson>,
    pub endpoints: Option<[String; 2]>,
    pub pendants: Option<[RatioJson; 2]>,
    pub components: Vec<DiameterComponentJson>,
    /// Exact diameter of the original graph; `null` unless requested and
    /// connected (disconnected graphs have no finite diameter).
    pub exact: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_per_component: Option<Vec<u32>>,
}

#[derive(Serialize)]
pub struct DiameterComponentJson {
    pub representative: String,
    pub nodes: usize,
    pub spine_diameter: u32,
    pub estimate: RatioJson,
    pub endpoints: [String; 2],
    pub pendants: [RatioJson; 2],
}

/// Canonical serialization: pretty JSON plus a trailing newline.
pub fn write_report(report: &AnalysisReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}
