//! Deterministic rendering: DOT for graphs, JSON documents for single-group
//! commands, CSV for the catalog sweep. No timestamps, no hash-order
//! iteration — identical inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::TheoremReport;
use crate::graph::{DirectedPowerGraph, Graph};
use crate::group::FiniteGroup;
use crate::invariants::{ChainFormulaResult, InvariantReport};

/// DOT text for an undirected graph: quoted name, one line per vertex,
/// then the lexicographically sorted edge list.
pub fn dot_graph(name: &str, g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name:?} {{").unwrap();
    for &v in g.labels() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT text for the directed power graph; arcs point from each element to
/// its proper powers' sources, i.e. `u -> v` means `u` lies in `<v>`.
pub fn dot_digraph(name: &str, d: &DirectedPowerGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name:?} {{").unwrap();
    for v in 0..d.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The single JSON document shape every non-CSV command emits; absent
/// sections are omitted entirely.
#[derive(Debug, Serialize)]
pub struct Document {
    pub tool_version: &'static str,
    pub group: GroupSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<Vec<TheoremReport>>,
}

#[derive(Debug, Serialize)]
pub struct GroupSection {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    pub order_spectrum: BTreeMap<u64, usize>,
}

impl GroupSection {
    pub fn of(g: &FiniteGroup) -> GroupSection {
        GroupSection {
            label: g.label().to_string(),
            order: g.order() as u64,
            exponent: g.exponent(),
            order_spectrum: g.order_spectrum(),
        }
    }
}

/// One graph, edges (or arcs, for the directed kind) as sorted label pairs.
#[derive(Debug, Serialize)]
pub struct GraphSection {
    pub kind: &'static str,
    pub identity_policy: &'static str,
    pub n: usize,
    pub edges: Vec<(u64, u64)>,
}

#[derive(Debug, Serialize)]
pub struct InvariantsSection {
    #[serde(flatten)]
    pub report: InvariantReport,
    /// Present for power graphs with the identity kept, where the divisor
    /// chain prediction applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_formula: Option<ChainFormulaResult>,
}

pub fn render_json(document: &Document) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("document serializes");
    text.push('\n');
    text
}

pub const CSV_HEADER: [&str; 14] = [
    "group",
    "order",
    "kind",
    "omega",
    "chi",
    "alpha",
    "gamma",
    "diameter",
    "eppo",
    "prime_graph_null",
    "pc_class",
    "pow_eq_enh",
    "enh_eq_comm",
    "pow_eq_comm",
];

/// One catalog CSV row, already stringified by the caller.
pub type CsvRow = [String; 14];

pub fn render_csv(rows: &[CsvRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("header writes");
    for row in rows {
        writer.write_record(row).expect("row writes");
    }
    String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is utf-8")
}
