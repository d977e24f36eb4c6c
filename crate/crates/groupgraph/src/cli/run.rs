//! Command execution. Each subcommand maps to a [`RunCommand`]; [`execute`]
//! does the work and returns rendered output plus an exit code, keeping the
//! binary a thin argument-parsing shell that unit tests can bypass.

use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{
    is_eppo, power_eq_commuting_class, prime_graph_is_null, verify_theorems, TheoremId,
};
use crate::cli::catalog::{catalog_specs, CatalogBoundError};
use crate::cli::emit::{
    dot_digraph, dot_graph, render_csv, render_json, CsvRow, Document, GraphSection, GroupSection,
    InvariantsSection,
};
use crate::cli::parse::{parse_group_spec, ParseError};
use crate::graph::{
    build_graph, difference_graph, directed_power_graph, graphs_equal, prime_graph, BuildKind,
    DirectedPowerGraph, Graph, GraphError, IdentityPolicy,
};
use crate::group::{build_group, FiniteGroup, GroupError, GroupSpec};
use crate::invariants::{
    chromatic_number, clique_number, comparability_coloring, diameter_and_components,
    domination_number, independence_number, invariant_report, invariant_report_with_chromatic,
    power_omega_chi_formula, InvariantError, PerfectnessParams, SolverParams,
};

/// Which graph of the group a single-group command operates on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphChoice {
    Power,
    Enhanced,
    Commuting,
    Prime,
    DirectedPower,
    Difference,
}

impl GraphChoice {
    pub fn name(self) -> &'static str {
        match self {
            GraphChoice::Power => "power",
            GraphChoice::Enhanced => "enhanced",
            GraphChoice::Commuting => "commuting",
            GraphChoice::Prime => "prime",
            GraphChoice::DirectedPower => "directed-power",
            GraphChoice::Difference => "difference",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityChoice {
    Include,
    Exclude,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum RunCommand {
    /// Emit one graph of one group.
    Build {
        group: String,
        graph: GraphChoice,
        identity: Option<IdentityChoice>,
        format: OutputFormat,
    },
    /// Compute the invariant report for one graph of one group.
    Invariants {
        group: String,
        graph: GraphChoice,
        identity: Option<IdentityChoice>,
        format: OutputFormat,
    },
    /// Check the named structure theorems against one group.
    Verify { group: String, theorems: String, format: OutputFormat },
    /// Sweep the built-in group catalog and emit one CSV row per
    /// (group, graph kind).
    Catalog { max_order: u64, format: OutputFormat },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: RunCommand,
    pub probe: PerfectnessParams,
    /// Upper bound on |G| for single-group commands. `None` defers to the
    /// `GROUPGRAPH_MAX_ORDER` environment variable, then to
    /// [`DEFAULT_SIZE_GUARD`].
    pub size_guard: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub rendered: String,
    /// 0 on success; `verify` reports 1 when any selected theorem fails.
    pub exit_code: i32,
}

/// A request the command line cannot serve; the message is shown verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0}")]
pub struct UsageError(pub String);

impl From<ParseError> for UsageError {
    fn from(e: ParseError) -> UsageError {
        UsageError(e.to_string())
    }
}

impl From<GroupError> for UsageError {
    fn from(e: GroupError) -> UsageError {
        UsageError(e.to_string())
    }
}

impl From<GraphError> for UsageError {
    fn from(e: GraphError) -> UsageError {
        UsageError(e.to_string())
    }
}

impl From<InvariantError> for UsageError {
    fn from(e: InvariantError) -> UsageError {
        UsageError(e.to_string())
    }
}

impl From<CatalogBoundError> for UsageError {
    fn from(e: CatalogBoundError) -> UsageError {
        UsageError(e.to_string())
    }
}

pub const DEFAULT_SIZE_GUARD: u64 = 2000;
pub const SIZE_GUARD_ENV: &str = "GROUPGRAPH_MAX_ORDER";

pub fn execute(config: &RunConfig) -> Result<RunOutcome, UsageError> {
    match &config.command {
        RunCommand::Build { group, graph, identity, format } => {
            run_build(group, *graph, *identity, *format, config)
        }
        RunCommand::Invariants { group, graph, identity, format } => {
            run_invariants(group, *graph, *identity, *format, config)
        }
        RunCommand::Verify { group, theorems, format } => {
            run_verify(group, theorems, *format, config)
        }
        RunCommand::Catalog { max_order, format } => run_catalog(*max_order, *format),
    }
}

fn resolve_size_guard(config: &RunConfig) -> Result<u64, UsageError> {
    if let Some(limit) = config.size_guard {
        return Ok(limit);
    }
    match std::env::var(SIZE_GUARD_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            UsageError(format!("{SIZE_GUARD_ENV} must be a positive integer, got {text:?}"))
        }),
        Err(_) => Ok(DEFAULT_SIZE_GUARD),
    }
}

fn load_group(label: &str, config: &RunConfig) -> Result<FiniteGroup, UsageError> {
    let spec = parse_group_spec(label)?;
    let order = spec.order()?;
    let guard = resolve_size_guard(config)?;
    if order > guard {
        return Err(UsageError(format!(
            "group {spec} has order {order}, above the limit of {guard} \
             (raise it with --max-group-order or {SIZE_GUARD_ENV})"
        )));
    }
    Ok(build_group(&spec)?)
}

enum BuiltGraph {
    Undirected(Graph),
    Directed(DirectedPowerGraph),
}

fn build_choice(
    g: &FiniteGroup,
    choice: GraphChoice,
    identity: Option<IdentityChoice>,
) -> Result<BuiltGraph, UsageError> {
    if matches!(choice, GraphChoice::Prime | GraphChoice::DirectedPower)
        && identity == Some(IdentityChoice::Exclude)
    {
        return Err(UsageError(format!(
            "--identity exclude does not apply to the {} graph",
            choice.name()
        )));
    }
    let policy = match identity {
        Some(IdentityChoice::Exclude) => IdentityPolicy::Exclude,
        _ => IdentityPolicy::Include,
    };
    Ok(match choice {
        GraphChoice::Power => BuiltGraph::Undirected(build_graph(g, BuildKind::Power, policy)),
        GraphChoice::Enhanced => {
            BuiltGraph::Undirected(build_graph(g, BuildKind::Enhanced, policy))
        }
        GraphChoice::Commuting => {
            BuiltGraph::Undirected(build_graph(g, BuildKind::Commuting, policy))
        }
        GraphChoice::Prime => BuiltGraph::Undirected(prime_graph(g)?),
        GraphChoice::DirectedPower => BuiltGraph::Directed(directed_power_graph(g)),
        GraphChoice::Difference => {
            let commuting = build_graph(g, BuildKind::Commuting, policy);
            let power = build_graph(g, BuildKind::Power, policy);
            BuiltGraph::Undirected(difference_graph(&commuting, &power)?)
        }
    })
}

fn graph_section(
    choice: GraphChoice,
    identity: Option<IdentityChoice>,
    built: &BuiltGraph,
) -> GraphSection {
    let identity_policy = match identity {
        Some(IdentityChoice::Exclude) => "exclude",
        _ => "include",
    };
    // For the directed kind the pairs are arcs (u, v) with u in <v>.
    let (n, edges) = match built {
        BuiltGraph::Undirected(g) => (g.vertex_count(), g.edges()),
        BuiltGraph::Directed(d) => (d.vertex_count(), d.arcs()),
    };
    GraphSection { kind: choice.name(), identity_policy, n, edges }
}

fn run_build(
    group: &str,
    graph: GraphChoice,
    identity: Option<IdentityChoice>,
    format: OutputFormat,
    config: &RunConfig,
) -> Result<RunOutcome, UsageError> {
    if format == OutputFormat::Csv {
        return Err(UsageError("build emits dot or json, not csv".to_string()));
    }
    let g = load_group(group, config)?;
    let built = build_choice(&g, graph, identity)?;
    let rendered = match format {
        OutputFormat::Dot => {
            let name = format!("{}({})", graph.name(), g.label());
            match &built {
                BuiltGraph::Undirected(u) => dot_graph(&name, u),
                BuiltGraph::Directed(d) => dot_digraph(&name, d),
            }
        }
        OutputFormat::Json => {
            let document = Document {
                tool_version: env!("CARGO_PKG_VERSION"),
                group: GroupSection::of(&g),
                graph: Some(graph_section(graph, identity, &built)),
                invariants: None,
                theorems: None,
            };
            render_json(&document)
        }
        OutputFormat::Csv => unreachable!(),
    };
    Ok(RunOutcome { rendered, exit_code: 0 })
}

fn run_invariants(
    group: &str,
    graph: GraphChoice,
    identity: Option<IdentityChoice>,
    format: OutputFormat,
    config: &RunConfig,
) -> Result<RunOutcome, UsageError> {
    if format != OutputFormat::Json {
        return Err(UsageError("invariants output is json only".to_string()));
    }
    if graph == GraphChoice::DirectedPower {
        return Err(UsageError(
            "invariants apply to undirected graphs; use build for the directed power graph"
                .to_string(),
        ));
    }
    let g = load_group(group, config)?;
    let built = build_choice(&g, graph, identity)?;
    let BuiltGraph::Undirected(target) = &built else { unreachable!() };
    if target.vertex_count() == 0 {
        return Err(UsageError(format!(
            "the {} graph of {} with the identity excluded has no vertices",
            graph.name(),
            g.label()
        )));
    }
    let solver = SolverParams::default();
    let exclude = identity == Some(IdentityChoice::Exclude);
    // The layered colouring gives the power graph's chromatic number
    // exactly; dropping the identity (a universal vertex) costs one colour.
    // Other kinds go through the general solver.
    let report = match (graph, exclude) {
        (GraphChoice::Power, false) => {
            let coloring = comparability_coloring(&g);
            invariant_report_with_chromatic(target, &solver, &config.probe, coloring.color_count)?
        }
        (GraphChoice::Power, true) => {
            let coloring = comparability_coloring(&g);
            invariant_report_with_chromatic(
                target,
                &solver,
                &config.probe,
                coloring.color_count - 1,
            )?
        }
        _ => invariant_report(target, &solver, &config.probe)?,
    };
    let chain_formula =
        (graph == GraphChoice::Power && !exclude).then(|| power_omega_chi_formula(&g));
    let document = Document {
        tool_version: env!("CARGO_PKG_VERSION"),
        group: GroupSection::of(&g),
        graph: Some(graph_section(graph, identity, &built)),
        invariants: Some(InvariantsSection { report, chain_formula }),
        theorems: None,
    };
    Ok(RunOutcome { rendered: render_json(&document), exit_code: 0 })
}

fn parse_theorem_selection(text: &str) -> Result<Vec<TheoremId>, UsageError> {
    if text.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    let selection: Vec<TheoremId> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| TheoremId::from_str(s).map_err(|e| UsageError(e.to_string())))
        .collect::<Result<_, _>>()?;
    if selection.is_empty() {
        return Err(UsageError("no theorems selected".to_string()));
    }
    Ok(selection)
}

fn run_verify(
    group: &str,
    theorems: &str,
    format: OutputFormat,
    config: &RunConfig,
) -> Result<RunOutcome, UsageError> {
    if format != OutputFormat::Json {
        return Err(UsageError("verify output is json only".to_string()));
    }
    let g = load_group(group, config)?;
    let selection = parse_theorem_selection(theorems)?;
    let reports = verify_theorems(&g, &selection, &SolverParams::default(), &config.probe)?;
    let exit_code = i32::from(!reports.iter().all(|r| r.passed()));
    let document = Document {
        tool_version: env!("CARGO_PKG_VERSION"),
        group: GroupSection::of(&g),
        graph: None,
        invariants: None,
        theorems: Some(reports),
    };
    Ok(RunOutcome { rendered: render_json(&document), exit_code })
}

fn run_catalog(max_order: u64, format: OutputFormat) -> Result<RunOutcome, UsageError> {
    if format != OutputFormat::Csv {
        return Err(UsageError("catalog output is csv only".to_string()));
    }
    let specs = catalog_specs(max_order)?;
    let solver = SolverParams::default();
    let per_group: Result<Vec<Vec<CsvRow>>, InvariantError> =
        specs.par_iter().map(|spec| catalog_rows(spec, &solver)).collect();
    let rows: Vec<CsvRow> = per_group?.into_iter().flatten().collect();
    Ok(RunOutcome { rendered: render_csv(&rows), exit_code: 0 })
}

fn catalog_rows(spec: &GroupSpec, solver: &SolverParams) -> Result<Vec<CsvRow>, InvariantError> {
    let g = build_group(spec).expect("catalog specs are valid");
    let power = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
    let enhanced = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
    let commuting = build_graph(&g, BuildKind::Commuting, IdentityPolicy::Include);

    let eppo = is_eppo(&g).to_string();
    let prime_null = prime_graph_is_null(&g).expect("catalog groups are nontrivial").to_string();
    let pc_class =
        power_eq_commuting_class(&g).map_or_else(|| "none".to_string(), |c| c.name().to_string());
    let same = |a: &Graph, b: &Graph| {
        graphs_equal(a, b).expect("same vertex set").is_equal().to_string()
    };
    let pow_eq_enh = same(&power, &enhanced);
    let enh_eq_comm = same(&enhanced, &commuting);
    let pow_eq_comm = same(&power, &commuting);

    let chi_power = comparability_coloring(&g).color_count;
    let mut rows = Vec::with_capacity(3);
    for (kind, graph, known_chi) in [
        ("power", &power, Some(chi_power)),
        ("enhanced", &enhanced, None),
        ("commuting", &commuting, None),
    ] {
        let omega = clique_number(graph, solver)?.size;
        let chi = match known_chi {
            Some(c) => c,
            None => chromatic_number(graph, solver)?,
        };
        let alpha = independence_number(graph, solver)?;
        let domination = domination_number(graph, solver);
        let gamma = if domination.exact {
            domination.value.to_string()
        } else {
            format!("<={}", domination.value)
        };
        let (diameter, _) = diameter_and_components(graph);
        rows.push([
            g.label().to_string(),
            g.order().to_string(),
            kind.to_string(),
            omega.to_string(),
            chi.to_string(),
            alpha.to_string(),
            gamma,
            diameter.to_string(),
            eppo.clone(),
            prime_null.clone(),
            pc_class.clone(),
            pow_eq_enh.clone(),
            enh_eq_comm.clone(),
            pow_eq_comm.clone(),
        ]);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(command: RunCommand) -> RunConfig {
        RunConfig { command, probe: PerfectnessParams::default(), size_guard: None }
    }

    fn build_cmd(group: &str, graph: GraphChoice, format: OutputFormat) -> RunConfig {
        config(RunCommand::Build { group: group.to_string(), graph, identity: None, format })
    }

    #[test]
    fn build_dot_c6_power() {
        let out = execute(&build_cmd("C6", GraphChoice::Power, OutputFormat::Dot)).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.rendered.starts_with("graph \"power(C6)\" {\n"));
        assert!(out.rendered.contains("  2 -- 4;\n"));
        assert!(!out.rendered.contains("  2 -- 3;\n"));
    }

    #[test]
    fn build_json_shape() {
        let out = execute(&build_cmd("S3", GraphChoice::Commuting, OutputFormat::Json)).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out.rendered).unwrap();
        assert_eq!(doc["group"]["label"], "S3");
        assert_eq!(doc["group"]["order"], 6);
        assert_eq!(doc["group"]["exponent"], 6);
        assert_eq!(doc["group"]["order_spectrum"]["2"], 3);
        assert_eq!(doc["graph"]["kind"], "commuting");
        assert_eq!(doc["graph"]["identity_policy"], "include");
        assert_eq!(doc["graph"]["n"], 6);
        // Commuting graph of S3: identity joins everything (5 edges) and the
        // rotation pair commutes: 6 edges total.
        assert_eq!(doc["graph"]["edges"].as_array().unwrap().len(), 6);
        assert!(doc.get("invariants").is_none());
        assert!(doc.get("theorems").is_none());
    }

    #[test]
    fn build_directed_power_uses_arcs() {
        let out =
            execute(&build_cmd("C4", GraphChoice::DirectedPower, OutputFormat::Dot)).unwrap();
        assert!(out.rendered.starts_with("digraph \"directed-power(C4)\" {\n"));
        assert!(out.rendered.contains(" -> "));
    }

    #[test]
    fn build_prime_graph_of_c6() {
        let out = execute(&build_cmd("C6", GraphChoice::Prime, OutputFormat::Json)).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out.rendered).unwrap();
        assert_eq!(doc["graph"]["kind"], "prime");
        assert_eq!(doc["graph"]["n"], 2);
        assert_eq!(doc["graph"]["edges"], serde_json::json!([[2, 3]]));
    }

    #[test]
    fn invariants_c12_power_values() {
        let cfg = config(RunCommand::Invariants {
            group: "C12".to_string(),
            graph: GraphChoice::Power,
            identity: None,
            format: OutputFormat::Json,
        });
        let out = execute(&cfg).unwrap();
        assert_eq!(out.exit_code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.rendered).unwrap();
        let inv = &doc["invariants"];
        assert_eq!(inv["clique_number"], 9);
        assert_eq!(inv["chromatic_number"], 9);
        // Orders of the independent pair must be incomparable divisors of
        // 12; {3, 4} is the largest such antichain.
        assert_eq!(inv["independence_number"], 2);
        assert_eq!(inv["domination"]["value"], 1);
        assert_eq!(inv["domination"]["exact"], true);
        assert_eq!(inv["diameter"], 2);
        assert_eq!(inv["components"], 1);
        assert_eq!(inv["perfectness"]["verdict"], "perfect_sampled");
        assert_eq!(inv["chain_formula"]["value"], 9);
        assert_eq!(inv["chain_formula"]["exponent"], 12);
    }

    #[test]
    fn invariants_power_exclude_drops_one_colour() {
        let cfg = config(RunCommand::Invariants {
            group: "C6".to_string(),
            graph: GraphChoice::Power,
            identity: Some(IdentityChoice::Exclude),
            format: OutputFormat::Json,
        });
        let doc: serde_json::Value =
            serde_json::from_str(&execute(&cfg).unwrap().rendered).unwrap();
        // Chains through 1|3|6 give phi(1)+phi(3)+phi(6) = 5 with the
        // identity; 4 without it.
        assert_eq!(doc["invariants"]["clique_number"], 4);
        assert_eq!(doc["invariants"]["chromatic_number"], 4);
        assert!(doc["invariants"].get("chain_formula").is_none());
        assert_eq!(doc["graph"]["identity_policy"], "exclude");
        assert_eq!(doc["graph"]["n"], 5);
    }

    #[test]
    fn invariants_difference_graph_of_q8() {
        let cfg = config(RunCommand::Invariants {
            group: "Q8".to_string(),
            graph: GraphChoice::Difference,
            identity: None,
            format: OutputFormat::Json,
        });
        let doc: serde_json::Value =
            serde_json::from_str(&execute(&cfg).unwrap().rendered).unwrap();
        // Power and commuting graphs of Q8 agree, so the difference is empty.
        assert_eq!(doc["graph"]["edges"].as_array().unwrap().len(), 0);
        assert_eq!(doc["invariants"]["clique_number"], 1);
        assert_eq!(doc["invariants"]["diameter"], "inf");
    }

    #[test]
    fn verify_s3_all_pass() {
        let cfg = config(RunCommand::Verify {
            group: "S3".to_string(),
            theorems: "all".to_string(),
            format: OutputFormat::Json,
        });
        let out = execute(&cfg).unwrap();
        assert_eq!(out.exit_code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.rendered).unwrap();
        let reports = doc["theorems"].as_array().unwrap();
        assert_eq!(reports.len(), 12);
        for report in reports {
            assert_eq!(report["status"], "pass", "{report}");
            assert_eq!(report["group"], "S3");
        }
        assert!(doc.get("graph").is_none());
    }

    #[test]
    fn verify_selection_keeps_canonical_order() {
        let cfg = config(RunCommand::Verify {
            group: "C4".to_string(),
            theorems: "connectivity-domination, chain-formula".to_string(),
            format: OutputFormat::Json,
        });
        let doc: serde_json::Value =
            serde_json::from_str(&execute(&cfg).unwrap().rendered).unwrap();
        let names: Vec<&str> = doc["theorems"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["theorem"].as_str().unwrap())
            .collect();
        assert_eq!(names, ["chain-formula", "connectivity-domination"]);
    }

    #[test]
    fn catalog_csv_is_sorted_and_deterministic() {
        let cfg = config(RunCommand::Catalog { max_order: 16, format: OutputFormat::Csv });
        let first = execute(&cfg).unwrap();
        let second = execute(&cfg).unwrap();
        assert_eq!(first.rendered, second.rendered);

        let lines: Vec<&str> = first.rendered.lines().collect();
        assert!(lines[0].starts_with("group,order,kind,omega,chi"));
        assert_eq!(lines[1].split(',').take(3).collect::<Vec<_>>(), ["C2", "2", "power"]);
        assert_eq!(lines[2].split(',').take(3).collect::<Vec<_>>(), ["C2", "2", "enhanced"]);
        assert_eq!(lines[3].split(',').take(3).collect::<Vec<_>>(), ["C2", "2", "commuting"]);
        assert_eq!(lines.len() % 3, 1, "three rows per group plus the header");

        let orders: Vec<u64> =
            lines[1..].iter().map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn catalog_rows_report_structure_columns() {
        let cfg = config(RunCommand::Catalog { max_order: 8, format: OutputFormat::Csv });
        let out = execute(&cfg).unwrap();
        let s3_power = out
            .rendered
            .lines()
            .find(|l| l.starts_with("S3,6,power,"))
            .expect("S3 power row");
        let fields: Vec<&str> = s3_power.split(',').collect();
        // omega = chi = 3 via the chain 1|2 plus phi(3) elements of order 3;
        // S3 is EPPO with null prime graph and power = commuting graph.
        assert_eq!(&fields[3..8], ["3", "3", "4", "1", "2"]);
        assert_eq!(&fields[8..], ["true", "true", "semidirect-pq", "true", "true", "true"]);

        // Q8 has element orders 1, 2, 4 only, so it is EPPO and all three
        // graphs coincide.
        let q8_commuting = out
            .rendered
            .lines()
            .find(|l| l.starts_with("Q8,8,commuting,"))
            .expect("Q8 commuting row");
        let fields: Vec<&str> = q8_commuting.split(',').collect();
        assert_eq!(&fields[8..], ["true", "true", "generalized-quaternion", "true", "true", "true"]);

        // C4xC2 has an element of order 4 but contains C2xC2, so the
        // enhanced and commuting graphs split apart.
        let c4c2 = out
            .rendered
            .lines()
            .find(|l| l.starts_with("C2xC4,8,power,"))
            .expect("C2xC4 power row");
        let fields: Vec<&str> = c4c2.split(',').collect();
        assert_eq!(&fields[8..], ["true", "true", "none", "true", "false", "false"]);
    }

    #[test]
    fn size_guard_rejects_large_groups() {
        let mut cfg = build_cmd("C12", GraphChoice::Power, OutputFormat::Dot);
        cfg.size_guard = Some(10);
        let err = execute(&cfg).unwrap_err();
        assert!(err.0.contains("order 12"), "{err}");
        cfg.size_guard = Some(12);
        assert!(execute(&cfg).is_ok());
    }

    #[test]
    fn usage_errors() {
        let bad_spec = execute(&build_cmd("Z5", GraphChoice::Power, OutputFormat::Dot));
        assert!(bad_spec.unwrap_err().0.contains("syntax error"));

        let bad_format = execute(&build_cmd("C4", GraphChoice::Power, OutputFormat::Csv));
        assert!(bad_format.unwrap_err().0.contains("not csv"));

        let cfg = config(RunCommand::Invariants {
            group: "C4".to_string(),
            graph: GraphChoice::Power,
            identity: None,
            format: OutputFormat::Dot,
        });
        assert!(execute(&cfg).unwrap_err().0.contains("json only"));

        let cfg = config(RunCommand::Invariants {
            group: "C4".to_string(),
            graph: GraphChoice::DirectedPower,
            identity: None,
            format: OutputFormat::Json,
        });
        assert!(execute(&cfg).unwrap_err().0.contains("undirected"));

        let cfg = config(RunCommand::Invariants {
            group: "C1".to_string(),
            graph: GraphChoice::Power,
            identity: Some(IdentityChoice::Exclude),
            format: OutputFormat::Json,
        });
        assert!(execute(&cfg).unwrap_err().0.contains("no vertices"));

        let cfg = config(RunCommand::Verify {
            group: "C4".to_string(),
            theorems: "chain-formula,unknown-thing".to_string(),
            format: OutputFormat::Json,
        });
        assert!(execute(&cfg).unwrap_err().0.contains("unknown theorem"));

        let cfg = config(RunCommand::Verify {
            group: "C4".to_string(),
            theorems: " , ".to_string(),
            format: OutputFormat::Json,
        });
        assert!(execute(&cfg).unwrap_err().0.contains("no theorems selected"));

        let cfg = config(RunCommand::Catalog { max_order: 500, format: OutputFormat::Csv });
        assert!(execute(&cfg).unwrap_err().0.contains("100"));

        let cfg = config(RunCommand::Catalog { max_order: 8, format: OutputFormat::Json });
        assert!(execute(&cfg).unwrap_err().0.contains("csv only"));

        let exclude_prime = config(RunCommand::Build {
            group: "C6".to_string(),
            graph: GraphChoice::Prime,
            identity: Some(IdentityChoice::Exclude),
            format: OutputFormat::Dot,
        });
        assert!(execute(&exclude_prime).unwrap_err().0.contains("does not apply"));
    }

    #[test]
    fn trivial_group_prime_graph_is_rejected() {
        let out = execute(&build_cmd("C1", GraphChoice::Prime, OutputFormat::Dot));
        assert!(out.is_err());
    }
}
