//! Exact graph invariants and the two structural computations that predict
//! them for power graphs (the divisor-chain maximum and the layered
//! comparability colouring).
//!
//! All solvers are exact within documented size limits and fail loudly
//! (`InvariantError::SizeBound`) beyond them, rather than approximating.

mod bits;
mod clique;
mod color;
mod perfect;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::arith;
use crate::graph::Graph;
use crate::group::FiniteGroup;

pub use crate::arith::euler_phi;
pub use perfect::{perfectness_check, PerfectnessParams, PerfectnessVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// The graph is larger than the named solver's exact-search limit.
    #[error("graph with {vertices} vertices exceeds the {solver} solver limit of {limit}")]
    SizeBound { solver: &'static str, vertices: usize, limit: usize },
}

/// Size limits for the exact solvers.
#[derive(Debug, Clone)]
pub struct SolverParams {
    pub clique_limit: usize,
    pub chromatic_limit: usize,
    /// Exact domination is a subset search over machine words, so this is
    /// additionally capped at 64.
    pub domination_limit: usize,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams { clique_limit: 512, chromatic_limit: 128, domination_limit: 64 }
    }
}

/// Clique number with a witness: the lexicographically least maximum
/// clique, as sorted vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: u32,
    pub witness: Vec<u64>,
}

pub fn clique_number(g: &Graph, params: &SolverParams) -> Result<CliqueResult, InvariantError> {
    let (size, witness) = clique::max_clique_with_witness(g, params.clique_limit)?;
    Ok(CliqueResult {
        size: size as u32,
        witness: witness.into_iter().map(|v| g.label(v)).collect(),
    })
}

/// All maximal cliques as sorted label lists, the family sorted.
pub fn maximal_cliques(g: &Graph, params: &SolverParams) -> Result<Vec<Vec<u64>>, InvariantError> {
    let cliques = clique::maximal_cliques(g, params.clique_limit)?;
    Ok(cliques
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.label(v)).collect())
        .collect())
}

pub fn chromatic_number(g: &Graph, params: &SolverParams) -> Result<u32, InvariantError> {
    color::chromatic_number(g, params).map(|k| k as u32)
}

/// Exact `k`-colourability test (used directly by tests that want to see a
/// colouring fail one colour below the chromatic number).
pub fn is_k_colorable(g: &Graph, k: u32, params: &SolverParams) -> Result<bool, InvariantError> {
    color::is_k_colorable(g, k as usize, params)
}

/// Independence number, as the clique number of the complement.
pub fn independence_number(g: &Graph, params: &SolverParams) -> Result<u32, InvariantError> {
    let (size, _) = clique::max_clique_with_witness(&g.complement(), params.clique_limit)?;
    Ok(size as u32)
}

/// A domination value plus whether it is exact. Greedy results are exact
/// only when they hit 1 (a dominating vertex is optimal since the graph is
/// nonempty); otherwise they are upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominationBound {
    pub value: u32,
    pub exact: bool,
}

pub fn domination_number(g: &Graph, params: &SolverParams) -> DominationBound {
    let n = g.vertex_count();
    assert!(n > 0, "domination needs a nonempty graph");
    if n <= params.domination_limit.min(64) {
        DominationBound { value: exact_domination(g), exact: true }
    } else {
        let value = greedy_domination(g);
        DominationBound { value, exact: value == 1 }
    }
}

fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut mask = 1u64 << v;
            for u in 0..n {
                if g.are_adjacent(v, u) {
                    mask |= 1 << u;
                }
            }
            mask
        })
        .collect()
}

fn exact_domination(g: &Graph) -> u32 {
    let n = g.vertex_count();
    let closed = closed_neighborhoods(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut best = greedy_domination(g);
    search_domination(full, 0, &closed, &mut best);
    best
}

fn search_domination(uncovered: u64, size: u32, closed: &[u64], best: &mut u32) {
    if uncovered == 0 {
        *best = (*best).min(size);
        return;
    }
    if size + 1 >= *best {
        return;
    }
    // Branch on the uncovered vertex with the fewest possible dominators;
    // its dominators are exactly its closed neighbourhood.
    let v = (0..closed.len())
        .filter(|&v| uncovered >> v & 1 == 1)
        .min_by_key(|&v| closed[v].count_ones())
        .unwrap();
    for u in 0..closed.len() {
        if closed[v] >> u & 1 == 1 {
            search_domination(uncovered & !closed[u], size + 1, closed, best);
        }
    }
}

fn greedy_domination(g: &Graph) -> u32 {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut uncovered = bits::full(n);
    let mut picks = 0;
    while bits::popcount(&uncovered) > 0 {
        let best_v = (0..n)
            .max_by_key(|&v| {
                let mut gain = if bits::has(&uncovered, v) { 1 } else { 0 };
                gain += bits::and_count(g.row(v), &uncovered);
                (gain, std::cmp::Reverse(v))
            })
            .unwrap();
        let mut covered = g.row(best_v).to_vec();
        covered.truncate(words);
        bits::set_bit(&mut covered, best_v);
        bits::subtract(&mut uncovered, &covered);
        picks += 1;
    }
    picks
}

/// Graph diameter; infinite when disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => serializer.serialize_u32(*d),
            Diameter::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// Diameter and number of connected components, by BFS from every vertex.
pub fn diameter_and_components(g: &Graph) -> (Diameter, u32) {
    let n = g.vertex_count();
    assert!(n > 0, "diameter needs a nonempty graph");
    let mut seen_any = vec![false; n];
    let mut components = 0;
    let mut eccentricity_max = 0u32;
    let mut connected = true;
    for start in 0..n {
        if !seen_any[start] {
            components += 1;
        }
        let mut dist = vec![u32::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            seen_any[v] = true;
            for w in bits::ones(g.row(v)) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            connected = false;
        }
        eccentricity_max =
            eccentricity_max.max(dist.iter().copied().filter(|&d| d != u32::MAX).max().unwrap());
    }
    let diameter = if connected { Diameter::Finite(eccentricity_max) } else { Diameter::Infinite };
    (diameter, components)
}

/// The divisor-chain prediction for the power graph of a group, identity
/// included: the maximum over chains `C` in the divisor lattice of the
/// exponent of `sum(phi(d))` over chain members realised as element orders.
///
/// `value` equals both the clique number and the chromatic number of the
/// power graph; `chain` is the optimal chain with its zero-contribution
/// members dropped. Ties prefer smaller divisors, so the result is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainFormulaResult {
    pub exponent: u64,
    pub value: u64,
    pub chain: Vec<u64>,
}

pub fn power_omega_chi_formula(g: &FiniteGroup) -> ChainFormulaResult {
    let exponent = g.exponent();
    let divisors = arith::divisors(exponent);
    let spectrum: BTreeMap<u64, usize> = g.order_spectrum();
    let weight: Vec<u64> = divisors
        .iter()
        .map(|d| if spectrum.contains_key(d) { arith::euler_phi(*d) } else { 0 })
        .collect();

    // Longest path in the divisibility DAG, weights on vertices. Divisors
    // are ascending, so every proper divisor appears earlier.
    let m = divisors.len();
    let mut best = vec![0u64; m];
    let mut pred: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        let mut above = 0;
        for j in 0..i {
            if divisors[i] % divisors[j] == 0 && best[j] > above {
                above = best[j];
                pred[i] = Some(j);
            }
        }
        best[i] = weight[i] + above;
    }
    let mut top = 0;
    for i in 1..m {
        if best[i] > best[top] {
            top = i;
        }
    }

    let mut chain = Vec::new();
    let mut cursor = Some(top);
    while let Some(i) = cursor {
        if weight[i] > 0 {
            chain.push(divisors[i]);
        }
        cursor = pred[i];
    }
    chain.reverse();
    ChainFormulaResult { exponent, value: best[top], chain }
}

/// A proper colouring of the power graph (identity included) with exactly
/// as many colours as the clique number, built by layering: each element's
/// colour is the length of the longest strictly-ascending path ending at
/// it, where "ascending" means moving to proper powers, and elements
/// generating the same cyclic subgroup are chained in id order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerColoring {
    /// 1-based colour per element id.
    pub colors: Vec<u32>,
    pub color_count: u32,
}

pub fn comparability_coloring(g: &FiniteGroup) -> PowerColoring {
    let n = g.order();
    let members: Vec<Vec<u64>> = (0..n).map(|x| g.cyclic_subgroup(x).bit_words().to_vec()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (g.element_order(x), x));

    let mut longest = vec![0u32; n];
    let mut last_in_class: std::collections::HashMap<&[u64], usize> = std::collections::HashMap::new();
    for &x in &order {
        let mut below = 0;
        for y in bits::ones(&members[x]) {
            // Proper powers of lower order were already processed.
            if g.element_order(y) < g.element_order(x) {
                below = below.max(longest[y]);
            }
        }
        if let Some(&p) = last_in_class.get(members[x].as_slice()) {
            below = below.max(longest[p]);
        }
        longest[x] = below + 1;
        last_in_class.insert(members[x].as_slice(), x);
    }
    let color_count = longest.iter().copied().max().unwrap();
    PowerColoring { colors: longest, color_count }
}

/// Everything the CLI reports about one graph.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub clique_number: u32,
    pub clique_witness: Vec<u64>,
    pub chromatic_number: u32,
    pub independence_number: u32,
    pub domination: DominationBound,
    pub diameter: Diameter,
    pub components: u32,
    pub perfectness: PerfectnessVerdict,
}

pub fn invariant_report(
    g: &Graph,
    solver: &SolverParams,
    perfectness: &PerfectnessParams,
) -> Result<InvariantReport, InvariantError> {
    let chromatic = chromatic_number(g, solver)?;
    invariant_report_with_chromatic(g, solver, perfectness, chromatic)
}

/// Like [`invariant_report`] but with the chromatic number supplied by the
/// caller, for graphs whose structure admits an exact colouring that the
/// general solver would refuse on size (power graphs and
/// [`comparability_coloring`]).
pub fn invariant_report_with_chromatic(
    g: &Graph,
    solver: &SolverParams,
    perfectness: &PerfectnessParams,
    chromatic_number: u32,
) -> Result<InvariantReport, InvariantError> {
    let clique = clique_number(g, solver)?;
    let independence = independence_number(g, solver)?;
    let domination = domination_number(g, solver);
    let (diameter, components) = diameter_and_components(g);
    let verdict = perfectness_check(g, perfectness, solver)?;
    Ok(InvariantReport {
        clique_number: clique.size,
        clique_witness: clique.witness,
        chromatic_number,
        independence_number: independence,
        domination,
        diameter,
        components,
        perfectness: verdict,
    })
}
