//! Graphs built from a finite group.
//!
//! All graphs are simple (no self-loops). Vertices carry numeric labels:
//! element ids for the group graphs, primes for the prime graph. Labels are
//! strictly increasing in vertex index, so index order and label order agree
//! and every edge listing is deterministic.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Two graphs being compared do not share a vertex label set.
    #[error("graphs are over different vertex sets")]
    VertexMismatch,
    /// The trivial group has no prime divisors, hence no prime graph.
    #[error("the trivial group has no prime graph")]
    TrivialGroup,
}

/// What a [`Graph`]'s edges mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// x ~ y when one is a power of the other.
    Power,
    /// x ~ y when both are powers of a common element.
    Enhanced,
    /// x ~ y when xy = yx.
    Commuting,
    /// p ~ q when some element has order divisible by pq.
    Prime,
    /// Edges of one graph minus those of another.
    Difference,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Enhanced => "enhanced",
            GraphKind::Commuting => "commuting",
            GraphKind::Prime => "prime",
            GraphKind::Difference => "difference",
        }
    }
}

/// The three group graphs that [`build_graph`] constructs directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildKind {
    Power,
    Enhanced,
    Commuting,
}

impl From<BuildKind> for GraphKind {
    fn from(k: BuildKind) -> GraphKind {
        match k {
            BuildKind::Power => GraphKind::Power,
            BuildKind::Enhanced => GraphKind::Enhanced,
            BuildKind::Commuting => GraphKind::Commuting,
        }
    }
}

/// Whether the identity element appears as a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityPolicy {
    Include,
    Exclude,
}

/// An undirected simple graph with labelled vertices, adjacency stored as
/// one bitset row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    identity_policy: IdentityPolicy,
    labels: Vec<u64>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// An edgeless graph over `labels`, which must be strictly increasing.
    pub fn new(kind: GraphKind, identity_policy: IdentityPolicy, labels: Vec<u64>) -> Graph {
        assert!(labels.windows(2).all(|w| w[0] < w[1]), "vertex labels must be increasing");
        let n = labels.len();
        let words = n.div_ceil(64);
        Graph { kind, identity_policy, labels, words, bits: vec![0; n * words] }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn identity_policy(&self) -> IdentityPolicy {
        self.identity_policy
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Adds the undirected edge between vertex indices `u != v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency bitset row of vertex `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.vertex_count()).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// All edges as label pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.vertex_count();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            for v in u + 1..n {
                if self.are_adjacent(u, v) {
                    out.push((self.labels[u], self.labels[v]));
                }
            }
        }
        out
    }

    /// Complement on the same vertices (still with no self-loops).
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(self.kind, self.identity_policy, self.labels.clone());
        for u in 0..n {
            for v in u + 1..n {
                if !self.are_adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on the given vertex indices (strictly increasing).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        let mut g = Graph::new(self.kind, self.identity_policy, labels);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.are_adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Is some triple of vertices pairwise adjacent? Returns the first
    /// triangle in index order.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        let n = self.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if !self.are_adjacent(u, v) {
                    continue;
                }
                for w in v + 1..n {
                    if self.are_adjacent(u, w) && self.are_adjacent(v, w) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }
}

/// Result of [`graphs_equal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphComparison {
    Equal,
    /// The least label pair (in lexicographic order) adjacent in exactly
    /// one of the graphs; `in_first` says which.
    Unequal { u: u64, v: u64, in_first: bool },
}

impl GraphComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, GraphComparison::Equal)
    }
}

/// Builds the power, enhanced power, or commuting graph of `g`.
pub fn build_graph(g: &FiniteGroup, kind: BuildKind, policy: IdentityPolicy) -> Graph {
    let n = g.order();
    let offset = match policy {
        IdentityPolicy::Include => 0,
        IdentityPolicy::Exclude => 1,
    };
    let labels: Vec<u64> = (offset..n).map(|x| x as u64).collect();
    let mut graph = Graph::new(kind.into(), policy, labels);
    match kind {
        BuildKind::Power => {
            let members: Vec<Vec<u64>> =
                (0..n).map(|x| g.cyclic_subgroup(x).bit_words().to_vec()).collect();
            let bit = |set: &[u64], x: usize| set[x / 64] >> (x % 64) & 1 == 1;
            for x in offset..n {
                for y in x + 1..n {
                    if bit(&members[x], y) || bit(&members[y], x) {
                        graph.add_edge(x - offset, y - offset);
                    }
                }
            }
        }
        BuildKind::Enhanced => {
            // x ~ y iff both lie in some cyclic subgroup, so clique-mark
            // each distinct <z> once.
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            for z in 0..n {
                let set = g.cyclic_subgroup(z);
                if seen.insert(set.bit_words().to_vec()) {
                    let members: Vec<usize> = set.iter().filter(|&x| x >= offset).collect();
                    for (i, &x) in members.iter().enumerate() {
                        for &y in &members[i + 1..] {
                            graph.add_edge(x - offset, y - offset);
                        }
                    }
                }
            }
        }
        BuildKind::Commuting => {
            for x in offset..n {
                for y in x + 1..n {
                    if g.commutes(x, y) {
                        graph.add_edge(x - offset, y - offset);
                    }
                }
            }
        }
    }
    graph
}

/// The directed power graph: arc `(u, v)` present exactly when `u` is a
/// power of `v` and `u != v`. Always over all elements of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPowerGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DirectedPowerGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Is `u` a (proper) power vertex of `v`, i.e. is the arc `u -> v` present?
    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// All arcs `(u, v)`, sorted.
    pub fn arcs(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.arc(u, v) {
                    out.push((u as u64, v as u64));
                }
            }
        }
        out
    }
}

pub fn directed_power_graph(g: &FiniteGroup) -> DirectedPowerGraph {
    let n = g.order();
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    for v in 0..n {
        for u in g.cyclic_subgroup(v).iter() {
            if u != v {
                bits[u * words + v / 64] |= 1 << (v % 64);
            }
        }
    }
    DirectedPowerGraph { n, words, bits }
}

/// Rebuilds the enhanced power graph from the directed power graph alone:
/// x ~ y exactly when some z has arcs (or equality) from both x and y.
pub fn enhanced_from_directed(d: &DirectedPowerGraph) -> Graph {
    let n = d.vertex_count();
    let labels: Vec<u64> = (0..n as u64).collect();
    let mut graph = Graph::new(GraphKind::Enhanced, IdentityPolicy::Include, labels);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for z in 0..n {
        let mut dominated: Vec<usize> = (0..n).filter(|&x| x == z || d.arc(x, z)).collect();
        dominated.sort_unstable();
        if seen.insert(dominated.clone()) {
            for (i, &x) in dominated.iter().enumerate() {
                for &y in &dominated[i + 1..] {
                    graph.add_edge(x, y);
                }
            }
        }
    }
    graph
}

/// The prime graph (Gruenberg-Kegel graph) of `g`: vertices are the primes
/// dividing `|G|`, with `p ~ q` when some element has order divisible by `pq`.
pub fn prime_graph(g: &FiniteGroup) -> Result<Graph, GraphError> {
    if g.order() == 1 {
        return Err(GraphError::TrivialGroup);
    }
    let primes = crate::arith::prime_divisors(g.order() as u64);
    let spectrum = g.order_spectrum();
    let mut graph = Graph::new(GraphKind::Prime, IdentityPolicy::Include, primes.clone());
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let pq = primes[i] * primes[j];
            if spectrum.keys().any(|&o| o % pq == 0) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

/// Edges of `a` that are not edges of `b`, over the same vertex set.
pub fn difference_graph(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    if a.labels() != b.labels() {
        return Err(GraphError::VertexMismatch);
    }
    let mut out = Graph::new(GraphKind::Difference, a.identity_policy(), a.labels().to_vec());
    let n = a.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if a.are_adjacent(u, v) && !b.are_adjacent(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    Ok(out)
}

/// Edge-set equality over a shared vertex set, with a least witness pair
/// when the graphs differ.
pub fn graphs_equal(a: &Graph, b: &Graph) -> Result<GraphComparison, GraphError> {
    if a.labels() != b.labels() {
        return Err(GraphError::VertexMismatch);
    }
    let n = a.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let (in_a, in_b) = (a.are_adjacent(u, v), b.are_adjacent(u, v));
            if in_a != in_b {
                return Ok(GraphComparison::Unequal {
                    u: a.label(u),
                    v: a.label(v),
                    in_first: in_a,
                });
            }
        }
    }
    Ok(GraphComparison::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use crate::group::{build_group, GroupSpec};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn group(spec: GroupSpec) -> FiniteGroup {
        build_group(&spec).expect("spec should build")
    }

    // Modular-arithmetic oracle for the power graph of C_n, independent of
    // the group machinery: x ~ y iff one lies in the additive cycle of the
    // other.
    fn cyclic_power_edges(n: u64, include_identity: bool) -> BTreeSet<(u64, u64)> {
        let start = u64::from(!include_identity);
        let powers = |x: u64| -> BTreeSet<u64> {
            let mut seen = BTreeSet::new();
            let mut acc = 0;
            loop {
                acc = (acc + x) % n;
                if !seen.insert(acc) {
                    break;
                }
            }
            seen
        };
        let mut edges = BTreeSet::new();
        for x in start..n {
            for y in x + 1..n {
                if powers(x).contains(&y) || powers(y).contains(&x) {
                    edges.insert((x, y));
                }
            }
        }
        edges
    }

    #[test]
    fn power_graph_of_c6_matches_modular_oracle() {
        let g = group(GroupSpec::Cyclic(6));
        let got: BTreeSet<(u64, u64)> = build_graph(&g, BuildKind::Power, IdentityPolicy::Include)
            .edges()
            .into_iter()
            .collect();
        assert_eq!(got, cyclic_power_edges(6, true));
        // 2 and 3 generate different prime-order subgroups: not adjacent.
        let graph = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
        assert!(!graph.are_adjacent(2, 3));
        assert!(graph.are_adjacent(1, 5));
        assert!(graph.are_adjacent(0, 3));
    }

    #[test]
    fn enhanced_graph_of_cyclic_groups_is_complete() {
        for n in [2u64, 6, 12] {
            let g = group(GroupSpec::Cyclic(n));
            let e = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
            let size = n as usize;
            assert_eq!(e.edge_count(), size * (size - 1) / 2, "enhanced C{n}");
        }
        // In particular 2 ~ 3 in C6 even though no power relation holds.
        let g = group(GroupSpec::Cyclic(6));
        let e = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
        assert!(e.are_adjacent(2, 3));
    }

    #[test]
    fn commuting_graph_matches_direct_check() {
        let g = group(GroupSpec::Symmetric(3));
        let c = build_graph(&g, BuildKind::Commuting, IdentityPolicy::Include);
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u != v {
                    assert_eq!(c.are_adjacent(u, v), g.commutes(u, v));
                }
            }
        }
    }

    #[test]
    fn excluding_identity_drops_vertex_zero() {
        let g = group(GroupSpec::Dihedral(8));
        for kind in [BuildKind::Power, BuildKind::Enhanced, BuildKind::Commuting] {
            let whole = build_graph(&g, kind, IdentityPolicy::Include);
            let pruned = build_graph(&g, kind, IdentityPolicy::Exclude);
            assert_eq!(pruned.labels(), &(1..8).collect::<Vec<u64>>()[..]);
            let expected: Vec<(u64, u64)> =
                whole.edges().into_iter().filter(|&(a, _)| a != 0).collect();
            assert_eq!(pruned.edges(), expected);
        }
    }

    #[test]
    fn power_enhanced_commuting_form_a_chain() {
        for spec in [
            GroupSpec::Symmetric(4),
            GroupSpec::Dihedral(12),
            GroupSpec::GeneralizedQuaternion(8),
            GroupSpec::SemidirectCyclic { p: 7, a: 1, q: 3, b: 1 },
        ] {
            let g = group(spec);
            let p = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
            let e = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
            let c = build_graph(&g, BuildKind::Commuting, IdentityPolicy::Include);
            for u in 0..g.order() {
                for v in u + 1..g.order() {
                    assert!(!p.are_adjacent(u, v) || e.are_adjacent(u, v));
                    assert!(!e.are_adjacent(u, v) || c.are_adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn directed_arcs_of_c4() {
        let g = group(GroupSpec::Cyclic(4));
        let d = directed_power_graph(&g);
        assert_eq!(
            d.arcs(),
            vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 1), (2, 3), (3, 1)]
        );
        assert!(d.arc(2, 1), "2 = 1 + 1 is a power of 1");
        assert!(!d.arc(1, 2), "1 is not a multiple of 2 mod 4");
    }

    #[test]
    fn enhanced_graph_is_recoverable_from_directed_arcs() {
        for spec in [
            GroupSpec::Symmetric(3),
            GroupSpec::Dihedral(8),
            GroupSpec::Cyclic(12),
            GroupSpec::Alternating(4),
            GroupSpec::GeneralizedQuaternion(8),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)]),
        ] {
            let g = group(spec);
            let direct = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
            let rebuilt = enhanced_from_directed(&directed_power_graph(&g));
            assert_eq!(graphs_equal(&direct, &rebuilt), Ok(GraphComparison::Equal), "{}", g.label());
        }
    }

    #[test]
    fn prime_graphs() {
        let s3 = prime_graph(&group(GroupSpec::Symmetric(3))).unwrap();
        assert_eq!(s3.labels(), &[2, 3]);
        assert_eq!(s3.edge_count(), 0); // no element of order 6

        let c6 = prime_graph(&group(GroupSpec::Cyclic(6))).unwrap();
        assert_eq!(c6.edges(), vec![(2, 3)]);

        let a5 = prime_graph(&group(GroupSpec::Alternating(5))).unwrap();
        assert_eq!(a5.labels(), &[2, 3, 5]);
        assert_eq!(a5.edge_count(), 0);

        let c30 = prime_graph(&group(GroupSpec::Cyclic(30))).unwrap();
        assert_eq!(c30.edges(), vec![(2, 3), (2, 5), (3, 5)]);

        assert_eq!(prime_graph(&group(GroupSpec::Cyclic(1))), Err(GraphError::TrivialGroup));
    }

    #[test]
    fn difference_and_equality_witnesses() {
        let g = group(GroupSpec::Cyclic(6));
        let p = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
        let c = build_graph(&g, BuildKind::Commuting, IdentityPolicy::Include);
        let diff = difference_graph(&c, &p).unwrap();
        assert!(diff.are_adjacent(2, 3));
        assert_eq!(diff.edge_count(), c.edge_count() - p.edge_count());
        assert_eq!(
            graphs_equal(&c, &p),
            Ok(GraphComparison::Unequal { u: 2, v: 3, in_first: true })
        );

        let q8 = group(GroupSpec::GeneralizedQuaternion(8));
        let qp = build_graph(&q8, BuildKind::Power, IdentityPolicy::Include);
        let qc = build_graph(&q8, BuildKind::Commuting, IdentityPolicy::Include);
        assert_eq!(graphs_equal(&qp, &qc), Ok(GraphComparison::Equal));

        let px = build_graph(&g, BuildKind::Power, IdentityPolicy::Exclude);
        assert_eq!(graphs_equal(&p, &px), Err(GraphError::VertexMismatch));
    }

    // An enhanced edge means a common cyclic home, so in the power graph the
    // two endpoints are within distance two of each other via that generator.
    #[test]
    fn enhanced_edges_are_power_graph_squares() {
        for spec in [
            GroupSpec::Symmetric(4),
            GroupSpec::Dihedral(12),
            GroupSpec::GeneralizedQuaternion(12),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(6)]),
        ] {
            let g = group(spec);
            let p = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
            let e = build_graph(&g, BuildKind::Enhanced, IdentityPolicy::Include);
            let n = g.order();
            for u in 0..n {
                for v in u + 1..n {
                    if !e.are_adjacent(u, v) {
                        continue;
                    }
                    let near = p.are_adjacent(u, v)
                        || (0..n).any(|w| {
                            w != u && w != v && p.are_adjacent(u, w) && p.are_adjacent(w, v)
                        });
                    assert!(near, "{}: enhanced edge {u} ~ {v}", g.label());
                }
            }
        }
    }

    #[test]
    fn no_self_loops_and_degrees_balance() {
        let g = group(GroupSpec::Alternating(4));
        for kind in [BuildKind::Power, BuildKind::Enhanced, BuildKind::Commuting] {
            let graph = build_graph(&g, kind, IdentityPolicy::Include);
            for v in 0..graph.vertex_count() {
                assert!(!graph.are_adjacent(v, v));
            }
            let degree_sum: usize = (0..graph.vertex_count()).map(|v| graph.degree(v)).sum();
            assert_eq!(degree_sum, 2 * graph.edge_count());
        }
    }

    proptest! {
        // Classical fact: the power graph of C_n is complete iff n is 1 or
        // a prime power.
        #[test]
        fn cyclic_power_graph_complete_iff_prime_power(n in 2u64..=48) {
            let g = group(GroupSpec::Cyclic(n));
            let p = build_graph(&g, BuildKind::Power, IdentityPolicy::Include);
            let complete = p.edge_count() == (n * (n - 1) / 2) as usize;
            prop_assert_eq!(complete, arith::prime_power(n).is_some());
        }

        #[test]
        fn power_graph_matches_modular_oracle(n in 2u64..=30) {
            let g = group(GroupSpec::Cyclic(n));
            let p = build_graph(&g, BuildKind::Power, IdentityPolicy::Exclude);
            let got: BTreeSet<(u64, u64)> = p.edges().into_iter().collect();
            prop_assert_eq!(got, cyclic_power_edges(n, false));
        }
    }
}
