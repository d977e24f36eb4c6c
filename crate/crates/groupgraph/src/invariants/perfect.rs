//! Perfectness probing: bounded induced odd-hole search plus sampled
//! chi-equals-omega spot checks.
//!
//! This is a probe, not a decision procedure. A clean pass means "no
//! induced odd cycle of length 5..=max_hole_length in the graph or its
//! complement, and chi = omega on every sampled induced subgraph"; the
//! verdict records those parameters. Any hit is returned as a concrete,
//! re-checkable counterexample.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::Graph;

use super::bits::{and, ones, restrict_above, set_bit, subtract};
use super::{clique, color, InvariantError, SolverParams};

/// Probe effort knobs. The defaults match the acceptance checks: odd holes
/// through length 9, 200 samples of at most 12 vertices, a fixed seed.
#[derive(Debug, Clone)]
pub struct PerfectnessParams {
    pub max_hole_length: usize,
    pub samples: u32,
    pub max_sample_size: usize,
    pub seed: u64,
}

impl Default for PerfectnessParams {
    fn default() -> Self {
        PerfectnessParams { max_hole_length: 9, samples: 200, max_sample_size: 12, seed: 0x67726772_u64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PerfectnessVerdict {
    /// No violation found at the recorded probe strength.
    PerfectSampled { max_hole_length: usize, samples: u32 },
    /// An induced odd cycle (in the graph, or its complement), listed in
    /// cycle order by vertex label.
    OddHole { in_complement: bool, cycle: Vec<u64> },
    /// A sampled induced subgraph with distinct clique and chromatic
    /// numbers; vertices by label.
    ChiOmegaMismatch { vertices: Vec<u64>, clique_number: u32, chromatic_number: u32 },
}

impl PerfectnessVerdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, PerfectnessVerdict::PerfectSampled { .. })
    }
}

/// Least induced odd cycle of length `5..=max_len` (first by length, then
/// lexicographically), as vertex indices in cycle order.
pub(super) fn find_odd_hole(g: &Graph, max_len: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut k = 5;
    while k <= max_len {
        for v0 in 0..n {
            let mut path = vec![v0];
            // Vertices <= v0 are excluded outright so each hole is found
            // from its least vertex only.
            let mut used = vec![0u64; n.div_ceil(64)];
            for v in 0..=v0 {
                set_bit(&mut used, v);
            }
            if extend_hole(g, k, &mut path, &vec![0u64; n.div_ceil(64)], &used) {
                return Some(path);
            }
        }
        k += 2;
    }
    None
}

// Depth-first search for an induced k-cycle v0 - v1 - ... - v_{k-1} - v0.
// When choosing the vertex for position L, `mid_forbidden` is the union of
// the neighbourhoods of v1 .. v_{L-2} (chord exclusion) and `used` holds
// the path vertices plus everything <= v0.
fn extend_hole(g: &Graph, k: usize, path: &mut Vec<usize>, mid_forbidden: &[u64], used: &[u64]) -> bool {
    let len = path.len();
    let v0 = path[0];
    let last = path[len - 1];

    if len == k - 1 {
        // Closing vertex: adjacent to both ends, no chords, and larger
        // than v1 to kill the reversed traversal of the same cycle.
        let mut candidates = and(g.row(last), g.row(v0));
        subtract(&mut candidates, mid_forbidden);
        subtract(&mut candidates, used);
        restrict_above(&mut candidates, path[1]);
        if let Some(v) = ones(&candidates).next() {
            path.push(v);
            return true;
        }
        return false;
    }

    let mut candidates = g.row(last).to_vec();
    subtract(&mut candidates, used);
    subtract(&mut candidates, mid_forbidden);
    if len >= 2 {
        // Middle vertices must avoid v0's neighbourhood (no chord to v0);
        // v1 is the unique exception: it has to touch v0.
        subtract(&mut candidates, g.row(v0));
    }

    // Once a successor exists, `last` is an interior vertex, so from the
    // *next* position onwards its neighbourhood is chord territory.
    let mut next_mid = mid_forbidden.to_vec();
    if len >= 2 {
        for (w, r) in next_mid.iter_mut().zip(g.row(last)) {
            *w |= r;
        }
    }

    for v in ones(&candidates).collect::<Vec<_>>() {
        let mut next_used = used.to_vec();
        set_bit(&mut next_used, v);
        path.push(v);
        if extend_hole(g, k, path, &next_mid, &next_used) {
            return true;
        }
        path.pop();
    }
    false
}

/// Runs the odd-hole search on the graph and its complement, then samples
/// random induced subgraphs checking chi = omega exactly.
pub fn perfectness_check(
    g: &Graph,
    params: &PerfectnessParams,
    solver: &SolverParams,
) -> Result<PerfectnessVerdict, InvariantError> {
    assert!(g.vertex_count() > 0, "perfectness probe needs a nonempty graph");
    if let Some(cycle) = find_odd_hole(g, params.max_hole_length) {
        return Ok(PerfectnessVerdict::OddHole {
            in_complement: false,
            cycle: cycle.into_iter().map(|v| g.label(v)).collect(),
        });
    }
    if let Some(cycle) = find_odd_hole(&g.complement(), params.max_hole_length) {
        return Ok(PerfectnessVerdict::OddHole {
            in_complement: true,
            cycle: cycle.into_iter().map(|v| g.label(v)).collect(),
        });
    }

    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.samples {
        let size = rand::Rng::random_range(&mut rng, 1..=params.max_sample_size.min(n));
        let mut picked: Vec<usize> =
            rand::seq::index::sample(&mut rng, n, size).into_iter().collect();
        picked.sort_unstable();
        let sub = g.induced(&picked);
        let omega = clique::max_clique_size(&sub);
        let chi = color::chromatic_number(&sub, solver)?;
        if omega != chi {
            return Ok(PerfectnessVerdict::ChiOmegaMismatch {
                vertices: picked.into_iter().map(|v| g.label(v)).collect(),
                clique_number: omega as u32,
                chromatic_number: chi as u32,
            });
        }
    }
    Ok(PerfectnessVerdict::PerfectSampled {
        max_hole_length: params.max_hole_length,
        samples: params.samples,
    })
}
