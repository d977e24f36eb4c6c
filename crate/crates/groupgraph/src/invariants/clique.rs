//! Exact maximum-clique search and maximal-clique enumeration.

use crate::graph::Graph;

use super::bits::{and, and_count, clear_bit, full, ones, popcount, restrict_above, set_bit, subtract};
use super::InvariantError;

/// Maximum clique size, by branch and bound with a greedy-colouring bound:
/// a proper colouring of the candidate set with `k` colours caps every
/// clique inside it at `k`, which prunes dense near-multipartite graphs
/// (complements of power graphs, say) that a plain size bound never cuts.
pub(super) fn max_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    extend_max(g, full(g.vertex_count()), 0, &mut best);
    best
}

/// Vertices of `p` with 1-based greedy colours, in nondecreasing colour
/// order. The last colour bounds the largest clique within `p`.
fn color_sort(g: &Graph, p: &[u64]) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(popcount(p));
    let mut uncolored = p.to_vec();
    let mut color = 0;
    while popcount(&uncolored) > 0 {
        color += 1;
        let mut allowed = uncolored.clone();
        loop {
            let next = ones(&allowed).next();
            let Some(v) = next else { break };
            order.push((v, color));
            clear_bit(&mut uncolored, v);
            clear_bit(&mut allowed, v);
            subtract(&mut allowed, g.row(v));
        }
    }
    order
}

fn extend_max(g: &Graph, mut p: Vec<u64>, depth: usize, best: &mut usize) {
    if popcount(&p) == 0 {
        *best = (*best).max(depth);
        return;
    }
    // Branch from the highest colour down; colours only shrink towards the
    // front, so the first branch under the bound ends the whole level.
    let order = color_sort(g, &p);
    for &(v, color) in order.iter().rev() {
        if depth + color <= *best {
            return;
        }
        extend_max(g, and(&p, g.row(v)), depth + 1, best);
        clear_bit(&mut p, v);
    }
}

/// Is there a clique of size `t` inside the candidate set `p`?
fn has_clique(g: &Graph, p: &[u64], t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let mut rest = p.to_vec();
    for &(v, color) in color_sort(g, p).iter().rev() {
        if color < t {
            return false;
        }
        if has_clique(g, &and(&rest, g.row(v)), t - 1) {
            return true;
        }
        clear_bit(&mut rest, v);
    }
    false
}

/// Maximum clique size together with its lexicographically least witness,
/// as sorted vertex indices.
pub(super) fn max_clique_with_witness(
    g: &Graph,
    limit: usize,
) -> Result<(usize, Vec<usize>), InvariantError> {
    let n = g.vertex_count();
    assert!(n > 0, "clique search needs a nonempty graph");
    if n > limit {
        return Err(InvariantError::SizeBound { solver: "clique", vertices: n, limit });
    }
    let size = max_clique_size(g);
    // The sorted witness (v1 < v2 < ...) is minimised coordinate by
    // coordinate: each step takes the least vertex that still leaves a
    // large enough clique among the later candidates adjacent to it.
    let mut witness = Vec::with_capacity(size);
    let mut p = full(n);
    for need in (1..=size).rev() {
        let v = ones(&p)
            .find(|&v| {
                let mut rest = and(&p, g.row(v));
                restrict_above(&mut rest, v);
                has_clique(g, &rest, need - 1)
            })
            .expect("witness reconstruction must succeed at the known clique size");
        witness.push(v);
        p = and(&p, g.row(v));
        restrict_above(&mut p, v);
    }
    Ok((size, witness))
}

/// A maximum clique without the lexicographic guarantee; cheaper seed for
/// the colouring solver.
pub(super) fn some_maximum_clique(g: &Graph) -> Vec<usize> {
    let size = max_clique_size(g);
    let mut clique = Vec::with_capacity(size);
    let mut p = full(g.vertex_count());
    for need in (1..=size).rev() {
        let v = ones(&p)
            .find(|&v| has_clique(g, &and(&p, g.row(v)), need - 1))
            .expect("maximum clique reconstruction");
        clique.push(v);
        p = and(&p, g.row(v));
        clear_bit(&mut p, v);
    }
    clique
}

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the
/// family sorted lexicographically.
pub(super) fn maximal_cliques(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>, InvariantError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(InvariantError::SizeBound { solver: "clique", vertices: n, limit });
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, full(n), vec![0; n.div_ceil(64)], &mut out);
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if popcount(&p) == 0 {
        if popcount(&x) == 0 && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = ones(&p)
        .chain(ones(&x))
        .max_by_key(|&u| and_count(&p, g.row(u)))
        .unwrap();
    let mut branches = p.clone();
    subtract(&mut branches, g.row(pivot));
    for v in ones(&branches).collect::<Vec<_>>() {
        r.push(v);
        bron_kerbosch(g, r, and(&p, g.row(v)), and(&x, g.row(v)), out);
        r.pop();
        clear_bit(&mut p, v);
        set_bit(&mut x, v);
    }
}
