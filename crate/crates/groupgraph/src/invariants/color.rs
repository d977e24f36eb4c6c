//! Exact graph colouring: branch and bound between a clique lower bound
//! and a greedy upper bound.

use crate::graph::Graph;

use super::{clique, InvariantError};

/// Greedy colouring in descending-degree order; returns the colour count.
fn greedy_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut used = 0;
    for &v in &order {
        let mut taken = vec![false; used + 1];
        for w in 0..n {
            if g.are_adjacent(v, w) {
                if let Some(c) = colors[w] {
                    taken[c] = true;
                }
            }
        }
        let c = (0..).find(|&c| c >= taken.len() || !taken[c]).unwrap();
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

/// Can `g` be properly coloured with at most `k` colours? Exact search:
/// a maximum clique is pre-coloured (any `k`-colouring assigns it distinct
/// colours, up to renaming), remaining vertices are tried in descending
/// degree order, and a fresh colour is only opened one past the highest
/// colour used so far.
pub fn is_k_colorable(g: &Graph, k: usize, params: &super::SolverParams) -> Result<bool, InvariantError> {
    let n = g.vertex_count();
    assert!(n > 0, "colouring needs a nonempty graph");
    if n > params.chromatic_limit {
        return Err(InvariantError::SizeBound {
            solver: "chromatic",
            vertices: n,
            limit: params.chromatic_limit,
        });
    }
    if k >= n {
        return Ok(true);
    }
    let seed = clique::some_maximum_clique(g);
    if seed.len() > k {
        return Ok(false);
    }
    let mut colors: Vec<Option<u8>> = vec![None; n];
    for (c, &v) in seed.iter().enumerate() {
        colors[v] = Some(c as u8);
    }
    let mut rest: Vec<usize> = (0..n).filter(|v| colors[*v].is_none()).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = colors;
    Ok(color_rest(g, &rest, 0, &mut colors, seed.len() as u8, k as u8))
}

fn color_rest(
    g: &Graph,
    rest: &[usize],
    i: usize,
    colors: &mut Vec<Option<u8>>,
    used: u8,
    k: u8,
) -> bool {
    let Some(&v) = rest.get(i) else {
        return true;
    };
    let mut taken = 0u128;
    for (w, c) in colors.iter().enumerate() {
        if let Some(c) = c {
            if g.are_adjacent(v, w) {
                taken |= 1 << c;
            }
        }
    }
    // Colours above `used` are interchangeable; trying just one avoids
    // revisiting the same partition under a different labelling.
    let highest = used.min(k - 1);
    for c in 0..=highest {
        if taken >> c & 1 == 0 {
            colors[v] = Some(c);
            if color_rest(g, rest, i + 1, colors, used.max(c + 1), k) {
                return true;
            }
            colors[v] = None;
        }
    }
    false
}

/// Exact chromatic number.
pub(super) fn chromatic_number(g: &Graph, params: &super::SolverParams) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    assert!(n > 0, "colouring needs a nonempty graph");
    if n > params.chromatic_limit {
        return Err(InvariantError::SizeBound {
            solver: "chromatic",
            vertices: n,
            limit: params.chromatic_limit,
        });
    }
    let lower = clique::max_clique_size(g);
    let upper = greedy_bound(g);
    debug_assert!(lower <= upper);
    for k in lower..upper {
        if is_k_colorable(g, k, params)? {
            return Ok(k);
        }
    }
    Ok(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, GraphKind, IdentityPolicy};
    use crate::invariants::SolverParams;

    fn graph_from(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(
            GraphKind::Difference,
            IdentityPolicy::Include,
            (0..n as u64).collect(),
        );
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    // Oracle: smallest k admitting any proper colouring, tried by plain
    // recursion with no pruning at all.
    fn chromatic_oracle(g: &Graph) -> usize {
        fn try_color(g: &Graph, v: usize, k: usize, colors: &mut Vec<usize>) -> bool {
            if v == g.vertex_count() {
                return true;
            }
            for c in 0..k {
                if (0..v).all(|w| !g.are_adjacent(v, w) || colors[w] != c) {
                    colors[v] = c;
                    if try_color(g, v + 1, k, colors) {
                        return true;
                    }
                }
            }
            false
        }
        (1..)
            .find(|&k| try_color(g, 0, k, &mut vec![0; g.vertex_count()]))
            .unwrap()
    }

    #[test]
    fn coloring_fixtures() {
        let params = SolverParams::default();
        let c5 = graph_from(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(chromatic_number(&c5, &params).unwrap(), 3);
        assert!(!is_k_colorable(&c5, 2, &params).unwrap());
        assert!(is_k_colorable(&c5, 3, &params).unwrap());

        let k4 = graph_from(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(chromatic_number(&k4, &params).unwrap(), 4);

        let edgeless = graph_from(6, &[]);
        assert_eq!(chromatic_number(&edgeless, &params).unwrap(), 1);

        // Petersen graph: chromatic number 3.
        let petersen = graph_from(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        assert_eq!(chromatic_number(&petersen, &params).unwrap(), 3);
    }

    #[test]
    fn coloring_matches_oracle_on_random_graphs() {
        let params = SolverParams::default();
        let mut state = 0x9E3779B97F4A7C15u64;
        for n in 1..=9usize {
            for _ in 0..25 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 3 == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = graph_from(n, &edges);
                assert_eq!(
                    chromatic_number(&g, &params).unwrap(),
                    chromatic_oracle(&g),
                    "n = {n}, edges = {edges:?}"
                );
            }
        }
    }

    #[test]
    fn size_bound_is_loud() {
        let params = SolverParams { chromatic_limit: 4, ..SolverParams::default() };
        let g = graph_from(5, &[(0, 1)]);
        assert!(matches!(
            chromatic_number(&g, &params),
            Err(InvariantError::SizeBound { solver: "chromatic", vertices: 5, limit: 4 })
        ));
    }
}
