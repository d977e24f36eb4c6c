#!/usr/bin/env python3
"""Smoke test for the groupgraph Python extension.

Expects the bindings to be built first:

    cargo build -p groupgraph-py --release

The script copies the shared object next to a temp directory under the
importable name `groupgraph.so`, imports it, and exercises the API.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def locate_library() -> Path:
    root = Path(__file__).resolve().parents[1]
    candidates = [
        root / "target" / profile / "libgroupgraph_py.so"
        for profile in ("release", "debug")
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    sys.exit("bindings not built; run: cargo build -p groupgraph-py --release")


def expect_value_error(fn) -> None:
    try:
        fn()
    except ValueError:
        return
    raise AssertionError(f"{fn} should have raised ValueError")


def main() -> None:
    staging = tempfile.mkdtemp(prefix="groupgraph-smoke-")
    shutil.copy2(locate_library(), Path(staging) / "groupgraph.so")
    sys.path.insert(0, staging)
    import groupgraph

    # Group construction and element arithmetic.
    s4 = groupgraph.Group("S4")
    assert s4.label == "S4" and s4.order == 24 and s4.exponent == 12
    assert len(s4) == 24 and s4.identity == 0
    assert s4.order_spectrum() == {1: 1, 2: 9, 3: 8, 4: 6}
    x = 7
    assert s4.mul(x, s4.inverse(x)) == s4.identity
    assert s4.power(x, s4.element_order(x)) == s4.identity
    assert not all(s4.commutes(a, b) for a in range(24) for b in range(24))
    assert s4.center() == [0]

    # Graphs, adjacency by label, identity policy.
    c12 = groupgraph.Group("C12")
    power = c12.graph("power")
    assert power.kind == "power" and power.includes_identity
    assert power.vertex_count == 12
    assert power.are_adjacent(2, 4) and not power.are_adjacent(2, 3)
    assert power.degree(0) == 11
    trimmed = c12.graph("power", include_identity=False)
    assert trimmed.vertex_count == 11 and 0 not in trimmed.labels()

    # Invariants agree with the divisor-chain prediction.
    chain = c12.chain_formula()
    assert chain["value"] == 9 and chain["exponent"] == 12
    inv = power.invariants()
    assert inv["clique_number"] == inv["chromatic_number"] == 9
    assert inv["domination"] == {"value": 1, "exact": True}
    assert inv["diameter"] == 2 and inv["components"] == 1
    assert inv["perfectness"]["verdict"] == "perfect_sampled"

    # Graph comparisons across kinds.
    assert s4.is_eppo()
    assert groupgraph.graphs_equal(s4.graph("power"), s4.graph("enhanced"))
    c6 = groupgraph.Group("C6")
    assert not c6.is_eppo()
    assert not groupgraph.graphs_equal(c6.graph("power"), c6.graph("enhanced"))
    q8 = groupgraph.Group("Q8")
    assert groupgraph.graphs_equal(q8.graph("enhanced"), q8.graph("commuting"))
    diff = groupgraph.difference(q8.graph("commuting"), q8.graph("power"))
    assert diff.kind == "difference" and diff.edge_count == 0

    # Directed power graph and prime graph.
    arcs = c6.directed_power_arcs()
    assert (0, 1) in arcs and (1, 0) not in arcs
    prime = c6.graph("prime")
    assert prime.labels() == [2, 3] and prime.are_adjacent(2, 3)

    # Cyclic structure helpers.
    subgroups = q8.maximal_cyclic_subgroups()
    assert len(subgroups) == 3 and all(len(s) == 4 for s in subgroups)

    # Theorem verification.
    ids = groupgraph.theorem_ids()
    assert len(ids) == 12 and "power-eq-commuting" in ids
    reports = s4.verify()
    assert len(reports) == 12
    assert all(r["status"] == "pass" and r["group"] == "S4" for r in reports)
    assert [r["theorem"] for r in reports] == ids
    partial = c6.verify(["maximal-cliques", "chain-formula"])
    assert [r["theorem"] for r in partial] == ["chain-formula", "maximal-cliques"]

    # Catalog listing.
    labels = groupgraph.catalog_labels(12)
    assert "S3" in labels and "Q8" in labels and "C1" not in labels

    # Error paths surface as ValueError.
    expect_value_error(lambda: groupgraph.Group("Z5"))
    expect_value_error(lambda: s4.graph("total"))
    expect_value_error(lambda: c6.graph("prime", include_identity=False))
    expect_value_error(lambda: s4.verify(["bogus"]))
    expect_value_error(lambda: groupgraph.catalog_labels(5000))
    expect_value_error(lambda: power.degree(99))
    expect_value_error(lambda: s4.mul(24, 0))

    print("smoke test passed:", groupgraph.__name__, "via", sys.modules["groupgraph"].__file__)


if __name__ == "__main__":
    main()
