"""Shared fixtures: the bundled corpus and seeded random generators."""

from fractions import Fraction
from importlib import resources

import pytest

import skelkit as sk

BUNDLED_NAMES = [
    "cusp",
    "edge_23",
    "kodaira_I0",
    "kodaira_I0star",
    "kodaira_I1",
    "kodaira_I2",
    "kodaira_I2star",
    "kodaira_I5",
    "kodaira_II",
    "kodaira_III",
    "kodaira_IIIstar",
    "kodaira_IIstar",
    "kodaira_IV",
    "kodaira_IVstar",
    "node",
    "reduced_fiber",
]
KODAIRA_NAMES = [n for n in BUNDLED_NAMES if n.startswith("kodaira_")]


def bundled_path(name):
    return resources.files("skelkit").joinpath(f"data/{name}.model")


def load_bundled(name):
    return sk.parse_model(bundled_path(name).read_text())


@pytest.fixture(scope="session")
def bundled():
    return {name: load_bundled(name) for name in BUNDLED_NAMES}


def random_graph_model(rng, max_components=5):
    """A connected weighted graph, possibly with parallel edges."""
    n = rng.randint(2, max_components)
    comps = [
        (f"C{k}", f"component {k}", rng.randint(1, 5), rng.randint(1, 5))
        for k in range(n)
    ]
    edges = [(f"e{k}", f"C{rng.randrange(k)}", f"C{k}") for k in range(1, n)]
    for j in range(rng.randint(0, 2)):
        a, b = rng.sample(range(n), 2)
        edges.append((f"p{j}", f"C{a}", f"C{b}"))
    return sk.graph_model(sk.KIND_SNCD, rng.randint(1, 3), 2, comps, edges)


def random_complex_model(rng):
    """A small simplicial complex with random 2- and 3-element maximal cells."""
    n = rng.randint(3, 5)
    comps = [
        (f"C{k}", f"component {k}", rng.randint(1, 5), rng.randint(1, 5))
        for k in range(n)
    ]
    ids = [c[0] for c in comps]
    maximal = [
        rng.sample(ids, rng.randint(2, 3)) for _ in range(rng.randint(1, 3))
    ]
    return sk.full_complex_model(
        sk.KIND_SNCD, rng.randint(1, 3), comps, maximal, ambient_dim=3
    )


def random_point(rng, model, stratum_id, max_part=9):
    """A normalized point in the open face of a stratum."""
    s = model.stratum(stratum_id)
    parts = {v: rng.randint(1, max_part) for v in s.vertices}
    total = sum(parts[v] * model.component(v).N for v in s.vertices)
    return sk.SkeletonPoint(
        stratum_id, {v: Fraction(parts[v], total) for v in s.vertices}
    )


def random_barycentric(rng, model, stratum_id, max_part=9):
    s = model.stratum(stratum_id)
    parts = {v: rng.randint(1, max_part) for v in s.vertices}
    total = sum(parts.values())
    return sk.BarycentricPoint(
        stratum_id, {v: Fraction(parts[v], total) for v in s.vertices}
    )
