"""Regenerate the bundled model corpus under src/skelkit/data/.

The degeneration complexes are the classical fiber shapes of a
relatively minimal elliptic surface over a disc, taken after resolving
to simple normal crossings where the minimal fiber is not snc already
(I1, II, III, IV).  Multiplicities are the fiber multiplicities; the
weight numerators come from the relative canonical form, so they equal
1 on every component of an snc minimal fiber and pick up one extra unit
per point blow-up on the exceptional curves.  The two threshold models
(node, cusp) are log resolutions of plane curve germs.
"""

from pathlib import Path

from skelkit import (
    KIND_LOG_RESOLUTION,
    KIND_SNCD,
    cycle_model,
    full_complex_model,
    graph_model,
    save_model,
    star_model,
    validate,
)

DATA = Path(__file__).resolve().parents[1] / "src" / "skelkit" / "data"


def kodaira_I0():
    return graph_model(KIND_SNCD, 1, 2, [("C", "smooth fiber", 1, 1)], [])


def kodaira_I1():
    comps = [("C", "nodal cubic, strict transform", 1, 1), ("E", "node blow-up", 2, 2)]
    edges = [("e_a", "C", "E"), ("e_b", "C", "E")]
    return graph_model(KIND_SNCD, 1, 2, comps, edges)


def kodaira_I2():
    comps = [("A", "first conic", 1, 1), ("B", "second conic", 1, 1)]
    edges = [("e_a", "A", "B"), ("e_b", "A", "B")]
    return graph_model(KIND_SNCD, 1, 2, comps, edges)


def kodaira_I5():
    comps = [(f"C{k}", f"cycle component {k}", 1, 1) for k in range(5)]
    return cycle_model(KIND_SNCD, 1, comps)


def kodaira_I0star():
    legs = [(f"T{k}", f"leg {k}", 1, 1) for k in range(1, 5)]
    return star_model(KIND_SNCD, 1, ("C", "central component", 2, 1), legs)


def kodaira_I2star():
    comps = [
        ("C1", "left double component", 2, 1),
        ("C2", "middle double component", 2, 1),
        ("C3", "right double component", 2, 1),
        ("T1", "tail", 1, 1),
        ("T2", "tail", 1, 1),
        ("T3", "tail", 1, 1),
        ("T4", "tail", 1, 1),
    ]
    edges = [
        ("e_T1_C1", "T1", "C1"),
        ("e_T2_C1", "T2", "C1"),
        ("e_C1_C2", "C1", "C2"),
        ("e_C2_C3", "C2", "C3"),
        ("e_T3_C3", "T3", "C3"),
        ("e_T4_C3", "T4", "C3"),
    ]
    return graph_model(KIND_SNCD, 1, 2, comps, edges)


def kodaira_II():
    legs = [
        ("C", "cuspidal cubic, strict transform", 1, 1),
        ("E1", "first exceptional", 2, 2),
        ("E2", "second exceptional", 3, 3),
    ]
    return star_model(KIND_SNCD, 1, ("E3", "last exceptional", 6, 5), legs)


def kodaira_III():
    legs = [
        ("A", "first tangent component", 1, 1),
        ("B", "second tangent component", 1, 1),
        ("E1", "first exceptional", 2, 2),
    ]
    return star_model(KIND_SNCD, 1, ("E2", "second exceptional", 4, 3), legs)


def kodaira_IV():
    legs = [
        ("A", "first line", 1, 1),
        ("B", "second line", 1, 1),
        ("C", "third line", 1, 1),
    ]
    return star_model(KIND_SNCD, 1, ("E", "triple point blow-up", 3, 2), legs)


def _chain_with_branch(name, marks, branch_at, branch_mark):
    """Affine Dynkin shapes: a chain plus one branch component."""
    comps = [(f"C{k}", f"{name} chain {k}", n, 1) for k, n in enumerate(marks, start=1)]
    comps.append(("B", f"{name} branch", branch_mark, 1))
    edges = [
        (f"e_C{k}_C{k + 1}", f"C{k}", f"C{k + 1}") for k in range(1, len(marks))
    ]
    edges.append((f"e_C{branch_at}_B", f"C{branch_at}", "B"))
    return graph_model(KIND_SNCD, 1, 2, comps, edges)


def kodaira_IIstar():
    return _chain_with_branch("E8", [1, 2, 3, 4, 5, 6, 4, 2], branch_at=6, branch_mark=3)


def kodaira_IIIstar():
    return _chain_with_branch("E7", [1, 2, 3, 4, 3, 2, 1], branch_at=4, branch_mark=2)


def kodaira_IVstar():
    comps = [("C", "central component", 3, 1)]
    edges = []
    for arm in ("A", "B", "D"):
        comps.append((f"{arm}1", "inner arm component", 2, 1))
        comps.append((f"{arm}2", "outer arm component", 1, 1))
        edges.append((f"e_C_{arm}1", "C", f"{arm}1"))
        edges.append((f"e_{arm}1_{arm}2", f"{arm}1", f"{arm}2"))
    return graph_model(KIND_SNCD, 1, 2, comps, edges)


def node():
    comps = [("A", "first branch", 1, 1), ("B", "second branch", 1, 1)]
    return graph_model(KIND_LOG_RESOLUTION, 1, 2, comps, [("e_A_B", "A", "B")])


def cusp():
    legs = [
        ("C", "cuspidal curve, strict transform", 1, 1),
        ("E1", "first exceptional", 2, 2),
        ("E2", "second exceptional", 3, 3),
    ]
    return star_model(KIND_LOG_RESOLUTION, 1, ("E3", "last exceptional", 6, 5), legs)


def edge_23():
    comps = [("A", "double component", 2, 1), ("B", "triple component", 3, 1)]
    return graph_model(KIND_SNCD, 1, 2, comps, [("e_A_B", "A", "B")])


def reduced_fiber():
    comps = [(x, f"plane {x}", 1, 1) for x in "ABCD"]
    maximal = [["A", "B", "C"], ["A", "B", "D"], ["A", "C", "D"], ["B", "C", "D"]]
    return full_complex_model(KIND_SNCD, 1, comps, maximal, ambient_dim=3)


BUILDERS = {
    "kodaira_I0": kodaira_I0,
    "kodaira_I1": kodaira_I1,
    "kodaira_I2": kodaira_I2,
    "kodaira_I5": kodaira_I5,
    "kodaira_I0star": kodaira_I0star,
    "kodaira_I2star": kodaira_I2star,
    "kodaira_II": kodaira_II,
    "kodaira_III": kodaira_III,
    "kodaira_IV": kodaira_IV,
    "kodaira_IIstar": kodaira_IIstar,
    "kodaira_IIIstar": kodaira_IIIstar,
    "kodaira_IVstar": kodaira_IVstar,
    "node": node,
    "cusp": cusp,
    "edge_23": edge_23,
    "reduced_fiber": reduced_fiber,
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for name, build in sorted(BUILDERS.items()):
        model = build()
        report = validate(model)
        if not report.ok:
            raise SystemExit(f"{name} is invalid:\n{report}")
        save_model(model, DATA / f"{name}.model")
        print(f"wrote {name}.model ({len(model.components)} components, "
              f"{len(model.strata)} strata)")


if __name__ == "__main__":
    main()
