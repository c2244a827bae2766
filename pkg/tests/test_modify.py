"""Blow-ups: combinatorics, traces, point transfer, reduction."""

import json
import random
from fractions import Fraction as F

import pytest

import skelkit as sk
from conftest import random_point


def triangle(n=(1, 2, 3), mu=(1, 1, 2)):
    comps = [("A", "A", n[0], mu[0]), ("B", "B", n[1], mu[1]), ("C", "C", n[2], mu[2])]
    return sk.full_complex_model(sk.KIND_SNCD, 1, comps, [["A", "B", "C"]])


def test_blowup_edge(bundled):
    m = bundled["edge_23"]
    out, e, trace = sk.blowup_stratum(m, "e_A_B")
    c = out.component(e)
    assert (c.N, c.mu) == (5, 2)
    assert sk.validate(out).ok
    assert not out.has_stratum("e_A_B")
    ids = {s.id for s in out.strata}
    assert {"v_A", "v_B", f"v_{e}"} <= ids
    # the replaced edge became two edges through the new vertex
    assert trace.steps[0].replacements["e_A_B"] == {
        (): f"v_{e}",
        ("A",): f"f_{e}_A",
        ("B",): f"f_{e}_B",
    }
    assert trace.pullback == {"A": {"A": 1, e: 1}, "B": {"B": 1, e: 1}}


def test_blowup_bigon_keeps_the_parallel_edge(bundled):
    m = bundled["kodaira_I2"]
    out, e, _ = sk.blowup_stratum(m, "e_a")
    assert sk.validate(out).ok
    assert out.has_stratum("e_b")
    assert not out.has_stratum("e_a")
    assert out.component(e).N == 2


def test_blowup_triangle_builds_the_cone():
    m = triangle()
    out, e, _ = sk.blowup_stratum(m, "s_A_B_C")
    assert sk.validate(out).ok
    assert out.component(e).N == 6 and out.component(e).mu == 4
    expected_new = {
        f"v_{e}",
        f"f_{e}_A",
        f"f_{e}_B",
        f"f_{e}_C",
        f"f_{e}_A_B",
        f"f_{e}_A_C",
        f"f_{e}_B_C",
    }
    assert expected_new <= {s.id for s in out.strata}
    assert not out.has_stratum("s_A_B_C")
    # all proper faces of the old cell survive
    for sid in ["s_A_B", "s_A_C", "s_B_C", "s_A", "s_B", "s_C"]:
        assert out.has_stratum(sid)


def test_blowup_center_restrictions():
    m = triangle()
    with pytest.raises(sk.UnsupportedCenterError):
        sk.blowup_stratum(m, "s_A_B")  # not maximal
    with pytest.raises(sk.UnsupportedCenterError):
        sk.blowup_stratum(m, "s_A")  # a divisor is not a center
    single = sk.graph_model(sk.KIND_SNCD, 1, 2, [("A", "A", 1, 1)], [])
    with pytest.raises(sk.UnsupportedCenterError):
        sk.blowup_stratum(single, "v_A")


def test_blowup_point_restrictions():
    m = triangle()
    with pytest.raises(sk.UnsupportedCenterError):
        sk.blowup_point(m, "s_A_B", ("A",), 2)  # stratum not maximal
    with pytest.raises(sk.DomainError):
        sk.blowup_point(m, "s_A_B_C", ("X",), 2)  # unknown center component
    with pytest.raises(sk.DomainError):
        sk.blowup_point(m, "s_A_B_C", (), 2)
    with pytest.raises(sk.DomainError):
        sk.blowup_point(m, "s_A_B_C", ("A", "B"), 1)  # codim below |J|
    with pytest.raises(sk.DomainError):
        sk.blowup_point(m, "s_A_B_C", ("A",), 4)  # codim above ambient_dim
    with pytest.raises(sk.UnsupportedCenterError):
        # codim = |J| with J a proper face: that is a stratum blow-up of s_A_B
        sk.blowup_point(m, "s_A_B_C", ("A", "B"), 2)


def test_blowup_point_full_face_delegates():
    m = triangle()
    via_point, e1, _ = sk.blowup_point(m, "s_A_B_C", ("A", "B", "C"), 3)
    via_stratum, e2, _ = sk.blowup_stratum(m, "s_A_B_C")
    assert e1 == e2
    assert via_point == via_stratum


def test_blowup_point_adds_a_cone_and_removes_nothing():
    m = triangle()
    out, e, trace = sk.blowup_point(m, "s_A_B_C", ("A", "B"), 3)
    assert sk.validate(out).ok
    assert {s.id for s in m.strata} <= {s.id for s in out.strata}
    c = out.component(e)
    assert c.N == 1 + 2  # N_A + N_B
    assert c.mu == 1 + 1 + 1  # mu_A + mu_B + m * (3 - 2)
    assert trace.steps[0].replacements == {}
    new_ids = {s.id for s in out.strata} - {s.id for s in m.strata}
    # the cone reaches every subset of the center, the full center included,
    # because a generic codim-3 point center sits inside the curve A cap B
    assert new_ids == {f"v_{e}", f"f_{e}_A", f"f_{e}_B", f"f_{e}_A_B"}


def test_transfer_fixes_points_off_the_center(bundled):
    m = bundled["kodaira_I2"]
    out, _, trace = sk.blowup_stratum(m, "e_a")
    x = sk.SkeletonPoint("e_b", {"A": F(1, 3), "B": F(2, 3)})
    y = sk.transfer_point(m, out, trace, x)
    assert y == x
    assert sk.weight(out, y) == sk.weight(m, x)


def test_transfer_moves_center_points_and_keeps_invariants(bundled):
    m = bundled["edge_23"]
    out, e, trace = sk.blowup_stratum(m, "e_A_B")
    x = sk.SkeletonPoint("e_A_B", {"A": F(1, 4), "B": F(1, 6)})
    y = sk.transfer_point(m, out, trace, x)
    assert y.stratum == f"f_{e}_A"
    assert y.alpha == {e: F(1, 6), "A": F(1, 12)}
    assert sk.weight(out, y) == sk.weight(m, x) == F(5, 12)
    for cid in ("A", "B"):
        assert sk.pullback_value(out, trace, y, cid) == sk.value_on_component(m, x, cid)


def test_transfer_tie_goes_to_the_new_vertex(bundled):
    m = bundled["edge_23"]
    out, e, trace = sk.blowup_stratum(m, "e_A_B")
    x = sk.SkeletonPoint("e_A_B", {"A": F(1, 5), "B": F(1, 5)})
    y = sk.transfer_point(m, out, trace, x)
    assert y.stratum == f"v_{e}"
    assert y.alpha == {e: F(1, 5)}


def test_transfer_needs_the_right_target(bundled):
    m = bundled["edge_23"]
    _, _, trace = sk.blowup_stratum(m, "e_A_B")
    x = sk.SkeletonPoint("e_A_B", {"A": F(1, 4), "B": F(1, 6)})
    with pytest.raises(sk.DomainError):
        sk.transfer_point(m, m, trace, x)


def test_pullback_value_unknown_component(bundled):
    m = bundled["edge_23"]
    out, _, trace = sk.blowup_stratum(m, "e_A_B")
    y = sk.transfer_point(
        m, out, trace, sk.SkeletonPoint("e_A_B", {"A": F(1, 4), "B": F(1, 6)})
    )
    with pytest.raises(sk.DomainError):
        sk.pullback_value(out, trace, y, "ghost")


def horizontal_edge_model():
    comps = (sk.PrimeComponent("A", "A", 2, 1), sk.PrimeComponent("B", "B", 3, 1))
    pair = sk.SeriesPair(
        sk.Support("e", ("A", "B"), frozenset({(2, 0), (0, 3)})),
        sk.Support("e", ("A", "B"), frozenset({(0, 0)})),
    )
    strata = (
        sk.Stratum("v_A", ("A",)),
        sk.Stratum("v_B", ("B",)),
        sk.Stratum("e", ("A", "B"), {"A": "v_B", "B": "v_A"}, False, False, pair),
    )
    return sk.SncdModel(sk.KIND_SNCD, 1, 2, comps, strata)


def test_blowup_carries_expansions_along():
    m = horizontal_edge_model()
    out, e, trace = sk.blowup_stratum(m, "e")
    assert sk.validate(out).ok
    c = out.component(e)
    # center order of the expansion replaces the sum of the vertex data
    assert (c.N, c.mu) == (5, 4)
    x = sk.SkeletonPoint("e", {"A": F(1, 4), "B": F(1, 6)})
    y = sk.transfer_point(m, out, trace, x)
    assert sk.weight(out, y) == sk.weight(m, x) == F(11, 12)
    rng = random.Random(11)
    for _ in range(25):
        x = random_point(rng, m, "e")
        y = sk.transfer_point(m, out, trace, x)
        assert sk.weight(out, y) == sk.weight(m, x)


def horizontal_triangle_model():
    comps = [("A", "A", 1, 1), ("B", "B", 1, 1), ("C", "C", 2, 1)]
    m = sk.full_complex_model(sk.KIND_SNCD, 1, comps, [["A", "B", "C"]])
    pair = sk.SeriesPair(
        sk.Support("s_A_B_C", ("A", "B", "C"), frozenset({(1, 0, 0), (0, 2, 0)})),
        sk.Support("s_A_B_C", ("A", "B", "C"), frozenset({(0, 0, 0)})),
    )
    return m.replace(
        strata=tuple(
            sk.Stratum(s.id, s.vertices, s.face_map, horizontal=pair)
            if s.id == "s_A_B_C"
            else s
            for s in m.strata
        )
    )


def test_reduction_through_expansion_data_preserves_weight():
    m = horizontal_triangle_model()
    assert sk.validate(m).ok
    rng = random.Random(23)
    for _ in range(20):
        x = random_point(rng, m, "s_A_B_C")
        w = sk.weight(m, x)
        final, comp, trace = sk.reduce_to_divisorial(m, x)
        v = final.singleton(comp)
        y = sk.SkeletonPoint(v.id, {comp: F(1, final.component(comp).N)})
        assert sk.weight(final, y) == w
        for cid in ("A", "B", "C"):
            assert sk.pullback_value(final, trace, y, cid) == sk.value_on_component(
                m, x, cid
            )


def test_reduce_worked_examples(bundled):
    m = bundled["edge_23"]
    final, comp, trace = sk.reduce_to_divisorial(
        m, sk.SkeletonPoint("e_A_B", {"A": F(1, 5), "B": F(1, 5)})
    )
    c = final.component(comp)
    assert len(trace.steps) == 1 and (c.N, c.mu) == (5, 2)

    g = sk.graph_model(
        sk.KIND_SNCD, 1, 2, [("A", "A", 1, 1), ("B", "B", 1, 1)], [("e", "A", "B")]
    )
    final, comp, trace = sk.reduce_to_divisorial(
        g, sk.SkeletonPoint("e", {"A": F(1, 3), "B": F(2, 3)})
    )
    c = final.component(comp)
    assert len(trace.steps) == 2 and (c.N, c.mu) == (3, 3)


def test_reduce_hits_non_maximal_intermediate_strata():
    # the first subdivision of the triangle sends (1/8, 1/8, 3/8) to a
    # stratum that is a face of two new cells, so the next center is not
    # maximal; the reduction must keep going regardless
    m = triangle(n=(1, 1, 2), mu=(1, 1, 1))
    x = sk.SkeletonPoint("s_A_B_C", {"A": F(1, 8), "B": F(1, 8), "C": F(3, 8)})
    w = sk.weight(m, x)
    final, comp, trace = sk.reduce_to_divisorial(m, x)
    assert len(trace.steps) >= 2
    assert sk.validate(final).ok
    y = sk.SkeletonPoint(
        final.singleton(comp).id, {comp: F(1, final.component(comp).N)}
    )
    assert sk.weight(final, y) == w


def test_reduce_is_a_noop_on_vertices(bundled):
    m = bundled["edge_23"]
    x = sk.SkeletonPoint("v_A", {"A": F(1, 2)})
    final, comp, trace = sk.reduce_to_divisorial(m, x)
    assert final == m and comp == "A" and trace.steps == []


def test_trace_serializes_to_json(bundled):
    m = bundled["edge_23"]
    _, _, trace = sk.reduce_to_divisorial(
        m, sk.SkeletonPoint("e_A_B", {"A": F(1, 4), "B": F(1, 6)})
    )
    doc = json.dumps(trace.to_json())
    assert "pullback" in doc and "steps" in doc


def test_fresh_ids_avoid_collisions():
    # a component literally named exc1 must not clash with the new vertex
    comps = [("exc1", "x", 2, 1), ("B", "B", 3, 1)]
    m = sk.graph_model(sk.KIND_SNCD, 1, 2, comps, [("e", "exc1", "B")])
    out, e, _ = sk.blowup_stratum(m, "e")
    assert e == "exc2"
    assert sk.validate(out).ok
