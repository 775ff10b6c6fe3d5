import random
from fractions import Fraction

import pytest

from polyattain.attainability import decide, threshold_test, vestibule_test
from polyattain.degeneracy import is_degenerate
from polyattain.gen import generate
from polyattain.geometry import pt
from polyattain.moves import PushOut, verify_script
from polyattain.planners import (
    DEGENERATE_LT_5N,
    THRESHOLD_2N_MINUS_1,
    VESTIBULE_2N,
    plan_degenerate,
    plan_threshold,
    plan_vestibule,
)
from polyattain.polygon import Polygon, co_contains, polygon

from conftest import rng_for


def test_plan_all_equal_vertices(square):
    Pp = polygon([("1/2", "1/2")] * 4)
    v = is_degenerate(square, Pp)
    out = plan_degenerate(square, Pp, v.witness)
    assert len(out.script.moves) < 20
    assert verify_script(out.script, Pp).ok


def test_plan_corner_quad(square, corner_quad):
    v = is_degenerate(square, corner_quad)
    out = plan_degenerate(square, corner_quad, v.witness)
    assert out.bound_class == DEGENERATE_LT_5N
    assert len(out.script.moves) < 20
    assert verify_script(out.script, corner_quad).ok


def test_plan_explicit_witness(square, corner_quad):
    witness = polygon([(0, 0), (1, 0), (0, 1)])
    out = plan_degenerate(square, corner_quad, witness)
    assert verify_script(out.script, corner_quad).ok


def test_plan_non_set_convex_branch():
    P = polygon([(0, 0), (1, 0), (2, 0), (0, 1)])
    Pp = polygon([("1/4", "1/4"), ("1/2", "1/4"), ("1/2", "1/2"), ("1/4", "1/2")])
    v = is_degenerate(P, Pp)
    out = plan_degenerate(P, Pp, v.witness)
    assert len(out.script.moves) < 20
    assert verify_script(out.script, Pp).ok


def test_plan_degenerate_with_shuffled_outer(square, corner_quad):
    perm = (1, 3, 0, 2)
    P = Polygon(tuple(square.vertices[k] for k in perm))
    Pp = Polygon(tuple(corner_quad.vertices[k] for k in perm))
    v = is_degenerate(P, Pp)
    out = plan_degenerate(P, Pp, v.witness)
    rep = verify_script(out.script, Pp)
    assert rep.ok and out.script.start == P


def test_plan_rejects_bad_witness(square, corner_quad):
    with pytest.raises(ValueError):
        plan_degenerate(square, corner_quad, polygon([(0, 0), (3, 0), (0, 3)]))


def test_threshold_plan_for_pushed_square(square, pushed_square):
    cert = threshold_test(square, pushed_square, 0)
    assert cert is not None
    out = plan_threshold(square, pushed_square, 0, cert)
    assert out.bound_class == THRESHOLD_2N_MINUS_1
    assert len(out.script.moves) <= 7
    assert verify_script(out.script, pushed_square).ok


def test_threshold_plan_identity(square):
    cert = threshold_test(square, square, 0)
    assert cert is not None
    out = plan_threshold(square, square, 0, cert)
    assert len(out.script.moves) == 0


def test_threshold_needs_boundary_vertex(square, inner_square):
    with pytest.raises(ValueError):
        threshold_test(square, inner_square, 0)


def test_vestibule_plan_composition(square, inner_square, pushed_square):
    found, _ = vestibule_test(square, inner_square)
    assert found is not None and found.pushout == PushOut(0, 3, pt("1/4", 0))
    tplan = plan_threshold(square, pushed_square, 0, found.cert)
    out = plan_vestibule(square, inner_square, found.pushout, tplan)
    assert out.bound_class == VESTIBULE_2N
    assert len(out.script.moves) <= 8
    assert verify_script(out.script, inner_square).ok
    assert out.script.moves[-1].c == Fraction(1, 3)


def test_planned_instances_verify_with_bounds():
    rng = rng_for("plan-bounds")
    stats = {}
    for trial in range(150):
        n = rng.randint(4, 7)
        mode = ("degenerate", "scripted", "random")[trial % 3]
        P, Pp, _ = generate(rng, n, mode)
        v = decide(P, Pp, plan_moves=True)
        if v.plan is None:
            continue
        stats[v.plan.bound_class] = stats.get(v.plan.bound_class, 0) + 1
        k = len(v.plan.script.moves)
        if v.plan.bound_class == DEGENERATE_LT_5N:
            assert k < 5 * n
        elif v.plan.bound_class == THRESHOLD_2N_MINUS_1:
            assert k <= 2 * n - 1
        else:
            assert k <= 2 * n
        assert verify_script(v.plan.script, Pp).ok
    assert stats.get(DEGENERATE_LT_5N, 0) > 20


def test_monotone_trace():
    """Consecutive hulls along every plan replay are nested."""
    rng = rng_for("trace")
    for trial in range(40):
        n = rng.randint(4, 6)
        P, Pp, _ = generate(rng, n, ("degenerate", "scripted")[trial % 2])
        v = decide(P, Pp, plan_moves=True)
        if v.plan is None:
            continue
        states = v.plan.intermediates
        for a, b in zip(states, states[1:]):
            assert co_contains(a, b)


def test_orientation_persists_in_nondegenerate_traces():
    """Set-convex intermediate polygons of threshold and vestibule plans
    stay convex counterclockwise."""
    rng = rng_for("orient-trace")
    seen = 0
    for _ in range(200):
        n = rng.randint(4, 6)
        P, Pp, _ = generate(rng, n, "scripted")
        v = decide(P, Pp, plan_moves=True)
        if v.plan is None or v.plan.bound_class == DEGENERATE_LT_5N:
            continue
        seen += 1
        for state in v.plan.intermediates:
            if state.is_set_convex:
                assert state.is_convex_ccw
    assert seen > 5
