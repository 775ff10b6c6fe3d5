"""The threshold test, vestibule test, and the complete attainability
decision for decreasing paths."""

from __future__ import annotations

from dataclasses import dataclass, field

from .degeneracy import is_degenerate
from .moves import PullIn, PushOut
from .planners import PlanOutcome, plan_degenerate, plan_threshold, plan_vestibule
from .polygon import BoundaryPoint, Polygon, canonicalize_ccw, co_contains, in_arc, ray_polygon_exit
from .poncelet import BlcResult, blc

ATTAINABLE_DEGENERATE = "AttainableDegenerate"
ATTAINABLE_VESTIBULE = "AttainableVestibule"
UNATTAINABLE = "Unattainable"
UNKNOWN_N3 = "UnknownN3"


@dataclass(frozen=True)
class ThresholdCertificate:
    vertex: int
    cert: BlcResult


@dataclass(frozen=True)
class VestibuleCertificate:
    pushout: PushOut | None  # None: the polygon is already in the threshold
    vertex: int
    cert: BlcResult


@dataclass(frozen=True)
class RejectionRecord:
    """One tested neighbor push-out (or boundary vertex) that failed."""

    vertex: int
    pusher: int | None
    landing: object
    why: str
    failed_runs: tuple[BlcResult, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: object
    plan: PlanOutcome | None
    audit: tuple[RejectionRecord, ...] = field(default_factory=tuple)


def threshold_test(P: Polygon, Pp: Polygon, i: int) -> BlcResult | None:
    """Certificate that Pp (non-degenerate, vertex i on the boundary of P)
    is attainable: the polygon is convex CCW and the broken line
    construction from that vertex returns with exactly n points into the
    stated half-open stretch of the neighboring edge.

    Both directions are tried when the vertex sits exactly on a corner.
    """
    cert, _ = _threshold_probe(P, Pp, i)
    return cert


def _threshold_probe(
    P: Polygon, Pp: Polygon, i: int
) -> tuple[BlcResult | None, tuple[BlcResult, ...]]:
    """threshold_test plus the rejected runs, for audit trails."""
    n = P.n
    bp = P.locate_boundary(Pp.vertices[i])
    if bp is None:
        raise ValueError("threshold test needs the chosen vertex on the boundary")
    if not Pp.is_convex_ccw:
        return None, tuple()
    prev_edge, this_edge = (i - 1) % n, i % n
    v_prev = BoundaryPoint(P, prev_edge, 0)
    v_next = BoundaryPoint(P, (i + 1) % n, 0)
    on_prev = (bp.edge == prev_edge and bp.t > 0) or (bp.edge == this_edge and bp.t == 0)
    on_this = bp.edge == this_edge
    failures = []
    if on_prev:
        res = blc(P, Pp, bp, "ccw")
        if res.l == n and in_arc(v_prev, bp, res.points[-1], True, False):
            return res, tuple()
        failures.append(res)
    if on_this:
        res = blc(P, Pp, bp, "cw")
        if res.l == n and in_arc(bp, v_next, res.points[-1], False, True):
            return res, tuple()
        failures.append(res)
    return None, tuple(failures)


def vestibule_test(
    P: Polygon, Pp: Polygon
) -> tuple[VestibuleCertificate | None, tuple[RejectionRecord, ...]]:
    """Search for a certificate that Pp is one neighbor pull-in away from
    the threshold (or already in it).

    With a vertex already on the boundary, membership in the threshold is
    equivalent to attainability, so only the threshold tests run.  With all
    vertices interior, all 2n neighbor push-outs onto the boundary are
    tried in index order, predecessor pusher first.
    """
    n = P.n
    audit: list[RejectionRecord] = []
    boundary_vertices = [
        i for i in range(n) if P.locate_boundary(Pp.vertices[i]) is not None
    ]
    if boundary_vertices:
        for i in boundary_vertices:
            cert, failures = _threshold_probe(P, Pp, i)
            if cert is not None:
                return VestibuleCertificate(None, i, cert), tuple(audit)
            audit.append(
                RejectionRecord(
                    i, None, Pp.vertices[i], "threshold test failed", failures
                )
            )
        return None, tuple(audit)
    for i in range(n):
        for pusher in ((i - 1) % n, (i + 1) % n):
            origin, through = Pp.vertices[pusher], Pp.vertices[i]
            landing = ray_polygon_exit(P, origin, through - origin).realize()
            pushed = Pp.replace(i, landing)
            cert, failures = _threshold_probe(P, pushed, i)
            if cert is not None:
                return (
                    VestibuleCertificate(PushOut(i, pusher, landing), i, cert),
                    tuple(audit),
                )
            audit.append(
                RejectionRecord(i, pusher, landing, "threshold test failed", failures)
            )
    return None, tuple(audit)


def _map_plan_indices(plan: PlanOutcome, sigma: tuple[int, ...], P: Polygon, Pp: Polygon) -> PlanOutcome:
    """Rename canonical-frame slots back to the original indexing."""
    from .moves import MoveScript, verify_script
    from .planners import PlannerError

    moves = tuple(PullIn(sigma[m.mover], sigma[m.target], m.c) for m in plan.script.moves)
    script = MoveScript(P, moves)
    rep = verify_script(script, Pp)
    if not rep.ok:
        raise PlannerError(f"index mapping broke the plan: {rep.failure}")
    return PlanOutcome(script, plan.bound_class, rep.states)


def decide(P: Polygon, Pp: Polygon, plan_moves: bool = False) -> Verdict:
    """Attainability of Pp from P by a decreasing path.

    Degenerate containment is attainable outright; otherwise the polygon is
    attainable if and only if it passes the vestibule search, except that a
    failed search with n = 3 is reported as unknown rather than negative.
    """
    if not co_contains(P, Pp):
        raise ValueError("containment violated")
    dv = is_degenerate(P, Pp)
    if dv.degenerate:
        plan = plan_degenerate(P, Pp, dv.witness) if plan_moves else None
        return Verdict(ATTAINABLE_DEGENERATE, dv, plan)

    canon = canonicalize_ccw(P)
    assert canon is not None  # non-degenerate forces a set-convex outer polygon
    Pc, sigma = canon
    Ppc = Polygon(tuple(Pp.vertices[s] for s in sigma))
    found, audit = vestibule_test(Pc, Ppc)
    if found is not None:
        plan = None
        if plan_moves:
            if found.pushout is None:
                tplan = plan_threshold(Pc, Ppc, found.vertex, found.cert)
                plan = plan_vestibule(Pc, Ppc, None, tplan)
            else:
                pushed = Ppc.replace(found.vertex, found.pushout.landing)
                tplan = plan_threshold(Pc, pushed, found.vertex, found.cert)
                plan = plan_vestibule(Pc, Ppc, found.pushout, tplan)
            plan = _map_plan_indices(plan, sigma, P, Pp)
        return Verdict(ATTAINABLE_VESTIBULE, found, plan, audit)
    if P.n == 3:
        return Verdict(UNKNOWN_N3, None, None, audit)
    return Verdict(UNATTAINABLE, None, None, audit)
