"""Repeated greedy covering of the boundary.

``greedy_interval`` extends a chain clockwise from a boundary point for as
long as one guard can still see all of it.  Chaining these steps gives the
greedy sequence ``x_0, x_1, ...``; ``run_sequence`` iterates until one of the
optimality certificates fires, and ``extract_solution`` cuts one full
revolution out of the tail of the sequence.

Indexing follows the usual conventions for this algorithm: ``k`` is the
smallest index with ``x_{k+1}`` back in ``[x_0, x_1)``, so the first
revolution uses ``k + 1`` chains, and the local sequences are
``x_i^m = x_{ik+m}`` for ``m = 1..k``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .errors import CapExhausted, MalformedDocument, MalformedState
from .exact_num import ZERO, Point, format_rational, max_component_bits, rational
from .feasible_region import kernel_nonempty
from .last_visible import last_visible_point_ref, last_visible_point_tangent
from .polygon_model import BoundaryPoint, Polygon
from .region import Region, intersect
from .visibility import visibility_region

__all__ = [
    "CertificateKind",
    "Certificate",
    "GreedyStep",
    "SequenceState",
    "Solution",
    "greedy_interval",
    "run_sequence",
    "detect_progress",
    "extract_solution",
    "solve",
    "solution_from_document",
]


class CertificateKind(Enum):
    STAR_SHAPED = "StarShaped"
    REPETITION = "Repetition"
    POSITIVE_FINGERPRINT = "PositiveFingerprint"
    EDGE_JUMP_ESCAPE = "EdgeJumpEscape"
    CAP_EXHAUSTED = "CapExhausted"


@dataclass(frozen=True)
class Certificate:
    """Why the sequence is known to be optimal from index ``index`` on.

    ``witness`` holds the indices establishing the condition: ``(i, j)`` with
    ``x_i = x_j`` for a repetition, ``(i, m, t)`` for a positive fingerprint
    of local element ``x_i^m = x_t``, ``(jumps, t)`` for edge jumps.
    """

    kind: CertificateKind
    index: int
    witness: tuple = ()


@dataclass(frozen=True)
class GreedyStep:
    start: BoundaryPoint
    end: BoundaryPoint
    guard: Point


@dataclass
class SequenceState:
    polygon: Polygon
    points: list[BoundaryPoint]
    unwrapped: list  # cumulative clockwise positions u_i, u_0 = x_0.position
    steps: list[GreedyStep] = field(default_factory=list)
    k: int | None = None
    edge_jumps: int = 0
    seen: dict = field(default_factory=dict)
    certificate: Certificate | None = None
    max_bits: list[int] = field(default_factory=list)

    @property
    def T(self) -> int:
        return len(self.steps)

    @property
    def first_revolution(self) -> int | None:
        """Chains used by the first revolution, ``k + 1``."""
        return None if self.k is None else self.k + 1

    def revolutions(self, t: int | None = None) -> float:
        t = self.T if t is None else t
        return float((self.unwrapped[t] - self.unwrapped[0]) / self.polygon.n)

    def local(self, m: int) -> list[BoundaryPoint]:
        """Local greedy sequence ``x_i^m`` for ``i = 0, 1, ...``."""
        if self.k is None:
            raise MalformedState("local sequences need a completed first revolution")
        return self.points[m::self.k]


@dataclass(frozen=True)
class Solution:
    chains: tuple[GreedyStep, ...]
    certificate: Certificate
    first_revolution: int | None = None
    revolutions: float = 0.0
    steps_run: int = 0
    periodic: bool = False

    @property
    def size(self) -> int:
        return len(self.chains)

    def to_document(self) -> dict:
        return {
            "size": self.size,
            "certificate": self.certificate.kind.value,
            "chains": [_step_doc(c) for c in self.chains],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)


def _step_doc(step: GreedyStep) -> dict:
    return {
        "start": [step.start.edge, format_rational(step.start.s)],
        "end": [step.end.edge, format_rational(step.end.s)],
        "guard": [format_rational(step.guard[0]), format_rational(step.guard[1])],
    }


def solution_from_document(doc) -> Solution:
    """Inverse of ``Solution.to_document``; also accepts JSON text."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"invalid JSON: {exc}") from exc
    try:
        chains = tuple(
            GreedyStep(
                BoundaryPoint(int(c["start"][0]), rational(c["start"][1])),
                BoundaryPoint(int(c["end"][0]), rational(c["end"][1])),
                Point(rational(c["guard"][0]), rational(c["guard"][1])),
            )
            for c in doc["chains"]
        )
        kind = CertificateKind(doc.get("certificate", "Repetition"))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedDocument(f"bad solution document: {exc}") from exc
    return Solution(chains, Certificate(kind, 0))


# one greedy step ------------------------------------------------------------------

LastVisibleFn = Callable[..., object]

_METHODS: dict[str, LastVisibleFn] = {
    "ref": last_visible_point_ref,
    "tangent": last_visible_point_tangent,
}


def _any_point(region: Region) -> Point:
    return min(region.points())


def greedy_interval(poly: Polygon, x: BoundaryPoint, *, method: str = "ref",
                    observer: Callable[[Region], None] | None = None) -> GreedyStep:
    """Longest clockwise chain from x that a single guard sees.

    The feasible region starts as the visibility polygon of x and absorbs the
    following vertices one at a time; when it would become empty, the last
    visible point on the failing edge ends the chain.  A chain that wraps all
    the way around returns ``end == x``.
    """
    lvp = _METHODS[method]
    n = poly.n
    xp = poly.point_at(x)
    F = visibility_region(poly, xp)
    for step in range(1, n + 1):
        i = (x.edge + step) % n
        vi = poly.vertices[i]
        if vi == xp:
            break
        nxt = intersect(F, visibility_region(poly, vi))
        if nxt.is_empty:
            e = (i - 1) % n
            start = xp if e == x.edge and x.s != 0 else None
            res = lvp(poly, F, e, start, check=False)
            return GreedyStep(x, res.point, res.guard)
        if observer is not None:
            observer(nxt)
        F = nxt
    return GreedyStep(x, x, _any_point(F))


# the sequence ----------------------------------------------------------------------


def _advance(n: int, prev: BoundaryPoint, cur: BoundaryPoint):
    d = (cur.position - prev.position) % n
    return d if d != 0 else n


def _in_half_open(n: int, p: BoundaryPoint, lo: BoundaryPoint, hi: BoundaryPoint) -> bool:
    """p in the clockwise interval [lo, hi)."""
    width = (hi.position - lo.position) % n
    return (p.position - lo.position) % n < width


def _is_jump(a: BoundaryPoint, b: BoundaryPoint) -> bool:
    return a.is_vertex or (a.edge != b.edge and not b.is_vertex)


def detect_progress(state: SequenceState) -> Certificate | None:
    """Check the newest endpoint ``x_T`` against the optimality conditions."""
    t = state.T
    x = state.points[t]
    if x in state.seen:
        return Certificate(CertificateKind.REPETITION, t, (state.seen[x], t))
    k = state.k
    if k is None or t < k + 1:
        return None
    i, m = divmod(t, k)
    if m == 0:
        i, m = i - 1, k
    if not _in_half_open(state.polygon.n, x, state.points[m - 1], state.points[t - k]):
        return Certificate(CertificateKind.POSITIVE_FINGERPRINT, t, (i, m, t))
    if state.edge_jumps > state.polygon.n:
        return Certificate(CertificateKind.EDGE_JUMP_ESCAPE, t + 1, (state.edge_jumps, t))
    return None


def _push(state: SequenceState, step: GreedyStep) -> None:
    n = state.polygon.n
    prev = state.points[-1]
    state.steps.append(step)
    state.points.append(step.end)
    state.unwrapped.append(state.unwrapped[-1] + _advance(n, prev, step.end))
    state.max_bits.append(max_component_bits(step.end.s))
    t = state.T
    if state.k is None and state.unwrapped[t] >= state.unwrapped[0] + n:
        state.k = t - 1
    k = state.k
    if k and t >= k + 1 and _is_jump(state.points[t - k], step.end):
        # x_T = x_{i+1}^m closes the pair (x_i^m, x_{i+1}^m) of its local sequence
        state.edge_jumps += 1


def run_sequence(poly: Polygon, x0: BoundaryPoint, cap: int | None = None, *,
                 cap_constant: int = 8, method: str = "ref", stop: bool = True,
                 observer: Callable[[Region], None] | None = None) -> SequenceState:
    """Iterate greedy steps from x0 until a certificate fires or the cap is reached.

    Without an explicit ``cap`` the bound ``cap_constant * k^2 * n^3`` is used
    once the first revolution fixes ``k``.
    """
    n = poly.n
    state = SequenceState(poly, [x0], [x0.position])
    state.seen[x0] = 0
    limit = cap
    while True:
        if limit is not None and state.T >= limit:
            state.certificate = Certificate(CertificateKind.CAP_EXHAUSTED, state.T)
            return state
        step = greedy_interval(poly, state.points[-1], method=method, observer=observer)
        _push(state, step)
        if limit is None and state.k is not None:
            limit = cap_constant * max(state.k, 1) ** 2 * n ** 3
        cert = detect_progress(state)
        state.seen.setdefault(step.end, state.T)
        if cert is not None and state.certificate is None:
            state.certificate = cert
            if stop:
                return state


def _step(state: SequenceState, method: str, observer=None) -> None:
    _push(state, greedy_interval(state.polygon, state.points[-1], method=method, observer=observer))


def extract_solution(state: SequenceState, *, method: str = "ref", settle: int = 16,
                     observer=None) -> Solution:
    """One revolution of chains starting at a certified optimal endpoint.

    Past the certificate the sequence is continued for up to ``settle``
    revolutions looking for an exact repetition; an exactly periodic stretch
    is preferred because every endpoint of it reproduces the same chains.
    The final chain is cut back so that the chains partition the boundary.
    """
    cert = state.certificate
    if cert is None or cert.kind in (CertificateKind.CAP_EXHAUSTED, CertificateKind.STAR_SHAPED):
        raise MalformedState("sequence has no optimality certificate")
    n = state.polygon.n
    if cert.kind is CertificateKind.REPETITION:
        c = cert.witness[0]
    else:
        c = cert.index
        while state.T < c:
            _step(state, method, observer)
        first = {}
        for t in range(c, state.T + 1):
            first.setdefault(state.points[t], t)
        limit = state.unwrapped[c] + settle * n
        while state.unwrapped[-1] < limit:
            _step(state, method, observer)
            x = state.points[-1]
            if x in first:
                c = first[x]
                break
            first[x] = state.T
    while state.unwrapped[-1] < state.unwrapped[c] + n:
        _step(state, method, observer)
    T = c + 1
    while state.unwrapped[T] < state.unwrapped[c] + n:
        T += 1
    pts = state.points
    j = None
    for cand in range(T - 2, -1, -1):
        if _in_half_open(n, pts[cand], pts[T - 1], pts[T]) and pts[cand] != pts[T - 1] or pts[cand] == pts[T]:
            j = cand
            break
    if j is None:
        raise MalformedState("no earlier endpoint inside the final step")
    chains = list(state.steps[j:T])
    last = chains[-1]
    chains[-1] = GreedyStep(last.start, pts[j], last.guard)
    return Solution(tuple(chains), cert, state.first_revolution, state.revolutions(min(cert.index, state.T)),
                    state.T, pts[T] == pts[j])


def default_start(poly: Polygon) -> BoundaryPoint:
    return BoundaryPoint(0, ZERO)


def solve(poly: Polygon, *, start: BoundaryPoint | None = None, cap_constant: int = 8,
          cap: int | None = None, method: str = "ref", settle: int = 16,
          observer: Callable[[Region], None] | None = None) -> Solution:
    """Minimum partition of the boundary into guarded chains."""
    x0 = default_start(poly) if start is None else start
    witness = kernel_nonempty(poly)
    if witness is not None:
        cert = Certificate(CertificateKind.STAR_SHAPED, 0, (witness,))
        return Solution((GreedyStep(x0, x0, witness),), cert, 1, 0.0, 0, True)
    state = run_sequence(poly, x0, cap, cap_constant=cap_constant, method=method, observer=observer)
    if state.certificate.kind is CertificateKind.CAP_EXHAUSTED:
        raise CapExhausted(f"no certificate within {state.T} greedy steps", state)
    return extract_solution(state, method=method, settle=settle, observer=observer)


def lower_bound(poly: Polygon, x: BoundaryPoint | None = None, *, method: str = "ref") -> int:
    """Chains in one greedy revolution minus one; never exceeds the optimum."""
    x0 = default_start(poly) if x is None else x
    state = SequenceState(poly, [x0], [x0.position])
    while state.k is None:
        _push(state, greedy_interval(poly, state.points[-1], method=method))
    return state.k


def revolution_bound(n: int, k: int, c: int = 8) -> int:
    return c * k * k * n ** 3


def ceil_revolutions(state: SequenceState, t: int) -> int:
    return math.ceil(state.revolutions(t))
