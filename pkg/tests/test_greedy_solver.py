import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from contiguous_gallery.errors import MalformedState
from contiguous_gallery.exact_num import orient_sign, point, rational
from contiguous_gallery.greedy_solver import (Certificate, CertificateKind, GreedyStep, SequenceState,
                                              _push, detect_progress, extract_solution, greedy_interval,
                                              lower_bound, run_sequence, solution_from_document, solve)
from contiguous_gallery.polygon_model import BoundaryInterval, BoundaryPoint, interval_contains
from contiguous_gallery.feasible_region import feasible_region
from contiguous_gallery.region import intersect
from contiguous_gallery.verify_bench import random_non_star, verify_solution
from contiguous_gallery.visibility import visibility_region


def bp(e, s=0):
    return BoundaryPoint(e, rational(s))


def test_comb_step_from_right_tip(comb):
    x = comb.locate(point(0, 3))
    step = greedy_interval(comb, x)
    assert comb.point_at(step.end) == point(-5, "7/5")
    assert step.guard == point("-3/2", 0)


def test_star_shaped_step_wraps(square):
    step = greedy_interval(square, bp(0))
    assert step.end == step.start


def test_square_is_star_shaped(square):
    sol = solve(square)
    assert sol.size == 1
    assert sol.certificate.kind is CertificateKind.STAR_SHAPED
    assert verify_solution(square, sol)


@pytest.mark.parametrize("v", range(0, 32, 3))
def test_four_guard_cross_from_vertices(four_guard_cross, v):
    state = run_sequence(four_guard_cross, bp(v))
    assert state.certificate.kind is CertificateKind.REPETITION
    assert state.revolutions() <= 4
    sol = extract_solution(state)
    assert sol.size == 4
    assert verify_solution(four_guard_cross, sol)


def test_two_guard_room(two_guard_room):
    sol = solve(two_guard_room)
    assert sol.size == 2
    assert sol.certificate.kind is not CertificateKind.CAP_EXHAUSTED
    assert verify_solution(two_guard_room, sol)
    # the chains meet at the midpoints of the long walls, not at corners
    n = two_guard_room.n
    for c in sol.chains:
        i = c.start.edge if c.start.s == 0 else None
        if i is not None:
            prev, cur, nxt = (two_guard_room.vertices[(i + d) % n] for d in (-1, 0, 1))
            assert orient_sign(prev, cur, nxt) == 0
    assert {two_guard_room.point_at(c.start) for c in sol.chains} == {point(6, 10), point(6, 0)}
    assert {c.guard for c in sol.chains} == {point(-2, 5), point(14, 5)}


def test_detect_repetition_on_synthetic_state(square):
    pts = [bp(0), bp(1), bp(2), bp(3), bp(0, "1/2"), bp(1)]
    state = SequenceState(square, [pts[0]], [pts[0].position])
    state.seen[pts[0]] = 0
    cert = None
    for p in pts[1:]:
        _push(state, GreedyStep(state.points[-1], p, point(2, 2)))
        cert = detect_progress(state)
        state.seen.setdefault(p, state.T)
        if cert:
            break
    assert cert == Certificate(CertificateKind.REPETITION, 5, (1, 5))


def test_positive_fingerprint_on_synthetic_state(square):
    # k = 2 after the first lap; x_4 overtakes x_2 and leaves [x_1, x_2)
    pts = [bp(0), bp(1, "1/2"), bp(3), bp(0, "3/4"), bp(3, "1/2")]
    state = SequenceState(square, [pts[0]], [pts[0].position])
    state.seen[pts[0]] = 0
    certs = []
    for p in pts[1:]:
        _push(state, GreedyStep(state.points[-1], p, point(2, 2)))
        certs.append(detect_progress(state))
        state.seen.setdefault(p, state.T)
    assert state.k == 2
    assert any(c is not None and c.kind is CertificateKind.POSITIVE_FINGERPRINT for c in certs)


def test_extract_synthetic_cycle(square):
    cycle = [bp(0, "1/2"), bp(1, "1/2"), bp(2, "1/2"), bp(3, "1/2")]
    pts = [bp(0)] + cycle + [cycle[0]]
    state = SequenceState(square, [pts[0]], [pts[0].position])
    state.seen[pts[0]] = 0
    for p in pts[1:]:
        _push(state, GreedyStep(state.points[-1], p, point(2, 2)))
        state.certificate = state.certificate or detect_progress(state)
        state.seen.setdefault(p, state.T)
    sol = extract_solution(state)
    assert [c.start for c in sol.chains] == cycle
    assert sol.chains[-1].end == cycle[0]


def test_extract_needs_certificate(square):
    state = SequenceState(square, [bp(0)], [rational(0)])
    with pytest.raises(MalformedState):
        extract_solution(state)


def test_solution_json_round_trip(two_guard_room):
    sol = solve(two_guard_room)
    back = solution_from_document(sol.to_json())
    assert back.chains == sol.chains
    assert back.certificate.kind is sol.certificate.kind


def test_lower_bound(two_guard_room, four_guard_cross):
    assert 1 <= lower_bound(two_guard_room) <= 2
    assert lower_bound(four_guard_cross) in (3, 4)


def test_steps_contain_optimal_endpoints(four_guard_cross):
    opt = [c.start for c in solve(four_guard_cross).chains]
    state = run_sequence(four_guard_cross, bp(5), stop=False, cap=12)
    n = four_guard_cross.n
    for s in state.steps:
        iv = BoundaryInterval(s.start, s.end)
        assert any(interval_contains(iv, y) and y != s.start for y in opt) or (s.end.position - s.start.position) % n == 0


@given(st.integers(6, 12), st.integers(0, 10**6), st.data())
def test_step_is_maximal(n, seed, data):
    poly, _ = random_non_star(n, seed)
    x = BoundaryPoint(data.draw(st.integers(0, n - 1)), mpq(data.draw(st.integers(0, 5)), 6))
    step = greedy_interval(poly, x)
    assert step.end != x
    F = feasible_region(poly, BoundaryInterval(x, step.end))
    assert F.contains(step.guard)
    # nudging the end forward by a tiny amount empties the feasible region
    e = step.end
    nudge = BoundaryPoint(e.edge, e.s + (1 - e.s) / 10**9)
    assert intersect(F, visibility_region(poly, poly.point_at(nudge))).is_empty


@given(st.integers(6, 12), st.integers(0, 10**6))
def test_solutions_verify(n, seed):
    poly, _ = random_non_star(n, seed)
    sol = solve(poly)
    assert verify_solution(poly, sol)
    assert sol.first_revolution in (sol.size, sol.size + 1)
    assert lower_bound(poly) <= sol.size
