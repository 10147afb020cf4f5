import csv
import io
from dataclasses import replace

from hypothesis import given
from hypothesis import strategies as st

from contiguous_gallery.exact_num import point, rational
from contiguous_gallery.feasible_region import kernel_nonempty
from contiguous_gallery.greedy_solver import GreedyStep, default_start, run_sequence, solve
from contiguous_gallery.polygon_model import BoundaryPoint, Polygon
from contiguous_gallery.verify_bench import (CSV_FIELDS, bench_revolutions, bit_growth_check, lower_bound,
                                             random_non_star, random_polygon, rows_to_csv, summarize,
                                             verify_chains, verify_solution)


def test_solution_verifies(four_guard_cross):
    assert verify_solution(four_guard_cross, solve(four_guard_cross)).ok


def test_moved_guard_fails_visibility(four_guard_cross):
    sol = solve(four_guard_cross)
    chains = list(sol.chains)
    other = chains[2].guard
    chains[0] = replace(chains[0], guard=other)
    report = verify_chains(four_guard_cross, chains)
    assert not report.ok
    assert report.first.startswith("visibility")


def test_guard_outside_polygon(square):
    bad = [GreedyStep(BoundaryPoint(0, rational(0)), BoundaryPoint(0, rational(0)), point(9, 9))]
    assert verify_chains(square, bad).first.startswith("visibility")


def test_gap_fails_partition(four_guard_cross):
    chains = list(solve(four_guard_cross).chains)
    c = chains[1]
    chains[1] = replace(c, start=BoundaryPoint((c.start.edge + 1) % four_guard_cross.n, c.start.s))
    report = verify_chains(four_guard_cross, chains)
    assert not report.ok and report.first.startswith("partition")


def test_out_of_range_point(square):
    bad = [GreedyStep(BoundaryPoint(7, rational(0)), BoundaryPoint(7, rational(0)), point(1, 1))]
    assert "out of range" in verify_chains(square, bad).first


def test_lower_bounds(two_guard_room, four_guard_cross):
    assert 1 <= lower_bound(two_guard_room) <= 2
    assert lower_bound(four_guard_cross) in (3, 4)


def test_generator_small_and_deterministic():
    assert random_polygon(3, 5).n == 3
    assert random_polygon(12, 1) == random_polygon(12, 1)
    assert random_polygon(12, 1) != random_polygon(12, 2)


def test_generator_hundred_seeds():
    for seed in range(100):
        poly = random_polygon(12, seed)
        Polygon(poly.vertices)  # raises unless simple


def test_random_non_star():
    poly, seed = random_non_star(8, 3)
    assert kernel_nonempty(poly) is None
    assert random_non_star(8, 3) == (poly, seed)


def test_bench_harness():
    rows = bench_revolutions(12, (6, 10), seed=4)
    assert len(rows) == 12
    ok = {"Repetition", "PositiveFingerprint", "EdgeJumpEscape"}
    assert all(r["certificate"] in ok for r in rows)
    table = list(csv.DictReader(io.StringIO(rows_to_csv(rows))))
    assert tuple(table[0].keys()) == CSV_FIELDS
    summary = summarize(rows)
    assert summary["trials"] == 12
    assert sum(summary["certificates"].values()) == 12


def test_bench_parallel_matches_serial():
    a = bench_revolutions(4, (6, 8), seed=9)
    b = bench_revolutions(4, (6, 8), seed=9, workers=2)
    strip = lambda rows: [{k: v for k, v in r.items() if k != "wall_time_ms"} for r in rows]
    assert strip(a) == strip(b)


def test_bit_growth_on_fixture(four_guard_cross):
    state = run_sequence(four_guard_cross, default_start(four_guard_cross))
    report = bit_growth_check(state)
    assert report.ok
    assert report.constant >= 0


def test_no_growth_once_periodic(four_guard_cross):
    # started on an optimal cycle the sequence repeats, and so do its bit sizes
    sol = solve(four_guard_cross)
    k = sol.size
    state = run_sequence(four_guard_cross, sol.chains[0].start, cap=3 * k, stop=False)
    assert state.points[k] == state.points[0]
    assert state.max_bits[:k] == state.max_bits[k:2 * k] == state.max_bits[2 * k:]


@given(st.integers(6, 12), st.integers(0, 10**6))
def test_bit_growth_random(n, seed):
    poly, _ = random_non_star(n, seed)
    state = run_sequence(poly, default_start(poly))
    assert bit_growth_check(state).ok
