"""Watch the greedy sequence settle on the four-guard cross.

Each greedy step extends a chain clockwise as far as one guard can see.
Started from different vertices, the first lap may use one chain too many,
but the sequence soon repeats a point exactly and the repeating stretch is
an optimal partition.
"""

from contiguous_gallery import fixtures
from contiguous_gallery.exact_num import format_rational
from contiguous_gallery.greedy_solver import extract_solution, run_sequence
from contiguous_gallery.polygon_model import BoundaryPoint
from contiguous_gallery.exact_num import ZERO


def show(poly, start: BoundaryPoint) -> None:
    state = run_sequence(poly, start)
    print(f"start {start}: first lap uses {state.first_revolution} chains")
    for t, step in enumerate(state.steps, start=1):
        laps = state.revolutions(t)
        guard = ", ".join(format_rational(c) for c in step.guard)
        print(f"  x_{t:<2} = {str(step.end):28} lap {laps:5.3f}  guard ({guard})")
    cert = state.certificate
    print(f"  certificate {cert.kind.value} at step {cert.index}, witness {cert.witness}")
    sol = extract_solution(state)
    print(f"  optimal: {sol.size} chains starting at {', '.join(str(c.start) for c in sol.chains)}\n")


def main() -> None:
    poly = fixtures.four_guard_cross()
    for v in (0, 3, 9):
        show(poly, BoundaryPoint(v, ZERO))


if __name__ == "__main__":
    main()
