"""Solve every hand-made polygon three ways and draw the unrestricted answers.

    python3 demos/tour_fixtures.py [OUTDIR]

Writes one SVG per fixture (default: demos/out/).
"""

import sys
import time
from pathlib import Path

from contiguous_gallery import fixtures
from contiguous_gallery.greedy_solver import solve
from contiguous_gallery.render import render_svg
from contiguous_gallery.restricted_variants import solve_guard_restricted, solve_interval_restricted
from contiguous_gallery.verify_bench import verify_solution


def main(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    print(f"{'polygon':24} {'n':>3} {'free':>5} {'vertex ends':>12} {'vertex guards':>14}  certificate")
    for name, make in fixtures.ALL.items():
        poly = make()
        t0 = time.perf_counter()
        sol = solve(poly)
        dt = time.perf_counter() - t0
        assert verify_solution(poly, sol)
        iv = solve_interval_restricted(poly).size
        gv = solve_guard_restricted(poly).size
        print(f"{name:24} {poly.n:>3} {sol.size:>5} {iv:>12} {gv:>14}  {sol.certificate.kind.value} ({dt:.2f}s)")
        (outdir / f"{name}.svg").write_text(render_svg(poly, sol.chains))
    print(f"pictures in {outdir}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "out")
