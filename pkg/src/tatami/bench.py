"""Step-count benchmarks for the generators.

Constant amortised time is checked by counting elementary operations, not
by timing, so the numbers are identical on every machine.  A run may be
capped at ``limit`` outputs; the ratio is then taken over the prefix of the
traversal, which is how the large parameter points stay affordable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional

from .instrument import OpCounter
from .ksum import gen_ksum, init_c4, tri
from .square import count_vd, gen_vh, max_k
from .strip import gen_strip

# outputs per parameter point in the regression suites
SUITE_LIMIT = 2000
TOLERANCE = Fraction(11, 10)

SUITES = {
    "subsets": [("n", n) for n in (10, 15, 20, 25)],
    "square": [("n", n) for n in (16, 24, 32)],
    "strip": [("n", n) for n in (8, 10, 12)],
}
STRIP_SUITE_HEIGHT = 4


@dataclass(frozen=True)
class BenchReport:
    label: str
    steps: int
    outputs: int
    preprocessing_steps: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.steps, max(1, self.outputs))

    def format(self) -> str:
        return (
            f"label={self.label} steps={self.steps} outputs={self.outputs} "
            f"preprocessing_steps={self.preprocessing_steps} "
            f"ratio={self.ratio} ratio_float={float(self.ratio):.4f}"
        )


def _report(label: str, oc: OpCounter) -> BenchReport:
    return BenchReport(label, oc.steps, oc.outputs, oc.preprocessing)


def bench_subsets(n: int, k: int, limit: Optional[int] = None) -> BenchReport:
    oc = OpCounter()
    state = init_c4(n, oc)
    gen_ksum(state, n, k, counter=oc, limit=limit)
    return _report(f"subsets(n={n},k={k})", oc)


def bench_square(n: int, k: int, limit: Optional[int] = None) -> BenchReport:
    oc = OpCounter()
    gen_vh(n, k, counter=oc, limit=limit)
    return _report(f"square(n={n},k={k})", oc)


def bench_strip(r: int, n: int, limit: Optional[int] = None) -> BenchReport:
    oc = OpCounter()
    gen_strip(r, n, counter=oc, limit=limit)
    return _report(f"strip(r={r},n={n})", oc)


def subsets_points(n: int) -> Iterable[int]:
    return range(tri(n) + 1)


def square_points(n: int) -> Iterable[int]:
    return (k for k in range(max_k(n) + 1) if count_vd(n, k))


def run_suite(name: str, limit: int = SUITE_LIMIT) -> list[BenchReport]:
    """Every parameter point of one regression suite."""
    out = []
    for _, n in SUITES[name]:
        if name == "subsets":
            # one state per n, reused across k as the generator intends
            state = init_c4(n)
            for k in subsets_points(n):
                oc = OpCounter()
                gen_ksum(state, n, k, counter=oc, limit=limit)
                out.append(_report(f"subsets(n={n},k={k})", oc))
        elif name == "square":
            out.extend(bench_square(n, k, limit) for k in square_points(n))
        else:
            out.append(bench_strip(STRIP_SUITE_HEIGHT, n, limit))
    return out


def worst_ratio(reports: Iterable[BenchReport]) -> Fraction:
    return max(r.ratio for r in reports)


def load_constants() -> dict[str, Fraction]:
    text = resources.files("tatami").joinpath("cat_constants.json").read_text()
    return {name: Fraction(value) for name, value in json.loads(text).items()}


def measure_constants(limit: int = SUITE_LIMIT) -> dict[str, str]:
    """Fresh worst-case ratios for every suite, as strings for the JSON file."""
    return {name: str(worst_ratio(run_suite(name, limit))) for name in SUITES}
