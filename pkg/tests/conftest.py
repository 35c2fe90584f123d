import functools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
sys.path.insert(0, os.path.dirname(__file__))

from gradedhecke.combin import QuiverData  # noqa: E402
from gradedhecke.graded import GradedAlgebra  # noqa: E402
from gradedhecke.klr import KLRConfig, KLRGenerators  # noqa: E402
from gradedhecke.scalars import make_field  # noqa: E402

# (p, q, e, kappa); p = 0 means the rationals
E2 = (5, 4, 2)
E3 = (7, 2, 3)
E0 = (0, 2, 0)


@functools.lru_cache(maxsize=None)
def generators(p, q, e, kappa, n) -> KLRGenerators:
    return KLRGenerators(KLRConfig(make_field(p), q, QuiverData(e, tuple(kappa)), n))


@functools.lru_cache(maxsize=None)
def graded(p, q, e, kappa, n) -> GradedAlgebra:
    return GradedAlgebra(generators(p, q, e, kappa, n))


CRITERIA = {}


def record(number: int, ok: bool, detail: str = ""):
    """Store the verdict for one acceptance criterion."""
    prev = CRITERIA.get(number)
    if prev is not None:
        ok = ok and prev[0]
        detail = "; ".join(x for x in (prev[1], detail) if x)
    CRITERIA[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k]
        tr.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else ""))
