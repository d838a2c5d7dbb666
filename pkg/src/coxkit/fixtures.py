"""Named fans used throughout the tests and the CLI.

The five Fano fourfolds are rebuilt from their Cox-ring data (grading
matrix and irrelevant ideal) rather than copied from a database.  The
number in each name is the index of the variety in the usual database of
smooth toric Fano fourfolds (entries 24 to 147).
"""

from __future__ import annotations

from functools import lru_cache

from .coxring import GradingData, fan_from_bunch
from .fan import Fan
from .models import BlowupModel, blowup_grading, z1_grading

# grading matrix rows, irrelevant components (0-based variable positions)
FANO_FOURFOLDS: dict[str, tuple[list[list[int]], list[set[int]]]] = {
    "fano44": ([[0, 0, 1, 1, 0, 1], [1, 1, 2, 0, 1, 2]], [{0, 1, 4}, {2, 3, 5}]),
    "fano70": ([[0, 0, 1, 1, 0, 1], [1, 1, 0, 0, 1, 1]], [{0, 1, 4}, {2, 3, 5}]),
    "fano141": ([[0, 0, 1, 1, 0, 1], [1, 1, 1, 0, 1, 1]], [{0, 1, 4}, {2, 3, 5}]),
    "fano146": ([[0, 0, 1, 1, 0, 1], [1, 1, 0, 0, 1, 0]], [{0, 1, 4}, {2, 3, 5}]),
    "fano147": ([[1, 1, 1, 1, 1]], [{0, 1, 2, 3, 4}]),
}

FANO_NAMES = tuple(FANO_FOURFOLDS)

NONNEF_GRADING = ([[1, 1, -1, 1, -1, 0], [0, 0, 1, 1, 1, 1]], [{0, 1}, {2, 3, 4, 5}])

BLOWUP_RANGE = (3, 4, 5)


def fano_grading(name: str) -> GradingData:
    q, primes = FANO_FOURFOLDS[name]
    return GradingData.from_primes(q, primes)


def nonnef_grading() -> GradingData:
    return GradingData.from_primes(*NONNEF_GRADING)


def _p2() -> Fan:
    return Fan(2, [(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}], name="p2")


def _p4() -> Fan:
    rays = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)]
    return Fan(4, rays, [set(range(5)) - {i} for i in range(5)], name="p4")


def _p1xp1() -> Fan:
    return Fan(2, [(1, 0), (-1, 0), (0, 1), (0, -1)], [{0, 2}, {0, 3}, {1, 2}, {1, 3}], name="p1xp1")


def hirzebruch(a: int) -> Fan:
    """F_a with rays (1,0), (0,1), (-1,a), (0,-1)."""
    return Fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)], [{0, 1}, {1, 2}, {2, 3}, {3, 0}], name="f%d" % a)


def weighted_p112() -> Fan:
    return Fan(2, [(1, 0), (0, 1), (-1, -2)], [{0, 1}, {1, 2}, {0, 2}], name="p112")


def _builders():
    out = {name: (lambda name=name: fan_from_bunch(fano_grading(name), name=name)) for name in FANO_NAMES}
    out["p2"] = _p2
    out["p4"] = _p4
    out["p1xp1"] = _p1xp1
    out["nonnef"] = lambda: fan_from_bunch(nonnef_grading(), name="nonnef")
    for n in BLOWUP_RANGE:
        out["blowup_n%d" % n] = lambda n=n: fan_from_bunch(blowup_grading(BlowupModel(n, 3)), name="blowup_n%d" % n)
        for d in (3, 4, 5):
            key = "z1_n%d_d%d" % (n, d)
            out[key] = lambda n=n, d=d, key=key: fan_from_bunch(z1_grading(BlowupModel(n, d)), name=key)
    return out


_BUILDERS = _builders()

FIXTURE_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str) -> Fan:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError("unknown fixture %r; known: %s" % (name, ", ".join(FIXTURE_NAMES))) from None
