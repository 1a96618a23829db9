from functools import lru_cache

import pytest

from clustercat import ClusterCategory, DynkinType, Orientation, alternating_orientation


def orient(name: str, kind: str = "alternating") -> Orientation:
    d = DynkinType.parse(name)
    return alternating_orientation(d)[0] if kind == "alternating" else Orientation.linear(d)


@lru_cache(maxsize=None)
def category(name: str, kind: str = "alternating") -> ClusterCategory:
    return ClusterCategory(orient(name, kind))


SMALL = ["A1", "A2", "A3", "A4", "D4"]
ORIENTED = [(t, k) for t in SMALL for k in ("alternating", "linear")]


@pytest.fixture(params=ORIENTED, ids=lambda p: f"{p[0]}-{p[1]}")
def small_cc(request):
    return category(*request.param)
