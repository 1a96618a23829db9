"""Simply-laced Dynkin diagrams, orientations and root combinatorics.

Vertices are numbered from 1 in the canonical way:

* ``A_n``: the path 1-2-...-n
* ``D_n``: the path 1-...-(n-2), with n-1 and n both attached to n-2
* ``E_n``: Bourbaki, i.e. the chain 1-3-4-5-...-n with 2 attached to 4

Roots are plain integer tuples of length ``rank``; entry ``i-1`` is the
coefficient of the simple root of vertex ``i``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import InvalidOrientation, InvalidType, NoReduction

Root = tuple[int, ...]

_COXETER = {"E": {6: 12, 7: 18, 8: 30}}


@dataclass(frozen=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s == "A" and n >= 1:
            return
        if s == "D" and n >= 4:
            return
        if s == "E" and n in (6, 7, 8):
            return
        raise InvalidType(f"no Dynkin diagram of type {s}{n}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise InvalidType(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        if self.series == "A":
            return tuple((i, i + 1) for i in range(1, n))
        if self.series == "D":
            path = [(i, i + 1) for i in range(1, n - 2)]
            return tuple(path + [(n - 2, n - 1), (n - 2, n)])
        chain = [(1, 3)] + [(i, i + 1) for i in range(3, n)]
        return tuple(chain + [(2, 4)])

    @cached_property
    def neighbours(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = {i: set() for i in self.vertices}
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return {i: frozenset(v) for i, v in nb.items()}

    @property
    def coxeter_number(self) -> int:
        if self.series == "A":
            return self.rank + 1
        if self.series == "D":
            return 2 * self.rank - 2
        return _COXETER["E"][self.rank]


def coxeter_data(dtype: DynkinType) -> tuple[int, int]:
    """Return ``(h, m)`` with ``h`` the Coxeter number and ``m = h - 1``."""
    h = dtype.coxeter_number
    return h, h - 1


@dataclass(frozen=True)
class Orientation:
    dtype: DynkinType
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "arrows", frozenset(tuple(a) for a in self.arrows))
        undirected = {frozenset(a) for a in self.arrows}
        expected = {frozenset(e) for e in self.dtype.edges}
        if any(i == j for i, j in self.arrows):
            raise InvalidOrientation("orientation contains a loop")
        if len(undirected) != len(self.arrows):
            raise InvalidOrientation("an edge is oriented twice")
        if undirected != expected:
            raise InvalidOrientation(
                f"arrows {sorted(self.arrows)} do not orient the diagram of {self.dtype}"
            )

    @classmethod
    def linear(cls, dtype: DynkinType) -> "Orientation":
        """Every edge oriented from its smaller to its larger endpoint."""
        return cls(dtype, frozenset(dtype.edges))

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def to_json(self) -> dict:
        return {"type": str(self.dtype), "arrows": [list(a) for a in self.sorted_arrows()]}

    @classmethod
    def from_json(cls, data: dict) -> "Orientation":
        return cls(DynkinType.parse(data["type"]), frozenset(tuple(a) for a in data["arrows"]))

    def opposite(self) -> "Orientation":
        return Orientation(self.dtype, frozenset((j, i) for i, j in self.arrows))

    def paths_from(self, i: int) -> Root:
        """Number of paths from ``i`` to each vertex (0 or 1 on a tree)."""
        out = [0] * self.dtype.rank
        stack = [i]
        while stack:
            v = stack.pop()
            out[v - 1] += 1
            stack.extend(b for a, b in self.arrows if a == v)
        return tuple(out)

    def paths_to(self, i: int) -> Root:
        out = [0] * self.dtype.rank
        stack = [i]
        while stack:
            v = stack.pop()
            out[v - 1] += 1
            stack.extend(a for a, b in self.arrows if b == v)
        return tuple(out)


@dataclass(frozen=True)
class Bipartition:
    plus: frozenset[int]
    minus: frozenset[int]

    def validate(self, dtype: DynkinType) -> None:
        if self.plus & self.minus or (self.plus | self.minus) != set(dtype.vertices):
            raise InvalidType("bipartition does not partition the vertex set")
        for i, j in dtype.edges:
            if (i in self.plus) == (j in self.plus):
                raise InvalidType(f"edge {i}-{j} lies inside one part")

    def swapped(self) -> "Bipartition":
        return Bipartition(self.minus, self.plus)


def alternating_orientation(dtype: DynkinType) -> tuple[Orientation, Bipartition]:
    """Two-colour the tree by distance parity from vertex 1.

    Even distance goes to ``minus``, odd to ``plus``; arrows run minus -> plus.
    """
    dist = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in sorted(dtype.neighbours[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    minus = frozenset(v for v, d in dist.items() if d % 2 == 0)
    plus = frozenset(v for v, d in dist.items() if d % 2 == 1)
    arrows = frozenset((i, j) if i in minus else (j, i) for i, j in dtype.edges)
    return Orientation(dtype, arrows), Bipartition(plus, minus)


# -- roots -----------------------------------------------------------------


def simple_root(dtype: DynkinType, i: int, sign: int = 1) -> Root:
    v = [0] * dtype.rank
    v[i - 1] = sign
    return tuple(v)


def reflect(dtype: DynkinType, i: int, a: Root) -> Root:
    """Simple reflection ``s_i`` on a coefficient vector."""
    pairing = 2 * a[i - 1] - sum(a[j - 1] for j in dtype.neighbours[i])
    v = list(a)
    v[i - 1] -= pairing
    return tuple(v)


def root_key(a: Root) -> tuple:
    """Graded lexicographic key: height first, then the coefficient tuple."""
    return (sum(a), a)


@lru_cache(maxsize=None)
def positive_roots(dtype: DynkinType) -> list[Root]:
    seen = {simple_root(dtype, i) for i in dtype.vertices}
    queue = deque(sorted(seen))
    while queue:
        a = queue.popleft()
        for i in dtype.vertices:
            b = reflect(dtype, i, a)
            if all(c >= 0 for c in b) and b not in seen:
                seen.add(b)
                queue.append(b)
    return sorted(seen, key=root_key)


@lru_cache(maxsize=None)
def almost_positive_roots(dtype: DynkinType) -> list[Root]:
    negs = [simple_root(dtype, i, -1) for i in dtype.vertices]
    return sorted(negs + positive_roots(dtype), key=root_key)


def negative_simple_index(a: Root) -> int | None:
    """Vertex ``i`` if ``a == -alpha_i``, else None."""
    if sum(a) == -1 and min(a) == -1 and all(c <= 0 for c in a):
        return a.index(-1) + 1
    return None


def is_almost_positive(dtype: DynkinType, a: Root) -> bool:
    return tuple(a) in set(almost_positive_roots(dtype))


def sigma(dtype: DynkinType, i: int, a: Root) -> Root:
    j = negative_simple_index(a)
    if j is not None and j != i:
        return a
    return reflect(dtype, i, a)


def tau_pm(dtype: DynkinType, sign: str, a: Root, bip: Bipartition) -> Root:
    part = bip.plus if sign == "+" else bip.minus
    for i in sorted(part):
        a = sigma(dtype, i, a)
    return a


def compatibility_degree(dtype: DynkinType, a: Root, b: Root, bip: Bipartition) -> int:
    """Fomin-Zelevinsky compatibility degree by tau_+/tau_- reduction.

    The self-degree is 0 by convention.
    """
    if a == b:
        return 0
    cap = 2 * (dtype.coxeter_number + 2)
    sign = "+"
    for _ in range(cap + 1):
        i = negative_simple_index(a)
        if i is not None:
            return b[i - 1]
        a, b = tau_pm(dtype, sign, a, bip), tau_pm(dtype, sign, b, bip)
        sign = "-" if sign == "+" else "+"
    raise NoReduction(f"no reduction of {a} within {cap} alternations")


def euler_form(d: Iterable[int], e: Iterable[int], q: Orientation) -> int:
    d, e = tuple(d), tuple(e)
    val = sum(x * y for x, y in zip(d, e))
    return val - sum(d[i - 1] * e[j - 1] for i, j in q.arrows)


# -- labels ----------------------------------------------------------------


def root_label(a: Root) -> str:
    """Compact label: ``-i`` for a negative simple, otherwise the vertex
    indices repeated by multiplicity (``123``, ``12234``)."""
    i = negative_simple_index(a)
    if i is not None:
        return f"-{i}"
    sep = "" if len(a) < 10 else "+"
    return sep.join(str(k + 1) for k, c in enumerate(a) for _ in range(c))


def parse_root(text: str, rank: int) -> Root:
    """Inverse of :func:`root_label`; also accepts ``1+2+3`` and ``[1,1,0]``."""
    t = text.strip()
    if t.startswith("["):
        vals = [int(x) for x in t.strip("[]").split(",") if x.strip()]
        if len(vals) != rank:
            raise ValueError(f"root {text!r} has wrong length")
        return tuple(vals)
    v = [0] * rank
    if t.startswith("-"):
        v[int(t[1:]) - 1] = -1
        return tuple(v)
    parts = t.split("+") if "+" in t or rank >= 10 else list(t)
    for p in parts:
        k = int(p)
        if not 1 <= k <= rank:
            raise ValueError(f"vertex {k} out of range in {text!r}")
        v[k - 1] += 1
    return tuple(v)
