"""Sparse Laurent polynomials with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import LaurentViolation

Exponent = tuple[int, ...]


def _order(e: Exponent) -> tuple:
    # graded lexicographic
    return (sum(e), e)


class LaurentPoly:
    """An element of Z[u_1^±1, ..., u_n^±1].

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has the wrong length")
            acc[e] = acc.get(e, 0) + c
        self.nvars = nvars
        self.terms = {e: c for e, c in sorted(acc.items(), key=lambda t: _order(t[0])) if c}
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: int = 1) -> "LaurentPoly":
        e = tuple(exps)
        return cls(len(e), {e: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        """The initial variable ``u_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(e)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def shifted(self, by: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial ``u^by``."""
        b = tuple(by)
        return LaurentPoly(self.nvars, {tuple(x + y for x, y in zip(e, b)): c for e, c in self.terms.items()})

    def leading(self) -> tuple[Exponent, int]:
        e = next(reversed(self.terms))
        return e, self.terms[e]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """``self / other``, raising LaurentViolation unless the quotient is
        again a Laurent polynomial with integer coefficients."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return self
        ma, mb = self.min_exponents(), other.min_exponents()
        num = self.shifted(-x for x in ma)
        den = other.shifted(-x for x in mb)
        quot = _poly_div(num, den)
        return quot.shifted(a - b for a, b in zip(ma, mb))

    def evaluate(self, values: Iterable) -> object:
        vals = list(values)
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                t = t * v**k
            total = total + t
        return total

    def sort_key(self) -> tuple:
        return tuple((_order(e), c) for e, c in self.terms.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        low = tuple(min(0, x) for x in self.min_exponents())
        num = self.shifted(-x for x in low)
        top = _poly_str(num)
        den = _monomial_str(tuple(-x for x in low))
        if den == "1":
            return top
        if len(num.terms) > 1:
            top = f"({top})"
        return f"{top}/{den}" if "*" not in den else f"{top}/({den})"


def _monomial_str(e: Exponent) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"u{i + 1}")
        elif k:
            parts.append(f"u{i + 1}^{k}")
    return "*".join(parts) or "1"


def _poly_str(p: LaurentPoly) -> str:
    out = []
    for e, c in p.terms.items():
        mono = _monomial_str(e)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _poly_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division of polynomials (non-negative exponents)."""
    lead_e, lead_c = den.leading()
    rem = dict(num.terms)
    quot: dict[Exponent, int] = {}
    while rem:
        e = max(rem, key=_order)
        c = rem[e]
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if min(shift) < 0 or c % lead_c:
            raise LaurentViolation(f"{num} is not divisible by {den}")
        q = c // lead_c
        quot[shift] = q
        for de, dc in den.terms.items():
            t = tuple(a + b for a, b in zip(de, shift))
            v = rem.get(t, 0) - q * dc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return LaurentPoly(num.nvars, quot)
