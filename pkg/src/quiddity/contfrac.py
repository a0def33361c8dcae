"""Continued fractions and the strip triangulation linking them to
quiddities.

A rational r/s > 1 has a plus-sign expansion with positive terms of
even length and a minus-sign (Hirzebruch-Jung) expansion with terms
at least 2.  Laying out sum(a_i) triangles in a horizontal strip,
alternating a_1 base-down fans and a_2 base-up fans and so on, the
quiddity entries along the top row reproduce the minus-sign terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Dissection, DomainError


@dataclass(frozen=True)
class RegularContinuedFraction:
    """Plus-sign continued fraction: terms a_i >= 1, even length."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError("continued fraction needs at least one term")
        if len(self.terms) % 2:
            raise DomainError("plus-sign expansion must have even length")
        if any(t < 1 for t in self.terms):
            raise DomainError("plus-sign terms must be at least 1")


@dataclass(frozen=True)
class HirzebruchJungContinuedFraction:
    """Minus-sign continued fraction: every term at least 2."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError("continued fraction needs at least one term")
        if any(t < 2 for t in self.terms):
            raise DomainError("minus-sign terms must be at least 2")


def eval_regular(cf: RegularContinuedFraction) -> Fraction:
    """Exact value a_1 + 1/(a_2 + 1/(...)), always > 1 in lowest terms."""
    value = Fraction(cf.terms[-1])
    for a in reversed(cf.terms[:-1]):
        value = a + 1 / value
    return value


def eval_hj(cf: HirzebruchJungContinuedFraction) -> Fraction:
    """Exact value c_1 - 1/(c_2 - 1/(...)), always > 1 in lowest terms."""
    value = Fraction(cf.terms[-1])
    for c in reversed(cf.terms[:-1]):
        value = c - 1 / value
    return value


def hj_expansion(value: Fraction) -> HirzebruchJungContinuedFraction:
    """Minus-sign expansion of a rational > 1 by ceiling-division
    Euclid: c = ceil(value), recurse on 1/(c - value)."""
    if value <= 1:
        raise DomainError(f"minus-sign expansion needs a value > 1, got {value}")
    terms = []
    while True:
        c = -((-value.numerator) // value.denominator)
        terms.append(c)
        rest = c - value
        if rest == 0:
            return HirzebruchJungContinuedFraction(tuple(terms))
        value = 1 / rest


def regular_to_hj(cf: RegularContinuedFraction) -> HirzebruchJungContinuedFraction:
    """The minus-sign expansion of the same rational; evaluating both
    gives the same value exactly."""
    return hj_expansion(eval_regular(cf))


def strip_triangulation(
    cf: RegularContinuedFraction,
) -> tuple[Dissection, tuple[int, ...]]:
    """Triangulated strip whose fan sizes read off the plus-sign terms.

    The strip has 1 + sum of odd-position terms bottom vertices and
    1 + sum of even-position terms top vertices.  Returns the
    triangulation of the (sum+2)-gon (bottom row first, then the top
    row right to left, counterclockwise) together with the polygon
    indices of the top vertices left to right.  The quiddity entries at
    all but the last top vertex are the minus-sign terms.
    """
    bottom = 1 + sum(cf.terms[0::2])
    top = 1 + sum(cf.terms[1::2])
    n = bottom + top

    def bottom_vertex(k: int) -> int:
        return k

    def top_vertex(k: int) -> int:
        # top row runs right to left after the bottom row
        return bottom + (top - 1 - k)

    triangles = []
    p = q = 0
    for pos, a in enumerate(cf.terms):
        for _ in range(a):
            if pos % 2 == 0:
                triangles.append(
                    (bottom_vertex(p), bottom_vertex(p + 1), top_vertex(q))
                )
                p += 1
            else:
                triangles.append(
                    (bottom_vertex(p), top_vertex(q + 1), top_vertex(q))
                )
                q += 1
    assert p == bottom - 1 and q == top - 1

    edge_count: dict[tuple[int, int], int] = {}
    for tri in triangles:
        for i in range(3):
            u, v = tri[i], tri[(i + 1) % 3]
            edge = (min(u, v), max(u, v))
            edge_count[edge] = edge_count.get(edge, 0) + 1
    chords = [
        e for e, cnt in edge_count.items()
        if cnt == 2 or ((e[1] - e[0]) % n not in (1, n - 1))
    ]
    dissection = Dissection(n, tuple(chords))
    return dissection, tuple(top_vertex(k) for k in range(top))
