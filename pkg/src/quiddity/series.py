"""Truncated bivariate formal power series over the integers, the
fixed-point solver for the dissection functional equations, and
Lagrange inversion.

A series is triangular: the coefficient of z^n w^m is stored for
0 <= m <= n <= order.  Every series arising from the dissection
equations satisfies m <= n (each cell contributes at least one z), so
the triangular table loses nothing.  Rational sub-expressions such as
1/(1 - zS) are expanded as geometric series up to the truncation
order; no exact division of series is ever needed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import DomainError


class BivariateSeries:
    """Polynomial-in-w coefficients attached to powers of z, truncated
    at a fixed z order.  Immutable; arithmetic is exact."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple[tuple[int, ...], ...]):
        if order < 0:
            raise DomainError(f"truncation order must be nonnegative, got {order}")
        if len(coeffs) != order + 1 or any(len(row) != n + 1 for n, row in enumerate(coeffs)):
            raise DomainError("coefficient table must be triangular of the given order")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls(order, tuple(tuple(0 for _ in range(n + 1)) for n in range(order + 1)))

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        return cls.monomial(order, 0, 0)

    @classmethod
    def monomial(cls, order: int, n: int, m: int, coeff: int = 1) -> "BivariateSeries":
        """The series coeff * z^n w^m (zero if it exceeds the order)."""
        if not 0 <= m <= n:
            raise DomainError(f"monomial needs 0 <= m <= n, got z^{n} w^{m}")
        rows = [[0] * (k + 1) for k in range(order + 1)]
        if n <= order:
            rows[n][m] = coeff
        return cls(order, tuple(tuple(r) for r in rows))

    def coefficient(self, n: int, m: int) -> int:
        if not 0 <= n <= self.order:
            raise DomainError(f"z-order {n} outside [0, {self.order}]")
        if not 0 <= m <= n:
            raise DomainError(f"w-order {m} outside [0, {n}]")
        return self.coeffs[n][m]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BivariateSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _require_same_order(self, other: "BivariateSeries") -> None:
        if self.order != other.order:
            raise DomainError(
                f"series order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_order(other)
        return BivariateSeries(
            self.order,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.coeffs, other.coeffs)
            ),
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_order(other)
        return BivariateSeries(
            self.order,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.coeffs, other.coeffs)
            ),
        )

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._require_same_order(other)
        order = self.order
        rows = [[0] * (n + 1) for n in range(order + 1)]
        for n1, row1 in enumerate(self.coeffs):
            for m1, c1 in enumerate(row1):
                if not c1:
                    continue
                for n2 in range(order - n1 + 1):
                    row2 = other.coeffs[n2]
                    for m2, c2 in enumerate(row2):
                        if c2:
                            rows[n1 + n2][m1 + m2] += c1 * c2
        return BivariateSeries(order, tuple(tuple(r) for r in rows))

    def scale(self, factor: int) -> "BivariateSeries":
        return BivariateSeries(
            self.order,
            tuple(tuple(factor * c for c in row) for row in self.coeffs),
        )

    def __pow__(self, exponent: int) -> "BivariateSeries":
        if exponent < 0:
            raise DomainError("negative series powers are not defined here")
        result = BivariateSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, dz: int, dw: int) -> "BivariateSeries":
        """Multiply by z^dz w^dw."""
        return self * BivariateSeries.monomial(self.order, dz, dw)

    def nonzero_terms(self) -> list[tuple[int, int, int]]:
        return [
            (n, m, c)
            for n, row in enumerate(self.coeffs)
            for m, c in enumerate(row)
            if c
        ]


def geometric_sum(s: BivariateSeries) -> BivariateSeries:
    """1 + s + s^2 + ... truncated; requires s to have no constant
    term, which makes the sum finite at the truncation order."""
    if s.coeffs[0][0] != 0:
        raise DomainError("geometric expansion needs a series with zero constant term")
    total = BivariateSeries.one(s.order)
    power = BivariateSeries.one(s.order)
    for _ in range(s.order):
        power = power * s
        total = total + power
    return total


@dataclass(frozen=True)
class EquationSpec:
    """A named functional equation S = F(S) for a dissection-counting
    series, with F mapping series to series at a fixed order."""

    name: str
    apply: Callable[[BivariateSeries], BivariateSeries]


def catalan_equation() -> EquationSpec:
    def f(s: BivariateSeries) -> BivariateSeries:
        one = BivariateSeries.one(s.order)
        return one + (s * s).shift(1, 0)

    return EquationSpec("catalan", f)


def kirkman_cayley_equation() -> EquationSpec:
    # S = 1 + w z S^2 / (1 - z S)
    def f(s: BivariateSeries) -> BivariateSeries:
        one = BivariateSeries.one(s.order)
        return one + (s * s).shift(1, 1) * geometric_sum(s.shift(1, 0))

    return EquationSpec("kirkman-cayley", f)


def ell_periodic_equation(ell: int) -> EquationSpec:
    # S = 1 + w z S^2 / (1 - z^ell S^ell)
    if ell < 1:
        raise DomainError(f"period must be at least 1, got {ell}")

    def f(s: BivariateSeries) -> BivariateSeries:
        one = BivariateSeries.one(s.order)
        return one + (s * s).shift(1, 1) * geometric_sum((s ** ell).shift(ell, 0))

    return EquationSpec(f"ell-periodic({ell})", f)


def tri_quad_equation() -> EquationSpec:
    # S = 1 + w z S^2 + w z^2 S^3
    def f(s: BivariateSeries) -> BivariateSeries:
        one = BivariateSeries.one(s.order)
        return one + (s * s).shift(1, 1) + (s * s * s).shift(2, 1)

    return EquationSpec("tri-quad", f)


def p_equation() -> EquationSpec:
    # S = 1 + w z S^2 / (1 - z^3 S^2)
    def f(s: BivariateSeries) -> BivariateSeries:
        one = BivariateSeries.one(s.order)
        return one + (s * s).shift(1, 1) * geometric_sum((s * s).shift(3, 0))

    return EquationSpec("p", f)


def solve_fixed_point(spec: EquationSpec, max_z_order: int) -> BivariateSeries:
    """The unique series with constant term 1 satisfying S = F(S) up to
    the truncation order, by iterating S <- F(S) from S = 1.

    Each iteration fixes one more z order, so order+1 iterations
    suffice; the fixed point is then re-checked and any residual
    signals a bug in the equation definition.
    """
    s = BivariateSeries.one(max_z_order)
    for _ in range(max_z_order + 1):
        s = spec.apply(s)
    if spec.apply(s) != s:
        raise AssertionError(f"iteration of {spec.name} failed to reach a fixed point")
    return s


def compose_q(p: BivariateSeries) -> BivariateSeries:
    """Quiddity-counting series from the auxiliary fixed point P:
    Q = 1 + w z P^2 / (1 - z^3 P^3), expanded geometrically.

    ``p`` must solve the auxiliary equation at its own truncation
    order; anything else is rejected.
    """
    if p_equation().apply(p) != p:
        raise DomainError("input series does not solve the auxiliary equation")
    one = BivariateSeries.one(p.order)
    return one + (p * p).shift(1, 1) * geometric_sum((p ** 3).shift(3, 0))


def coefficient(s: BivariateSeries, n: int, m: int) -> int:
    """Exact coefficient of z^n w^m."""
    return s.coefficient(n, m)


def lagrange_invert(phi: BivariateSeries, n: int) -> tuple[int, ...]:
    """Coefficient of z^n in the series y(z) inverting y -> y/phi(y),
    as a dense polynomial in w (index = w degree).

    Uses n [z^n] y = [y^{n-1}] phi^n; the division by n must be exact
    on every coefficient and is asserted.
    """
    if n < 1:
        raise DomainError(f"inversion index must be at least 1, got {n}")
    if phi.coeffs[0][0] == 0:
        raise DomainError("phi must have a nonzero constant term")
    if phi.order < n - 1:
        raise DomainError(
            f"phi is truncated at order {phi.order}, need at least {n - 1}"
        )
    power = phi ** n
    row = power.coeffs[n - 1]
    out = []
    for m, value in enumerate(row):
        q, r = divmod(value, n)
        if r:
            raise AssertionError(
                f"inversion coefficient z^{n} w^{m} is not integral: {value}/{n}"
            )
        out.append(q)
    return tuple(out)


def series_terms_json(s: BivariateSeries) -> list[dict[str, object]]:
    """Nonzero terms in the dump format: {n, m, coeff-as-string}."""
    return [
        {"n": n, "m": m, "coeff": str(c)}
        for n, m, c in s.nonzero_terms()
    ]


NAMED_EQUATIONS: dict[str, Callable[..., EquationSpec]] = {
    "catalan": catalan_equation,
    "kirkman-cayley": kirkman_cayley_equation,
    "ell-periodic": ell_periodic_equation,
    "tri-quad": tri_quad_equation,
    "p": p_equation,
}


def solve_named(name: str, max_z_order: int, ell: Optional[int] = None) -> BivariateSeries:
    """Solve one of the named equations; ``q`` composes the quiddity
    series from the auxiliary solution."""
    if name == "q":
        return compose_q(solve_fixed_point(p_equation(), max_z_order))
    if name not in NAMED_EQUATIONS:
        raise DomainError(f"unknown equation {name!r}")
    if name == "ell-periodic":
        if ell is None:
            raise DomainError("ell-periodic equation needs a period")
        return solve_fixed_point(ell_periodic_equation(ell), max_z_order)
    return solve_fixed_point(NAMED_EQUATIONS[name](), max_z_order)
