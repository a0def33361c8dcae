"""Oracle-equivalence suites: brute-force enumeration against every
closed form, the surgery canonical-form properties, and the
counterexample searches.  Backs the ``verify-all`` command and the
acceptance tests.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import formulas, series
from .core import Dissection, dihedral_orbit, quiddity
from .enumeration import (
    CellFilter,
    count_dissections,
    enumerate_dissections,
    quiddity_classes,
)
from .modular import (
    MINUS_IDENTITY,
    NEITHER,
    classify_monodromy,
    verify_monodromy_correspondence,
)
from .surgery import (
    BasedDissection,
    canonicalize_maximally_open,
    is_maximally_open,
    surgery_class,
)
from .contfrac import RegularContinuedFraction, regular_to_hj, strip_triangulation


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f" — {self.detail}" if self.detail else "")


def _three_periodic_family(max_n: int) -> Iterator[tuple[int, int, list[Dissection]]]:
    ell3 = CellFilter.ell_periodic(3)
    for n_vertices in range(3, max_n + 1):
        for m in range(1, n_vertices - 1):
            if (n_vertices - 2 - m) % 3:
                continue
            yield n_vertices, m, list(enumerate_dissections(n_vertices, m, ell3))


def check_dissection_counts(max_n: int) -> CheckResult:
    """Brute-force counts against all four closed forms."""
    checked = 0
    for n_vertices in range(3, max_n + 1):
        n = n_vertices - 2
        for m in range(1, n_vertices - 1):
            if count_dissections(n_vertices, m) != formulas.kirkman_cayley(n, m):
                return CheckResult("dissection-counts", False, f"general count at N={n_vertices}, m={m}")
            for ell in (1, 2, 3):
                if count_dissections(n_vertices, m, CellFilter.ell_periodic(ell)) != \
                        formulas.ell_periodic_count(n, m, ell):
                    return CheckResult("dissection-counts", False, f"period {ell} at N={n_vertices}, m={m}")
            if count_dissections(n_vertices, m, CellFilter.size_set({3, 4})) != \
                    formulas.tri_quad_count(n, m):
                return CheckResult("dissection-counts", False, f"triangle/quad at N={n_vertices}, m={m}")
            if n % m == 0:
                if count_dissections(n_vertices, m, CellFilter.equal_size(n // m + 2)) != \
                        formulas.fuss(n, m):
                    return CheckResult("dissection-counts", False, f"equal-size at N={n_vertices}, m={m}")
            checked += 4
    return CheckResult("dissection-counts", True, f"{checked} closed-form comparisons, N <= {max_n}")


def check_quiddity_counts(max_n: int) -> CheckResult:
    """Distinct 3-periodic quiddities against the closed-form count,
    including the column totals over all cell counts."""
    for n_vertices in range(3, max_n + 1):
        n = n_vertices - 2
        total = set()
        for m in range(1, n_vertices - 1):
            if (n - m) % 3:
                continue
            seen = {quiddity(d).entries
                    for d in enumerate_dissections(n_vertices, m, CellFilter.ell_periodic(3))}
            want = formulas.quiddity_count_3periodic(n, m)
            if len(seen) != want:
                return CheckResult(
                    "quiddity-counts", False,
                    f"N={n_vertices}, m={m}: enumerated {len(seen)}, closed form {want}")
            total |= seen
        want_total = sum(
            formulas.quiddity_count_3periodic(n, m) for m in range(0, n + 1)
        )
        if len(total) != want_total and n_vertices >= 3:
            return CheckResult("quiddity-counts", False, f"column total at N={n_vertices}")
    return CheckResult("quiddity-counts", True, f"matches closed form for all N <= {max_n}")


def check_quiddity_sum(max_n: int) -> CheckResult:
    """Quiddity sum N + 2(m-1) on every enumerated dissection."""
    for n_vertices in range(3, max_n + 1):
        for m in range(1, n_vertices - 1):
            for d in enumerate_dissections(n_vertices, m):
                if sum(quiddity(d).entries) != n_vertices + 2 * (m - 1):
                    return CheckResult("quiddity-sum", False, str(d))
    return CheckResult("quiddity-sum", True, f"all dissections with N <= {max_n}")


def check_equal_size_injectivity(max_n: int) -> CheckResult:
    """Equal-cell-size dissections are determined by their quiddities."""
    for n_vertices in range(3, max_n + 1):
        n = n_vertices - 2
        for m in range(1, n + 1):
            if n % m:
                continue
            table = quiddity_classes(n_vertices, m, CellFilter.equal_size(n // m + 2))
            bad = [q for q, ds in table.classes.items() if len(ds) > 1]
            if bad:
                return CheckResult(
                    "equal-size-injectivity", False,
                    f"N={n_vertices}, m={m}, quiddity {bad[0]}")
    return CheckResult("equal-size-injectivity", True, f"all equal-size families, N <= {max_n}")


def find_non_dihedral_pair(max_n: int) -> Optional[tuple[Dissection, Dissection]]:
    """Smallest equal-quiddity pair not related by any dihedral
    relabeling, searching all dissections by polygon size."""
    for n_vertices in range(3, max_n + 1):
        for m in range(1, n_vertices - 1):
            table = quiddity_classes(n_vertices, m)
            for q in sorted(table.classes, key=lambda q: q.entries):
                ds = table.classes[q]
                if len(ds) < 2:
                    continue
                orbit = dihedral_orbit(ds[0])
                for other in ds[1:]:
                    if other not in orbit:
                        return ds[0], other
    return None


def find_equal_quiddity_without_surgery(n_vertices: int = 8) -> Optional[tuple[Dissection, Dissection]]:
    """Equal-quiddity pair among triangle/quadrilateral dissections
    (which admit no surgery at all)."""
    from .surgery import find_surgeries

    for m in range(1, n_vertices - 1):
        table = quiddity_classes(n_vertices, m, CellFilter.size_set({3, 4}))
        for q in sorted(table.classes, key=lambda q: q.entries):
            ds = table.classes[q]
            if len(ds) >= 2 and all(not find_surgeries(d, False) for d in ds[:2]):
                return ds[0], ds[1]
    return None


def check_witnesses(max_n: int) -> CheckResult:
    pair = find_non_dihedral_pair(max_n)
    if pair is None:
        return CheckResult("equal-quiddity-witnesses", False,
                           f"no non-dihedral pair up to N={max_n}")
    no_surgery = find_equal_quiddity_without_surgery(8)
    if no_surgery is None:
        return CheckResult("equal-quiddity-witnesses", False,
                           "no triangle/quadrilateral pair at N=8")
    return CheckResult(
        "equal-quiddity-witnesses", True,
        f"non-dihedral: {pair[0]} vs {pair[1]}; "
        f"no-surgery: {no_surgery[0]} vs {no_surgery[1]}")


def check_surgery_classes(max_n: int, random_orders: int = 20, seed: int = 20260809) -> CheckResult:
    """Surgery classes = quiddity classes on 3-periodic dissections;
    one maximally open member per class; canonicalization lands on it
    from every member under randomized admissible orders."""
    rng = random.Random(seed)
    instances = 0
    for n_vertices, m, family in _three_periodic_family(max_n):
        by_quiddity: dict[tuple[int, ...], list[Dissection]] = {}
        for d in family:
            by_quiddity.setdefault(quiddity(d).entries, []).append(d)
        for q, members in by_quiddity.items():
            cls = surgery_class(members[0], require_3periodic=True)
            if cls != frozenset(members):
                return CheckResult("surgery-classes", False,
                                   f"class mismatch at N={n_vertices}, m={m}, quiddity {q}")
            open_members = [d for d in members if is_maximally_open(BasedDissection(d))]
            if len(open_members) != 1:
                return CheckResult("surgery-classes", False,
                                   f"{len(open_members)} maximally open members at N={n_vertices}, quiddity {q}")
            target = open_members[0]
            for d in members:
                if canonicalize_maximally_open(BasedDissection(d)) != target:
                    return CheckResult("surgery-classes", False,
                                       f"canonicalization missed the open member from {d}")
                for _ in range(random_orders):
                    shuffled = canonicalize_maximally_open(
                        BasedDissection(d), random.Random(rng.randrange(2 ** 32)))
                    if shuffled != target:
                        return CheckResult("surgery-classes", False,
                                           f"order-dependent canonical form from {d}")
                instances += 1
    return CheckResult("surgery-classes", True,
                       f"{instances} dissections, {random_orders} random orders each, N <= {max_n}")


def check_monodromy(max_n: int, converse_max_n: int = 6) -> CheckResult:
    """Every 3-periodic quiddity gives a plus or minus identity
    product; triangulation quiddities give minus identity; the bounded
    converse holds."""
    for n_vertices, m, family in _three_periodic_family(max_n):
        for d in family:
            q = quiddity(d).entries
            kind = classify_monodromy(q).classification
            if kind == NEITHER:
                return CheckResult("monodromy", False, f"quiddity {q} is not plus/minus identity")
    for n_vertices in range(3, min(max_n, 9) + 1):
        for d in enumerate_dissections(n_vertices, n_vertices - 2):
            kind = classify_monodromy(quiddity(d).entries).classification
            if kind != MINUS_IDENTITY:
                return CheckResult("monodromy", False,
                                   f"triangulation {d} product is not minus identity")
    for n_vertices in range(3, converse_max_n + 1):
        report = verify_monodromy_correspondence(n_vertices)
        if report["forward_failures"] or report["converse_extra"] or report["converse_missing"]:
            return CheckResult("monodromy", False, f"converse failed at N={n_vertices}")
    return CheckResult("monodromy", True,
                       f"forward N <= {max_n}, converse N <= {converse_max_n}")


def check_series(order: int = 14) -> CheckResult:
    """Fixed-point solutions against the closed forms, coefficient by
    coefficient, plus the quiddity series composition."""
    sol = series.solve_fixed_point(series.catalan_equation(), order)
    for n in range(order + 1):
        if sol.coefficient(n, 0) != formulas.catalan(n):
            return CheckResult("series-solver", False, f"catalan at z^{n}")

    def closed(n: int, m: int, f: Callable[[int, int], int]) -> int:
        if m == 0:
            return 1 if n == 0 else 0
        return f(n, m)

    cases = [
        ("general", series.kirkman_cayley_equation(), formulas.kirkman_cayley),
        ("period-2", series.ell_periodic_equation(2), lambda n, m: formulas.ell_periodic_count(n, m, 2)),
        ("period-3", series.ell_periodic_equation(3), lambda n, m: formulas.ell_periodic_count(n, m, 3)),
        ("tri-quad", series.tri_quad_equation(), formulas.tri_quad_count),
    ]
    for label, eq, f in cases:
        sol = series.solve_fixed_point(eq, order)
        for n in range(order + 1):
            for m in range(n + 1):
                if sol.coefficient(n, m) != closed(n, m, f):
                    return CheckResult("series-solver", False, f"{label} at z^{n} w^{m}")
    q = series.compose_q(series.solve_fixed_point(series.p_equation(), order))
    for n in range(order + 1):
        for m in range(n + 1):
            if q.coefficient(n, m) != closed(n, m, formulas.quiddity_count_3periodic):
                return CheckResult("series-solver", False, f"quiddity series at z^{n} w^{m}")
    return CheckResult("series-solver", True, f"five equations to order {order}")


def check_lagrange(max_order: int = 12) -> CheckResult:
    """The inversion identity reproduces the dissection counts from
    phi(y) = 1 + wy/(1 - y - wy)."""
    phi = dissection_inversion_series(max_order)
    for n in range(1, max_order + 1):
        poly = series.lagrange_invert(phi, n)
        for m, coeff in enumerate(poly):
            if coeff != formulas.kirkman_cayley(n - 1, m):
                return CheckResult("lagrange-inversion", False, f"z^{n} w^{m}")
    return CheckResult("lagrange-inversion", True, f"orders 1..{max_order}")


def dissection_inversion_series(order: int) -> series.BivariateSeries:
    """phi(y) = 1 + w y / (1 - y - w y), the inversion kernel whose
    z-coefficients are rows of the dissection-count table."""
    y_plus_wy = series.BivariateSeries.monomial(order, 1, 0) + \
        series.BivariateSeries.monomial(order, 1, 1)
    return series.BivariateSeries.one(order) + \
        series.BivariateSeries.monomial(order, 1, 1) * series.geometric_sum(y_plus_wy)


def check_table(max_n: int = 14) -> CheckResult:
    """The closed-form quiddity counts against the known small table."""
    for (n, m), want in known_quiddity_table(max_n).items():
        got = formulas.quiddity_count_3periodic(n, m)
        if got != want:
            return CheckResult("quiddity-table", False, f"(n={n}, m={m}): {got} != {want}")
    return CheckResult("quiddity-table", True, f"all entries, n <= {max_n}")


def known_quiddity_table(max_n: int = 14) -> dict[tuple[int, int], int]:
    """Known counts of distinct 3-periodic quiddities by (n, m), for
    the (n+2)-gon, n <= 14: the five diagonals m = n - 3k."""
    rows = {
        0: [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862,
            16796, 58786, 208012, 742900, 2674440],
        3: [1, 7, 34, 147, 605, 2431, 9646, 38012, 149226, 584630, 2288132],
        6: [1, 15, 121, 758, 4160, 21098, 101660, 472872],
        9: [1, 26, 315, 2710, 19234],
        12: [1, 40],
    }
    table = {}
    for offset, values in rows.items():
        first_n = 0 if offset == 0 else offset + 1
        for k, value in enumerate(values):
            n = first_n + k
            m = n - offset
            if n <= max_n and (m >= 1 or (n == 0 and m == 0)):
                table[(n, m)] = value
    return table


def check_continued_fractions(max_sum: int = 12) -> CheckResult:
    """Strip-triangulation top quiddities equal the minus-sign terms
    for every plus-sign expansion with bounded term sum."""
    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    checked = 0
    for total in range(2, max_sum + 1):
        for length in range(2, total + 1, 2):
            for terms in compositions(total, length):
                cf = RegularContinuedFraction(terms)
                d, tops = strip_triangulation(cf)
                q = quiddity(d).entries
                if tuple(q[v] for v in tops[:-1]) != regular_to_hj(cf).terms:
                    return CheckResult("continued-fractions", False, f"terms {terms}")
                checked += 1
    return CheckResult("continued-fractions", True, f"{checked} expansions, term sum <= {max_sum}")


def run_all(scope: str = "fast") -> list[CheckResult]:
    """The oracle-equivalence suite at the configured polygon caps."""
    if scope not in ("fast", "full"):
        raise ValueError(f"scope must be 'fast' or 'full', got {scope!r}")
    fast = scope == "fast"
    max_n = 8 if fast else 10
    quiddity_max_n = 8 if fast else 11
    return [
        check_table(),
        check_dissection_counts(max_n),
        check_quiddity_counts(quiddity_max_n),
        check_quiddity_sum(7 if fast else 9),
        check_equal_size_injectivity(9 if fast else 12),
        check_witnesses(9),
        check_surgery_classes(8 if fast else 10, random_orders=5 if fast else 20),
        check_monodromy(8 if fast else 10, converse_max_n=5 if fast else 6),
        check_series(12 if fast else 14),
        check_lagrange(10 if fast else 12),
        check_continued_fractions(8 if fast else 12),
    ]
