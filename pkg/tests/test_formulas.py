"""Closed-form counting formulas and their degenerate conventions."""
from __future__ import annotations

import pytest

from quiddity import DomainError
from quiddity.formulas import (
    catalan,
    ell_periodic_count,
    extended_binomial,
    fuss,
    kirkman_cayley,
    quiddity_count_3periodic,
    tri_quad_count,
)
from quiddity.verification import known_quiddity_table


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(4) == 14
    assert catalan(9) == 4862
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_catalan_rejects_negative():
    with pytest.raises(DomainError):
        catalan(-1)


def test_kirkman_cayley_values():
    assert kirkman_cayley(4, 2) == 9
    assert kirkman_cayley(0, 0) == 1
    assert kirkman_cayley(0, 3) == 0
    assert kirkman_cayley(5, 1) == 1
    for n in range(13):
        assert kirkman_cayley(n, n) == catalan(n)


def test_fuss_values():
    assert fuss(4, 4) == 14
    assert fuss(4, 2) == 3
    assert fuss(6, 2) == 4


def test_fuss_rejects_non_divisor():
    with pytest.raises(DomainError):
        fuss(5, 2)


def test_ell_periodic_values():
    assert ell_periodic_count(6, 3, 3) == 36
    assert ell_periodic_count(5, 2, 3) == 7
    assert ell_periodic_count(6, 2, 3) == 0  # 6 != 2 mod 3
    for n in range(1, 11):
        for m in range(1, n + 1):
            assert ell_periodic_count(n, m, 1) == kirkman_cayley(n, m)


def test_tri_quad_values():
    assert tri_quad_count(2, 2) == 2
    assert tri_quad_count(3, 2) == 5
    assert tri_quad_count(4, 3) == 21
    assert tri_quad_count(7, 3) == 0  # needs n - m <= m


def test_quiddity_count_values():
    assert quiddity_count_3periodic(6, 3) == 34
    assert quiddity_count_3periodic(4, 1) == 1
    assert quiddity_count_3periodic(10, 4) == 758
    assert quiddity_count_3periodic(5, 3) == 0  # 5 != 3 mod 3


def test_quiddity_count_catalan_diagonal():
    for n in range(15):
        assert quiddity_count_3periodic(n, n) == catalan(n)


def test_full_known_table():
    for (n, m), want in known_quiddity_table(14).items():
        assert quiddity_count_3periodic(n, m) == want, (n, m)


def test_quiddities_never_outnumber_dissections():
    for n in range(1, 15):
        for m in range(1, n + 1):
            assert quiddity_count_3periodic(n, m) <= ell_periodic_count(n, m, 3)


def test_integrality_over_a_wide_range():
    # every operation returns ints with no internal assertion firing
    for n in range(31):
        catalan(n)
        for m in range(n + 2):
            kirkman_cayley(n, m)
            quiddity_count_3periodic(n, m)
            if m >= 1:
                tri_quad_count(n, m)
                for ell in (1, 2, 3, 4, 5):
                    ell_periodic_count(n, m, ell)
            if m >= 1 and n % m == 0:
                fuss(n, m)


def test_extended_binomial_conventions():
    assert extended_binomial(-1, 0) == 1
    assert extended_binomial(-5, 0) == 1
    assert extended_binomial(3, -1) == 0
    assert extended_binomial(5, 2) == 10
    assert extended_binomial(2, 5) == 0
    with pytest.raises(AssertionError):
        extended_binomial(-1, 1)


def test_negative_arguments_rejected():
    for fn in (lambda: kirkman_cayley(-1, 0),
               lambda: quiddity_count_3periodic(3, -1),
               lambda: tri_quad_count(-2, 1),
               lambda: ell_periodic_count(4, 1, 0)):
        with pytest.raises(DomainError):
            fn()
