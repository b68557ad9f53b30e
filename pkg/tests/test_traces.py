"""The recursion against its hand-checkable values.

The rank 1/2/3 symplectic tables are the anchor: every row was derived
by hand from the one-step expansion and the initial values, and the
whole suite of invariants (integrality, constant term, dominance,
coefficient sums) guards the rest.
"""

import pytest

from springer.compgroup import ComponentElement, IDENTITY, component_group
from springer.partitions import Partition, Series, valid_partitions, validate
from springer.polynomials import Poly, geom
from springer.traces import (
    betti_numbers,
    clear_cache,
    expand_restriction,
    full_table,
    graded_trace,
)

B, C, D = Series.B, Series.C, Series.D


def Z(*support):
    return ComponentElement(support)


GOLDEN_C1 = [
    ("2", "id", "1"),
    ("2", "z2", "1"),
    ("1,1", "id", "x + 1"),
]

GOLDEN_C2 = [
    ("4", "id", "1"),
    ("4", "z4", "1"),
    ("2,2", "id", "3*x + 1"),
    ("2,2", "z2", "x + 1"),
    ("2,1,1", "id", "x^2 + 2*x + 1"),
    ("2,1,1", "z2", "x^2 + 2*x + 1"),
    ("1,1,1,1", "id", "x^4 + 2*x^3 + 2*x^2 + 2*x + 1"),
]

GOLDEN_C3 = [
    ("6", "id", "1"),
    ("6", "z6", "1"),
    ("4,2", "id", "4*x + 1"),
    ("4,2", "z2", "2*x + 1"),
    ("4,2", "z4", "2*x + 1"),
    ("4,2", "z2*z4", "4*x + 1"),
    ("4,1,1", "id", "2*x^2 + 3*x + 1"),
    ("4,1,1", "z4", "2*x^2 + 3*x + 1"),
    ("3,3", "id", "3*x^2 + 4*x + 1"),
    ("2,2,2", "id", "3*x^3 + 5*x^2 + 3*x + 1"),
    ("2,2,2", "z2", "3*x^3 + 5*x^2 + 3*x + 1"),
    ("2,2,1,1", "id", "5*x^4 + 9*x^3 + 6*x^2 + 3*x + 1"),
    ("2,2,1,1", "z2", "x^4 + 3*x^3 + 4*x^2 + 3*x + 1"),
    ("2,1,1,1,1", "id", "x^6 + 3*x^5 + 5*x^4 + 6*x^3 + 5*x^2 + 3*x + 1"),
    ("2,1,1,1,1", "z2", "x^6 + 3*x^5 + 5*x^4 + 6*x^3 + 5*x^2 + 3*x + 1"),
    (
        "1,1,1,1,1,1",
        "id",
        "x^9 + 3*x^8 + 5*x^7 + 7*x^6 + 8*x^5 + 8*x^4 + 7*x^3 + 5*x^2 + 3*x + 1",
    ),
]


@pytest.mark.parametrize("n,golden", [(1, GOLDEN_C1), (2, GOLDEN_C2), (3, GOLDEN_C3)])
def test_symplectic_golden_tables(n, golden):
    rows = [(str(lam), str(z), str(poly)) for lam, z, poly in full_table(C, n)]
    assert rows == golden


def test_expand_22_id():
    exp = expand_restriction(Partition([2, 2]), IDENTITY, C)
    got = [(str(t.coeff), str(t.child), str(t.child_z)) for t in exp.terms]
    assert got == [
        ("1/2*x - 1/2", "2", "id"),
        ("1/2*x - 1/2", "2", "z2"),
        ("2", "1,1", "id"),
    ]


def test_expand_22_z2_pair_term_vanishes():
    exp = expand_restriction(Partition([2, 2]), Z(2), C)
    got = [(str(t.coeff), str(t.child), str(t.child_z)) for t in exp.terms]
    assert got == [
        ("1/2*x + 1/2", "2", "id"),
        ("1/2*x + 1/2", "2", "z2"),
    ]


def test_expand_2211_has_pair_move_term():
    exp = expand_restriction(Partition([2, 2, 1, 1]), IDENTITY, C)
    wanted = Poly.parse("x^3 + x^2")
    assert any(
        t.coeff == wanted and t.child == Partition([2, 2]) and t.child_z == IDENTITY
        for t in exp.terms
    )


def test_expand_4_z4_single_term():
    exp = expand_restriction(Partition([4]), Z(4), C)
    assert len(exp.terms) == 1
    t = exp.terms[0]
    assert (t.coeff, t.child, t.child_z) == (Poly.one(), Partition([2]), Z(2))


def test_expand_B_111_null_terms():
    exp = expand_restriction(Partition([1, 1, 1]), IDENTITY, B)
    real = [t for t in exp.terms if not t.is_null]
    nulls = [t for t in exp.terms if t.is_null]
    assert len(real) == 1
    assert real[0].coeff == Poly.parse("x + 1")
    assert real[0].child == Partition([1])
    assert sorted(str(t.coeff) for t in nulls) == ["1/2*x^2 + 1/2*x", "1/2*x^2 - 1/2*x"]


def test_graded_trace_base_like_values():
    assert graded_trace(Partition([2, 2]), IDENTITY, C) == Poly.parse("3*x + 1")
    assert graded_trace(Partition([4, 2]), Z(2), C) == Poly.parse("2*x + 1")
    assert graded_trace(Partition([1, 1, 1]), IDENTITY, B) == Poly.parse("x + 1")
    assert graded_trace(Partition([2, 2]), IDENTITY, D) == Poly.parse("x + 1")
    assert graded_trace(Partition([3, 1]), IDENTITY, D) == Poly.one()
    assert graded_trace(Partition([1, 1, 1, 1]), IDENTITY, D) == Poly.parse("x^2 + 2*x + 1")


def test_graded_trace_rejects_bad_input():
    with pytest.raises(ValueError):
        graded_trace(Partition([2, 1]), IDENTITY, C)
    with pytest.raises(ValueError):
        graded_trace(Partition([2, 2]), Z(4), C)
    with pytest.raises(ValueError):
        graded_trace(Partition([1, 1, 1]), Z(1), B)  # outside the even-support subgroup


def test_betti_numbers():
    assert betti_numbers(Partition([2, 1, 1]), C) == [1, 2, 1]
    assert betti_numbers(Partition([1, 1, 1, 1]), C) == [1, 2, 2, 2, 1]
    assert betti_numbers(Partition([6]), C) == [1]


def _full_flag_poly(series, n):
    if series is C or series is B:
        out = Poly.one()
        for i in range(1, n + 1):
            out = out * geom(2 * i)
        return out
    out = geom(n)
    for i in range(1, n):
        out = out * geom(2 * i)
    return out


@pytest.mark.parametrize("n", range(1, 5))
def test_zero_nilpotent_gives_flag_variety(n):
    assert graded_trace(Partition([1] * (2 * n)), IDENTITY, C) == _full_flag_poly(C, n)
    assert graded_trace(Partition([1] * (2 * n + 1)), IDENTITY, B) == _full_flag_poly(B, n)
    assert graded_trace(Partition([1] * (2 * n)), IDENTITY, D) == _full_flag_poly(D, n)


def test_regular_nilpotent_is_point():
    for n in range(1, 6):
        for z in component_group(Partition([2 * n]), C):
            assert graded_trace(Partition([2 * n]), z, C) == Poly.one()
        assert graded_trace(Partition([2 * n + 1]), IDENTITY, B) == Poly.one()
        if n >= 2:
            for z in component_group(Partition([2 * n - 1, 1]), D):
                assert graded_trace(Partition([2 * n - 1, 1]), z, D) == Poly.one()


@pytest.mark.parametrize("series,max_size", [(C, 8), (B, 7), (D, 8)])
def test_invariants_small(series, max_size):
    start = 1 if series is B else 2
    for size in range(start, max_size + 1, 2):
        for lam in valid_partitions(series, size):
            ref = graded_trace(lam, IDENTITY, series).coefficients_ascending()
            for z in component_group(lam, series):
                poly = graded_trace(lam, z, series)
                integral, _ = poly.is_integral_nonneg()
                assert integral, (lam, z)
                assert poly.coefficient(0) == 1, (lam, z)
                coeffs = poly.coefficients_ascending()
                assert len(coeffs) <= len(ref)
                assert all(abs(c) <= r for c, r in zip(coeffs, ref)), (lam, z)

                exp = expand_restriction(lam, z, series)
                assert exp.coefficient_sum() == geom(len(lam)), (lam, z)
                for t in exp.terms:
                    assert not t.coeff.is_zero()
                    if not t.is_null:
                        assert t.child.size() == lam.size() - 2
                        assert validate(t.child, series).valid
                        if series is not C:
                            assert len(t.child_z.support) % 2 == 0


def test_memo_population_order_does_not_matter():
    clear_cache()
    cold = [(str(l), str(z), str(p)) for l, z, p in full_table(C, 3)]
    # warm the cache in a different order, then recompute
    graded_trace(Partition([2, 2, 1, 1]), Z(2), C)
    warm = [(str(l), str(z), str(p)) for l, z, p in full_table(C, 3)]
    assert cold == warm
    clear_cache()
    again = [(str(l), str(z), str(p)) for l, z, p in full_table(C, 3)]
    assert cold == again
