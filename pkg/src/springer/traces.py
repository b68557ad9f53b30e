"""Graded traces of component-group elements on Springer fiber cohomology.

For a nilpotent N of Jordan type lam and a component-group element z,
write Q(lam, z) for the polynomial whose degree-k coefficient is the
trace of z on H^{2k} of the Springer fiber of N.  At z = id this is the
Poincare polynomial of the fiber, so its coefficients are the Betti
numbers.  (In series D, for a very even partition Q is the common value
shared by the two orbits it labels.)

Everything here rests on one identity: restricting the graded Springer
representation from the Weyl group of rank n to the maximal parabolic of
the same series and rank n-1 expands Q(lam, z) into a finite sum of
Q(child, child_z) over Jordan types child of size |lam| - 2, with
explicit polynomial coefficients.  `expand_restriction` produces that
expansion symbolically; since restriction does not change the value at
the identity element, iterating it computes Q(lam, z) itself, which is
what `graded_trace` does, memoized, down to rank-zero base cases.

One restriction step works part size by part size.  Write m for the
multiplicity of the part i, a for the exponent of z_i in z, and r for
the number of parts above i.  Each part size contributes terms supported
on two children: the "pair move" replaces two copies of i by two copies
of i-1, and the "drop move" replaces one copy of i by one of i-2.  For a
part size with no component-group generator (odd i in series C, even i
in B/D) the multiplicity m is forcibly even and only the pair move
occurs, with coefficient

    x^r * (x^m - 1)/(x - 1).

For a generator-carrying part size (even i in C, odd i in B/D):

* m odd:   pair move with x^r * (x^(m-1) - 1)/(x - 1), and two drop
           moves with coefficients x^r * (x^(m-1) +- x^((m-1)/2)) / 2
           attached to z * (z_i z_{i-2})^a (plus sign) and
           z * (z_i z_{i-2})^(a+1) (minus sign);
* m even:  pair move with x^r * ((x^(m-1) - 1)/(x - 1) + (-1)^a x^(m/2-1)),
           and both drop moves with the same coefficient
           x^r * (x^(m-1) - (-1)^a x^(m/2-1)) / 2.

Child component-group elements are put in normal form against the child
partition; in the drop move at i = 1 (series B/D only) the child is the
NULL symbol, which contributes 0 to any trace but is retained because
the sum of all coefficients in an expansion, null terms included, must
equal (x^r - 1)/(x - 1) with r the total number of parts: at x = q each
coefficient counts the lines of a projective space over F_q with a given
residual fiber type, and together they exhaust P^(r-1).

Base cases: the empty partition in series C, (1) in series B, and (1,1)
in series D all have value 1.

The evaluator is single-threaded: a process-wide lock guards the memo,
so concurrent callers serialize.  Results are pure functions of the
input either way.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .compgroup import (
    ComponentElement,
    IDENTITY,
    canonical,
    component_group,
    generator_parity,
    is_canonical_element,
)
from .partitions import (
    NullPartition,
    Partition,
    Series,
    rank_size,
    surgery,
    valid_partitions,
    validate,
)
from .polynomials import Poly, geom


@dataclass(frozen=True)
class Term:
    """One summand of an expansion: coeff * Q(child, child_z)."""

    coeff: Poly
    child: object  # Partition or NULL
    child_z: ComponentElement

    @property
    def is_null(self):
        return isinstance(self.child, NullPartition)


@dataclass(frozen=True)
class Expansion:
    series: Series
    source: Partition
    source_z: ComponentElement
    terms: tuple

    def coefficient_sum(self):
        """Sum of all coefficients, null terms included."""
        total = Poly()
        for t in self.terms:
            total = total + t.coeff
        return total


def _require_valid(lam, z, series):
    report = validate(lam, series)
    if not report.valid:
        raise ValueError("invalid partition for series %s: %s" % (series.value, report.reason))
    if not is_canonical_element(z, lam, series):
        raise ValueError(
            "%s is not a component-group element for partition %s in series %s"
            % (z, lam, series.value)
        )


def expand_restriction(lam, z, series):
    """One restriction step applied to Q(lam, z), as a symbolic expansion."""
    _require_valid(lam, z, series)
    gen_parity = generator_parity(series)
    half = Fraction(1, 2)
    merged = {}

    def add(child, child_z, coeff):
        if coeff.is_zero():
            return
        key = (child.parts if isinstance(child, Partition) else None, child_z)
        if key in merged:
            merged[key] = Term(merged[key].coeff + coeff, child, child_z)
        else:
            merged[key] = Term(coeff, child, child_z)

    def child_element(raw_support, child):
        if isinstance(child, NullPartition):
            # no partition to normalize against; just drop the fictitious
            # nonpositive part sizes so null terms stay distinguishable
            return ComponentElement(j for j in raw_support if j >= 1)
        return canonical(ComponentElement(raw_support), child, series)

    for i in lam.part_sizes():
        m = lam.multiplicity(i)
        xr = Poly.monomial(lam.multiplicity_above(i))
        pair_child = surgery(lam, [i, i], [i - 1, i - 1]) if m >= 2 else None
        drop_child = surgery(lam, [i], [i - 2])

        if i % 2 != gen_parity:
            # no generator at this part size; m is even by series validity
            add(pair_child, child_element(z.support, pair_child), xr * geom(m))
            continue

        a = 1 if i in z.support else 0
        swap = z.support ^ {i, i - 2}  # raw support of z * z_i * z_{i-2}
        if m % 2 == 1:
            if m >= 3:
                add(pair_child, child_element(z.support, pair_child), xr * geom(m - 1))
            plus = (Poly.monomial(m - 1) + Poly.monomial((m - 1) // 2)) * half
            minus = (Poly.monomial(m - 1) - Poly.monomial((m - 1) // 2)) * half
            keep, flip = (swap, z.support) if a == 1 else (z.support, swap)
            add(drop_child, child_element(keep, drop_child), xr * plus)
            add(drop_child, child_element(flip, drop_child), xr * minus)
        else:
            sign = -1 if a == 1 else 1
            pair_coeff = xr * (geom(m - 1) + Poly.monomial(m // 2 - 1, sign))
            add(pair_child, child_element(z.support, pair_child), pair_coeff)
            drop_coeff = xr * ((Poly.monomial(m - 1) - Poly.monomial(m // 2 - 1, sign)) * half)
            add(drop_child, child_element(z.support, drop_child), drop_coeff)
            add(drop_child, child_element(swap, drop_child), drop_coeff)

    terms = sorted(
        merged.values(),
        key=lambda t: (
            t.is_null,
            () if t.is_null else tuple(-p for p in t.child.parts),
            t.child_z.sort_key(),
        ),
    )
    if series is not Series.C:
        for t in terms:
            if not t.is_null and len(t.child_z.support) % 2 == 1:
                raise AssertionError(
                    "expansion left the special orthogonal component group: %s" % (t,)
                )
    return Expansion(series, lam, z, tuple(terms))


_MEMO = {}
_LOCK = threading.Lock()


def clear_cache():
    with _LOCK:
        _MEMO.clear()


def _trace(lam, z, series):
    parts = lam.parts
    if series is Series.C and parts == ():
        return Poly.one()
    if series is Series.B and parts == (1,):
        return Poly.one()
    if series is Series.D and parts == (1, 1):
        return Poly.one()
    key = (series, parts, z.support)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    total = Poly()
    for t in expand_restriction(lam, z, series).terms:
        if t.is_null:
            continue
        total = total + t.coeff * _trace(t.child, t.child_z, series)
    _MEMO[key] = total
    return total


def graded_trace(lam, z, series):
    """Q(lam, z): trace of z on H^(2k) of the Springer fiber, as coefficient of x^k.

    Always integral despite half-integral intermediate coefficients; an
    ArithmeticError here means the recursion invariants were broken.
    """
    _require_valid(lam, z, series)
    with _LOCK:
        value = _trace(lam, z, series)
    if not value.is_integral_nonneg()[0]:
        raise ArithmeticError("non-integral graded trace for (%s, %s)" % (lam, z))
    return value


def betti_numbers(lam, series):
    """[dim H^0, dim H^2, dim H^4, ...] of the Springer fiber of type lam."""
    return [int(c) for c in graded_trace(lam, IDENTITY, series).coefficients_ascending()]


def full_table(series, n):
    """All rows (lam, z, Q(lam, z)) at rank n, in deterministic order.

    Partitions run in descending lexicographic order, component-group
    elements by (cardinality, support).  Very even partitions in series D
    produce a single row carrying the common value of the two orbits.
    """
    rows = []
    with _LOCK:
        for lam in valid_partitions(series, rank_size(series, n)):
            for z in component_group(lam, series):
                rows.append((lam, z, _trace(lam, z, series)))
    for _, _, poly in rows:
        if not poly.is_integral_nonneg()[0]:
            raise ArithmeticError("non-integral graded trace in table")
    return rows
