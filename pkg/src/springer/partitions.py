"""Partitions as Jordan types of nilpotent elements in classical Lie algebras.

A partition is a weakly decreasing tuple of positive integers.  Which
partitions occur as Jordan types depends on the series of the ambient
group:

* ``B`` -- SO(2n+1): size 2n+1, every even part size has even multiplicity;
* ``C`` -- Sp(2n):   size 2n,   every odd part size has even multiplicity;
* ``D`` -- SO(2n):   size 2n,   every even part size has even multiplicity.

In series D a partition with no odd parts at all ("very even") labels two
orbits; everything computed here takes the same value on both, so the two
labels collapse to one row everywhere and `validate` just flags the case.

The one mutation the recursion needs is `surgery`: delete a sub-multiset
of parts, insert replacement parts, and re-sort.  An inserted part 0 is a
Jordan block of size 0, i.e. nothing, and is dropped; an inserted negative
part marks a formally-zero symbol, represented by the `NULL` singleton so
the recursion can keep the term around (its coefficient matters for an
invariant) while assigning it the value 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum


class Series(Enum):
    """Which family of classical groups: B = SO(2n+1), C = Sp(2n), D = SO(2n)."""

    B = "B"
    C = "C"
    D = "D"


class Partition:
    """Weakly decreasing tuple of positive parts; equality is multiset equality."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        for p in parts:
            if p <= 0:
                raise ValueError("part must be positive: %d" % p)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def multiplicity(self, i):
        """Number of parts equal to i."""
        if i < 1:
            raise ValueError("part size must be >= 1, got %d" % i)
        return sum(1 for p in self.parts if p == i)

    def multiplicity_above(self, i):
        """Number of parts strictly greater than i."""
        if i < 1:
            raise ValueError("part size must be >= 1, got %d" % i)
        return sum(1 for p in self.parts if p > i)

    def part_sizes(self):
        """Distinct part sizes, largest first."""
        seen = []
        for p in self.parts:
            if not seen or seen[-1] != p:
                seen.append(p)
        return seen

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return "(%s)" % ",".join(str(p) for p in self.parts)


class NullPartition:
    """The formally-zero symbol produced by inserting a negative part."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "null"

    def __str__(self):
        return "null"


NULL = NullPartition()


def parse_partition(text):
    """Parse a comma-separated list of positive parts, e.g. '2,2,1,1'."""
    tokens = [t.strip() for t in text.split(",")]
    parts = []
    for tok in tokens:
        if not tok:
            raise ValueError("empty part in partition text %r" % text)
        try:
            p = int(tok)
        except ValueError:
            raise ValueError("part is not an integer: %r" % tok) from None
        if p <= 0:
            raise ValueError("part must be positive: %r" % tok)
        parts.append(p)
    return Partition(parts)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    very_even: bool
    reason: str


def validate(lam, series):
    """Check that lam is the Jordan type of a nilpotent element for the series.

    Returns a report rather than raising; `very_even` is set for the
    series-D partitions with no odd parts (two orbits, one common value).
    """
    n = lam.size()
    if series is Series.B:
        if n % 2 == 0:
            return ValidityReport(False, False, "series B requires odd size, got %d" % n)
        constrained = 0  # even part sizes must pair up
    else:
        if n % 2 == 1:
            return ValidityReport(
                False, False, "series %s requires even size, got %d" % (series.value, n)
            )
        constrained = 1 if series is Series.C else 0
    for i in lam.part_sizes():
        if i % 2 == constrained:
            m = lam.multiplicity(i)
            if m % 2 == 1:
                return ValidityReport(False, False, "m_%d = %d is odd" % (i, m))
    very_even = series is Series.D and all(p % 2 == 0 for p in lam.parts)
    return ValidityReport(True, very_even, "")


def surgery(lam, removed, inserted):
    """Replace the parts `removed` (a sub-multiset of lam) by `inserted`.

    Inserted 0s are dropped; any negative inserted part makes the whole
    result the NULL symbol.  Raises if `removed` is not contained in lam.
    """
    have = Counter(lam.parts)
    need = Counter(int(r) for r in removed)
    for r, k in need.items():
        if have[r] < k:
            raise ValueError("cannot remove %d copies of part %d from %r" % (k, r, lam))
    have -= need
    parts = list(have.elements())
    for b in inserted:
        b = int(b)
        if b < 0:
            return NULL
        if b > 0:
            parts.append(b)
    return Partition(parts)


def rank_size(series, n):
    """Size of the defining representation at rank n: 2n+1 for B, 2n for C and D."""
    return 2 * n + 1 if series is Series.B else 2 * n


def partitions_of(n, max_part=None):
    """All partitions of n, weakly decreasing, in descending lexicographic order."""
    if n == 0:
        yield Partition(())
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def valid_partitions(series, size):
    """Valid Jordan types of the given size, in descending lexicographic order."""
    return [lam for lam in partitions_of(size) if validate(lam, series).valid]
