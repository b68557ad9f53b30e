"""Component groups of nilpotent centralizers as F2 bit-sets.

For a nilpotent of Jordan type lam the component group of its stabilizer
is elementary abelian of exponent 2, generated by one involution z_i per
part size i of the right parity: even i in series C, odd i in series B
and D.  An element is therefore a finite set of part sizes (the i with
exponent 1), multiplication is symmetric difference, and the identity is
the empty set.

In the orthogonal series the generators individually live in the full
orthogonal group; the subgroup meeting SO consists of the even-cardinality
products, and that is the group `component_group` enumerates there.

During the recursion, raw products like z_i * z_{i-2} can momentarily
mention the part size 0 (from i = 2) or sizes absent from the partition;
`canonical` is the normal form that drops those.
"""

from __future__ import annotations

from itertools import combinations

from .partitions import Series


def generator_parity(series):
    """Parity (0 = even, 1 = odd) of part sizes carrying component-group generators."""
    return 0 if series is Series.C else 1


class ComponentElement:
    """Element of the component group: the set of part sizes with exponent 1."""

    __slots__ = ("support",)

    def __init__(self, support=()):
        object.__setattr__(self, "support", frozenset(int(i) for i in support))

    def __setattr__(self, name, value):
        raise AttributeError("ComponentElement is immutable")

    def __mul__(self, other):
        if not isinstance(other, ComponentElement):
            return NotImplemented
        return ComponentElement(self.support ^ other.support)

    def is_identity(self):
        return not self.support

    def sort_key(self):
        return (len(self.support), tuple(sorted(self.support)))

    def __eq__(self, other):
        return isinstance(other, ComponentElement) and self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def __str__(self):
        if not self.support:
            return "id"
        return "*".join("z%d" % i for i in sorted(self.support))

    def __repr__(self):
        return str(self)


IDENTITY = ComponentElement()


def canonical(raw, lam, series):
    """Normal form of a raw product against (lam, series).

    Drops every support entry whose part size is absent from lam or has
    the wrong parity for the series (such generators are the identity),
    including the transient entries 0 and -1 a recursion step can create.
    Idempotent.
    """
    parity = generator_parity(series)
    kept = [
        i
        for i in raw.support
        if i >= 1 and i % 2 == parity and lam.multiplicity(i) > 0
    ]
    return ComponentElement(kept)


def is_canonical_element(z, lam, series):
    """True when z is already in normal form and lies in the group for (lam, series).

    In series B and D this includes the even-cardinality condition that
    picks out the special orthogonal subgroup.
    """
    if canonical(z, lam, series) != z:
        return False
    if series is not Series.C and len(z.support) % 2 == 1:
        return False
    return True


def component_group(lam, series):
    """All component-group elements for (lam, series), identity first.

    Series C: all subsets of the even part sizes present.  Series B and D:
    the even-cardinality subsets of the odd part sizes present.  Ordered by
    (cardinality, sorted support), which makes table output deterministic.
    """
    parity = generator_parity(series)
    gens = sorted(i for i in lam.part_sizes() if i % 2 == parity)
    step = 1 if series is Series.C else 2
    out = []
    for k in range(0, len(gens) + 1, step):
        for combo in combinations(gens, k):
            out.append(ComponentElement(combo))
    out.sort(key=ComponentElement.sort_key)
    return out


def parse_z(text):
    """Parse 'id' or 'z2*z4' (part sizes ascending or not; we sort anyway)."""
    s = text.strip()
    if s == "id" or s == "":
        return IDENTITY
    support = []
    for tok in s.split("*"):
        tok = tok.strip()
        if not tok.startswith("z"):
            raise ValueError("bad component-group factor %r (want e.g. z2)" % tok)
        try:
            i = int(tok[1:])
        except ValueError:
            raise ValueError("bad component-group factor %r (want e.g. z2)" % tok) from None
        if i < 1:
            raise ValueError("bad component-group factor %r (part size must be >= 1)" % tok)
        support.append(i)
    if len(set(support)) != len(support):
        raise ValueError("repeated factor in %r" % text)
    return ComponentElement(support)
