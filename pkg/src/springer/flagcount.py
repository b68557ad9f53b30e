"""Brute-force verification: count nilpotent-stable flags over small fields.

The graded traces computed by `springer.traces` have an elementary
shadow: build the bilinear form, the nilpotent matrix N, and the
component-group involutions explicitly over F_q, then count complete
isotropic flags that N maps into themselves and that are fixed by the
(possibly twisted) q-power map.  For the identity element the count must
equal the Poincare polynomial of the Springer fiber evaluated at q; for
a twist z it must equal the graded trace of z at q.  None of the
recursion machinery is used here, so a match is genuine evidence.

Construction of the model, for one part size i with multiplicity m:
basis vectors v[s,t] (strings s = 1..m, positions t = 1..i) with
N v[s,t] = v[s,t+1] and v[s,t] pairing only with v[m+1-s, i+1-t].  The
pairing constants are +-1, arranged so the form is symmetric for the
orthogonal series and alternating for the symplectic one, and so that N
is skew for the form.  The involution attached to a generator-carrying
part size negates the middle string (m odd) or swaps the two middle
strings (m even); it commutes with N and preserves the form.

Counting caveats, all series-D:

* Borel subgroups of SO(2n) correspond to isotropic flags of length
  n-1, not n: an (n-1)-dimensional isotropic subspace extends to two
  maximal isotropics and the flag stabilizer fixes both.  Counting
  full-length flags would double every count, so the search stops at
  depth n-1.
* Over fields with -1 a nonsquare the textbook sign pattern can produce
  the nonsplit form of SO(2n) (e.g. Jordan type (5,1) at q = 3, where
  the two middle self-pairings are both +1 and x^2 + y^2 is
  anisotropic).  The counts would then refer to the wrong group, so the
  builder checks the discriminant and, when needed, flips the sign of
  one block with an odd part of odd multiplicity; entries stay +-1 and
  all model invariants survive.

A flag fixed by (twist o F) is defined over F_{q^2} because the square
of that map is the q^2-power map; so twisted counts enumerate over
F_{q^2} while plain counts stay over F_q.  Fields are table-driven and
all enumeration orders are fixed, so counts are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .compgroup import IDENTITY, component_group, generator_parity, is_canonical_element
from .partitions import Partition, Series, valid_partitions, validate
from .traces import graded_trace


def _is_odd_prime(q):
    if q < 3 or q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


class Field:
    """F_q or F_{q^2} for an odd prime q; elements are ints 0..order-1.

    Degree-2 elements encode a + b*t as a + q*b where t^2 is the smallest
    quadratic nonresidue mod q.  Arithmetic is table-driven: the oracle
    is a desk-scale tool and stays below a few thousand elements.
    """

    def __init__(self, q, degree=1):
        if not _is_odd_prime(q):
            raise ValueError("field characteristic must be an odd prime, got %d" % q)
        if degree not in (1, 2):
            raise ValueError("only F_q and F_{q^2} are supported")
        self.p = q
        self.degree = degree
        self.order = q**degree
        if self.order > 4096:
            raise ValueError("field with %d elements is too large for brute force" % self.order)
        if degree == 1:
            pairs = [(a, 0) for a in range(q)]
        else:
            nu = next(n for n in range(2, q) if _legendre(n, q) == -1)
            self.nonresidue = nu
            pairs = [(e % q, e // q) for e in range(self.order)]
        n = self.order

        def enc(a, b):
            return (a % q) + q * (b % q)

        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        neg = [0] * n
        frob = [0] * n
        for e1, (a1, b1) in enumerate(pairs):
            neg[e1] = enc(-a1, -b1)
            frob[e1] = enc(a1, -b1) if degree == 2 else e1
            for e2, (a2, b2) in enumerate(pairs):
                add[e1][e2] = enc(a1 + a2, b1 + b2)
                if degree == 1:
                    mul[e1][e2] = (a1 * a2) % q
                else:
                    mul[e1][e2] = enc(a1 * a2 + nu * b1 * b2, a1 * b2 + a2 * b1)
        inv = [0] * n
        for e in range(1, n):
            inv[e] = next(f for f in range(1, n) if mul[e][f] == 1)
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv
        self.frob_table = frob

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def frob(self, a):
        """The q-power map (identity on F_q, conjugation on F_{q^2})."""
        return self.frob_table[a]


# -- linear algebra over a Field ------------------------------------------------


def _rref(F, rows, width):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pr = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        s = inv[rows[r][c]]
        rows[r] = [mul[s][x] for x in rows[r]]
        lead = rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = neg[rows[k][c]]
                rk = rows[k]
                rows[k] = [add[rk[j]][mul[f][lead[j]]] for j in range(width)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _reduced_nullspace(F, rows, width):
    """Kernel basis in reduced form; returns (basis, free_columns).

    basis[k] is 1 at free_columns[k] and 0 at the other free columns, so
    any kernel vector v equals sum_k v[free_columns[k]] * basis[k].
    """
    ech, pivots = _rref(F, rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for k, p in enumerate(pivots):
            v[p] = F.neg_table[ech[k][f]]
        basis.append(v)
    return basis, free


def _matvec(F, M, v):
    mul = F.mul_table
    add = F.add_table
    out = []
    for row in M:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = add[s][mul[a][b]]
        out.append(s)
    return out


def _dot(F, u, v):
    mul = F.mul_table
    add = F.add_table
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = add[s][mul[a][b]]
    return s


def _matmul_mod(M1, M2, p):
    n = len(M1)
    return tuple(
        tuple(sum(M1[i][k] * M2[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def _det_mod(M, p):
    n = len(M)
    rows = [list(r) for r in M]
    det = 1
    for c in range(n):
        pr = next((k for k in range(c, n) if rows[k][c] % p != 0), None)
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = -det
        det = (det * rows[c][c]) % p
        invp = pow(rows[c][c], p - 2, p)
        for k in range(c + 1, n):
            if rows[k][c] % p != 0:
                f = (rows[k][c] * invp) % p
                rows[k] = [(rows[k][j] - f * rows[c][j]) % p for j in range(n)]
    return det % p


# -- the standard model ----------------------------------------------------------


@dataclass(frozen=True)
class StandardModel:
    """Bilinear form, nilpotent matrix, and twist involutions over F_q."""

    series: Series
    partition: Partition
    q: int
    dim: int
    gram: tuple
    nilpotent: tuple
    twists: dict
    labels: tuple  # basis index -> (part size, string, position)
    flipped_block: int  # part size whose signs were flipped for splitness, or 0


def build_standard_model(lam, series, q):
    """Realize a nilpotent of Jordan type lam inside the split group over F_q."""
    report = validate(lam, series)
    if not report.valid:
        raise ValueError("invalid partition for series %s: %s" % (series.value, report.reason))
    if not _is_odd_prime(q):
        raise ValueError("q must be an odd prime, got %d" % q)

    labels = []
    for i in lam.part_sizes():
        for s in range(1, lam.multiplicity(i) + 1):
            for t in range(1, i + 1):
                labels.append((i, s, t))
    index = {lab: k for k, lab in enumerate(labels)}
    dim = len(labels)
    gen_parity = generator_parity(series)

    def build_gram(flip_block):
        gram = [[0] * dim for _ in range(dim)]
        for (i, s, t), k in index.items():
            m = lam.multiplicity(i)
            if i % 2 == gen_parity:
                eps = 1  # uniform signs on generator-carrying blocks
            else:
                eps = 1 if 2 * s <= m else -1
            val = eps if t % 2 == 1 else -eps
            if i == flip_block:
                val = -val
            gram[k][index[(i, m + 1 - s, i + 1 - t)]] = val % q
        return gram

    flipped = 0
    gram = build_gram(0)
    if series is Series.D:
        # the split form of SO(2n) needs (-1)^n det to be a square
        n = dim // 2
        disc = (_det_mod(gram, q) * pow(q - 1, n, q)) % q
        if _legendre(disc, q) == -1:
            candidates = [
                i for i in lam.part_sizes() if i % 2 == 1 and lam.multiplicity(i) % 2 == 1
            ]
            flipped = min(candidates)
            gram = build_gram(flipped)
            disc = (_det_mod(gram, q) * pow(q - 1, n, q)) % q
            if _legendre(disc, q) != 1:
                raise AssertionError("sign flip failed to split the form")

    nilp = [[0] * dim for _ in range(dim)]
    for (i, s, t), k in index.items():
        if t < i:
            nilp[index[(i, s, t + 1)]][k] = 1

    twists = {}
    for i in lam.part_sizes():
        if i % 2 != gen_parity:
            continue
        m = lam.multiplicity(i)
        mat = [[1 if a == b else 0 for b in range(dim)] for a in range(dim)]
        if m % 2 == 1:
            mid = (m + 1) // 2
            for t in range(1, i + 1):
                k = index[(i, mid, t)]
                mat[k][k] = q - 1
        else:
            for t in range(1, i + 1):
                k1 = index[(i, m // 2, t)]
                k2 = index[(i, m // 2 + 1, t)]
                mat[k1][k1] = mat[k2][k2] = 0
                mat[k1][k2] = mat[k2][k1] = 1
        twists[i] = tuple(tuple(r) for r in mat)

    return StandardModel(
        series=series,
        partition=lam,
        q=q,
        dim=dim,
        gram=tuple(tuple(r) for r in gram),
        nilpotent=tuple(tuple(r) for r in nilp),
        twists=twists,
        labels=tuple(labels),
        flipped_block=flipped,
    )


def jordan_type(model):
    """Recover the Jordan type of the model's nilpotent from ranks of its powers."""
    p = model.q
    dim = model.dim
    ranks = [dim]
    M = tuple(tuple(r) for r in model.nilpotent)
    power = M
    while True:
        rows, pivots = _rref(Field(p, 1), power, dim)
        ranks.append(len(pivots))
        if len(pivots) == 0:
            break
        power = _matmul_mod(power, M, p)
    parts = []
    for t in range(1, len(ranks)):
        at_least_t = ranks[t - 1] - ranks[t]
        at_least_t1 = ranks[t] - ranks[t + 1] if t + 1 < len(ranks) else 0
        parts.extend([t] * (at_least_t - at_least_t1))
    return Partition(parts)


# -- flag counting ----------------------------------------------------------------


def _flag_depth(series, dim):
    if series is Series.C:
        return dim // 2
    if series is Series.B:
        return (dim - 1) // 2
    return dim // 2 - 1  # D: Borels correspond to isotropic flags of length n-1


def _count(F, gram, nmat, zmat, depth, orthogonal):
    if depth == 0:
        return 1
    d = len(gram)
    kbasis, _ = _reduced_nullspace(F, nmat, d)
    k = len(kbasis)
    order = F.order
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    frob = F.frob_table
    total = 0
    for lead in range(k):
        base = kbasis[lead]
        for tail in product(range(order), repeat=k - 1 - lead):
            w = list(base)
            for off, c in enumerate(tail):
                if c:
                    bv = kbasis[lead + 1 + off]
                    w = [add[w[j]][mul[c][bv[j]]] for j in range(d)]
            if orthogonal and _dot(F, w, _matvec(F, gram, w)) != 0:
                continue
            if zmat is not None:
                u = _matvec(F, zmat, [frob[x] for x in w])
                piv = next(j for j in range(d) if w[j] != 0)
                c0 = mul[u[piv]][inv[w[piv]]]
                if any(u[j] != mul[c0][w[j]] for j in range(d)):
                    continue
            if depth == 1:
                total += 1
                continue
            total += _count(F, *(_line_quotient(F, gram, nmat, zmat, w)), depth - 1, orthogonal)
    return total


def _line_quotient(F, gram, nmat, zmat, w):
    """Model induced on (perp of w) / (line of w)."""
    d = len(gram)
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    row = [_dot(F, w, [gram[a][j] for a in range(d)]) for j in range(d)]
    ebasis, efree = _reduced_nullspace(F, [row], d)
    c = [w[f] for f in efree]
    k0 = next(k for k in range(len(c)) if c[k] != 0)
    inv_c0 = inv[c[k0]]
    sel = [k for k in range(len(ebasis)) if k != k0]
    basis = [ebasis[k] for k in sel]

    def coords(y):
        t0 = mul[y[efree[k0]]][inv_c0]
        return [add[y[efree[k]]][neg[mul[t0][c[k]]]] for k in sel]

    gb = [_matvec(F, gram, b) for b in basis]
    new_gram = [[_dot(F, basis[a], gb[b]) for b in range(len(basis))] for a in range(len(basis))]
    ncols = [coords(_matvec(F, nmat, b)) for b in basis]
    new_n = [[ncols[a][r] for a in range(len(basis))] for r in range(len(basis))]
    if zmat is None:
        new_z = None
    else:
        frob = F.frob_table
        zcols = [coords(_matvec(F, zmat, [frob[x] for x in b])) for b in basis]
        new_z = [[zcols[a][r] for a in range(len(basis))] for r in range(len(basis))]
    return new_gram, new_n, new_z


def count_fixed_flags(model, z, q=None):
    """Count isotropic flags stabilized by the nilpotent and fixed by (twist o F).

    For z = id the enumeration runs over F_q; otherwise over F_{q^2},
    where all flags fixed by the twisted q-power map live.
    """
    if q is not None and q != model.q:
        raise ValueError("model was built for q = %d, not %d" % (model.q, q))
    q = model.q
    if not is_canonical_element(z, model.partition, model.series):
        raise ValueError("%s is not a component-group element for this model" % z)
    missing = [i for i in z.support if i not in model.twists]
    if missing:
        raise ValueError("model carries no twist for part size(s) %s" % missing)
    twisted = not z.is_identity()
    F = Field(q, 2 if twisted else 1)
    zmat = None
    if twisted:
        mat = tuple(tuple(1 if a == b else 0 for b in range(model.dim)) for a in range(model.dim))
        for i in sorted(z.support):
            mat = _matmul_mod(mat, model.twists[i], q)
        zmat = [list(r) for r in mat]
    gram = [list(r) for r in model.gram]
    nmat = [list(r) for r in model.nilpotent]
    depth = _flag_depth(model.series, model.dim)
    orthogonal = model.series is not Series.C
    return _count(F, gram, nmat, zmat, depth, orthogonal)


# -- end-to-end verification -------------------------------------------------------


@dataclass(frozen=True)
class FlagCountReport:
    series: Series
    partition: Partition
    z: object
    q: int
    count: int
    predicted: int
    match: bool


def verify(lam, z, series, q):
    """Compare the flag count with the graded trace evaluated at q."""
    model = build_standard_model(lam, series, q)
    count = count_fixed_flags(model, z)
    predicted = int(graded_trace(lam, z, series).eval_at(q))
    return FlagCountReport(series, lam, z, q, count, predicted, count == predicted)


def verify_range(series, max_size, q, twisted=False, twisted_max_size=4):
    """Reports for every valid Jordan type up to max_size, identity twists only
    unless `twisted`; nontrivial twists are gated by twisted_max_size since they
    enumerate over F_{q^2}."""
    reports = []
    start = 1 if series is Series.B else 2
    for size in range(start, max_size + 1):
        if (size - start) % 2 == 1:
            continue
        for lam in valid_partitions(series, size):
            if twisted:
                zs = [
                    z
                    for z in component_group(lam, series)
                    if z.is_identity() or size <= twisted_max_size
                ]
            else:
                zs = [IDENTITY]
            for z in zs:
                reports.append(verify(lam, z, series, q))
    return reports
