"""Exact sparse linear algebra over the rationals.

Every rank, kernel and subspace comparison in the toolkit runs through this
module.  There is no floating point anywhere: vectors carry ``Fraction``
values at the interface, and the elimination engine works on
content-normalized integer rows (a scalar multiple of a row spans the same
space, so scale-free integer arithmetic is both exact and fast).

Row spaces are presented in reduced row echelon form.  RREF is unique for a
given row space, so results do not depend on the order in which vectors are
fed in.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

__all__ = [
    "SparseVec",
    "Subspace",
    "echelonize",
    "rank",
    "kernel_basis",
    "left_kernel",
    "subspace_contains",
    "subspace_equal",
    "subspace_sum",
    "subspace_intersect",
    "rank_mod",
    "rref_mod",
    "random_prime",
    "modular_rank_check",
]

_STRIP_EVERY = 8  # axpy steps between content reductions of a work vector


def _as_pairs(entries):
    if isinstance(entries, SparseVec):
        return entries.pairs
    if isinstance(entries, dict):
        return entries.items()
    return entries


def _strip(row):
    """Divide an integer row by its content and make the leading entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        for c in row:
            row[c] //= g
    return row


def _int_row_scaled(entries):
    """(integer row, s) with row = s * entries, s a positive rational."""
    acc = {}
    for c, v in _as_pairs(entries):
        f = Fraction(v)
        if f:
            acc[c] = acc.get(c, Fraction(0)) + f
    acc = {c: f for c, f in acc.items() if f}
    if not acc:
        return {}, Fraction(1)
    den = 1
    for f in acc.values():
        d = f.denominator
        den = den // gcd(den, d) * d
    row = {c: int(f * den) for c, f in acc.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g != 1:
        for c in row:
            row[c] //= g
    return row, Fraction(den, g)


def _int_row(entries):
    """Clear denominators: rational entries -> content-1 integer dict."""
    return _int_row_scaled(entries)[0]


class SparseVec:
    """Immutable sorted sparse vector with Fraction values."""

    __slots__ = ("pairs",)

    def __init__(self, entries=()):
        if isinstance(entries, SparseVec):
            self.pairs = entries.pairs
            return
        acc = {}
        for c, v in _as_pairs(entries):
            f = Fraction(v)
            if f:
                c = int(c)
                s = acc.get(c, Fraction(0)) + f
                if s:
                    acc[c] = s
                else:
                    del acc[c]
        self.pairs = tuple(sorted(acc.items()))

    def items(self):
        return iter(self.pairs)

    def to_dict(self):
        return dict(self.pairs)

    def get(self, col, default=Fraction(0)):
        for c, v in self.pairs:
            if c == col:
                return v
        return default

    def leading(self):
        """(column, value) of the first nonzero entry, or None."""
        return self.pairs[0] if self.pairs else None

    def __len__(self):
        return len(self.pairs)

    def __bool__(self):
        return bool(self.pairs)

    def __eq__(self, other):
        if isinstance(other, SparseVec):
            return self.pairs == other.pairs
        return NotImplemented

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return f"SparseVec({list(self.pairs)!r})"


class _Builder:
    """Forward Gaussian elimination on integer rows, one pivot per column."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}  # pivot column -> integer row dict

    def reduce(self, v):
        """Destructively reduce v against the stored rows; returns v."""
        rows = self.rows
        steps = 0
        while v:
            lead = min(v)
            row = rows.get(lead)
            if row is None:
                break
            a = row[lead]
            b = v.pop(lead)
            # v := a*v - b*row ; the lead entries cancel exactly
            if a != 1:
                for c in v:
                    v[c] *= a
            for c, x in row.items():
                if c == lead:
                    continue
                y = v.get(c, 0) - b * x
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
            steps += 1
            if steps % _STRIP_EVERY == 0 and v:
                _strip(v)
        return _strip(v) if v else v

    def add(self, v):
        """Insert a (destructible) integer row; True if the dimension grew."""
        v = self.reduce(v)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    def contains(self, v):
        return not self.reduce(v)


def _back_substitute(rows):
    """Turn forward-echelon rows (pivot -> row) into RREF, in place."""
    pivots = sorted(rows)
    for i in range(len(pivots) - 1, -1, -1):
        p = pivots[i]
        rp = rows[p]
        a = rp[p]
        for q in pivots[:i]:
            rq = rows[q]
            b = rq.get(p)
            if not b:
                continue
            for c in rq:
                rq[c] *= a
            for c, x in rp.items():
                y = rq.get(c, 0) - b * x
                if y:
                    rq[c] = y
                else:
                    rq.pop(c, None)
            _strip(rq)


class Subspace:
    """A vector subspace of Q^N held as a reduced row echelon basis.

    Internally rows are content-1 integer vectors; the ``rows`` property
    materializes the usual pivot-is-1 rational RREF.  Instances are
    conceptually immutable: RREF finalization is a cached, deterministic
    normalization and every query is read-only.
    """

    __slots__ = ("_rows", "_finalized", "_frac_rows")

    def __init__(self, vectors=(), *, _rows=None, _finalized=False):
        if _rows is not None:
            self._rows = _rows
            self._finalized = _finalized
        else:
            b = _Builder()
            for vec in vectors:
                b.add(_int_row(vec))
            self._rows = b.rows
            self._finalized = False
        self._frac_rows = None

    @classmethod
    def zero(cls):
        return cls(())

    @property
    def dim(self):
        return len(self._rows)

    @property
    def pivots(self):
        """Pivot columns in increasing order."""
        return tuple(sorted(self._rows))

    def _finalize(self):
        if not self._finalized:
            _back_substitute(self._rows)
            self._finalized = True

    @property
    def rows(self):
        """RREF rows (pivot value 1) in increasing pivot order."""
        if self._frac_rows is None:
            self._finalize()
            out = []
            for p in sorted(self._rows):
                row = self._rows[p]
                piv = row[p]
                out.append(SparseVec((c, Fraction(v, piv)) for c, v in row.items()))
            self._frac_rows = tuple(out)
        return self._frac_rows

    def contains(self, vec):
        b = _Builder()
        b.rows = self._rows
        return b.contains(_int_row(vec))

    def coords(self, vec):
        """Coefficients of vec in the RREF basis, or None if not in the space.

        For a vector of the space the expansion coefficients are just its
        values at the pivot columns.
        """
        if not self.contains(vec):
            return None
        d = {c: Fraction(v) for c, v in _as_pairs(vec)}
        return tuple(d.get(p, Fraction(0)) for p in self.pivots)

    def _canonical(self):
        self._finalize()
        return {p: tuple(sorted(row.items())) for p, row in self._rows.items()}

    def __eq__(self, other):
        if isinstance(other, Subspace):
            return self._canonical() == other._canonical()
        return NotImplemented

    def __le__(self, other):
        """Containment of subspaces."""
        if not isinstance(other, Subspace):
            return NotImplemented
        return all(other.contains(r) for r in self.rows)

    def __hash__(self):
        return hash(frozenset(self._canonical().items()))

    def __repr__(self):
        return f"<Subspace dim={self.dim} pivots={self.pivots[:8]}{'...' if self.dim > 8 else ''}>"


def echelonize(vectors, *, stop_dim=None, presort=True):
    """Reduced row echelon basis of the span of the given vectors.

    ``stop_dim`` aborts insertion once that dimension is reached; callers use
    it only when the span is independently known to be capped at stop_dim.
    ``presort`` feeds short vectors first, which keeps pivot rows sparse; the
    final RREF does not depend on it.
    """
    rows = [_int_row(v) for v in vectors]
    if presort:
        rows.sort(key=lambda r: (len(r), sorted(r.items())))
    b = _Builder()
    for r in rows:
        if b.add(r) and stop_dim is not None and len(b.rows) >= stop_dim:
            break
    return Subspace(_rows=b.rows)


def rank(vectors):
    return echelonize(vectors).dim


def kernel_basis(rows, ncols):
    """RREF basis of { v in Q^ncols : M v = 0 } for the matrix with the given rows."""
    rows = [_int_row(r) for r in rows]
    for r in rows:
        if r and max(r) >= ncols:
            raise ValueError(f"row index {max(r)} out of range for {ncols} columns")
    space = Subspace(_rows=_Builder_rows(rows))
    space._finalize()
    pivot_cols = space.pivots
    pivot_set = set(pivot_cols)
    rref = space.rows
    vecs = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for p, row in zip(pivot_cols, rref):
            val = row.get(free)
            if val:
                v[p] = -val
        vecs.append(v)
    return echelonize(vecs, presort=False)


def _Builder_rows(int_rows):
    b = _Builder()
    for r in int_rows:
        b.add(dict(r))
    return b.rows


def left_kernel(rows):
    """RREF basis of { c : sum_i c_i * rows_i = 0 }, coordinates = row indices.

    Implemented by eliminating rows augmented with an identity block; a row
    whose original part dies leaves its combination recorded in the id block.
    Input rows are scaled to integers for the elimination, so the recorded
    combinations refer to the scaled rows and are mapped back at the end.
    """
    scaled = [_int_row_scaled(r) for r in rows]
    offset = 0
    for r, _ in scaled:
        if r:
            offset = max(offset, max(r) + 1)
    b = _Builder()
    for i, (r, _) in enumerate(scaled):
        aug = dict(r)
        aug[offset + i] = 1
        b.add(aug)
    kvecs = []
    for p, row in b.rows.items():
        if p >= offset:
            # c_i applies to s_i * rows_i, so c_i * s_i applies to rows_i
            kvecs.append({c - offset: v * scaled[c - offset][1]
                          for c, v in row.items()})
    return echelonize(kvecs, presort=False)


def subspace_contains(space, vec):
    return space.contains(vec)


def subspace_equal(a, b):
    return a == b


def subspace_sum(a, b):
    vecs = [r.to_dict() for r in a.rows] + [r.to_dict() for r in b.rows]
    return echelonize(vecs, presort=False)


def subspace_intersect(a, b):
    """Zassenhaus: eliminate [u|u] rows for a and [w|0] rows for b; rows whose
    left block vanishes carry a basis of the intersection in the right block."""
    offset = 0
    for s in (a, b):
        for r in s.rows:
            if r:
                offset = max(offset, r.pairs[-1][0] + 1)
    stacked = []
    for r in a.rows:
        d = r.to_dict()
        d.update({c + offset: v for c, v in r.items()})
        stacked.append(d)
    for r in b.rows:
        stacked.append(r.to_dict())
    builder = _Builder()
    for v in stacked:
        builder.add(_int_row(v))
    vecs = []
    for p, row in builder.rows.items():
        if p >= offset:
            vecs.append({c - offset: v for c, v in row.items()})
    return echelonize(vecs, presort=False)


# -- modular self-checks ----------------------------------------------------
#
# Never the primary result: ranks over Q are recomputed mod large primes as an
# independent cross-check (rank mod p can only drop, so agreement certifies).

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(bits=62, rng=None):
    rng = rng or random
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if _is_probable_prime(n):
            return n


def _mod_rows(vectors, p):
    out = []
    for vec in vectors:
        d = {}
        for c, v in _as_pairs(vec):
            f = Fraction(v)
            if f.denominator % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            x = f.numerator * pow(f.denominator, -1, p) % p
            if x:
                d[c] = x
        out.append(d)
    return out


def rref_mod(vectors, p):
    """RREF over GF(p): returns {pivot: row-dict} with pivot value 1."""
    rows = {}
    for v in _mod_rows(vectors, p):
        while v:
            lead = min(v)
            row = rows.get(lead)
            if row is None:
                inv = pow(v[lead], -1, p)
                rows[lead] = {c: x * inv % p for c, x in v.items()}
                v = None
                break
            b = v.pop(lead)
            for c, x in row.items():
                if c == lead:
                    continue
                y = (v.get(c, 0) - b * x) % p
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
    pivots = sorted(rows)
    for i in range(len(pivots) - 1, -1, -1):
        piv = pivots[i]
        rp = rows[piv]
        for q in pivots[:i]:
            rq = rows[q]
            b = rq.get(piv)
            if not b:
                continue
            for c, x in rp.items():
                y = (rq.get(c, 0) - b * x) % p
                if y:
                    rq[c] = y
                else:
                    rq.pop(c, None)
    return rows


def rank_mod(vectors, p):
    return len(rref_mod(vectors, p))


def modular_rank_check(vectors, *, primes=None, seed=2026):
    """True iff the exact rank agrees with the rank modulo two large primes."""
    if primes is None:
        rng = random.Random(seed)
        p1 = random_prime(rng=rng)
        p2 = random_prime(rng=rng)
        while p2 == p1:
            p2 = random_prime(rng=rng)
        primes = (p1, p2)
    exact = rank(vectors)
    try:
        return all(rank_mod(vectors, p) == exact for p in primes)
    except ZeroDivisionError:
        return modular_rank_check(vectors, seed=seed + 1)
