"""Finite-dimensional irreducible representations of quantized sl2.

The weight basis is e_0, ..., e_{d-1} ordered by decreasing weight
(H e_k = (d-1-2k) e_k), with the lowering operator acting by coefficient 1
and the raising operator carrying the quantum-integer couplings.  In this
basis every generator matrix lives over Q(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .qring import ONE, ZERO, RingElem, q_int


def _as_entry(v):
    if isinstance(v, RingElem):
        return v
    if isinstance(v, (int, Fraction)):
        return RingElem.from_rational(v)
    raise TypeError("matrix entries must be RingElem, int or Fraction")


class QMatrix:
    """Dense matrix over Q(x).  Immutable after construction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(_as_entry(v) for v in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def _raw(cls, rows, cols, entries):
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        return m

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        row = (ZERO,) * cols
        return cls._raw(rows, cols, tuple(row for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        entries = tuple(
            tuple(_as_entry(values[i]) if i == j else ZERO for j in range(n))
            for i in range(n))
        return cls._raw(n, n, entries)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return QMatrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._same_shape(other)
        return QMatrix._raw(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        return QMatrix._raw(self.rows, self.cols, tuple(
            tuple(-a for a in row) for row in self.entries))

    def __mul__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        out = []
        for i in range(self.rows):
            acc = [ZERO] * other.cols
            row_a = self.entries[i]
            for k in range(self.cols):
                a = row_a[k]
                if not a.num.terms:
                    continue
                row_b = other.entries[k]
                for j in range(other.cols):
                    b = row_b[j]
                    if b.num.terms:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return QMatrix._raw(self.rows, other.cols, tuple(out))

    def scale(self, s):
        s = _as_entry(s)
        return QMatrix._raw(self.rows, self.cols, tuple(
            tuple(a * s for a in row) for row in self.entries))

    def kron(self, other):
        """Kronecker product with index convention (i, j) -> i*cols_other + j."""
        entries = []
        for i in range(self.rows):
            for p in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self.entries[i][j]
                    if a.num.terms:
                        row.extend(a * b for b in other.entries[p])
                    else:
                        row.extend([ZERO] * other.cols)
                entries.append(tuple(row))
        return QMatrix._raw(self.rows * other.rows, self.cols * other.cols,
                            tuple(entries))

    def transpose(self):
        return QMatrix._raw(self.cols, self.rows, tuple(zip(*self.entries)))

    def inverse(self):
        """Exact inverse by Gauss-Jordan elimination over Q(x)."""
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        work = [list(row) + [ONE if i == j else ZERO for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col].num.terms), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular over Q(x)")
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [v * inv for v in work[col]]
            for r in range(n):
                if r == col:
                    continue
                f = work[r][col]
                if f.num.terms:
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return QMatrix._raw(n, n, tuple(tuple(row[n:]) for row in work))

    # -- predicates -----------------------------------------------------------

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    @property
    def is_zero(self):
        return all(not a.num.terms for row in self.entries for a in row)

    def first_difference(self, other):
        """Position and values of the first differing entry, or None."""
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != other.entries[i][j]:
                    return i, j, self.entries[i][j], other.entries[i][j]
        return None

    # -- numeric bridge ---------------------------------------------------------

    def evaluate(self, q0):
        out = np.empty((self.rows, self.cols), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                out[i, j] = a.evaluate(q0)
        return out

    # -- serialization ------------------------------------------------------------

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[a.to_json() for a in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj):
        entries = [[RingElem.from_json(a) for a in row] for row in obj["entries"]]
        m = cls(entries)
        if m.rows != obj["rows"] or m.cols != obj["cols"]:
            raise ValueError("inconsistent matrix dimensions in JSON")
        return m

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]"
                         for row in self.entries)

    def __repr__(self):
        return "QMatrix(%dx%d)" % (self.rows, self.cols)


@dataclass(frozen=True)
class IrrepSpec:
    """Generator matrices of the d-dimensional irreducible representation."""

    dim: int
    weights: tuple
    H: QMatrix
    X: QMatrix
    Y: QMatrix
    E: QMatrix
    F: QMatrix
    K: QMatrix
    Kinv: QMatrix


@lru_cache(maxsize=None)
def irrep(d):
    """The d-dimensional irreducible representation in the weight basis."""
    if d < 1:
        raise ValueError("dimension must be positive, got %d" % d)
    weights = tuple(d - 1 - 2 * k for k in range(d))
    H = QMatrix.diagonal([RingElem.from_rational(h) for h in weights])
    K = QMatrix.diagonal([RingElem.x_power(2 * h) for h in weights])
    Kinv = QMatrix.diagonal([RingElem.x_power(-2 * h) for h in weights])

    y_rows = [[ONE if (i == j + 1) else ZERO for j in range(d)] for i in range(d)]
    Y = QMatrix(y_rows)
    x_rows = [[q_int(j) * q_int(d - j) if (i == j - 1) else ZERO
               for j in range(d)] for i in range(d)]
    X = QMatrix(x_rows)
    return IrrepSpec(dim=d, weights=weights, H=H, X=X, Y=Y,
                     E=K * X, F=Kinv * Y, K=K, Kinv=Kinv)


def weight_projector(d, m):
    """Diagonal idempotent onto the m-weight space of the d-dim irrep."""
    weights = irrep(d).weights
    return QMatrix.diagonal([ONE if h == m else ZERO for h in weights])


def h_power(d, r):
    """Diagonal matrix of q^(r*H) on the d-dim irrep; 8*r must be an integer."""
    r = Fraction(r)
    e8 = 8 * r
    if e8.denominator != 1:
        raise ValueError("q^(%s H) does not lie in Q(x)" % r)
    return QMatrix.diagonal(
        [RingElem.x_power(int(e8) * h) for h in irrep(d).weights])


def h_squared_eighth(d, sign=-1):
    """Diagonal matrix of q^(sign * H^2/8); eigenvalue x^(sign*h^2) at weight h."""
    return QMatrix.diagonal(
        [RingElem.x_power(sign * h * h) for h in irrep(d).weights])


def kron(a, b):
    return a.kron(b)


def flip(da, db):
    """The tensor flip V_a (x) V_b -> V_b (x) V_a."""
    entries = [[ZERO] * (da * db) for _ in range(db * da)]
    for i in range(da):
        for j in range(db):
            entries[j * da + i][i * db + j] = ONE
    return QMatrix(entries)
