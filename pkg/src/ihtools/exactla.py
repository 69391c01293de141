"""Exact sparse linear algebra over the rationals.

Two layers live here.  The public layer (:class:`QMatrix`, :class:`Subspace`
and the free functions) works with :class:`fractions.Fraction` entries and
canonical reduced echelon bases, so subspace equality is a plain comparison.
The private layer (``_reduce_columns`` and :class:`_Echelon`) works on sparse
integer column vectors keyed by their *low* index (largest nonzero row) and is
what the homology code uses on boundary matrices, where entries are +-1 and
full back substitution would only create fill-in.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

Rational = Fraction

IntVec = Dict[int, int]
QVec = Dict[int, Fraction]


class DimensionMismatch(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QMatrix:
    """Immutable sparse matrix of rationals; absent entries are zero."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), x in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            x = _as_fraction(x)
            if x:
                clean[(i, j)] = x
        self._entries = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]], cols: Optional[int] = None) -> "QMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise DimensionMismatch("ragged dense matrix")
            for j, x in enumerate(row):
                if x:
                    entries[(i, j)] = x
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "QMatrix":
        entries = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                entries[(i, j)] = x
        return cls(rows, len(columns), entries)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entries.get((i, j), Fraction(0))

    def columns(self) -> List[QVec]:
        cols: List[QVec] = [{} for _ in range(self.cols)]
        for (i, j), x in self._entries.items():
            cols[j][i] = x
        return cols

    def column(self, j: int) -> QVec:
        return {i: x for (i, jj), x in self._entries.items() if jj == j}

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), x in self._entries.items():
            out[i][j] = x
        return out

    def is_zero(self) -> bool:
        return not self._entries

    # -- arithmetic -----------------------------------------------------
    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self._entries.items()})

    T = property(transpose)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), y in other._entries.items():
            by_row.setdefault(k, []).append((j, y))
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), x in self._entries.items():
            for j, y in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + x * y
        return QMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[object]) -> List[Fraction]:
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (i, j), x in self._entries.items():
            if vec[j]:
                out[i] += x * vec[j]
        return out

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack needs equal row counts")
        entries = dict(self._entries)
        entries.update({(i, j + self.cols): x for (i, j), x in other._entries.items()})
        return QMatrix(self.rows, self.cols + other.cols, entries)

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, {k: -x for k, x in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = "; ".join(" ".join(str(x) for x in row) for row in self.to_dense())
            return f"QMatrix({self.rows}x{self.cols}: [{body}])"
        return f"QMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


# ---------------------------------------------------------------------------
# integer column reduction (fraction-free)


def _low(v: Mapping[int, object]) -> int:
    return max(v)


def _primitive(v: IntVec, t: Optional[IntVec] = None) -> None:
    """Divide v (and its tracking vector) by their common content, in place."""
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return
    if t:
        for x in t.values():
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for k in v:
            v[k] //= g
        if t:
            for k in t:
                t[k] //= g


def _combine(a: int, v: IntVec, b: int, w: Mapping[int, int]) -> None:
    """v <- a*v - b*w in place, dropping zeros."""
    if a != 1:
        for k in v:
            v[k] *= a
    for k, x in w.items():
        y = v.get(k, 0) - b * x
        if y:
            v[k] = y
        else:
            v.pop(k, None)


def to_int_vector(v: Mapping[int, object]) -> IntVec:
    """Scale a rational sparse vector to a primitive integer one (same span)."""
    fr = {k: _as_fraction(x) for k, x in v.items() if x}
    if not fr:
        return {}
    den = lcm(*(x.denominator for x in fr.values()))
    out = {k: int(x * den) for k, x in fr.items()}
    _primitive(out)
    return out


class _Echelon:
    """Sparse vectors with pairwise distinct low indices.

    Each stored vector carries an optional tag; :meth:`decompose` expresses a
    vector in the span as a combination and reports the coefficients of tagged
    members.
    """

    def __init__(self):
        self.by_low: Dict[int, Tuple[IntVec, object]] = {}

    def __len__(self) -> int:
        return len(self.by_low)

    def add(self, v: Mapping[int, int], tag=None) -> Optional[int]:
        """Reduce v against the stored vectors; store the remainder if nonzero.

        Returns the low of the stored remainder or None if v was dependent.
        """
        v = dict(v)
        by_low = self.by_low
        while v:
            l = _low(v)
            hit = by_low.get(l)
            if hit is None:
                _primitive(v)
                by_low[l] = (v, tag)
                return l
            w = hit[0]
            a, b = v[l], w[l]
            g = gcd(a, b)
            _combine(b // g, v, a // g, w)
        return None

    def reduce(self, v: Mapping[int, object]) -> QVec:
        """Remainder of a rational vector modulo the span (zero iff in span)."""
        rem, _ = self.decompose(v)
        return rem

    def decompose(self, v: Mapping[int, object]) -> Tuple[QVec, Dict[object, Fraction]]:
        x: QVec = {k: _as_fraction(c) for k, c in v.items() if c}
        coeffs: Dict[object, Fraction] = {}
        by_low = self.by_low
        while x:
            l = _low(x)
            hit = by_low.get(l)
            if hit is None:
                break
            w, tag = hit
            c = x[l] / w[l]
            for k, y in w.items():
                z = x.get(k, 0) - c * y
                if z:
                    x[k] = z
                else:
                    x.pop(k, None)
            if tag is not None:
                coeffs[tag] = coeffs.get(tag, 0) + c
        return x, coeffs

    def vectors(self) -> List[IntVec]:
        return [self.by_low[l][0] for l in sorted(self.by_low)]


def reduce_columns(columns: Sequence[Mapping[int, int]], track: bool = False):
    """Column-reduce integer sparse columns left to right.

    Returns ``(echelon, kernel)``.  ``echelon`` maps each low row index to the
    reduced column with that low.  With ``track`` set, ``kernel`` lists integer
    kernel vectors (over column indices) whose own low is the column that
    reduced to zero; otherwise ``kernel`` is just the list of those columns.
    """
    pivots: Dict[int, Tuple[IntVec, Optional[IntVec]]] = {}
    kernel: list = []
    for j, col in enumerate(columns):
        v = dict(col)
        t = {j: 1} if track else None
        while v:
            l = _low(v)
            hit = pivots.get(l)
            if hit is None:
                break
            w, tw = hit
            a, b = v[l], w[l]
            g = gcd(a, b)
            a, b = a // g, b // g
            _combine(b, v, a, w)
            if track:
                _combine(b, t, a, tw)
            if v:
                _primitive(v, t)
        if v:
            if track:
                _primitive(v, t)
            pivots[_low(v)] = (v, t)
        elif track:
            _primitive(t)
            kernel.append(t)
        else:
            kernel.append(j)
    return {l: vt[0] for l, vt in pivots.items()}, kernel


# ---------------------------------------------------------------------------
# canonical subspaces


def _rref_vectors(vectors: Iterable[Mapping[int, object]]) -> List[QVec]:
    """Reduced echelon basis of the span; pivot = smallest index, value 1."""
    basis: Dict[int, QVec] = {}  # pivot -> vector
    for v in vectors:
        x = {k: _as_fraction(c) for k, c in v.items() if c}
        for p in sorted(set(x) & set(basis)):
            c = x.get(p)
            if c:
                for k, y in basis[p].items():
                    z = x.get(k, 0) - c * y
                    if z:
                        x[k] = z
                    else:
                        x.pop(k, None)
        if not x:
            continue
        p = min(x)
        c = x[p]
        x = {k: y / c for k, y in x.items()}
        for q, w in basis.items():
            d = w.get(p)
            if d:
                for k, y in x.items():
                    z = w.get(k, 0) - d * y
                    if z:
                        w[k] = z
                    else:
                        w.pop(k, None)
        basis[p] = x
    return [basis[p] for p in sorted(basis)]


class Subspace:
    """A subspace of Q^n held by its reduced column-echelon basis."""

    __slots__ = ("ambient_dim", "_vectors")

    def __init__(self, ambient_dim: int, vectors: Iterable[Mapping[int, object]] = ()):
        self.ambient_dim = ambient_dim
        vecs = _rref_vectors(vectors)
        for v in vecs:
            if v and not (0 <= min(v) and max(v) < ambient_dim):
                raise IndexError("vector index outside ambient space")
        self._vectors = tuple(tuple(sorted(v.items())) for v in vecs)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [{i: 1} for i in range(n)])

    @classmethod
    def span(cls, n: int, dense_vectors: Iterable[Sequence[object]]) -> "Subspace":
        return cls(n, [{i: x for i, x in enumerate(v) if x} for v in dense_vectors])

    @property
    def rank(self) -> int:
        return len(self._vectors)

    dim = rank

    @property
    def basis(self) -> QMatrix:
        return QMatrix.from_columns(self.ambient_dim, self.vectors())

    @property
    def pivots(self) -> List[int]:
        return [v[0][0] for v in self._vectors]

    def vectors(self) -> List[QVec]:
        return [dict(v) for v in self._vectors]

    def dense_vectors(self) -> List[List[Fraction]]:
        out = []
        for v in self._vectors:
            row = [Fraction(0)] * self.ambient_dim
            for i, x in v:
                row[i] = x
            out.append(row)
        return out

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def contains_vector(self, v: Mapping[int, object] | Sequence[object]) -> bool:
        if not isinstance(v, Mapping):
            v = {i: x for i, x in enumerate(v) if x}
        x = {k: _as_fraction(c) for k, c in v.items() if c}
        for vec in self._vectors:
            p = vec[0][0]
            c = x.get(p)
            if c:
                for k, y in vec:
                    z = x.get(k, 0) - c * y
                    if z:
                        x[k] = z
                    else:
                        x.pop(k, None)
        return not x

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        # x in both iff x = A a = B b; kernel of [A | -B]
        a, b = self.vectors(), other.vectors()
        if not a or not b:
            return Subspace(self.ambient_dim)
        stacked = QMatrix.from_columns(self.ambient_dim, a).hstack(-QMatrix.from_columns(self.ambient_dim, b))
        ker = kernel_basis(stacked)
        out = []
        for kv in ker.vectors():
            x: QVec = {}
            for j, c in kv.items():
                if j < len(a):
                    for i, y in a[j].items():
                        x[i] = x.get(i, 0) + c * y
            out.append(x)
        return Subspace(self.ambient_dim, out)

    __and__ = intersect

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(v) for v in other.vectors())

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._vectors == other._vectors

    def __hash__(self):
        return hash((self.ambient_dim, self._vectors))

    def __iter__(self) -> Iterator[QVec]:
        return iter(self.vectors())

    def __repr__(self) -> str:
        return f"Subspace(rank {self.rank} in Q^{self.ambient_dim})"


# ---------------------------------------------------------------------------
# public operations


def rank(m: QMatrix) -> int:
    """Rank over Q by fraction-free elimination on the sparser side."""
    cols = m.columns() if m.cols <= m.rows else m.transpose().columns()
    # sparsest columns first keeps fill-in down
    ints = sorted((to_int_vector(c) for c in cols), key=len)
    echelon, _ = reduce_columns(ints)
    return len(echelon)


def _common_scale(columns: Sequence[Mapping[int, Fraction]]) -> List[IntVec]:
    """Clear all denominators with one common factor (column ratios preserved)."""
    den = lcm(1, *(x.denominator for c in columns for x in c.values()))
    return [{i: int(x * den) for i, x in c.items() if x} for c in columns]


def kernel_basis(m: QMatrix) -> Subspace:
    cols = _common_scale(m.columns())
    _, kernel = reduce_columns(cols, track=True)
    return Subspace(m.cols, kernel)


def image_basis(m: QMatrix) -> Subspace:
    return Subspace(m.rows, m.columns())


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff b is contained in a."""
    return a.contains(b)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._check(b)
    return a == b


def annihilator(s: Subspace) -> Subspace:
    """Functionals (in dual coordinates) vanishing on s."""
    rows = QMatrix.from_columns(s.ambient_dim, s.vectors()).transpose()
    return kernel_basis(rows)


def preimage(m: QMatrix, s: Subspace) -> Subspace:
    """{v : m v in s}."""
    if s.ambient_dim != m.rows:
        raise DimensionMismatch(f"subspace lives in Q^{s.ambient_dim}, map lands in Q^{m.rows}")
    ann = annihilator(s)
    constraints = QMatrix.from_columns(m.rows, ann.vectors()).transpose() @ m
    return kernel_basis(constraints)


def apply_to_subspace(m: QMatrix, s: Subspace) -> Subspace:
    """Image m(s)."""
    if s.ambient_dim != m.cols:
        raise DimensionMismatch(f"subspace lives in Q^{s.ambient_dim}, map starts at Q^{m.cols}")
    cols = m.columns()
    out = []
    for v in s.vectors():
        x: QVec = {}
        for j, c in v.items():
            for i, y in cols[j].items():
                x[i] = x.get(i, 0) + c * y
        out.append(x)
    return Subspace(m.rows, out)
