"""Exact linear algebra over the rationals.

Matrices are dense and immutable; subspaces are stored by the reduced row
echelon form of a basis, so two subspaces are equal iff their bases are
identical tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted: %r" % (x,))
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


@dataclass(frozen=True)
class MatrixQ:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of rows

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entries do not match shape %dx%d" % (self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "MatrixQ":
        data = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        z = Fraction(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        z, one = Fraction(0), Fraction(1)
        return cls(n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "MatrixQ":
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                       tuple(() for _ in range(self.cols)))

    @property
    def T(self) -> "MatrixQ":
        return self.transpose()

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise DimensionMismatch("cannot multiply %s by %s" % (self.shape, other.shape))
        # row-by-row, skipping zero entries; these matrices are mostly sparse
        z = Fraction(0)
        out = []
        for r in self.entries:
            acc = [z] * other.cols
            for t, a in enumerate(r):
                if a:
                    for j, b in enumerate(other.entries[t]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return MatrixQ(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch("vector of length %d for %s matrix" % (len(v), self.shape))
        nz = [(j, b) for j, b in enumerate(v) if b]
        z = Fraction(0)
        out = []
        for r in self.entries:
            acc = z
            for j, b in nz:
                if r[j]:
                    acc += r[j] * b
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch %s vs %s" % (self.shape, other.shape))
        return MatrixQ(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        return self + other.scale(-1)

    def __neg__(self) -> "MatrixQ":
        return self.scale(-1)

    def scale(self, c) -> "MatrixQ":
        c = as_fraction(c)
        return MatrixQ(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def to_json(self) -> list:
        return [[format_rational(a) for a in r] for r in self.entries]

    def __repr__(self):
        return "MatrixQ(%dx%d, %s)" % (self.rows, self.cols, self.to_json())


def block_diag(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    z = Fraction(0)
    rows = [r + (z,) * b.cols for r in a.entries] + [(z,) * a.cols + r for r in b.entries]
    return MatrixQ(a.rows + b.rows, a.cols + b.cols, tuple(rows))


def kron(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return MatrixQ(a.rows * b.rows, a.cols * b.cols, tuple(rows))


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of the given rows; returns (nonzero rows, pivot columns)."""
    m = [[x if type(x) is Fraction else as_fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv if x else x for x in m[r]]
        nz = [(j, y) for j, y in enumerate(m[r]) if y]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                for j, y in nz:
                    mi[j] -= f * y
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: MatrixQ) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return len(rref(a.entries, a.cols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n, held as the RREF basis of its span."""

    ambient_dim: int
    basis: tuple  # tuple of RREF rows

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [v for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector of length %d in %d-space" % (len(v), ambient_dim))
        rows, _ = rref(vecs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, MatrixQ.identity(n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span_sum(self, other)

    def contains(self, other: "Subspace") -> bool:
        return contains(self, other)

    def contains_vector(self, v: Sequence) -> bool:
        return contains(self, Subspace.span([v], self.ambient_dim))

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x != 0) for r in self.basis]

    def annihilator(self) -> "Subspace":
        """Vectors y with y . u = 0 for every u in the subspace."""
        return kernel_basis(MatrixQ(self.dim, self.ambient_dim, self.basis)) if self.dim else \
            Subspace.full(self.ambient_dim)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in the echelon basis; raises if v is not in the span."""
        v = [as_fraction(x) for x in v]
        coeffs = []
        for row, p in zip(self.basis, self.pivots()):
            c = v[p]
            coeffs.append(c)
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        if any(v):
            raise ValueError("vector not in subspace")
        return tuple(coeffs)

    def matrix(self) -> MatrixQ:
        """Basis vectors as columns."""
        return MatrixQ.from_columns(self.basis, self.ambient_dim)


def kernel_basis(a: MatrixQ) -> Subspace:
    if a.rows == 0:
        return Subspace.full(a.cols)
    rows, pivots = rref(a.entries, a.cols)
    free = [c for c in range(a.cols) if c not in set(pivots)]
    vecs = []
    for fc in free:
        v = [Fraction(0)] * a.cols
        v[fc] = Fraction(1)
        for r, pc in zip(rows, pivots):
            v[pc] = -r[fc]
        vecs.append(v)
    return Subspace.span(vecs, a.cols)


def image_basis(a: MatrixQ) -> Subspace:
    return Subspace.span(a.transpose().entries, a.rows)


def _check_same(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim:
        raise DimensionMismatch("ambient dims %d and %d differ" % (u.ambient_dim, w.ambient_dim))


def preimage(a: MatrixQ, u: Subspace) -> Subspace:
    """{v : a v in u}."""
    if u.ambient_dim != a.rows:
        raise DimensionMismatch("subspace of %d-space for matrix with %d rows" % (u.ambient_dim, a.rows))
    ann = u.annihilator()
    if ann.dim == 0:
        return Subspace.full(a.cols)
    q = MatrixQ(ann.dim, a.rows, ann.basis)
    return kernel_basis(q @ a)


def image_of(a: MatrixQ, u: Subspace) -> Subspace:
    """a(u) in the codomain of a."""
    if u.ambient_dim != a.cols:
        raise DimensionMismatch("subspace of %d-space for matrix with %d cols" % (u.ambient_dim, a.cols))
    return Subspace.span([a.apply(v) for v in u.basis], a.rows)


def intersect(u: Subspace, w: Subspace) -> Subspace:
    _check_same(u, w)
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(u.ambient_dim)
    if u.is_full():
        return w
    if w.is_full():
        return u
    return span_sum(u.annihilator(), w.annihilator()).annihilator()


def span_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_same(u, w)
    return Subspace.span(u.basis + w.basis, u.ambient_dim)


def contains(u: Subspace, w: Subspace) -> bool:
    """True iff w is a subspace of u."""
    _check_same(u, w)
    return span_sum(u, w).dim == u.dim


def complement_basis(big: Subspace, small: Subspace) -> list[Vector]:
    """Vectors of big's echelon basis extending small to a basis of big (small must lie in big)."""
    acc = small
    out = []
    for v in big.basis:
        nxt = span_sum(acc, Subspace.span([v], big.ambient_dim))
        if nxt.dim > acc.dim:
            out.append(v)
            acc = nxt
    if acc.dim != big.dim:
        raise ValueError("small is not contained in big")
    return out


def solve(a: MatrixQ, b: Sequence) -> Vector | None:
    """One solution x of a x = b (free variables set to zero), or None when inconsistent."""
    if len(b) != a.rows:
        raise DimensionMismatch("rhs of length %d for %d rows" % (len(b), a.rows))
    aug = [list(r) + [as_fraction(y)] for r, y in zip(a.entries, b)]
    rows, pivots = rref(aug, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [Fraction(0)] * a.cols
    for r, p in zip(rows, pivots):
        x[p] = r[a.cols]
    return tuple(x)


def inverse(a: MatrixQ) -> MatrixQ:
    if a.rows != a.cols:
        raise DimensionMismatch("cannot invert a %dx%d matrix" % a.shape)
    n = a.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.entries)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return MatrixQ.from_rows([r[n:] for r in rows[:n]], cols=n)
