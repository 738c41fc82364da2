"""Finite graded-commutative cohomology rings with an orientation functional,
their Lefschetz b-modules, and the Lefschetz deciders built on them.

Weight always equals cohomological degree: the b-module of (R, a) has
weight-k space H^k and e = cup with a.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .filtration import CanonicalFiltration, canonical_filtration
from .linalg import MatrixQ, as_fraction, complement_basis, format_rational, rank
from .modules import BModule, GradedHom, dual, shift


class InvalidRing(ValueError):
    pass


Sparse = Mapping[int, Fraction]  # global basis index -> coefficient


@dataclass(frozen=True)
class CohomologyRing:
    """Basis elements are numbered globally, degree by degree; ``products[(a, b)]``
    holds the nonzero coordinates of a * b.  Products with the unit (index 0) are
    implicit."""

    dim: int
    labels: tuple  # tuple per degree of tuple of names
    products: Mapping[tuple[int, int], Sparse]
    orientation: tuple  # coefficients on the top-degree basis
    classes: Mapping[str, tuple] = field(default_factory=dict)  # named degree-2 classes

    @property
    def betti(self) -> list[int]:
        return [len(x) for x in self.labels]

    def offset(self, deg: int) -> int:
        return sum(len(x) for x in self.labels[:deg])

    def degree_of(self, idx: int) -> int:
        for d in range(self.dim + 1):
            if idx < self.offset(d + 1):
                return d
        raise IndexError(idx)

    @property
    def size(self) -> int:
        return sum(self.betti)

    def index(self, name: str) -> int:
        i = 0
        for names in self.labels:
            for n in names:
                if n == name:
                    return i
                i += 1
        raise KeyError(name)

    def basis_product(self, a: int, b: int) -> dict[int, Fraction]:
        if a == 0 and self.betti[0] == 1 and (a, b) not in self.products:
            return {b: Fraction(1)}
        if b == 0 and self.betti[0] == 1 and (a, b) not in self.products:
            return {a: Fraction(1)}
        return dict(self.products.get((a, b), {}))

    def cup(self, x: Sparse, y: Sparse) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, ca in x.items():
            if not ca:
                continue
            for b, cb in y.items():
                if not cb:
                    continue
                for c, cc in self.basis_product(a, b).items():
                    out[c] = out.get(c, Fraction(0)) + ca * cb * cc
        return {c: v for c, v in out.items() if v}

    def embed(self, deg: int, vec: Sequence) -> dict[int, Fraction]:
        off = self.offset(deg)
        return {off + i: as_fraction(c) for i, c in enumerate(vec) if c}

    def restrict(self, deg: int, x: Sparse) -> tuple:
        off = self.offset(deg)
        return tuple(x.get(off + i, Fraction(0)) for i in range(self.betti[deg]))

    def integrate(self, x: Sparse) -> Fraction:
        top = self.restrict(self.dim, x)
        return sum((a * b for a, b in zip(top, self.orientation)), Fraction(0))

    def mult_matrix(self, alpha: Sequence, deg: int, by_deg: int = 2) -> MatrixQ:
        """Matrix of cup with a class of degree by_deg, from H^deg to H^{deg+by_deg}."""
        a = self.embed(by_deg, alpha)
        tgt = deg + by_deg
        rows = self.betti[tgt] if 0 <= tgt <= self.dim else 0
        cols = []
        for i in range(self.betti[deg]):
            prod = self.cup(a, {self.offset(deg) + i: Fraction(1)})
            cols.append(self.restrict(tgt, prod) if rows else ())
        return MatrixQ.from_columns(cols, rows)

    def pairing_matrix(self, k: int) -> MatrixQ:
        """orientation(b_i cup c_j) for b_i in H^k, c_j in H^{n-k}."""
        rows = []
        for i in range(self.betti[k]):
            row = []
            for j in range(self.betti[self.dim - k]):
                row.append(self.integrate(self.cup({self.offset(k) + i: Fraction(1)},
                                                   {self.offset(self.dim - k) + j: Fraction(1)})))
            rows.append(row)
        return MatrixQ.from_rows(rows, cols=self.betti[self.dim - k])

    def resolve_class(self, name_or_vec) -> tuple:
        """A degree-2 class given by name (named class or basis label) or coordinate vector."""
        if self.dim < 2:
            return ()
        if isinstance(name_or_vec, str):
            if name_or_vec in self.classes:
                return tuple(self.classes[name_or_vec])
            try:
                idx = self.index(name_or_vec)
            except KeyError:
                raise InvalidRing("unknown class %r" % name_or_vec) from None
            if self.degree_of(idx) != 2:
                raise InvalidRing("class %r has degree %d, not 2" % (name_or_vec, self.degree_of(idx)))
            vec = [Fraction(0)] * self.betti[2]
            vec[idx - self.offset(2)] = Fraction(1)
            return tuple(vec)
        vec = tuple(as_fraction(x) for x in name_or_vec)
        if len(self.betti) < 3 or len(vec) != self.betti[2]:
            raise InvalidRing("degree-2 class needs %d coordinates" % (self.betti[2] if len(self.betti) > 2 else 0))
        return vec


def _deg2(ring: CohomologyRing) -> int:
    return ring.betti[2] if ring.dim >= 2 else 0


# -- construction helpers ------------------------------------------------------

def make_ring(dim: int, labels: Sequence[Sequence[str]], products: Mapping[tuple[str, str], Mapping[str, object]],
              orientation: Mapping[str, object], classes: Mapping[str, Mapping[str, object]] | None = None) -> CohomologyRing:
    """Build a ring from named products; each given product also fixes its
    graded-commutative partner.  Contradictory entries raise InvalidRing."""
    labels = tuple(tuple(x) for x in labels)
    if len(labels) != dim + 1:
        raise InvalidRing("need basis lists for degrees 0..%d" % dim)
    index: dict[str, tuple[int, int]] = {}
    g = 0
    for d, names in enumerate(labels):
        for n in names:
            if n in index:
                raise InvalidRing("duplicate basis label %r" % n)
            index[n] = (g, d)
            g += 1

    def lookup(n):
        if n not in index:
            raise InvalidRing("unknown basis label %r" % n)
        return index[n]

    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (a, b), out in products.items():
        ia, da = lookup(a)
        ib, db = lookup(b)
        vec = {}
        for n, c in out.items():
            ic, dc = lookup(n)
            if dc != da + db:
                raise InvalidRing("product %s*%s has a term %s of degree %d, expected %d" % (a, b, n, dc, da + db))
            c = as_fraction(c)
            if c:
                vec[ic] = vec.get(ic, Fraction(0)) + c
        sign = -1 if (da * db) % 2 else 1
        swapped = {c: sign * v for c, v in vec.items()}
        for key, val in (((ia, ib), vec), ((ib, ia), swapped)):
            if key in table and table[key] != val:
                raise InvalidRing("contradictory products for %s*%s under graded commutativity" % (a, b))
            table[key] = val
    table = {k: v for k, v in table.items() if v}
    top = labels[dim] if dim < len(labels) else ()
    orient = [Fraction(0)] * len(top)
    for n, c in orientation.items():
        ic, dc = lookup(n)
        if dc != dim:
            raise InvalidRing("orientation given on %r of degree %d" % (n, dc))
        orient[ic - sum(len(x) for x in labels[:dim])] = as_fraction(c)
    named = {}
    for cname, coeffs in (classes or {}).items():
        vec = [Fraction(0)] * (len(labels[2]) if dim >= 2 else 0)
        for n, c in coeffs.items():
            ic, dc = lookup(n)
            if dc != 2:
                raise InvalidRing("class %r has a term of degree %d" % (cname, dc))
            vec[ic - sum(len(x) for x in labels[:2])] = as_fraction(c)
        named[cname] = tuple(vec)
    return CohomologyRing(dim, labels, table, tuple(orient), named)


# -- validation ---------------------------------------------------------------------

def check_ring(ring: CohomologyRing) -> None:
    """Raise InvalidRing at the first violated identity."""
    n = ring.dim
    b = ring.betti
    if len(b) != n + 1:
        raise InvalidRing("betti list has length %d, expected %d" % (len(b), n + 1))
    if b[0] != 1:
        raise InvalidRing("H^0 must be 1-dimensional (connected), got %d" % b[0])
    for (x, y), out in ring.products.items():
        dx, dy = ring.degree_of(x), ring.degree_of(y)
        for z in out:
            if ring.degree_of(z) != dx + dy:
                raise InvalidRing("product of basis %d and %d leaves degree %d" % (x, y, dx + dy))
    names = [l for d in ring.labels for l in d]
    size = ring.size
    # unit
    for x in range(size):
        for p in (ring.basis_product(0, x), ring.basis_product(x, 0)):
            if p != {x: 1}:
                raise InvalidRing("unit law fails for %s" % names[x])
    # graded commutativity
    for x in range(size):
        for y in range(x + 1, size):
            dx, dy = ring.degree_of(x), ring.degree_of(y)
            if dx + dy > n:
                continue
            s = -1 if (dx * dy) % 2 else 1
            xy = ring.basis_product(x, y)
            yx = {k: s * v for k, v in ring.basis_product(y, x).items()}
            if xy != yx:
                raise InvalidRing("graded commutativity fails for (%s, %s)" % (names[x], names[y]))
    # odd squares vanish in characteristic 0
    for x in range(size):
        if ring.degree_of(x) % 2 and ring.basis_product(x, x):
            raise InvalidRing("odd class %s squares to a nonzero class" % names[x])
    # associativity
    degs = [ring.degree_of(x) for x in range(size)]
    for x in range(1, size):
        for y in range(1, size):
            if degs[x] + degs[y] > n:
                continue
            xy = ring.basis_product(x, y)
            for z in range(1, size):
                if degs[x] + degs[y] + degs[z] > n:
                    continue
                left = ring.cup(xy, {z: Fraction(1)})
                right = ring.cup({x: Fraction(1)}, ring.basis_product(y, z))
                if left != right:
                    raise InvalidRing("associativity fails for (%s, %s, %s)" % (names[x], names[y], names[z]))
    # Poincare duality
    for k in range(n + 1):
        if b[k] != b[n - k]:
            raise InvalidRing("betti numbers b_%d=%d and b_%d=%d differ; pairing degenerate" % (k, b[k], n - k, b[n - k]))
        if rank(ring.pairing_matrix(k)) != b[k]:
            raise InvalidRing("Poincare pairing between degrees %d and %d is degenerate" % (k, n - k))


def validate_ring(ring: CohomologyRing) -> bool:
    try:
        check_ring(ring)
    except InvalidRing:
        return False
    return True


# -- b-module and Lefschetz deciders ------------------------------------------

def lefschetz_bmodule(ring: CohomologyRing, alpha) -> BModule:
    alpha = ring.resolve_class(alpha) if ring.dim >= 2 else ()
    if ring.dim < 2:
        if any(alpha):
            raise InvalidRing("no degree-2 classes")
    dims = {k: n for k, n in enumerate(ring.betti)}
    e = {}
    for k in range(ring.dim - 1):
        if ring.betti[k] and ring.betti[k + 2]:
            e[k] = ring.mult_matrix(alpha, k)
    return BModule.build(dims, e)


@dataclass(frozen=True)
class SymplecticData:
    ring: CohomologyRing
    omega: tuple

    @classmethod
    def of(cls, ring: CohomologyRing, omega) -> "SymplecticData":
        s = cls(ring, ring.resolve_class(omega))
        check_symplectic(s)
        return s

    @property
    def half_dim(self) -> int:
        return self.ring.dim // 2

    def module(self) -> BModule:
        return lefschetz_bmodule(self.ring, self.omega)


def check_symplectic(s: SymplecticData) -> None:
    if s.ring.dim % 2:
        raise InvalidRing("symplectic manifolds are even-dimensional; got %d" % s.ring.dim)
    n = s.half_dim
    power = {0: Fraction(1)}
    w = s.ring.embed(2, s.omega) if n else {}
    for _ in range(n):
        power = s.ring.cup(power, w)
    if s.ring.integrate(power) == 0:
        raise InvalidRing("omega^%d integrates to zero" % n)


def lefschetz_ranks(ring: CohomologyRing, alpha, center: int) -> list[tuple[int, int, int, int]]:
    """(k, source degree, rank, target dim) for alpha^k : H^{center-k} -> H^{center+k}, k >= 0."""
    v = lefschetz_bmodule(ring, alpha)
    out = []
    for k in range(0, max(ring.dim - center, 0) + 1):
        src, tgt = center - k, center + k
        if tgt > ring.dim or tgt < 0:
            continue
        r = rank(v.e_power(k, src)) if v.dim(src) and v.dim(tgt) else 0
        out.append((k, src, r, v.dim(tgt)))
    return out


def surjective_at(ring: CohomologyRing, alpha, center: int) -> bool:
    return all(r == t for _, _, r, t in lefschetz_ranks(ring, alpha, center))


def failing_map(ring: CohomologyRing, alpha, center: int) -> tuple[int, int, int, int] | None:
    for entry in lefschetz_ranks(ring, alpha, center):
        if entry[2] != entry[3]:
            return entry
    return None


def hard_lefschetz(s: SymplecticData) -> bool:
    return surjective_at(s.ring, s.omega, s.half_dim)


def weak_lefschetz(s: SymplecticData) -> bool:
    return surjective_at(s.ring, s.omega, s.half_dim + 1)


def lef_fil_equiv_report(s: SymplecticData | tuple, m: int, filt: CanonicalFiltration | None = None) -> tuple[bool, bool, bool]:
    """(alpha^k onto H^{m-k} -> H^{m+k} for all k, H_m = H, H_{n-m-1} = 0)."""
    ring, alpha = (s.ring, s.omega) if isinstance(s, SymplecticData) else s
    if filt is None:
        filt = canonical_filtration(lefschetz_bmodule(ring, alpha))
    onto = surjective_at(ring, alpha, m)
    full = all(x.is_full() for x in filt.level(m).values())
    zero = all(x.dim == 0 for x in filt.level(ring.dim - m - 1).values())
    return (onto, full, zero)


# -- Poincare pairing on graded pieces --------------------------------------------

def _lifts(filt: CanonicalFiltration, m: int) -> dict[int, list]:
    v = filt.module
    big, small = filt.level(m), filt.level(m - 1)
    return {k: complement_basis(big[k], small[k]) for k in v.weights}


def poincare_graded_pairing(ring: CohomologyRing, alpha, m: int,
                            filt: CanonicalFiltration | None = None) -> tuple[MatrixQ, bool]:
    """Pairing matrix between lifted bases of gr_m and gr_{n-m}, and whether it is non-degenerate."""
    if filt is None:
        filt = canonical_filtration(lefschetz_bmodule(ring, alpha))
    n = ring.dim
    left = [(k, vec) for k, vs in sorted(_lifts(filt, m).items()) for vec in vs]
    right = [(k, vec) for k, vs in sorted(_lifts(filt, n - m).items()) for vec in vs]
    rows = []
    for k, x in left:
        row = []
        for j, y in right:
            if k + j != n:
                row.append(Fraction(0))
            else:
                row.append(ring.integrate(ring.cup(ring.embed(k, x), ring.embed(j, y))))
        rows.append(row)
    mat = MatrixQ.from_rows(rows, cols=len(right))
    ok = len(left) == len(right) and rank(mat) == len(left)
    return mat, ok


def pairing_kills(ring: CohomologyRing, alpha, m: int, filt: CanonicalFiltration | None = None) -> bool:
    """orientation(V_m cup V_{n-m-1}) = 0."""
    if filt is None:
        filt = canonical_filtration(lefschetz_bmodule(ring, alpha))
    n = ring.dim
    a, b = filt.level(m), filt.level(n - m - 1)
    for k, s in a.items():
        t = b.get(n - k)
        if t is None:
            continue
        for x in s.basis:
            for y in t.basis:
                if ring.integrate(ring.cup(ring.embed(k, x), ring.embed(n - k, y))):
                    return False
    return True


def poincare_hom(ring: CohomologyRing, alpha) -> GradedHom:
    """beta -> (gamma -> orientation(Psi(beta) cup gamma)), Psi = (-1)^{k(k+1)/2} on degree k,
    as a map from the Lefschetz module into the dual of its shift by -n."""
    v = lefschetz_bmodule(ring, alpha)
    target = dual(shift(v, -ring.dim))
    maps = {}
    for k in v.weights:
        sign = -1 if (k * (k + 1) // 2) % 2 else 1
        # target weight k is the dual of (V[-n])^{-k} = H^{n-k}
        maps[k] = ring.pairing_matrix(k).transpose().scale(sign)
    return GradedHom(v, target, 0, maps)


# -- JSON -----------------------------------------------------------------------

def ring_to_json(ring: CohomologyRing, extra: Mapping | None = None) -> dict:
    names = [l for d in ring.labels for l in d]
    prods = []
    for (a, b) in sorted(ring.products):
        if a > b or a == 0 or b == 0:
            continue
        out = ring.products[(a, b)]
        prods.append({"a": names[a], "b": names[b],
                      "out": {names[c]: format_rational(v) for c, v in sorted(out.items())}})
    top = ring.labels[ring.dim]
    doc = {
        "dim": ring.dim,
        "betti": ring.betti,
        "basis": {str(d): list(ls) for d, ls in enumerate(ring.labels)},
        "products": prods,
        "orientation": {top[i]: format_rational(c) for i, c in enumerate(ring.orientation) if c},
    }
    if ring.classes:
        two = ring.labels[2]
        doc["classes"] = {name: {two[i]: format_rational(c) for i, c in enumerate(vec) if c}
                          for name, vec in sorted(ring.classes.items())}
    if extra:
        doc.update(extra)
    return doc


def ring_from_json(doc: Mapping) -> CohomologyRing:
    try:
        dim = int(doc["dim"])
        basis = doc["basis"]
        labels = [list(basis.get(str(d), [])) for d in range(dim + 1)]
        if "betti" in doc and [len(x) for x in labels] != list(doc["betti"]):
            raise InvalidRing("betti %s does not match basis sizes %s" % (doc["betti"], [len(x) for x in labels]))
        extra = set(int(k) for k in basis) - set(range(dim + 1))
        if extra:
            raise InvalidRing("basis given in degrees %s outside 0..%d" % (sorted(extra), dim))
        products = {}
        for p in doc.get("products", []):
            key = (p["a"], p["b"])
            if key in products and products[key] != p["out"]:
                raise InvalidRing("product %s*%s given twice with different values" % key)
            products[key] = p["out"]
        return make_ring(dim, labels, products, doc.get("orientation", {}), doc.get("classes"))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidRing):
            raise
        raise InvalidRing("malformed ring document: %s" % exc) from exc
