"""Example spaces: projective spaces, tori, products, nilmanifolds via the
Chevalley-Eilenberg complex, and the b-module of a blowup of CP^N.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Mapping

from .cohomology import (CohomologyRing, SymplecticData, check_ring, lefschetz_bmodule,
                         make_ring, ring_from_json)
from .linalg import MatrixQ, Subspace, as_fraction, complement_basis, format_rational, image_basis, \
    inverse, kernel_basis
from .modules import BModule, direct_sum, shift, tensor


class InvalidLieAlgebra(ValueError):
    pass


# -- projective spaces, tori, products --------------------------------------------

def projective_space(n: int) -> CohomologyRing:
    """H*(CP^n) = Q[h]/(h^{n+1}), orientation(h^n) = 1."""
    if n < 0:
        raise ValueError("N must be non-negative")

    def name(i):
        return "1" if i == 0 else ("h" if i == 1 else "h^%d" % i)

    labels = [[] for _ in range(2 * n + 1)]
    for i in range(n + 1):
        labels[2 * i] = [name(i)]
    products = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1 - i):
            products[(name(i), name(j))] = {name(i + j): 1}
    return make_ring(2 * n, labels, products, {name(n): 1})


def torus(k: int) -> CohomologyRing:
    return chevalley_eilenberg(abelian(k))


def product(r1: CohomologyRing, r2: CohomologyRing) -> CohomologyRing:
    """Kunneth ring: (a x b)(c x d) = (-1)^{|b||c|} ac x bd."""
    return _product(r1, r2)[0]


def _product(r1: CohomologyRing, r2: CohomologyRing):
    n = r1.dim + r2.dim
    pairs = [[] for _ in range(n + 1)]
    for p in range(r1.dim + 1):
        for q in range(r2.dim + 1):
            for i in range(r1.betti[p]):
                for j in range(r2.betti[q]):
                    pairs[p + q].append((r1.offset(p) + i, p, r2.offset(q) + j, q))
    n1 = [l for d in r1.labels for l in d]
    n2 = [l for d in r2.labels for l in d]

    def label(a, b):
        if a == 0 and b == 0:
            return "1"
        if b == 0:
            return n1[a]
        if a == 0:
            return n2[b]
        return "%s|%s" % (n1[a], n2[b])

    labels = [[label(a, b) for a, _, b, _ in deg] for deg in pairs]
    if len({x for d in labels for x in d}) != sum(len(d) for d in labels):
        labels = [["L%s|R%s" % (n1[a], n2[b]) if (a, b) != (0, 0) else "1" for a, _, b, _ in deg]
                  for deg in pairs]
    key = {(a, b): labels[p + q][i] for deg in pairs for i, (a, p, b, q) in enumerate(deg)}
    flat = [t for deg in pairs for t in deg]
    products = {}
    for (a, p, b, q) in flat:
        if (a, b) == (0, 0):
            continue
        for (c, s, d, t) in flat:
            if (c, d) == (0, 0) or p + q + s + t > n:
                continue
            ac = r1.basis_product(a, c)
            bd = r2.basis_product(b, d)
            if not ac or not bd:
                continue
            sign = -1 if (q * s) % 2 else 1
            out = {}
            for x, cx in ac.items():
                for y, cy in bd.items():
                    out[key[(x, y)]] = out.get(key[(x, y)], 0) + sign * cx * cy
            products[(key[(a, b)], key[(c, d)])] = out
    orient = {}
    for i, c1 in enumerate(r1.orientation):
        for j, c2 in enumerate(r2.orientation):
            if c1 and c2:
                orient[key[(r1.offset(r1.dim) + i, r2.offset(r2.dim) + j)]] = c1 * c2
    return make_ring(n, labels, products, orient), key


def symplectic_product(s1: SymplecticData, s2: SymplecticData) -> SymplecticData:
    """omega_1 x 1 + 1 x omega_2 on M_1 x M_2."""
    ring, key = _product(s1.ring, s2.ring)
    omega = [Fraction(0)] * (ring.betti[2] if ring.dim >= 2 else 0)
    for i, c in enumerate(s1.omega):
        omega[ring.labels[2].index(key[(s1.ring.offset(2) + i, 0)])] += c
    for i, c in enumerate(s2.omega):
        omega[ring.labels[2].index(key[(0, s2.ring.offset(2) + i)])] += c
    return SymplecticData.of(ring, omega)


# -- nilpotent Lie algebras and the Chevalley-Eilenberg complex -------------------

@dataclass(frozen=True)
class NilpotentLieAlgebra:
    """Structure constants [X_i, X_j] = sum_k c^k_ij X_k for i < j (0-based)."""

    dim: int
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]]
    name: str = ""
    provenance: str = ""
    forms: Mapping[str, Mapping[tuple[int, int], Fraction]] = field(default_factory=dict)

    def bracket(self, x, y):
        """Bracket of two vectors in coordinates."""
        out = [Fraction(0)] * self.dim
        for (i, j), coeffs in self.brackets.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, v in coeffs.items():
                    out[k] += c * v
        return out


def abelian(k: int) -> NilpotentLieAlgebra:
    return NilpotentLieAlgebra(k, {}, "abelian%d" % k, "abelian Lie algebra; nilmanifold is the torus T^%d" % k)


def check_lie(lie: NilpotentLieAlgebra) -> None:
    n = lie.dim
    for (i, j), coeffs in lie.brackets.items():
        if not (0 <= i < j < n) or any(not 0 <= k < n for k in coeffs):
            raise InvalidLieAlgebra("bracket index out of range in [X%d, X%d]" % (i + 1, j + 1))
    basis = [[Fraction(int(a == b)) for a in range(n)] for b in range(n)]
    for i, j, k in combinations(range(n), 3):
        x, y, z = basis[i], basis[j], basis[k]
        s = [a + b + c for a, b, c in zip(lie.bracket(lie.bracket(x, y), z),
                                          lie.bracket(lie.bracket(y, z), x),
                                          lie.bracket(lie.bracket(z, x), y))]
        if any(s):
            raise InvalidLieAlgebra("Jacobi identity fails on (X%d, X%d, X%d)" % (i + 1, j + 1, k + 1))
    term = Subspace.full(n)
    for _ in range(n + 1):
        if term.dim == 0:
            return
        term = Subspace.span([lie.bracket(b, t) for b in basis for t in term.basis], n)
    raise InvalidLieAlgebra("lower central series does not terminate; algebra is not nilpotent")


def _wedge_monomials(a: tuple, b: tuple):
    if set(a) & set(b):
        return 0, ()
    seq = a + b
    inv = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def wedge(x: Mapping[tuple, Fraction], y: Mapping[tuple, Fraction]) -> dict[tuple, Fraction]:
    out: dict[tuple, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            s, m = _wedge_monomials(a, b)
            if s:
                out[m] = out.get(m, Fraction(0)) + s * ca * cb
    return {m: c for m, c in out.items() if c}


def monomial_label(mono: tuple, n: int) -> str:
    if not mono:
        return "1"
    if n <= 9:
        return "e" + "".join(str(i + 1) for i in mono)
    return "e" + "_".join(str(i + 1) for i in mono)


class ExteriorComplex:
    """Chevalley-Eilenberg cochains: d x^k = -sum_{i<j} c^k_ij x^i x^j, extended as a derivation."""

    def __init__(self, lie: NilpotentLieAlgebra):
        self.lie = lie
        n = lie.dim
        self.n = n
        self.basis = [list(combinations(range(n), p)) for p in range(n + 1)]
        self.index = [{m: i for i, m in enumerate(b)} for b in self.basis]
        self.dx = []
        for k in range(n):
            form = {}
            for (i, j), coeffs in lie.brackets.items():
                c = coeffs.get(k, 0)
                if c:
                    form[(i, j)] = form.get((i, j), Fraction(0)) - as_fraction(c)
            self.dx.append({m: c for m, c in form.items() if c})

    def d(self, form: Mapping[tuple, Fraction]) -> dict[tuple, Fraction]:
        out: dict[tuple, Fraction] = {}
        for mono, c in form.items():
            for r, k in enumerate(mono):
                left = {mono[:r]: Fraction(-1 if r % 2 else 1) * c}
                term = wedge(wedge(left, self.dx[k]), {mono[r + 1:]: Fraction(1)})
                for m, v in term.items():
                    out[m] = out.get(m, Fraction(0)) + v
        return {m: c for m, c in out.items() if c}

    def matrix(self, p: int) -> MatrixQ:
        """d : Lambda^p -> Lambda^{p+1}."""
        rows = len(self.basis[p + 1]) if p < self.n else 0
        cols = []
        for mono in self.basis[p]:
            img = self.d({mono: Fraction(1)})
            col = [Fraction(0)] * rows
            for m, c in img.items():
                col[self.index[p + 1][m]] = c
            cols.append(col)
        return MatrixQ.from_columns(cols, rows)

    def to_vector(self, p: int, form) -> list[Fraction]:
        v = [Fraction(0)] * len(self.basis[p])
        for m, c in form.items():
            v[self.index[p][m]] += c
        return v

    def to_form(self, p: int, vec) -> dict[tuple, Fraction]:
        return {self.basis[p][i]: c for i, c in enumerate(vec) if c}


def d_squared_zero(lie: NilpotentLieAlgebra) -> bool:
    cx = ExteriorComplex(lie)
    for p in range(lie.dim - 1):
        if not (cx.matrix(p + 1) @ cx.matrix(p)).is_zero():
            return False
    return True


@dataclass
class CEData:
    """Cohomology computed from the complex, with representatives and a coordinate map."""

    complex: ExteriorComplex
    reps: list  # per degree: list of closed vectors
    coord: list  # per degree: matrix sending a closed vector to class coordinates

    def class_of(self, p: int, form) -> tuple:
        vec = self.complex.to_vector(p, form)
        if self.complex.d(form):
            raise InvalidLieAlgebra("form is not closed")
        return self.coord[p].apply(vec)


def ce_data(lie: NilpotentLieAlgebra) -> CEData:
    check_lie(lie)
    cx = ExteriorComplex(lie)
    n = lie.dim
    mats = [cx.matrix(p) for p in range(n + 1)]
    reps, coord = [], []
    for p in range(n + 1):
        size = len(cx.basis[p])
        z = kernel_basis(mats[p]) if p < n else Subspace.full(size)
        b = image_basis(mats[p - 1]) if p > 0 else Subspace.zero(size)
        if not z.contains(b):
            raise InvalidLieAlgebra("d o d != 0 in degree %d" % (p - 1))
        r = complement_basis(z, b)
        rest = complement_basis(Subspace.full(size), z)
        frame = r + list(b.basis) + rest
        inv = inverse(MatrixQ.from_columns(frame, size)) if size else MatrixQ.zeros(0, 0)
        coord.append(MatrixQ.from_rows(inv.entries[:len(r)], cols=size))
        reps.append(r)
    return CEData(cx, reps, coord)


def chevalley_eilenberg(lie: NilpotentLieAlgebra) -> CohomologyRing:
    data = ce_data(lie)
    cx = data.complex
    n = lie.dim
    labels = []
    for p in range(n + 1):
        labels.append([monomial_label(cx.basis[p][Subspace.span([v], len(v)).pivots()[0]], n)
                       for v in data.reps[p]])
    products = {}
    for p in range(1, n + 1):
        for q in range(p, n + 1 - p):
            for i, x in enumerate(data.reps[p]):
                for j, y in enumerate(data.reps[q]):
                    if p == q and j < i:
                        continue
                    w = wedge(cx.to_form(p, x), cx.to_form(q, y))
                    if not w:
                        continue
                    coords = data.coord[p + q].apply(cx.to_vector(p + q, w))
                    out = {labels[p + q][t]: c for t, c in enumerate(coords) if c}
                    if out:
                        products[(labels[p][i], labels[q][j])] = out
    top = data.reps[n]
    orient = {labels[n][i]: v[0] for i, v in enumerate(top)}
    classes = {}
    for fname, form in lie.forms.items():
        vec = data.class_of(2, {k: as_fraction(c) for k, c in form.items()})
        classes[fname] = {labels[2][i]: c for i, c in enumerate(vec) if c}
    ring = make_ring(n, labels, products, orient, classes)
    check_ring(ring)
    return ring


def symplectic_nilmanifold(lie: NilpotentLieAlgebra, form: str = "omega") -> SymplecticData:
    ring = chevalley_eilenberg(lie)
    return SymplecticData.of(ring, form)


# -- blowup ---------------------------------------------------------------------

def blowup_bmodule(s: SymplecticData, ambient: int, k: int) -> BModule:
    """H*(CP^N) + H*(M) (x) H*(CP^{k-2})[2] for M of real codimension 2k in CP^N."""
    if k < 2:
        raise ValueError("codimension 2k needs k >= 2, got k=%d" % k)
    if s.ring.dim + 2 * k != 2 * ambient:
        raise ValueError("dim M + 2k = %d + %d != 2N = %d" % (s.ring.dim, 2 * k, 2 * ambient))
    cpn = lefschetz_bmodule(projective_space(ambient), "h" if ambient else ())
    w = shift(lefschetz_bmodule(projective_space(k - 2), "h" if k > 2 else ()), 2)
    return direct_sum(cpn, tensor(s.module(), w))


# -- JSON -----------------------------------------------------------------------

def lie_from_json(doc: Mapping, name: str = "") -> NilpotentLieAlgebra:
    try:
        n = int(doc["dim"])
        br: dict[tuple[int, int], dict[int, Fraction]] = {}
        for b in doc.get("brackets", []):
            i, j = int(b["i"]) - 1, int(b["j"]) - 1
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if i == j:
                raise InvalidLieAlgebra("bracket [X%d, X%d] of a generator with itself" % (i + 1, i + 1))
            out = br.setdefault((i, j), {})
            for k, c in b["out"].items():
                c = as_fraction(c)
                if c:
                    out[int(k) - 1] = out.get(int(k) - 1, Fraction(0)) + sign * c
        forms = {}
        for fname, terms in doc.get("forms", {}).items():
            form = {}
            for key, c in terms.items():
                i, j = (int(x) - 1 for x in key.split(","))
                s = 1
                if i > j:
                    i, j, s = j, i, -1
                if i == j:
                    continue
                form[(i, j)] = form.get((i, j), Fraction(0)) + s * as_fraction(c)
            forms[fname] = form
        lie = NilpotentLieAlgebra(n, {k: v for k, v in br.items() if v}, doc.get("name", name),
                                  doc.get("provenance", ""), forms)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidLieAlgebra):
            raise
        raise InvalidLieAlgebra("malformed Lie algebra document: %s" % exc) from exc
    check_lie(lie)
    return lie


def lie_to_json(lie: NilpotentLieAlgebra) -> dict:
    doc = {"dim": lie.dim, "brackets": [
        {"i": i + 1, "j": j + 1, "out": {str(k + 1): format_rational(c) for k, c in sorted(coeffs.items())}}
        for (i, j), coeffs in sorted(lie.brackets.items())]}
    if lie.forms:
        doc["forms"] = {name: {"%d,%d" % (i + 1, j + 1): format_rational(c) for (i, j), c in sorted(f.items())}
                        for name, f in sorted(lie.forms.items())}
    if lie.name:
        doc["name"] = lie.name
    if lie.provenance:
        doc["provenance"] = lie.provenance
    return doc


# -- catalog ---------------------------------------------------------------------

def _lie(name, dim, brackets, provenance, omega=None):
    br = {}
    for (i, j), out in brackets.items():
        br[(i - 1, j - 1)] = {k - 1: Fraction(c) for k, c in out.items()}
    forms = {}
    if omega:
        forms["omega"] = {(i - 1, j - 1): Fraction(c) for (i, j), c in omega.items()}
    return NilpotentLieAlgebra(dim, br, name, provenance, forms)


def _builtin() -> dict[str, NilpotentLieAlgebra]:
    return {
        "kodaira-thurston": _lie(
            "kodaira-thurston", 4, {(1, 2): {3: 1}},
            "Kodaira-Thurston nilmanifold (Heisenberg x R): [X1,X2]=X3, X4 central; "
            "symplectic form e14+e23 (Thurston 1976)",
            {(1, 4): 1, (2, 3): 1}),
        "heisenberg3": _lie(
            "heisenberg3", 3, {(1, 2): {3: 1}},
            "3-dimensional Heisenberg algebra [X1,X2]=X3; not symplectic (odd dimension)"),
        "n6-0-0-0-0-12-13": _lie(
            "n6-0-0-0-0-12-13", 6, {(1, 2): {5: 1}, (1, 3): {6: 1}},
            "6-dim nilpotent algebra (0,0,0,0,12,13) in Salamon's notation; closed form "
            "e14+e26+e35 checked non-degenerate here",
            {(1, 4): 1, (2, 6): 1, (3, 5): 1}),
        "n6-0-0-0-12-13-23": _lie(
            "n6-0-0-0-12-13-23", 6, {(1, 2): {4: 1}, (1, 3): {5: 1}, (2, 3): {6: 1}},
            "6-dim nilpotent algebra (0,0,0,12,13,23) in Salamon's notation (free 2-step on 3 "
            "generators); closed form e15+e24+e36 checked non-degenerate here",
            {(1, 5): 1, (2, 4): -1, (3, 6): 1}),
        "kt-x-t2": _lie(
            "kt-x-t2", 6, {(1, 2): {3: 1}},
            "Kodaira-Thurston x T^2, (0,0,0,0,0,12) up to relabeling; form e14+e23+e56",
            {(1, 4): 1, (2, 3): 1, (5, 6): 1}),
        "n6-filiform": _lie(
            "n6-filiform", 6, {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (1, 5): {6: 1}},
            "6-dim filiform algebra (0,0,12,13,14,15) in Salamon's notation; closed form "
            "e16+e25-e34 checked non-degenerate here; omega: H^1 -> H^3 has rank 1 < b_1 = 2",
            {(1, 6): 1, (2, 5): 1, (3, 4): -1}),
    }


def catalog_names() -> list[str]:
    names = set(_builtin()) | {"abelian<k>", "cp<N>"} | set(_user_entries())
    return sorted(names)


def _user_entries() -> dict[str, Path]:
    root = os.environ.get("LEFRANK_CATALOG_DIR")
    if not root or not Path(root).is_dir():
        return {}
    out = {}
    for p in sorted(Path(root).glob("*.json")):
        out[p.name.split(".")[0]] = p
    return out


class UnknownEntry(KeyError):
    pass


def catalog(name: str):
    """Built-in fixture by name: a NilpotentLieAlgebra or a CohomologyRing."""
    builtin = _builtin()
    if name in builtin:
        return builtin[name]
    if name.startswith("abelian") and name[7:].isdigit():
        return abelian(int(name[7:]))
    if name.startswith("cp") and name[2:].isdigit():
        return projective_space(int(name[2:]))
    user = _user_entries()
    if name in user:
        doc = json.loads(user[name].read_text())
        if "brackets" in doc:
            return lie_from_json(doc, name)
        return ring_from_json(doc)
    raise UnknownEntry("unknown catalog entry %r; available: %s" % (name, ", ".join(catalog_names())))
