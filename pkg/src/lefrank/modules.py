"""Weight-graded modules over the Borel subalgebra {e, h} of sl(2), and full sl(2)-modules.

A module is stored weight by weight: ``dims[k]`` is the dimension of the
weight-k space and ``e[k]`` the matrix of e from weight k to weight k + 2
in fixed ordered bases.  Missing weights have dimension 0, missing maps are
zero.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .linalg import MatrixQ, Subspace, inverse, kernel_basis, rank, solve


class InvalidModule(ValueError):
    def __init__(self, message: str, weight: int | None = None, residual: MatrixQ | None = None):
        super().__init__(message)
        self.weight = weight
        self.residual = residual


@dataclass(frozen=True)
class GradedSpace:
    dims: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "dims", {int(k): int(n) for k, n in sorted(self.dims.items()) if n})

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    @property
    def weights(self) -> list[int]:
        return sorted(self.dims)


@dataclass(frozen=True)
class BModule:
    space: GradedSpace
    e_maps: Mapping[int, MatrixQ] = field(default_factory=dict)

    @classmethod
    def build(cls, dims: Mapping[int, int], e: Mapping[int, object] | None = None) -> "BModule":
        maps = {}
        for k, m in (e or {}).items():
            maps[int(k)] = m if isinstance(m, MatrixQ) else MatrixQ.from_rows(m, cols=dims.get(int(k), 0))
        return cls(GradedSpace(dims), maps)

    @property
    def dims(self) -> Mapping[int, int]:
        return self.space.dims

    def dim(self, k: int) -> int:
        return self.space.dim(k)

    @property
    def total_dim(self) -> int:
        return self.space.total

    @property
    def weights(self) -> list[int]:
        return self.space.weights

    def e(self, k: int) -> MatrixQ:
        m = self.e_maps.get(k)
        if m is None:
            return MatrixQ.zeros(self.dim(k + 2), self.dim(k))
        return m

    def e_power(self, l: int, k: int) -> MatrixQ:
        """Matrix of e^l from weight k to weight k + 2l."""
        out = MatrixQ.identity(self.dim(k))
        for i in range(l):
            out = self.e(k + 2 * i) @ out
        return out

    def full(self, k: int) -> Subspace:
        return Subspace.full(self.dim(k))

    def zero(self, k: int) -> Subspace:
        return Subspace.zero(self.dim(k))


@dataclass(frozen=True)
class GModule:
    base: BModule
    f_maps: Mapping[int, MatrixQ] = field(default_factory=dict)

    @property
    def dims(self):
        return self.base.dims

    def dim(self, k: int) -> int:
        return self.base.dim(k)

    def e(self, k: int) -> MatrixQ:
        return self.base.e(k)

    def f(self, k: int) -> MatrixQ:
        m = self.f_maps.get(k)
        if m is None:
            return MatrixQ.zeros(self.dim(k - 2), self.dim(k))
        return m


@dataclass(frozen=True)
class GradedHom:
    """Linear map sending weight k of ``source`` to weight k + weight_shift of ``target``."""

    source: BModule
    target: BModule
    weight_shift: int
    maps: Mapping[int, MatrixQ] = field(default_factory=dict)

    def at(self, k: int) -> MatrixQ:
        m = self.maps.get(k)
        if m is None:
            return MatrixQ.zeros(self.target.dim(k + self.weight_shift), self.source.dim(k))
        return m

    def check_shapes(self):
        for k, m in self.maps.items():
            want = (self.target.dim(k + self.weight_shift), self.source.dim(k))
            if m.shape != want:
                raise InvalidModule("map at weight %d has shape %s, expected %s" % (k, m.shape, want), k)

    def compose(self, other: "GradedHom") -> "GradedHom":
        """self after other."""
        if other.target != self.source:
            raise InvalidModule("cannot compose: target of the first map is not the source of the second")
        maps = {k: self.at(k + other.weight_shift) @ other.at(k) for k in other.source.weights}
        return GradedHom(other.source, self.target, self.weight_shift + other.weight_shift, maps)


# -- validation ---------------------------------------------------------------

def check_b(v: BModule) -> None:
    """Raise InvalidModule naming the first weight whose e-map has the wrong shape."""
    for k in sorted(v.e_maps):
        m = v.e_maps[k]
        want = (v.dim(k + 2), v.dim(k))
        if m.shape != want:
            raise InvalidModule("e at weight %d has shape %dx%d, expected %dx%d"
                                % (k, m.rows, m.cols, want[0], want[1]), k)


def validate_b(v: BModule) -> bool:
    try:
        check_b(v)
    except InvalidModule:
        return False
    return True


def g_residual(v: GModule, k: int) -> MatrixQ:
    """e f - f e - k Id on the weight-k space."""
    n = v.dim(k)
    ef = v.e(k - 2) @ v.f(k)
    fe = v.f(k + 2) @ v.e(k)
    return ef - fe - MatrixQ.identity(n).scale(k)


def check_g(v: GModule) -> None:
    check_b(v.base)
    for k in sorted(v.f_maps):
        m = v.f_maps[k]
        want = (v.dim(k - 2), v.dim(k))
        if m.shape != want:
            raise InvalidModule("f at weight %d has shape %dx%d, expected %dx%d"
                                % (k, m.rows, m.cols, want[0], want[1]), k)
    for k in v.base.weights:
        res = g_residual(v, k)
        if not res.is_zero():
            raise InvalidModule("[e,f] != h on weight %d" % k, k, res)


def validate_g(v: GModule) -> bool:
    try:
        check_g(v)
    except InvalidModule:
        return False
    return True


# -- constructors ---------------------------------------------------------------

def trivial(n: int, weight: int = 0) -> BModule:
    return BModule.build({weight: n})


def irreducible(d: int) -> GModule:
    """L(d): weights -d, -d+2, ..., d with e v_j = v_{j+1}, f fixed by the sl(2) relations."""
    if d < 0:
        raise ValueError("highest weight must be non-negative")
    weights = list(range(-d, d + 1, 2))
    dims = {k: 1 for k in weights}
    e = {k: MatrixQ.from_rows([[1]]) for k in weights[:-1]}
    # e f - f e = k on weight k; with e = 1, f at weight k is c_k with c_k - c_{k+2} = k
    f = {}
    c = 0
    for k in reversed(weights):
        c = c + k
        if k != -d:
            f[k] = MatrixQ.from_rows([[c]])
    return GModule(BModule.build(dims, e), f)


def forget(v: GModule) -> BModule:
    return v.base


def dual(v: BModule) -> BModule:
    """V* with (x.a)(v) = -a(x.v); weight k of the dual is the dual of weight -k."""
    dims = {-k: n for k, n in v.dims.items()}
    e = {}
    for k in v.weights:
        # e on the dual at weight j = -k-2 maps (V^{k+2})^* -> (V^{k})^*
        if v.dim(k + 2):
            e[-k - 2] = -v.e(k).transpose()
    return BModule.build(dims, e)


def dual_g(v: GModule) -> GModule:
    base = dual(v.base)
    f = {}
    for k in v.base.weights:
        if v.dim(k - 2):
            f[-k + 2] = -v.f(k).transpose()
    return GModule(base, f)


def direct_sum(v: BModule, w: BModule) -> BModule:
    from .linalg import block_diag
    weights = set(v.weights) | set(w.weights)
    dims = {k: v.dim(k) + w.dim(k) for k in weights}
    e = {k: block_diag(v.e(k), w.e(k)) for k in weights}
    return BModule.build(dims, e)


def tensor_basis(v: BModule, w: BModule, k: int) -> list[tuple[int, int, int]]:
    """Ordered basis (a, i, j) of weight k of V (x) W: v_i in V^a tensor w_j in W^{k-a}."""
    out = []
    for a in v.weights:
        b = k - a
        for i in range(v.dim(a)):
            for j in range(w.dim(b)):
                out.append((a, i, j))
    return out


def tensor(v: BModule, w: BModule) -> BModule:
    weights = sorted({a + b for a in v.weights for b in w.weights})
    dims = {k: sum(v.dim(a) * w.dim(k - a) for a in v.weights) for k in weights}
    index = {k: {t: n for n, t in enumerate(tensor_basis(v, w, k))} for k in weights}
    e = {}
    for k in weights:
        if not dims.get(k + 2):
            continue
        rows = [[Fraction(0)] * dims[k] for _ in range(dims[k + 2])]
        tgt = index[k + 2]
        for (a, i, j), col in index[k].items():
            b = k - a
            ev = v.e(a)
            for r in range(ev.rows):
                c = ev[r, i]
                if c:
                    rows[tgt[(a + 2, r, j)]][col] += c
            ew = w.e(b)
            for r in range(ew.rows):
                c = ew[r, j]
                if c:
                    rows[tgt[(a, i, r)]][col] += c
        e[k] = MatrixQ.from_rows(rows, cols=dims[k])
    return BModule.build(dims, e)


def tensor_g(v: GModule, w: GModule) -> GModule:
    base = tensor(v.base, w.base)
    # f acts as f (x) 1 + 1 (x) f; reuse tensor() on the "reversed" modules
    rv = BModule.build({-k: n for k, n in v.dims.items()}, {-k: v.f(k) for k in v.base.weights})
    rw = BModule.build({-k: n for k, n in w.dims.items()}, {-k: w.f(k) for k in w.base.weights})
    rt = tensor(rv, rw)
    # basis order of rt at weight -k differs from base at k; translate through the index tuples
    f = {}
    for k in base.weights:
        if not base.dim(k - 2):
            continue
        src = tensor_basis(v.base, w.base, k)
        dst = tensor_basis(v.base, w.base, k - 2)
        r_src = {t: n for n, t in enumerate(tensor_basis(rv, rw, -k))}
        r_dst = {t: n for n, t in enumerate(tensor_basis(rv, rw, -k + 2))}
        m = rt.e(-k)
        rows = [[Fraction(0)] * len(src) for _ in dst]
        for cj, (a, i, j) in enumerate(src):
            for ri, (a2, i2, j2) in enumerate(dst):
                rows[ri][cj] = m[r_dst[(-a2, i2, j2)], r_src[(-a, i, j)]]
        f[k] = MatrixQ.from_rows(rows, cols=len(src))
    return GModule(base, f)


def shift(v: BModule, k: int) -> BModule:
    """V[k]: same vectors and e-action, every weight raised by k."""
    return BModule.build({j + k: n for j, n in v.dims.items()},
                         {j + k: m for j, m in v.e_maps.items()})


def shift_g(v: GModule, k: int) -> GModule:
    return GModule(shift(v.base, k), {j + k: m for j, m in v.f_maps.items()})


def direct_sum_g(v: GModule, w: GModule) -> GModule:
    from .linalg import block_diag
    base = direct_sum(v.base, w.base)
    return GModule(base, {k: block_diag(v.f(k), w.f(k)) for k in base.weights})


# -- homomorphisms --------------------------------------------------------------

def is_shifted_equivariant(phi: GradedHom, k: int) -> bool:
    """phi(e v) = e phi(v) for a map raising weight by k (phi(hv + kv) = h phi(v))."""
    if phi.weight_shift != k:
        raise InvalidModule("map shifts weight by %d, not %d" % (phi.weight_shift, k))
    phi.check_shapes()
    src, tgt = phi.source, phi.target
    for j in sorted(set(src.weights) | {w - 2 for w in src.weights}):
        lhs = phi.at(j + 2) @ src.e(j)
        rhs = tgt.e(j + k) @ phi.at(j)
        if lhs != rhs:
            return False
    return True


def is_bhom(phi: GradedHom) -> bool:
    if phi.weight_shift != 0:
        raise InvalidModule("b-homomorphisms preserve weight; got shift %d" % phi.weight_shift)
    return is_shifted_equivariant(phi, 0)


def commutes_with_f(phi: GradedHom, v: GModule, w: GModule) -> bool:
    s = phi.weight_shift
    for j in set(v.base.weights) | {x + 2 for x in v.base.weights}:
        if phi.at(j - 2) @ v.f(j) != w.f(j + s) @ phi.at(j):
            return False
    return True


def identity_hom(v: BModule) -> GradedHom:
    return GradedHom(v, v, 0, {k: MatrixQ.identity(n) for k, n in v.dims.items()})


def zero_hom(v: BModule, w: BModule, shift_by: int = 0) -> GradedHom:
    return GradedHom(v, w, shift_by, {})


def equivariant_hom_basis(v: BModule, w: BModule, shift_by: int = 0) -> list[GradedHom]:
    """Basis of the space of e-equivariant maps V -> W raising weight by shift_by."""
    blocks = []  # (weight, rows, cols, offset)
    off = 0
    for k in v.weights:
        r, c = w.dim(k + shift_by), v.dim(k)
        if r and c:
            blocks.append((k, r, c, off))
            off += r * c
    nvar = off
    if nvar == 0:
        return []
    where = {k: (r, c, o) for k, r, c, o in blocks}
    eqs = []
    # (phi_{k+2} e_k - e'_{k+s} phi_k)[p, q] = 0
    for k in sorted(set(v.weights) | {x - 2 for x in v.weights}):
        rows_n = w.dim(k + 2 + shift_by)
        cols_n = v.dim(k)
        if not rows_n or not cols_n:
            continue
        ev = v.e(k)
        ew = w.e(k + shift_by)
        for p in range(rows_n):
            for q in range(cols_n):
                eq = [Fraction(0)] * nvar
                if k + 2 in where:
                    r, c, o = where[k + 2]
                    for t in range(c):
                        if ev[t, q]:
                            eq[o + p * c + t] += ev[t, q]
                if k in where:
                    r, c, o = where[k]
                    for t in range(r):
                        if ew[p, t]:
                            eq[o + t * c + q] -= ew[p, t]
                if any(eq):
                    eqs.append(eq)
    space = kernel_basis(MatrixQ.from_rows(eqs, cols=nvar)) if eqs else Subspace.full(nvar)
    out = []
    for vec in space.basis:
        maps = {}
        for k, r, c, o in blocks:
            maps[k] = MatrixQ.from_rows([vec[o + i * c:o + (i + 1) * c] for i in range(r)], cols=c)
        out.append(GradedHom(v, w, shift_by, maps))
    return out


def random_equivariant_hom(v: BModule, w: BModule, shift_by: int, rng: random.Random) -> GradedHom:
    basis = equivariant_hom_basis(v, w, shift_by)
    maps: dict[int, MatrixQ] = {}
    for phi in basis:
        c = rng.randint(-3, 3)
        if not c:
            continue
        for k, m in phi.maps.items():
            maps[k] = maps[k] + m.scale(c) if k in maps else m.scale(c)
    return GradedHom(v, w, shift_by, maps)


# -- sl(2) structure --------------------------------------------------------------

def decompose_g(v: GModule) -> dict[int, int]:
    """Multiplicity of each irreducible L(d): dim V^d - dim V^{d+2}."""
    check_g(v)
    out = {}
    for d in range(0, max([abs(k) for k in v.dims] + [0]) + 1):
        m = v.dim(d) - v.dim(d + 2)
        if m < 0:
            raise InvalidModule("negative multiplicity %d for L(%d)" % (m, d), d)
        if m:
            out[d] = m
    total = sum(m * (d + 1) for d, m in out.items())
    if total != v.base.total_dim:
        raise InvalidModule("irreducible content accounts for %d of %d dimensions" % (total, v.base.total_dim))
    return out


def from_multiplicities(mult: Mapping[int, int]) -> GModule:
    out = GModule(BModule.build({}), {})
    for d in sorted(mult):
        for _ in range(mult[d]):
            out = direct_sum_g(out, irreducible(d))
    return out


def solve_f(v: BModule) -> GModule | None:
    """The sl(2)-extension of V, or None if none exists.

    Built from the primitive decomposition: P^{-d} = ker e^{d+1} on V^{-d}, and
    V^k is the sum of e^j P^{-d} with k = 2j - d.  On the string p, e p, e^2 p, ...
    f is forced to be f(e^j p) = j(d - j + 1) e^{j-1} p.  The result is checked
    against the defining relation before it is returned.
    """
    if any(v.dim(k) != v.dim(-k) for k in v.weights):
        return None
    prim: dict[int, list] = {}
    for d in v.weights:
        if d < 0:
            continue
        prim[d] = list(kernel_basis(v.e_power(d + 1, -d)).basis) if v.dim(-d) else []
    f = {}
    for k in v.weights:
        cols, imgs = [], []
        for d, ps in prim.items():
            if d < abs(k) or (d - k) % 2:
                continue
            j = (k + d) // 2
            for p in ps:
                cols.append(v.e_power(j, -d).apply(p))
                if j:
                    imgs.append([j * (d - j + 1) * x for x in v.e_power(j - 1, -d).apply(p)])
                else:
                    imgs.append([Fraction(0)] * v.dim(k - 2))
        if len(cols) != v.dim(k):
            return None
        frame = MatrixQ.from_columns(cols, v.dim(k))
        if rank(frame) < v.dim(k):
            return None
        if v.dim(k - 2):
            f[k] = MatrixQ.from_columns(imgs, v.dim(k - 2)) @ inverse(frame)
    g = GModule(v, f)
    try:
        check_g(g)
    except InvalidModule:
        return None
    return g


def solve_f_linear(v: BModule) -> GModule | None:
    """Same answer as solve_f, by one joint linear solve of e f - f e = h for all
    f-blocks at once.  Slow; kept as an independent check."""
    blocks = {}
    off = 0
    for k in v.weights:
        r, c = v.dim(k - 2), v.dim(k)
        if r:
            blocks[k] = (r, c, off)
            off += r * c
    nvar = off
    eqs, rhs = [], []
    for k in v.weights:
        n = v.dim(k)
        em = v.e(k - 2)  # V^{k-2} -> V^k
        ek = v.e(k)      # V^k -> V^{k+2}
        for p in range(n):
            for q in range(n):
                eq = [Fraction(0)] * nvar
                # (e_{k-2} f_k)[p,q] = sum_t em[p,t] f_k[t,q]
                if k in blocks:
                    r, c, o = blocks[k]
                    for t in range(r):
                        if em[p, t]:
                            eq[o + t * c + q] += em[p, t]
                # (f_{k+2} e_k)[p,q] = sum_t f_{k+2}[p,t] ek[t,q]
                if k + 2 in blocks:
                    r, c, o = blocks[k + 2]
                    for t in range(c):
                        if ek[t, q]:
                            eq[o + p * c + t] -= ek[t, q]
                eqs.append(eq)
                rhs.append(Fraction(k) if p == q else Fraction(0))
    if nvar == 0:
        if any(rhs):
            return None
        return GModule(v, {})
    x = solve(MatrixQ.from_rows(eqs, cols=nvar), rhs)
    if x is None:
        return None
    f = {k: MatrixQ.from_rows([x[o + i * c:o + (i + 1) * c] for i in range(r)], cols=c)
         for k, (r, c, o) in blocks.items()}
    return GModule(v, f)


# -- test-suite generator ------------------------------------------------------

def random_bmodule(seed: int, max_weight_span: int, max_dim: int) -> BModule:
    """Deterministic random b-module: weights within a window of width max_weight_span,
    total dimension at most max_dim (and at least 1)."""
    if max_weight_span < 0 or max_dim < 1:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    offset = rng.randint(-max_weight_span, 0)
    total = rng.randint(1, max_dim)
    dims: dict[int, int] = {}
    for _ in range(total):
        k = offset + rng.randint(0, max_weight_span)
        dims[k] = dims.get(k, 0) + 1
    e = {}
    for k in sorted(dims):
        r, c = dims.get(k + 2, 0), dims[k]
        if not r:
            continue
        target_rank = rng.randint(0, min(r, c))
        left = [[rng.randint(-2, 2) for _ in range(target_rank)] for _ in range(r)]
        right = [[rng.randint(-2, 2) for _ in range(c)] for _ in range(target_rank)]
        if target_rank:
            e[k] = MatrixQ.from_rows(left, cols=target_rank) @ MatrixQ.from_rows(right, cols=c)
        else:
            e[k] = MatrixQ.zeros(r, c)
    return BModule.build(dims, e)
