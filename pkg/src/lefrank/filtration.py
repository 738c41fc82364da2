"""The canonical filtration V_m of a b-module.

V_m is the unique exhaustive filtration by e-closed subspaces whose graded
pieces V_m / V_{m-1}, shifted by -m, carry an sl(2)-structure.  It is
computed level by level as the largest e-closed subspace W for which every
e^l : W^{m-l} -> W^{m+l} is onto.  A closed-form count of the pieces in
terms of ranks of powers of e is provided as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .linalg import MatrixQ, Subspace, complement_basis, image_of, intersect, preimage, rank, solve
from .modules import (BModule, GModule, GradedHom, check_b, decompose_g, shift,
                      solve_f)


class FiltrationError(RuntimeError):
    """An internal cross-check failed; this always indicates a bug."""


Level = Mapping[int, Subspace]  # weight -> subspace of that weight space


@dataclass(frozen=True)
class CanonicalFiltration:
    module: BModule
    steps: Mapping[int, Level]
    lo: int
    hi: int

    def level(self, m: int) -> Level:
        """V_m, extended by 0 below and V above the stored range."""
        if m in self.steps:
            return self.steps[m]
        v = self.module
        if not self.steps or m > max(self.steps):
            return {k: v.full(k) for k in v.weights}
        return {k: v.zero(k) for k in v.weights}

    def dim(self, m: int) -> int:
        return sum(s.dim for s in self.level(m).values())

    def dims(self, m: int) -> dict[int, int]:
        return {k: s.dim for k, s in self.level(m).items()}

    @property
    def levels(self) -> range:
        if not self.steps:
            return range(0, 0)
        return range(min(self.steps), max(self.steps) + 1)


@dataclass(frozen=True)
class MultiplicityTable:
    entries: Mapping[int, Mapping[int, int]]  # m -> d -> c

    def get(self, m: int, d: int) -> int:
        return self.entries.get(m, {}).get(d, 0)

    def level_dims(self, m: int) -> dict[int, int]:
        """dim (V_m)^k for every weight k, reassembled from the multiplicities."""
        out: dict[int, int] = {}
        for mp, row in self.entries.items():
            if mp > m:
                continue
            for d, c in row.items():
                for k in range(mp - d, mp + d + 1, 2):
                    out[k] = out.get(k, 0) + c
        return out

    def total(self) -> int:
        return sum(c * (d + 1) for row in self.entries.values() for d, c in row.items())


# -- fixed-point construction ---------------------------------------------------

def _saturated_core(v: BModule, m: int, start: Level | None = None,
                    powers: dict | None = None) -> dict[int, Subspace]:
    """Largest e-closed W with e^l: W^{m-l} -> W^{m+l} onto for all l >= 0.

    ``start`` may be any subspace family known to contain the answer (V_{m+1}
    does); the repairs never remove anything that belongs to it."""
    ws = v.weights
    w = dict(start) if start is not None else {k: v.full(k) for k in ws}
    powers = {} if powers is None else powers
    while True:
        before = sum(s.dim for s in w.values())
        for k in sorted(ws, reverse=True):
            if v.dim(k + 2):
                w[k] = intersect(w[k], preimage(v.e(k), w[k + 2]))
            # weights above the top with dim 0 impose nothing
        for k in ws:
            if k <= m:
                continue
            l = k - m
            src = m - l
            if src in w:
                if (l, src) not in powers:
                    powers[(l, src)] = v.e_power(l, src)
                img = image_of(powers[(l, src)], w[src])
            else:
                img = Subspace.zero(v.dim(k))
            w[k] = intersect(w[k], img)
        if sum(s.dim for s in w.values()) == before:
            return w


def canonical_filtration(v: BModule) -> CanonicalFiltration:
    check_b(v)
    if v.total_dim == 0:
        return CanonicalFiltration(v, {}, 0, 0)
    ws = v.weights
    steps = {}
    powers: dict = {}
    prev = None
    # descending, so each level starts from the one above it
    for m in range(ws[-1] + 1, ws[0] - 2, -1):
        steps[m] = prev = _saturated_core(v, m, prev, powers)
    steps = dict(sorted(steps.items()))
    lo = min(m for m, s in steps.items() if any(x.dim for x in s.values()))
    hi = min(m for m, s in steps.items() if all(x.is_full() for x in s.values()))
    return CanonicalFiltration(v, steps, lo, hi)


# -- rank formula ----------------------------------------------------------------

def _rank_table(v: BModule):
    cache: dict[tuple[int, int], int] = {}

    def r(i: int, j: int) -> int:
        if (i, j) not in cache:
            if not v.dim(j) or not v.dim(j + 2 * i):
                cache[i, j] = 0
            elif i == 0:
                cache[i, j] = v.dim(j)
            else:
                cache[i, j] = rank(v.e_power(i, j))
        return cache[i, j]

    return r


def filtration_dims(v: BModule) -> MultiplicityTable:
    """Count of strings L(d)[m] in V from ranks r(i, j) of e^i : V^j -> V^{j+2i}."""
    check_b(v)
    r = _rank_table(v)
    ws = v.weights
    entries: dict[int, dict[int, int]] = {}
    if not ws:
        return MultiplicityTable(entries)
    for a in ws:  # bottom weight of the string
        for b in ws:  # top weight
            if b < a or (b - a) % 2:
                continue
            d = (b - a) // 2
            m = (a + b) // 2
            c = r(d, a) - r(d + 1, a - 2) - r(d + 1, a) + r(d + 2, a - 2)
            if c < 0:
                raise FiltrationError("negative multiplicity c[%d][%d] = %d" % (m, d, c))
            if c:
                entries.setdefault(m, {})[d] = c
    table = MultiplicityTable(entries)
    if table.total() != v.total_dim:
        raise FiltrationError("multiplicities account for %d of %d dimensions" % (table.total(), v.total_dim))
    return table


# -- saturation -----------------------------------------------------------------

def is_saturated_at(v: BModule, m: int) -> bool:
    """e^l : V^{m-l} -> V^{m+l} onto for every l >= 0 (rank test only)."""
    for k in v.weights:
        if k < m:
            continue
        l = k - m
        if not v.dim(m - l) or rank(v.e_power(l, m - l)) < v.dim(k):
            return False
    return True


def saturation_level(v: BModule, filt: CanonicalFiltration | None = None) -> tuple[int, int]:
    """(lo, hi); hi from direct rank checks, confirmed against the filtration."""
    if filt is None:
        filt = canonical_filtration(v)
    if v.total_dim == 0:
        return (0, 0)
    ws = v.weights
    hi = next(m for m in range(ws[0] - 1, ws[-1] + 2) if is_saturated_at(v, m))
    if hi != filt.hi:
        raise FiltrationError("rank test gives hi=%d, filtration gives hi=%d" % (hi, filt.hi))
    return (filt.lo, hi)


# -- graded pieces ---------------------------------------------------------------

def quotient(v: BModule, big: Level, small: Level) -> tuple[BModule, dict[int, list]]:
    """big / small as a b-module, with the chosen lifts (echelon complement vectors) per weight."""
    lifts = {}
    dims = {}
    for k in v.weights:
        b = big.get(k, v.zero(k))
        s = small.get(k, v.zero(k))
        lifts[k] = complement_basis(b, s)
        if lifts[k]:
            dims[k] = len(lifts[k])
    e = {}
    for k in dims:
        if k + 2 not in dims and not lifts.get(k + 2):
            continue
        s2 = small.get(k + 2, v.zero(k + 2))
        frame = list(s2.basis) + lifts[k + 2]
        n_small = s2.dim
        cols = []
        ek = v.e(k)
        for x in lifts[k]:
            y = ek.apply(x)
            coords = _coords_in_frame(frame, y)
            cols.append(coords[n_small:])
        e[k] = MatrixQ.from_columns(cols, dims[k + 2])
    return BModule.build(dims, e), lifts


def _coords_in_frame(frame, y):
    if not frame:
        if any(y):
            raise FiltrationError("image leaves the filtration step")
        return ()
    x = solve(MatrixQ.from_columns(frame, len(y)), y)
    if x is None:
        raise FiltrationError("image leaves the filtration step")
    return x


def graded_piece_b(filt: CanonicalFiltration, m: int) -> BModule:
    """(V_m / V_{m-1})[-m] as a b-module."""
    q, _ = quotient(filt.module, filt.level(m), filt.level(m - 1))
    return shift(q, -m)


def graded_piece(filt: CanonicalFiltration, m: int) -> GModule:
    g = solve_f(graded_piece_b(filt, m))
    if g is None:
        raise FiltrationError("graded piece at level %d admits no sl(2)-structure" % m)
    return g


def graded_content(filt: CanonicalFiltration) -> dict[int, dict[int, int]]:
    """Irreducible content of every nonzero graded piece."""
    out = {}
    for m in filt.levels:
        piece = graded_piece(filt, m)
        if piece.base.total_dim:
            out[m] = decompose_g(piece)
    return out


# -- independent axiom check --------------------------------------------------

def check_axioms(v: BModule, filt: CanonicalFiltration) -> tuple[bool, str]:
    """Verify the four defining properties directly; returns (ok, first violation)."""
    if not filt.steps:
        return (v.total_dim == 0, "empty filtration on nonzero module" if v.total_dim else "")
    levels = sorted(filt.steps)
    if levels != list(range(levels[0], levels[-1] + 1)):
        return (False, "levels are not contiguous")
    first, last = filt.steps[levels[0]], filt.steps[levels[-1]]
    for k in v.weights:
        if first.get(k, v.zero(k)).dim:
            return (False, "axiom 1: V_%d is not zero" % levels[0])
        if not last.get(k, v.zero(k)).is_full():
            return (False, "axiom 2: V_%d is not everything" % levels[-1])
    for m in levels:
        step = filt.steps[m]
        for k in v.weights:
            s = step.get(k, v.zero(k))
            if s.ambient_dim != v.dim(k):
                return (False, "V_%d has wrong ambient dimension at weight %d" % (m, k))
            if m - 1 in filt.steps and not s.contains(filt.steps[m - 1].get(k, v.zero(k))):
                return (False, "nesting: V_%d not inside V_%d at weight %d" % (m - 1, m, k))
            if v.dim(k + 2):
                img = image_of(v.e(k), s)
                if not step.get(k + 2, v.zero(k + 2)).contains(img):
                    return (False, "axiom 3: V_%d not e-closed at weight %d" % (m, k))
    for m in levels:
        prev = filt.steps.get(m - 1, {k: v.zero(k) for k in v.weights})
        q, _ = quotient(v, filt.steps[m], prev)
        if solve_f(shift(q, -m)) is None:
            return (False, "axiom 4: (V_%d/V_%d)[-%d] has no sl(2)-structure" % (m, m - 1, m))
    return (True, "")


def try_extend_to_g(v: BModule) -> GModule | None:
    filt = canonical_filtration(v)
    if v.total_dim and (filt.lo != 0 or filt.hi != 0):
        return None
    g = solve_f(v)
    if g is None:
        raise FiltrationError("filtration concentrated at 0 but no sl(2)-structure found")
    return g


# -- maps and filtrations ---------------------------------------------------------

def image_level(phi: GradedHom, level: Level) -> dict[int, Subspace]:
    out: dict[int, Subspace] = {}
    for k, s in level.items():
        t = k + phi.weight_shift
        img = image_of(phi.at(k), s)
        out[t] = out[t] + img if t in out else img
    return out


def maps_into(phi: GradedHom, src: CanonicalFiltration, tgt: CanonicalFiltration, offset: int = 0) -> bool:
    """phi(V_m) inside W_{m+offset} at every level m."""
    levels = set(src.levels) | {m - offset for m in tgt.levels}
    if not levels:
        return True
    for m in range(min(levels) - 1, max(levels) + 2):
        target = tgt.level(m + offset)
        for k, img in image_level(phi, src.level(m)).items():
            if not img.dim:
                continue
            if k not in target or not target[k].contains(img):
                return False
    return True


def schur_vanishing(v: BModule, w: BModule) -> dict[int, bool]:
    """Per level m: True when gr_m V and gr_m W share no highest weight, so any
    b-homomorphism V -> W induces zero on that level."""
    cv = graded_content(canonical_filtration(v))
    cw = graded_content(canonical_filtration(w))
    out = {}
    for m in sorted(set(cv) | set(cw)):
        out[m] = not (set(cv.get(m, {})) & set(cw.get(m, {})))
    return out


# -- JSON report ---------------------------------------------------------------

def filtration_report(filt: CanonicalFiltration) -> dict:
    v = filt.module
    table = filtration_dims(v)
    if not v.total_dim:
        return {"lo": 0, "hi": 0, "dims": {}, "totals": {}, "multiplicities": {}}
    dims = {}
    for m in range(filt.lo - 1, filt.hi + 1):
        dims[str(m)] = {str(k): filt.level(m)[k].dim for k in v.weights}
    mult = {str(m): {str(d): c for d, c in sorted(row.items())}
            for m, row in sorted(table.entries.items())}
    totals = {m: sum(row.values()) for m, row in dims.items()}
    return {"lo": filt.lo, "hi": filt.hi, "dims": dims, "totals": totals, "multiplicities": mult}


def check_against_formula(filt: CanonicalFiltration) -> None:
    table = filtration_dims(filt.module)
    for m in filt.levels:
        want = table.level_dims(m)
        got = filt.dims(m)
        for k in set(want) | set(got):
            if want.get(k, 0) != got.get(k, 0):
                raise FiltrationError("level %d weight %d: fixed point %d, rank formula %d"
                                      % (m, k, got.get(k, 0), want.get(k, 0)))
