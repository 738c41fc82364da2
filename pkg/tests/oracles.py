"""Subspace-level reference constructions used to check filtration identities."""
from lefrank.filtration import CanonicalFiltration
from lefrank.linalg import Subspace
from lefrank.modules import BModule, tensor_basis


def level_equal(a, b, weights) -> bool:
    return all(a[k] == b[k] for k in weights)


def dual_level(fv: CanonicalFiltration, m: int) -> dict:
    """Expected (V*)_m: annihilator of V_{-m-1}, read at weight k as a subspace of (V^{-k})*."""
    src = fv.level(-m - 1)
    return {-k: s.annihilator() for k, s in src.items()}


def sum_level(fv, fw, v: BModule, w: BModule, m: int) -> dict:
    a, b = fv.level(m), fw.level(m)
    out = {}
    for k in sorted(set(v.weights) | set(w.weights)):
        nv, nw = v.dim(k), w.dim(k)
        vecs = [list(x) + [0] * nw for x in (a[k].basis if k in a else ())]
        vecs += [[0] * nv + list(y) for y in (b[k].basis if k in b else ())]
        out[k] = Subspace.span(vecs, nv + nw)
    return out


def tensor_level(fv, fw, v: BModule, w: BModule, m: int, weights) -> dict:
    """Sum over a + b = m of V_a (x) W_b, embedded in the tensor basis order."""
    lv = range(fv.levels.start - 1, fv.levels.stop + 1) if fv.steps else range(0)
    lw = range(fw.levels.start - 1, fw.levels.stop + 1) if fw.steps else range(0)
    out = {}
    for k in weights:
        basis = tensor_basis(v, w, k)
        pos = {t: i for i, t in enumerate(basis)}
        vecs = []
        for a in set(lv) | {m - b for b in lw}:
            la, lb = fv.level(a), fw.level(m - a)
            for wa in v.weights:
                wb = k - wa
                if wa not in la or wb not in lb:
                    continue
                for x in la[wa].basis:
                    for y in lb[wb].basis:
                        vec = [0] * len(basis)
                        for i, xi in enumerate(x):
                            if xi:
                                for j, yj in enumerate(y):
                                    if yj:
                                        vec[pos[(wa, i, j)]] = xi * yj
                        vecs.append(vec)
        out[k] = Subspace.span(vecs, len(basis))
    return out
