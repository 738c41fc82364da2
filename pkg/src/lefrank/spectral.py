"""Degeneration certificates for the Leray-Serre spectral sequence of a
Hamiltonian fibration, by the filtration-gap argument.

The page-r differential commutes with cup by the symplectic class and lowers
fiber degree by r - 1, so it lowers the canonical filtration level by r - 1.
When the fiber filtration jumps from 0 to everything within fewer than r - 1
levels, that differential vanishes; the next page is the same module, so
the argument repeats for every later page.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cohomology import SymplecticData, check_ring, failing_map, hard_lefschetz, weak_lefschetz
from .filtration import CanonicalFiltration, FiltrationError, canonical_filtration, graded_content, saturation_level
from .modules import BModule, tensor, trivial

LALONDE_MCDUFF = "lalonde-mcduff-pages-2-3"


@dataclass(frozen=True)
class FibrationSpec:
    fiber: SymplecticData
    base_betti: tuple
    start_page_policy: str | int = "automatic"
    base_truncated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "base_betti", tuple(int(b) for b in self.base_betti))
        if not self.base_betti or self.base_betti[0] != 1:
            raise ValueError("base must be connected: base_betti[0] = 1")
        if any(b < 0 for b in self.base_betti):
            raise ValueError("Betti numbers are non-negative")


@dataclass(frozen=True)
class DegenerationCertificate:
    certified: bool
    r0: int
    lo: int
    hi: int
    reason: tuple
    route: str = "none"
    axioms: tuple = ()
    total_betti: tuple | None = None
    base_truncated: bool = False

    def to_json(self) -> dict:
        doc = {
            "certified": self.certified,
            "route": self.route,
            "r0": self.r0,
            "lo": self.lo,
            "hi": self.hi,
            "axioms": list(self.axioms),
        }
        if self.total_betti is not None:
            doc["total_betti"] = list(self.total_betti)
        doc["reason"] = list(self.reason)
        if self.base_truncated:
            doc["base_truncated"] = True
        return doc


def e2_page(spec: FibrationSpec) -> BModule:
    """H*(M) (x) H*(B) with e acting on the fiber factor only."""
    fiber = spec.fiber.module()
    base = trivial(sum(spec.base_betti))
    return tensor(fiber, base)


def gap_certificate(fiber_module: BModule, r0: int, filt: CanonicalFiltration | None = None) -> DegenerationCertificate:
    if r0 < 2:
        raise ValueError("pages start at r = 2")
    lo, hi = saturation_level(fiber_module, filt)
    gap = hi - lo
    reason = [
        "fiber filtration: V_m = 0 for m < %d and V_m = V for m >= %d (gap %d)" % (lo, hi, gap),
        "page-r differentials commute with e (derivation, omega extends to the total space) "
        "and lower fiber degree by r-1, hence map E_m into E_{m-(r-1)}",
    ]
    if gap < r0 - 1:
        reason.append("gap %d < %d = r0-1: for m <= hi the page-%d differential maps E_m into "
                      "E_{m-%d} = 0 (below lo), and E_hi = E, so it vanishes" % (gap, r0 - 1, r0, r0 - 1))
        reason.append("a vanishing differential leaves the same module on the next page and the "
                      "shift only grows, so all later differentials vanish too")
        return DegenerationCertificate(True, r0, lo, hi, tuple(reason))
    reason.append("gap %d >= %d = r0-1: the gap argument does not force the page-%d differential "
                  "to vanish" % (gap, r0 - 1, r0))
    return DegenerationCertificate(False, r0, lo, hi, tuple(reason))


def convolve(fiber_betti, base_betti, length: int | None = None) -> tuple:
    n = len(fiber_betti) + len(base_betti) - 1
    out = [0] * n
    for q, f in enumerate(fiber_betti):
        for p, b in enumerate(base_betti):
            out[p + q] += f * b
    if length is not None:
        out = out[:length]
    return tuple(out)


def certify_csplitting(spec: FibrationSpec) -> DegenerationCertificate:
    check_ring(spec.fiber.ring)
    fiber = spec.fiber
    module = fiber.module()
    n = fiber.half_dim
    fl = canonical_filtration(module)
    e2 = canonical_filtration(e2_page(spec))
    if (e2.lo, e2.hi) != (fl.lo, fl.hi):
        raise FiltrationError("E2 jump levels (%d, %d) differ from the fiber's (%d, %d)"
                              % (e2.lo, e2.hi, fl.lo, fl.hi))
    trail = ["E2 = H*(M) (x) H*(B) with trivial action on H*(B); its filtration jumps at the "
             "fiber's levels (%d, %d)" % (fl.lo, fl.hi)]
    policy = spec.start_page_policy
    axioms: tuple = ()
    if policy == "automatic":
        if hard_lefschetz(fiber):
            r0, route = 2, "hard-lefschetz"
            trail.append("omega^k: H^{%d-k} -> H^{%d+k} onto for all k (hard Lefschetz); start at page 2" % (n, n))
        elif weak_lefschetz(fiber):
            r0, route = 4, "weak-lefschetz"
            axioms = (LALONDE_MCDUFF,)
            trail.append("omega^k: H^{%d-k} -> H^{%d+k} onto for all k (weak Lefschetz)" % (n + 1, n + 1))
            trail.append("ASSUMED (Lalonde-McDuff: Hamiltonian fibrations over 3-dimensional "
                         "CW-complexes c-split): E2 = E3 = E4; start at page 4")
        else:
            k, src, r, t = failing_map(fiber.ring, fiber.omega, n + 1)
            trail.append("weak Lefschetz fails: omega^%d: H^%d -> H^%d has rank %d < %d"
                         % (k, src, src + 2 * k, r, t))
            trail.append("no certificate: the gap argument needs the weak Lefschetz condition")
            return DegenerationCertificate(False, 4, fl.lo, fl.hi, tuple(trail), "none", (),
                                           None, spec.base_truncated)
    else:
        r0 = int(policy)
        if r0 < 2 or r0 > 4:
            raise ValueError("forced start page must be 2, 3 or 4")
        route = "hard-lefschetz" if r0 == 2 else "weak-lefschetz"
        if r0 > 2:
            axioms = (LALONDE_MCDUFF,)
            trail.append("ASSUMED (Lalonde-McDuff): differentials on pages 2..%d vanish" % (r0 - 1))
    cert = gap_certificate(module, r0, fl)
    trail.extend(cert.reason)
    if not cert.certified:
        return DegenerationCertificate(False, r0, cert.lo, cert.hi, tuple(trail), "none", axioms,
                                       None, spec.base_truncated)
    if spec.base_truncated:
        total = convolve(fiber.ring.betti, spec.base_betti, len(spec.base_betti))
        trail.append("base cohomology truncated at degree %d: total space Betti numbers valid "
                     "through that degree; H*(P) is a free H*(B)-module on H*(M)" % (len(spec.base_betti) - 1))
    else:
        total = convolve(fiber.ring.betti, spec.base_betti)
        trail.append("spectral sequence collapses at E2: H*(P) = H*(M) (x) H*(B)")
    return DegenerationCertificate(True, r0, cert.lo, cert.hi, tuple(trail), route, axioms, total,
                                   spec.base_truncated)


def schur_report(fiber_module: BModule, r: int) -> list[dict]:
    """Advisory only: per level, the irreducible content of gr_m and gr_{m-(r-1)}
    and whether disjoint highest weights would force the induced map to vanish."""
    if r < 2:
        raise ValueError("pages start at r = 2")
    content = graded_content(canonical_filtration(fiber_module))
    out = []
    for m in sorted(content):
        t = m - (r - 1)
        src, tgt = content[m], content.get(t, {})
        out.append({
            "level": m,
            "target_level": t,
            "source": dict(sorted(src.items())),
            "target": dict(sorted(tgt.items())),
            "forced_zero": not (set(src) & set(tgt)),
        })
    return out
