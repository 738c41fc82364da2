"""Command-line front end.

Exit codes: 0 success (or positive verdict), 1 negative verdict on valid
input, 2 malformed input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import sys

from . import cohomology as coh
from .constructions import (InvalidLieAlgebra, NilpotentLieAlgebra, UnknownEntry, blowup_bmodule, catalog,
                            catalog_names, chevalley_eilenberg, lie_from_json, lie_to_json)
from .filtration import (FiltrationError, canonical_filtration, check_against_formula, check_axioms,
                         filtration_report, saturation_level)
from .formats import (MalformedInput, bmodule_from_json, bmodule_to_json, detect_kind, dumps,
                      gmodule_from_json, load_json)
from .modules import InvalidModule, check_b, check_g, decompose_g
from .spectral import FibrationSpec, certify_csplitting

OK, NEGATIVE, MALFORMED, INTERNAL = 0, 1, 2, 3


class Report:
    """A rendered result: a JSON document, its text rendering and an exit code."""

    def __init__(self, doc, text: str, code: int = OK):
        self.doc, self.text, self.code = doc, text, code


def yes(b: bool) -> str:
    return "YES" if b else "NO"


# -- renderers --------------------------------------------------------------------

def render_filtration(rep: dict) -> str:
    if not rep["dims"]:
        return "lo=hi=0, trivial"
    lines = ["lo=%d hi=%d" % (rep["lo"], rep["hi"])]
    weights = sorted({int(k) for row in rep["dims"].values() for k in row})
    lines.append("dims of V_m by weight:")
    lines.append("  m | " + " ".join("%3d" % k for k in weights) + " | total")
    for m in sorted(rep["dims"], key=int):
        row = rep["dims"][m]
        lines.append("%3d | " % int(m) + " ".join("%3d" % row.get(str(k), 0) for k in weights)
                     + " | %d" % rep["totals"][m])
    lines.append("multiplicities c[m][d] (copies of L(d) in gr_m):")
    for m in sorted(rep["multiplicities"], key=int):
        row = rep["multiplicities"][m]
        lines.append("  m=%s: " % m + " ".join("L(%s)x%d" % (d, c) for d, c in sorted(row.items(), key=lambda t: int(t[0]))))
    return "\n".join(lines)


def render_certificate(doc: dict) -> str:
    lines = ["certified: %s" % yes(doc["certified"]),
             "route: %s" % doc["route"],
             "r0=%d lo=%d hi=%d" % (doc["r0"], doc["lo"], doc["hi"])]
    lines.append("axioms: %s" % (", ".join(doc["axioms"]) if doc["axioms"] else "none"))
    if "total_betti" in doc:
        lines.append("total_betti: " + ",".join(str(b) for b in doc["total_betti"]))
    lines.append("reason:")
    lines.extend("  - " + r for r in doc["reason"])
    return "\n".join(lines)


# -- loading ---------------------------------------------------------------------

def _load(path: str):
    doc = load_json(path)
    return detect_kind(doc), doc


def _ring_and_class(path: str, cls: str | None):
    kind, doc = _load(path)
    if kind != "ring":
        raise MalformedInput("%s is a %s file, expected a ring" % (path, kind))
    ring = coh.ring_from_json(doc)
    coh.check_ring(ring)
    if cls is None:
        raise MalformedInput("--class NAME is required for ring input")
    return ring, ring.resolve_class(cls)


# -- verbs --------------------------------------------------------------------------

def cmd_validate(args) -> Report:
    kind, doc = _load(args.file)
    if kind == "ring":
        ring = coh.ring_from_json(doc)
        coh.check_ring(ring)
        info = {"kind": kind, "valid": True, "dim": ring.dim, "betti": ring.betti}
        text = "valid ring: dim=%d betti=%s" % (ring.dim, ",".join(map(str, ring.betti)))
    elif kind == "liealg":
        lie = lie_from_json(doc)
        info = {"kind": kind, "valid": True, "dim": lie.dim}
        text = "valid nilpotent Lie algebra: dim=%d" % lie.dim
    elif kind == "gmodule":
        v = gmodule_from_json(doc)
        check_g(v)
        info = {"kind": kind, "valid": True, "total_dim": v.base.total_dim}
        text = "valid sl(2)-module: total_dim=%d" % v.base.total_dim
    else:
        v = bmodule_from_json(doc)
        check_b(v)
        info = {"kind": kind, "valid": True, "total_dim": v.total_dim}
        text = "valid b-module: total_dim=%d" % v.total_dim
    return Report(info, text)


def _module_from(path: str, cls: str | None):
    kind, doc = _load(path)
    if kind == "ring":
        ring, alpha = _ring_and_class(path, cls)
        return coh.lefschetz_bmodule(ring, alpha)
    if kind in ("bmodule", "gmodule"):
        v = bmodule_from_json(doc)
        check_b(v)
        return v
    raise MalformedInput("%s is a %s file; expected a module or ring" % (path, kind))


def _checked_filtration(v):
    filt = canonical_filtration(v)
    ok, why = check_axioms(v, filt)
    if not ok:
        raise FiltrationError(why)
    check_against_formula(filt)
    return filt


def cmd_filtration(args) -> Report:
    v = _module_from(args.file, args.cls)
    rep = filtration_report(_checked_filtration(v))
    return Report(rep, render_filtration(rep))


def cmd_lefschetz(args) -> Report:
    ring, alpha = _ring_and_class(args.file, args.cls)
    s = coh.SymplecticData.of(ring, alpha)
    filt = _checked_filtration(s.module())
    lo, hi = saturation_level(s.module(), filt)
    hard, weak = coh.hard_lefschetz(s), coh.weak_lefschetz(s)
    if hard != (lo == hi == s.half_dim) or weak != (hi <= s.half_dim + 1):
        raise FiltrationError("Lefschetz verdicts disagree with the filtration jumps")
    equiv = []
    for m in range(0, ring.dim + 1):
        a, b, c = coh.lef_fil_equiv_report(s, m, filt)
        if not a == b == c:
            raise FiltrationError("equivalence fails at m=%d: %s %s %s" % (m, a, b, c))
        equiv.append({"m": m, "onto": a, "full": b, "dual_zero": c})
    doc = {"hard": hard, "weak": weak, "lo": lo, "hi": hi, "dim": ring.dim, "equivalence": equiv}
    lines = ["hard: %s, weak: %s, lo=%d hi=%d" % (yes(hard), yes(weak), lo, hi),
             "  m | alpha^k onto | H_m = H | H_{n-m-1} = 0"]
    for row in equiv:
        lines.append("%3d | %-12s | %-7s | %s" % (row["m"], yes(row["onto"]), yes(row["full"]), yes(row["dual_zero"])))
    return Report(doc, "\n".join(lines), OK if hard else NEGATIVE)


def cmd_ce(args) -> Report:
    kind, doc = _load(args.file)
    if kind != "liealg":
        raise MalformedInput("%s is a %s file, expected a Lie algebra" % (args.file, kind))
    ring = chevalley_eilenberg(lie_from_json(doc))
    out = coh.ring_to_json(ring)
    return Report(out, dumps(out))


def cmd_blowup(args) -> Report:
    ring, alpha = _ring_and_class(args.file, args.cls)
    if args.codim % 2:
        raise MalformedInput("--codim must be even (real codimension 2k)")
    s = coh.SymplecticData.of(ring, alpha)
    try:
        v = blowup_bmodule(s, args.ambient, args.codim // 2)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    rep = filtration_report(_checked_filtration(v))
    n = args.ambient
    hard = rep["lo"] == rep["hi"] == n
    weak = rep["hi"] <= n + 1
    doc = {"ambient": n, "codim": args.codim, "manifold_dim": ring.dim,
           "module": bmodule_to_json(v), "total_dim": v.total_dim, "filtration": rep,
           "hard_profile": hard, "weak_profile": weak}
    text = "\n".join(["blowup of CP^%d along a %d-manifold (codimension %d): total_dim=%d"
                      % (n, ring.dim, args.codim, v.total_dim),
                      "hard profile: %s, weak profile: %s" % (yes(hard), yes(weak)),
                      render_filtration(rep)])
    return Report(doc, text)


def cmd_certify(args) -> Report:
    ring, alpha = _ring_and_class(args.file, args.cls)
    try:
        betti = tuple(int(x) for x in args.base_betti.split(","))
        spec = FibrationSpec(coh.SymplecticData.of(ring, alpha), betti)
    except ValueError as exc:
        raise MalformedInput("bad --base-betti: %s" % exc) from exc
    cert = certify_csplitting(spec)
    doc = cert.to_json()
    return Report(doc, render_certificate(doc), OK if cert.certified else NEGATIVE)


def cmd_decompose(args) -> Report:
    kind, doc = _load(args.file)
    if kind != "gmodule":
        raise MalformedInput("%s is a %s file, expected an sl(2)-module (with f maps)" % (args.file, kind))
    mult = decompose_g(gmodule_from_json(doc))
    out = {"multiplicities": {str(d): c for d, c in sorted(mult.items())}}
    text = " + ".join("L(%d)x%d" % (d, c) for d, c in sorted(mult.items())) or "zero module"
    return Report(out, text)


def cmd_catalog(args) -> Report:
    if args.action == "list":
        names = catalog_names()
        return Report({"entries": names}, "\n".join(names))
    if not args.name:
        raise MalformedInput("catalog get needs a NAME")
    try:
        entry = catalog(args.name)
    except UnknownEntry as exc:
        raise MalformedInput(exc.args[0]) from exc
    if isinstance(entry, NilpotentLieAlgebra):
        doc = lie_to_json(entry)
    else:
        doc = coh.ring_to_json(entry)
    return Report(doc, dumps(doc))


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lefrank", description="Canonical filtrations, Lefschetz "
                                "properties and c-splitting certificates over the rationals.")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    # accepted after the verb too; SUPPRESS keeps the subparser from resetting it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a ring, module or Lie algebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("filtration", parents=[common], help="canonical filtration of a module or ring")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", metavar="NAME")
    s.set_defaults(func=cmd_filtration)

    s = sub.add_parser("lefschetz", parents=[common], help="hard/weak Lefschetz verdicts")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", metavar="NAME", required=True)
    s.set_defaults(func=cmd_lefschetz)

    s = sub.add_parser("ce", parents=[common], help="Chevalley-Eilenberg cohomology ring of a Lie algebra")
    s.add_argument("file")
    s.set_defaults(func=cmd_ce)

    s = sub.add_parser("blowup", parents=[common], help="b-module of CP^N blown up along M")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", metavar="NAME", required=True)
    s.add_argument("--ambient", type=int, required=True, metavar="N")
    s.add_argument("--codim", type=int, required=True, metavar="K2")
    s.set_defaults(func=cmd_blowup)

    s = sub.add_parser("certify", parents=[common], help="c-splitting certificate")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", metavar="NAME", required=True)
    s.add_argument("--base-betti", required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("decompose", parents=[common], help="irreducible content of an sl(2)-module")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("catalog", parents=[common], help="built-in fixtures")
    s.add_argument("action", choices=["list", "get"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        rep = args.func(args)
    except (MalformedInput, InvalidModule, coh.InvalidRing, InvalidLieAlgebra) as exc:
        print("error: %s" % exc, file=stderr)
        return MALFORMED
    except (FiltrationError, AssertionError) as exc:
        print("internal error: %s" % exc, file=stderr)
        return INTERNAL
    stdout.write((dumps(rep.doc) if args.json else rep.text) + "\n")
    return rep.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
