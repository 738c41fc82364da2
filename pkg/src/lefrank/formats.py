"""JSON wire formats for b-modules and sl(2)-modules; file-kind detection."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .linalg import MatrixQ
from .modules import BModule, GModule


class MalformedInput(ValueError):
    pass


def _maps(doc: Mapping, dims: Mapping[int, int], step: int) -> dict[int, MatrixQ]:
    out = {}
    for k, rows in doc.items():
        k = int(k)
        out[k] = MatrixQ.from_rows(rows, cols=dims.get(k, 0))
    return out


def bmodule_from_json(doc: Mapping) -> BModule:
    try:
        dims = {int(k): int(n) for k, n in doc["dims"].items()}
        if any(n < 0 for n in dims.values()):
            raise MalformedInput("negative dimension")
        v = BModule.build(dims, _maps(doc.get("e", {}), dims, 2))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput("malformed module document: %s" % exc) from exc
    return v


def gmodule_from_json(doc: Mapping) -> GModule:
    base = bmodule_from_json(doc)
    try:
        f = _maps(doc.get("f", {}), base.dims, -2)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput("malformed f maps: %s" % exc) from exc
    return GModule(base, f)


def bmodule_to_json(v: BModule) -> dict:
    return {
        "dims": {str(k): n for k, n in sorted(v.dims.items())},
        "e": {str(k): m.to_json() for k, m in sorted(v.e_maps.items()) if m.rows and m.cols},
    }


def gmodule_to_json(v: GModule) -> dict:
    doc = bmodule_to_json(v.base)
    doc["f"] = {str(k): m.to_json() for k, m in sorted(v.f_maps.items()) if m.rows and m.cols}
    return doc


def detect_kind(doc: Mapping) -> str:
    if not isinstance(doc, Mapping):
        raise MalformedInput("top-level JSON value must be an object")
    if "brackets" in doc:
        return "liealg"
    if "basis" in doc or "products" in doc:
        return "ring"
    if "dims" in doc:
        return "gmodule" if "f" in doc else "bmodule"
    raise MalformedInput("cannot tell what kind of file this is (keys: %s)" % ", ".join(sorted(doc)))


def load_json(path: str | Path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput("cannot read %s: %s" % (path, exc.strerror)) from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput("%s is not valid JSON: %s" % (path, exc)) from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
