"""Zip data of reductive groups over F_p: strata, weight cones, Hasse invariants.

Datum arguments accept a path, a JSON string, or a dict.  Results are plain
Python objects decoded from the library's JSON output.
"""

import json
import os
from importlib import resources

from . import _core
from ._core import DefectError, ResourceError

__all__ = [
    "DefectError",
    "ResourceError",
    "bundled",
    "cone",
    "czip_scan",
    "describe",
    "hasse_check",
    "strata",
    "u3_decompose",
    "u3_dim",
    "verify_equivariance",
]


def bundled(name):
    """Path of a bundled datum file, e.g. bundled("u3_inert")."""
    if not name.endswith(".json"):
        name += ".json"
    return str(resources.files(__name__).joinpath("data", name))


def _text(datum):
    if isinstance(datum, dict):
        return json.dumps(datum)
    if isinstance(datum, os.PathLike) or (isinstance(datum, str) and not datum.lstrip().startswith("{")):
        with open(datum, encoding="utf-8") as f:
            return f.read()
    return datum


def describe(datum):
    return json.loads(_core.describe(_text(datum)))


def strata(datum, format="json"):
    out = _core.strata(_text(datum), format)
    return out if format == "dot" else json.loads(out)


def cone(datum, which="eff", hilbert=False):
    """which: eff, gs, pha or dominant."""
    return json.loads(_core.cone(_text(datum), which, hilbert))


def hasse_check(datum, weight, oracle="auto"):
    return json.loads(_core.hasse_check(_text(datum), list(weight), oracle))


def u3_dim(weight, p):
    return json.loads(_core.u3_dim(list(weight), p))


def u3_decompose(weight, p, i=None):
    return json.loads(_core.u3_decompose(list(weight), p, i))


def czip_scan(p, box):
    return json.loads(_core.czip_scan(p, box))


def verify_equivariance(section, case="inert", p=2, degree=6, trials=100, seed=42):
    return json.loads(_core.verify_equivariance(case, p, degree, trials, seed, section))
