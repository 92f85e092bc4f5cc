"""Exact hyperbolic and bicomplex functional analysis.

Values use the JSON encoding of the command-line tool as plain Python data:
a rational is an int, a Fraction or a "p/q" string; a complex number is
{"re", "im"}; a hyperbolic number is {"e1", "e2"}; a bicomplex number is
{"z1", "z2"} in idempotent coordinates. Rationals in results are returned
as Fraction.
"""

import json
import re
from fractions import Fraction

from . import _core

__all__ = [
    "BcfaError",
    "bc_add",
    "bc_conjugate",
    "bc_from_w",
    "bc_inverse",
    "bc_mul",
    "hyperbolic_part",
    "inverse_map",
    "map_from_graph",
    "minkowski_gauge",
    "modulus_k_squared",
    "omt_delta",
    "reconstruct",
    "separate",
    "ubp_bound",
    "verify",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class BcfaError(Exception):
    """A library error. `kind` names the condition; `record` is the full error record."""

    def __init__(self, record):
        super().__init__(record.get("message", ""))
        self.record = record
        self.kind = record.get("error", "")
        self.component = record.get("component")
        self.witness = record.get("witness")


_error_classes = {}


def _error_class(kind):
    if kind not in _error_classes:
        _error_classes[kind] = type(kind, (BcfaError,), {})
    return _error_classes[kind]


def __getattr__(name):
    # Error classes by kind, e.g. bcfa.NotDisjointError.
    if name.endswith("Error"):
        return _error_class(name)
    raise AttributeError(name)


def _encode(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _decode(value):
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        return Fraction(value)
    return value


def _call(fn, *args, decode=True):
    try:
        out = json.loads(fn(json.dumps(list(args), default=_encode)))
    except _core.Error as e:
        record = json.loads(str(e))
        raise _error_class(record["error"])(_decode(record)) from None
    return _decode(out) if decode else out


def bc_mul(z, w):
    return _call(_core.bc_mul, z, w)


def bc_add(z, w):
    return _call(_core.bc_add, z, w)


def bc_conjugate(z, kind):
    """kind 1, 2 or 3 for the three bicomplex conjugations."""
    return _call(_core.bc_conjugate, z, kind)


def bc_inverse(z):
    return _call(_core.bc_inverse, z)


def bc_from_w(w1, w2):
    """Z = w1 + j w2 with w1, w2 in C(i)."""
    return _call(_core.bc_from_w, w1, w2)


def modulus_k_squared(z):
    """|Z|_k^2 = Z Z^dagger3 as a hyperbolic number."""
    return _call(_core.modulus_k_squared, z)


def hyperbolic_part(h, form=None):
    """D-valued part of a BC-linear functional, optionally via one of the six forms."""
    return _call(_core.hyperbolic_part, h, form)


def reconstruct(f, axis="i"):
    """BC-linear functional whose hyperbolic part is f."""
    return _call(_core.reconstruct, f, axis)


def minkowski_gauge(set_, x):
    return _call(_core.minkowski_gauge, set_, x)


def separate(a, b):
    """Separation certificate {f, gamma, ...} with f(a) <' gamma <=' f(b)."""
    return _call(_core.separate, a, b)


def omt_delta(t):
    return _call(_core.omt_delta, t, decode=False)


def inverse_map(t):
    out = _call(_core.inverse_map, t, decode=False)
    return {"inverse": _decode(out["inverse"]), "bound": out["bound"]}


def map_from_graph(basis, n):
    return _call(_core.map_from_graph, basis, n)


def ubp_bound(family, eps):
    eps = {k: float(Fraction(v)) for k, v in eps.items()}
    return _call(_core.ubp_bound, family, eps, decode=False)


def verify(suite="all", seed=0, cases=1000, backend="exact"):
    """Run a seeded property suite and return its report."""
    return _call(_core.verify, suite, seed, cases, backend, decode=False)
