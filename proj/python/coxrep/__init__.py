"""Coxeter-torus Deligne-Lusztig characters of GL2/SL2 over finite local rings."""

import json

from . import _core
from ._core import SizeBoundExceeded, conjecture_sign, coxeter_data, group_key, group_order

__all__ = [
    "SizeBoundExceeded",
    "character_table",
    "classify_torus",
    "conjecture_sign",
    "coxeter_data",
    "group_key",
    "group_order",
    "predict",
    "sweep_conjecture",
    "verify",
]


def classify_torus(p, k, r, mode="mixed", psi=1):
    """Classification record for every character of the Coxeter torus."""
    return [json.loads(line) for line in _core.classify_torus_json(p, k, r, mode, psi)]


def predict(p, k, r, mode="mixed", flavor="gl"):
    """Predicted dimension, sign and constituents, one entry per torus character."""
    return [json.loads(line) for line in _core.predict_json(p, k, r, mode, flavor)]


def character_table(p, k, r, mode="mixed", flavor="gl", bound=None):
    args = (p, k, r, mode, flavor) if bound is None else (p, k, r, mode, flavor, bound)
    return json.loads(_core.table_json(*args))


def sweep_conjecture(types=("A",), n_min=2, n_max=5, qs=(2, 3, 4, 5, 7, 8, 9), coxeter_only=False):
    return json.loads(_core.sweep_json(list(types), n_min, n_max, list(qs), coxeter_only))


def verify(cases, adjunction=True, classical_sweep=False, cache_dir="", table_bound=None):
    """Run the verifier on (p, k, r, mode, flavor) tuples; returns the JSON report as a dict."""
    kwargs = dict(adjunction=adjunction, classical_sweep=classical_sweep, cache_dir=cache_dir)
    if table_bound is not None:
        kwargs["table_bound"] = table_bound
    return json.loads(_core.verify_json([tuple(c) for c in cases], **kwargs))
