"""Fusion subcategories of equivariantized pointed fusion categories.

Data sources are preset strings such as "kp:2:1/2" or input documents, given as
dicts or JSON text. Results are decoded JSON.
"""

import json

from . import _core
from ._core import DEFAULT_SEED, Error, presets, run

__all__ = [
    "DEFAULT_SEED",
    "Error",
    "compare",
    "hopf",
    "kp_classify",
    "kp_compare",
    "lattice",
    "oracle",
    "presets",
    "run",
    "validate",
]


def _source(data):
    if isinstance(data, str):
        return data
    return json.dumps(data)


def validate(data):
    return json.loads(_core.validate(_source(data)))


def lattice(data):
    """Triples (L, H, eta) and their order relation."""
    return json.loads(_core.lattice(_source(data)))


def hopf(data):
    return json.loads(_core.hopf(_source(data)))


def oracle(data, seed=DEFAULT_SEED):
    """Fusion ring of the bismash algebra and its based subrings."""
    return json.loads(_core.oracle(_source(data), seed))


def compare(data, seed=DEFAULT_SEED):
    return json.loads(_core.compare(_source(data), seed))


def kp_classify(n, q, mode="main-theorem", zeta_reading="exact-order"):
    return json.loads(_core.kp_classify(n, str(q), mode, zeta_reading))


def kp_compare(n, q, zeta_reading="exact-order", seed=DEFAULT_SEED):
    return json.loads(_core.kp_compare(n, str(q), zeta_reading, seed))
