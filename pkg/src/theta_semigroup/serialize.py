"""JSON encodings for parameters, factorizations, reports and Heyde configs.

Floats are written with ``repr`` (shortest round-trip decimal), so output is
byte-stable for identical inputs.  Non-finite values become ``null``.
"""
from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .arithmetic import Factorization, GaussianFactor
from .core import BoundaryMultiple, ThetaParams
from .errors import DomainError
from .heyde import HeydeConfig
from .measure import Z2Distribution

__all__ = [
    "dumps",
    "factorization_from_dict",
    "factorization_to_dict",
    "heyde_config_from_dict",
    "params_from_dict",
    "params_to_dict",
]


def params_to_dict(p: ThetaParams) -> dict:
    if isinstance(p.kappa, BoundaryMultiple):
        kappa = {"boundary_ratio": p.kappa.ratio, "sign": p.kappa.sign}
    else:
        kappa = {"explicit": p.kappa}
    return {
        "sigma": p.sigma,
        "sigma_prime": p.sigma_prime,
        "beta": p.beta,
        "beta_prime": p.beta_prime,
        "kappa": kappa,
    }


def _number(d: dict, key: str) -> float:
    try:
        value = d[key]
    except KeyError:
        raise DomainError(f"missing field {key!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"field {key!r} must be a number")
    return float(value)


def params_from_dict(d: dict) -> ThetaParams:
    kappa_spec = d.get("kappa")
    if isinstance(kappa_spec, dict) and "explicit" in kappa_spec:
        kappa: Any = _number(kappa_spec, "explicit")
    elif isinstance(kappa_spec, dict) and "boundary_ratio" in kappa_spec:
        kappa = BoundaryMultiple(_number(kappa_spec, "boundary_ratio"), int(kappa_spec.get("sign", 1)))
    else:
        raise DomainError("kappa must be {'explicit': x} or {'boundary_ratio': r, 'sign': +-1}")
    return ThetaParams(
        _number(d, "sigma"), _number(d, "sigma_prime"), _number(d, "beta"), _number(d, "beta_prime"), kappa
    )


def factorization_to_dict(f: Factorization) -> dict:
    return {
        "factors": [params_to_dict(p) for p in f.factors],
        "gaussian": None if f.gaussian is None else {"a": f.gaussian.a, "shift": f.gaussian.shift},
        "z2": None if f.z2 is None else {"mass0": f.z2.mass0, "mass1": f.z2.mass1},
    }


def factorization_from_dict(d: dict) -> Factorization:
    g, z = d.get("gaussian"), d.get("z2")
    return Factorization(
        factors=[params_from_dict(x) for x in d.get("factors", [])],
        gaussian=None if g is None else GaussianFactor(_number(g, "a"), _number(g, "shift")),
        z2=None if z is None else Z2Distribution(_number(z, "mass0"), _number(z, "mass1")),
    )


def heyde_config_from_dict(d: dict) -> HeydeConfig:
    return HeydeConfig(
        tuple(params_from_dict(x) for x in d["dists"]), tuple(d["a"]), tuple(d["b"])
    )


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return value if math.isfinite(value) else None
    return obj


def dumps(obj) -> str:
    return json.dumps(_plain(obj), allow_nan=False)
