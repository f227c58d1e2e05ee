"""Canonical JSON serialisation of covector systems.

The document is ``{"name": str, "dim": int, "params": object, "covectors":
[[float, ...], ...]}``.  Serialisation uses sorted keys, two-space indent
and shortest round-tripping float representation, so export -> import ->
export is byte identical.
"""

from __future__ import annotations

import json

import numpy as np

from .core import CovectorSystem

__all__ = ["dumps", "loads", "load", "save", "to_dict", "from_dict"]


def to_dict(system: CovectorSystem) -> dict:
    params = {}
    for key, value in system.params.items():
        if isinstance(value, (tuple, list, np.ndarray)):
            params[key] = [float(x) for x in value]
        else:
            params[key] = float(value)
    return {
        "name": system.name,
        "dim": int(system.dim),
        "params": params,
        "covectors": [[float(x) for x in row] for row in system.covectors],
    }


def from_dict(doc: dict) -> CovectorSystem:
    for key in ("name", "dim", "params", "covectors"):
        if key not in doc:
            raise ValueError(f"system file missing key '{key}'")
    params = {
        k: tuple(v) if isinstance(v, list) else v for k, v in doc["params"].items()
    }
    return CovectorSystem(
        name=str(doc["name"]),
        dim=int(doc["dim"]),
        covectors=np.array(doc["covectors"], dtype=float),
        params=params,
    )


def dumps(system: CovectorSystem) -> str:
    return json.dumps(to_dict(system), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> CovectorSystem:
    return from_dict(json.loads(text))


def save(system: CovectorSystem, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(system))


def load(path) -> CovectorSystem:
    with open(path) as fh:
        return loads(fh.read())
