"""JSON wire formats for every value the library exchanges.

Encodings (stable, documented, round-trippable):

* complex scalar      ``[re, im]``
* vector              ``[[re, im], ...]``
* matrix              ``{"rows": r, "cols": c, "entries": [[re, im], ...]}``  (row-major)
* Ray                 ``{"dim": d, "rep": <vector>}``
* Subspace            ``{"dim": d, "basis": [<vector>, ...]}``
* LinearMap           ``{"dim_in": a, "dim_out": b, "matrix": <matrix>}``
* interference witness ``{"x", "alpha_basis", "beta_basis", "p_values", "margin"}``
* LawReport           ``{"law_id", "pass", "trials_run", "trials_skipped",
                        "worst_residual", "seed", "dim_range", "counterexample"}``

Decoding re-canonicalizes rays and re-orthonormalizes subspace bases,
so a round trip restores the library invariants.  Serialized law
reports intentionally omit wall-clock timing: reports of two runs with
identical configuration must be byte-identical.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance
from .rays import Ray, Subspace, ray_from
from .morphisms import LinearMap, RegularMap
from .superposition import SuperpositionSpec


def complex_to_json(c) -> list[float]:
    c = complex(c)
    return [c.real, c.imag]


def complex_from_json(data) -> complex:
    re, im = float(data[0]), float(data[1])
    return complex(re, im)


def vec_to_json(v) -> list[list[float]]:
    v = np.asarray(v, dtype=np.complex128)
    return [[float(c.real), float(c.imag)] for c in v]


def vec_from_json(data) -> np.ndarray:
    return np.array([complex(float(p[0]), float(p[1])) for p in data], dtype=np.complex128)


def mat_to_json(m) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    rows, cols = m.shape
    return {
        "rows": int(rows),
        "cols": int(cols),
        "entries": [[float(c.real), float(c.imag)] for c in m.reshape(-1)],
    }


def mat_from_json(data) -> np.ndarray:
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = data["entries"]
    if len(entries) != rows * cols:
        raise ValueError(f"matrix entries count {len(entries)} != rows*cols {rows * cols}")
    flat = np.array([complex(float(p[0]), float(p[1])) for p in entries], dtype=np.complex128)
    return flat.reshape(rows, cols)


def ray_to_json(x: Ray) -> dict:
    return {"dim": x.dim, "rep": vec_to_json(x.rep)}


def ray_from_json(data, tol: Tolerance = DEFAULT_TOL) -> Ray:
    rep = vec_from_json(data["rep"])
    if len(rep) != int(data["dim"]):
        raise ValueError("ray dim does not match representative length")
    return ray_from(rep, tol)


def subspace_to_json(a: Subspace) -> dict:
    return {"dim": a.dim, "basis": [vec_to_json(row) for row in a.basis]}


def subspace_from_json(data, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    dim = int(data["dim"])
    vectors = [vec_from_json(row) for row in data["basis"]]
    for v in vectors:
        if len(v) != dim:
            raise ValueError("subspace dim does not match basis vector length")
    return Subspace.from_vectors(vectors, dim=dim, tol=tol)


def linear_map_to_json(f) -> dict:
    m = f.underlying.matrix if isinstance(f, RegularMap) else f.matrix
    return {"dim_in": int(m.shape[1]), "dim_out": int(m.shape[0]), "matrix": mat_to_json(m)}


def regular_map_from_json(data) -> RegularMap:
    m = mat_from_json(data["matrix"])
    if m.shape != (int(data["dim_out"]), int(data["dim_in"])):
        raise ValueError("matrix shape does not match declared dimensions")
    return RegularMap(underlying=LinearMap(matrix=m))


def superposition_spec_from_json(data, tol: Tolerance = DEFAULT_TOL) -> SuperpositionSpec:
    return SuperpositionSpec(
        y=ray_from_json(data["y"], tol),
        z=ray_from_json(data["z"], tol),
        r=float(data["r"]),
    )


def witness_to_json(w) -> dict:
    """Interference-search witness wire format."""
    return {
        "x": ray_to_json(w.x),
        "alpha_basis": subspace_to_json(w.alpha),
        "beta_basis": subspace_to_json(w.beta),
        "p_values": {
            "p_x_beta": w.p_x_beta,
            "p_beta_x_alpha": w.p_bx_alpha,
            "p_alpha_beta_x_beta": w.p_abx_beta,
        },
        "margin": w.nonsquared_excess,
        "squared_margin": w.squared_margin,
        "trial_index": w.trial_index,
    }


def law_report_to_json(report) -> dict:
    """LawReport wire format (no timing: must be run-invariant)."""
    return {
        "law_id": report.law_id,
        "pass": report.passed,
        "negative_control": report.negative_control,
        "trials_run": report.trials_run,
        "trials_skipped": report.trials_skipped,
        "worst_residual": report.worst_residual,
        "tolerance": report.tolerance,
        "seed": report.seed,
        "dim_range": list(report.dim_range),
        "counterexample": report.counterexample,
    }


def dumps_reports(reports) -> str:
    """Canonical JSON text for a list of law reports (deterministic)."""
    return json.dumps([law_report_to_json(r) for r in reports], indent=2) + "\n"


def to_jsonable(value):
    """Best-effort conversion of library values to JSON-ready data.

    Used when capturing counterexample payloads: dispatches on Ray,
    Subspace, maps, numpy scalars/arrays, and containers.
    """
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return complex_to_json(value)
    if isinstance(value, Ray):
        return ray_to_json(value)
    if isinstance(value, Subspace):
        return subspace_to_json(value)
    if isinstance(value, (RegularMap, LinearMap)):
        return linear_map_to_json(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.complexfloating):
        return complex_to_json(complex(value))
    if isinstance(value, np.ndarray):
        if value.ndim == 1:
            return vec_to_json(value)
        if value.ndim == 2:
            return mat_to_json(value)
        raise TypeError(f"cannot serialize array of ndim {value.ndim}")
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")
