"""Verification harness: named laws over seeded random instances.

Each registered law pairs an instance generator flavor with a residual
checker.  Running a law draws per-(law, dim, trial) substreams (see
:mod:`raygeo.sampling`), evaluates the checker on every cell, and
produces a :class:`LawReport` that is a pure function of the law id and
the :class:`GeneratorSpec` — same seed, same bytes.

Checkers return the trial residual, or ``None`` to *skip* a trial whose
instance is too degenerate to measure (near-orthogonal where strict
non-orthogonality is required, vanishing closed-form denominators).
A law passes when its worst residual is within tolerance, nothing
raised unexpectedly, and the skip rate stays below the cap.

Negative-control laws invert the game: they assert that an identity
*fails* on generic instances exactly as predicted, and they pass when
it does.
"""

from __future__ import annotations

import fnmatch
import time
from dataclasses import dataclass
from typing import Callable

from .errors import UnknownLawError
from .linalg import DEFAULT_TOL, Tolerance
from .sampling import substream

FLAVORS = (
    "generic-complex",
    "real-only",
    "coplanar",
    "commuting-pair",
    "nested-pair",
    "classical-orthogonal",
    "isometry",
    "non-isometry",
)

#: Ceiling on the fraction of skipped trials before a law fails outright.
MAX_SKIP_RATE = 0.05


@dataclass(frozen=True)
class GeneratorSpec:
    """Sampling configuration for a run.

    Attributes
    ----------
    dims : tuple of int
        Ambient dimensions to sweep (each in [2, 32]).
    trials_per_dim : int
        Trials per law per dimension (laws may pin their own count).
    seed : int
        64-bit base seed for the substream scheme.
    flavor : str or None
        Optional default flavor; laws declare their own and that
        declaration wins (flavor is part of a law's statement).
    """

    dims: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)
    trials_per_dim: int = 1000
    seed: int = 42
    flavor: str | None = None

    def __post_init__(self):
        if not self.dims:
            raise ValueError("dims must be non-empty")
        if any(d < 2 or d > 32 for d in self.dims):
            raise ValueError("dims must lie within [2, 32]")
        if self.trials_per_dim < 1:
            raise ValueError("trials_per_dim must be at least 1")
        if self.flavor is not None and self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")


@dataclass
class LawReport:
    """Outcome of checking one law over its random instances."""

    law_id: str
    passed: bool
    negative_control: bool
    trials_run: int
    trials_skipped: int
    worst_residual: float
    tolerance: float
    seed: int
    dim_range: tuple[int, ...]
    counterexample: dict | None
    elapsed_ms: float


@dataclass(frozen=True)
class Law:
    """A named law: generator flavor + checker + pass criteria.

    ``checker(rng, dim, tol, record)`` returns the trial residual or
    None to skip; when ``record`` is a dict the checker fills it with a
    serializable description of the instance (used to attach a
    counterexample after a failing trial is replayed).

    ``aggregate``, when set, converts the full residual list into the
    (passed, reported_worst) verdict; used by negative controls that
    assert a failure *fraction* rather than a worst case.
    """

    id: str
    description: str
    flavor: str
    checker: Callable
    tolerance: float = 1e-10
    dims: tuple[int, ...] | None = None
    trials_per_dim: int | None = None
    negative_control: bool = False
    aggregate: Callable | None = None
    max_skip_rate: float = MAX_SKIP_RATE


_REGISTRY: dict[str, Law] = {}
_ORDER: list[str] = []


def register(law: Law) -> Law:
    if law.id in _REGISTRY:
        raise ValueError(f"duplicate law id {law.id!r}")
    if law.flavor not in FLAVORS:
        raise ValueError(f"law {law.id!r} declares unknown flavor {law.flavor!r}")
    _REGISTRY[law.id] = law
    _ORDER.append(law.id)
    return law


def registry() -> dict[str, Law]:
    """The full law registry, keyed by id (registration order kept)."""
    from . import laws  # noqa: F401  (registers on first import)

    return dict(_REGISTRY)


def law_ids() -> list[str]:
    registry()
    return list(_ORDER)


def run_law(law_id: str, gen: GeneratorSpec, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """Check one law against seeded random instances.

    Deterministic given (law_id, gen): identical inputs produce an
    identical report (timing excluded).

    Raises
    ------
    UnknownLawError
        If the id is not registered.
    """
    reg = registry()
    if law_id not in reg:
        raise UnknownLawError(f"no law registered under id {law_id!r}")
    law = reg[law_id]
    dims = law.dims if law.dims is not None else gen.dims
    trials = law.trials_per_dim if law.trials_per_dim is not None else gen.trials_per_dim

    started = time.perf_counter()
    residuals: list[float] = []
    skipped = 0
    failure: dict | None = None
    worst = 0.0

    for dim in dims:
        for trial in range(trials):
            rng = substream(gen.seed, law.id, dim, trial)
            try:
                residual = law.checker(rng, dim, tol, None)
            except Exception as exc:  # a checker must never raise on a legal instance
                failure = {
                    "dim": dim,
                    "trial": trial,
                    "error": f"{type(exc).__name__}: {exc}",
                }
                residual = float("inf")
            if residual is None:
                skipped += 1
                continue
            residual = float(residual)
            residuals.append(residual)
            if law.aggregate is None and residual > worst:
                worst = residual
                if residual > law.tolerance and failure is None:
                    record: dict = {}
                    replay = substream(gen.seed, law.id, dim, trial)
                    try:
                        law.checker(replay, dim, tol, record)
                    except Exception:
                        pass
                    failure = {"dim": dim, "trial": trial, "residual": residual, **record}

    total_cells = len(dims) * trials
    run = len(residuals)
    skip_rate = skipped / total_cells if total_cells else 0.0

    if law.aggregate is not None:
        passed, worst = law.aggregate(residuals)
        if not passed and failure is None:
            failure = {"note": "aggregate criterion not met", "metric": worst}
    else:
        passed = worst <= law.tolerance

    if failure is not None and "error" in failure:
        passed = False
    if skip_rate > law.max_skip_rate:
        passed = False
        failure = failure or {
            "note": "skip rate above cap",
            "skip_rate": skip_rate,
        }

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return LawReport(
        law_id=law.id,
        passed=bool(passed),
        negative_control=law.negative_control,
        trials_run=run,
        trials_skipped=skipped,
        worst_residual=float(worst),
        tolerance=law.tolerance,
        seed=gen.seed,
        dim_range=tuple(dims),
        counterexample=failure if not passed else None,
        elapsed_ms=elapsed_ms,
    )


def run_all(
    gen: GeneratorSpec,
    pattern: str | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> list[LawReport]:
    """Run every registered law (optionally filtered by a glob on ids),
    in registration order.  Aggregate success means every report passed
    — negative controls included, which pass when their target identity
    fails as predicted."""
    registry()
    ids = [i for i in _ORDER if pattern is None or fnmatch.fnmatch(i, pattern)]
    return [run_law(law_id, gen, tol) for law_id in ids]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def sample_instance(gen: GeneratorSpec, kind: str, dim: int | None = None, trial: int = 0):
    """Draw one instance of the given flavor (documented surface of the
    sampling policy; laws compose the same primitives internally).

    Returns a dict of library values whose keys depend on the flavor.
    """
    from . import sampling

    if kind not in FLAVORS:
        raise ValueError(f"unknown flavor {kind!r}")
    d = int(dim) if dim is not None else gen.dims[0]
    rng = substream(gen.seed, f"sample.{kind}", d, trial)
    if kind == "generic-complex":
        pair = sampling.nonorthogonal_pair(rng, d)
        x, y = pair if pair else (sampling.random_ray(rng, d), sampling.random_ray(rng, d))
        return {"x": x, "y": y, "subspace": sampling.random_subspace(rng, d)}
    if kind == "real-only":
        pair = sampling.nonorthogonal_pair(rng, d, real=True)
        x, y = pair if pair else (
            sampling.random_ray(rng, d, real=True),
            sampling.random_ray(rng, d, real=True),
        )
        return {"x": x, "y": y, "subspace": sampling.random_subspace(rng, d, real=True)}
    if kind == "coplanar":
        triple = sampling.coplanar_triple(rng, d)
        if triple is None:
            raise ValueError("rejection limit reached while sampling a coplanar triple")
        x, y, z = triple
        return {"x": x, "y": y, "z": z}
    if kind == "commuting-pair":
        a, b = sampling.commuting_pair(rng, d)
        return {"alpha": a, "beta": b}
    if kind == "nested-pair":
        a, b = sampling.nested_pair(rng, d)
        return {"alpha": a, "beta": b}
    if kind == "classical-orthogonal":
        count = min(3, d)
        rays = sampling.classical_rays(rng, d, count)
        return {"rays": rays}
    if kind == "isometry":
        return {"map": sampling.isometry_map(rng, d)}
    return {"map": sampling.non_isometry_map(rng, d)}
