"""Ray maps induced by injective linear maps, and their characterization.

An injective linear map between ambient spaces induces a well-defined
map on rays (scaling the matrix by any nonzero complex number induces
the same ray map).  The central fact verified by the harness: such a
map preserves superpositions exactly when it is an isometry up to a
positive scale — in which case it also preserves similarities and
triple phases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NotIsometryError
from .linalg import DEFAULT_TOL, Tolerance, circular_distance
from .rays import Ray, ray_from
from .geometry import a_sim, p_sim, theta
from .superposition import SuperpositionSpec, superpose


@dataclass(frozen=True)
class LinearMap:
    """An injective linear map C^{dim_in} → C^{dim_out} as a matrix.

    Raises
    ------
    ValueError
        If the matrix is not numerically injective (smallest singular
        value at or below ``eps_abs``) or contains non-finite entries.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128, copy=True)
        if m.ndim != 2 or m.size == 0:
            raise ValueError("expected a non-empty 2-D matrix")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        smin = float(np.linalg.svd(m, compute_uv=False)[-1])
        if m.shape[0] < m.shape[1] or smin <= DEFAULT_TOL.eps_abs:
            raise ValueError(f"matrix is not injective (smallest singular value {smin:.3e})")
        object.__setattr__(self, "matrix", m)
        m.flags.writeable = False

    @property
    def dim_in(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def dim_out(self) -> int:
        return int(self.matrix.shape[0])


@dataclass(frozen=True)
class RegularMap:
    """The ray-level map induced by an injective linear map."""

    underlying: LinearMap

    @classmethod
    def from_matrix(cls, matrix) -> "RegularMap":
        return cls(underlying=LinearMap(matrix=np.asarray(matrix, dtype=np.complex128)))

    @property
    def dim_in(self) -> int:
        return self.underlying.dim_in

    @property
    def dim_out(self) -> int:
        return self.underlying.dim_out


def apply_ray(f: RegularMap, x: Ray, tol: Tolerance = DEFAULT_TOL) -> Ray:
    """Image of a ray under the induced map."""
    if x.dim != f.dim_in:
        raise DimensionMismatchError(f"ray dim {x.dim} vs map input dim {f.dim_in}")
    return ray_from(f.underlying.matrix @ x.rep, tol)


def isometry_scale(
    f: RegularMap,
    probes: int = 8,
    tol: Tolerance = DEFAULT_TOL,
    rng: np.random.Generator | None = None,
) -> float | None:
    """The uniform scale c with ‖m·u‖ = c‖u‖ for all u, or None.

    Decided exactly through the Gram matrix m†m = c²·I on the standard
    basis; ``probes`` random vectors cross-check the verdict.
    """
    m = f.underlying.matrix
    gram = m.conj().T @ m
    c2 = float(np.real(np.trace(gram))) / f.dim_in
    if c2 <= 0.0:
        return None
    dev = float(np.max(np.abs(gram - c2 * np.eye(f.dim_in))))
    if dev > tol.eps_rel * c2:
        return None
    c = float(np.sqrt(c2))
    if probes > 0:
        if rng is None:
            rng = np.random.Generator(np.random.Philox(key=[0x52415947454F, probes]))
        for _ in range(probes):
            u = rng.standard_normal(f.dim_in) + 1j * rng.standard_normal(f.dim_in)
            nu = float(np.linalg.norm(u))
            if abs(float(np.linalg.norm(m @ u)) - c * nu) > tol.eps_rel * c * nu:
                return None
    return c


@dataclass(frozen=True)
class PreservationReport:
    """Sampled verdict on superposition preservation.

    ``witness`` is a concrete failing (y, z, r) (components and the
    weight) when the verdict is negative, else None.
    """

    preserves: bool
    worst_residual: float
    trials_run: int
    seed: int
    witness: tuple[Ray, Ray, float] | None


def preserves_superpositions(
    f: RegularMap,
    trials: int = 500,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> PreservationReport:
    """Sampled check that the induced map carries superpositions to
    superpositions of the images.

    Draws non-orthogonal pairs (y, z) and weights r; requires the image
    pair to stay non-orthogonal and the image of the superposition to
    equal the superposition of the images.  Stops at the first failure
    (the witness is recorded).  A negative verdict is a proof; a
    positive verdict is sampled evidence — the exact criterion is the
    isometry check, and the harness validates their agreement.
    """
    rng = np.random.Generator(
        np.random.Philox(key=np.array([np.uint64(seed), np.uint64(0x5052455345525645)], dtype=np.uint64))
    )
    d = f.dim_in
    worst = 0.0
    run = 0
    for _ in range(int(trials)):
        y = ray_from(rng.standard_normal(d) + 1j * rng.standard_normal(d), tol)
        z = ray_from(rng.standard_normal(d) + 1j * rng.standard_normal(d), tol)
        if a_sim(y, z) <= 1e-6:
            continue
        r = float(rng.uniform(0.0, 1.0))
        run += 1
        fy = apply_ray(f, y, tol)
        fz = apply_ray(f, z, tol)
        if a_sim(fy, fz) <= tol.eps_abs:
            return PreservationReport(False, 1.0, run, seed, (y, z, r))
        mapped = apply_ray(f, superpose(SuperpositionSpec(y=y, z=z, r=r), tol), tol)
        direct = superpose(SuperpositionSpec(y=fy, z=fz, r=r), tol)
        residual = 1.0 - a_sim(mapped, direct)
        worst = max(worst, residual)
        if residual > tol.eps_abs:
            return PreservationReport(False, worst, run, seed, (y, z, r))
    return PreservationReport(True, worst, run, seed, None)


def check_char_morph(
    f: RegularMap, trials: int = 500, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Agreement of the exact isometry criterion with the sampled
    superposition-preservation verdict; true for every regular map."""
    is_iso = isometry_scale(f, tol=tol) is not None
    return is_iso == preserves_superpositions(f, trials, seed, tol).preserves


@dataclass(frozen=True)
class QuantityResiduals:
    """Worst deviations of similarity and triple phase under a map."""

    p_residual: float
    theta_residual: float
    trials_run: int


def check_preserves_p_theta(
    f: RegularMap, trials: int = 200, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> QuantityResiduals:
    """Worst |p(f x, f y) − p(x, y)| and phase deviation over samples.

    Both quantities are blind to a uniform scale, so any isometry up to
    scale preserves them exactly.

    Raises
    ------
    NotIsometryError
        If the map is not an isometry up to scale.
    """
    if isometry_scale(f, tol=tol) is None:
        raise NotIsometryError("p/theta preservation holds only for isometries")
    rng = np.random.Generator(
        np.random.Philox(key=np.array([np.uint64(seed), np.uint64(0x5051554E54)], dtype=np.uint64))
    )
    d = f.dim_in
    worst_p = 0.0
    worst_t = 0.0
    run = 0
    for _ in range(int(trials)):
        x = ray_from(rng.standard_normal(d) + 1j * rng.standard_normal(d), tol)
        y = ray_from(rng.standard_normal(d) + 1j * rng.standard_normal(d), tol)
        z = ray_from(rng.standard_normal(d) + 1j * rng.standard_normal(d), tol)
        if min(a_sim(x, y), a_sim(y, z), a_sim(z, x)) <= 1e-6:
            continue
        run += 1
        fx, fy, fz = (apply_ray(f, t, tol) for t in (x, y, z))
        worst_p = max(worst_p, abs(p_sim(fx, fy) - p_sim(x, y)))
        worst_t = max(
            worst_t, circular_distance(theta(fx, fy, fz, tol), theta(x, y, z, tol))
        )
    return QuantityResiduals(p_residual=worst_p, theta_residual=worst_t, trials_run=run)
