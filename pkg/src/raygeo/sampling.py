"""Seeded random instance generators for the law harness.

Reproducibility contract: every (law, dimension, trial) cell draws from
its own substream of the Philox-4x64 counter-based generator.  The
2x64-bit Philox key is

    key = [ seed XOR blake2b-64(law_id),  (dim << 32) XOR trial ]

so reports are a pure function of (law id, generator spec) and trial
batches can run in any order, or in parallel, without changing a
single drawn number.

Flavors (what kind of instance a law consumes):

* ``generic-complex``     standard complex Gaussian rays/subspaces
* ``real-only``           imaginary parts zeroed (Euclidean regime)
* ``coplanar``            a triple mixed inside one 2-plane
* ``commuting-pair``      two subspaces built on one orthonormal frame
* ``nested-pair``         two subspaces with one containing the other
* ``classical-orthogonal`` distinct standard-basis rays
* ``isometry``            a scaled unitary-column map
* ``non-isometry``        an injective map with one singular value bumped
"""

from __future__ import annotations

import hashlib

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance
from .rays import Ray, Subspace, ray_from
from .morphisms import LinearMap, RegularMap

#: Rejection threshold where a law needs non-orthogonality: pairs with
#: overlap at or below this are redrawn (or the trial is skipped).
MIN_OVERLAP = 1e-6

_REJECTION_LIMIT = 64


def law_stream_key(law_id: str) -> int:
    """Stable 64-bit key for a law id (blake2b-8 digest)."""
    return int.from_bytes(hashlib.blake2b(law_id.encode(), digest_size=8).digest(), "little")


def substream(seed: int, law_id: str, dim: int, trial: int) -> np.random.Generator:
    """The dedicated generator for one (law, dimension, trial) cell."""
    key = np.array(
        [
            np.uint64(seed & 0xFFFFFFFFFFFFFFFF) ^ np.uint64(law_stream_key(law_id)),
            (np.uint64(dim) << np.uint64(32)) ^ np.uint64(trial),
        ],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def gaussian_vector(rng: np.random.Generator, dim: int, real: bool = False) -> np.ndarray:
    if real:
        return rng.standard_normal(dim).astype(np.complex128)
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


def random_ray(
    rng: np.random.Generator, dim: int, real: bool = False, tol: Tolerance = DEFAULT_TOL
) -> Ray:
    return ray_from(gaussian_vector(rng, dim, real), tol)


def nonorthogonal_pair(
    rng: np.random.Generator,
    dim: int,
    real: bool = False,
    min_overlap: float = MIN_OVERLAP,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple[Ray, Ray] | None:
    """Two rays with overlap above the rejection threshold, or None."""
    for _ in range(_REJECTION_LIMIT):
        x = random_ray(rng, dim, real, tol)
        y = random_ray(rng, dim, real, tol)
        if abs(np.vdot(y.rep, x.rep)) > min_overlap:
            return x, y
    return None


def nonorthogonal_triple(
    rng: np.random.Generator,
    dim: int,
    real: bool = False,
    min_overlap: float = MIN_OVERLAP,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple[Ray, Ray, Ray] | None:
    """Three pairwise non-orthogonal rays, or None after rejections."""
    for _ in range(_REJECTION_LIMIT):
        rays = [random_ray(rng, dim, real, tol) for _ in range(3)]
        overlaps = [
            abs(np.vdot(rays[j].rep, rays[i].rep))
            for i, j in ((0, 1), (1, 2), (2, 0))
        ]
        if min(overlaps) > min_overlap:
            return rays[0], rays[1], rays[2]
    return None


def random_frame(rng: np.random.Generator, dim: int, real: bool = False) -> np.ndarray:
    """A random orthonormal frame: rows are orthonormal vectors."""
    g = rng.standard_normal((dim, dim))
    if not real:
        g = g + 1j * rng.standard_normal((dim, dim))
    q = np.linalg.qr(g)[0]
    return q.T.astype(np.complex128)


def random_subspace(
    rng: np.random.Generator,
    dim: int,
    rank: int | None = None,
    real: bool = False,
) -> Subspace:
    """A random subspace; rank defaults to uniform over 1..dim−1
    (use the explicit constructors for truth/falsehood)."""
    if rank is None:
        rank = int(rng.integers(1, dim)) if dim > 1 else 1
    if rank == 0:
        return Subspace.falsehood(dim)
    if rank >= dim:
        return Subspace.truth(dim)
    g = rng.standard_normal((dim, rank))
    if not real:
        g = g + 1j * rng.standard_normal((dim, rank))
    q = np.linalg.qr(g)[0]
    return Subspace.from_orthonormal(q.T.astype(np.complex128), dim)


def member_ray(
    rng: np.random.Generator, a: Subspace, real: bool = False, tol: Tolerance = DEFAULT_TOL
) -> Ray:
    """A random ray inside a subspace of positive rank."""
    if a.rank == 0:
        raise ValueError("falsehood contains no ray")
    coeff = gaussian_vector(rng, a.rank, real)
    return ray_from(a.basis.T @ coeff, tol)


def commuting_pair(
    rng: np.random.Generator, dim: int, real: bool = False
) -> tuple[Subspace, Subspace]:
    """Two commuting subspaces: spans of index subsets of one frame.

    Commuting pairs have measure zero among random pairs, so they are
    generated by construction, never by rejection.
    """
    frame = random_frame(rng, dim, real)
    in_a = rng.random(dim) < 0.5
    in_b = rng.random(dim) < 0.5
    a = Subspace.from_orthonormal(frame[in_a], dim)
    b = Subspace.from_orthonormal(frame[in_b], dim)
    return a, b


def nested_pair(rng: np.random.Generator, dim: int, real: bool = False) -> tuple[Subspace, Subspace]:
    """Two subspaces with the first contained in the second."""
    frame = random_frame(rng, dim, real)
    r2 = int(rng.integers(1, dim + 1))
    r1 = int(rng.integers(0, r2 + 1))
    return (
        Subspace.from_orthonormal(frame[:r1], dim),
        Subspace.from_orthonormal(frame[:r2], dim),
    )


def coplanar_triple(
    rng: np.random.Generator, dim: int, real: bool = False, tol: Tolerance = DEFAULT_TOL
) -> tuple[Ray, Ray, Ray] | None:
    """Three rays inside one two-dimensional subspace."""
    pair = nonorthogonal_pair(rng, dim, real, tol=tol)
    if pair is None:
        return None
    y, z = pair
    for _ in range(_REJECTION_LIMIT):
        c = gaussian_vector(rng, 2, real)
        vec = c[0] * y.rep + c[1] * z.rep
        if float(np.linalg.norm(vec)) > 1e-3:
            return ray_from(vec, tol), y, z
    return None


def classical_rays(rng: np.random.Generator, dim: int, count: int) -> list[Ray]:
    """Distinct standard-basis rays: the regime where all distinct
    states are orthogonal."""
    if count > dim:
        raise ValueError("cannot draw more distinct basis rays than dim")
    idx = rng.permutation(dim)[:count]
    eye = np.eye(dim, dtype=np.complex128)
    return [Ray(rep=eye[i].copy()) for i in idx]


def isometry_map(
    rng: np.random.Generator,
    dim_in: int,
    dim_out: int | None = None,
    scale: float | None = None,
) -> RegularMap:
    """A scaled isometry C^{dim_in} → C^{dim_out} (unitary columns)."""
    if dim_out is None:
        dim_out = dim_in + int(rng.integers(0, 3))
    g = rng.standard_normal((dim_out, dim_in)) + 1j * rng.standard_normal((dim_out, dim_in))
    q = np.linalg.qr(g)[0]
    c = float(rng.uniform(0.5, 2.0)) if scale is None else float(scale)
    return RegularMap(underlying=LinearMap(matrix=c * q))


def non_isometry_map(
    rng: np.random.Generator, dim_in: int, dim_out: int | None = None
) -> RegularMap:
    """An injective non-isometry: one singular value bumped by ≥ 1.1."""
    if dim_out is None:
        dim_out = dim_in + int(rng.integers(0, 3))
    g = rng.standard_normal((dim_out, dim_in)) + 1j * rng.standard_normal((dim_out, dim_in))
    q = np.linalg.qr(g)[0]
    gv = rng.standard_normal((dim_in, dim_in)) + 1j * rng.standard_normal((dim_in, dim_in))
    v = np.linalg.qr(gv)[0]
    s = np.ones(dim_in)
    s[int(rng.integers(0, dim_in))] = 1.1 + float(rng.uniform(0.0, 0.9))
    return RegularMap(underlying=LinearMap(matrix=q @ np.diag(s) @ v.conj().T))
