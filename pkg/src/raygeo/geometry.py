"""The two geometric quantities on rays: similarity and triple phase.

Similarity ``p`` attaches a number in [0, 1] to a pair of rays (and, by
extension, to a ray and a subspace): the transition probability between
the states.  The triple phase ``theta`` attaches an angle to a triple of
pairwise non-orthogonal rays; it is the source of interference terms
and is independent of the representatives chosen.  Also here:
coplanarity of three rays, the reciprocity implication, and the
orthocomplement ("primed") triple.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTripleError, DimensionMismatchError, OrthogonalPairError
from .linalg import ANGLE_GUARD, DEFAULT_TOL, Tolerance, carg, inner, wrap_angle
from .rays import ZERO, Ray, Subspace, project_vec, ray_from, rays_equal


@dataclass(frozen=True)
class Triple:
    """An ordered triple of rays in a common ambient space."""

    x: Ray
    y: Ray
    z: Ray


def a_sim(x: Ray, y: Ray) -> float:
    """Overlap |<u, v>| of unit representatives, in [0, 1].

    Representative-independent and symmetric; 1 exactly when the rays
    coincide, 0 exactly when they are orthogonal.
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimensions {x.dim} vs {y.dim}")
    return min(abs(inner(x.rep, y.rep)), 1.0)


def p_sim(x: Ray, y: Ray) -> float:
    """Similarity (transition probability) between two rays: a_sim²."""
    a = a_sim(x, y)
    return a * a


def p_prop(x: Ray, a: Subspace) -> float:
    """Similarity between a ray and a proposition.

    Zero when the ray is orthogonal to the subspace; otherwise the
    similarity to the projected ray.  Numerically this is the squared
    norm of the projected representative (the Born rule), which covers
    both branches at once.
    """
    if x.dim != a.dim:
        raise DimensionMismatchError(f"dimensions {x.dim} vs {a.dim}")
    p = project_vec(a, x.rep)
    val = float(np.real(np.vdot(p, p)))
    return min(max(val, 0.0), 1.0)


def triple_phase(
    u, v, w, tol: Tolerance = DEFAULT_TOL, angle_guard: float = ANGLE_GUARD
) -> float:
    """Triple phase from explicit representatives (any nonzero vectors).

    arg<u,v> + arg<v,w> + arg<w,u>, reduced mod 2π to (−π, π].  The sum
    is invariant under rescaling any argument by a nonzero complex
    number, which is what makes the ray-level quantity well defined.

    Raises
    ------
    OrthogonalPairError
        If any normalized pairwise overlap is at most ``angle_guard``
        (the argument of a near-zero inner product is meaningless).
    """
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    nu, nv, nw = (float(np.linalg.norm(t)) for t in (u, v, w))
    pairs = (
        ("x", "y", inner(u, v), nu * nv),
        ("y", "z", inner(v, w), nv * nw),
        ("z", "x", inner(w, u), nw * nu),
    )
    total = 0.0
    for name1, name2, c, scale in pairs:
        if scale <= 0.0 or abs(c) <= angle_guard * scale:
            raise OrthogonalPairError((name1, name2))
        total += carg(c, tol)
    return wrap_angle(total)


def theta(
    x: Ray,
    y: Ray,
    z: Ray,
    tol: Tolerance = DEFAULT_TOL,
    angle_guard: float = ANGLE_GUARD,
) -> float:
    """Triple phase of three pairwise non-orthogonal rays, in (−π, π].

    Cyclic in its arguments and antisymmetric under transpositions
    (mod 2π).

    Raises
    ------
    OrthogonalPairError
        Naming the offending pair, when any two rays have overlap at
        most ``angle_guard``.
    """
    if not (x.dim == y.dim == z.dim):
        raise DimensionMismatchError(f"dimensions {x.dim}, {y.dim}, {z.dim}")
    return triple_phase(x.rep, y.rep, z.rep, tol, angle_guard)


def complement_projection(x: Ray, y: Ray, tol: Tolerance = DEFAULT_TOL):
    """Projection of y onto the orthocomplement of the ray x.

    Computed directly as y − <y, x>·x, which is the rank-(d−1)
    complement projection without materializing its basis; returns
    :data:`ZERO` when y lies on x.
    """
    v = y.rep - inner(y.rep, x.rep) * x.rep
    if float(np.linalg.norm(v)) <= tol.eps_abs:
        return ZERO
    return ray_from(v, tol)


def _projections_onto_complement(x: Ray, y: Ray, z: Ray, tol: Tolerance):
    return complement_projection(x, y, tol), complement_projection(x, z, tol)


def coplanar(x: Ray, y: Ray, z: Ray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether three rays lie in a common two-dimensional subspace.

    True when two of the three coincide, or when all three are distinct
    and y and z project to the same ray on the orthocomplement of x.
    A zero projection means the pair coincides numerically after all,
    so it routes to the two-equal branch.
    """
    if rays_equal(x, y, tol) or rays_equal(x, z, tol) or rays_equal(y, z, tol):
        return True
    py, pz = _projections_onto_complement(x, y, z, tol)
    if py is ZERO or pz is ZERO:
        return True
    return rays_equal(py, pz, tol)


def prime_triple(
    x: Ray,
    y: Ray,
    z: Ray,
    tol: Tolerance = DEFAULT_TOL,
    angle_guard: float = ANGLE_GUARD,
) -> Triple:
    """The orthocomplement triple (x', y', z') of a coplanar triple.

    x' is the projection of y (equivalently z) on the orthocomplement
    of x, and cyclically.  Its triple phase is the negation of the
    original one (mod 2π).

    Raises
    ------
    DegenerateTripleError
        If the rays are not pairwise distinct, not pairwise
        non-orthogonal, or not coplanar.
    """
    if rays_equal(x, y, tol) or rays_equal(y, z, tol) or rays_equal(z, x, tol):
        raise DegenerateTripleError("rays must be pairwise distinct")
    for u, v in ((x, y), (y, z), (z, x)):
        if a_sim(u, v) <= angle_guard:
            raise DegenerateTripleError("rays must be pairwise non-orthogonal")
    if not coplanar(x, y, z, tol):
        raise DegenerateTripleError("rays must be coplanar")
    x1 = complement_projection(x, y, tol)
    y1 = complement_projection(y, z, tol)
    z1 = complement_projection(z, x, tol)
    if x1 is ZERO or y1 is ZERO or z1 is ZERO:
        raise DegenerateTripleError("projection collapsed; rays too close")
    return Triple(x=x1, y=y1, z=z1)


def _proj_equal(p, q, tol: Tolerance) -> bool:
    if p is ZERO or q is ZERO:
        return p is ZERO and q is ZERO
    return rays_equal(p, q, tol)


def reciprocity_holds(x: Ray, y: Ray, z: Ray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """The reciprocity implication for one instance.

    If y and z project to the same ray on the orthocomplement of x,
    then z and x must project to the same ray on the orthocomplement
    of y.  Vacuously true when the antecedent fails — in particular on
    any triple of pairwise-orthogonal (classical) states.
    """
    py, pz = _projections_onto_complement(x, y, z, tol)
    if not _proj_equal(py, pz, tol):
        return True
    return _proj_equal(
        complement_projection(y, z, tol), complement_projection(y, x, tol), tol
    )
