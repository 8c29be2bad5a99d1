"""The superposition operation on rays and its algebra.

A superposition mixes two non-orthogonal states in proportion
``r : (1 − r)``.  Writing v for a unit representative of the first
state and w for the unique unit representative of the second with
<v, w> real and positive, the superposed state is the ray of

    sqrt(r) v + sqrt(1 − r) w.

The operation is NOT a linear combination of states: it is undefined
for orthogonal states, it is commutative only under r ↔ 1 − r, and
composing superpositions does not behave like nested vector sums.  The
closed forms below (the mixture probability formula with its
interference term, the component-similarity formula, and the
complement-phase formula) are verified against direct computation by
the law harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateTripleError,
    DimensionMismatchError,
    InvalidWeightError,
    OrthogonalComponentsError,
)
from .linalg import ANGLE_GUARD, DEFAULT_TOL, Tolerance, inner
from .rays import Ray, Subspace, is_orthogonal, join, ray_from, rays_equal
from .geometry import a_sim, p_sim, theta


@dataclass(frozen=True)
class SuperpositionSpec:
    """The triple (y, z, r) naming the superposition r·y + (1−r)·z.

    Validation happens at construction: the components must share an
    ambient dimension, the weight must lie in [0, 1], and the
    components must not be orthogonal (no superposition of orthogonal
    states exists).
    """

    y: Ray
    z: Ray
    r: float

    def __post_init__(self):
        if self.y.dim != self.z.dim:
            raise DimensionMismatchError(f"dimensions {self.y.dim} vs {self.z.dim}")
        r = float(self.r)
        if not (math.isfinite(r) and 0.0 <= r <= 1.0):
            raise InvalidWeightError(f"weight r={self.r!r} outside [0, 1]")
        if a_sim(self.y, self.z) <= DEFAULT_TOL.eps_abs:
            raise OrthogonalComponentsError(
                "superpositions of orthogonal states are undefined"
            )


def superpose(spec: SuperpositionSpec, tol: Tolerance = DEFAULT_TOL) -> Ray:
    """The superposed ray of ``spec``.

    Independent of the representative chosen for the first component;
    coplanar with both components, with vanishing triple phase against
    them.  Boundary weights short-circuit: r=1 gives y, r=0 gives z,
    and superposing a state with itself gives that state back.
    """
    y, z, r = spec.y, spec.z, float(spec.r)
    if rays_equal(y, z, tol):
        return y
    if r >= 1.0:
        return y
    if r <= 0.0:
        return z
    v = y.rep
    c = inner(v, z.rep)
    w = z.rep * (c / abs(c))  # now inner(v, w) = |c| > 0
    u = math.sqrt(r) * v + math.sqrt(1.0 - r) * w
    return ray_from(u, tol)


def omega(r: float, y: Ray, z: Ray) -> float:
    """Normalization 1 + 2·sqrt(r(1−r)·p(y,z)), in [1, 2].

    The squared norm of the un-normalized superposition vector.
    """
    r = float(r)
    if not (math.isfinite(r) and 0.0 <= r <= 1.0):
        raise InvalidWeightError(f"weight r={r!r} outside [0, 1]")
    a = a_sim(y, z)
    if a <= DEFAULT_TOL.eps_abs:
        raise OrthogonalComponentsError(
            "superpositions of orthogonal states are undefined"
        )
    return 1.0 + 2.0 * math.sqrt(max(r * (1.0 - r), 0.0)) * a


def p_of_superposition_closed_form(
    spec: SuperpositionSpec,
    x: Ray,
    tol: Tolerance = DEFAULT_TOL,
    angle_guard: float = ANGLE_GUARD,
) -> float:
    """Closed-form similarity between a superposition and a test state.

    [ r·p(y,x) + (1−r)·p(z,x) + 2·cos(theta(x,y,z))·sqrt(r(1−r)·p(y,x)·p(z,x)) ] / omega

    Must agree with the direct similarity to the constructed ray.  When
    the test state is orthogonal to a component the interference term
    vanishes identically, so the phase is skipped rather than letting
    a meaningless arg() poison the value.
    """
    y, z, r = spec.y, spec.z, float(spec.r)
    p_yx = p_sim(y, x)
    p_zx = p_sim(z, x)
    w = omega(r, y, z)
    cross = r * (1.0 - r) * p_yx * p_zx
    if cross <= (angle_guard * angle_guard) ** 2:
        interference = 0.0
    else:
        interference = 2.0 * math.cos(theta(x, y, z, tol, angle_guard)) * math.sqrt(cross)
    return (r * p_yx + (1.0 - r) * p_zx + interference) / w


def p_component_closed_form(spec: SuperpositionSpec) -> float:
    """Closed-form similarity between a superposition and its first
    component: 1 − (1−r)(1−p(y,z)) / omega(r, y, z)."""
    r = float(spec.r)
    p_yz = p_sim(spec.y, spec.z)
    return 1.0 - (1.0 - r) * (1.0 - p_yz) / omega(r, spec.y, spec.z)


def p_superposed_vs_component(spec: SuperpositionSpec, tol: Tolerance = DEFAULT_TOL) -> float:
    """Similarity between the superposed ray and its first component.

    For r in (0, 1] and distinct components this is strictly larger
    than the similarity of the components to each other: mixing in any
    amount of y moves the state closer to y than z ever was.

    Raises
    ------
    InvalidWeightError
        If r = 0 (the strictness claim degenerates to equality there).
    DegenerateTripleError
        If the components coincide.
    """
    if float(spec.r) <= 0.0:
        raise InvalidWeightError("r must be strictly positive here")
    if rays_equal(spec.y, spec.z, tol):
        raise DegenerateTripleError("components must be distinct rays")
    return p_sim(superpose(spec, tol), spec.y)


def cos_theta_prime(
    x: Ray,
    x_perp: Ray,
    y: Ray,
    z: Ray,
    tol: Tolerance = DEFAULT_TOL,
    angle_guard: float = ANGLE_GUARD,
) -> float:
    """Closed-form cosine of the triple phase after swapping x for its
    in-plane orthocomplement x_perp.

    cos(theta(x', y, z)) = [ sqrt(p(y,z)) − cos(theta(x,y,z))·sqrt(p(x,y)·p(x,z)) ]
                           / sqrt( (1 − p(x,y))(1 − p(x,z)) )

    Preconditions: the four rays lie in one two-dimensional subspace,
    x ⊥ x_perp, the triples (x,y,z) and (x_perp,y,z) are pairwise
    non-orthogonal, and p(x,y), p(x,z) < 1.

    Raises
    ------
    DegenerateTripleError
        On any violated precondition or a vanishing denominator factor.
    """
    if not is_orthogonal(x, x_perp, tol):
        raise DegenerateTripleError("x and x_perp must be orthogonal")
    plane = join(join(Subspace.from_ray(x), Subspace.from_ray(y), tol), Subspace.from_ray(z), tol)
    plane_all = join(plane, Subspace.from_ray(x_perp), tol)
    if plane_all.rank > 2:
        raise DegenerateTripleError("the four rays must be coplanar")
    for u, v in ((x, y), (x, z), (y, z), (x_perp, y), (x_perp, z)):
        if a_sim(u, v) <= angle_guard:
            raise DegenerateTripleError("required non-orthogonality fails")
    p_xy = p_sim(x, y)
    p_xz = p_sim(x, z)
    den_sq = (1.0 - p_xy) * (1.0 - p_xz)
    if (1.0 - p_xy) <= tol.eps_abs or (1.0 - p_xz) <= tol.eps_abs:
        raise DegenerateTripleError("denominator factor vanished (p(x,·) = 1)")
    p_yz = p_sim(y, z)
    num = math.sqrt(p_yz) - math.cos(theta(x, y, z, tol, angle_guard)) * math.sqrt(p_xy * p_xz)
    return num / math.sqrt(den_sq)


def theta_of_superposition(
    spec: SuperpositionSpec,
    x1: Ray,
    x2: Ray,
    tol: Tolerance = DEFAULT_TOL,
    angle_guard: float = ANGLE_GUARD,
) -> float:
    """Triple phase of (superposed ray, x1, x2), by construction.

    No closed form is claimed for this quantity; it is supported
    numerically through the constructed ray only.
    """
    return theta(superpose(spec, tol), x1, x2, tol, angle_guard)
