"""Probability calculus of propositions tested in a state.

For a fixed state x, the similarities p(x, ·) behave like a probability
measure on propositions — exactly so on families of *commuting*
propositions: additivity over orthogonal disjunctions, the complement
law, inclusion–exclusion, a conditional chain rule, and the total
probability decomposition.  Without commutation the decomposition
fails, and this module also carries the quantitative interference
inequality together with a search for the counterexample showing its
square cannot be dropped.

Checkers return residuals (absolute deviation from the identity) so
the law harness can aggregate worst cases; they raise only when a
stated precondition is violated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotCommutingError,
    NotContainedError,
    NotOrthogonalError,
    PreconditionUnmetError,
)
from .linalg import DEFAULT_TOL, Tolerance
from .rays import (
    ZERO,
    Ray,
    Subspace,
    commutes,
    containment_defect,
    is_member,
    is_orthogonal,
    join,
    meet,
    ortho_complement,
    project_ray,
    ray_from,
    rays_equal,
    subspaces_equal,
)
from .geometry import p_prop


def check_ortho_additivity(x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """|p(x, a∨b) − p(x, a) − p(x, b)| for orthogonal a, b.

    Raises
    ------
    NotOrthogonalError
        If the subspaces are not orthogonal.
    """
    if not is_orthogonal(a, b, tol):
        raise NotOrthogonalError("additivity requires orthogonal propositions")
    return abs(p_prop(x, join(a, b, tol)) - p_prop(x, a) - p_prop(x, b))


def check_complement(x: Ray, a: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """|p(x, a) + p(x, ¬a) − 1|."""
    return abs(p_prop(x, a) + p_prop(x, ortho_complement(a, tol)) - 1.0)


def check_inclusion_exclusion(x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """|p(x, a∨b) − p(x, a) − p(x, b) + p(x, a∧b)| for commuting a, b."""
    if not commutes(a, b, tol=tol):
        raise NotCommutingError("inclusion-exclusion requires commuting propositions")
    return abs(
        p_prop(x, join(a, b, tol))
        - p_prop(x, a)
        - p_prop(x, b)
        + p_prop(x, meet(a, b, tol))
    )


def check_chain_rule(x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """|p(x, a∧b) − p(x, a)·p(a(x), b)| for commuting a, b.

    When x ⊥ a the conditional is on a null event; the term is
    0-weighted and the residual degenerates to p(x, a∧b) itself, which
    must vanish.
    """
    if not commutes(a, b, tol=tol):
        raise NotCommutingError("the chain rule requires commuting propositions")
    p_xa = p_prop(x, a)
    p_meet = p_prop(x, meet(a, b, tol))
    ax = project_ray(a, x, tol)
    if ax is ZERO or p_xa <= tol.eps_abs:
        return p_meet
    return abs(p_meet - p_xa * p_prop(ax, b))


def check_monotone(x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """p(x, a) ≤ p(x, b) + eps_abs for nested a ⊆ b.

    Raises
    ------
    NotContainedError
        If a is not contained in b.
    """
    if containment_defect(a, b) > tol.eps_abs:
        raise NotContainedError("monotonicity requires a ⊆ b")
    return p_prop(x, a) <= p_prop(x, b) + tol.eps_abs


def _locally_commute(x: Ray, a: Subspace, b: Subspace, tol: Tolerance) -> bool:
    ab = project_ray(a, project_ray(b, x, tol), tol)
    ba = project_ray(b, project_ray(a, x, tol), tol)
    if ab is ZERO or ba is ZERO:
        return ab is ZERO and ba is ZERO
    return rays_equal(ab, ba, tol)


def check_total_probability(x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Residual of p(x,b) = p(x,a)·p(a(x),b) + p(x,¬a)·p(¬a(x),b).

    Requires either globally commuting propositions or the weaker local
    condition that the two composite projections agree *at x*.  Terms
    conditioned on a null event (p(x,a) = 0 or p(x,¬a) = 0) contribute
    zero with the undefined conditional skipped.

    Raises
    ------
    PreconditionUnmetError
        When the propositions neither commute nor locally commute at x.
    """
    if not commutes(a, b, tol=tol) and not _locally_commute(x, a, b, tol):
        raise PreconditionUnmetError(
            "commuting or locally-commuting-at-x",
            "propositions neither commute nor locally commute at the given state",
        )
    na = ortho_complement(a, tol)
    total = 0.0
    for prop in (a, na):
        weight = p_prop(x, prop)
        if weight <= tol.eps_abs:
            continue
        px = project_ray(prop, x, tol)
        if px is ZERO:
            continue
        total += weight * p_prop(px, b)
    return abs(p_prop(x, b) - total)


def check_interference_inequality(
    x: Ray, a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Margin of the quantitative interference inequality.

    With x in a, returns RHS − LHS of

        p(x,b)·(1 − p(b(x),a))²  ≤  p(b(x),a)·(1 − p(a(b(x)),b))

    which must be ≥ 0 up to rounding.

    Raises
    ------
    PreconditionUnmetError
        If x is not in a, x ⊥ b, or b(x) ⊥ a.
    """
    if not is_member(x, a, tol):
        raise PreconditionUnmetError("x in alpha")
    bx = project_ray(b, x, tol)
    if bx is ZERO:
        raise PreconditionUnmetError("x not orthogonal to beta")
    p_bx_a = p_prop(bx, a)
    abx = project_ray(a, bx, tol)
    if abx is ZERO:
        raise PreconditionUnmetError("beta(x) not orthogonal to alpha")
    lhs = p_prop(x, b) * (1.0 - p_bx_a) ** 2
    rhs = p_bx_a * (1.0 - p_prop(abx, b))
    return rhs - lhs


@dataclass(frozen=True)
class InterferenceWitness:
    """A real 3-dimensional instance violating the NON-squared variant.

    The members record the state, the two propositions, the similarity
    values entering both sides, the positive margin by which the
    non-squared inequality fails, and the (non-negative) margin by
    which the squared inequality still holds.
    """

    x: Ray
    alpha: Subspace
    beta: Subspace
    p_x_beta: float
    p_bx_alpha: float
    p_abx_beta: float
    nonsquared_excess: float
    squared_margin: float
    trial_index: int


def search_nonsquared_counterexample(
    seed: int,
    budget: int,
    tol: Tolerance = DEFAULT_TOL,
) -> InterferenceWitness | None:
    """Random search over real 3-dimensional instances for a violation of

        p(x,b)·(1 − p(b(x),a))  ≤  p(b(x),a)·(1 − p(a(b(x)),b)).

    Every candidate is drawn from its own counter-based substream keyed
    by (seed, trial), so the search may be split across workers and
    merged deterministically (first witness by trial index wins); this
    implementation scans sequentially.  Returns ``None`` when the
    budget is exhausted.  Any witness returned also satisfies the
    squared inequality, which is a theorem.
    """
    dim = 3
    for trial in range(int(budget)):
        rng = np.random.Generator(
            np.random.Philox(key=np.array([np.uint64(seed), np.uint64(trial)], dtype=np.uint64))
        )
        ranks = rng.integers(1, dim, size=2)  # 1 or 2
        qa = np.linalg.qr(rng.standard_normal((dim, int(ranks[0]))))[0]
        qb = np.linalg.qr(rng.standard_normal((dim, int(ranks[1]))))[0]
        alpha = Subspace.from_orthonormal(qa.T.astype(np.complex128), dim)
        beta = Subspace.from_orthonormal(qb.T.astype(np.complex128), dim)
        coeff = rng.standard_normal(int(ranks[0]))
        vec = qa @ coeff
        nrm = float(np.linalg.norm(vec))
        if nrm <= tol.eps_abs:
            continue
        x = ray_from(vec.astype(np.complex128), tol)
        p_xb = p_prop(x, beta)
        if p_xb <= 1e-6:
            continue
        bx = project_ray(beta, x, tol)
        if bx is ZERO:
            continue
        p_bx_a = p_prop(bx, alpha)
        if p_bx_a <= 1e-6:
            continue
        abx = project_ray(alpha, bx, tol)
        if abx is ZERO:
            continue
        p_abx_b = p_prop(abx, beta)
        lhs_ns = p_xb * (1.0 - p_bx_a)
        rhs_ns = p_bx_a * (1.0 - p_abx_b)
        excess = lhs_ns - rhs_ns
        if excess > tol.eps_abs:
            squared_margin = p_bx_a * (1.0 - p_abx_b) - p_xb * (1.0 - p_bx_a) ** 2
            return InterferenceWitness(
                x=x,
                alpha=alpha,
                beta=beta,
                p_x_beta=p_xb,
                p_bx_alpha=p_bx_a,
                p_abx_beta=p_abx_b,
                nonsquared_excess=excess,
                squared_margin=squared_margin,
                trial_index=trial,
            )
    return None


@dataclass(frozen=True)
class CommutingDecomposition:
    """Three pairwise-orthogonal parts generating a commuting pair:
    the generating pair is (gamma1 ∨ gamma2, gamma1 ∨ gamma3)."""

    gamma1: Subspace
    gamma2: Subspace
    gamma3: Subspace


def decompose_commuting(
    a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL
) -> CommutingDecomposition:
    """Constructive decomposition of a commuting pair.

    gamma1 = a∧b, gamma2 = a∧¬b, gamma3 = ¬a∧b.  Verifies pairwise
    orthogonality and that the two joins reproduce a and b.

    Raises
    ------
    NotCommutingError
        If the propositions do not commute.
    """
    if not commutes(a, b, tol=tol):
        raise NotCommutingError("decomposition exists only for commuting propositions")
    nb = ortho_complement(b, tol)
    na = ortho_complement(a, tol)
    g1 = meet(a, b, tol)
    g2 = meet(a, nb, tol)
    g3 = meet(na, b, tol)
    for p, q in ((g1, g2), (g1, g3), (g2, g3)):
        if not is_orthogonal(p, q, tol):
            raise NotCommutingError("decomposition parts are not orthogonal")
    if not subspaces_equal(join(g1, g2, tol), a, tol) or not subspaces_equal(
        join(g1, g3, tol), b, tol
    ):
        raise NotCommutingError("decomposition does not regenerate the pair")
    return CommutingDecomposition(gamma1=g1, gamma2=g2, gamma3=g3)
