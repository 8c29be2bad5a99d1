"""States as rays and propositions as closed subspaces of C^d.

A *ray* (one-dimensional subspace) carries the physical state; it is
stored as a canonical unit representative so that equal rays compare
equal entrywise.  A *proposition* is a closed subspace, stored as an
orthonormal basis; rank 0 encodes falsehood and rank d encodes truth.
Projections model measurement: measuring a proposition in a state
yields the projected state, or the explicit :data:`ZERO` result when
the state is orthogonal to the proposition.

All values are immutable and all operations are pure, so concurrent
use requires no synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ZeroVectorError
from .linalg import DEFAULT_TOL, Tolerance, as_vector, inner, orthonormalize


class ZeroProjection:
    """The zero-dimensional projection result.

    An explicit variant rather than ``None``: projections extend to it
    (projecting ZERO yields ZERO), mirroring how the measurement
    calculus treats the impossible outcome.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


#: Singleton zero-dimensional projection result.
ZERO = ZeroProjection()


@dataclass(frozen=True, eq=False)
class Ray:
    """A one-dimensional subspace of C^d, as a canonical representative.

    The representative is a unit vector whose first entry of modulus
    above ``eps_abs`` is real and strictly positive.  Build instances
    with :func:`ray_from`; the canonical form makes representative
    comparison a valid ray-equality check.  ``==`` is exact entrywise
    equality of representatives; use :func:`rays_equal` for the
    tolerance-aware comparison.

    Attributes
    ----------
    rep : numpy.ndarray
        Canonical unit representative (read-only).
    """

    rep: np.ndarray

    def __post_init__(self):
        self.rep.flags.writeable = False

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return int(self.rep.shape[0])

    def __eq__(self, other):
        return isinstance(other, Ray) and np.array_equal(self.rep, other.rep)

    def __hash__(self):
        return hash(self.rep.tobytes())

    def __repr__(self):
        return f"Ray({np.array2string(self.rep, precision=6, suppress_small=True)})"


def ray_from(v, tol: Tolerance = DEFAULT_TOL) -> Ray:
    """The ray spanned by ``v``, with canonical representative.

    Scale-invariant: ``ray_from(c * v)`` equals ``ray_from(v)`` for any
    nonzero complex ``c``.

    Raises
    ------
    ZeroVectorError
        If ``norm(v) <= tol.eps_abs``.
    """
    v = as_vector(v)
    n = float(np.linalg.norm(v))
    if n <= tol.eps_abs:
        raise ZeroVectorError(f"cannot span a ray from a vector of norm {n:.3e}")
    u = v / n
    sig = np.flatnonzero(np.abs(u) > tol.eps_abs)
    k = int(sig[0])  # nonempty: a unit vector has an entry of modulus >= 1/sqrt(d)
    u = u * (np.conj(u[k]) / abs(u[k]))
    return Ray(rep=u)


def rays_equal(x: Ray, y: Ray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether two rays coincide, via overlap |<x, y>| > 1 − eps_abs."""
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimensions {x.dim} vs {y.dim}")
    return abs(inner(x.rep, y.rep)) > 1.0 - tol.eps_abs


@dataclass(frozen=True, eq=False)
class Subspace:
    """A closed subspace of C^d as an orthonormal basis.

    ``==`` is exact entrywise basis equality; use
    :func:`subspaces_equal` for the basis-independent comparison.

    Attributes
    ----------
    basis : numpy.ndarray
        Shape ``(rank, dim)``; rows are pairwise-orthonormal basis
        vectors.  Rank 0 encodes falsehood, rank ``dim`` encodes truth.
    dim : int
        Ambient dimension.
    """

    basis: np.ndarray
    dim: int

    def __post_init__(self):
        self.basis.flags.writeable = False

    @property
    def rank(self) -> int:
        return int(self.basis.shape[0])

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.dim == other.dim
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.dim, self.basis.tobytes()))

    @classmethod
    def from_vectors(cls, vectors, dim=None, tol: Tolerance = DEFAULT_TOL) -> "Subspace":
        """Span of arbitrary vectors; orthonormalizes and drops dependents."""
        rows = orthonormalize(vectors, tol)
        if rows:
            d = rows[0].shape[0]
        elif dim is not None:
            d = int(dim)
        else:
            raise ValueError("dim is required when no independent vector remains")
        if dim is not None and int(dim) != d:
            raise DimensionMismatchError(f"declared dim {dim}, vectors have dim {d}")
        mat = np.array(rows, dtype=np.complex128).reshape(len(rows), d)
        return cls(basis=mat, dim=d)

    @classmethod
    def from_orthonormal(cls, rows, dim) -> "Subspace":
        """Wrap rows already known to be orthonormal (no re-check)."""
        mat = np.asarray(rows, dtype=np.complex128).reshape(-1, int(dim))
        return cls(basis=mat, dim=int(dim))

    @classmethod
    def from_ray(cls, x: Ray) -> "Subspace":
        return cls.from_orthonormal(x.rep[np.newaxis, :], x.dim)

    @classmethod
    def falsehood(cls, dim: int) -> "Subspace":
        """The null subspace {0}."""
        return cls.from_orthonormal(np.zeros((0, dim), dtype=np.complex128), dim)

    @classmethod
    def truth(cls, dim: int) -> "Subspace":
        """The whole space C^d."""
        return cls.from_orthonormal(np.eye(dim, dtype=np.complex128), dim)

    def projector(self) -> np.ndarray:
        """The dim×dim orthogonal projection matrix onto this subspace."""
        return self.basis.T @ self.basis.conj()

    def __repr__(self):
        return f"Subspace(rank={self.rank}, dim={self.dim})"


def _require_dim(a, b):
    da = a.dim
    db = b.dim
    if da != db:
        raise DimensionMismatchError(f"ambient dimensions {da} vs {db}")


def project_vec(a: Subspace, u) -> np.ndarray:
    """Orthogonal projection of a vector onto the subspace.

    Computed as ``sum_k inner(u, b_k) b_k`` over the basis rows; the
    residual ``u − result`` is orthogonal to every basis vector.
    """
    u = as_vector(u)
    if u.shape[0] != a.dim:
        raise DimensionMismatchError(f"vector dim {u.shape[0]} vs subspace dim {a.dim}")
    if a.rank == 0:
        return np.zeros(a.dim, dtype=np.complex128)
    return a.basis.T @ (a.basis.conj() @ u)


def project_ray(a: Subspace, x, tol: Tolerance = DEFAULT_TOL):
    """Projection of a ray onto a subspace: a Ray, or ZERO if orthogonal.

    Idempotent, and extends to the zero result: projecting ZERO yields
    ZERO.
    """
    if x is ZERO:
        return ZERO
    _require_dim(a, x)
    p = project_vec(a, x.rep)
    if float(np.linalg.norm(p)) <= tol.eps_abs:
        return ZERO
    return ray_from(p, tol)


def ortho_complement(a: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Orthogonal complement; rank is ``dim − rank(a)`` and the double
    complement returns the original subspace."""
    seed = list(a.basis) + list(np.eye(a.dim, dtype=np.complex128))
    full = orthonormalize(seed, tol)
    return Subspace.from_orthonormal(np.array(full[a.rank :], dtype=np.complex128), a.dim)


def join(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Disjunction: the closed linear sum, containing both operands."""
    _require_dim(a, b)
    rows = orthonormalize(list(a.basis) + list(b.basis), tol)
    return Subspace.from_orthonormal(np.array(rows, dtype=np.complex128).reshape(-1, a.dim), a.dim)


def meet(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> Subspace:
    """Conjunction: the intersection, via ``¬(¬a ∨ ¬b)`` (exact in
    finite dimension)."""
    _require_dim(a, b)
    return ortho_complement(join(ortho_complement(a, tol), ortho_complement(b, tol), tol), tol)


def is_member(x: Ray, a: Subspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the ray lies inside the subspace (projection fixes it)."""
    _require_dim(a, x)
    residual = float(np.linalg.norm(project_vec(a, x.rep) - x.rep))
    return residual <= tol.eps_abs


def _basis_rows(obj) -> np.ndarray:
    if isinstance(obj, Ray):
        return obj.rep[np.newaxis, :]
    if isinstance(obj, Subspace):
        return obj.basis
    raise TypeError(f"expected Ray or Subspace, got {type(obj).__name__}")


def is_orthogonal(p, q, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether two rays/subspaces are orthogonal (symmetric).

    True iff every pairwise basis inner product has modulus at most
    ``eps_abs``; vacuously true for falsehood.
    """
    rows_p = _basis_rows(p)
    rows_q = _basis_rows(q)
    if rows_p.shape[1] != rows_q.shape[1]:
        raise DimensionMismatchError(f"dimensions {rows_p.shape[1]} vs {rows_q.shape[1]}")
    if rows_p.shape[0] == 0 or rows_q.shape[0] == 0:
        return True
    gram = rows_p @ rows_q.conj().T
    return float(np.max(np.abs(gram))) <= tol.eps_abs


def subspaces_equal(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether two subspaces coincide (equal ranks, mutual containment)."""
    _require_dim(a, b)
    if a.rank != b.rank:
        return False
    if a.rank == 0:
        return True
    defect = containment_defect(a, b)
    return defect <= tol.eps_abs


def containment_defect(a: Subspace, b: Subspace) -> float:
    """Largest distance from a basis vector of ``a`` to the subspace ``b``.

    Zero (up to rounding) exactly when a ⊆ b.
    """
    _require_dim(a, b)
    if a.rank == 0:
        return 0.0
    coeffs = b.basis.conj() @ a.basis.T  # (rank_b, rank_a)
    proj = b.basis.T @ coeffs  # (dim, rank_a)
    return float(np.max(np.linalg.norm(proj - a.basis.T, axis=0)))


def commutes(
    a: Subspace,
    b: Subspace,
    probes: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    rng: np.random.Generator | None = None,
) -> bool:
    """Whether the projection operators of two propositions commute.

    Decided at the operator level — matrix equality of the two composite
    projections — which renders the universally quantified definition
    faithfully in finite dimension.  ``probes`` optionally cross-checks
    the verdict on random vectors.
    """
    _require_dim(a, b)
    pa = a.projector()
    pb = b.projector()
    comm = float(np.max(np.abs(pa @ pb - pb @ pa)))
    verdict = comm <= tol.eps_abs
    if probes > 0:
        if rng is None:
            rng = np.random.Generator(np.random.Philox(key=[0x52415947454F, probes]))
        for _ in range(probes):
            u = rng.standard_normal(a.dim) + 1j * rng.standard_normal(a.dim)
            gap = float(np.linalg.norm(pa @ (pb @ u) - pb @ (pa @ u)))
            if (gap <= tol.eps_abs * max(1.0, float(np.linalg.norm(u)))) != verdict:
                # Pointwise evidence contradicts the operator check only
                # for borderline numerics; be conservative.
                return False
    return verdict
