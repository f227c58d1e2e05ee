"""Core domain types and numeric primitives shared across the package.

Covectors and points are plain 1-d float arrays; a :class:`CovectorSystem`
stacks its covectors as rows of a read-only ``(count, dim)`` matrix.  All
types are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CovectorSystem",
    "DEFAULT_POLICY",
    "DegenerateForm",
    "EmptyRestriction",
    "EmptySubspace",
    "GramForm",
    "IndefiniteForm",
    "InvalidSpec",
    "SamplingExhausted",
    "SingularPoint",
    "TolerancePolicy",
    "VeesysError",
    "ZeroCovector",
    "canonical_direction",
    "collinear_groups",
    "cvee",
    "find_covector",
    "gram",
    "inverse_sqrt_spd",
    "nullspace_basis",
    "random_regular_point",
    "row_space_basis",
    "same_covector_set",
]


class VeesysError(Exception):
    """Base class for every error raised by this package."""


class ZeroCovector(VeesysError):
    """All coordinates of a covector are below the zero tolerance."""


class DegenerateForm(VeesysError):
    """The covectors do not span the dual space, so sum(a (x) a) is singular."""


class IndefiniteForm(VeesysError):
    """The quadratic form has a non-positive eigenvalue."""


class SingularPoint(VeesysError):
    """The evaluation point lies on (or numerically on) a hyperplane of the system."""


class SamplingExhausted(VeesysError):
    """Rejection sampling gave up; the requested regularity margin is too large."""


class InvalidSpec(VeesysError):
    """A system specification with bad arity or parameter values."""


class EmptySubspace(VeesysError):
    """The subsystem spans the whole space; the intersection subspace is zero."""


class EmptyRestriction(VeesysError):
    """Every remaining covector projects to zero on the intersection subspace."""


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric tolerances and the RNG seed used by sampling helpers.

    ``eps_rank`` bounds what counts as zero in rank and collinearity
    decisions, ``eps_residual`` bounds acceptable residuals in verdicts,
    and ``eps_regular`` is the relative margin ``|a(x)|/(|a||x|)`` required
    of a regular point.
    """

    eps_rank: float = 1e-9
    eps_residual: float = 1e-8
    eps_regular: float = 0.05
    rng_seed: int = 0

    def __post_init__(self):
        if min(self.eps_rank, self.eps_residual, self.eps_regular) <= 0:
            raise ValueError("tolerances must be strictly positive")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.rng_seed)


DEFAULT_POLICY = TolerancePolicy()


def collinear_groups(rows, eps: float = DEFAULT_POLICY.eps_rank):
    """Group row indices into classes of mutually collinear rows.

    Two rows count as collinear when the sine of their angle is below
    ``eps`` (computed as a residual norm, which stays accurate near zero;
    ``1 - cos^2`` would not).  Singleton groups are included.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    n = rows.shape[0]
    norms = np.linalg.norm(rows, axis=1)
    units = rows / norms[:, None]
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n - 1):
        c = units[i + 1:] @ units[i]
        resid = units[i + 1:] - np.outer(c, units[i])
        sins = np.linalg.norm(resid, axis=1)
        for k in np.nonzero(sins < eps)[0]:
            ri, rj = find(i), find(i + 1 + int(k))
            if ri != rj:
                parent[rj] = ri
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@dataclass(frozen=True, eq=False)
class CovectorSystem:
    """A named finite set of covectors spanning the dual of R^dim.

    ``covectors`` is a ``(count, dim)`` array, one covector per row.  Rows
    are pairwise non-collinear and jointly of full rank; zero rows are
    dropped with a warning.  ``params`` records construction parameters,
    ``meta`` optional provenance (dropped covectors, reductions).
    """

    name: str
    dim: int
    covectors: np.ndarray
    params: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        rows = np.atleast_2d(np.asarray(self.covectors, dtype=float))
        if rows.ndim != 2 or rows.shape[1] != self.dim:
            raise ValueError(f"covector array must have shape (count, {self.dim})")
        eps = DEFAULT_POLICY.eps_rank
        zero = np.abs(rows).max(axis=1) < eps
        if zero.any():
            warnings.warn(
                f"{self.name}: dropping {int(zero.sum())} zero covector(s)",
                stacklevel=2,
            )
            rows = rows[~zero]
        if rows.shape[0] == 0:
            raise ZeroCovector(f"{self.name}: no nonzero covectors")
        bad = [g for g in collinear_groups(rows, eps) if len(g) > 1]
        if bad:
            raise ValueError(
                f"{self.name}: collinear covectors at indices {bad[0]}; "
                "merge them before construction"
            )
        if rows.shape[0] < self.dim:
            raise DegenerateForm(f"{self.name}: covectors do not span the dual space")
        s = np.linalg.svd(rows, compute_uv=False)
        if s[-1] <= eps * s[0]:
            raise DegenerateForm(f"{self.name}: covectors do not span the dual space")
        rows = np.ascontiguousarray(rows)
        rows.setflags(write=False)
        object.__setattr__(self, "covectors", rows)

    @property
    def count(self) -> int:
        return self.covectors.shape[0]

    def __len__(self) -> int:
        return self.count

    def __repr__(self) -> str:
        return f"<CovectorSystem {self.name}: {self.count} covectors in dim {self.dim}>"


@dataclass(frozen=True, eq=False)
class GramForm:
    """The symmetric form sum(a (x) a) with its inverse.

    ``g_inv`` maps a covector ``a`` to the vector that represents it with
    respect to the form.  ``cond`` is the eigenvalue condition number and
    ``eig_min`` the smallest eigenvalue (both reported in check reports).
    """

    g: np.ndarray
    g_inv: np.ndarray
    dim: int
    cond: float
    eig_min: float


def gram(system: CovectorSystem, policy: TolerancePolicy = DEFAULT_POLICY) -> GramForm:
    """Sum of rank-one forms a (x) a over the system, with its inverse."""
    m = system.covectors
    g = m.T @ m
    g = (g + g.T) / 2.0
    w, v = np.linalg.eigh(g)
    if np.abs(w).min() <= policy.eps_rank * np.abs(w).max():
        raise DegenerateForm(f"{system.name}: quadratic form is singular")
    g_inv = (v / w) @ v.T
    g_inv = (g_inv + g_inv.T) / 2.0
    for arr in (g, g_inv):
        arr.setflags(write=False)
    cond = float(np.abs(w).max() / np.abs(w).min())
    return GramForm(g=g, g_inv=g_inv, dim=system.dim, cond=cond, eig_min=float(w[0]))


def cvee(alpha, form: GramForm) -> np.ndarray:
    """The vector dual to covector ``alpha``: the form applied inversely.

    Satisfies ``g(cvee(alpha), v) == alpha(v)`` for every vector ``v``.
    """
    return form.g_inv @ np.asarray(alpha, dtype=float)


def canonical_direction(v, policy: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Scale ``v`` by +-1 so its first coordinate above the zero tolerance is positive.

    Idempotent; maps ``v`` and ``-v`` to the same output.
    """
    v = np.asarray(v, dtype=float)
    idx = np.nonzero(np.abs(v) >= policy.eps_rank)[0]
    if idx.size == 0:
        raise ZeroCovector("all coordinates below eps_rank")
    return -v if v[idx[0]] < 0 else v.copy()


def random_regular_point(
    system: CovectorSystem,
    policy: TolerancePolicy = DEFAULT_POLICY,
    max_draws: int = 10_000,
) -> np.ndarray:
    """Sample a point with ``|a(x)| >= eps_regular * |a| * |x|`` for all covectors.

    Rejection sampling from a standard normal; deterministic for a given
    ``policy.rng_seed``.
    """
    rng = policy.rng()
    m = system.covectors
    norms = np.linalg.norm(m, axis=1)
    for _ in range(max_draws):
        x = rng.standard_normal(system.dim)
        margins = np.abs(m @ x) / (norms * np.linalg.norm(x))
        if margins.min() >= policy.eps_regular:
            return x
    raise SamplingExhausted(
        f"no regular point within {max_draws} draws at margin {policy.eps_regular}"
    )


def inverse_sqrt_spd(g, eps: float = DEFAULT_POLICY.eps_rank) -> np.ndarray:
    """Inverse symmetric square root of a positive definite matrix.

    Raises :class:`IndefiniteForm` when an eigenvalue is not strictly
    positive (relative to the largest one).
    """
    g = np.asarray(g, dtype=float)
    w, v = np.linalg.eigh(g)
    if w.min() <= eps * abs(w.max()):
        raise IndefiniteForm("form has a non-positive eigenvalue")
    return (v / np.sqrt(w)) @ v.T


def nullspace_basis(mat, eps: float = DEFAULT_POLICY.eps_rank) -> np.ndarray:
    """Orthonormal rows spanning the null space ``{x : mat @ x = 0}``.

    Built from the reduced row echelon form so axis-aligned inputs get
    axis-aligned bases (keeps restriction output readable), then
    orthonormalised with deterministic signs.
    """
    a = np.atleast_2d(np.asarray(mat, dtype=float)).copy()
    nrow, ncol = a.shape
    scale = np.abs(a).max()
    if scale == 0.0:
        return np.eye(ncol)
    pivots = []
    r = 0
    for c in range(ncol):
        if r == nrow:
            break
        p = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[p, c]) <= eps * scale:
            continue
        a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        mask = np.arange(nrow) != r
        a[mask] -= np.outer(a[mask, c], a[r])
        pivots.append(c)
        r += 1
    free = [c for c in range(ncol) if c not in pivots]
    if not free:
        return np.zeros((0, ncol))
    vecs = np.zeros((len(free), ncol))
    for k, fc in enumerate(free):
        vecs[k, fc] = 1.0
        for i, pc in enumerate(pivots):
            vecs[k, pc] = -a[i, fc]
    q, rr = np.linalg.qr(vecs.T)
    q = q * np.sign(np.diag(rr))
    return np.ascontiguousarray(q.T)


def row_space_basis(mat, eps: float = DEFAULT_POLICY.eps_rank) -> np.ndarray:
    """Orthonormal rows spanning the row space, via Gram-Schmidt in row order."""
    mat = np.atleast_2d(np.asarray(mat, dtype=float))
    basis: list[np.ndarray] = []
    for row in mat:
        r = row.astype(float)
        for _ in range(2):  # second pass restores orthogonality lost to roundoff
            for b in basis:
                r = r - (r @ b) * b
        nr = np.linalg.norm(r)
        if nr > eps * max(np.linalg.norm(row), 1.0):
            basis.append(r / nr)
    if not basis:
        return np.zeros((0, mat.shape[1]))
    return np.array(basis)


def find_covector(system: CovectorSystem, vector, eps: float = 1e-8):
    """Index of the system covector collinear with ``vector``, or None."""
    v = np.asarray(vector, dtype=float)
    nv = np.linalg.norm(v)
    if nv == 0.0:
        return None
    u = v / nv
    rows = system.covectors
    units = rows / np.linalg.norm(rows, axis=1)[:, None]
    sins = np.linalg.norm(units - np.outer(units @ u, u), axis=1)
    hits = np.nonzero(sins < eps)[0]
    return int(hits[0]) if hits.size else None


def same_covector_set(rows_a, rows_b, tol: float = 1e-9) -> bool:
    """Whether two covector lists agree as sets, up to per-covector sign.

    Rows are sign-normalised and matched greedily within ``tol`` (max-abs
    coordinate difference).  Useful in tests and demos.
    """
    a = np.atleast_2d(np.asarray(rows_a, dtype=float))
    b = np.atleast_2d(np.asarray(rows_b, dtype=float))
    if a.shape != b.shape:
        return False
    a = np.array([canonical_direction(r) for r in a])
    b = np.array([canonical_direction(r) for r in b])
    unused = list(range(b.shape[0]))
    for r in a:
        for pos, k in enumerate(unused):
            if np.abs(r - b[k]).max() <= tol * max(1.0, np.abs(r).max()):
                unused.pop(pos)
                break
        else:
            return False
    return True
