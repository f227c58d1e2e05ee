"""Restriction of a covector system to an intersection subspace.

Given a subsystem B (the full intersection of the system with a subspace of
the dual), the remaining covectors are projected orthogonally onto
``L_B = ∩_{b in B} ker b`` and re-expressed in an orthonormal basis of
``L_B``.  Collinear projections are merged into a single covector by the
root-sum-square rule ``lam^2 = sum lam_i^2``, which preserves the summed
rank-one form exactly.  The restricted set of a vee-system is again a
vee-system; :func:`limit_check` and :func:`tangency_check` probe the two
limit statements behind that fact numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    EmptyRestriction,
    EmptySubspace,
    SingularPoint,
    TolerancePolicy,
    canonical_direction,
    collinear_groups,
    gram,
    nullspace_basis,
    row_space_basis,
)
from .frobenius import multiply

__all__ = [
    "MergeGroup",
    "RestrictionResult",
    "Subspace",
    "limit_check",
    "regular_point_in_subspace",
    "restrict",
    "subspace_for",
    "subsystem_of",
    "tangency_check",
]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Orthonormal bases for an intersection subspace and its normal space.

    ``basis`` has ``sub_dim`` rows spanning L_B; ``normal_basis`` has
    ``ambient_dim - sub_dim`` rows spanning the span of B.
    """

    basis: np.ndarray
    normal_basis: np.ndarray
    ambient_dim: int
    sub_dim: int


@dataclass(frozen=True, eq=False)
class MergeGroup:
    """Provenance of one merged covector: parent indices, their scalars
    along the shared direction, and the root-sum-square result."""

    sources: tuple[int, ...]
    lambdas: tuple[float, ...]
    merged: float


@dataclass(frozen=True, eq=False)
class RestrictionResult:
    system: CovectorSystem
    merge_log: tuple[MergeGroup, ...]
    subspace: Subspace


def subsystem_of(system: CovectorSystem, covectors, policy: TolerancePolicy = DEFAULT_POLICY):
    """Indices of all system covectors lying in the span of the given ones."""
    u = np.atleast_2d(np.asarray(covectors, dtype=float))
    if u.shape[0] == 0:
        raise ValueError("need at least one covector to span a subspace")
    q = row_space_basis(u, policy.eps_rank)
    rows = system.covectors
    resid = rows - (rows @ q.T) @ q
    norms = np.linalg.norm(rows, axis=1)
    hits = np.linalg.norm(resid, axis=1) <= policy.eps_rank * norms
    return [int(i) for i in np.nonzero(hits)[0]]


def subspace_for(
    system: CovectorSystem, b_indices, policy: TolerancePolicy = DEFAULT_POLICY
) -> Subspace:
    """The intersection subspace of the hyperplanes of the covectors at ``b_indices``."""
    b = system.covectors[list(b_indices)]
    normal = row_space_basis(b, policy.eps_rank)
    if normal.shape[0] >= system.dim:
        raise EmptySubspace("subsystem spans the whole space")
    basis = nullspace_basis(b, policy.eps_rank)
    return Subspace(
        basis=basis,
        normal_basis=normal,
        ambient_dim=system.dim,
        sub_dim=basis.shape[0],
    )


def restrict(
    system: CovectorSystem, b_indices, policy: TolerancePolicy = DEFAULT_POLICY
) -> RestrictionResult:
    """Restrict the system along the subsystem generated by ``b_indices``.

    The index set is first closed under span-intersection, so any set of
    covectors selecting the subspace works.  The result is a full-rank
    system in ``sub_dim`` coordinates (reduced further when the projections
    span less), with a merge log tying every output covector back to its
    parents.
    """
    seed = system.covectors[list(b_indices)]
    closed = subsystem_of(system, seed, policy)
    sub = subspace_for(system, closed, policy)
    closed_set = set(closed)
    c_idx = [i for i in range(system.count) if i not in closed_set]
    if not c_idx:
        raise EmptyRestriction("no covectors left outside the subsystem")
    proj = system.covectors[c_idx] @ sub.basis.T
    norms = np.linalg.norm(proj, axis=1)
    orig = np.linalg.norm(system.covectors[c_idx], axis=1)
    keep = norms > policy.eps_rank * orig
    c_idx = [i for i, k in zip(c_idx, keep) if k]
    proj = proj[keep]
    if proj.shape[0] == 0:
        raise EmptyRestriction("all projections vanish on the subspace")
    proj = np.array([canonical_direction(r, policy) for r in proj])

    merged_rows = []
    merge_log = []
    for group in collinear_groups(proj, policy.eps_rank):
        lambdas = tuple(float(np.linalg.norm(proj[i])) for i in group)
        lam = float(np.sqrt(sum(l * l for l in lambdas)))
        direction = proj[group[0]] / np.linalg.norm(proj[group[0]])
        merged_rows.append(lam * direction)
        merge_log.append(
            MergeGroup(
                sources=tuple(c_idx[i] for i in group),
                lambdas=lambdas,
                merged=lam,
            )
        )
    rows = np.array(merged_rows)
    meta = {"parent": system.name, "subsystem_size": len(closed)}
    restricted = CovectorSystem(
        name=f"{system.name}|restriction", dim=sub.sub_dim, covectors=rows,
        params={}, meta=meta,
    )
    return RestrictionResult(
        system=restricted, merge_log=tuple(merge_log), subspace=sub
    )


def regular_point_in_subspace(
    system: CovectorSystem,
    b_indices,
    policy: TolerancePolicy = DEFAULT_POLICY,
):
    """A seeded ambient point of L_B clear of the surviving hyperplanes.

    Returns ``(x0, result)`` with ``x0`` in ambient coordinates and
    ``result`` the restriction used to screen it.
    """
    from .core import random_regular_point

    result = restrict(system, b_indices, policy)
    xs = random_regular_point(result.system, policy)
    return result.subspace.basis.T @ xs, result


def limit_check(
    system: CovectorSystem,
    b_indices,
    x0,
    u,
    v,
    policy: TolerancePolicy = DEFAULT_POLICY,
    delta: float = 1e-6,
) -> float:
    """Compare the ambient product near L_B with the restricted product.

    Evaluates the ambient multiplication at ``x0 + delta * r`` for a seeded
    off-subspace direction ``r`` and the restricted system's multiplication
    at ``x0``, both with the same tangent vectors, and returns the relative
    deviation.  The deviation is first order in ``delta`` for vee-systems.
    """
    x0 = np.asarray(x0, dtype=float)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    result = restrict(system, b_indices, policy)
    sub = result.subspace
    normals = sub.normal_basis
    scale_x = max(np.linalg.norm(x0), 1.0)
    if np.abs(normals @ x0).max() > 1e-8 * scale_x:
        raise ValueError("x0 is not in the intersection subspace")
    for name, vec in (("u", u), ("v", v)):
        if np.abs(normals @ vec).max() > 1e-8 * max(np.linalg.norm(vec), 1.0):
            raise ValueError(f"{name} is not tangent to the subspace")
    xs = sub.basis @ x0
    rows = result.system.covectors
    margins = np.abs(rows @ xs) / (np.linalg.norm(rows, axis=1) * np.linalg.norm(xs))
    if margins.min() < policy.eps_rank:
        raise SingularPoint("x0 lies on a surviving hyperplane")

    rng = policy.rng()
    bnorms = np.linalg.norm(system.covectors[list(b_indices)], axis=1)
    for _ in range(100):
        r = rng.standard_normal(system.dim)
        r /= np.linalg.norm(r)
        offs = np.abs(system.covectors[list(b_indices)] @ r) / bnorms
        if offs.min() >= 0.1:
            break
    ambient = multiply(system, x0 + delta * r, u, v, policy)
    lifted = sub.basis.T @ multiply(result.system, xs, sub.basis @ u, sub.basis @ v, policy)
    return float(np.linalg.norm(ambient - lifted)) / max(1.0, np.linalg.norm(lifted))


def tangency_check(
    system: CovectorSystem,
    alpha_index: int,
    x,
    u,
    v,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> float:
    """How far the product of two hyperplane-tangent vectors leaves the plane.

    With ``a`` the covector at ``alpha_index`` and ``x, u, v`` annihilated by
    it, computes the product with the ``a`` term omitted and returns
    ``|a(u*v)|`` divided by the sum of absolute contributions (a cancellation
    measure).  Vanishes for vee-systems.
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    alpha = system.covectors[alpha_index]
    na = np.linalg.norm(alpha)
    if abs(alpha @ x) > 1e-8 * na * max(np.linalg.norm(x), 1.0):
        raise ValueError("x does not lie on the hyperplane of alpha")
    for name, vec in (("u", u), ("v", v)):
        if abs(alpha @ vec) > 1e-8 * na * max(np.linalg.norm(vec), 1.0):
            raise ValueError(f"{name} is not tangent to the hyperplane of alpha")
    others = [i for i in range(system.count) if i != alpha_index]
    rows = system.covectors[others]
    norms = np.linalg.norm(rows, axis=1)
    ax = rows @ x
    if np.any(np.abs(ax) < policy.eps_rank * norms * np.linalg.norm(x)):
        raise SingularPoint("x lies on another hyperplane of the system")
    form = gram(system, policy)
    duals = rows @ form.g_inv
    coeff = (rows @ u) * (rows @ v) / ax
    contributions = coeff * (duals @ alpha)
    total = float(contributions.sum())
    scale = float(np.abs(contributions).sum())
    return abs(total) / max(scale, 1e-300)
