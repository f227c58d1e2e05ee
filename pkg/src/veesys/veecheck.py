"""Two-plane condition checks deciding whether a system is a vee-system.

The verdict is algebraic: for every two-dimensional plane containing at
least two covectors and every covector ``a`` in that plane, the combination
``sum_b b(a^) b^`` over the plane members must be proportional to ``a^``,
where ``x^`` denotes the vector dual to ``x`` under the form ``sum a (x) a``.
The proportionality constant is never assumed; it is estimated by least
squares and the residual compared against a scale that makes the verdict
invariant under global rescaling and orthogonal coordinate changes.

A geometric reformulation (:func:`check_vee_geometric`) normalises the form
to the identity and asks each plane's member set to be either reducible
(splitting into two mutually orthogonal parts) or "well-distributed" in its
plane (rank-one forms summing to a multiple of the in-plane identity).
Both routes must agree; the test suite enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    TolerancePolicy,
    gram,
    inverse_sqrt_spd,
    row_space_basis,
)

__all__ = [
    "PlaneClass",
    "VeeReport",
    "VeeViolation",
    "check_reducible",
    "check_vee",
    "check_vee_geometric",
    "check_well_distributed",
    "plane_partition",
]

# Fixed probe directions for sign-normalising Plucker coordinates; any
# generic pair works, these are arbitrary but frozen for determinism.
_PROBE_SEED = 1234


@dataclass(frozen=True, eq=False)
class PlaneClass:
    """All system covectors lying in one two-dimensional plane.

    ``members`` indexes the enclosing system; ``basis`` holds two member
    covectors spanning the plane.
    """

    members: tuple[int, ...]
    basis: np.ndarray


@dataclass(frozen=True, eq=False)
class VeeViolation:
    plane: PlaneClass
    alpha: int
    residual: float


@dataclass(frozen=True, eq=False)
class VeeReport:
    is_vee: bool
    violations: tuple[VeeViolation, ...]
    lambdas: dict
    gram_condition_number: float
    planes: tuple[PlaneClass, ...]


def _plane_members(units, i, j, eps):
    """Indices of rows lying in the span of rows i and j (relative residual)."""
    q1 = units[i]
    w = units[j] - (units[j] @ q1) * q1
    q2 = w / np.linalg.norm(w)
    resid = units - np.outer(units @ q1, q1) - np.outer(units @ q2, q2)
    return tuple(np.nonzero(np.linalg.norm(resid, axis=1) < eps)[0].tolist())


def plane_partition(
    system: CovectorSystem, policy: TolerancePolicy = DEFAULT_POLICY
) -> list[PlaneClass]:
    """Partition all unordered covector pairs by the plane they span.

    Planes are keyed by quantised Plucker coordinates of an orthonormal
    basis, which groups the O(n^2) pairs without pairwise plane comparisons;
    a coverage pass afterwards repairs any quantisation misses, so the
    result does not depend on the hashing.
    """
    rows = system.covectors
    n = rows.shape[0]
    if n < 2:
        return []
    units = rows / np.linalg.norm(rows, axis=1)[:, None]
    d = system.dim
    probe_rng = np.random.default_rng(_PROBE_SEED)
    probes = probe_rng.standard_normal((2, d * (d - 1) // 2))

    pi, pj = np.triu_indices(n, k=1)
    ui, uj = units[pi], units[pj]
    cos = np.einsum("pd,pd->p", ui, uj)
    w = uj - cos[:, None] * ui
    q2 = w / np.linalg.norm(w, axis=1)[:, None]
    ti, tj = np.triu_indices(d, k=1)
    plucker = ui[:, :, None] * q2[:, None, :] - q2[:, :, None] * ui[:, None, :]
    plucker = plucker[:, ti, tj]
    sign = plucker @ probes[0]
    weak = np.abs(sign) < 1e-6
    if weak.any():
        sign = np.where(weak, plucker @ probes[1], sign)
    plucker = plucker * np.sign(sign)[:, None]
    keys = np.round(plucker / (10.0 * policy.eps_rank)).astype(np.int64)
    _, first = np.unique(keys, axis=0, return_index=True)

    # Membership masks for the representative planes, in one batch.
    classes: dict[tuple[int, ...], tuple[int, int]] = {}
    q1_rep, q2_rep = units[pi[first]], q2[first]
    for start in range(0, len(first), 1024):
        sl = slice(start, start + 1024)
        c1 = units @ q1_rep[sl].T  # (n, block)
        c2 = units @ q2_rep[sl].T
        resid = (
            units[None, :, :]
            - c1.T[:, :, None] * q1_rep[sl][:, None, :]
            - c2.T[:, :, None] * q2_rep[sl][:, None, :]
        )
        masks = np.linalg.norm(resid, axis=2) < policy.eps_rank
        for b in range(masks.shape[0]):
            members = tuple(np.nonzero(masks[b])[0].tolist())
            k = first[start + b]
            classes.setdefault(members, (int(pi[k]), int(pj[k])))

    # Coverage: every pair must sit inside exactly one class.
    member_list = list(classes)
    indicator = np.zeros((len(member_list), n), dtype=float)
    for row, members in enumerate(member_list):
        indicator[row, list(members)] = 1.0
    shared = indicator.T @ indicator
    missing = np.argwhere((shared == 0) & np.triu(np.ones((n, n), dtype=bool), k=1))
    for i, j in missing:
        members = _plane_members(units, int(i), int(j), policy.eps_rank)
        classes.setdefault(members, (int(i), int(j)))

    out = []
    for members in sorted(classes):
        basis = rows[list(members[:2])].copy()
        basis.setflags(write=False)
        out.append(PlaneClass(members=members, basis=basis))
    return out


def check_vee(
    system: CovectorSystem, policy: TolerancePolicy = DEFAULT_POLICY
) -> VeeReport:
    """Decide the two-plane conditions for the whole system.

    Residuals are measured against ``eps_residual * max|a|^3 / s_min^2``
    where ``s_min`` is the smallest eigenvalue of the quadratic form; both
    the residual and this scale transform like ``1/t`` under a global
    rescaling by ``t``, so the verdict is scale invariant.
    """
    form = gram(system, policy)
    rows = system.covectors
    duals = rows @ form.g_inv  # row k = dual vector of covector k
    pairings = rows @ duals.T  # [i, j] = a_i(a_j^)
    max_norm = np.linalg.norm(rows, axis=1).max()
    scale = max_norm**3 / (abs(form.eig_min) ** 2)
    threshold = policy.eps_residual * scale

    planes = tuple(plane_partition(system, policy))
    violations = []
    lambdas = {}
    for pi, plane in enumerate(planes):
        m = list(plane.members)
        dm = duals[m]
        pm = pairings[np.ix_(m, m)]
        combos = pm.T @ dm  # row a = sum_b b(a^) b^
        for a, idx in enumerate(m):
            target = duals[idx]
            lam = float(combos[a] @ target) / float(target @ target)
            resid = float(np.linalg.norm(combos[a] - lam * target))
            lambdas[(pi, idx)] = lam
            if resid > threshold:
                violations.append(VeeViolation(plane=plane, alpha=idx, residual=resid))
    return VeeReport(
        is_vee=not violations,
        violations=tuple(violations),
        lambdas=lambdas,
        gram_condition_number=form.cond,
        planes=planes,
    )


def check_well_distributed(
    covectors, dim: int, policy: TolerancePolicy = DEFAULT_POLICY
):
    """The constant lam with sum a (x) a = lam * Id, or None if there is none."""
    rows = np.atleast_2d(np.asarray(covectors, dtype=float))
    m = rows.T @ rows
    lam = float(np.trace(m)) / dim
    resid = np.linalg.norm(m - lam * np.eye(dim))
    if resid <= policy.eps_residual * max(np.linalg.norm(m), 1e-300):
        return lam
    return None


def check_reducible(covectors, policy: TolerancePolicy = DEFAULT_POLICY):
    """A bipartition into two mutually orthogonal non-empty blocks, or None.

    Computed as connected components of the non-orthogonality graph; the
    first block is the component of the first covector.
    """
    rows = np.atleast_2d(np.asarray(covectors, dtype=float))
    n = rows.shape[0]
    if n < 2:
        raise ValueError("need at least two covectors")
    norms = np.linalg.norm(rows, axis=1)
    dots = np.abs(rows @ rows.T)
    adj = dots > policy.eps_rank * np.outer(norms, norms)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.nonzero(adj[i])[0]:
            if j not in seen:
                seen.add(int(j))
                stack.append(int(j))
    if len(seen) == n:
        return None
    first = sorted(seen)
    rest = sorted(set(range(n)) - seen)
    return first, rest


def check_vee_geometric(
    system: CovectorSystem, policy: TolerancePolicy = DEFAULT_POLICY
) -> bool:
    """Geometric route: normalise the form to the identity, then require each
    plane class to be reducible or well-distributed within its plane."""
    form = gram(system, policy)
    w = inverse_sqrt_spd(form.g, policy.eps_rank)
    normalized = system.covectors @ w
    if check_well_distributed(normalized, system.dim, policy) is None:
        return False
    for plane in plane_partition(system, policy):
        rows = normalized[list(plane.members)]
        if check_reducible(rows, policy) is not None:
            continue
        basis = row_space_basis(rows[:2], policy.eps_rank)
        inplane = rows @ basis.T
        if check_well_distributed(inplane, 2, policy) is None:
            return False
    return True
