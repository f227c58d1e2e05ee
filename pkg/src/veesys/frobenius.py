"""Numerical verification path through the logarithmic Frobenius structure.

For a covector system A and a regular point x the third-derivative matrices
of the prepotential ``F(x) = (1/4) sum a(x)^2 log a(x)^2`` are

    F_a = sum_A  a(dir) / a(x) * a (x) a,

with the constant convention chosen so that ``F_x`` equals the constant
form ``sum a (x) a`` exactly.  The induced multiplication on tangent
vectors is

    u * v = sum_A  a(u) a(v) / a(x) * a^,

whose associativity is equivalent to the WDVV equations, i.e. to the
commutativity of the operators ``G^{-1} F_i``.  These residuals provide a
verification route independent of the two-plane checks in
:mod:`veesys.veecheck`.
"""

from __future__ import annotations

import numpy as np

from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    GramForm,
    SingularPoint,
    TolerancePolicy,
    gram,
)

__all__ = [
    "associativity_residual",
    "fa_matrix",
    "frobenius_residual",
    "multiply",
    "prepotential",
    "wdvv_residual",
]


def _values_at(system, x, policy):
    """a(x) for every covector, guarding against singular points."""
    x = np.asarray(x, dtype=float)
    ax = system.covectors @ x
    norms = np.linalg.norm(system.covectors, axis=1)
    if np.any(np.abs(ax) < policy.eps_rank * norms * np.linalg.norm(x)):
        raise SingularPoint(f"{system.name}: point lies on a hyperplane")
    return ax


def prepotential(
    system: CovectorSystem, x, policy: TolerancePolicy = DEFAULT_POLICY
) -> float:
    """(1/4) sum a(x)^2 log a(x)^2 at a regular point."""
    ax = _values_at(system, x, policy)
    return 0.25 * float(np.sum(ax * ax * np.log(ax * ax)))


def fa_matrix(
    system: CovectorSystem, x, a, policy: TolerancePolicy = DEFAULT_POLICY
) -> np.ndarray:
    """Third-derivative matrix sum a(dir)/a(x) * a (x) a; symmetric.

    With ``a = x`` this returns the constant form exactly.
    """
    ax = _values_at(system, x, policy)
    rows = system.covectors
    w = (rows @ np.asarray(a, dtype=float)) / ax
    m = rows.T @ (w[:, None] * rows)
    return (m + m.T) / 2.0


def multiply(
    system: CovectorSystem,
    x,
    u,
    v,
    policy: TolerancePolicy = DEFAULT_POLICY,
    form: GramForm | None = None,
) -> np.ndarray:
    """Tangent-space product sum a(u) a(v) / a(x) * a^ at a regular point.

    Exactly commutative in (u, v); ``multiply(A, x, x, v) == v`` up to
    roundoff, so the identity field coincides with the Euler field.
    """
    ax = _values_at(system, x, policy)
    rows = system.covectors
    coeff = (rows @ np.asarray(u, dtype=float)) * (rows @ np.asarray(v, dtype=float)) / ax
    if form is None:
        form = gram(system, policy)
    return form.g_inv @ (rows.T @ coeff)


def wdvv_residual(
    system: CovectorSystem,
    x,
    policy: TolerancePolicy = DEFAULT_POLICY,
    form: GramForm | None = None,
) -> float:
    """Largest normalised commutator norm || [G^-1 F_i, G^-1 F_j] ||_F.

    Normalised by ``max(1, ||G^-1 F_i|| * ||G^-1 F_j||)`` so the value is
    comparable across systems and scales.
    """
    if form is None:
        form = gram(system, policy)
    ax = _values_at(system, x, policy)
    rows = system.covectors
    dim = system.dim
    khat = []
    for i in range(dim):
        w = rows[:, i] / ax
        fi = rows.T @ (w[:, None] * rows)
        khat.append(form.g_inv @ fi)
    worst = 0.0
    for i in range(dim):
        for j in range(i + 1, dim):
            comm = khat[i] @ khat[j] - khat[j] @ khat[i]
            denom = max(
                1.0, np.linalg.norm(khat[i]) * np.linalg.norm(khat[j])
            )
            worst = max(worst, float(np.linalg.norm(comm)) / denom)
    return worst


def associativity_residual(
    system: CovectorSystem,
    x,
    u,
    v,
    w,
    policy: TolerancePolicy = DEFAULT_POLICY,
    form: GramForm | None = None,
) -> float:
    """|| (u*v)*w - u*(v*w) || relative to the size of the two products."""
    if form is None:
        form = gram(system, policy)
    left = multiply(system, x, multiply(system, x, u, v, policy, form), w, policy, form)
    right = multiply(system, x, u, multiply(system, x, v, w, policy, form), policy, form)
    denom = max(1.0, np.linalg.norm(left), np.linalg.norm(right))
    return float(np.linalg.norm(left - right)) / denom


def frobenius_residual(
    system: CovectorSystem,
    x,
    u,
    v,
    w,
    policy: TolerancePolicy = DEFAULT_POLICY,
    form: GramForm | None = None,
) -> float:
    """| <u*v, w> - <u, v*w> | relative to the size of the two pairings.

    Both pairings equal sum a(u) a(v) a(w) / a(x), so this vanishes for
    every system, vee or not; it only exercises the implementation.
    """
    if form is None:
        form = gram(system, policy)
    uv = multiply(system, x, u, v, policy, form)
    vw = multiply(system, x, v, w, policy, form)
    left = float(uv @ form.g @ np.asarray(w, dtype=float))
    right = float(np.asarray(u, dtype=float) @ form.g @ vw)
    denom = max(1.0, abs(left), abs(right))
    return abs(left - right) / denom
