"""Equivalence of covector systems up to an invertible linear map.

Two systems are equivalent when an invertible map carries one onto the
other (up to per-covector sign).  Because the two-plane conditions are
covariant under simultaneous transformation of covectors and form, this
reduces to an orthogonal matching problem after normalising each system so
its quadratic form is the identity: find a signed bijection preserving all
pairwise inner products, reconstruct the orthogonal map from a spanning
prefix, and verify it globally.

The search assigns a spanning prefix of ``dim`` covectors depth first,
pruning with per-covector invariants (norm and the sorted profile of
absolute inner products); once the prefix is placed the map is determined,
so the remaining covectors are matched by direct image lookup rather than
search.  All comparisons are tolerance based on sorted arrays; no
quantisation grids are involved, so nearly-identical inputs coming from
different construction routes cannot fall on opposite sides of a hash
boundary.
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
)

__all__ = ["Certificate", "equivalent", "normalize_to_unit_gram"]


@dataclass(frozen=True, eq=False)
class Certificate:
    """Witness of equivalence between unit-form-normalised systems.

    ``matrix`` is orthogonal and carries normalised source covector ``i``
    onto ``signs[i]`` times normalised target covector ``pairing[i]``, with
    worst coordinate deviation ``max_error``.
    """

    matrix: np.ndarray
    pairing: tuple[int, ...]
    signs: tuple[int, ...]
    max_error: float


def normalize_to_unit_gram(
    system: CovectorSystem, policy: TolerancePolicy = DEFAULT_POLICY
) -> CovectorSystem:
    """Transform covectors by the inverse square root of their own form,
    so the transformed form is the identity.  Requires a definite form."""
    form = gram(system, policy)
    w = inverse_sqrt_spd(form.g, policy.eps_rank)
    return CovectorSystem(
        name=f"{system.name}~unit",
        dim=system.dim,
        covectors=system.covectors @ w,
        params=dict(system.params),
        meta=dict(system.meta),
    )


def _sorted_close(a, b, tol):
    a = np.sort(np.asarray(a).ravel())
    b = np.sort(np.asarray(b).ravel())
    return a.shape == b.shape and (np.abs(a - b) <= tol).all()


def _spanning_order(rows):
    """Row order that puts a maximally independent prefix first (greedy
    residual pivoting), followed by the rest in index order."""
    rows = np.asarray(rows, dtype=float)
    n, dim = rows.shape
    work = rows.copy()
    chosen = []
    for _ in range(dim):
        norms = np.linalg.norm(work, axis=1)
        norms[chosen] = -1.0
        best = int(np.argmax(norms))
        if norms[best] <= 1e-12:
            break
        chosen.append(best)
        q = work[best] / np.linalg.norm(work[best])
        work = work - np.outer(work @ q, q)
    rest = [i for i in range(n) if i not in chosen]
    return chosen, rest


def equivalent(
    a: CovectorSystem,
    b: CovectorSystem,
    policy: TolerancePolicy = DEFAULT_POLICY,
    tol: float = 1e-6,
):
    """Certificate for equivalence of ``a`` and ``b``, or None.

    Deterministic; raises :class:`veesys.core.IndefiniteForm` when a form
    is not positive definite.
    """
    if a.dim != b.dim or a.count != b.count:
        return None
    src = normalize_to_unit_gram(a, policy).covectors
    tgt = normalize_to_unit_gram(b, policy).covectors
    n, dim = src.shape

    ns = np.linalg.norm(src, axis=1)
    nt = np.linalg.norm(tgt, axis=1)
    if not _sorted_close(ns, nt, tol):
        return None
    gs = src @ src.T
    gt = tgt @ tgt.T
    if not _sorted_close(np.abs(gs), np.abs(gt), tol):
        return None
    fs = np.sort(np.abs(gs), axis=1)
    ft = np.sort(np.abs(gt), axis=1)
    candidates = []
    for i in range(n):
        ok = (np.abs(ns[i] - nt) <= tol) & (np.abs(fs[i] - ft) <= tol).all(axis=1)
        cand = np.nonzero(ok)[0]
        if cand.size == 0:
            return None
        candidates.append([int(k) for k in cand])

    prefix, _ = _spanning_order(src)
    if len(prefix) < dim:
        return None  # cannot happen for valid systems

    assigned_k: list[int] = []
    assigned_s: list[int] = []
    used = set()

    def try_complete():
        p_src = src[prefix]
        p_tgt = tgt[assigned_k] * np.array(assigned_s, dtype=float)[:, None]
        try:
            q = np.linalg.solve(p_src, p_tgt).T
        except np.linalg.LinAlgError:
            return None
        if np.abs(q @ q.T - np.eye(dim)).max() > 100 * tol:
            return None
        images = src @ q.T
        pairing = [-1] * n
        signs = [0] * n
        taken = set()
        max_err = 0.0
        for i in range(n):
            d_plus = np.abs(images[i][None, :] - tgt).max(axis=1)
            d_minus = np.abs(images[i][None, :] + tgt).max(axis=1)
            best = int(np.argmin(np.minimum(d_plus, d_minus)))
            err = min(d_plus[best], d_minus[best])
            if err > tol * max(1.0, ns[i]) or best in taken:
                return None
            taken.add(best)
            pairing[i] = best
            signs[i] = 1 if d_plus[best] <= d_minus[best] else -1
            max_err = max(max_err, float(err))
        return Certificate(
            matrix=q,
            pairing=tuple(pairing),
            signs=tuple(signs),
            max_error=max_err,
        )

    def dfs(pos):
        if pos == dim:
            return try_complete()
        i = prefix[pos]
        for k in candidates[i]:
            if k in used:
                continue
            sign_options = None
            consistent = True
            for j_pos in range(pos):
                j = prefix[j_pos]
                kj, sj = assigned_k[j_pos], assigned_s[j_pos]
                lhs = gs[i, j]
                rhs = gt[k, kj] * sj
                if abs(abs(lhs) - abs(rhs)) > tol:
                    consistent = False
                    break
                if abs(lhs) > tol:
                    s = 1 if lhs * rhs > 0 else -1
                    if sign_options is None:
                        sign_options = (s,)
                    elif sign_options != (s,):
                        consistent = False
                        break
            if not consistent:
                continue
            for s in sign_options if sign_options is not None else (1, -1):
                assigned_k.append(k)
                assigned_s.append(s)
                used.add(k)
                result = dfs(pos + 1)
                used.discard(k)
                assigned_k.pop()
                assigned_s.pop()
                if result is not None:
                    return result
        return None

    return dfs(0)
