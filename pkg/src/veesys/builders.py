"""Builders for every named covector system, in fixed coordinate realisations.

Coordinate conventions
----------------------
* The A family (and its deformation) lives in the sum-zero hyperplane of
  R^m and is expressed in the orthonormal basis
  ``u_k = (e_1 + ... + e_k - k e_{k+1}) / sqrt(k(k+1))``, ``k = 1..m-1``,
  so the ambient dimension equals the rank.
* ``E_8`` uses the even coordinate system: ``e_i +- e_j`` plus the
  half-integer vectors with an even number of minus signs.
* ``E_7`` consists of the E_8 roots orthogonal to ``e_7 + e_8``, written in
  the basis ``e_1..e_6, (e_7 - e_8)/sqrt(2)``.
* ``E_6`` consists of the E_8 roots orthogonal to both ``e_6 - e_7`` and
  ``e_7 + e_8``, written in the basis ``e_1..e_5, (e_6 + e_7 - e_8)/sqrt(3)``.
* ``H_3``/``H_4``/``I_2(m)`` use golden-ratio and cosine coordinates with
  all roots at unit length (single orbit, so no length parameter arises).
* Simple systems for E_6, E_7, E_8 and F_4 follow the Bourbaki numbering;
  see :func:`simple_roots`.

All builders emit one covector per +-pair, in canonical direction (first
nonzero coordinate positive).  Zero covectors produced by parameter
choices (for example K = 0 in the four-dimensional 18-covector family) are
dropped and counted in ``meta["dropped"]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    InvalidSpec,
    canonical_direction,
    collinear_groups,
    row_space_basis,
)

__all__ = [
    "SystemSpec",
    "a_family",
    "an_deformed",
    "b_family",
    "bn_deformed",
    "build",
    "build_e8_even_sign_variant",
    "e6",
    "e7",
    "e8",
    "f3_variant1",
    "f3_variant2",
    "f4",
    "fn_type",
    "h3",
    "h4",
    "i2",
    "parse_spec_string",
    "simple_roots",
    "theorem4",
    "theorem4_raw",
    "theorem4_rest_eij",
    "theorem4_rest_long",
]

PHI = (1.0 + np.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class SystemSpec:
    """A family name with its rank and parameters; see :func:`build`."""

    family: str
    rank: int | None = None
    params: dict = field(default_factory=dict)


def _finalize(name, rows, params=None, dedupe=False):
    """Canonicalise rows, drop zeros, reduce rank-deficient ambients."""
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    norms = np.abs(rows).max(axis=1)
    dropped = int((norms < DEFAULT_POLICY.eps_rank).sum())
    rows = rows[norms >= DEFAULT_POLICY.eps_rank]
    if rows.shape[0] == 0:
        raise InvalidSpec(f"{name}: every covector vanished for these parameters")
    rows = np.array([canonical_direction(r) for r in rows])
    if dedupe:
        rows = np.array([rows[g[0]] for g in collinear_groups(rows)])
    meta = {}
    if dropped:
        meta["dropped"] = dropped
    basis = row_space_basis(rows)
    if basis.shape[0] < rows.shape[1]:
        meta["reduced_from_dim"] = rows.shape[1]
        rows = rows @ basis.T
        rows = np.array([canonical_direction(r) for r in rows])
    return CovectorSystem(
        name=name, dim=rows.shape[1], covectors=rows, params=dict(params or {}), meta=meta
    )


def _sum_zero_basis(m: int) -> np.ndarray:
    """Orthonormal rows spanning the sum-zero hyperplane of R^m."""
    rows = []
    for k in range(1, m):
        u = np.zeros(m)
        u[:k] = 1.0
        u[k] = -float(k)
        rows.append(u / np.sqrt(k * (k + 1)))
    return np.array(rows)


def _pairs(n, both_signs):
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            r = np.zeros(n)
            r[i] = 1.0
            r[j] = -1.0
            rows.append(r.copy())
            if both_signs:
                r[j] = 1.0
                rows.append(r.copy())
    return rows


def _half_sums(n, coef):
    """coef * (e_1 +- e_2 +- ... +- e_n), one per sign pattern (first +)."""
    rows = []
    for signs in itertools.product((1.0, -1.0), repeat=n - 1):
        rows.append(coef * np.array((1.0,) + signs))
    return rows


def a_family(n: int) -> CovectorSystem:
    """Positive roots e_i - e_j of A_n, reduced to n coordinates."""
    if n < 1:
        raise InvalidSpec("A family needs rank n >= 1")
    raw = np.array(_pairs(n + 1, both_signs=False))
    rows = raw @ _sum_zero_basis(n + 1).T
    return _finalize(f"A_{n}", rows, {"n": n})


def b_family(n: int, lam: float = 1.0, name: str | None = None) -> CovectorSystem:
    """The family e_i +- e_j, lam * e_i; lam = 0, 1, 2 give D_n, B_n, C_n."""
    if n < 2:
        raise InvalidSpec("B family needs rank n >= 2")
    rows = _pairs(n, both_signs=True)
    rows += [lam * row for row in np.eye(n)]
    return _finalize(name or f"B_{n}(lambda={lam:g})", rows, {"n": n, "lambda": lam})


def f4(lam: float = 1.0) -> CovectorSystem:
    """e_i +- e_j, 2 lam e_i, lam (e_1 +- e_2 +- e_3 +- e_4)."""
    rows = _pairs(4, both_signs=True)
    rows += [2.0 * lam * row for row in np.eye(4)]
    rows += _half_sums(4, lam)
    return _finalize(f"F_4(lambda={lam:g})", rows, {"lambda": lam})


def _e8_raw() -> np.ndarray:
    rows = _pairs(8, both_signs=True)
    for signs in itertools.product((1.0, -1.0), repeat=7):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            rows.append(0.5 * np.array((1.0,) + signs))
    return np.array(rows)


def e8() -> CovectorSystem:
    """Positive part of E_8 in the even coordinate system (120 covectors)."""
    return _finalize("E_8", _e8_raw(), {})


def e7() -> CovectorSystem:
    """E_8 roots orthogonal to e_7 + e_8, reduced to 7 coordinates."""
    raw = _e8_raw()
    w = np.zeros(8)
    w[6] = w[7] = 1.0
    keep = np.abs(raw @ w) < 1e-12
    return _finalize("E_7", raw[keep] @ _e7_basis().T, {})


def e6() -> CovectorSystem:
    """E_8 roots orthogonal to e_6 - e_7 and e_7 + e_8, reduced to 6 coordinates."""
    raw = _e8_raw()
    w1 = np.zeros(8)
    w1[5], w1[6] = 1.0, -1.0
    w2 = np.zeros(8)
    w2[6] = w2[7] = 1.0
    keep = (np.abs(raw @ w1) < 1e-12) & (np.abs(raw @ w2) < 1e-12)
    return _finalize("E_6", raw[keep] @ _e6_basis().T, {})


def _e7_basis() -> np.ndarray:
    basis = np.zeros((7, 8))
    basis[:6, :6] = np.eye(6)
    basis[6, 6], basis[6, 7] = 1.0 / np.sqrt(2.0), -1.0 / np.sqrt(2.0)
    return basis


def _e6_basis() -> np.ndarray:
    basis = np.zeros((6, 8))
    basis[:5, :5] = np.eye(5)
    basis[5, 5] = basis[5, 6] = 1.0 / np.sqrt(3.0)
    basis[5, 7] = -1.0 / np.sqrt(3.0)
    return basis


def h3() -> CovectorSystem:
    """Icosahedral system: e_i plus cyclic shifts of (1, phi, 1/phi)/2 with signs."""
    rows = [row for row in np.eye(3)]
    base = np.array([1.0, PHI, 1.0 / PHI]) / 2.0
    for shift in range(3):
        shifted = np.roll(base, shift)
        for signs in itertools.product((1.0, -1.0), repeat=3):
            rows.append(shifted * np.array(signs))
    return _finalize("H_3", rows, {}, dedupe=True)


def h4() -> CovectorSystem:
    """120-cell system: e_i, (+-1/2)^4, and even permutations of (1, phi, 1/phi, 0)/2."""
    rows = [row for row in np.eye(4)]
    rows += _half_sums(4, 0.5)
    base = np.array([1.0, PHI, 1.0 / PHI, 0.0]) / 2.0
    for perm in itertools.permutations(range(4)):
        if _parity(perm) != 0:
            continue
        vec = base[list(perm)]
        for signs in itertools.product((1.0, -1.0), repeat=4):
            rows.append(vec * np.array(signs))
    return _finalize("H_4", rows, {}, dedupe=True)


def _parity(perm) -> int:
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inv % 2


def i2(m: int) -> CovectorSystem:
    """Dihedral system: m unit covectors at angles k pi / m."""
    if not float(m).is_integer() or int(m) < 3:
        raise InvalidSpec("I_2(m) needs integer m >= 3")
    m = int(m)
    angles = np.pi * np.arange(m) / m
    rows = np.column_stack([np.cos(angles), np.sin(angles)])
    return _finalize(f"I_2({m})", rows, {"m": m})


def an_deformed(c) -> CovectorSystem:
    """sqrt(c_i c_j) (f_i - f_j) for 1 <= i < j <= m, reduced to rank coordinates."""
    c = tuple(float(x) for x in np.atleast_1d(c))
    m = len(c)
    if m < 2:
        raise InvalidSpec("deformed A needs at least two parameters")
    rows = []
    for i in range(m):
        for j in range(i + 1, m):
            prod = c[i] * c[j]
            if prod < 0:
                raise InvalidSpec(f"negative radicand c_{i + 1}*c_{j + 1} = {prod:g}")
            r = np.zeros(m)
            r[i], r[j] = 1.0, -1.0
            rows.append(np.sqrt(prod) * r)
    rows = np.array(rows)
    if all(abs(x) > 0 for x in c):
        rows = rows @ _sum_zero_basis(m).T
    name = f"A_def(c={','.join(f'{x:g}' for x in c)})"
    return _finalize(name, rows, {"c": c})


def bn_deformed(gamma: float, c) -> CovectorSystem:
    """sqrt(c_i c_j)(f_i +- f_j) and sqrt(2 c_i (c_i + gamma)) f_i."""
    c = tuple(float(x) for x in np.atleast_1d(c))
    m = len(c)
    if m < 1:
        raise InvalidSpec("deformed B needs at least one parameter")
    rows = []
    for i in range(m):
        for j in range(i + 1, m):
            prod = c[i] * c[j]
            if prod < 0:
                raise InvalidSpec(f"negative radicand c_{i + 1}*c_{j + 1} = {prod:g}")
            for sign in (1.0, -1.0):
                r = np.zeros(m)
                r[i], r[j] = 1.0, sign
                rows.append(np.sqrt(prod) * r)
    for i in range(m):
        rad = 2.0 * c[i] * (c[i] + gamma)
        if rad < -DEFAULT_POLICY.eps_rank:
            raise InvalidSpec(f"negative radicand 2*c_{i + 1}*(c_{i + 1}+gamma) = {rad:g}")
        r = np.zeros(m)
        r[i] = np.sqrt(max(rad, 0.0))
        rows.append(r)
    name = f"B_def(gamma={gamma:g};c={','.join(f'{x:g}' for x in c)})"
    return _finalize(name, rows, {"gamma": gamma, "c": c})


def fn_type(n: int, lam: float, m_coef: float) -> CovectorSystem:
    """e_i +- e_j, lam e_i, M (e_1 +- e_2 +- ... +- e_n)."""
    if n < 2:
        raise InvalidSpec("F_n-type needs n >= 2")
    rows = _pairs(n, both_signs=True)
    rows += [lam * row for row in np.eye(n)]
    rows += _half_sums(n, m_coef)
    name = f"F_{n}-type(lambda={lam:g},M={m_coef:g})"
    return _finalize(name, rows, {"n": n, "lambda": lam, "M": m_coef})


def build_e8_even_sign_variant() -> CovectorSystem:
    """F_8-type covectors at lam = 0, M = 1/2, half-sums filtered to an even
    number of minus signs: 56 pair covectors plus 64 half-sums."""
    rows = _pairs(8, both_signs=True)
    for signs in itertools.product((1.0, -1.0), repeat=7):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            rows.append(0.5 * np.array((1.0,) + signs))
    return _finalize("E_8(even-sign variant)", rows, {"lambda": 0.0, "M": 0.5})


def theorem4_raw(lam: float, k_coef: float, m_coef: float) -> CovectorSystem:
    """The four-dimensional family e_i +- e_j (i < j <= 3), lam e_i, K e_4,
    M (e_1 +- e_2 +- e_3 +- e_4), with independent parameters."""
    rows = _pairs(3, both_signs=True)
    rows = [np.concatenate([r, [0.0]]) for r in rows]
    for i in range(3):
        r = np.zeros(4)
        r[i] = lam
        rows.append(r)
    r = np.zeros(4)
    r[3] = k_coef
    rows.append(r)
    rows += _half_sums(4, m_coef)
    name = f"T4_raw(lambda={lam:g},K={k_coef:g},M={m_coef:g})"
    return _finalize(name, rows, {"lambda": lam, "K": k_coef, "M": m_coef})


def theorem4(m_coef: float) -> CovectorSystem:
    """The family above on its solvable locus: lam and K derived from M."""
    m2 = m_coef * m_coef
    k2 = 2.0 * m2 * (2.0 * m2 - 1.0) / (m2 + 1.0)
    if k2 < -DEFAULT_POLICY.eps_rank:
        raise InvalidSpec(f"K^2 = {k2:g} < 0 at M = {m_coef:g} (needs M^2 >= 1/2)")
    lam = np.sqrt(2.0 * (2.0 * m2 + 1.0))
    k_coef = np.sqrt(max(k2, 0.0))
    sys = theorem4_raw(lam, k_coef, m_coef)
    return CovectorSystem(
        name=f"T4(M={m_coef:g})",
        dim=sys.dim,
        covectors=sys.covectors,
        params={"M": m_coef, "lambda": lam, "K": k_coef},
        meta=sys.meta,
    )


def theorem4_rest_eij(m_coef: float) -> CovectorSystem:
    """Three-dimensional family obtained from the 18-covector family along
    a covector of type e_i +- e_j."""
    m2 = m_coef * m_coef
    rad = 2.0 * (2.0 * m2 - 1.0) / (m2 + 1.0)
    if rad < -DEFAULT_POLICY.eps_rank:
        raise InvalidSpec(f"negative radicand at M = {m_coef:g} (needs M^2 >= 1/2)")
    rows = [
        np.array([np.sqrt(2.0 * (2.0 * m2 + 1.0)), 0.0, 0.0]),
        np.array([0.0, 2.0 * np.sqrt(2.0 * (m2 + 1.0)), 0.0]),
        np.array([0.0, 0.0, m_coef * np.sqrt(max(rad, 0.0))]),
    ]
    for s in (1.0, -1.0):
        rows.append(np.array([np.sqrt(2.0), s * np.sqrt(2.0), 0.0]))
        rows.append(np.array([m_coef * np.sqrt(2.0), 0.0, s * m_coef * np.sqrt(2.0)]))
    for s2, s3 in itertools.product((1.0, -1.0), repeat=2):
        rows.append(m_coef * np.array([1.0, 2.0 * s2, s3]))
    return _finalize(f"T4_eij(M={m_coef:g})", rows, {"M": m_coef})


def theorem4_rest_long(m_coef: float) -> CovectorSystem:
    """Three-dimensional family obtained from the 18-covector family along
    the covector e_1 + e_2 + e_3 - e_4."""
    m2 = m_coef * m_coef
    rows = []
    for i in range(3):
        for j in range(i + 1, 3):
            r = np.zeros(3)
            r[i] = r[j] = 1.0
            rows.append(r)
    rows += [np.sqrt(2.0) * row for row in np.eye(3)]
    rows.append(m_coef * np.sqrt(2.0 / (m2 + 1.0)) * np.ones(3))
    coef = 1.0 / np.sqrt(4.0 * m2 + 1.0)
    for i in range(3):
        for j in range(i + 1, 3):
            r = np.zeros(3)
            r[i], r[j] = 1.0, -1.0
            rows.append(coef * r)
    return _finalize(f"T4_long(M={m_coef:g})", rows, {"M": m_coef})


def f3_variant1(lam: float) -> CovectorSystem:
    """e_i +- e_j, sqrt(4 lam^2 + 2) e_i, lam sqrt(2) (e_1 +- e_2 +- e_3)."""
    rows = _pairs(3, both_signs=True)
    rows += [np.sqrt(4.0 * lam * lam + 2.0) * row for row in np.eye(3)]
    rows += _half_sums(3, lam * np.sqrt(2.0))
    return _finalize(f"F_3^1(lambda={lam:g})", rows, {"lambda": lam})


def f3_variant2(lam: float) -> CovectorSystem:
    """sqrt(2 lam^2 + 1)(e_1 +- e_2), sqrt(2)(e_2 +- e_3), sqrt(2)(e_1 +- e_3),
    2 sqrt(2 lam^2 + 1) e_3, 2 lam e_1, 2 lam e_2, lam (e_1 +- e_2 +- 2 e_3)."""
    root = np.sqrt(2.0 * lam * lam + 1.0)
    rows = []
    for s in (1.0, -1.0):
        rows.append(root * np.array([1.0, s, 0.0]))
        rows.append(np.sqrt(2.0) * np.array([0.0, 1.0, s]))
        rows.append(np.sqrt(2.0) * np.array([1.0, 0.0, s]))
    rows.append(np.array([0.0, 0.0, 2.0 * root]))
    rows.append(np.array([2.0 * lam, 0.0, 0.0]))
    rows.append(np.array([0.0, 2.0 * lam, 0.0]))
    for s2, s3 in itertools.product((1.0, -1.0), repeat=2):
        rows.append(lam * np.array([1.0, s2, 2.0 * s3]))
    return _finalize(f"F_3^2(lambda={lam:g})", rows, {"lambda": lam})


_ALIASES = {
    "A": "A",
    "B": "B",
    "C": "C",
    "D": "D",
    "E6": "E6",
    "E7": "E7",
    "E8": "E8",
    "E8_EVEN": "E8_even",
    "F4": "F4",
    "H3": "H3",
    "H4": "H4",
    "I2": "I2",
    "AN_DEF": "An_deformed",
    "AN_DEFORMED": "An_deformed",
    "BN_DEF": "Bn_deformed",
    "BN_DEFORMED": "Bn_deformed",
    "FN": "Fn_type",
    "FN_TYPE": "Fn_type",
    "T4": "Theorem4",
    "THEOREM4": "Theorem4",
    "T4_EIJ": "Theorem4_rest_eij",
    "THEOREM4_REST_EIJ": "Theorem4_rest_eij",
    "T4_LONG": "Theorem4_rest_long",
    "THEOREM4_REST_LONG": "Theorem4_rest_long",
    "F3_1": "F3_variant1",
    "F3_VARIANT1": "F3_variant1",
    "F3_2": "F3_variant2",
    "F3_VARIANT2": "F3_variant2",
}


def _need(spec: SystemSpec, key: str, default=None):
    if key in spec.params:
        return spec.params[key]
    if default is not None:
        return default
    raise InvalidSpec(f"{spec.family}: missing parameter '{key}'")


def _rank(spec: SystemSpec) -> int:
    n = spec.rank if spec.rank is not None else spec.params.get("n")
    if n is None:
        raise InvalidSpec(f"{spec.family}: missing rank n")
    if float(n) != int(n):
        raise InvalidSpec(f"{spec.family}: rank must be an integer, got {n}")
    return int(n)


def build(spec: SystemSpec) -> CovectorSystem:
    """Construct the covector system described by ``spec``."""
    family = _ALIASES.get(spec.family.upper())
    if family is None:
        raise InvalidSpec(f"unknown family '{spec.family}'")
    if family == "A":
        return a_family(_rank(spec))
    if family == "B":
        return b_family(_rank(spec), float(_need(spec, "lambda", 1.0)))
    if family == "C":
        n = _rank(spec)
        return b_family(n, 2.0, name=f"C_{n}")
    if family == "D":
        n = _rank(spec)
        return b_family(n, 0.0, name=f"D_{n}")
    if family == "E6":
        return e6()
    if family == "E7":
        return e7()
    if family == "E8":
        return e8()
    if family == "E8_even":
        return build_e8_even_sign_variant()
    if family == "F4":
        return f4(float(_need(spec, "lambda", 1.0)))
    if family == "H3":
        return h3()
    if family == "H4":
        return h4()
    if family == "I2":
        return i2(_need(spec, "m"))
    if family == "An_deformed":
        return an_deformed(_need(spec, "c"))
    if family == "Bn_deformed":
        return bn_deformed(float(_need(spec, "gamma")), _need(spec, "c"))
    if family == "Fn_type":
        return fn_type(_rank(spec), float(_need(spec, "lambda")), float(_need(spec, "M")))
    if family == "Theorem4":
        if "lambda" in spec.params or "K" in spec.params:
            return theorem4_raw(
                float(_need(spec, "lambda")),
                float(_need(spec, "K")),
                float(_need(spec, "M")),
            )
        return theorem4(float(_need(spec, "M")))
    if family == "Theorem4_rest_eij":
        return theorem4_rest_eij(float(_need(spec, "M")))
    if family == "Theorem4_rest_long":
        return theorem4_rest_long(float(_need(spec, "M")))
    if family == "F3_variant1":
        return f3_variant1(float(_need(spec, "lambda")))
    if family == "F3_variant2":
        return f3_variant2(float(_need(spec, "lambda")))
    raise InvalidSpec(f"unhandled family '{family}'")  # pragma: no cover


def parse_spec_string(text: str) -> SystemSpec:
    """Parse the canonical string form, e.g. ``"F4:lambda=1"`` or
    ``"An_def:c=2,1,1"`` or ``"Fn:n=5,lambda=2.449489743,M=1"``."""
    family, _, rest = text.partition(":")
    family = family.strip()
    if not family:
        raise InvalidSpec("empty family name")
    raw: dict[str, list[str]] = {}
    key = None
    for token in rest.split(",") if rest.strip() else []:
        token = token.strip()
        if not token:
            continue
        if "=" in token:
            key, _, val = token.partition("=")
            key = key.strip()
            raw[key] = [val.strip()]
        elif key is not None:
            raw[key].append(token)
        else:
            raise InvalidSpec(f"stray token '{token}' in spec '{text}'")
    params: dict = {}
    rank = None
    for k, vals in raw.items():
        try:
            nums = [float(v) for v in vals]
        except ValueError as exc:
            raise InvalidSpec(f"parameter '{k}' is not numeric: {vals}") from exc
        if k == "c":
            params["c"] = tuple(nums)
        elif k in ("n", "m"):
            if nums[0] != int(nums[0]):
                raise InvalidSpec(f"parameter '{k}' must be an integer")
            params[k] = int(nums[0])
            if k == "n":
                rank = int(nums[0])
        else:
            if len(nums) != 1:
                raise InvalidSpec(f"parameter '{k}' expects a single value")
            params[k] = nums[0]
    return SystemSpec(family=family, rank=rank, params=params)


# Bourbaki simple roots of E_8 in R^8; E_7 and E_6 take leading subsets.
_E8_SIMPLE = np.array(
    [
        [0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5],
        [1, 1, 0, 0, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0, 0, 0, 0],
        [0, -1, 1, 0, 0, 0, 0, 0],
        [0, 0, -1, 1, 0, 0, 0, 0],
        [0, 0, 0, -1, 1, 0, 0, 0],
        [0, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, 0, 0, -1, 1, 0],
    ],
    dtype=float,
)


def simple_roots(group: str, lam: float = 1.0):
    """The built system together with its simple roots (Bourbaki numbering).

    Returns ``(system, roots)`` where ``roots`` is a ``(rank, dim)`` array in
    the same coordinates as ``system.covectors``.  For F_4 the third and
    fourth simple roots are the lam-scaled short covectors ``2 lam e_4`` and
    ``lam (e_1 - e_2 - e_3 - e_4)``.
    """
    group = group.upper()
    if group == "E8":
        return e8(), _E8_SIMPLE.copy()
    if group == "E7":
        return e7(), _E8_SIMPLE[:7] @ _e7_basis().T
    if group == "E6":
        return e6(), _E8_SIMPLE[:6] @ _e6_basis().T
    if group == "F4":
        roots = np.array(
            [
                [0, 1, -1, 0],
                [0, 0, 1, -1],
                [0, 0, 0, 2.0 * lam],
                [lam, -lam, -lam, -lam],
            ],
            dtype=float,
        )
        return f4(lam), roots
    raise InvalidSpec(f"no simple system for group '{group}'")
