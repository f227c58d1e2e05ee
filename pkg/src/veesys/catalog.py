"""Restrictions of the exceptional systems, enumerated by parabolic class.

Strata of the reflection arrangement correspond to conjugacy classes of
parabolic subgroups, i.e. to subsets of the simple system up to the group
action.  We enumerate all subsets of corank at least three, restrict along
the full subsystem each subset generates, and merge subsets whose
restrictions are equivalent; the classes that survive are the catalog.

Almost every subgraph type names a single class.  The known exceptions are
labelled with explicit representatives (Bourbaki numbering):

* E_7 has two classes of type A_1^3 — class 1 is {a2, a5, a7}, class 2 is
  {a3, a5, a7} — and two of type A_1 x A_3 — class 1 is {a2, a5, a6, a7},
  class 2 is {a3, a5, a6, a7}.
* F_4 has two classes of type A_1: class 1 is the scaled-orbit covector
  ``2 lam e_4`` (so that its restriction is the 13-covector F_3^1 family),
  class 2 the covector ``e_2 - e_3``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import builders
from .core import (
    DEFAULT_POLICY,
    CovectorSystem,
    TolerancePolicy,
    find_covector,
)
from .equivalence import equivalent
from .restriction import restrict
from .veecheck import check_vee

__all__ = [
    "CatalogEntry",
    "EquivalenceLine",
    "EquivalenceReport",
    "ParabolicClass",
    "build_catalog",
    "enumerate_parabolic_classes",
    "restrict_along_simple_subset",
    "verify_paper_equivalences",
    "verify_theorem4_identifications",
]

GROUPS = ("E6", "E7", "E8", "F4")

# Designated representatives for the non-conjugate pairs (1-based labels).
_CLASS_REPS = {
    ("E7", "A_1^3"): {1: frozenset({2, 5, 7}), 2: frozenset({3, 5, 7})},
    ("E7", "A_1xA_3"): {1: frozenset({2, 5, 6, 7}), 2: frozenset({3, 5, 6, 7})},
    ("F4", "A_1"): {1: frozenset({3}), 2: frozenset({1})},
}


@dataclass(frozen=True, eq=False)
class ParabolicClass:
    group: str
    subtype_label: str
    simple_root_subset: tuple[int, ...]  # 1-based Bourbaki indices
    corank: int


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    parabolic: ParabolicClass
    system: CovectorSystem
    dim: int
    count: int
    identified_as: str | None


@dataclass(frozen=True, eq=False)
class EquivalenceLine:
    label: str
    passed: bool
    detail: str


@dataclass(frozen=True, eq=False)
class EquivalenceReport:
    lines: tuple[EquivalenceLine, ...]

    @property
    def all_pass(self) -> bool:
        return all(line.passed for line in self.lines)

    def __str__(self) -> str:
        return "\n".join(
            f"[{'pass' if l.passed else 'FAIL'}] {l.label}{' — ' + l.detail if l.detail else ''}"
            for l in self.lines
        )


def _adjacency(roots):
    n = roots.shape[0]
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] @ roots[j]) > 1e-9:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def _component_type(vertices, adj):
    k = len(vertices)
    degs = {v: len(adj[v] & vertices) for v in vertices}
    maxdeg = max(degs.values()) if k else 0
    if maxdeg <= 2 and sum(1 for d in degs.values() if d == 2) == k - 2 + (k == 1):
        return f"A_{k}"
    if maxdeg == 3:
        center = [v for v, d in degs.items() if d == 3]
        if len(center) == 1:
            lengths = []
            for start in adj[center[0]] & vertices:
                ln, prev, cur = 1, center[0], start
                while True:
                    nxt = (adj[cur] & vertices) - {prev}
                    if len(nxt) != 1:
                        break
                    prev, cur = cur, nxt.pop()
                    ln += 1
                lengths.append(ln)
            lengths.sort()
            if lengths[:2] == [1, 1]:
                return f"D_{k}"
            if lengths == [1, 2, 2]:
                return "E_6"
            if lengths == [1, 2, 3]:
                return "E_7"
            if lengths == [1, 2, 4]:
                return "E_8"
    return f"X_{k}"


def _subset_label(subset, adj):
    remaining = set(subset)
    comps = []
    while remaining:
        stack = [next(iter(remaining))]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend((adj[v] & remaining) - comp)
        remaining -= comp
        comps.append(_component_type(comp, adj))

    def key(t):
        letter, _, rank = t.partition("_")
        return (letter, int(rank))

    counts = Counter(comps)
    parts = []
    for t in sorted(counts, key=key):
        parts.append(t if counts[t] == 1 else f"{t}^{counts[t]}")
    return "x".join(parts)


def restrict_along_simple_subset(
    group: str,
    subset,
    lam: float = 1.0,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> CovectorSystem:
    """Restriction of the group's system along the parabolic subsystem
    generated by the given 1-based simple-root indices."""
    system, roots = builders.simple_roots(group, lam)
    idx = []
    for s in subset:
        i = find_covector(system, roots[s - 1])
        if i is None:
            raise ValueError(f"simple root {s} not found in {system.name}")
        idx.append(i)
    return restrict(system, idx, policy).system


_ENUM_CACHE: dict = {}


def enumerate_parabolic_classes(
    group: str, lam: float = 1.0, policy: TolerancePolicy = DEFAULT_POLICY
):
    """All corank >= 3 parabolic classes of the group, with their restrictions.

    Returns a list of ``(ParabolicClass, CovectorSystem)`` pairs.  Classes
    are formed by merging simple-root subsets with equivalent restrictions;
    labels carry a ``(class i)`` suffix when one subgraph type splits into
    several classes.
    """
    key = (group.upper(), round(float(lam), 12))
    if key in _ENUM_CACHE:
        return _ENUM_CACHE[key]
    system, roots = builders.simple_roots(group, lam)
    rank = roots.shape[0]
    adj = _adjacency(roots)
    idx_of = [find_covector(system, r) for r in roots]

    classes: list[dict] = []
    for size in range(1, rank - 2):
        for subset in itertools.combinations(range(1, rank + 1), size):
            restricted = restrict(
                system, [idx_of[s - 1] for s in subset], policy
            ).system
            for cls in classes:
                rep = cls["system"]
                if rep.dim != restricted.dim or rep.count != restricted.count:
                    continue
                if equivalent(rep, restricted, policy) is not None:
                    cls["subsets"].append(frozenset(subset))
                    break
            else:
                classes.append(
                    {
                        "system": restricted,
                        "subsets": [frozenset(subset)],
                        "label": _subset_label([s - 1 for s in subset], adj),
                        "corank": rank - size,
                    }
                )

    by_label: dict[str, list[dict]] = {}
    for cls in classes:
        by_label.setdefault(cls["label"], []).append(cls)
    out = []
    for label, group_classes in by_label.items():
        if len(group_classes) == 1:
            names = {id(group_classes[0]): label}
        else:
            names = _assign_class_indices(group.upper(), label, group_classes)
        for cls in group_classes:
            rep_subset = tuple(sorted(min(cls["subsets"], key=sorted)))
            out.append(
                (
                    ParabolicClass(
                        group=group.upper(),
                        subtype_label=names[id(cls)],
                        simple_root_subset=rep_subset,
                        corank=cls["corank"],
                    ),
                    cls["system"],
                )
            )
    out.sort(key=lambda pair: (-pair[0].corank, pair[0].subtype_label))
    _ENUM_CACHE[key] = out
    return out


def _assign_class_indices(group, label, group_classes):
    reps = _CLASS_REPS.get((group, label))
    names = {}
    taken = set()
    if reps:
        for cls in group_classes:
            for index, marker in reps.items():
                if marker in cls["subsets"]:
                    names[id(cls)] = f"{label} (class {index})"
                    taken.add(index)
                    break
    next_free = 1
    for cls in sorted(group_classes, key=lambda c: sorted(min(c["subsets"], key=sorted))):
        if id(cls) in names:
            continue
        while next_free in taken:
            next_free += 1
        names[id(cls)] = f"{label} (class {next_free})"
        taken.add(next_free)
        next_free += 1
    return names


def _identification_candidates(group: str, lam: float):
    sqrt2 = np.sqrt(2.0)
    if group == "E8":
        return [
            ("F_4(sqrt2)", builders.f4(sqrt2)),
            ("F_3^1(sqrt2)", builders.f3_variant1(sqrt2)),
            ("F_3^2(sqrt2)", builders.f3_variant2(sqrt2)),
            ("F_5", builders.fn_type(5, np.sqrt(6.0), 1.0)),
            ("F_6", builders.fn_type(6, 2.0, 1.0 / sqrt2)),
        ]
    if group == "E7":
        return [
            ("F_4(1/2)", builders.f4(0.5)),
            ("F_3^1(1/2)", builders.f3_variant1(0.5)),
            ("F_3^2(1/2)", builders.f3_variant2(0.5)),
            ("B_3(sqrt2/2)", builders.b_family(3, sqrt2 / 2.0)),
            ("T4(M=1)", builders.theorem4(1.0)),
            ("T4_eij(M=1)", builders.theorem4_rest_eij(1.0)),
            ("T4_long(M=1)", builders.theorem4_rest_long(1.0)),
        ]
    if group == "E6":
        return [
            ("B_3(-2/3;1,1,2/3)", builders.bn_deformed(-2.0 / 3.0, (1.0, 1.0, 2.0 / 3.0))),
            ("T4(M=1/sqrt2)", builders.theorem4(1.0 / sqrt2)),
            ("T4_eij(M=1/sqrt2)", builders.theorem4_rest_eij(1.0 / sqrt2)),
            ("T4_long(M=1/sqrt2)", builders.theorem4_rest_long(1.0 / sqrt2)),
        ]
    if group == "F4":
        return [
            (f"F_3^1({lam:g})", builders.f3_variant1(lam)),
            (f"F_3^2({lam:g})", builders.f3_variant2(lam)),
        ]
    return []


def build_catalog(
    group: str,
    lam: float = 1.0,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> list[CatalogEntry]:
    """Catalog entries for a group: every corank >= 3 class with its
    restricted system, checked for the vee-property and identified against
    the named families where a match exists."""
    group = group.upper()
    if group not in GROUPS:
        raise ValueError(f"group must be one of {GROUPS}")
    candidates = _identification_candidates(group, lam)
    entries = []
    for parabolic, system in enumerate_parabolic_classes(group, lam, policy):
        report = check_vee(system, policy)
        if not report.is_vee:
            raise AssertionError(
                f"restricted system for {group} {parabolic.subtype_label} "
                "failed the vee-check"
            )
        identified = None
        for label, cand in candidates:
            if cand.dim == system.dim and cand.count == system.count:
                if equivalent(system, cand, policy) is not None:
                    identified = label
                    break
        entries.append(
            CatalogEntry(
                parabolic=parabolic,
                system=system,
                dim=system.dim,
                count=system.count,
                identified_as=identified,
            )
        )
    return entries


def _line(label, source, target, policy, expect=True):
    cert = equivalent(source, target, policy)
    found = cert is not None
    passed = found == expect
    detail = ""
    if found and expect:
        detail = f"max_error={cert.max_error:.2e}"
    elif not found and not expect:
        detail = "not equivalent, as required"
    return EquivalenceLine(label=label, passed=passed, detail=detail)


def verify_paper_equivalences(
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> EquivalenceReport:
    """Check every identity in the published equivalence list, by direct
    construction of both sides."""
    sqrt2 = np.sqrt(2.0)
    rsub = restrict_along_simple_subset
    lines = [
        _line("(E_8,D_4) = F_4(sqrt2)", rsub("E8", (2, 3, 4, 5)), builders.f4(sqrt2), policy),
        _line(
            "(E_8,D_5) = (F_4(sqrt2),A_1)_1",
            rsub("E8", (2, 3, 4, 5, 6)),
            builders.f3_variant1(sqrt2),
            policy,
        ),
        _line(
            "(E_8,A_1xD_4) = (F_4(sqrt2),A_1)_2",
            rsub("E8", (2, 3, 4, 5, 7)),
            builders.f3_variant2(sqrt2),
            policy,
        ),
        _line("(E_7,A_1^3)_1 = F_4(1/2)", rsub("E7", (2, 5, 7)), builders.f4(0.5), policy),
        _line(
            "(E_7,A_1^4) = (F_4(1/2),A_1)_1",
            rsub("E7", (2, 3, 5, 7)),
            builders.f3_variant1(0.5),
            policy,
        ),
        _line(
            "(E_7,A_1xA_3)_1 = (F_4(1/2),A_1)_2",
            rsub("E7", (2, 5, 6, 7)),
            builders.f3_variant2(0.5),
            policy,
        ),
        _line(
            "(E_7,D_4) = B_3(sqrt2/2)",
            rsub("E7", (2, 3, 4, 5)),
            builders.b_family(3, sqrt2 / 2.0),
            policy,
        ),
        _line(
            "(E_6,A_3) = B_3(-2/3;1,1,2/3)",
            rsub("E6", (1, 3, 4)),
            builders.bn_deformed(-2.0 / 3.0, (1.0, 1.0, 2.0 / 3.0)),
            policy,
        ),
        _line(
            "(F_4(L),A_1)_1 = (F_4(1/(2L)),A_1)_2 at L=1",
            builders.f3_variant1(1.0),
            builders.f3_variant2(0.5),
            policy,
        ),
        _line(
            "(F_4(L),A_1)_1 = (F_4(1/(2L)),A_1)_2 at L=0.7",
            builders.f3_variant1(0.7),
            builders.f3_variant2(1.0 / 1.4),
            policy,
        ),
        _line(
            "(F_4(0),A_1)_1 = B_3(0;1,1,1)",
            builders.f3_variant1(0.0),
            builders.bn_deformed(0.0, (1.0, 1.0, 1.0)),
            policy,
        ),
        _line(
            "B_3(0;1,1,1) = B_3(sqrt2)",
            builders.bn_deformed(0.0, (1.0, 1.0, 1.0)),
            builders.b_family(3, sqrt2),
            policy,
        ),
        _line(
            "(F_4(0),A_1)_2 = B_3(-1;1,1,2)",
            builders.f3_variant2(0.0),
            builders.bn_deformed(-1.0, (1.0, 1.0, 2.0)),
            policy,
        ),
        _line(
            "F_4(L) = F_4(1/(2L)) at L=1",
            builders.f4(1.0),
            builders.f4(0.5),
            policy,
        ),
        _line(
            "F_4(L) = F_4(1/(2L)) at L=0.7",
            builders.f4(0.7),
            builders.f4(1.0 / 1.4),
            policy,
        ),
    ]
    return EquivalenceReport(lines=tuple(lines))


def verify_theorem4_identifications(
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> EquivalenceReport:
    """The six identifications of the four-dimensional 18-covector family
    and its two restricted families with exceptional-group restrictions,
    plus the required non-equivalence away from M^2 in {1, 1/2}."""
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    rsub = restrict_along_simple_subset
    e7_a3 = rsub("E7", (5, 6, 7))
    lines = [
        _line("T4(M=1) = (E_7,A_3)", builders.theorem4(1.0), e7_a3, policy),
        _line(
            "T4(M=1/sqrt2) = (E_6,A_1xA_1)",
            builders.theorem4(inv_sqrt2),
            rsub("E6", (1, 4)),
            policy,
        ),
        _line(
            "T4_eij(M=1) = (E_7,A_1xA_3)_2",
            builders.theorem4_rest_eij(1.0),
            rsub("E7", (3, 5, 6, 7)),
            policy,
        ),
        _line(
            "T4_eij(M=1/sqrt2) = (E_6,A_1^3)",
            builders.theorem4_rest_eij(inv_sqrt2),
            rsub("E6", (1, 4, 6)),
            policy,
        ),
        _line(
            "T4_long(M=1) = (E_7,A_4)",
            builders.theorem4_rest_long(1.0),
            rsub("E7", (4, 5, 6, 7)),
            policy,
        ),
        _line(
            "T4_long(M=1/sqrt2) = (E_6,A_1xA_2)",
            builders.theorem4_rest_long(inv_sqrt2),
            rsub("E6", (1, 5, 6)),
            policy,
        ),
        _line(
            "T4(M=0.8) != (E_7,A_3)",
            builders.theorem4(0.8),
            e7_a3,
            policy,
            expect=False,
        ),
        _line(
            "T4(M=0.8) != (E_6,A_1xA_1)",
            builders.theorem4(0.8),
            rsub("E6", (1, 4)),
            policy,
            expect=False,
        ),
    ]
    return EquivalenceReport(lines=tuple(lines))
