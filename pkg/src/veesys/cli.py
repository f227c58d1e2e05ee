"""Command line interface.

Subcommands: ``build``, ``check``, ``restrict``, ``equiv``, ``catalog``.
Exit codes: 0 success (or vee-true / equivalent), 1 check-false or not
equivalent, 2 user error, 3 numeric degeneracy.  All commands are
deterministic for a fixed ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from . import builders, systemfile
from .catalog import (
    GROUPS,
    build_catalog,
    verify_paper_equivalences,
    verify_theorem4_identifications,
)
from .core import (
    DegenerateForm,
    IndefiniteForm,
    InvalidSpec,
    TolerancePolicy,
    VeesysError,
)
from .equivalence import equivalent
from .frobenius import wdvv_residual
from .restriction import restrict, subsystem_of
from .veecheck import check_vee

__all__ = ["main", "entry", "parse_covector_literal"]

_TERM = re.compile(r"^([+-]?\d*\.?\d*)e(\d+)$")


def parse_covector_literal(text: str, dim: int) -> np.ndarray:
    """Parse a covector literal like ``e1-e2`` or ``0.5e1+2e3``."""
    vec = np.zeros(dim)
    compact = text.replace(" ", "")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if not terms:
        raise InvalidSpec(f"empty covector literal '{text}'")
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise InvalidSpec(f"bad covector term '{term}' in '{text}'")
        coef_text, index_text = m.groups()
        coef = 1.0 if coef_text in ("", "+") else -1.0 if coef_text == "-" else float(coef_text)
        index = int(index_text)
        if not 1 <= index <= dim:
            raise InvalidSpec(f"coordinate e{index} out of range for dim {dim}")
        vec[index - 1] += coef
    return vec


def _resolve_along(system, along: str):
    """--along accepts comma-separated indices or covector literals."""
    tokens = [t for t in along.split(",") if t.strip()]
    if not tokens:
        raise InvalidSpec("--along is empty")
    if all(re.fullmatch(r"\s*\d+\s*", t) for t in tokens):
        idx = [int(t) for t in tokens]
        bad = [i for i in idx if not 0 <= i < system.count]
        if bad:
            raise InvalidSpec(f"covector indices out of range: {bad}")
        return idx
    vectors = []
    buffer: list[str] = []
    for token in tokens:
        buffer.append(token)
    vectors = [parse_covector_literal(t, system.dim) for t in buffer]
    return subsystem_of(system, np.array(vectors))


def cmd_build(args) -> int:
    spec = builders.parse_spec_string(args.spec)
    system = builders.build(spec)
    if args.output:
        systemfile.save(system, args.output)
    else:
        sys.stdout.write(systemfile.dumps(system))
    print(f"{system.name}: {system.count} covectors in dim {system.dim}", file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    system = systemfile.load(args.path)
    policy = TolerancePolicy(rng_seed=args.seed, eps_regular=args.margin)
    report = check_vee(system, policy)
    result = {
        "name": system.name,
        "is_vee": report.is_vee,
        "gram_condition_number": report.gram_condition_number,
        "n_planes": len(report.planes),
        "violations": [
            {
                "alpha": v.alpha,
                "residual": v.residual,
                "plane_members": list(v.plane.members),
            }
            for v in report.violations
        ],
    }
    if args.wdvv:
        worst = 0.0
        for k in range(args.points):
            pol = TolerancePolicy(rng_seed=args.seed + k, eps_regular=args.margin)
            from .core import random_regular_point

            x = random_regular_point(system, pol)
            worst = max(worst, wdvv_residual(system, x, pol))
        result["wdvv_max_residual"] = worst
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        verdict = "a vee-system" if report.is_vee else "NOT a vee-system"
        print(f"{system.name}: {verdict} ({len(report.planes)} plane classes, "
              f"cond={report.gram_condition_number:.3g})")
        for v in report.violations[:10]:
            members = ", ".join(str(m) for m in v.plane.members)
            print(f"  violating plane {{{members}}} at covector {v.alpha}: "
                  f"residual {v.residual:.3e}")
        if len(report.violations) > 10:
            print(f"  ... and {len(report.violations) - 10} more violations")
        if args.wdvv:
            print(f"  max WDVV residual over {args.points} points: "
                  f"{result['wdvv_max_residual']:.3e}")
    return 0 if report.is_vee else 1


def cmd_restrict(args) -> int:
    system = systemfile.load(args.path)
    idx = _resolve_along(system, args.along)
    result = restrict(system, idx)
    if args.output:
        systemfile.save(result.system, args.output)
    else:
        sys.stdout.write(systemfile.dumps(result.system))
    print(f"{result.system.name}: {result.system.count} covectors in dim "
          f"{result.system.dim}", file=sys.stderr)
    for group in result.merge_log:
        if len(group.sources) > 1:
            lams = ", ".join(f"{l:.6g}" for l in group.lambdas)
            print(f"  merged covectors {list(group.sources)}: ({lams}) -> "
                  f"{group.merged:.6g}", file=sys.stderr)
    return 0


def cmd_equiv(args) -> int:
    a = systemfile.load(args.path1)
    b = systemfile.load(args.path2)
    cert = equivalent(a, b)
    if cert is None:
        print("not equivalent")
        return 1
    doc = {
        "map": [[float(x) for x in row] for row in cert.matrix],
        "pairing": list(cert.pairing),
        "signs": list(cert.signs),
        "max_error": cert.max_error,
    }
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"equivalent (max_error={cert.max_error:.3e})")
        print(json.dumps(doc["map"]))
    return 0


def cmd_catalog(args) -> int:
    entries = build_catalog(args.group, lam=args.lam)
    for entry in entries:
        doc = {
            "group": entry.parabolic.group,
            "subtype_label": entry.parabolic.subtype_label,
            "dim": entry.dim,
            "count": entry.count,
            "covectors": [[float(x) for x in row] for row in entry.system.covectors],
            "identified_as": entry.identified_as,
        }
        print(json.dumps(doc, sort_keys=True))
    if args.verify:
        ok = True
        for report in (verify_paper_equivalences(), verify_theorem4_identifications()):
            print(str(report), file=sys.stderr)
            ok = ok and report.all_pass
        return 0 if ok else 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="veesys",
        description="Build, check, restrict, compare and catalog covector systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a named system and write it as JSON")
    p.add_argument("spec", help="family spec, e.g. 'F4:lambda=1' or 'An_def:c=2,1,1'")
    p.add_argument("-o", "--output", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run the vee-check (and optionally WDVV) on a file")
    p.add_argument("path")
    p.add_argument("--wdvv", action="store_true", help="also compute WDVV residuals")
    p.add_argument("--points", type=int, default=10, help="number of sample points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--margin", type=float, default=0.05,
                   help="regularity margin for sampled points")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("restrict", help="restrict a system along a subsystem")
    p.add_argument("path")
    p.add_argument("--along", required=True,
                   help="comma-separated covector literals (e.g. 'e7-e8,e7+e8') or indices")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("equiv", help="decide equivalence of two system files")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("catalog", help="enumerate restrictions of an exceptional group")
    p.add_argument("group", choices=list(GROUPS))
    p.add_argument("--lambda", dest="lam", type=float, default=1.0,
                   help="orbit-length parameter for F_4")
    p.add_argument("--verify", action="store_true",
                   help="also verify the published equivalence table")
    p.set_defaults(func=cmd_catalog)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DegenerateForm, IndefiniteForm) as exc:
        print(f"numeric degeneracy: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, VeesysError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
