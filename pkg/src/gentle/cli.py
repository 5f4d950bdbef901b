"""Command-line interface: validate, invariants, surface, compare, dual, stacky, random.

Data-producing commands print a single JSON object on stdout (see
docs/invariants.schema.json); validation failures and diagnostics go to
stderr with a nonzero exit code.  Error exits use stable codes in the JSON
payload so scripts can dispatch on them.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linefield
from .algebra import (
    ExhaustedAttemptsError,
    InvalidGentleError,
    NotDegreeZeroError,
    NotProperError,
    koszul_dual,
    random_gentle,
)
from .decider import NotSmoothError, compare_algebras
from .dsl import DslError, algebra_to_document, document_to_algebra, parse, serialize
from .ribbon import NotSmoothError as RibbonNotSmoothError
from .stacky import (
    BadParameterError,
    StackyCurveSpec,
    UnsupportedFamilyError,
    decide_stacky,
    glued_invariants,
)
from .threads import aag_invariants, enumerate_threads


def _fail(code: str, message: str, extra: dict | None = None) -> int:
    payload = {"error": {"code": code, "message": message}}
    if extra:
        payload["error"].update(extra)
    print(json.dumps(payload), file=sys.stderr)
    return 1


def _load(path: str):
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    doc = parse(text, name=path)
    return doc, document_to_algebra(doc)


def _invariants_payload(algebra, gauss_limit: int) -> dict:
    system = enumerate_threads(algebra)
    aag = aag_invariants(algebra, system)
    payload = {
        "aag": [list(p) for p in aag.pairs],
        "smooth": not system.forbidden_cycles,
        "proper": not system.permitted_cycles,
        "genus": None,
        "boundary": None,
        "euler": None,
        "sigma": None,
        "gcd_invariant": None,
        "arf": None,
    }
    if system.forbidden_cycles:
        return payload
    analysis = linefield.analyze(algebra, system)
    payload["genus"] = analysis.genus
    payload["euler"] = analysis.surface.euler
    payload["boundary"] = [
        {"stops": s, "winding": w} for s, w in analysis.boundary
    ]
    payload["sigma"] = linefield.sigma(analysis)
    if analysis.genus == 1:
        payload["gcd_invariant"] = linefield.gcd_invariant(analysis)
    try:
        payload["arf"] = linefield.arf_invariant(analysis, gauss_limit=gauss_limit)
    except linefield.NotApplicableError:
        pass
    return payload


def _cmd_validate(args) -> int:
    try:
        _, algebra = _load(args.file)
    except (DslError, InvalidGentleError) as exc:
        return _diagnostic_exit(exc)
    if args.json:
        print(json.dumps({"valid": True, "vertices": len(algebra.quiver.vertices),
                          "arrows": len(algebra.quiver.arrows)}))
    else:
        print(f"ok: {len(algebra.quiver.vertices)} vertices, "
              f"{len(algebra.quiver.arrows)} arrows")
    return 0


def _diagnostic_exit(exc) -> int:
    if isinstance(exc, DslError):
        return _fail("parse", str(exc), {"diagnostic": exc.as_dict()})
    return _fail("invalid", str(exc),
                 {"violations": [str(v) for v in exc.violations]})


def _cmd_invariants(args) -> int:
    try:
        _, algebra = _load(args.file)
    except (DslError, InvalidGentleError) as exc:
        return _diagnostic_exit(exc)
    print(json.dumps(_invariants_payload(algebra, args.max_gauss_dim)))
    return 0


def _cmd_surface(args) -> int:
    try:
        _, algebra = _load(args.file)
    except (DslError, InvalidGentleError) as exc:
        return _diagnostic_exit(exc)
    system = enumerate_threads(algebra)
    if system.forbidden_cycles:
        return _fail("not_smooth", "no surface model: algebra has a forbidden cycle",
                     {"witness": system.forbidden_cycles[0].name})
    analysis = linefield.analyze(algebra, system)
    ribbon = analysis.ribbon
    print(json.dumps({
        "ribbon_vertices": [
            {"thread": v.thread.name, "valence": v.valence, "thetas": list(v.thetas)}
            for v in ribbon.vertices
        ],
        "edges": [
            {"label": e.label, "ends": [list(e.ends[0]), list(e.ends[1])]}
            for e in ribbon.edges
        ],
        "euler": analysis.surface.euler,
        "genus": analysis.genus,
        "faces": [
            {"stops": s, "winding": w} for s, w in analysis.surface.boundaries
        ],
    }))
    return 0


def _cmd_compare(args) -> int:
    try:
        _, a = _load(args.file_a)
        _, b = _load(args.file_b)
    except (DslError, InvalidGentleError) as exc:
        return _diagnostic_exit(exc)
    try:
        report = compare_algebras(a, b)
    except NotSmoothError as exc:
        return _fail("not_smooth", str(exc))
    print(json.dumps(report.as_dict()))
    return 0


def _cmd_dual(args) -> int:
    try:
        doc, algebra = _load(args.file)
    except (DslError, InvalidGentleError) as exc:
        return _diagnostic_exit(exc)
    try:
        dual = koszul_dual(algebra)
    except (NotProperError, NotDegreeZeroError) as exc:
        code = "not_proper" if isinstance(exc, NotProperError) else "not_degree_zero"
        return _fail(code, str(exc))
    print(serialize(algebra_to_document(dual, name=doc.name + "_dual")), end="")
    return 0


def _parse_stacky_spec(kind: str, text: str) -> StackyCurveSpec:
    parts = text.split(";")
    if len(parts) == 1:
        rs, ks = parts[0], ""
    elif len(parts) == 2:
        rs, ks = parts
    else:
        raise BadParameterError(f"bad spec {text!r}: expected r-list;k-list")
    try:
        r = tuple(int(x) for x in rs.split(",") if x.strip() != "")
        k = tuple(int(x) for x in ks.split(",") if x.strip() != "")
    except ValueError:
        raise BadParameterError(f"bad spec {text!r}: entries must be integers")
    return StackyCurveSpec(kind, r, k)


def _cmd_stacky(args) -> int:
    tokens = args.spec
    if len(tokens) not in (2, 4):
        return _fail("usage", "stacky takes one or two `kind r,...;k,...` specs")
    try:
        specs = [
            _parse_stacky_spec(tokens[i], tokens[i + 1])
            for i in range(0, len(tokens), 2)
        ]
    except BadParameterError as exc:
        return _fail("bad_spec", str(exc))
    if len(specs) == 1:
        inv = glued_invariants(specs[0])
        payload = {
            "genus": inv.genus,
            "boundary": [{"stops": s, "winding": w} for s, w in inv.boundary],
            "sigma": inv.sigma,
        }
        try:
            from .stacky import stacky_arf
            payload["arf"] = stacky_arf(specs[0], gauss_limit=args.max_gauss_dim)
        except UnsupportedFamilyError:
            payload["arf"] = None
        print(json.dumps(payload))
        return 0
    report = decide_stacky(specs[0], specs[1])
    print(json.dumps(report.as_dict()))
    return 0


def _cmd_random(args) -> int:
    try:
        algebra = random_gentle(
            args.seed, args.vertices, args.max_degree,
            smooth=args.smooth, proper=args.proper,
        )
    except ExhaustedAttemptsError as exc:
        return _fail("exhausted", str(exc))
    print(serialize(algebra_to_document(algebra, name=f"random_{args.seed}")), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentle",
        description="surface-model invariants of graded gentle algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a .gentle file against the axioms")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="AAG data and orbit invariants as JSON")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.add_argument("--max-gauss-dim", type=int, default=16)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("surface", help="ribbon graph and face data as JSON")
    p.add_argument("file")
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("compare", help="sufficient derived-equivalence test")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("dual", help="Koszul dual of a proper degree-0 algebra")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("stacky", help="invariants of, or decision between, stacky curves")
    p.add_argument("spec", nargs="+",
                   help="kind r0,r1,...;k1,... — one spec for invariants, two to compare")
    p.add_argument("--max-gauss-dim", type=int, default=24)
    p.set_defaults(func=_cmd_stacky)

    p = sub.add_parser("random", help="emit a random gentle algebra as .gentle text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--smooth", action="store_true")
    p.add_argument("--proper", action="store_true")
    p.set_defaults(func=_cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RibbonNotSmoothError as exc:
        return _fail("not_smooth", str(exc))
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
