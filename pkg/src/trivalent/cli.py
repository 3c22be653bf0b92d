"""Command-line front end.

Verbs: `count` (series coefficients), `census` (exhaustive small-size
enumeration), `decide` (subgroup relations on diagram files), `export`
(barycentric subdivision as DOT), `selftest` (verification suite).

All structured output is JSON on stdout with keys in a fixed order and big
integers rendered as decimal strings, so results are byte-stable and safe
for consumers without big-integer support.  Diagnostics go to stderr.

Exit codes: 0 success (a `decide` answer of false is still success: the
answer is the payload), 2 usage error, 3 input error, 4 internal invariant
failure (self-test mismatch).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from . import counting
from .diagram import (
    DiagramParseError,
    PointedDiagram,
    automorphism_order,
    barycentric_graph,
    canonical_code,
    is_normal,
    parse_diagram_text,
    pointed_morphism,
    pointed_morphism_conflict,
)
from .selftest import run_selftest

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4

CACHE_ENV = "TRIVALENT_CACHE_DIR"
CACHE_FORMAT_VERSION = 1


class InputError(Exception):
    """A problem with user-supplied files or sizes (exit code 3)."""


class UsageError(Exception):
    """A malformed invocation not caught by argparse itself (exit code 2)."""


# ---------------------------------------------------------------------------
# coefficient cache (advisory: deleting it never changes output)


def _cache_path(kind: str, general: bool) -> str | None:
    directory = os.environ.get(CACHE_ENV)
    if not directory:
        return None
    name = "count-%s%s.json" % (kind, "-general" if general else "")
    return os.path.join(directory, name)


def _load_cached(path: str, kind: str, general: bool):
    try:
        with open(path, "r", encoding="ascii") as handle:
            data = json.load(handle)
        if (
            data["format_version"] != CACHE_FORMAT_VERSION
            or data["kind"] != kind
            or data["general"] != general
            or data["max"] != len(data["coefficients"])
        ):
            raise ValueError("inconsistent cache fields")
        return [int(c) for c in data["coefficients"]]
    except FileNotFoundError:
        return None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(
            "warning: ignoring corrupt cache %s (%s); recomputing" % (path, exc),
            file=sys.stderr,
        )
        return None


def _store_cached(path: str, kind: str, general: bool, coefficients) -> None:
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "kind": kind,
        "general": general,
        "max": len(coefficients),
        "coefficients": [str(c) for c in coefficients],
    }
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="ascii") as handle:
            json.dump(payload, handle)
    except OSError as exc:
        print("warning: could not write cache %s (%s)" % (path, exc), file=sys.stderr)


def _count_coefficients(kind: str, max_order: int, general: bool):
    """Coefficients for n = 1..max_order, consulting the advisory cache."""
    path = _cache_path(kind, general)
    if path is not None:
        cached = _load_cached(path, kind, general)
        if cached is not None and len(cached) >= max_order:
            return cached[:max_order]
    compute = (
        counting.subgroup_series if kind == "pointed" else counting.conjugacy_class_series
    )
    coefficients = compute(max_order, general).integer_coefficients()[1:]
    if path is not None:
        _store_cached(path, kind, general, coefficients)
    return coefficients


# ---------------------------------------------------------------------------
# verb handlers


def _emit(payload) -> None:
    print(json.dumps(payload))


def _cmd_count(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1, got %d" % args.max)
    coefficients = _count_coefficients(args.kind, args.max, args.general)
    _emit(
        {
            "kind": args.kind,
            "max": args.max,
            "general": args.general,
            "coefficients": [str(c) for c in coefficients],
        }
    )
    return EXIT_OK


def _cmd_census(args) -> int:
    try:
        report = census_mod.enumerate_size(args.size)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    normal_reps = [d for d in report.class_representatives if is_normal(d)]
    payload = {
        "size": report.size,
        "unpointed": report.unpointed_classes,
        "pointed": report.pointed_classes,
        "normal": len(normal_reps),
    }
    if args.list or args.dot:
        reps = normal_reps if args.normal_only else list(report.class_representatives)
        if args.list:
            payload["representatives"] = [d.to_text() for d in reps]
        if args.dot:
            payload["representatives_dot"] = [
                barycentric_graph(d).to_dot() for d in reps
            ]
    _emit(payload)
    return EXIT_OK


def _read_diagram_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from None
    try:
        d, base = parse_diagram_text(text)
    except DiagramParseError as exc:
        raise InputError("%s: %s" % (path, exc)) from None
    if not d.is_connected():
        raise InputError("%s: diagram is not connected" % path)
    return d, base


def _pointed(path: str) -> PointedDiagram:
    d, base = _read_diagram_file(path)
    if base is None:
        raise InputError("%s: this relation needs a base arc (add '; base=K')" % path)
    return PointedDiagram(d, base)


def _conflict_payload(conflict) -> dict:
    return {
        "arc": conflict.arc,
        "generator": conflict.generator,
        "target_arc": conflict.target_arc,
        "existing_image": conflict.existing,
        "required_image": conflict.required,
        "partial_map": list(conflict.partial_map),
    }


def _decide_included(files):
    big, small = _pointed(files[0]), _pointed(files[1])
    mapping = pointed_morphism(big, small)
    if mapping is not None:
        return True, {"map": list(mapping)}
    return False, {"critical_pair": _conflict_payload(pointed_morphism_conflict(big, small))}


def _decide_isomorphic(files):
    p1, p2 = _pointed(files[0]), _pointed(files[1])
    if p1.diagram.n != p2.diagram.n:
        return False, {"sizes": [p1.diagram.n, p2.diagram.n]}
    mapping = pointed_morphism(p1, p2)
    if mapping is not None:
        return True, {"map": list(mapping)}
    return False, {"critical_pair": _conflict_payload(pointed_morphism_conflict(p1, p2))}


def _decide_conjugate(files):
    d1, _ = _read_diagram_file(files[0])
    d2, _ = _read_diagram_file(files[1])
    c1 = canonical_code(d1).decode("ascii")
    c2 = canonical_code(d2).decode("ascii")
    return c1 == c2, {"canonical_codes": [c1, c2]}


def _decide_normal(files):
    d, _ = _read_diagram_file(files[0])
    if is_normal(d):
        return True, {"automorphism_order": automorphism_order(d)}
    for a in range(d.n):
        p0 = PointedDiagram(d, 0)
        pa = PointedDiagram(d, a)
        conflict = pointed_morphism_conflict(p0, pa)
        if conflict is not None:
            return False, {
                "unreachable_arc": a,
                "critical_pair": _conflict_payload(conflict),
            }
    raise AssertionError("unreachable: non-normal diagram with no conflict")


_RELATIONS = {
    "included": (2, _decide_included),
    "isomorphic": (2, _decide_isomorphic),
    "conjugate": (2, _decide_conjugate),
    "normal": (1, _decide_normal),
}


def _cmd_decide(args) -> int:
    arity, decide = _RELATIONS[args.relation]
    if len(args.files) != arity:
        raise UsageError(
            "relation %r takes %d file%s, got %d"
            % (args.relation, arity, "s" if arity > 1 else "", len(args.files))
        )
    result, witness = decide(args.files)
    _emit({"relation": args.relation, "result": result, "witness": witness})
    return EXIT_OK


def _cmd_export(args) -> int:
    d, _ = _read_diagram_file(args.file)
    sys.stdout.write(barycentric_graph(d).to_dot())
    return EXIT_OK


def _cmd_selftest(args) -> int:
    ok = run_selftest(full=(args.depth == "full"))
    return EXIT_OK if ok else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivalent",
        description="Count and classify finite-index subgroups of the modular "
        "group through trivalent diagrams, with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="series coefficients (subgroups or classes)")
    p.add_argument("kind", choices=("pointed", "classes"),
                   help="pointed = subgroups by index; classes = conjugacy classes")
    p.add_argument("--max", type=int, required=True, metavar="N",
                   help="compute coefficients for indices 1..N")
    p.add_argument("--general", action="store_true",
                   help="drop the trivalence constraint (free product flavor)")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("census", help="exhaustive enumeration at one size")
    p.add_argument("--size", type=int, required=True, metavar="N")
    p.add_argument("--list", action="store_true",
                   help="include class representatives in the output")
    p.add_argument("--normal-only", action="store_true", dest="normal_only",
                   help="restrict the listing to normal (arc-transitive) classes")
    p.add_argument("--dot", action="store_true",
                   help="also emit each listed representative's barycentric "
                        "subdivision as DOT")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("decide", help="decide a relation between diagram files")
    p.add_argument("relation", choices=sorted(_RELATIONS))
    p.add_argument("files", nargs="+", metavar="FILE")
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("export", help="export a diagram")
    p.add_argument("format", choices=("dot",),
                   help="dot = barycentric subdivision as Graphviz")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("selftest", help="run the verification suite")
    p.add_argument("depth", choices=("quick", "full"))
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except DiagramParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
