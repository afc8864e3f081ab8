"""Command-line front end.

Subcommands: construct, verify, analyze, dual, iso, table, export.
Files are the canonical complex JSON; "-" means stdin or stdout.  Exit
codes: 0 success or verified, 1 a verification came back negative, 2
usage, parse, or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, complexes, constructions, surfaces, symmetry
from .complexes import CycleCollection
from .errors import (
    BadResidueClass,
    EquivelarError,
    IntersectionViolation,
    InvalidParameters,
    NotAPolyhedralMap,
)

PASS = "pass"
FAIL = "FAIL"


def _read_collection(path: str) -> CycleCollection:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))
    try:
        return CycleCollection.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError, EquivelarError) as exc:
        raise SystemExit(_usage_error(f"cannot parse {path}: {exc}"))


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_construct(args) -> int:
    try:
        if args.family == "odd":
            coll = constructions.construct_odd(args.m, args.n)
        elif args.family == "even":
            coll = constructions.construct_even(args.m, args.n)
        elif args.family == "pattern":
            coll = constructions.pattern_collection(args.p)
        elif args.family == "tetrahedron":
            coll = constructions.tetrahedron()
        else:
            coll = constructions.torus_pattern()
    except (InvalidParameters, BadResidueClass) as exc:
        return _usage_error(str(exc))
    _write(coll.to_json(), args.output)
    return 0


def cmd_verify(args) -> int:
    coll = _read_collection(args.file)
    connected = complexes.is_connected(coll)
    bar = surfaces.bar_complex(coll)
    pattern_ok = surfaces.is_combinatorial_2_manifold(bar)
    try:
        K = complexes.validate_polyhedral(coll)
        poly_ok = True
        poly_note = ""
    except IntersectionViolation as exc:
        K = None
        poly_ok = False
        poly_note = f"  (faces {exc.face_a} and {exc.face_b} share {exc.shared_vertices})"
    map_ok = K is not None and complexes.is_polyhedral_map(K)
    print(f"polyhedral complex   {PASS if poly_ok else FAIL}{poly_note}")
    print(f"pattern manifold     {PASS if pattern_ok else FAIL}")
    print(f"polyhedral map       {PASS if map_ok else FAIL}")
    print(f"connected            {PASS if connected else FAIL}")
    if args.level == "pattern":
        ok = pattern_ok and connected
    else:
        ok = poly_ok and pattern_ok and map_ok and connected
    return 0 if ok else 1


def cmd_analyze(args) -> int:
    coll = _read_collection(args.file)
    report = analysis.analyze(coll, full=args.full)
    if args.json:
        _write(json.dumps(report.to_json_dict(), sort_keys=True, indent=2) + "\n", None)
    else:
        for line in report.lines():
            print(line)
    return 0


def cmd_dual(args) -> int:
    coll = _read_collection(args.file)
    try:
        K = complexes.validate_polyhedral(coll)
        D = symmetry.dual(K)
    except (IntersectionViolation, NotAPolyhedralMap) as exc:
        return _usage_error(str(exc))
    _write(D.to_json(), args.output)
    return 0


def cmd_iso(args) -> int:
    ca = _read_collection(args.file_a)
    cb = _read_collection(args.file_b)
    vmap = symmetry.are_isomorphic(ca, cb)
    if vmap is None:
        print("not isomorphic")
        return 1
    witness = {str(ca.labels[v]): cb.labels[w] for v, w in enumerate(vmap)}
    print("isomorphic")
    print(json.dumps(witness, sort_keys=True))
    return 0


def _check(ok: bool) -> str:
    return "✓" if ok else "✗"


def _map_row(coll: CycleCollection, k: int) -> tuple[dict, bool]:
    report = analysis.analyze(coll, full=True)
    ok = (
        report.polyhedral_map
        and report.equivelar_type == (k, k)
        and bool(report.self_dual)
        and report.combinatorially_regular is False
    )
    row = {
        "name": coll.name,
        "vertices": coll.vertex_count,
        "type": f"{{{k},{k}}}",
        "euler": report.euler,
        "map": report.polyhedral_map,
        "self_dual": bool(report.self_dual),
        "non_regular": report.combinatorially_regular is False,
    }
    return row, ok


def _pattern_row(p: int) -> tuple[dict, bool]:
    perm = constructions.pp_permutation(p)
    pp_ok = constructions.verify_pp(perm, p).all_ok()
    coll = constructions.pattern_collection(p)
    bar = surfaces.bar_complex(coll)
    manifold = surfaces.is_combinatorial_2_manifold(bar) and complexes.is_connected(coll)
    fv = complexes.collection_f_vector(coll)
    euler = fv.f0 - fv.f1 + fv.f2
    chi_ok = euler == (p + 1) * (4 - p) // 2
    orientable = surfaces.is_orientable_simplicial(bar) if manifold else None
    orient_ok = manifold and (orientable == (p == 3))
    ok = pp_ok and manifold and chi_ok and orient_ok
    row = {
        "name": coll.name,
        "vertices": coll.vertex_count,
        "type": f"{{{p},{p}}}",
        "euler": euler,
        "pp": pp_ok,
        "manifold": manifold,
        "non_orientable": (orientable is False) if p > 3 else (orientable is True),
    }
    return row, ok


def cmd_table(args) -> int:
    rows: list[dict] = []
    all_ok = True
    if args.primes is None:
        try:
            if args.max_m < 3:
                raise InvalidParameters(f"max-m must be at least 3, got {args.max_m}")
            if args.max_n < 0:
                raise InvalidParameters(f"max-n must be non-negative, got {args.max_n}")
            instances = []
            for m in range(3, args.max_m + 1):
                for n in range(0, args.max_n + 1):
                    instances.append((constructions.construct_odd(m, n), 2 * m - 1))
                    instances.append((constructions.construct_even(m, n), 2 * m))
        except InvalidParameters as exc:
            return _usage_error(str(exc))
        for coll, k in instances:
            row, ok = _map_row(coll, k)
            rows.append(row)
            all_ok = all_ok and ok
        marks = ("map", "self_dual", "non_regular")
    else:
        try:
            primes = [int(x) for x in args.primes.split(",") if x.strip()]
            if not primes:
                raise ValueError("empty prime list")
            for p in primes:
                constructions.pp_permutation(p)
        except (ValueError, InvalidParameters, BadResidueClass) as exc:
            return _usage_error(str(exc))
        for p in primes:
            row, ok = _pattern_row(p)
            rows.append(row)
            all_ok = all_ok and ok
        marks = ("pp", "manifold", "non_orientable")
    if args.json:
        print(json.dumps(rows, sort_keys=True, indent=2))
    else:
        headers = ["name", "vertices", "type", "euler", *marks]
        widths = [
            max(len(h), *(len(str(_cell(r[h]))) for r in rows)) for h in headers
        ]
        print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
        for r in rows:
            print("  ".join(str(_cell(r[h])).ljust(w) for h, w in zip(headers, widths)))
    return 0 if all_ok else 1


def _cell(value):
    if isinstance(value, bool):
        return _check(value)
    return value


def cmd_export(args) -> int:
    coll = _read_collection(args.file)
    if args.format == "json":
        _write(coll.to_json(), args.output)
        return 0
    graph = complexes.edge_graph(coll)
    lines = [f"graph {json.dumps(coll.name or 'complex')} {{"]
    for v in graph.nodes:
        lines.append(f'  {v} [label={json.dumps(str(coll.labels[v]))}];')
    for a, b in sorted(graph.edges):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equivelar",
        description="Construct and verify equivelar polyhedral maps and surface patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="generate a map or pattern as canonical JSON")
    p_construct.add_argument("family", choices=["odd", "even", "pattern", "tetrahedron", "torus"])
    p_construct.add_argument("--m", type=int, default=3, help="family parameter m >= 3")
    p_construct.add_argument("--n", type=int, default=0, help="family parameter n >= 0")
    p_construct.add_argument("--p", type=int, default=5, help="odd prime for patterns")
    p_construct.add_argument("-o", "--output", default=None, help="output file ('-' = stdout)")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="run the structural checks on a complex file")
    p_verify.add_argument("file")
    p_verify.add_argument("--level", choices=["pattern", "map"], default="map",
                          help="which checks must pass for exit code 0")
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="print the analysis report")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--full", action="store_true",
                           help="add automorphism, regularity, and self-duality facts (slower)")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(func=cmd_analyze)

    p_dual = sub.add_parser("dual", help="write the dual map")
    p_dual.add_argument("file")
    p_dual.add_argument("-o", "--output", default=None)
    p_dual.set_defaults(func=cmd_dual)

    p_iso = sub.add_parser("iso", help="test two complexes for isomorphism")
    p_iso.add_argument("file_a")
    p_iso.add_argument("file_b")
    p_iso.set_defaults(func=cmd_iso)

    p_table = sub.add_parser("table", help="verify a parameter range and print one row per instance")
    p_table.add_argument("--max-m", type=int, default=4, dest="max_m")
    p_table.add_argument("--max-n", type=int, default=0, dest="max_n")
    p_table.add_argument("--primes", default=None,
                         help="comma-separated odd primes; switches to pattern rows")
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table)

    p_export = sub.add_parser("export", help="export canonical JSON or the edge graph as DOT")
    p_export.add_argument("file")
    p_export.add_argument("--format", choices=["json", "dot"], required=True)
    p_export.add_argument("-o", "--output", default=None)
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
