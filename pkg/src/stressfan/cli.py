"""Command-line front end.

Subcommands: ``analyze`` (validation, both stress-space routes, agreement),
``fan`` (planar fan as JSON), ``table`` (multiplicity and intersection
tables), ``check`` (validation only). Exit codes: 0 success, 1 route
disagreement, 2 malformed input or wrong input type, 3 validation failure.

Input schema (strict; unknown fields rejected, numbers must be integers,
rationals are "p/q" strings with q > 0):

  planar:  {"type": "planar",
            "vertices": [{"id": str, "xy": [int, int]}],
            "edges": [[str, str]]}
  general: {"type": "general", "dim": int, "k": int,
            "edges": [{"id": str, "point": [rat], "dirs": [[int]]}],
            "faces": [{"id": str, "point": [rat], "dirs": [[int]]}],
            "incidences": [{"edge": str, "face": str, "sample": [rat]}]}

Analyze output schema (--format json):

  {"valid": bool, "dim_stress_space": int, "stress_basis": [{id: "p/q"}],
   "routes_agree": bool|null, "fan": {...}|null}

Planar stress entries are keyed "u--v" by the sorted edge pair; general
entries by face id. Rationals serialize as "p/q" with q >= 1.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from stressfan import chow, fans, glued
from stressfan.errors import DegenerateHull, InvalidInput, UnsupportedCodim
from stressfan.framework import (
    KEdge,
    KFace,
    KFramework,
    KIncidence,
    PlanarFramework,
    validate_general,
    validate_planar,
)

_RAT_RE = re.compile(r"^-?\d+/\d+$")


@dataclass(frozen=True)
class InputDocument:
    framework: object  # PlanarFramework or KFramework

    @property
    def kind(self):
        return "planar" if isinstance(self.framework, PlanarFramework) else "general"

    def to_json(self):
        fw = self.framework
        if self.kind == "planar":
            return {
                "type": "planar",
                "vertices": [{"id": vid, "xy": [p[0], p[1]]} for vid, p in fw.vertices],
                "edges": [[u, v] for u, v in fw.edges],
            }
        return {
            "type": "general",
            "dim": fw.dim,
            "k": fw.k,
            "edges": [
                {"id": e.id, "point": [_rat_out(x) for x in e.point], "dirs": [list(d) for d in e.dirs]}
                for e in fw.edges
            ],
            "faces": [
                {"id": f.id, "point": [_rat_out(x) for x in f.point], "dirs": [list(d) for d in f.dirs]}
                for f in fw.faces
            ],
            "incidences": [
                {"edge": i.edge, "face": i.face, "sample": [_rat_out(x) for x in i.sample]}
                for i in fw.incidences
            ],
        }


def _rat_out(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fail(path, message):
    raise InvalidInput(path, message)


def _want_int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected an integer, got {value!r}")
    return value


def _want_rat(value, path):
    if isinstance(value, bool):
        _fail(path, f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value):
            _fail(path, f"expected 'p/q' with integer p and positive q, got {value!r}")
        p, q = value.split("/")
        if int(q) <= 0:
            _fail(path, f"rational denominator must be positive in {value!r}")
        return Fraction(int(p), int(q))
    _fail(path, f"expected an integer or 'p/q' string, got {value!r}")


def _want_str(value, path):
    if not isinstance(value, str):
        _fail(path, f"expected a string, got {value!r}")
    return value


def _want_list(value, path):
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {value!r}")
    return value


def _want_obj(value, path, fields):
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {value!r}")
    extra = set(value) - set(fields)
    if extra:
        _fail(path, f"unknown fields {sorted(extra)}")
    missing = set(fields) - set(value)
    if missing:
        _fail(path, f"missing fields {sorted(missing)}")
    return value


def _parse_int_vector(value, path, length=None):
    value = _want_list(value, path)
    if length is not None and len(value) != length:
        _fail(path, f"expected {length} entries, got {len(value)}")
    return tuple(_want_int(x, f"{path}[{i}]") for i, x in enumerate(value))


def _parse_rat_vector(value, path, length=None):
    value = _want_list(value, path)
    if length is not None and len(value) != length:
        _fail(path, f"expected {length} entries, got {len(value)}")
    return tuple(_want_rat(x, f"{path}[{i}]") for i, x in enumerate(value))


def parse_document(text):
    """Strict parse of the input schema; raises InvalidInput with a path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput("", f"not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}")
    if not isinstance(doc, dict):
        _fail("", "top level must be an object")
    kind = doc.get("type")
    if kind == "planar":
        _want_obj(doc, "", ("type", "vertices", "edges"))
        vertices = []
        for i, v in enumerate(_want_list(doc["vertices"], "vertices")):
            _want_obj(v, f"vertices[{i}]", ("id", "xy"))
            vid = _want_str(v["id"], f"vertices[{i}].id")
            xy = _parse_int_vector(v["xy"], f"vertices[{i}].xy", 2)
            vertices.append((vid, xy))
        edges = []
        for i, e in enumerate(_want_list(doc["edges"], "edges")):
            e = _want_list(e, f"edges[{i}]")
            if len(e) != 2:
                _fail(f"edges[{i}]", "expected a pair of vertex ids")
            edges.append((_want_str(e[0], f"edges[{i}][0]"), _want_str(e[1], f"edges[{i}][1]")))
        return InputDocument(PlanarFramework(tuple(vertices), tuple(edges)))
    if kind == "general":
        _want_obj(doc, "", ("type", "dim", "k", "edges", "faces", "incidences"))
        dim = _want_int(doc["dim"], "dim")
        k = _want_int(doc["k"], "k")
        if dim < 1 or not (1 <= k <= dim):
            _fail("k", f"need 1 <= k <= dim, got k={k}, dim={dim}")

        def parse_subspaces(key, ndirs, ctor):
            out = []
            for i, item in enumerate(_want_list(doc[key], key)):
                _want_obj(item, f"{key}[{i}]", ("id", "point", "dirs"))
                sid = _want_str(item["id"], f"{key}[{i}].id")
                point = _parse_rat_vector(item["point"], f"{key}[{i}].point", dim)
                dirs = _want_list(item["dirs"], f"{key}[{i}].dirs")
                if len(dirs) != ndirs:
                    _fail(f"{key}[{i}].dirs", f"expected {ndirs} direction vectors, got {len(dirs)}")
                dirs = tuple(_parse_int_vector(d, f"{key}[{i}].dirs[{j}]", dim) for j, d in enumerate(dirs))
                out.append(ctor(sid, point, dirs))
            return tuple(out)

        edges = parse_subspaces("edges", k - 1, KEdge)
        faces = parse_subspaces("faces", k, KFace)
        incidences = []
        for i, inc in enumerate(_want_list(doc["incidences"], "incidences")):
            _want_obj(inc, f"incidences[{i}]", ("edge", "face", "sample"))
            incidences.append(
                KIncidence(
                    _want_str(inc["edge"], f"incidences[{i}].edge"),
                    _want_str(inc["face"], f"incidences[{i}].face"),
                    _parse_rat_vector(inc["sample"], f"incidences[{i}].sample", dim),
                )
            )
        return InputDocument(KFramework(dim, k, edges, faces, tuple(incidences)))
    _fail("type", f"expected 'planar' or 'general', got {kind!r}")


def load_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput("", f"cannot read {path}: {exc}")
    return parse_document(text)


def _stress_key(key):
    return f"{key[0]}--{key[1]}" if isinstance(key, tuple) else key


def _stress_maps(basis):
    out = []
    for vec in basis.vectors:
        entry = {}
        for key, value in zip(basis.keys, vec):
            f = Fraction(value)
            entry[_stress_key(key)] = f"{f.numerator}/{f.denominator}"
        out.append(entry)
    return out


def _validation_json(report):
    return {
        "valid": report.ok,
        "failures": [{"kind": i.kind, "message": i.message, "where": list(i.where)} for i in report.failures],
        "warnings": [{"kind": i.kind, "message": i.message, "where": list(i.where)} for i in report.warnings],
    }


def _ray_name(fan, i):
    return "0" if fan.rays[i].is_completion else fan.rays[i].label[1]


def _wall_label(fan, wall):
    a, b = wall.rays
    return f"tau({_ray_name(fan, a)},{_ray_name(fan, b)})"


def _cone_label(fan, cone):
    return "sigma(" + ",".join(_ray_name(fan, i) for i in cone) + ")"


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def build_tables(fan):
    """Multiplicity and intersection tables as plain data."""
    table = chow.intersection_table(fan)
    mults = [(_wall_label(fan, w), chow.multiplicity(fan, w.rays)) for w in table.walls]
    mults += [(_cone_label(fan, c), chow.multiplicity(fan, c)) for c in fan.max_cones]
    inter = {
        "rays": [f"D({_ray_name(fan, i)})" for i in range(len(fan.rays))],
        "walls": [f"V({_wall_label(fan, w)})" for w in table.walls],
        "entries": [[_frac_str(x) for x in row] for row in table.entries],
    }
    return {"multiplicities": [{"cone": label, "mult": m} for label, m in mults], "intersections": inter}


def render_tables(tables, fmt):
    lines = []
    if fmt == "tsv":
        lines.append("cone\tmult")
        for row in tables["multiplicities"]:
            lines.append(f"{row['cone']}\t{row['mult']}")
        lines.append("")
        inter = tables["intersections"]
        lines.append("\t" + "\t".join(inter["walls"]))
        for name, row in zip(inter["rays"], inter["entries"]):
            lines.append(name + "\t" + "\t".join(row))
    elif fmt == "md":
        lines.append("| cone | mult |")
        lines.append("| --- | --- |")
        for row in tables["multiplicities"]:
            lines.append(f"| {row['cone']} | {row['mult']} |")
        lines.append("")
        inter = tables["intersections"]
        lines.append("| | " + " | ".join(inter["walls"]) + " |")
        lines.append("|" + " --- |" * (len(inter["walls"]) + 1))
        for name, row in zip(inter["rays"], inter["entries"]):
            lines.append("| " + name + " | " + " | ".join(row) + " |")
    else:
        raise ValueError(f"unknown table format {fmt!r}")
    return "\n".join(lines)


def cmd_check(args):
    doc = load_document(args.file)
    report = validate_planar(doc.framework) if doc.kind == "planar" else validate_general(doc.framework)
    if args.format == "json":
        print(json.dumps(_validation_json(report), indent=2))
    else:
        print(f"validation: {'ok' if report.ok else 'FAILED'}")
        for issue in report.failures:
            print(f"  failure [{issue.kind}] {issue.message}")
        for issue in report.warnings:
            print(f"  warning [{issue.kind}] {issue.message}")
    return 0 if report.ok else 3


def cmd_fan(args):
    doc = load_document(args.file)
    if doc.kind != "planar":
        print("fan requires a planar framework", file=sys.stderr)
        return 2
    report = validate_planar(doc.framework)
    if not report.ok:
        for issue in report.failures:
            print(f"failure [{issue.kind}] {issue.message}", file=sys.stderr)
        return 3
    try:
        fan = fans.build(doc.framework, args.triangulation_order)
    except DegenerateHull as exc:
        print(f"failure [degenerate_hull] {exc}", file=sys.stderr)
        return 3
    print(json.dumps(fan.to_json(), indent=2))
    return 0


def cmd_table(args):
    doc = load_document(args.file)
    if doc.kind != "planar":
        print("table requires a planar framework", file=sys.stderr)
        return 2
    report = validate_planar(doc.framework)
    if not report.ok:
        for issue in report.failures:
            print(f"failure [{issue.kind}] {issue.message}", file=sys.stderr)
        return 3
    try:
        fan = fans.build(doc.framework, args.triangulation_order)
    except DegenerateHull as exc:
        print(f"failure [degenerate_hull] {exc}", file=sys.stderr)
        return 3
    tables = build_tables(fan)
    if args.format == "json":
        print(json.dumps(tables, indent=2))
    else:
        print(render_tables(tables, args.format))
    return 0


def cmd_analyze(args):
    doc = load_document(args.file)
    fw = doc.framework
    report = validate_planar(fw) if doc.kind == "planar" else validate_general(fw)
    if not report.ok:
        if args.format == "json":
            out = {"valid": False, "dim_stress_space": None, "stress_basis": None, "routes_agree": None, "fan": None}
            print(json.dumps(out, indent=2))
        else:
            print("validation: FAILED")
            for issue in report.failures:
                print(f"  failure [{issue.kind}] {issue.message}")
        return 3

    run_a = args.route in ("a", "both")
    run_b = args.route in ("b", "both")
    direct = toric = None
    fan = None
    notes = []
    if run_a:
        from stressfan.framework import self_stress_basis

        direct = self_stress_basis(fw)
    if run_b:
        if doc.kind == "planar":
            try:
                fan = fans.build(fw, args.triangulation_order)
                toric = chow.constrained_stress_space(fw, fan).stress_basis()
            except DegenerateHull as exc:
                notes.append(f"toric route skipped: {exc}")
        else:
            try:
                toric = glued.glued_stress_space(fw, _check=not run_a)
            except UnsupportedCodim as exc:
                notes.append(f"glued route skipped: {exc}")

    agree = None
    details = ()
    if direct is not None and toric is not None:
        comparison = chow.compare_routes(fw, order=args.triangulation_order)
        agree = comparison.agree
        details = comparison.details
    basis = direct if direct is not None else toric
    if basis is None:
        print("no route produced a result", file=sys.stderr)
        return 2

    if args.format == "json":
        out = {
            "valid": True,
            "dim_stress_space": basis.dim,
            "stress_basis": _stress_maps(basis),
            "routes_agree": agree,
            "fan": fan.to_json() if fan is not None else None,
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"validation: ok ({len(report.warnings)} warnings)")
        for note in notes:
            print(f"note: {note}")
        print(f"stress space dimension: {basis.dim}")
        for i, entry in enumerate(_stress_maps(basis)):
            items = ", ".join(f"{k}={v}" for k, v in entry.items())
            print(f"  basis[{i}]: {items}")
        if basis.dim == 0:
            print("  no nonzero self-stress: the framework is not a tensegrity")
        if agree is not None:
            print(f"routes agree: {agree}")
            for d in details:
                print(f"  mismatch: {d}")
        if fan is not None:
            print(
                f"fan: {len(fan.rays)} rays, {len(fan.max_cones)} maximal cones, "
                f"{len(fan.walls)} walls, added edges: {list(fan.triangulation.added_edges)}"
            )
            if args.table:
                print(render_tables(build_tables(fan), "tsv"))
        if doc.kind == "general":
            for eid, lf in sorted(glued.local_fans(fw).items()):
                print(f"local fan at {eid}: {json.dumps(lf.to_json())}")
    if agree is False:
        return 1
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="stressfan", description="Exact self-stress spaces of rational frameworks")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, table_default=False):
        p.add_argument("file", help="framework JSON file")
        p.add_argument("--triangulation-order", choices=("lex", "revlex"), default="lex")

    p = sub.add_parser("analyze", help="validate, solve both routes, compare")
    add_common(p)
    p.add_argument("--route", choices=("a", "b", "both"), default="both",
                   help="a: direct balancing kernel, b: toric/glued route")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--table", action="store_true", help="include tables in text output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fan", help="dump the planar fan as JSON")
    add_common(p)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("table", help="multiplicity and intersection tables")
    add_common(p)
    p.add_argument("--format", choices=("tsv", "md", "json"), default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="validation only")
    add_common(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_check)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
