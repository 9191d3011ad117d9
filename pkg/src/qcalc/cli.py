"""Command-line front end: qcalc.

Subcommands: lace, zperm, qpoly, csm, enum, check, sweep, render.
Inputs are JSON, given as a file path or inline; see quiver.parse_input
for the rank/lace schema.  Exit codes: 0 success, 1 input error (the
message names the offending entry or flag), 2 a consistency check or
sweep found a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cgpd, engine, pipedream, quiver
from .blockperm import perm_set, zelevinsky_permutation
from .cgpd import CGPD, enumerate_cgpd
from .pipedream import enumerate_pipe_dreams
from .poly import Poly, format_poly
from .quiver import (
    Dims,
    LaceArray,
    lace_array,
    parse_input,
    representative,
    zelevinsky_matrix,
)


class UnknownObject(Exception):
    """render was asked for an object kind it does not know."""


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems on the input-error exit code."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_json(text: str) -> dict:
    if text.lstrip().startswith("{"):
        return json.loads(text)
    with open(text, encoding="utf-8") as handle:
        return json.load(handle)


def _perm_text(v: tuple) -> str:
    if len(v) <= 9:
        return "".join(str(k) for k in v)
    return ",".join(str(k) for k in v)


def _poly_text(p: Poly, args, dims: Dims) -> str:
    if args.format == "latex":
        return format_poly(p, "latex")
    if args.letters:
        return format_poly(p, "letters", dims.r)
    return format_poly(p)


# -- rendering --------------------------------------------------------------

def render_lacing(s: LaceArray) -> str:
    """Rows of vertices, one row per level, joined by lace edges.

    A '|' joins equal positions, '/' and '\\' mark a step left or right;
    vertex columns follow the representative's basis order.
    """
    dims = s.dims
    laces = s.laces()
    index_at: list[dict[int, int]] = [dict() for _ in range(dims.n + 1)]
    counters = [0] * (dims.n + 1)
    for lace_id, (p, q) in enumerate(laces):
        for i in range(p, q + 1):
            index_at[i][lace_id] = counters[i]
            counters[i] += 1
    width = 2 * max(dims.r) - 1
    lines = []
    for i in range(dims.n + 1):
        row = [" "] * width
        for idx in range(dims.r[i]):
            row[2 * idx] = "*"
        lines.append("".join(row).rstrip())
        if i == dims.n:
            break
        link = [" "] * width
        for lace_id, (p, q) in enumerate(laces):
            if p <= i and i + 1 <= q:
                a, b = index_at[i][lace_id], index_at[i + 1][lace_id]
                col = a + b
                link[col] = "|" if a == b else ("\\" if b > a else "/")
        lines.append("".join(link).rstrip())
    return "\n".join(lines)


def render_pipedream(d: int, crosses: frozenset, dims: Dims | None = None) -> str:
    """The d x d grid, '+' at crosses and '.' elsewhere, with block rules
    drawn when the block structure is known."""
    cell = [["+" if (q, p) in crosses else "." for p in range(1, d + 1)] for q in range(1, d + 1)]
    if dims is None:
        return "\n".join("".join(row) for row in cell)
    row_cuts = set()
    acc = 0
    for size in dims.r[:-1]:
        acc += size
        row_cuts.add(acc)
    col_cuts = set()
    acc = 0
    for size in reversed(dims.r[1:]):
        acc += size
        col_cuts.add(acc)
    lines = []
    for q in range(1, d + 1):
        line = []
        for p in range(1, d + 1):
            line.append(cell[q - 1][p - 1])
            if p in col_cuts and p < d:
                line.append("|")
        lines.append("".join(line))
        if q in row_cuts and q < d:
            rule = []
            for p in range(1, d + 1):
                rule.append("-")
                if p in col_cuts and p < d:
                    rule.append("+")
            lines.append("".join(rule))
    return "\n".join(lines)


def render_cgpd(delta: CGPD) -> str:
    """The chain of rectangles laid out northeast to southwest."""
    dims = delta.dims
    width = sum(dims.r[1:])
    height = sum(dims.r[:-1])
    canvas = [[" "] * width for _ in range(height)]
    row_off = 0
    col_end = width  # one past the east edge of the current rectangle
    for i in range(dims.n):
        cols = dims.r[i + 1]
        for j, row in enumerate(delta.grids[i]):
            for k, code in enumerate(row):
                canvas[row_off + j][col_end - cols + k] = code
        row_off += dims.r[i]
        col_end -= cols
    return "\n".join("".join(row).rstrip() for row in canvas)


def render_zmatrix(rep) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in zelevinsky_matrix(rep))


def _render(args) -> str:
    obj = _load_json(args.input)
    what = args.what
    if what == "lacing":
        return render_lacing(lace_array(parse_input(obj)))
    if what == "pipedream":
        d = int(obj["d"])
        crosses = frozenset((int(q), int(p)) for q, p in obj.get("crosses", []))
        for q, p in crosses:
            if not (1 <= q and 1 <= p and q + p <= d):
                raise pipedream.RegionViolation(
                    f"cross at ({q},{p}) is outside the grid"
                )
        dims = Dims(tuple(obj["dims"])) if "dims" in obj else None
        return render_pipedream(d, crosses, dims)
    if what == "cgpd":
        dims = Dims(tuple(obj["dims"]))
        return render_cgpd(CGPD.from_json(dims, obj))
    if what == "zmatrix":
        r = parse_input(obj)
        return render_zmatrix(representative(lace_array(r)))
    raise UnknownObject(f"unknown render object {what!r}")


# -- subcommands ------------------------------------------------------------

def _cmd_lace(args) -> int:
    r = parse_input(_load_json(args.input))
    s = lace_array(r)
    if args.format == "json":
        print(json.dumps({
            "dims": list(s.dims.r),
            "lace": {f"{p},{q}": v for (p, q), v in sorted(s.entries.items()) if v},
        }))
        return 0
    for (p, q), v in sorted(s.entries.items()):
        print(f"s[{p},{q}] = {v}")
    return 0


def _cmd_zperm(args) -> int:
    r = parse_input(_load_json(args.input))
    z = zelevinsky_permutation(r)
    if args.format == "json":
        print(json.dumps({"zperm": list(z)}))
    else:
        print(_perm_text(z))
    return 0


def _cmd_qpoly(args) -> int:
    r = parse_input(_load_json(args.input))
    p = engine.compute(r, "qpoly", args.method)
    if args.format == "json":
        print(json.dumps({"target": "qpoly", "method": args.method, "polynomial": format_poly(p)}))
    else:
        print(_poly_text(p, args, r.dims))
    return 0


def _cmd_csm(args) -> int:
    r = parse_input(_load_json(args.input))
    if args.region == "full":
        if args.method != "pd":
            raise ValueError("flag --region full requires --method pd")
        p = pipedream.csm_pd_full_region(r)
    else:
        p = engine.compute(r, "csm", args.method)
    if args.format == "json":
        print(json.dumps({"target": "csm", "method": args.method, "polynomial": format_poly(p)}))
    else:
        print(_poly_text(p, args, r.dims))
    return 0


def _cmd_enum(args) -> int:
    r = parse_input(_load_json(args.input))
    if args.what == "pd":
        z = zelevinsky_permutation(r)
        dreams = enumerate_pipe_dreams(r.dims, z, args.region, "reduced")
        items = [dream.to_json() for dream in dreams]
        texts = [render_pipedream(r.dims.d, dream.crosses, r.dims) for dream in dreams]
    elif args.what == "cgpd":
        diagrams = enumerate_cgpd(r)
        items = [delta.to_json() for delta in diagrams]
        texts = [render_cgpd(delta) for delta in diagrams]
    elif args.what == "perm":
        perms = sorted(perm_set(r))
        items = [{"perm": list(v)} for v in perms]
        texts = [_perm_text(v) for v in perms]
    else:
        raise ValueError(f"unknown value for flag --what: {args.what!r}")
    if args.format == "json":
        print(json.dumps(items))
    else:
        print(f"count: {len(items)}")
        for text in texts:
            print(text)
            print()
    return 0


def _report_text(report: engine.ConsistencyReport) -> str:
    lines = []
    for name, p in sorted(report.polynomials.items()):
        lines.append(f"{name}: {format_poly(p)}")
    for name, flag in sorted(report.equal.items()):
        lines.append(f"{name}: {'ok' if flag else 'FAIL'}")
    lines.append(f"degree law: {'ok' if report.degree_ok else 'FAIL'}")
    lines.append(f"leading term law: {'ok' if report.leading_ok else 'FAIL'}")
    for name, value in sorted(report.counts.items()):
        lines.append(f"count {name}: {value}")
    lines.append(f"result: {'ok' if report.ok else 'FAIL'}")
    return "\n".join(lines)


def _cmd_check(args) -> int:
    r = parse_input(_load_json(args.input))
    report = engine.check(r)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(_report_text(report))
    return 0 if report.ok else 2


def _cmd_sweep(args) -> int:
    reports = engine.sweep(args.budget)
    if args.format == "json":
        print(json.dumps([report.to_json() for report in reports]))
    else:
        for report in reports:
            r = report.rank
            ranks = " ".join(
                f"{i}{j}:{r[i, j]}" for i, j in r.dims.pairs() if i != j
            )
            status = "ok" if report.ok else "FAIL"
            print(f"dims {r.dims.r} ranks {ranks or '-'} {status}")
        bad = sum(1 for report in reports if not report.ok)
        print(f"checked {len(reports)} orbits, {bad} failures")
    return 0 if all(report.ok for report in reports) else 2


def _cmd_render(args) -> int:
    print(_render(args))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _Parser(prog="qcalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, inp=True, method=False, fmt=("text", "latex", "json")):
        p = sub.add_parser(name)
        if inp:
            p.add_argument("input", help="path to a JSON file, or inline JSON")
        if method:
            p.add_argument("--method", choices=("pd", "cgpd", "ratio"), default="pd")
        p.add_argument("--format", choices=fmt, default="text")
        p.set_defaults(fn=fn)
        return p

    add("lace", _cmd_lace)
    add("zperm", _cmd_zperm)
    p = add("qpoly", _cmd_qpoly, method=True)
    p.add_argument("--letters", action="store_true")
    p = add("csm", _cmd_csm, method=True)
    p.add_argument("--letters", action="store_true")
    p.add_argument("--region", choices=("strict", "full"), default="strict")
    p = add("enum", _cmd_enum)
    p.add_argument("--what", choices=("pd", "cgpd", "perm"), default="pd")
    p.add_argument("--region", choices=("strict", "full"), default="strict")
    p = add("check", _cmd_check)
    p = sub.add_parser("sweep")
    p.add_argument("budget", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_sweep)
    p = sub.add_parser("render")
    p.add_argument("input", help="path to a JSON file, or inline JSON")
    p.add_argument("--what", required=True)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.set_defaults(fn=_cmd_render)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (
        ValueError,
        KeyError,
        OSError,
        json.JSONDecodeError,
        quiver.NotRealizable,
        quiver.BadRowSums,
        cgpd.InvalidCGPD,
        pipedream.RegionViolation,
        UnknownObject,
    ) as exc:
        print(f"qcalc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
