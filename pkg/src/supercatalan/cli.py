"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
usage or parse errors. All numbers are written as exact decimal strings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from . import bijection, codec, numbers, paths, tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str):
        self.command = command
        self.lines: list[str] = []
        self.data: dict = {}
        self.ok = True
        self.elapsed: float | None = None

    def fail(self):
        self.ok = False

    def emit(self, fmt: str, out=None):
        out = out or sys.stdout
        if fmt == "json":
            payload = {"command": self.command, "ok": self.ok, "results": self.data}
            if self.elapsed is not None:
                payload["elapsed_s"] = f"{self.elapsed:.3f}"
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write(f"$ {self.command}\n")
            for line in self.lines:
                out.write(line + "\n")
            out.write(("PASS" if self.ok else "FAIL") + "\n")
            if self.elapsed is not None:
                out.write(f"elapsed: {self.elapsed:.3f}s\n")


def _parse_code_arg(text: str) -> codec.CtreeCode:
    try:
        code = codec.parse_code(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return code


def cmd_numbers(args, rep: Report):
    if args.m < 0 or args.max_n < args.m:
        raise UsageError("need m >= 0 and max-n >= m")
    rows = []
    for n in range(0, args.max_n + 1):
        value = numbers.super_catalan(args.m, n)
        row = {"n": str(n), "value": str(value)}
        line = f"n={n} {value}"
        if args.check and n >= args.m:
            rhs = numbers.recurrence_rhs(args.m, n)
            ok = rhs == value
            row["recurrence"] = str(rhs)
            row["pass"] = ok
            line += f" recurrence={rhs} {'pass' if ok else 'FAIL'}"
            if not ok:
                rep.fail()
        rows.append(row)
        rep.lines.append(line)
    rep.data = {"m": str(args.m), "rows": rows}


def cmd_enumerate(args, rep: Report):
    if args.n < 0:
        raise UsageError("n must be >= 0")
    if args.rooted:
        codes = [codec.CtreeCode(r, u) for r in range(6) for u in codec.enumerate_planted(args.n)]
        expected = numbers.ctree_count(args.n, rooted=True)
    else:
        codes = codec.enumerate_unrooted(args.n)
        expected = numbers.ctree_count(args.n, rooted=False)
    if len(codes) != expected:
        rep.fail()
    rep.data = {"n": str(args.n), "rooted": args.rooted, "count": str(len(codes)),
                "expected": str(expected)}
    if args.by_hidden:
        if args.n < 2:
            raise UsageError("--by-hidden needs n >= 2")
        groups: dict[int, list[str]] = {}
        for code in codes:
            k = tree.hidden_count(tree.from_code(code))
            groups.setdefault(k, []).append(codec.format_code(code))
        rep.data["by_hidden"] = {}
        for k in sorted(groups):
            want = numbers.hidden_class_count(args.n, k) * (args.n + 2 if args.rooted else 1)
            ok = len(groups[k]) == want
            if not ok:
                rep.fail()
            rep.lines.append(f"hidden={k} count={len(groups[k])} formula={want} "
                             f"{'pass' if ok else 'FAIL'}")
            entry = {"count": str(len(groups[k])), "formula": str(want)}
            if not args.count_only:
                entry["codes"] = groups[k]
                rep.lines.extend("  " + c for c in groups[k])
            rep.data["by_hidden"][str(k)] = entry
    elif args.count_only:
        rep.lines.append(str(len(codes)))
    else:
        rep.data["codes"] = [codec.format_code(c) for c in codes]
        rep.lines.extend(rep.data["codes"])
        rep.lines.append(f"count={len(codes)}")


def cmd_validate(args, rep: Report):
    code = _parse_code_arg(args.code)
    if not code.u:
        rep.lines.append("0-ctree: valid")
        rep.data = {"code": args.code, "valid": True, "trace": []}
        return
    trace = codec.validate(code.u)
    chain = [codec.format_sequence(s) for s in trace.steps]
    rep.lines.append(" -> ".join(chain))
    verdict = "valid" if trace.valid else f"invalid: {trace.reason}"
    if trace.index is not None:
        verdict += f" at index {trace.index + 1}"
    rep.lines.append(verdict)
    rep.data = {"code": args.code, "valid": trace.valid, "trace": chain,
                "reason": trace.reason, "index": None if trace.index is None else str(trace.index + 1)}
    if not trace.valid:
        rep.fail()


def _load_config(args) -> bijection.Configuration:
    if args.config:
        text = Path(args.config).read_text()
    elif args.config_json:
        text = args.config_json
    else:
        raise UsageError("bijection forward needs --config FILE or --config-json TEXT")
    try:
        return bijection.Configuration.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad configuration: {exc}") from exc


def cmd_bijection(args, rep: Report):
    if args.action == "forward":
        cfg = _load_config(args)
        problems = bijection.validate_config(cfg)
        if problems:
            rep.lines.extend(problems)
            rep.data = {"errors": problems}
            rep.fail()
            return
        code = bijection.forward(cfg)
        census = tree.class_census(tree.from_code(code))
        rep.lines.append(codec.format_code(code))
        rep.lines.append(" ".join(f"{c}={v}" for c, v in census.items()))
        rep.data = {"code": codec.format_code(code),
                    "census": {str(c): str(v) for c, v in census.items()}}
    elif args.action == "inverse":
        code = _parse_code_arg(args.code)
        if not codec.is_valid_code(code) or code.n < 2:
            raise UsageError(f"{args.code} is not a valid n-ctree code with n >= 2")
        cfg = bijection.inverse(codec.canonical(code))
        rep.lines.append(cfg.to_json())
        rep.data = {"config": json.loads(cfg.to_json())}
    else:
        if args.max_n < args.min_n or args.min_n < 2:
            raise UsageError("need 2 <= min-n <= max-n")
        results = []
        for n in range(args.min_n, args.max_n + 1):
            report = bijection.verify_bijection(n)
            for row in report.rows:
                rep.lines.append(
                    f"n={n} k={row.k} configs={row.configs} formula={row.formula} "
                    f"census={row.census} injective={row.injective} image={row.image_is_class} "
                    f"inv.fwd={row.inverse_forward} fwd.inv={row.forward_inverse} "
                    f"{'pass' if row.ok else 'FAIL'}")
                results.append({"n": str(n), "k": str(row.k), "configs": str(row.configs),
                                "formula": str(row.formula), "census": str(row.census),
                                "pass": row.ok})
            if not report.ok:
                rep.fail()
        rep.data = {"rows": results}


_STAT_NAMES = {"duu": "duu", "odd-inclines": "odd_inclines_halved",
               "even-inclines": "even_inclines_halved"}


def cmd_paths(args, rep: Report):
    if args.m not in (0, 1) or args.n < 1:
        raise UsageError("need m in {0, 1} and n >= 1")
    stat = _STAT_NAMES[args.stat]
    if stat != "duu" and stat != paths.default_incline_stat(args.m):
        raise UsageError(f"--stat {args.stat} has no interpretation for m={args.m}")
    check = paths.check_statistic(args.m, args.n, stat)
    ups, downs, constraint = check.family
    rep.lines.append(f"family: {ups} U, {downs} D, constraint={constraint}")
    rep.lines.append("distribution: " + ", ".join(f"{k}:{v}" for k, v in check.distribution.items()))
    for k, got, want, ok in check.rows:
        rep.lines.append(f"k={k} brute={got} term={want} {'pass' if ok else 'FAIL'}")
    rep.data = {"family": {"ups": str(ups), "downs": str(downs), "constraint": constraint},
                "distribution": {str(k): str(v) for k, v in check.distribution.items()},
                "rows": [{"k": str(k), "brute": str(g), "term": str(w), "pass": ok}
                         for k, g, w, ok in check.rows]}
    if not check.ok:
        rep.fail()


def render_svg(t: tree.Ctree, pos) -> str:
    """SVG drawing of an embedded ctree; one line per edge, one circle per vertex."""
    half_sqrt3 = math.sqrt(3) / 2
    xy = {v: (a + b / 2, -b * half_sqrt3) for v, (a, b) in pos.items()}
    xs = [p[0] for p in xy.values()]
    ys = [p[1] for p in xy.values()]
    pad = 1.0
    minx, miny = min(xs) - pad, min(ys) - pad
    width, height = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    scale = 400.0 / max(width, height)
    r = 3.0 / scale

    def f(x):
        return f"{x:.3f}"

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{f(width * scale)}" height="{f(height * scale)}" '
           f'viewBox="{f(minx)} {f(miny)} {f(width)} {f(height)}">',
           f'<g stroke="black" stroke-width="{f(1.0 / scale)}">']
    for v, w in t.edges():
        (x1, y1), (x2, y2) = xy[v], xy[w]
        out.append(f'<line x1="{f(x1)}" y1="{f(y1)}" x2="{f(x2)}" y2="{f(y2)}"/>')
    out.append("</g>")
    for v in range(len(t.adj)):
        x, y = xy[v]
        fill = "red" if v == t.root else "black"
        out.append(f'<circle cx="{f(x)}" cy="{f(y)}" r="{f(r)}" fill="{fill}"/>')
    if t.root is not None:
        x, y = xy[t.root]
        out.append(f'<text x="{f(x + 2 * r)}" y="{f(y - 2 * r)}" font-size="{f(12 / scale)}">root</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_render(args, rep: Report):
    code = _parse_code_arg(args.code)
    if not codec.is_valid_code(code):
        raise UsageError(f"{args.code} is not a valid code")
    t = tree.from_code(code)
    pos = tree.embed(t)
    svg = render_svg(t, pos)
    try:
        Path(args.output).write_text(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from exc
    rep.lines.append(f"wrote {args.output}: {len(t.edges())} edges, {len(t.adj)} vertices")
    rep.data = {"output": args.output, "edges": str(len(t.edges())), "vertices": str(len(t.adj))}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercatalan",
                                     description="Super-Catalan numbers and aligned cubic trees")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--timing", action="store_true", help="report elapsed time")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", help="super-Catalan numbers of order m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare against the recurrence")
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("enumerate", help="enumerate n-ctrees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rooted", action="store_true")
    p.add_argument("--by-hidden", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("validate", help="check a code by pruning")
    p.add_argument("code")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bijection", help="configurations <-> ctrees")
    bsub = p.add_subparsers(dest="action", required=True)
    q = bsub.add_parser("forward")
    q.add_argument("--config")
    q.add_argument("--config-json")
    q = bsub.add_parser("inverse")
    q.add_argument("--code", required=True)
    q = bsub.add_parser("verify")
    q.add_argument("--max-n", type=int, required=True)
    q.add_argument("--min-n", type=int, default=2)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("paths", help="lattice path statistics for m = 0, 1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=sorted(_STAT_NAMES), default="duu")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("render", help="draw a ctree as SVG")
    p.add_argument("code")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    echo = "supercatalan " + " ".join(sys.argv[1:] if argv is None else argv)
    rep = Report(echo)
    start = time.perf_counter()
    try:
        args.func(args, rep)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        rep.elapsed = time.perf_counter() - start
    rep.emit(args.format)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
