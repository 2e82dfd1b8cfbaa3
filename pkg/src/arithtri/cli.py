"""Command-line front end: ``arithtri {row,expand,trajectories,dist,compare}``.

Every command writes deterministic text, CSV or JSON to stdout.  Exit codes:
0 success, 1 failed internal check, 2 usage error, 3 enumeration-cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import distributions as dist
from .config import EnumerationCapError, Limits
from .trajectories import System, endpoint_classes, endpoint_index_to_lattice, link_reports
from .triangles import TriangleKind, row
from .words import IndexKind, grouped_expression

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _fmt_float(x: float) -> str:
    # repr is shortest round-trip and never uses a locale separator
    return repr(float(x))


def _words(ws) -> str:
    return " ".join(w.letters.lower() for w in ws)


def cmd_row(args) -> str:
    kind = TriangleKind.parse(args.kind)
    n = args.n
    if n < 0:
        raise UsageError(f"--n must be nonnegative, got {n}")
    limit = Limits().cli_nonlinear_max
    if kind is TriangleKind.NONLINEAR and n > limit:
        raise UsageError(f"--n {n} exceeds the nonlinear row maximum {limit}")
    r = row(kind, n)
    total = r.total
    if total != 1 << n:
        raise AssertionError(f"row sum {total} != 2**{n}")
    if args.format == "json":
        return _json_text({"kind": kind.value, "n": n, "coefficients": list(r.coeffs),
                           "sum": total, "sum_equals_2_pow_n": True})
    pairs = [(i, c) for i, c in enumerate(r.coeffs)]
    if args.format == "csv":
        return _csv_text(["index", "coefficient"], pairs) + f"# sum={total}\n"
    return "".join(f"{i},{c}\n" for i, c in pairs) + f"sum={total}\n"


def cmd_expand(args) -> str:
    kind = IndexKind.parse(args.type)
    g = grouped_expression(args.n, kind)
    if args.format == "json":
        return _json_text({
            "n": g.n, "type": kind.value,
            "classes": [{"index": c.index, "multiplicity": c.multiplicity,
                         "words": [w.letters.lower() for w in c.members]} for c in g.classes],
        })
    rows = [(c.index, c.multiplicity, _words(c.members)) for c in g.classes]
    if args.format == "csv":
        return _csv_text(["index", "multiplicity", "words"], rows)
    return "".join(f"{i},{m},{w}\n" for i, m, w in rows)


def cmd_trajectories(args) -> str:
    system = System.parse(args.system)
    n = args.n
    classes = endpoint_classes(n, system)
    ambiguous = [r for r in link_reports(n, system) if r.ambiguous]
    endpoints = [(idx, endpoint_index_to_lattice(idx, n, system), len(ws), _words(ws))
                 for idx, ws in classes.items()]
    links = [(r.link.step, r.link.start, r.link.angle, "".join(sorted(r.labels)).lower(),
              _words(r.words)) for r in ambiguous]
    if args.format == "json":
        return _json_text({
            "n": n, "system": system.value,
            "endpoints": [{"index": i, "x": x, "count": c, "words": w.split(" ")}
                          for i, x, c, w in endpoints],
            "ambiguous_links": [{"step": t, "start": s, "angle": a, "labels": list(lab),
                                 "words": w.split(" ")} for t, s, a, lab, w in links],
        })
    if args.format == "csv":
        # two tables, separated by a blank line
        return (_csv_text(["index", "x", "count", "words"], endpoints) + "\n"
                + _csv_text(["step", "start", "angle", "labels", "words"], links))
    out = [f"endpoints (n={n}, system={system.value})"]
    out += [f"{i}: x={x} count={c} {{{w}}}" for i, x, c, w in endpoints]
    out.append(f"ambiguous links: {len(links)}")
    out += [f"t={t} x={s} theta={a} labels={lab} words={{{w}}}" for t, s, a, lab, w in links]
    return "\n".join(out) + "\n"


def cmd_dist(args) -> str:
    kind = TriangleKind.parse(args.kind)
    n = args.n
    if n < 1:
        raise UsageError(f"--n must be at least 1, got {n}")
    r = row(kind, n)
    summary = dist.summarize(r)
    env = dist.envelope_of(r)
    interval = dist.half_mass_interval(r)
    fields = {"kind": kind.value, "n": n, "mean": summary.mean, "variance": summary.variance,
              "modes": list(summary.modes), "interval_lo": interval.lo,
              "interval_hi": interval.hi, "interval_width": interval.width,
              "interval_mass": interval.mass}
    if n >= 4:
        est = dist.estimate_exponent(kind, n)
        fields.update(base_length=est.base_length, k=est.k,
                      scale_coefficient=est.scale_coefficient)
    if args.format == "json":
        fields["probabilities"] = list(summary.probabilities)
        fields["cumulative"] = list(env)
        return _json_text(fields)
    header = "".join(f"# {k}={_scalar(v)}\n" for k, v in fields.items())
    table = [(i, _fmt_float(p), _fmt_float(c))
             for i, (p, c) in enumerate(zip(summary.probabilities, env))]
    if args.format == "csv":
        return header + _csv_text(["index", "probability", "cumulative"], table)
    return header + "".join(f"{i},{p},{c}\n" for i, p, c in table)


def _scalar(v) -> str:
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def cmd_compare(args) -> str:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    c = dist.compare_envelopes(args.n)
    fields = {"n": c.n, "rescale_factor": c.rescale_factor,
              "sup_distance": c.sup_distance, "mean_abs_distance": c.mean_abs_distance}
    if args.format == "json":
        fields.update(grid=list(c.grid), linear=list(c.linear_envelope),
                      nonlinear_rescaled=list(c.nonlinear_envelope))
        return _json_text(fields)
    header = "".join(f"# {k}={_scalar(v)}\n" for k, v in fields.items())
    table = [(_fmt_float(g), _fmt_float(a), _fmt_float(b))
             for g, a, b in zip(c.grid, c.linear_envelope, c.nonlinear_envelope)]
    if args.format == "csv":
        return header + _csv_text(["x", "linear", "nonlinear_rescaled"], table)
    return header + "".join(f"{g},{a},{b}\n" for g, a, b in table)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithtri",
        description="Linear and nonlinear arithmetic triangles, words and ray trajectories.")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = ["linear", "nonlinear", "p", "q"]
    formats = ["text", "csv", "json"]

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    add("row", cmd_row, "print one triangle row").add_argument(
        "--kind", choices=kinds, required=True)
    add("expand", cmd_expand, "group the words of (a+b)^n into classes").add_argument(
        "--type", choices=kinds, required=True)
    add("trajectories", cmd_trajectories, "endpoint classes and ambiguous links").add_argument(
        "--system", choices=["p", "q"], required=True)
    add("dist", cmd_dist, "probabilities, envelope, half-mass interval, exponent").add_argument(
        "--kind", choices=kinds, required=True)
    add("compare", cmd_compare, "rescaled envelope comparison")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        sys.stdout.write(args.func(args))
    except UsageError as exc:
        print(f"arithtri {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"arithtri {args.command}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as exc:
        print(f"arithtri {args.command}: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
