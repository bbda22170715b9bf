"""Command line interface.

Exit codes: 0 success, 1 failed self-test, 2 bad input, 3 internal
consistency failure. Every rational is printed as an exact "num/den" string.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import acceptance, nemethi, obstruct, seifert, surgery
from .errors import ConsistencyError, InvalidArgumentError, UnsupportedSurgeryError
from .numtheory import dedekind_sum, render

FORMAT_VERSION = "1"


def envelope(command: str, inputs: dict, results) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "format_version": FORMAT_VERSION}


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _vector(v) -> str:
    return " ".join(map(str, v))


# -- commands ---------------------------------------------------------------

def cmd_dedekind(args) -> str:
    value = dedekind_sum(args.p, args.q)
    if args.format == "json":
        return dump_json(envelope("dedekind", {"p": args.p, "q": args.q}, {"s": render(value)}))
    if args.format == "csv":
        return dump_csv(["p", "q", "s"], [[args.p, args.q, render(value)]])
    return render(value) + "\n"


def cmd_dinv(args) -> str:
    table = nemethi.d_table(args.m, args.n)
    entries = [{"vector": list(v), "d": render(d)} for v, d in table.entries]
    if args.format == "json":
        payload = {"m": args.m, "n": args.n, "manifold": str(table.manifold), "entries": entries}
        return dump_json(envelope("dinv", {"m": args.m, "n": args.n}, payload))
    if args.format == "csv":
        return dump_csv(["vector", "d"], [[_vector(v), render(d)] for v, d in table.entries])
    lines = [f"Y_{args.n} (m={args.m}) = {table.manifold}"]
    lines += [f"{_vector(v):>16}  {render(d)}" for v, d in table.entries]
    return "\n".join(lines) + "\n"


def _surgery_knot(args):
    if args.unknot:
        return surgery.UNKNOT
    if args.alexander:
        return surgery.AlexanderPoly.parse(args.alexander)
    if args.knot:
        spec = surgery.parse_surgery_spec(f"{args.knot} 1/1")
        return spec.knot
    raise InvalidArgumentError("one of --knot, --unknot, --alexander is required")


def cmd_surgery(args) -> str:
    knot = _surgery_knot(args)
    if knot != surgery.UNKNOT and args.q != 1:
        raise UnsupportedSurgeryError(f"only integral surgery is supported for knots, got q={args.q}")
    spec = surgery.SurgerySpec(knot, args.p, args.q)
    labels = range(spec.p) if args.i is None else [args.i]
    if knot == surgery.UNKNOT and args.q != 1:
        if args.p < 1:
            raise InvalidArgumentError("lens spaces need p > 0")
        values = [(i, surgery.lens_d(args.p, args.q, i)) for i in labels]
    else:
        values = [(i, surgery.surgery_d(spec, i)) for i in labels]
    inputs = {"knot": "U" if knot == surgery.UNKNOT else str(knot), "p": args.p, "q": args.q, "i": args.i}
    if args.format == "json":
        results = {"entries": [{"i": i, "d": render(d)} for i, d in values]}
        return dump_json(envelope("surgery", inputs, results))
    if args.format == "csv":
        return dump_csv(["i", "d"], [[i, render(d)] for i, d in values])
    if args.i is not None:
        return render(values[0][1]) + "\n"
    return "".join(f"{i:>4}  {render(d)}\n" for i, d in values)


def cmd_classify(args) -> str:
    pres = seifert.normalize(seifert.parse_presentation(args.presentation))
    kind = seifert.classify_elliptic(pres)
    results = {
        "normalized": str(pres),
        "type": kind.tag.value,
        "h1": kind.h1,
        "cyclic_h1": kind.cyclic_h1,
        "multiplicities": list(pres.multiplicities),
    }
    if args.format == "json":
        return dump_json(envelope("classify", {"presentation": args.presentation}, results))
    if args.format == "csv":
        return dump_csv(list(results), [[_csv_cell(v) for v in results.values()]])
    return "".join(f"{k}: {_csv_cell(v)}\n" for k, v in results.items())


def _csv_cell(v) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v))
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def cmd_realize(args) -> str:
    records = surgery.dihedral_realizations(args.m, args.n)
    rows = [{"knot": r.knot_name, "p": r.p, "q": r.q, "target_n": r.target} for r in records]
    if args.format == "json":
        return dump_json(envelope("realize", {"m": args.m, "n": args.n}, {"realizations": rows}))
    if args.format == "csv":
        return dump_csv(["knot", "p", "q", "target_n"], [list(r.values()) for r in rows])
    if not rows:
        return f"no torus knot surgery gives Y_+-{args.n} with m={args.m}\n"
    return "".join(f"Y_{r['target_n']} = {r['p']}/{r['q']} surgery on {r['knot']}\n" for r in rows)


def parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidArgumentError(f"range must look like lo..hi, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise InvalidArgumentError(f"range must look like lo..hi, got {text!r}") from exc


def _summary_line(summary) -> str:
    flag = "within" if summary.within_claim else "exceeds"
    return (
        f"summary m={summary.m} range={summary.n_lo}..{summary.n_hi} "
        f"N*={summary.threshold} ({flag} 16m={summary.claimed_threshold}) "
        f"realized={summary.realized}"
    )


def cmd_scan(args):
    lo, hi = parse_range(args.range)
    workers = args.workers if args.workers else obstruct.default_workers()
    reports, summary = obstruct.scan(args.m, lo, hi, workers=workers)
    inputs = {"m": args.m, "range": [lo, hi]}
    if args.format == "json":
        results = {"reports": [r.as_json() for r in reports], "summary": summary.as_json()}
        return dump_json(envelope("scan", inputs, results)), None
    if args.format == "csv":
        rows = [[r.as_row()[c] for c in obstruct.CSV_COLUMNS] for r in reports]
        return dump_csv(obstruct.CSV_COLUMNS, rows), _summary_line(summary)
    lines = []
    for r in reports:
        row = r.as_row()
        extra = row["realization"] or (f"{row['bound_violated']} at {row['witness_vector']}" if row["bound_violated"] else "")
        lines.append(f"{r.n:>6}  {r.verdict.value:<20} {row['d_min']:>10} {row['d_max']:>10}  {extra}".rstrip())
    lines.append(_summary_line(summary))
    return "\n".join(lines) + "\n", None


def cmd_selftest(args) -> int:
    results = acceptance.run(args.suite, echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="finsurg", description="d-invariants and surgery obstructions for dihedral manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", default=None, help="output file (default: standard output)")

    p = sub.add_parser("dedekind", help="Dedekind sum s(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    common(p)

    p = sub.add_parser("dinv", help="d-invariants of Y_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("surgery", help="d-invariants of integral L-space surgery")
    knot = p.add_mutually_exclusive_group(required=True)
    knot.add_argument("--knot", help='torus knot, e.g. "T(3,2)"')
    knot.add_argument("--unknot", action="store_true")
    knot.add_argument("--alexander", help='coefficients "a_g,...,a_0"')
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--i", type=int, default=None)
    common(p)

    p = sub.add_parser("classify", help="elliptic type and |H_1| of a presentation")
    p.add_argument("presentation", help='e.g. "(-1; 1/2, 1/2, 3/5)"')
    common(p)

    p = sub.add_parser("realize", help="torus knot surgeries giving Y_+-n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("scan", help="obstruction verdicts over a range of n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--range", required=True, help="lo..hi, e.g. -50..50")
    p.add_argument("--workers", type=int, default=0, help="worker processes (default: all cores)")
    common(p)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--suite", action="append", choices=sorted(acceptance.SUITES))
    return parser


def _glue_range(argv):
    # "--range -50..50" would otherwise be read as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = _glue_range(sys.argv[1:] if argv is None else list(argv))
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return cmd_selftest(args)
        handler = {
            "dedekind": cmd_dedekind,
            "dinv": cmd_dinv,
            "surgery": cmd_surgery,
            "classify": cmd_classify,
            "realize": cmd_realize,
            "scan": cmd_scan,
        }[args.command]
        result = handler(args)
        text, side = result if isinstance(result, tuple) else (result, None)
        with _output(args.out) as fh:
            fh.write(text)
        if side:
            print(side, file=sys.stderr)
        return 0
    except ConsistencyError as exc:
        print(f"finsurg: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except InvalidArgumentError as exc:
        print(f"finsurg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
