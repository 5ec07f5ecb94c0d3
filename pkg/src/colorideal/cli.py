"""Command-line front end.

Exit codes: 0 the computation ran (the answer is in the report), 1 bad
input, 2 unsupported configuration, 3 the bench driver saw a disagreement.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import sys
from pathlib import Path

from .algorithms import (ColorMethod, InvalidColoring, UniqueMethod,
                         UnsupportedConfiguration, Verdict, decompose,
                         is_k_colorable, is_uniquely_k_colorable)
from .coloring import nu_basis
from .field import CharacteristicError, FieldError, parse_field, validate_field
from .graph import (DimacsError, OracleBudgetError, enumerate_colorings,
                    parse_partition, read_dimacs)
from .poly import ALL_ORDERS, ORDER_KINDS, TermOrder

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_DISAGREE = 0, 1, 2, 3

COLOR_METHODS = [m.value for m in ColorMethod]
UNIQUE_METHODS = [m.value for m in UniqueMethod]


class InputError(Exception):
    pass


def _common(p: argparse.ArgumentParser, graph: bool = True):
    if graph:
        p.add_argument("graph", help="DIMACS .col file")
    p.add_argument("-k", type=int, required=True, help="number of colors")
    p.add_argument("--order", choices=ORDER_KINDS, default="degrevlex")
    p.add_argument("--field", default=None, help="q (default) or fp:P")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--monolithic", action="store_true",
                   help="build bases and graph polynomials in one shot")
    p.add_argument("--budget", type=int, default=None,
                   help="vertex limit for the brute-force oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorideal",
                                     description="Algebraic (unique) k-colorability tests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colorable", help="decide k-colorability")
    _common(p)
    p.add_argument("--method", choices=COLOR_METHODS, default="one")

    p = sub.add_parser("unique", help="decide unique k-colorability")
    _common(p)
    p.add_argument("--method", choices=UNIQUE_METHODS, default="dim")
    p.add_argument("--coloring", help="partition such as 1,3;2 (nubasis/colon methods)")

    p = sub.add_parser("nu-basis", help="print the nu-basis of a partition")
    _common(p, graph=False)
    p.add_argument("--partition", required=True)
    p.add_argument("--reduced", action="store_true")

    p = sub.add_parser("decompose", help="check I_G,k against the coloring ideals")
    _common(p)

    p = sub.add_parser("oracle", help="brute-force coloring count and partitions")
    _common(p)

    p = sub.add_parser("bench", help="all methods x orders on every .col in a directory")
    _common(p, graph=False)
    p.add_argument("directory")
    p.add_argument("--fields", default=None,
                   help="comma separated field specs (default: --field or q)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _field(args):
    spec = args.field or "q"
    try:
        return parse_field(spec)
    except FieldError as exc:
        raise InputError(str(exc)) from None


def _graph(path):
    try:
        return read_dimacs(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except DimacsError as exc:
        raise InputError(f"{path}: {exc}") from None


def _hint(args, out_err):
    if args.field is None and args.k % 2 and not args.json:
        print("hint: --field fp:2 is usually much faster for odd k", file=out_err)


def _say(v: Verdict, question: str) -> str:
    extra = []
    if v.dim is not None:
        extra.append(f"dim={v.dim}")
    if v.partition is not None:
        extra.append(f"partition={v.partition.to_text()}")
    extra.append(f"{v.elapsed * 1000:.1f} ms")
    return (f"{question}: {'yes' if v.answer else 'no'} "
            f"[{v.method}, {v.order}, {v.field}; {', '.join(extra)}]")


def _cmd_colorable(args, out, err):
    G, F = _graph(args.graph), _field(args)
    _hint(args, err)
    v = is_k_colorable(G, args.k, args.method, args.order, F,
                       incremental=not args.monolithic)
    print(v.to_json() if args.json else _say(v, f"{args.k}-colorable"), file=out)


def _cmd_unique(args, out, err):
    G, F = _graph(args.graph), _field(args)
    coloring = None
    if args.coloring:
        try:
            coloring = parse_partition(args.coloring)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    _hint(args, err)
    v = is_uniquely_k_colorable(G, args.k, args.method, coloring, args.order, F,
                                incremental=not args.monolithic)
    print(v.to_json() if args.json else _say(v, f"uniquely {args.k}-colorable"), file=out)


def _cmd_nu_basis(args, out, err):
    F = _field(args)
    try:
        p = parse_partition(args.partition)
        basis = nu_basis(p, args.k, reduced=args.reduced, field=F)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    order = TermOrder(args.order)
    if args.json:
        print(basis.to_json(order), file=out)
    else:
        for g in basis:
            print(g.to_string(order), file=out)


def _budget(args, default):
    return args.budget if args.budget is not None else default


def _cmd_decompose(args, out, err):
    G, F = _graph(args.graph), _field(args)
    ok, parts = decompose(G, args.k, args.order, F, budget=_budget(args, 8))
    if args.json:
        print(json.dumps({"ideal_ok": ok, "partitions": [p.to_text() for p in parts]}),
              file=out)
    else:
        print(f"I_G,{args.k} equals the intersection of {len(parts)} coloring ideals: "
              f"{'yes' if ok else 'NO'}", file=out)
        for p in parts:
            print(f"  {p.to_text()}", file=out)


def _cmd_oracle(args, out, err):
    G = _graph(args.graph)
    res = enumerate_colorings(G, args.k, budget=_budget(args, 20))
    if args.json:
        print(res.to_json(), file=out)
    else:
        print(f"proper {args.k}-colorings: {res.count}; partitions: {len(res.partitions)}",
              file=out)
        for p in sorted(res.partitions, key=lambda p: p.classes):
            print(f"  {p.to_text()}", file=out)


# bench

def _bench_job(job):
    path, kind, method, k, order, field_spec, coloring, incremental = job
    G = read_dimacs(path)
    F = parse_field(field_spec)
    if kind == "color":
        v = is_k_colorable(G, k, method, order, F, incremental=incremental)
    else:
        p = parse_partition(coloring) if coloring else None
        v = is_uniquely_k_colorable(G, k, method, p, order, F, incremental=incremental)
    return v.to_json()


def _bench_jobs(path, G, k, fields, incremental, oracle):
    jobs = []
    surj = oracle.surjective(k)
    col = surj[0].to_text() if surj else None
    for f in fields:
        for order in ALL_ORDERS:
            for m in ColorMethod:
                if m is ColorMethod.NfGraphPolyJnk and not (k + 1 <= G.n <= 8):
                    continue
                jobs.append((str(path), "color", m.value, k, order.kind, f, None, incremental))
            if oracle.count == 0:
                continue
            for m in UniqueMethod:
                needs = m in (UniqueMethod.NuBasisMembership, UniqueMethod.ColonMembership)
                if needs and col is None:
                    continue
                jobs.append((str(path), "unique", m.value, k, order.kind, f,
                             col if needs else None, incremental))
    return jobs


def _cmd_bench(args, out, err):
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"{directory} is not a directory")
    specs = (args.fields or args.field or "q").split(",")
    try:
        for s in specs:
            parse_field(s)
    except FieldError as exc:
        raise InputError(str(exc)) from None
    k = args.k
    for s in specs:
        validate_field(parse_field(s), k)
    rows, disagreements = [], 0
    files = sorted(directory.glob("*.col"))
    if not files:
        raise InputError(f"no .col files in {directory}")
    work = []
    for path in files:
        G = _graph(path)
        oracle = enumerate_colorings(G, k, budget=_budget(args, 20))
        colorable = oracle.count > 0
        unique = len(oracle.partitions) == 1 and next(iter(oracle.partitions)).l == k
        for job in _bench_jobs(path, G, k, specs, not args.monolithic, oracle):
            expected = colorable if job[1] == "color" else unique
            work.append((path.name, job, expected))
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_bench_job, [w[1] for w in work]))
    else:
        reports = [_bench_job(w[1]) for w in work]
    for (name, job, expected), report in zip(work, reports):
        v = Verdict.from_json(report)
        agree = v.answer == expected
        disagreements += not agree
        rows.append({"graph": name, "kind": job[1], "method": v.method, "order": v.order,
                     "field": v.field, "answer": v.answer, "oracle": expected,
                     "agree": agree, "elapsed_ms": v.elapsed * 1000})
    if args.json:
        print(json.dumps({"rows": rows, "disagreements": disagreements}), file=out)
    else:
        print(f"{'graph':<16} {'method':<22} {'order':<10} {'field':<6} "
              f"{'answer':<6} {'oracle':<6} {'ms':>10}", file=out)
        for r in rows:
            flag = "" if r["agree"] else "  <-- DISAGREES"
            print(f"{r['graph']:<16} {r['method']:<22} {r['order']:<10} {r['field']:<6} "
                  f"{str(r['answer']):<6} {str(r['oracle']):<6} {r['elapsed_ms']:>10.1f}{flag}",
                  file=out)
        print(f"{len(rows)} runs, {disagreements} disagreements", file=out)
    return EXIT_DISAGREE if disagreements else EXIT_OK


COMMANDS = {"colorable": _cmd_colorable, "unique": _cmd_unique, "nu-basis": _cmd_nu_basis,
            "decompose": _cmd_decompose, "oracle": _cmd_oracle, "bench": _cmd_bench}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.k < 1:
        print("error: -k must be positive", file=err)
        return EXIT_INPUT
    try:
        code = COMMANDS[args.command](args, out, err)
    except (InputError, InvalidColoring) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (CharacteristicError, UnsupportedConfiguration, OracleBudgetError) as exc:
        print(f"unsupported: {exc}", file=err)
        return EXIT_UNSUPPORTED
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
