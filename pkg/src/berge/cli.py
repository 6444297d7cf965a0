"""Command-line front end.

Exit codes: 0 on success, 1 when a checked statement is violated (a witness
file is written), 2 on usage, domain or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import bounds as B
from .bounds import DomainError
from .connectivity import is_2connected, is_connected
from .constructions import construct
from .cores import disintegrate, kopylov_case
from .enumeration import CapExceeded, EnumStats, SearchSpace, enumerate_space
from .hypergraph import as_graph, from_dict, is_happy, is_sperner, validate
from .search import circumference, longest_berge_path
from .shrink import PreconditionError, reduce_to_happy
from .verify import THEOREMS, verify


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    try:
        h = from_dict(data)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    rep = validate(h)
    if not rep.valid:
        raise UsageError(f"{path}: " + "; ".join(rep.problems))
    return h


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    family = args.family.lower()
    need = {"hnka": ("n", "k", "a"), "hcal": ("n", "k", "r", "a"), "fnkrs": ("k", "r", "s")}[family]
    _need(args, *need)
    h, spec = construct(family, **{p: getattr(args, p) for p in need})
    _write(args.out, h.to_json())
    if args.out:
        Path(args.out + ".partition.json").write_text(json.dumps({"partition": spec.partition}, sort_keys=True) + "\n")
        print(f"{family}: {h.n} vertices, {h.m} edges -> {args.out}")
    return 0


def cmd_check(args) -> int:
    _need(args, "inp")
    h = _load(args.inp)
    checks = [("sperner", args.sperner, is_sperner), ("connected", args.connected, is_connected),
              ("two-connected", args.two_connected, is_2connected), ("happy", args.happy, is_happy)]
    chosen = [c for c in checks if c[1]] or checks
    for name, _, fn in chosen:
        print(f"{name}: {'yes' if fn(h) else 'no'}")
    return 0


def cmd_search(args) -> int:
    _need(args, "inp")
    h = _load(args.inp)
    if args.path:
        length, w = longest_berge_path(h)
        print(f"longest Berge path: {length}")
    else:
        length, w = circumference(h)
        print(f"circumference: {length}")
    if w is not None:
        _write(args.out, json.dumps(w.to_dict(), sort_keys=True) + "\n")
    return 0


def cmd_core(args) -> int:
    _need(args, "inp", "alpha")
    h = _load(args.inp)
    g = as_graph(h)
    tr = disintegrate(g, args.alpha)
    print(f"removed: {' '.join(f'{v}:{d}' for v, d in tr.removal_order) or '-'}")
    print(f"core: {sorted(tr.core)}")
    if args.k is not None:
        rep = kopylov_case(g, args.k)
        print(f"case: {rep.case}" + (f", s={rep.s}" if rep.s is not None else ""))
        if not rep.holds:
            _write(args.out or "witness.json", g.to_json())
            print("; ".join(rep.notes))
            return 1
    return 0


def cmd_reduce(args) -> int:
    _need(args, "inp", "k")
    h = _load(args.inp)
    try:
        trace = reduce_to_happy(h, args.k)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    _write(args.out, trace.to_json())
    print(f"{trace.terminal} after {len(trace.steps)} steps: {' '.join(s.kind for s in trace.steps) or '-'}",
          file=sys.stderr if args.out is None else sys.stdout)
    return 1 if trace.problems else 0


def cmd_bounds(args) -> int:
    _need(args, "n", "k", "r")
    n, k, r = args.n, args.k, args.r
    cycle = B.main_cycle_bound(n, k, r) if n >= k >= r >= 3 else ""
    path = B.main_path_bound(n, k, r) if n >= k >= r >= 3 else ""
    alphas = [args.a] if args.a is not None else range(max(0, k - n), k + 1)
    rows = [(n, k, r, a, B.f(n, k, r, a), B.fstar(n, k, r, a), cycle, path) for a in alphas]
    out = open(args.report, "w", newline="") if args.report else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("n", "k", "r", "a", "f", "fstar", "cycle_bound", "path_bound"))
        w.writerows(rows)
    finally:
        if args.report:
            out.close()
    return 0


def cmd_enumerate(args) -> int:
    _need(args, "n", "r")
    if args.objective and args.k is None:
        raise UsageError("--objective needs --k")
    space = SearchSpace(args.n, args.r, sperner=not args.no_sperner, connected=args.connected,
                        two_connected=args.two_connected, objective=args.objective, k=args.k,
                        dedup=args.dedup)
    stats = EnumStats()
    lines = [h.to_json() for h in enumerate_space(space, stats=stats)]
    if args.out:
        Path(args.out).write_text("".join(lines))
    print(f"emitted {stats.emitted}, examined {stats.visited}")
    return 0


def cmd_verify(args) -> int:
    _need(args, "theorem", "nmax")
    grid = {"nmax": args.nmax}
    if args.nmin is not None:
        grid["nmin"] = args.nmin
    for key in ("k", "r"):
        val = getattr(args, key)
        if val is not None:
            grid[key] = _int_list(str(val)) if not isinstance(val, list) else val
    if args.samples is not None:
        grid["samples"] = args.samples
    if args.seed is not None:
        grid["seed"] = args.seed
    required = {"lifting": ("r", "samples"), "shrink": ("r", "samples"), "kopylov": ("k",)}.get(args.theorem, ("k", "r"))
    missing = [f"--{x}" for x in required if x not in grid]
    if missing:
        raise UsageError(f"verify {args.theorem} needs {' '.join(missing)}")
    rep = verify(args.theorem, grid, workers=args.workers)
    _write(args.report, rep.to_csv())
    for i, p in enumerate(rep.failures):
        path = f"{args.report or args.theorem}.failure{i}.json"
        Path(path).write_text(json.dumps({"theorem": rep.theorem, "n": p.n, "k": p.k, "r": p.r,
                                          "notes": p.notes, "witness": p.witness}, sort_keys=True) + "\n")
    summary = f"{args.theorem}: {len(rep.points)} points, {len(rep.failures)} failures"
    print(summary, file=sys.stderr if args.report is None else sys.stdout)
    return 1 if rep.failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="berge", description="Berge cycles and paths in Sperner hypergraphs.")
    p.add_argument("--cap", type=int, help="override the enumeration vertex cap")
    sub = p.add_subparsers(dest="command", required=True)

    def ints(sp, *names):
        for n in names:
            sp.add_argument(f"--{n}", type=int)

    c = sub.add_parser("construct", help="build an extremal construction")
    c.add_argument("family", choices=["hnka", "hcal", "fnkrs"])
    ints(c, "n", "k", "r", "a", "s")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="structural predicates of a hypergraph file")
    c.add_argument("--in", dest="inp")
    for flag in ("sperner", "connected", "two-connected", "happy"):
        c.add_argument(f"--{flag}", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("search", help="longest Berge cycle or path")
    c.add_argument("--in", dest="inp")
    c.add_argument("--path", action="store_true", help="longest path instead of cycle")
    c.add_argument("--out")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("core", help="disintegration and core case of a graph")
    c.add_argument("--in", dest="inp")
    ints(c, "alpha", "k")
    c.add_argument("--out")
    c.set_defaults(func=cmd_core)

    c = sub.add_parser("reduce", help="shrink an unhappy hypergraph to a happy one")
    c.add_argument("--in", dest="inp")
    ints(c, "k")
    c.add_argument("--out")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("bounds", help="tabulate f, f* and the main bounds")
    ints(c, "n", "k", "r", "a")
    c.add_argument("--report")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("enumerate", help="list small hypergraphs as JSON lines")
    ints(c, "n", "r", "k")
    c.add_argument("--objective", choices=["cycle", "path"])
    c.add_argument("--connected", action="store_true")
    c.add_argument("--two-connected", action="store_true")
    c.add_argument("--no-sperner", action="store_true")
    c.add_argument("--dedup", choices=["labeled", "iso", "auto"], default="auto")
    c.add_argument("--out")
    c.add_argument("--cap", type=int, default=argparse.SUPPRESS)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("verify", help="check a statement over a small grid")
    c.add_argument("--theorem", choices=THEOREMS)
    ints(c, "nmax", "nmin", "samples", "seed")
    c.add_argument("--k", type=_int_list)
    c.add_argument("--r", type=_int_list)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--report")
    c.add_argument("--cap", type=int, default=argparse.SUPPRESS)
    c.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    saved = os.environ.get("BERGE_CAP")
    if args.cap is not None:
        os.environ["BERGE_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except (UsageError, DomainError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.cap is not None:
            if saved is None:
                os.environ.pop("BERGE_CAP", None)
            else:
                os.environ["BERGE_CAP"] = saved


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
