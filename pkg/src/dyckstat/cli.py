"""Command-line interface: ``dyckstat count|series|bijection|verify``.

Exit codes: 0 success, 1 verification failure, 2 bad flags or unparsable
word, 3 brute-force bound exceeded, 4 non-prime argument, 5 argument outside
a bijection's domain.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import bijections as bj
from . import counting, oracle, series, verify
from .errors import DomainError, NotPrime, OracleBoundExceeded, WordError
from .words import DyckWord, l_statistic, returns, star_context

CLI_DEFAULT_BOUNDS = {"dyck": 12, "catalan": 5, "perm": 9}
ENV_VARS = {"dyck": "DYCKSTAT_MAX_DYCK_N", "catalan": "DYCKSTAT_MAX_CATALAN_N", "perm": "DYCKSTAT_MAX_PERM_M"}

ROW_FIELDS = ("n", "target", "closed_form", "gf", "oracle", "agree")


def parse_range(text: str) -> range:
    """``"4..11"`` or ``"7"`` as an inclusive range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _bound(args, key: str) -> int:
    value = getattr(args, f"max_{key}", None)
    if value is not None:
        return value
    raw = os.environ.get(ENV_VARS[key])
    return int(raw) if raw else CLI_DEFAULT_BOUNDS[key]


def _emit_rows(rows: list[dict], fmt: str, fields=ROW_FIELDS) -> None:
    if fmt == "json":
        json.dump(rows, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    writer = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row.get(k) is None else row[k]) for k in fields})


def report_row(n: int, target: str, closed_form=None, gf=None, oracle_value=None) -> dict:
    present = [v for v in (closed_form, gf, oracle_value) if v is not None]
    return {
        "n": n,
        "target": target,
        "closed_form": closed_form,
        "gf": gf,
        "oracle": oracle_value,
        "agree": len(set(present)) <= 1,
    }


# -- count --------------------------------------------------------------------------


def cmd_count(args) -> int:
    ns = args.n
    top = max(ns, default=0)
    rows = []
    if args.sum_eq1:
        for n in ns:
            closed = counting.weighted_sum_eq1(n)
            perms = oracle.enum_321_3cycle(3 * n) if args.oracle else None
            rows.append(report_row(n, "sum-eq1", closed, None, perms))
    elif args.rs:
        r, s = args.rs
        gf = series.gf_rs(r, s, top) if top else None
        for n in ns:
            o = None
            if args.oracle:
                o = len(oracle.paths_with_star_columns(n, [(r, s)]))
            rows.append(report_row(n, f"rs={r},{s}", counting.count_rs(n, r, s), gf[n] if gf else None, o))
    else:
        k = args.k
        gf = None
        if top and k == 2:
            gf = series.gf_L2(top)
        elif top and k > 2 and series.is_prime(k):
            gf = series.gf_Lp(k, top)
        closed_ok = counting.has_closed_form(k)
        for n in ns:
            closed = counting.count_Lk(n, k) if closed_ok else None
            o = oracle.l_histogram(n).get(k, 0) if (args.oracle or not closed_ok) else None
            target = f"L={k}" + (" (mixed part brute-forced)" if k == 6 else "")
            if not closed_ok:
                target += " (no closed form implemented)"
            rows.append(report_row(n, target, closed, gf[n] if gf else None, o))
    _emit_rows(rows, args.format)
    return 0


# -- series -------------------------------------------------------------------------


def cmd_series(args) -> int:
    order = args.order
    if args.l2:
        name, gf = "L2", series.gf_L2(order)
    elif args.lp is not None:
        name, gf = f"Lp p={args.lp}", series.gf_Lp(args.lp, order)
    elif args.rs:
        r, s = args.rs
        name, gf = f"rs r={r} s={s}", series.gf_rs(r, s, order)
    elif args.ballot is not None:
        name, gf = f"ballot k={args.ballot}", series.ballot_gf(args.ballot, order)
    else:
        name, gf = "motzkin", series.motzkin_series(order)
    if args.format == "json":
        json.dump({"series": name, "order": order, "coefficients": list(gf)}, sys.stdout)
        sys.stdout.write("\n")
    else:
        _emit_rows([{"n": n, "coefficient": c} for n, c in enumerate(gf)], "csv", ("n", "coefficient"))
    return 0


# -- bijection ------------------------------------------------------------------------


def certificate(d: DyckWord) -> dict:
    star = bj.to_star_word(d)
    return {
        "dyck": d.steps,
        "star_word": star.letters,
        "L": l_statistic(d),
        "returns": returns(d),
        "stars": [s.position for s in star_context(star)],
    }


def _print_result(result: dict, fmt: str) -> None:
    if fmt == "json":
        json.dump(result, sys.stdout)
        sys.stdout.write("\n")
        return
    head = result.pop("result")
    print(head)
    print("# " + " ".join(f"{k}={','.join(map(str, v)) if isinstance(v, list) else v}" for k, v in result.items()))


_INVERSES = {
    "rshit2": (bj.rs_two_returns_inverse, ("p", "r", "s")),
    "rshit1": (bj.rs_one_return_inverse, ("m", "p", "j", "r", "s")),
    "l4-t1": (bj.l4_type1_inverse, ("m", "j1", "j2")),
    "l4-t2": (bj.l4_type2_inverse, ("m",)),
    "l4-t3": (bj.l4_type3_inverse, ("m", "p", "j")),
    "l4-t4": (bj.l4_type4_inverse, ("m", "p", "j")),
}


def cmd_bijection(args) -> int:
    kind = args.kind
    if kind == "to-star":
        d = DyckWord(args.word)
        result = {"result": bj.to_star_word(d).letters, **certificate(d)}
    elif kind == "inverse":
        fn, names = _INVERSES[args.map]
        pre = fn(args.word)
        if pre is None:
            values = {"special": "singleton"}
        else:
            pre = pre if isinstance(pre, tuple) else (pre,)
            values = {k: str(v) for k, v in zip(names, pre)}
        head = " ".join(f"{k}={v}" for k, v in values.items())
        result = {"result": head, **values, **certificate(DyckWord(args.word))}
    else:
        if kind == "from-star":
            d = bj.from_star_word(args.word)
        elif kind == "rshit2":
            d = bj.rs_two_returns_forward(args.p, args.r, args.s)
        elif kind == "rshit1":
            d = bj.rs_one_return_forward(args.m, args.p, args.j, args.r, args.s)
        elif kind == "l4-t1":
            d = bj.l4_type1_forward(args.m, args.j1, args.j2)
        elif kind == "l4-t2":
            d = bj.l4_type2_forward(args.m)
        elif kind == "l4-t3":
            d = bj.l4_type3_forward(args.m, args.p, args.j)
        else:
            d = bj.l4_type4_forward(args.m, args.p, args.j)
        result = {"result": d.steps, **certificate(d)}
    _print_result(result, args.format)
    return 0


# -- verify ---------------------------------------------------------------------------


def _suite_checks(suite: str, n: int | None):
    if suite == "figures":
        return verify.suite_figures()
    if suite == "bijections":
        top = n or 10
        return verify.suite_bijections(top, 5, top)
    if suite == "eq1":
        return verify.suite_eq1(n or 3)
    if suite == "gf":
        return verify.suite_gf(n or 20)
    return verify.suite_oracle(n or 12)


def cmd_verify(args) -> int:
    suites = ["figures", "gf", "eq1", "bijections", "oracle"] if args.suite == "all" else [args.suite]
    failures = 0
    for suite in suites:
        for check in _suite_checks(suite, args.n):
            status = "PASS" if check.ok else "FAIL"
            line = f"{status} [{suite}] {check.name}"
            if not check.ok:
                failures += 1
                line += f": {check.detail}"
            print(line, flush=True)
    print(f"{'OK' if not failures else 'FAILED'}: {failures} failure(s)")
    return 1 if failures else 0


# -- parser ----------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, fmt: bool = True) -> None:
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--max-oracle-n", dest="max_dyck", type=int, default=None, metavar="N",
                   help="largest semilength the Dyck brute force may enumerate (default 12)")
    p.add_argument("--max-catalan-n", dest="max_catalan", type=int, default=None, metavar="N",
                   help="largest n for Catalan-word enumeration (default 5)")
    p.add_argument("--max-perm-m", dest="max_perm", type=int, default=None, metavar="M",
                   help="largest permutation length for the 3-cycle search (default 9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyckstat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count Dyck paths by L value")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", type=int)
    which.add_argument("--rs", type=int, nargs=2, metavar=("R", "S"))
    which.add_argument("--sum-eq1", action="store_true", help="sum of L(D) * 2^returns(D)")
    p.add_argument("--n", type=parse_range, required=True, help="N or A..B")
    p.add_argument("--oracle", action="store_true", help="add a brute-force column")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="generating-function coefficients")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--l2", action="store_true")
    which.add_argument("--lp", type=int, metavar="P")
    which.add_argument("--rs", type=int, nargs=2, metavar=("R", "S"))
    which.add_argument("--motzkin", action="store_true")
    which.add_argument("--ballot", type=int, metavar="K")
    p.add_argument("--order", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bijection", help="apply a bijection")
    bsub = p.add_subparsers(dest="kind", required=True)
    for name in ("to-star", "from-star"):
        q = bsub.add_parser(name)
        q.add_argument("word")
        _add_common(q)
    q = bsub.add_parser("rshit2", help="ballot path P -> two-return path")
    q.add_argument("--p", required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    _add_common(q)
    q = bsub.add_parser("rshit1", help="(M, P, j) -> one-return path")
    q.add_argument("--m", required=True)
    q.add_argument("--p", required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    _add_common(q)
    q = bsub.add_parser("l4-t1")
    q.add_argument("--m", required=True)
    q.add_argument("--j1", type=int, required=True)
    q.add_argument("--j2", type=int, required=True)
    _add_common(q)
    q = bsub.add_parser("l4-t2")
    q.add_argument("--m", required=True)
    _add_common(q)
    for name in ("l4-t3", "l4-t4"):
        q = bsub.add_parser(name)
        q.add_argument("--m", required=True)
        q.add_argument("--p", required=True)
        q.add_argument("--j", type=int, required=True)
        _add_common(q)
    q = bsub.add_parser("inverse", help="invert one of the constructive maps")
    q.add_argument("map", choices=sorted(_INVERSES))
    q.add_argument("word")
    _add_common(q)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("all", "figures", "bijections", "eq1", "gf", "oracle"))
    p.add_argument("--n", type=int, default=None, help="suite size bound (order for gf)")
    _add_common(p, fmt=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    oracle.set_bounds(dyck=_bound(args, "dyck"), catalan=_bound(args, "catalan"), perm=_bound(args, "perm"))
    try:
        return args.func(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotPrime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    finally:
        oracle.set_bounds()


if __name__ == "__main__":
    sys.exit(main())
