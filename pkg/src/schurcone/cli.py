"""Command-line front end.

Every command prints exact numbers (integers or ``p/q``) and produces the same
bytes for the same arguments; wall-clock times only appear with ``--timing``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from collections import defaultdict

from .cone import (ConeSpec, InfeasibilityProof, SeparationCertificate,
                   distinct_parts_separator, find_separator, is_extreme,
                   verify_conjecture1, verify_distinct, verify_strong)
from .errors import DomainError, ParseError
from .nested import (enumerate_sp, enumerate_ssp_lambda, format_factor_set,
                     parse_factor_set, phi, plane_partitions_with_parts, psi)
from .partitions import (format_partition, lambda_dagger, lambda_plus, lambda_plusplus,
                         parse_partition)
from .symfunc import format_number, schur_product
from .tableaux import kostka, lr_coefficient

DEFAULT_CAP = 16
EXIT_OK, EXIT_ERROR, EXIT_COUNTEREXAMPLE = 0, 1, 2


class CapExceeded(DomainError):
    pass


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("SCHURCONE_CAP")
    return int(env) if env else DEFAULT_CAP


def _check_cap(args, n: int) -> None:
    cap = _cap(args)
    if n > cap:
        raise CapExceeded(f"N={n} exceeds the cap of {cap}; raise it with --cap or SCHURCONE_CAP")


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise DomainError(f"--{name.rstrip('_').replace('_', '-')} is required for {args.command}")
    return value


def _factor_set(args, capped=False):
    A = parse_factor_set(_need(args, "A"))
    if capped:
        _check_cap(args, sum(map(sum, A)))
    return A


def _partition(args):
    return parse_partition(_need(args, "lambda_"), sort=True)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _vector_table(v) -> str:
    if not v:
        return "0\n"
    return "".join(f"s({format_partition(lam)}): {format_number(c)}\n" for lam, c in v.items())


def _render_vector(v, fmt):
    if fmt == "json":
        return _json(v.to_json())
    if fmt == "csv":
        return _csv([["partition", "coeff"]]
                    + [[format_partition(lam), format_number(c)] for lam, c in v.items()])
    return _vector_table(v)


# -- commands --------------------------------------------------------------

def cmd_expand(args):
    v = schur_product(_factor_set(args))
    return _render_vector(v, args.format), EXIT_OK


def cmd_extreme(args):
    N, k = _need(args, "N"), args.k
    _check_cap(args, N)
    spec = ConeSpec(N, k)
    results = [is_extreme(A, spec) for A in enumerate_sp(N, k)]
    count = sum(r.extreme for r in results)
    if args.format == "json":
        return _json({"N": N, "k": k, "extreme_count": count,
                      "generators": [r.to_json() for r in results]}), EXIT_OK
    if args.format == "csv":
        rows = [["factors", "extreme"]]
        rows += [[format_factor_set(r.target), str(r.extreme).lower()] for r in results]
        return _csv(rows), EXIT_OK
    lines = []
    for r in results:
        if r.extreme:
            f = r.certificate.f
            lines.append(f"{format_factor_set(r.target)}  extreme  f = {_inline(f)}")
        else:
            combo = " + ".join(f"{format_number(c)}*[{format_factor_set(B)}]"
                               for B, c in sorted(r.witness.combination.items()))
            lines.append(f"{format_factor_set(r.target)}  not extreme  = {combo}")
    lines.append(f"{count} extreme of {len(results)} generators of C_{N}^{k}")
    return "\n".join(lines) + "\n", EXIT_OK


def _inline(v) -> str:
    out = ""
    for lam, c in v.items():
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{format_number(abs(c))}*"
        out += f" {sign} {mag}s({format_partition(lam)})"
    if not out:
        return "0"
    return out[3:] if out.startswith(" + ") else "-" + out[3:]


def _interval_for(args, A):
    lam = phi(A)
    n = sum(lam)
    if args.rho is not None:
        return lam, parse_partition(args.rho, sort=True)
    mode = args.interval
    if mode == "plus":
        return lam, lambda_plus(lam)
    if mode == "plusplus":
        return lam, lambda_plusplus(lam)
    if mode == "dagger":
        return lam, lambda_dagger(lam)
    if mode == "above":
        return lam, (n,)
    raise DomainError(f"unknown interval mode {mode!r}")


def cmd_separator(args):
    A = _factor_set(args, capped=True)
    if args.interval == "global" and args.rho is None:
        r = is_extreme(A, ConeSpec(sum(map(sum, A)), args.k))
        obj = r.to_json()
        res = r.certificate if r.extreme else r.witness
    elif args.constructive:
        res = distinct_parts_separator(A)
        obj = res.to_json()
    else:
        res = find_separator(A, *_interval_for(args, A))
        obj = res.to_json()
    if args.format == "json":
        return _json(obj), EXIT_OK
    if isinstance(res, SeparationCertificate):
        head = [["status", "separator"], ["mode", res.mode],
                ["interval", " .. ".join(format_partition(p) for p in res.interval)
                 if res.interval else "all"],
                ["margin", format_number(res.margin)],
                ["max_other", "none" if res.max_other is None else format_number(res.max_other)]]
        body = [[f"s({format_partition(lam)})", format_number(c)] for lam, c in res.f.items()]
    elif isinstance(res, InfeasibilityProof):
        head = [["status", "infeasible"],
                ["interval", " .. ".join(format_partition(p) for p in res.interval)]]
        body = [[f"[{format_factor_set(B)}]", format_number(c)]
                for B, c in sorted(res.combination.items())]
    else:
        head = [["status", "not extreme"]]
        body = [[f"[{format_factor_set(B)}]", format_number(c)]
                for B, c in sorted(res.combination.items())]
    if args.format == "csv":
        return _csv(head + body), EXIT_OK
    return "".join(f"{a}: {b}\n" for a, b in head + body), EXIT_OK


def _pp_text(pp) -> tuple[str, str]:
    return ",".join(map(str, pp[0])), ",".join(map(str, pp[1]))


def cmd_ssp(args):
    lam = _partition(args)
    family = enumerate_ssp_lambda(lam)
    images = [psi(A) for A in family]
    missing = []
    if args.plane_partitions:
        seen = set(images)
        missing = [pp for pp in plane_partitions_with_parts(lam) if pp not in seen]
    if args.format == "json":
        obj = {"lambda": format_partition(lam),
               "sets": [{"factors": format_factor_set(A), "psi": [list(r) for r in pp]}
                        for A, pp in zip(family, images)]}
        if args.plane_partitions:
            obj["not_images"] = [[list(r) for r in pp] for pp in missing]
        return _json(obj), EXIT_OK
    if args.format == "csv":
        rows = [["factors", "psi_top", "psi_bottom"]]
        rows += [[format_factor_set(A), *_pp_text(pp)] for A, pp in zip(family, images)]
        rows += [["", *_pp_text(pp)] for pp in missing]
        return _csv(rows), EXIT_OK
    width = max((len(format_factor_set(A)) for A in family), default=0)
    lines = [f"SSP({format_partition(lam)}): {len(family)} sets"]
    for A, pp in zip(family, images):
        top, bottom = _pp_text(pp)
        lines.append(f"{format_factor_set(A):<{width}}  | {top}")
        lines.append(f"{'':<{width}}  | {bottom}")
    if args.plane_partitions:
        lines.append(f"plane partitions not in the image: {len(missing)}")
        for pp in missing:
            top, bottom = _pp_text(pp)
            lines.append(f"  {top} / {bottom}")
    return "\n".join(lines) + "\n", EXIT_OK


def _check_conjecture1(n, jobs):
    rep = verify_conjecture1(n, jobs)
    bad = rep.extreme_not_nested + rep.nested_not_extreme
    return [{"N": n, "group": "all", "checked": len(enumerate_sp(n, 2)), "ok": rep.ok,
             "counterexamples": [format_factor_set(A) for A in bad]}]


def _check_strong(n, jobs):
    rep = verify_strong(n, jobs=jobs)
    return _grouped(n, [(e.target, e.ok, e.seconds) for e in rep.entries])


def _check_distinct(n, jobs):
    return _grouped(n, [(e.target, e.ok, 0.0) for e in verify_distinct(n, jobs)])


def _grouped(n, triples):
    groups = defaultdict(list)
    for A, ok, secs in triples:
        groups[phi(A)].append((A, ok, secs))
    rows = []
    for lam in sorted(groups, reverse=True):
        items = groups[lam]
        rows.append({"N": n, "group": format_partition(lam), "checked": len(items),
                     "ok": all(ok for _, ok, _ in items),
                     "counterexamples": [format_factor_set(A) for A, ok, _ in items if not ok],
                     "seconds": sum(s for _, _, s in items)})
    return rows


CHECKS = {"conjecture1": _check_conjecture1, "strong": _check_strong,
          "distinct": _check_distinct}


def cmd_check(args):
    max_n = _need(args, "max_N")
    _check_cap(args, max_n)
    runner = CHECKS[args.conjecture]
    rows = []
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        part = runner(n, args.jobs)
        elapsed = f"{time.perf_counter() - start:.3f}"
        for r in part:
            r.pop("seconds", None)
            if args.timing:
                r["N_seconds"] = elapsed
        rows.extend(part)
    bad = [A for r in rows for A in r["counterexamples"]]
    code = EXIT_COUNTEREXAMPLE if bad else EXIT_OK
    summary = {"conjecture": args.conjecture, "max_N": max_n, "ok": not bad,
               "checked": sum(r["checked"] for r in rows), "counterexamples": bad}
    if args.format == "json":
        return _json({"summary": summary, "groups": rows}), code
    if args.format == "csv":
        keys = ["N", "group", "checked", "ok", "counterexamples"]
        if args.timing:
            keys.append("N_seconds")
        out = [keys] + [[_cell(r.get(k, "")) for k in keys] for r in rows]
        return _csv(out), code
    lines = []
    for r in rows:
        status = "ok" if r["ok"] else "FAIL " + " | ".join(r["counterexamples"])
        line = f"N={r['N']} {r['group']}: {r['checked']} checked, {status}"
        if "N_seconds" in r:
            line += f" [N={r['N']} took {r['N_seconds']} s]"
        lines.append(line)
    verdict = "all pass" if not bad else f"{len(bad)} counterexample(s)"
    lines.append(f"{args.conjecture} up to N={max_n}: {summary['checked']} checked, {verdict}")
    for A in bad:
        lines.append(f"counterexample: {A}")
    return "\n".join(lines) + "\n", code


def _cell(x):
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, list):
        return " | ".join(x)
    return str(x)


def cmd_lr(args):
    A = _factor_set(args)
    lam = _partition(args)
    pi = None
    if args.pi is not None:
        pi = tuple(int(t) for t in args.pi.split(","))
    c = lr_coefficient(A, lam, pi)
    return _scalar(args, {"factors": format_factor_set(A), "lambda": format_partition(lam),
                          "coefficient": c}, "coefficient"), EXIT_OK


def cmd_kostka(args):
    lam = _partition(args)
    content = _composition(_need(args, "content"))
    c = kostka(lam, content)
    return _scalar(args, {"lambda": format_partition(lam),
                          "content": ",".join(map(str, content)), "kostka": c}, "kostka"), EXIT_OK


def _composition(text: str) -> tuple[int, ...]:
    out, col = [], 1
    for token in text.split(","):
        tok = token.strip()
        if not tok.isdigit():
            raise ParseError(f"expected a non-negative integer, got {tok!r}", text, col)
        out.append(int(tok))
        col += len(token) + 1
    return tuple(out)


def _scalar(args, obj, key) -> str:
    if args.format == "json":
        return _json(obj)
    if args.format == "csv":
        return _csv([list(obj), [str(v) for v in obj.values()]])
    return f"{obj[key]}\n"


COMMANDS = {"expand": cmd_expand, "extreme": cmd_extreme, "separator": cmd_separator,
            "ssp": cmd_ssp, "check": cmd_check, "lr": cmd_lr, "kostka": cmd_kostka}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--cap", type=int, default=None,
                        help=f"largest N accepted (default {DEFAULT_CAP}, or $SCHURCONE_CAP)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock times")

    parser = argparse.ArgumentParser(prog="schurcone",
                                     description="Extreme rays of Schur cones, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of a product")
    p.add_argument("--A", required=True, help='factor set, e.g. "3,1;2"')

    p = sub.add_parser("extreme", parents=[common], help="extremality of every generator")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=2)

    p = sub.add_parser("separator", parents=[common], help="separating function for one set")
    p.add_argument("--A", required=True)
    p.add_argument("--interval", choices=("plus", "plusplus", "dagger", "above", "global"),
                   default="plus")
    p.add_argument("--rho", default=None, help="explicit top of the interval")
    p.add_argument("--k", type=int, default=2, help="cone for --interval global")
    p.add_argument("--constructive", action="store_true",
                   help="use the LP-free construction (distinct parts only)")

    p = sub.add_parser("ssp", parents=[common], help="nested sets with given parts")
    p.add_argument("--lambda", dest="lambda_", required=True, help="parts in any order")
    p.add_argument("--plane-partitions", action="store_true",
                   help="also list plane partitions outside the image of psi")

    p = sub.add_parser("check", parents=[common], help="verify a conjecture for N = 1..max-N")
    p.add_argument("conjecture", choices=sorted(CHECKS))
    p.add_argument("--max-N", dest="max_N", type=int, required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--A", required=True)
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--pi", default=None, help="permutation of the letters, e.g. 1,3,2")

    p = sub.add_parser("kostka", parents=[common], help="Kostka number")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--content", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"schurcone: parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CapExceeded as exc:
        print(f"schurcone: refused: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DomainError as exc:
        print(f"schurcone: domain error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
