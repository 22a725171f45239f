"""Command-line harness: every computation and verification suite, with
machine-readable JSON output (schema "1") and an optional table mode.

Exit codes: 0 all checks passed, 1 a mathematical identity evaluated and
differed, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from .algebra.partitions import (
    parse_partition,
    partitions,
    render_partition,
)
from .algebra.sympoly import SymPoly, elementary, monomial_sym, powersum, schur
from .epfun import (
    DParahoricType,
    ep_function,
    f_J,
    fj_shadow_report,
    product_ep,
    shadow,
    to_one_basis,
)
from .finitegl import (
    cached_group,
    comb_prop_check,
    dl_character,
    ind_conjugate_identity_exhaustive,
    parabolic_trivial_ind,
)
from .finitegl import BudgetError
from .transfer import (
    TransferParams,
    image_e,
    image_p,
    image_schur,
    substitution_image,
    surjectivity_witness,
    transfer_sym,
)
from .weylcomb import (
    EnumerationBudgetError,
    f_g_table,
    min_double_coset_reps,
    proper_levi_vanishing,
    restriction_support,
)

SCHEMA = "1"

PASS, FAIL, ERROR = "pass", "fail", "error"


def _sympoly_json(f: SymPoly) -> dict:
    return {
        "nvars": f.nvars,
        "terms": [{"exponents": list(k), "coeff": str(c)}
                  for k, c in f.sorted_terms()],
    }


def _class_table_json(group) -> list:
    return [
        {
            "rep_matrix": [list(c.rep[i * group.d:(i + 1) * group.d])
                           for i in range(group.d)],
            "size": c.size,
            "char_poly": list(c.char_poly),
        }
        for c in group.classes
    ]


def _classfun_json(name: str, cf) -> dict:
    group = cf.group
    return {
        "d": group.d,
        "q": group.q,
        "classes": _class_table_json(group),
        "functions": {name: [str(v) for v in cf.values]},
    }


def _report(command: str, params: dict, status: str, payload,
            started: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "params": params,
        "status": status,
        "payload": payload,
        "elapsed_ms": int(1000 * (time.monotonic() - started)),
    }


def _emit(report: dict, table: bool) -> int:
    if table:
        _print_table(report)
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return {PASS: 0, FAIL: 1, ERROR: 2}[report["status"]]


def _print_table(report: dict) -> None:
    print(f"command : {report['command']}")
    for key, val in report["params"].items():
        print(f"  {key:10s}: {val}")
    print(f"status  : {report['status']}  ({report['elapsed_ms']} ms)")
    payload = report["payload"]
    if isinstance(payload, dict):
        for key, val in payload.items():
            text = json.dumps(val) if isinstance(val, (dict, list)) else str(val)
            if len(text) > 160:
                text = text[:157] + "..."
            print(f"  {key:22s} {text}")
    else:
        print(f"  {payload}")


# -- transfer ----------------------------------------------------------------


def cmd_transfer(args) -> dict:
    started = time.monotonic()
    p = TransferParams(r=args.r, d=args.d)
    params = {"basis": args.basis, "r": args.r, "d": args.d}
    if args.basis in ("e", "p"):
        if args.k is None:
            raise UsageError("--k is required for basis e or p")
        params["k"] = args.k
        index_or_partition: object = args.k
        image = image_e(p, args.k) if args.basis == "e" else image_p(p, args.k)
    elif args.basis == "schur":
        if args.mu is None:
            raise UsageError("--mu is required for basis schur")
        mu = parse_partition(args.mu)
        params["mu"] = render_partition(mu)
        index_or_partition = render_partition(mu)
        image = image_schur(p, mu)
    else:  # monomial
        if args.w is None:
            raise UsageError("--w is required for basis monomial")
        w = tuple(int(x) for x in args.w.split(","))
        params["w"] = ",".join(map(str, w))
        index_or_partition = params["w"]
        image = transfer_sym(p, monomial_sym(p.n, w))
    payload = {
        "input_basis": args.basis,
        "index_or_partition": index_or_partition,
        "params": {"r": args.r, "d": args.d},
        "image": _sympoly_json(image),
    }
    return _report("transfer", params, PASS, payload, started)


# -- verification suites -----------------------------------------------------


def _pmap(fn: Callable, cases: Sequence, workers: int) -> list:
    if workers <= 1 or len(cases) <= 1:
        return [fn(case) for case in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cases))


def _transfer_case(case: tuple[int, int, int]) -> dict:
    r, d, degmax = case
    p = TransferParams(r=r, d=d)
    failures = []
    for k in range(1, min(p.n, degmax) + 1):
        if transfer_sym(p, elementary(p.n, k)) != image_e(p, k):
            failures.append(f"e_{k}")
    for k in range(1, degmax + 1):
        f = powersum(p.n, k)
        if not (transfer_sym(p, f) == image_p(p, k) == substitution_image(p, f)):
            failures.append(f"p_{k}")
    for size in range(1, degmax + 1):
        for mu in partitions(size):
            if transfer_sym(p, schur(p.n, mu)) != image_schur(p, mu):
                failures.append(f"s_{render_partition(mu)}")
    return {"r": r, "d": d, "ok": not failures, "failures": failures}


def _suite_transfer(args) -> tuple[bool, list]:
    cases = [(r, d, args.degmax)
             for n in range(1, args.nmax + 1)
             for d in range(1, n + 1) if n % d == 0
             for r in [n // d]]
    details = _pmap(_transfer_case, cases, args.workers)
    return all(c["ok"] for c in details), details


def _comb_prop_case(d: int) -> dict:
    table = f_g_table(d)
    values = [{"rho": render_partition(rho), "value": str(val)}
              for rho, val in sorted(table.values.items(), reverse=True)]
    ok = all(table(rho) == (1 if rho == (d,) else 0)
             for rho in table.values)
    return {"d": d, "ok": ok, "values": values}


def _suite_comb_prop(args) -> tuple[bool, list]:
    details = _pmap(_comb_prop_case, list(range(1, args.dmax + 1)), args.workers)
    return all(c["ok"] for c in details), details


def _weyl_vanishing_case(case: tuple[int, tuple[int, ...]]) -> dict:
    import itertools as it
    d, M = case
    sums = proper_levi_vanishing(d, frozenset(M))
    bad = {str(sorted(J)): str(v) for J, v in sums.items() if v != 0}
    support_ok = True
    for kI in range(d):
        for I in it.combinations(range(1, d), kI):
            for w in min_double_coset_reps(frozenset(M), frozenset(I), d):
                restriction_support(frozenset(M), frozenset(I), w)
    return {"d": d, "M": list(M), "ok": not bad and support_ok,
            "nonzero_sums": bad}


def _suite_weyl_vanishing(args) -> tuple[bool, list]:
    import itertools as it
    cases = []
    for d in range(2, args.dmax + 1):
        for k in range(d - 1):
            for M in it.combinations(range(1, d), k):
                cases.append((d, M))
    details = _pmap(_weyl_vanishing_case, cases, args.workers)
    return all(c["ok"] for c in details), details


def _finite_gl_case(case: tuple[int, int]) -> dict:
    d, q = case
    group = cached_group(d, q)
    rep = comb_prop_check(group)
    ind = ind_conjugate_identity_exhaustive(group) if d <= 3 else {"ok": True}
    return {"d": d, "q": q, "ok": rep["equal"] and ind["ok"],
            "comb_prop": rep["equal"], "ind_identity": ind["ok"]}


def _suite_finite_gl(args) -> tuple[bool, list]:
    cases = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]
    cases = [c for c in cases if c[0] <= args.dmax]
    details = _pmap(_finite_gl_case, cases, args.workers)
    return all(c["ok"] for c in details), details


def _ep_shadow_case(case: tuple[int, tuple[int, ...], int]) -> dict:
    d, parts, q = case
    rep = fj_shadow_report(DParahoricType(d, parts), q)
    return {"d": d, "parts": list(parts), "q": q, "ok": rep["equal"]}


def _suite_ep_shadow(args) -> tuple[bool, list]:
    cases = []
    for q in args.q:
        for n in range(1, args.n + 1):
            for d in range(1, n + 1):
                if n % d:
                    continue
                for parts in partitions(n // d):
                    cases.append((d, parts, q))
    details = _pmap(_ep_shadow_case, cases, args.workers)
    return all(c["ok"] for c in details), details


SUITES = {
    "transfer-consistency": _suite_transfer,
    "comb-prop": _suite_comb_prop,
    "weyl-vanishing": _suite_weyl_vanishing,
    "finite-gl": _suite_finite_gl,
    "ep-shadow": _suite_ep_shadow,
}


def cmd_verify(args) -> dict:
    started = time.monotonic()
    names = list(SUITES) if args.suite == "all" else [args.suite]
    payload = {}
    ok = True
    for name in names:
        suite_ok, details = SUITES[name](args)
        payload[name] = {"ok": suite_ok, "cases": details}
        ok = ok and suite_ok
    params = {"suite": args.suite, "nmax": args.nmax, "degmax": args.degmax,
              "dmax": args.dmax, "n": args.n, "q": args.q,
              "workers": args.workers}
    return _report("verify", params, PASS if ok else FAIL, payload, started)


# -- finite GL ----------------------------------------------------------------


def cmd_finite_gl(args) -> dict:
    started = time.monotonic()
    group = cached_group(args.d, args.q)
    params = {"d": args.d, "q": args.q, "what": args.what}
    if args.what == "classes":
        payload = {
            "d": group.d,
            "q": group.q,
            "order": group.order,
            "class_count": len(group.classes),
            "classes": _class_table_json(group),
        }
        return _report("finite-gl", params, PASS, payload, started)
    if args.what == "ind":
        comp = parse_partition(args.c) if args.c else (args.d,)
        params["c"] = render_partition(comp)
        cf = parabolic_trivial_ind(group, comp)
        name = f"ind[{render_partition(comp)}]"
        return _report("finite-gl", params, PASS, _classfun_json(name, cf),
                       started)
    if args.what == "dl":
        rho = parse_partition(args.rho) if args.rho else (args.d,)
        params["rho"] = render_partition(rho)
        cf = dl_character(group, rho)
        name = f"dl[{render_partition(rho)}]"
        return _report("finite-gl", params, PASS, _classfun_json(name, cf),
                       started)
    # comb-prop
    rep = comb_prop_check(group)
    return _report("finite-gl", params, PASS if rep["equal"] else FAIL, rep,
                   started)


# -- EP functions --------------------------------------------------------------


def cmd_ep(args) -> dict:
    started = time.monotonic()
    if args.action == "build":
        if args.n is None:
            raise UsageError("ep build requires --n")
        combo = ep_function(args.n)
        payload = {"e_basis": combo.to_json(),
                   "one_basis": to_one_basis(combo).to_json()}
        return _report("ep", {"action": "build", "n": args.n}, PASS, payload,
                       started)
    if args.d is None or args.r is None:
        raise UsageError(f"ep {args.action} requires --d and --r")
    parts = parse_partition(args.type) if args.type else (1,) * args.r
    if sum(parts) != args.r:
        raise UsageError(f"--type {args.type} is not a partition of r = {args.r}")
    t = DParahoricType(args.d, parts)
    params = {"action": args.action, "d": args.d, "r": args.r,
              "type": render_partition(parts)}
    if args.action == "fj":
        combo = f_J(t)
        payload: dict = {"f_J": combo.to_json()}
        if args.shadow_q:
            rep = fj_shadow_report(t, args.shadow_q)
            params["shadow_q"] = args.shadow_q
            payload["shadow_check"] = rep
            status = PASS if rep["equal"] else FAIL
        else:
            status = PASS
        return _report("ep", params, status, payload, started)
    # shadow
    if not args.shadow_q:
        raise UsageError("ep shadow requires --shadow-q")
    params["shadow_q"] = args.shadow_q
    cf = shadow(f_J(t), args.shadow_q)
    name = f"shadow[d={args.d};{render_partition(parts)}]"
    return _report("ep", params, PASS, _classfun_json(name, cf), started)


# -- argument parsing -----------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtransfer",
        description="Exact q-arithmetic: transfer images, symmetric-group "
                    "Euler-Poincare combinatorics, finite GL identities.",
    )
    parser.add_argument("--table", action="store_true",
                        help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transfer", help="apply the normalized transfer map")
    p_tr.add_argument("--basis", choices=("e", "p", "schur", "monomial"),
                      required=True)
    p_tr.add_argument("--k", type=int, help="index for e/p basis")
    p_tr.add_argument("--mu", help="partition for schur basis, e.g. 2,1")
    p_tr.add_argument("--w", help="dominant vector for monomial basis, e.g. 2,0")
    p_tr.add_argument("--r", type=int, required=True)
    p_tr.add_argument("--d", type=int, required=True)
    p_tr.set_defaults(func=cmd_transfer)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", choices=tuple(SUITES) + ("all",),
                       required=True)
    p_ver.add_argument("--nmax", type=int, default=6,
                       help="max n for transfer consistency")
    p_ver.add_argument("--degmax", type=int, default=4,
                       help="max degree for transfer consistency")
    p_ver.add_argument("--dmax", type=int, default=5,
                       help="max d for comb-prop / weyl-vanishing / finite-gl")
    p_ver.add_argument("--n", type=int, default=4, help="max n for ep-shadow")
    p_ver.add_argument("--q", type=int, nargs="+", default=[2, 3],
                       help="primes for ep-shadow")
    p_ver.add_argument("--workers", type=int, default=1,
                       help="parallel workers inside suites")
    p_ver.set_defaults(func=cmd_verify)

    p_gl = sub.add_parser("finite-gl", help="class data in GL_d(F_q)")
    p_gl.add_argument("--d", type=int, required=True)
    p_gl.add_argument("--q", type=int, required=True)
    p_gl.add_argument("--what", choices=("classes", "ind", "dl", "comb-prop"),
                      required=True)
    p_gl.add_argument("--c", help="composition for ind, e.g. 2,1")
    p_gl.add_argument("--rho", help="partition for dl, e.g. 2")
    p_gl.set_defaults(func=cmd_finite_gl)

    p_ep = sub.add_parser("ep", help="Euler-Poincare combinations")
    p_ep.add_argument("action", choices=("build", "fj", "shadow"))
    p_ep.add_argument("--n", type=int, help="n for ep build")
    p_ep.add_argument("--d", type=int, help="division-algebra index")
    p_ep.add_argument("--r", type=int, help="rank over D")
    p_ep.add_argument("--type", help="partition of r, e.g. 1,1")
    p_ep.add_argument("--shadow-q", type=int, dest="shadow_q",
                      help="prime for the finite shadow comparison")
    p_ep.set_defaults(func=cmd_ep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(json.dumps({"schema": SCHEMA, "status": ERROR,
                          "error": str(exc)}))
        return 2
    except (ValueError, KeyError, BudgetError, EnumerationBudgetError) as exc:
        print(json.dumps({"schema": SCHEMA, "status": ERROR,
                          "error": f"{type(exc).__name__}: {exc}"}))
        return 2
    return _emit(report, args.table)


if __name__ == "__main__":
    sys.exit(main())
