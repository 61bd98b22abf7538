"""Command-line front end: `qkflag <subcommand> ...`.

Exit status is 0 when every check passes, 2 on usage errors and 3 when an
identity fails (the counterexample is printed in the report).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import groth, qbg, qkring, qls, shiftcalc, suites, walks, weyl

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _perm(text: str) -> weyl.Permutation:
    vals = _int_list(text) if "," in text else [int(c) for c in text.strip()]
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise argparse.ArgumentTypeError(f"{text!r} is not a permutation in one-line notation")
    return weyl.Permutation(tuple(vals))


def _emit(payload: Any, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(suites._jsonable(payload), indent=2))
    else:
        print(text if text is not None else payload)


def _common(p: argparse.ArgumentParser, formats=("json", "text")) -> None:
    p.add_argument("--n", type=int, default=2, help="rank (group SL_{n+1})")
    p.add_argument("--format", choices=formats, default="json")


def _check_n(n: int, lo: int = 1, hi: int = 8) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"--n must lie in {lo}..{hi}")


# ---------------------------------------------------------------- handlers


def cmd_qbg(a) -> int:
    _check_n(a.n)
    J = frozenset(a.parabolic or [])
    if not J <= set(range(1, a.n + 1)):
        raise UsageError(f"--parabolic entries must lie in 1..{a.n}")
    g = qbg.QuantumBruhatGraph.build(a.n, J)
    if a.format == "dot":
        print(g.to_dot())
    elif a.format == "json":
        _emit(g.to_json(), "json")
    else:
        lines = [f"QBG n={a.n} J={sorted(J)}: {len(g.vertices)} vertices, {len(g.edges)} edges"]
        for ed in g.edges:
            arrow = "=>" if ed.quantum else "->"
            lines.append(f"  {''.join(map(str, ed.src))} {arrow} {''.join(map(str, ed.dst))}  {ed.label.label()}")
        print("\n".join(lines))
    return EXIT_OK


def cmd_qls(a) -> int:
    _check_n(a.n)
    if a.weight is not None:
        nu = weyl.canonical(a.weight)
        if len(a.weight) != a.n + 1 or not weyl.is_dominant(nu):
            raise UsageError("--weight needs n+1 integers in weakly decreasing order")
    else:
        K = a.parabolic or [1]
        if not set(K) <= set(range(1, a.n + 1)):
            raise UsageError(f"--parabolic entries must lie in 1..{a.n}")
        nu = qls.sum_of_fundamentals(a.n, K)
    paths = qls.enumerate_ls(nu) if a.classical else qls.enumerate_qls(nu)
    records = []
    for p in paths:
        st = qls.path_stats(p, nu)
        records.append({**p.to_json(), "final": list(st["final"]), "wt": list(st["wt"]), "deg": str(st["deg"])})
    if a.format == "json":
        _emit({"weight": list(nu), "count": len(paths), "paths": records}, "json")
    else:
        lines = [f"{'LS' if a.classical else 'QLS'} paths of shape {list(nu)}: {len(paths)}"]
        for r in records:
            elems = " ".join("".join(map(str, w)) for w in r["elems"])
            lines.append(f"  ({elems}; {', '.join(r['cuts'])})  wt={r['wt']} deg={r['deg']}")
        print("\n".join(lines))
    return EXIT_OK


def _signed_text(terms) -> str:
    out = []
    for s, (w, xi, nu) in terms:
        out.append(f"  {'+' if s > 0 else '-'} [{''.join(map(str, w))} t{list(xi)}] twist {list(nu)}")
    return "\n".join(out) if out else "  0"


def cmd_walks(a) -> int:
    _check_n(a.n)
    if a.w is not None:
        w = a.w
        if len(w) != a.n + 1:
            raise UsageError("--w must be a permutation of 1..n+1")
    else:
        if not 0 <= a.k <= a.n:
            raise UsageError("--k must lie in 0..n")
        w = walks.prefix_element(a.n, a.k)
    wks = walks.enumerate_walks(a.n, w, walks.varpi1_sequence(a.n))
    terms = walks.signed_terms(walks.inverse_chevalley_terms(a.n, w))
    if a.format == "json":
        _emit({"n": a.n, "w": list(w), "walks": [[list(x) for x in wk] for wk in wks],
               "terms": [{"sign": s, "w": list(k[0]), "xi": list(k[1]), "twist": list(k[2])} for s, k in terms]},
              "json")
    else:
        print(f"e^(varpi_1) [O({''.join(map(str, w))})] = {len(terms)} signed terms\n{_signed_text(terms)}")
    return EXIT_OK


def _identity_exit(reports: Sequence, fmt: str) -> int:
    ok = all(r.ok for r in reports)
    if fmt == "json":
        _emit([r.to_json() for r in reports], "json")
    else:
        for r in reports:
            line = f"{r.identity} level={r.level}: {r.status}"
            if not r.ok:
                line += f"  counterexample={r.counterexample}"
            print(line)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_shiftcalc(a) -> int:
    _check_n(a.n)
    ident = a.identity
    if ident == "all":
        reps = shiftcalc.verify_all(a.n, a.tcap)
    elif ident == "ckk":
        reps = shiftcalc.verify_prefix_induction(a.n, a.tcap)
    elif ident == "ctk":
        reps = shiftcalc.verify_descent_stages(a.n) + [shiftcalc.verify_descent_H_form(a.n)]
    elif ident == "telescoping":
        reps = [shiftcalc.verify_telescoping(k, jp) for k in range(1, a.n + 1) for jp in range(k)]
    elif ident == "uniqueness":
        reps = [shiftcalc.verify_triangular_solution(a.n)]
    else:
        reps = [shiftcalc.verify_EH_recurrence(a.n)]
    return _identity_exit(reps, a.format)


def _read_poly(path: str, ring: qkring.PolyRing) -> qkring.QPoly:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read polynomial from {path}: {exc}")
    try:
        return qkring.QPoly.from_json(data, ring)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed polynomial JSON: {exc}")


def cmd_ring(a) -> int:
    _check_n(a.n, 1, 6)
    cap = a.cap if a.cap is not None else (4 if a.suite == "rel" else 3)
    if a.action == "gens":
        gens = qkring.ideal_generators(a.n, quantum=not a.classical, cap=cap)
        if a.format == "json":
            _emit(gens.to_json(), "json")
        else:
            for l, g in enumerate(gens.generators, 1):
                print(f"g_{l} = {g}")
        return EXIT_OK
    if a.action == "reduce":
        if not a.input:
            raise UsageError("ring reduce needs --input poly.json")
        ideal = qkring.main_ideal(a.n, quantum=not a.classical, cap=cap, mode=a.mode, seed=a.seed)
        p = _read_poly(a.input, ideal.exact_ring)
        nf = ideal.normal_form(p)
        if a.format == "json":
            _emit({"n": a.n, "cap": cap, "mode": a.mode, "prime": ideal.prime,
                   "normal_form": nf.to_json(), "member": nf.is_zero()}, "json")
        else:
            print(nf)
        return EXIT_OK
    suite = a.suite or "freeness"
    rep = suites.run_suite(suite, n=a.n, cap=cap, mode=a.mode if a.mode_given else None, seed=a.seed)
    _emit(rep.to_json(), a.format, rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_groth(a) -> int:
    w = a.w
    if a.quantum:
        n = a.n if a.n is not None else len(w) - 1
        if len(w) > n + 1:
            raise UsageError("--w must lie in S_{n+1}")
        f = groth.quantum_grothendieck(w, n)
    else:
        f = groth.grothendieck(w)
    if a.format == "json":
        _emit({"w": list(w), "quantum": a.quantum, "polynomial": groth.to_json(f)}, "json")
    else:
        print(f)
    return EXIT_OK


def cmd_verify(a) -> int:
    names = suites.ALL_ORDER if a.all else [a.suite]
    if not a.all and a.suite is None:
        raise UsageError("verify needs --suite NAME or --all")
    reports = []
    for name in names:
        params: dict = {"n": a.n, "seed": a.seed}
        if a.cap is not None:
            params["cap"] = a.cap
        if a.mode is not None:
            params["mode"] = a.mode
        if name in ("qls",):
            params["tcap"] = a.tcap
        reports.append(suites.run_suite(name, **params))
    ok = all(r.ok for r in reports)
    if a.format == "json":
        payload = reports[0].to_json() if len(reports) == 1 else {
            "status": "pass" if ok else "fail", "suites": [r.to_json() for r in reports]}
        _emit(payload, "json")
    else:
        print("\n".join(r.to_text() for r in reports))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qkflag", description="Exact checks for quantum K-theory of type-A flags.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbg", help="build a (parabolic) quantum Bruhat graph")
    _common(p, ("json", "text", "dot"))
    p.add_argument("--parabolic", type=_int_list, default=None)
    p.set_defaults(func=cmd_qbg)

    p = sub.add_parser("qls", help="enumerate quantum LS paths")
    _common(p)
    p.add_argument("--parabolic", type=_int_list, default=None, help="shape = sum of these fundamental weights")
    p.add_argument("--weight", type=_int_list, default=None, help="explicit dominant weight (n+1 entries)")
    p.add_argument("--classical", action="store_true", help="LS paths (Bruhat edges only)")
    p.set_defaults(func=cmd_qls)

    p = sub.add_parser("walks", help="quantum walks and the inverse Chevalley expansion for varpi_1")
    _common(p)
    p.add_argument("--k", type=int, default=1, help="start at s_1...s_k")
    p.add_argument("--w", type=_perm, default=None)
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("shiftcalc", help="shift-operator identities")
    _common(p)
    p.add_argument("--identity", default="all",
                   choices=["all", "ckk", "ctk", "telescoping", "uniqueness", "eh"])
    p.add_argument("--tcap", type=int, default=None)
    p.set_defaults(func=cmd_shiftcalc)

    p = sub.add_parser("ring", help="ideal presentation of the quantum K-ring")
    p.add_argument("action", choices=["gens", "reduce", "verify"])
    _common(p)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--classical", action="store_true")
    p.add_argument("--input")
    p.add_argument("--mode", choices=["exact", "modp"], default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", choices=["freeness", "rel", "ls0"])
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("groth", help="(quantum) double Grothendieck polynomials")
    p.add_argument("--w", type=_perm, required=True)
    p.add_argument("--quantum", action="store_true")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_groth)

    p = sub.add_parser("verify", help="run named verification suites")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--suite", choices=sorted(suites.SUITES))
    g.add_argument("--all", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--tcap", type=int, default=6)
    p.add_argument("--mode", choices=["exact", "modp"], default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.command == "ring":
        a.mode_given = a.mode is not None
        a.mode = a.mode or "exact"
    try:
        return a.func(a)
    except (qkring.PivotError, groth.DivisionError) as exc:
        print(f"qkflag: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except UsageError as exc:
        print(f"qkflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except weyl.ConventionError as exc:
        print(f"qkflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
