"""Batch command line over JSON inputs.

Subcommands: zeta graph|strata, acampo, suspend, lys, sis, charpoly,
check monodromy|holomorphy, fbad.  Exit codes: 0 success, 1 input or
validation error, 2 conjecture check FAIL, 3 internal consistency error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks, lys as lys_mod, resolution, suspension
from .cyclo import CycloProduct, cyclo_str, cyclo_to_json
from .errors import ConsistencyError, ValidationError
from .ratfun import FactorizationError, RatFun, render_latex, render_text


def _read_json(path: str) -> dict:
    data = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(data)


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _render(f: RatFun, fmt: str):
    if fmt == "latex":
        return render_latex(f)
    if fmt == "json":
        return f.to_json()
    return render_text(f)


def _render_cyclo(h: CycloProduct, fmt: str):
    if fmt == "latex":
        parts = [rf"\Phi_{{{d}}}" + (f"^{{{e}}}" if e != 1 else "")
                 for d, e in h.items]
        return " ".join(parts) if parts else "1"
    if fmt == "json":
        return cyclo_to_json(h)
    return cyclo_str(h)


def _parse_ells(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValidationError(f"bad --ell list {text!r}") from exc


def _print(args, payload, text_lines):
    if args.quiet:
        return
    if args.format == "json":
        print(_emit_json(payload))
    else:
        for line in text_lines:
            print(line)


# -- subject loading for `check` ---------------------------------------------


def _load_subject(obj: dict):
    """Returns (zeta1, delta_tilde, orders, family) for a curve germ, a
    suspension, or a Le-Yomdin surface fixture."""
    kind = obj.get("kind")
    if kind is None:
        if "vertices" in obj:
            kind = "curve"
        elif "germ" in obj:
            kind = "suspension"
        elif "points" in obj or "chi_complement" in obj:
            kind = "lys"
        else:
            raise ValidationError("cannot infer subject kind")
    if kind == "curve":
        g = resolution.graph_from_json(obj.get("graph", obj))
        res = resolution.strata_of_graph(g)
        _, delta = resolution.acampo(g)
        delta_tilde = delta * CycloProduct.from_brackets([(1, 1)])
        return (resolution.ztop_from_strata(res, 1), delta_tilde,
                delta.root_orders(),
                lambda l: resolution.ztop_from_strata(res, l))
    if kind == "suspension":
        k = int(obj["k"])
        germ_obj = obj["germ"]
        if "graph" in germ_obj or "vertices" in germ_obj:
            germ = suspension.summary_from_graph(
                resolution.graph_from_json(germ_obj.get("graph", germ_obj)))
        else:
            germ = suspension.summary_from_json(germ_obj)
        delta_f, orders = suspension.suspend_orders(germ, k)
        delta_tilde = delta_f * CycloProduct.from_brackets([(1, 1)])
        return (suspension.suspend_F(germ.zeta, k, 1), delta_tilde, orders,
                lambda l: suspension.suspend_F(germ.zeta, k, l))
    if kind == "lys":
        surface = lys_mod.lys_from_json(obj.get("lys", obj))
        _, delta_tilde = lys_mod.lys_charpoly(surface)
        return (lys_mod.lys_ztop(surface, 1), delta_tilde,
                lys_mod.lys_orders(surface),
                lambda l: lys_mod.lys_ztop(surface, l))
    raise ValidationError(f"unknown subject kind {kind!r}")


# -- subcommands ---------------------------------------------------------------


def _cmd_zeta(args) -> int:
    obj = _read_json(args.infile)
    if args.source == "graph":
        res = resolution.strata_of_graph(resolution.graph_from_json(obj))
    else:
        res = resolution.strata_from_json(obj)
    z = resolution.ztop_from_strata(res, args.ell)
    _print(args, {"ell": args.ell, "zeta": z.to_json()},
           [_render(z, args.format)])
    return 0


def _cmd_acampo(args) -> int:
    g = resolution.graph_from_json(_read_json(args.infile))
    zeta, delta = resolution.acampo(g)
    _print(args, {"zeta": cyclo_to_json(zeta), "delta": cyclo_to_json(delta)},
           [f"zeta = {_render_cyclo(zeta, args.format)}",
            f"Delta = {_render_cyclo(delta, args.format)}"])
    return 0


def _cmd_suspend(args) -> int:
    profile = suspension.profile_from_json(_read_json(args.infile))
    ells = _parse_ells(args.ell)
    results = []
    for l in ells:
        if args.m == 0 and args.nuz == 1:
            z = suspension.suspend_F(profile, args.k, l, strict=args.strict)
        else:
            z = suspension.suspend_G(profile, args.m, args.k, args.nuz, l,
                                     strict=args.strict)
        results.append((l, z))
    payload = {"results": [{"ell": l, "zeta": z.to_json()} for l, z in results]}
    if len(results) == 1 and not args.matrix:
        lines = [_render(results[0][1], args.format)]
    else:
        lines = [f"Z^({l}) = {_render(z, args.format)}" for l, z in results]
    if args.matrix:
        _, b_matrix, holds = suspension.suspend_matrix(profile, args.k)
        payload["matrix"] = {"B": b_matrix, "identity_holds": holds}
        lines.append(f"B = {b_matrix}")
        lines.append(f"identity_holds = {holds}")
        if not holds:
            _print(args, payload, lines)
            return 3
    _print(args, payload, lines)
    return 0


def _cmd_lys(args, sis: bool) -> int:
    surface = lys_mod.lys_from_json(_read_json(args.infile))
    ells = _parse_ells(args.ell)
    fn = lys_mod.sis_ztop if sis else lys_mod.lys_ztop
    results = [(l, fn(surface, l)) for l in ells]
    _print(args, {"results": [{"ell": l, "zeta": z.to_json()} for l, z in results]},
           [f"Z^({l}) = {_render(z, args.format)}" for l, z in results])
    return 0


def _cmd_charpoly(args) -> int:
    surface = lys_mod.lys_from_json(_read_json(args.infile))
    delta, delta_tilde = lys_mod.lys_charpoly(surface)
    _print(args,
           {"delta": cyclo_to_json(delta), "delta_tilde": cyclo_to_json(delta_tilde)},
           [f"Delta = {_render_cyclo(delta, args.format)}",
            f"Delta_tilde = {_render_cyclo(delta_tilde, args.format)}"])
    return 0


def _cmd_check(args) -> int:
    zeta1, delta_tilde, orders, family = _load_subject(_read_json(args.infile))
    if args.conjecture == "monodromy":
        report = checks.check_monodromy(zeta1, delta_tilde)
    else:
        report = checks.check_holomorphy(family, orders, args.lmax)
    verdict = "PASS" if report.passed else "FAIL"
    lines = [f"{report.conjecture}: {verdict}"]
    for item in report.items:
        note = f"  ({item.note})" if item.note else ""
        lines.append(f"  {item.label}: {'ok' if item.ok else 'FAIL'}{note}")
    _print(args, report.to_json(), lines)
    return 0 if report.passed else 2


def _cmd_fbad(args) -> int:
    orders = frozenset(_parse_ells(args.orders))
    bad = sorted(suspension.fbad_set(orders))
    _print(args, {"fbad": bad}, [",".join(map(str, bad))])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topzeta",
        description="Exact topological zeta functions, monodromy zeta "
                    "functions, and conjecture checks for suspensions and "
                    "Le-Yomdin surface singularities.")
    parser.add_argument("--format", choices=("text", "json", "latex"),
                        default="text")
    parser.add_argument("--strict", action="store_true",
                        help="missing twisted entries are an error instead of 0")
    parser.add_argument("--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_zeta = sub.add_parser("zeta", help="twisted topological zeta function")
    p_zeta.add_argument("source", choices=("graph", "strata"))
    p_zeta.add_argument("--in", dest="infile", required=True)
    p_zeta.add_argument("--ell", type=int, default=1)
    p_zeta.set_defaults(fn=_cmd_zeta)

    p_acampo = sub.add_parser("acampo", help="monodromy zeta and char poly")
    p_acampo.add_argument("--in", dest="infile", required=True)
    p_acampo.set_defaults(fn=_cmd_acampo)

    p_susp = sub.add_parser("suspend", help="suspension zeta functions")
    p_susp.add_argument("--in", dest="infile", required=True)
    p_susp.add_argument("--k", type=int, required=True)
    p_susp.add_argument("--m", type=int, default=0)
    p_susp.add_argument("--nuz", type=int, default=1)
    p_susp.add_argument("--ell", required=True)
    p_susp.add_argument("--matrix", action="store_true")
    p_susp.set_defaults(fn=_cmd_suspend)

    p_lys = sub.add_parser("lys", help="Le-Yomdin surface zeta functions")
    p_lys.add_argument("--in", dest="infile", required=True)
    p_lys.add_argument("--ell", required=True)
    p_lys.set_defaults(fn=lambda a: _cmd_lys(a, sis=False))

    p_sis = sub.add_parser("sis", help="superisolated specialization (k = 1)")
    p_sis.add_argument("--in", dest="infile", required=True)
    p_sis.add_argument("--ell", required=True)
    p_sis.set_defaults(fn=lambda a: _cmd_lys(a, sis=True))

    p_char = sub.add_parser("charpoly", help="Le-Yomdin characteristic polynomial")
    p_char.add_argument("--in", dest="infile", required=True)
    p_char.set_defaults(fn=_cmd_charpoly)

    p_check = sub.add_parser("check", help="conjecture checks")
    p_check.add_argument("conjecture", choices=("monodromy", "holomorphy"))
    p_check.add_argument("--in", dest="infile", required=True)
    p_check.add_argument("--lmax", type=int, default=None)
    p_check.set_defaults(fn=_cmd_check)

    p_fbad = sub.add_parser("fbad", help="f-bad integers of an order set")
    p_fbad.add_argument("--orders", required=True)
    p_fbad.set_defaults(fn=_cmd_fbad)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, FactorizationError, ValueError, KeyError,
            OSError, json.JSONDecodeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
