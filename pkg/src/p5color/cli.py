"""Command-line entry point: ``p5color <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .bound import check_binding_hypotheses, check_recursion_inequality, color_budget, f_bounds, f_value
from .colorer import ColorOptions, ColoringCertificate, color_p5free, verify_certificate
from .errors import InputError, IntegrityError, OracleBudgetError, PrecisionError, UsageError
from .experiment import certificates_to_json, rows_to_csv, run_config
from .generators import GeneratorSpec, generate
from .io import parse_graph, read_graph, to_graph6
from .oracles import P5Witness, exact_chromatic, find_induced_p5, max_clique

EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTEGRITY = 4


def _load(path: str):
    if path == "-":
        return parse_graph(sys.stdin.read())
    return read_graph(path)


def _budget(args) -> Optional[int]:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("P5COLOR_ORACLE_BUDGET")
    return int(env) if env else None


def _emit(text: str, path: Optional[str] = None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _witness(w: P5Witness) -> dict:
    return {"p5_free": False, "witness": w.to_dict()}


def cmd_check_p5(args) -> int:
    w = find_induced_p5(_load(args.graph))
    if w is None:
        _emit(_dump({"p5_free": True}))
        return 0
    _emit(_dump(_witness(w)))
    return 1


def cmd_color(args) -> int:
    G = _load(args.graph)
    opts = ColorOptions(
        base_size=args.base_size,
        fast_path=not args.no_fast_path,
        oracle_budget=_budget(args),
        apex=args.apex,
    )
    out = color_p5free(G, opts)
    if isinstance(out, P5Witness):
        _emit(_dump(_witness(out)))
        return 1
    _emit(json.dumps(out.to_dict()) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    G = _load(args.graph)
    with open(args.certificate) as fh:
        try:
            cert = ColoringCertificate.from_dict(json.load(fh))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed certificate: {exc}") from exc
    rep = verify_certificate(G, cert)
    _emit(_dump({"ok": rep.ok, "message": rep.message, "checked_nodes": rep.checked_nodes}))
    return 0 if rep.ok else 1


def cmd_oracle(args) -> int:
    G = _load(args.graph)
    budget = _budget(args)
    if args.clique:
        q = max_clique(G, budget=budget)
        _emit(_dump({"clique_number": q.size, "clique": list(q.vertices)}))
    else:
        chi, col = exact_chromatic(G, budget)
        _emit(_dump({"chromatic_number": chi, "coloring": list(col.color_of)}))
    return 0


def cmd_bound(args) -> int:
    if args.eval is not None:
        w = args.eval
        lo, hi = f_bounds(w, args.digits)
        rep = {"w": w, "f": str(f_value(w, args.digits)), "f_lower": str(lo), "f_upper": str(hi), "budget": color_budget(w)}
        if w >= 5:
            rep["inequality"] = check_recursion_inequality(w, args.digits).to_dict()
    else:
        rep = check_binding_hypotheses(args.omega_base, args.sweep, args.digits).to_dict()
    _emit(_dump(rep))
    return 0 if rep.get("ok", True) else 1


def _value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def cmd_gen(args) -> int:
    params = {}
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = _value(v)
    G = generate(GeneratorSpec(args.kind, args.seed, params))
    if G is None:
        print("rejection sampler exhausted its tries", file=sys.stderr)
        return 1
    _emit(to_graph6(G) + "\n", args.output)
    return 0


def cmd_experiment(args) -> int:
    result, opt = run_config(args.config)
    _emit(rows_to_csv(result.rows, args.timing or opt.timing), args.csv)
    if args.certificates:
        _emit(certificates_to_json(result.certificates), args.certificates)
    bad = [r for r in result.rows if not r.verified and r.status != "not-generated"]
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p5color", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-p5", help="find an induced P5 or report P5-free")
    s.add_argument("graph", help="graph6 or edge-list file, '-' for stdin")
    s.set_defaults(func=cmd_check_p5)

    s = sub.add_parser("color", help="colour a P5-free graph and print its certificate")
    s.add_argument("graph")
    s.add_argument("-o", "--output", help="write the certificate here instead of stdout")
    s.add_argument("--no-fast-path", action="store_true", help="skip the DSATUR shortcut")
    s.add_argument("--base-size", type=int, default=20)
    s.add_argument("--apex", choices=("max-degree", "min-id"), default="max-degree")
    s.add_argument("--budget", type=int, help="oracle node budget")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a certificate against a graph")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exact clique or chromatic number")
    s.add_argument("graph")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--chromatic", action="store_true")
    g.add_argument("--clique", action="store_true")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bound", help="evaluate f or sweep the recursion inequality")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--eval", type=int, metavar="W")
    g.add_argument("--sweep", type=int, metavar="W_MAX")
    s.add_argument("--omega-base", type=int, default=4)
    s.add_argument("--digits", type=int, default=30)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("gen", help="generate a graph (graph6 output)")
    s.add_argument("kind", choices=("substitution", "split", "rejection"))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("experiment", help="run a TOML experiment config")
    s.add_argument("config")
    s.add_argument("--csv", help="CSV output path (default stdout)")
    s.add_argument("--certificates", help="certificate JSON output path")
    s.add_argument("--timing", action="store_true", help="append a runtime column")
    s.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleBudgetError as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (IntegrityError, PrecisionError) as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
