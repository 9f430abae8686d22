"""Command-line front end.

Subcommand groups mirror the experiment families:

    kolmex codes cloud      sampled code-point cloud: CSV (+ optional SVG)
    kolmex codes sweep      partition-sum sweep over an inverse-temperature grid
    kolmex algebra feynman-check   graph expansion vs Gaussian oracle
    kolmex algebra hopf-verify     bialgebra/antipode axiom report
    kolmex algebra birkhoff        BPHZ decomposition of a character JSON
    kolmex halting probe    orbit probe report JSON
    kolmex zipf fit         rank-frequency CSV + power-law fit summary

Exit codes: 0 success / property holds, 1 checked property fails,
2 usage or I/O errors (no partial output files are left behind).
All randomness flows through one --seed per command; every output file
carries a version-stamped header, and identical (config, version) pairs
give byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import PROXY_VERSION, __version__
from . import codes as codes_mod
from . import halting as halting_mod
from . import renorm as renorm_mod
from .complexity import synthetic_zipf_corpus, zipf_analyze
from .feynman import Theory, gaussian_oracle, graph_expansion
from .svgplot import cloud_svg


class UsageError(Exception):
    pass


def _stamp(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return f"kolmex {__version__} {PROXY_VERSION} {blob}"


def _write_atomic(path: str, text: str):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _echo_config(args, config: dict):
    if args.verbose:
        print(json.dumps(config, sort_keys=True), file=sys.stderr)


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------

def _build_ensemble(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.count < 0:
        raise UsageError("--count must be >= 0")
    return codes_mod.sample_codes(args.q, args.n, args.size, args.count, args.seed)


def cmd_codes_cloud(args) -> int:
    config = {
        "cmd": "codes cloud", "q": args.q, "n": args.n, "size": args.size,
        "count": args.count, "seed": args.seed,
    }
    _echo_config(args, config)
    ensemble = _build_ensemble(args)
    rows = codes_mod.cloud_rows(ensemble)
    _write_atomic(args.out, f"# {_stamp(config)}\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} code points to {args.out}")
    if args.svg:
        points = [
            (float(e.params.delta), float(e.params.rate)) for e in ensemble.entries
        ]
        grid = [i / 400 for i in range(401)]
        curves = [
            (kind, [(d, codes_mod.bound_curve(kind, args.q, d)) for d in grid])
            for kind in codes_mod.BOUND_KINDS
        ]
        _write_atomic(args.svg, cloud_svg(points, curves, _stamp(config)))
        print(f"wrote plot to {args.svg}")
    return 0


def cmd_codes_sweep(args) -> int:
    config = {
        "cmd": "codes sweep", "q": args.q, "n": args.n, "size": args.size,
        "count": args.count, "seed": args.seed, "rate": str(args.rate),
        "delta": str(args.delta), "eta": args.eta,
        "beta_min": args.beta_min, "beta_max": args.beta_max, "steps": args.steps,
    }
    _echo_config(args, config)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    ensemble = _build_ensemble(args)
    if args.steps == 1:
        betas = [args.beta_min]
    else:
        span = args.beta_max - args.beta_min
        betas = [args.beta_min + i * span / (args.steps - 1) for i in range(args.steps)]
    rows = codes_mod.sweep_rows(ensemble, args.rate, args.delta, betas, args.eta)
    _write_atomic(args.out, f"# {_stamp(config)}\n" + "\n".join(rows) + "\n")
    print(f"wrote {len(betas)} sweep rows to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

def cmd_feynman_check(args) -> int:
    config = {
        "cmd": "algebra feynman-check", "c3": str(args.c3), "c4": str(args.c4),
        "order": args.order, "budget": args.budget,
    }
    _echo_config(args, config)
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    theory = Theory.single_color(c3=args.c3, c4=args.c4)
    expansion = graph_expansion(theory, args.order, budget=args.budget)
    oracle = gaussian_oracle(theory, args.order)
    print(f"expansion: {expansion.pretty()}")
    print(f"oracle:    {oracle.pretty()}")
    match = expansion.matching_order(oracle)
    if match >= args.order:
        print(f"match through L^{args.order}")
        return 0
    print(
        f"MISMATCH at L^{match + 1}: expansion {expansion[match + 1]} "
        f"vs oracle {oracle[match + 1]}"
    )
    return 1


def cmd_hopf_verify(args) -> int:
    config = {
        "cmd": "algebra hopf-verify",
        "max_vertices": args.max_vertices, "max_flags": args.max_flags,
    }
    _echo_config(args, config)
    from .hopf import (
        HopfElement,
        ZERO,
        antipode,
        coassociativity_sides,
        coproduct,
        coproduct_of_monomial,
        enumerate_connected_oriented,
        generator_degree,
        monomial_degree,
        tensor_mul,
    )

    family = enumerate_connected_oriented(args.max_vertices, args.max_flags)
    print(f"family: {len(family)} connected oriented classes")
    failures = []

    for label in family:
        lhs, rhs = coassociativity_sides(label)
        if lhs != rhs:
            failures.append(f"coassociativity fails on {label}")
        delta = coproduct_of_monomial((label,))
        if any(
            monomial_degree(l) + monomial_degree(r) != generator_degree(label)
            for (l, r) in delta
        ):
            failures.append(f"coproduct degrade fails on {label}")
        counit_left = {}
        for (l, r), c in delta.items():
            if l == ():
                counit_left[r] = counit_left.get(r, 0) + c
        if counit_left != {(label,): 1}:
            failures.append(f"counit law fails on {label}")
    print(f"coassociativity + counit laws: checked {len(family)} generators")

    pairs = 0
    for i, a in enumerate(family):
        for b in family[i:]:
            if generator_degree(a) + generator_degree(b) > args.max_flags:
                continue
            pairs += 1
            da = coproduct_of_monomial((a,))
            db = coproduct_of_monomial((b,))
            product_mono = tuple(sorted((a, b)))
            if tensor_mul(da, db) != coproduct_of_monomial(product_mono):
                failures.append(f"bialgebra compatibility fails on {a} * {b}")
    print(f"bialgebra compatibility: checked {pairs} products")

    checked = 0
    for label in family:
        if generator_degree(label) > args.max_flags:
            continue
        x = HopfElement.generator(label)
        acc = ZERO
        for (l, r), c in coproduct(x).items():
            acc = acc + c * (antipode(HopfElement({l: Fraction(1)})) * HopfElement({r: Fraction(1)}))
        if acc != ZERO:
            failures.append(f"antipode law fails on {label}")
        checked += 1
    print(f"antipode law: checked {checked} generators")

    if failures:
        for f in failures:
            print(f"FAIL: {f}")
        return 1
    print("all axioms pass")
    return 0


def cmd_birkhoff(args) -> int:
    config = {
        "cmd": "algebra birkhoff", "in": os.path.basename(args.input),
        "degree": args.degree,
    }
    _echo_config(args, config)
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    phi = renorm_mod.character_from_json(text)
    if args.degree is not None:
        phi = renorm_mod.Character(
            phi.generator_values, args.degree, phi.trunc, phi.name
        )
    minus, plus = renorm_mod.birkhoff(phi)
    doc = {
        "version": f"kolmex {__version__}",
        "proxy_version": PROXY_VERSION,
        "degree_bound": phi.degree_bound,
        "minus": _gmap_values(minus, phi),
        "plus": _gmap_values(plus, phi),
    }
    _write_atomic(args.out, json.dumps(doc, indent=1) + "\n")
    print(f"wrote Birkhoff factors for {len(phi.generator_values)} generators to {args.out}")
    return 0


def _gmap_values(gmap, phi) -> list:
    out = []
    for label in sorted(phi.generator_values):
        val = gmap((label,))
        out.append(
            {
                "graph": label,
                "value": {
                    "polar": [str(c) for c in val.polar],
                    "regular": [str(c) for c in val.regular],
                },
            }
        )
    return out


# ---------------------------------------------------------------------------
# halting + zipf
# ---------------------------------------------------------------------------

_FUNCTIONS = {
    "empty": halting_mod.PartialFunction.empty,
    "identity": halting_mod.PartialFunction.identity,
    "evens": halting_mod.PartialFunction.on_evens,
}


def _collatz() -> "halting_mod.PartialFunction":
    def compute(y: int, fuel: int):
        steps, current = 0, y
        while current != 1:
            if steps >= fuel:
                return None
            current = current // 2 if current % 2 == 0 else 3 * current + 1
            steps += 1
        return steps + 1

    return halting_mod.PartialFunction(compute, None, "collatz")


_FUNCTIONS["collatz"] = _collatz


def cmd_halting_probe(args) -> int:
    config = {
        "cmd": "halting probe", "function": args.function, "mode": args.mode,
        "x": args.x, "y": args.y, "budget": args.budget, "fuel": args.fuel,
    }
    _echo_config(args, config)
    f = _FUNCTIONS[args.function]()
    if args.mode == "opaque":
        f = f.opaque()
    elif not f.transparent:
        print(f"note: {args.function} has no domain predicate; probing opaquely")
    lifted = halting_mod.lift_to_permutation(f, fuel=args.fuel)
    pair = (halting_mod.zigzag(args.x), halting_mod.zigzag(args.y))
    report = halting_mod.classify_orbit(pair, lifted, budget=args.budget)
    doc = json.loads(report.to_json())
    doc["config"] = config
    doc["version"] = f"kolmex {__version__}"
    _write_atomic(args.out, json.dumps(doc, indent=1) + "\n")
    print(f"verdict: {report.verdict} ({report.certificate})")
    print(f"wrote report to {args.out}")
    return 0


def cmd_zipf_fit(args) -> int:
    config = {
        "cmd": "zipf fit", "lowercase": args.lowercase, "seed": args.seed,
        "types": args.types, "tokens": args.tokens,
        "corpus": os.path.basename(args.corpus) if args.corpus else None,
    }
    _echo_config(args, config)
    if args.corpus:
        try:
            with open(args.corpus, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.corpus}: {exc}") from None
        tokens = text.lower().split() if args.lowercase else text.split()
    else:
        tokens = synthetic_zipf_corpus(args.types, args.tokens, args.seed)
    fit = zipf_analyze(tokens)
    rows = ["rank,token,count,frequency"]
    for row in fit.table:
        rows.append(
            f"{row.rank},{row.token},{row.count},{codes_mod.fmt17(row.frequency)}"
        )
    _write_atomic(args.out, f"# {_stamp(config)}\n" + "\n".join(rows) + "\n")
    if fit.fit_defined:
        r2 = "n/a" if fit.r_squared is None else format(fit.r_squared, ".6f")
        print(
            f"types={len(fit.table)} tokens={len(tokens)} "
            f"exponent={fit.exponent:.6f} r_squared={r2}"
        )
    else:
        print(f"types={len(fit.table)} tokens={len(tokens)} fit=undefined")
    print(f"wrote rank-frequency table to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kolmex",
        description="desk-scale experiments on codes, complexity and graph algebra",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="echo the run config as JSON to stderr")
    sub = parser.add_subparsers(dest="group", required=True)

    codes_p = sub.add_parser("codes", help="code clouds and partition sweeps")
    codes_sub = codes_p.add_subparsers(dest="cmd", required=True)

    cloud = codes_sub.add_parser("cloud", help="sample codes and plot their points")
    cloud.add_argument("--q", type=int, default=2)
    cloud.add_argument("--n", type=int, required=True)
    cloud.add_argument("--size", type=int, default=64)
    cloud.add_argument("--count", type=int, required=True)
    cloud.add_argument("--seed", type=int, default=1)
    cloud.add_argument("--out", required=True)
    cloud.add_argument("--svg")
    cloud.set_defaults(handler=cmd_codes_cloud)

    sweep = codes_sub.add_parser("sweep", help="partition-sum sweep over beta")
    sweep.add_argument("--q", type=int, default=2)
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--size", type=int, required=True)
    sweep.add_argument("--count", type=int, required=True)
    sweep.add_argument("--seed", type=int, default=1)
    sweep.add_argument("--rate", type=Fraction, required=True)
    sweep.add_argument("--delta", type=Fraction, required=True)
    sweep.add_argument("--eta", type=float, default=0.01)
    sweep.add_argument("--beta-min", type=float, required=True)
    sweep.add_argument("--beta-max", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.add_argument("--out", required=True)
    sweep.set_defaults(handler=cmd_codes_sweep)

    algebra = sub.add_parser("algebra", help="expansion, bialgebra and BPHZ checks")
    algebra_sub = algebra.add_subparsers(dest="cmd", required=True)

    fey = algebra_sub.add_parser("feynman-check",
                                 help="graph expansion against the Gaussian oracle")
    fey.add_argument("--c3", type=Fraction, default=Fraction(0))
    fey.add_argument("--c4", type=Fraction, default=Fraction(0))
    fey.add_argument("--order", type=int, required=True)
    fey.add_argument("--budget", type=int, default=200_000,
                     help="cap on raw candidates in the class enumeration")
    fey.set_defaults(handler=cmd_feynman_check)

    hv = algebra_sub.add_parser("hopf-verify", help="bialgebra + antipode axioms")
    hv.add_argument("--max-vertices", type=int, default=3)
    hv.add_argument("--max-flags", type=int, default=6)
    hv.set_defaults(handler=cmd_hopf_verify)

    bk = algebra_sub.add_parser("birkhoff", help="BPHZ-decompose a character JSON")
    bk.add_argument("--in", dest="input", required=True)
    bk.add_argument("--degree", type=int,
                    help="override the character's degree bound")
    bk.add_argument("--out", required=True)
    bk.set_defaults(handler=cmd_birkhoff)

    halting_p = sub.add_parser("halting", help="orbit probes")
    halting_sub = halting_p.add_subparsers(dest="cmd", required=True)
    probe = halting_sub.add_parser("probe", help="classify a tau_f orbit")
    probe.add_argument("--function", choices=sorted(_FUNCTIONS), required=True)
    probe.add_argument("--mode", choices=["transparent", "opaque"],
                       default="transparent")
    probe.add_argument("--x", type=int, default=1,
                       help="first coordinate as a natural label (0 means *)")
    probe.add_argument("--y", type=int, default=1,
                       help="second coordinate as a natural label (0 means *)")
    probe.add_argument("--budget", type=int, required=True)
    probe.add_argument("--fuel", type=int, default=10_000)
    probe.add_argument("--out", required=True)
    probe.set_defaults(handler=cmd_halting_probe)

    zipf_p = sub.add_parser("zipf", help="rank-frequency analysis")
    zipf_sub = zipf_p.add_subparsers(dest="cmd", required=True)
    fit = zipf_sub.add_parser("fit", help="rank tokens and fit the power law")
    fit.add_argument("--corpus", help="plain-text corpus; whitespace tokens")
    fit.add_argument("--lowercase", action="store_true")
    fit.add_argument("--types", type=int, default=1000,
                     help="synthetic corpus: number of types")
    fit.add_argument("--tokens", type=int, default=100_000,
                     help="synthetic corpus: number of tokens")
    fit.add_argument("--seed", type=int, default=20260809)
    fit.add_argument("--out", required=True)
    fit.set_defaults(handler=cmd_zipf_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (codes_mod.CodeError, OSError, json.JSONDecodeError,
            halting_mod.HaltingError, renorm_mod.RenormError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
