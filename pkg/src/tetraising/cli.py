"""Command-line front end.

Subcommands expose every computation with machine-readable output:

    sixj         exact Racah weight and float 6j for six twice-integer spins
    loop-poly    built-in graph cycles, optional evaluation
    ising        brute-force partition function
    genfun       generating-function partial sum with a tail estimate
    check        residuals of the duality identities (exact over rationals)
    zeros        Fisher-zero parametrizations, single shot or random sweep
    asymptotics  exact 6j versus the large-spin estimate over a spin window
    figurate     cross-polytope figurate number table
    report       render the standard figures next to their CSV data

JSON on stdout by default, CSV with --csv; --seed fixes random sweeps.
Exit status: 0 on success, 1 on usage errors, 2 on domain errors such as
a Lorentzian length assignment.

Coupling syntax: "3/5" is an exact rational, "0.25" a float, "1.2,-0.3"
a complex number, and "5/4:3/4" a rational (cosh, sinh) pair for the
hyperbolic identities.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from fractions import Fraction

from . import asymptotics as asym
from . import geometry as geo
from . import ising
from . import recoupling as rec
from . import sampling
from .errors import TetraIsingError
from .graphs import (
    BUILTIN_NAMES,
    TETRA,
    THETA,
    TRIANGLE,
    builtin_graph,
    enumerate_cycles,
    eval_loop_polynomial,
    graph_to_json,
    loop_polynomial_to_json,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def parse_coupling(token: str):
    """Parse one coupling token: rational, float, complex or (cosh, sinh)."""
    if ":" in token:
        c, s = token.split(":", 1)
        return (parse_coupling(c), parse_coupling(s))
    if "," in token:
        re_part, im_part = token.split(",", 1)
        return complex(float(re_part), float(im_part))
    if "/" in token:
        num, den = token.split("/", 1)
        return Fraction(int(num), int(den))
    if token.lstrip("+-").isdigit():
        return Fraction(int(token))
    return float(token)


def parse_length(token: str):
    value = parse_coupling(token)
    if isinstance(value, tuple):
        raise ValueError(f"hyperbolic pair {token!r} is not a length")
    if isinstance(value, Fraction):
        return float(value)
    return value


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    return x


def emit(payload, args, csv_rows=None, csv_header=None):
    """JSON by default; CSV when --csv was given and rows are available."""
    if getattr(args, "csv", False) and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(_jsonable(payload), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")


def _couplings_arg(values, graph):
    edge_ids = graph.edge_ids
    if len(values) != len(edge_ids):
        raise TetraIsingError(
            f"graph {graph.name} needs {len(edge_ids)} couplings, got {len(values)}"
        )
    return {eid: parse_coupling(v) for eid, v in zip(edge_ids, values)}


def _residual_abs(res) -> float:
    return float(abs(complex(res))) if isinstance(res, complex) else float(abs(res))


def _is_exact(res) -> bool:
    return isinstance(res, (Fraction, int))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_sixj(args):
    spins = tuple(args.spins)
    if any(s < 0 for s in spins):
        raise TetraIsingError("twice-spins must be nonnegative integers")
    weight = rec.racah_weight(spins)
    value = rec.sixj(spins)
    payload = {"spins": list(spins), "weight": _jsonable(weight), "sixj": value}
    emit(payload, args,
         csv_rows=[[*spins, weight.numerator, weight.denominator, value]],
         csv_header=["t1", "t2", "t3", "t4", "t5", "t6", "weight_num", "weight_den", "sixj"])


def cmd_loop_poly(args):
    g = builtin_graph(args.graph)
    poly = enumerate_cycles(g)
    payload = {
        "graph": graph_to_json(g),
        "cycles": loop_polynomial_to_json(poly),
    }
    rows = [[json.dumps(sorted(c))] for c in poly.cycles]
    if args.eval:
        couplings = _couplings_arg(args.eval, g)
        value = eval_loop_polynomial(poly, couplings)
        payload["value"] = _jsonable(
            value if isinstance(value, Fraction) else complex(value)
        )
    emit(payload, args, csv_rows=rows, csv_header=["cycle"])


def cmd_ising(args):
    g = builtin_graph(args.graph)
    couplings = _couplings_arg(args.couplings, g)
    value = ising.ising_partition(g, couplings)
    payload = {
        "graph": g.name,
        "couplings": [_jsonable(couplings[e]) for e in g.edge_ids],
        "partition": _jsonable(value if isinstance(value, Fraction) else complex(value)),
    }
    emit(payload, args)


def cmd_genfun(args):
    g = builtin_graph(args.graph)
    couplings = {}
    for e, v in _couplings_arg(args.couplings, g).items():
        if isinstance(v, tuple):
            raise TetraIsingError("genfun takes couplings Y_e, not hyperbolic pairs")
        couplings[e] = complex(v)
    partial = rec.genfun_partial_sum(g, couplings, args.cap)
    tail = None
    if args.cap >= 1:
        prev = rec.genfun_partial_sum(g, couplings, args.cap - 1)
        denom = abs(partial)
        tail = abs(partial - prev) / denom if denom else math.inf
    payload = {
        "graph": g.name,
        "cap_twice": args.cap,
        "partial_sum": _jsonable(complex(partial)),
        "last_shell_over_partial": tail,
    }
    emit(payload, args)


_IDENTITIES = ("westbury", "hightemp", "lowtemp", "selfdual", "pachner", "scissor")


def _one_check(identity, g, couplings):
    """Run one identity check; returns (residual_abs, exact, extra)."""
    if identity == "westbury":
        res = ising.check_westbury(g, couplings)
        return _residual_abs(res), _is_exact(res), {}
    if identity == "hightemp":
        res = ising.check_high_temp(g, couplings)
        return _residual_abs(res), _is_exact(res), {}
    if identity == "lowtemp":
        res = ising.check_low_temp(g, couplings)
        return _residual_abs(res), _is_exact(res), {}
    if identity == "selfdual":
        res = ising.self_duality_residual(couplings)
        return _residual_abs(res), _is_exact(res), {}
    if identity == "pachner":
        factor, reduced = ising.pachner_reduce(couplings)
        p_t = eval_loop_polynomial(ising._builtin_poly(TETRA), couplings)
        theta_poly = ising._builtin_poly(THETA)
        res = abs(complex(p_t) - factor * eval_loop_polynomial(theta_poly, reduced))
        rel = res / max(abs(complex(p_t)), 1e-300)
        return rel, False, {"factor": _jsonable(factor),
                            "reduced": [_jsonable(reduced[e]) for e in (1, 2, 3)]}
    if identity == "scissor":
        transformed = ising.scissor_transform(couplings)
        poly = ising._builtin_poly(TETRA)
        before = complex(eval_loop_polynomial(poly, {e: complex(c) for e, c in couplings.items()}))
        after = complex(eval_loop_polynomial(poly, transformed))
        rel = abs(before - after) / max(abs(before), 1e-300)
        return rel, False, {"transformed": [_jsonable(transformed[e]) for e in range(1, 7)]}
    raise TetraIsingError(f"unknown identity {identity!r}")


def _random_couplings_for(identity, g, rng):
    if identity == "hightemp":
        return sampling.hyperbolic_couplings(rng, g.edge_ids)
    if identity == "lowtemp":
        return sampling.positive_rational_couplings(rng, g.edge_ids)
    if identity in ("pachner", "scissor"):
        return sampling.positive_rational_couplings(rng, g.edge_ids)
    couplings = sampling.rational_couplings(rng, g.edge_ids)
    if identity == "westbury":
        poly = ising._builtin_poly(g.name)
        while eval_loop_polynomial(poly, couplings) == 0:
            couplings = sampling.rational_couplings(rng, g.edge_ids)
    return couplings


def cmd_check(args):
    graph_name = args.graph or TETRA
    if args.identity in ("selfdual", "pachner", "scissor"):
        graph_name = TETRA
    g = builtin_graph(graph_name)
    if args.random:
        rng = random.Random(args.seed)
        worst = 0.0
        all_exact = True
        for _ in range(args.random):
            couplings = _random_couplings_for(args.identity, g, rng)
            res, exact, _ = _one_check(args.identity, g, couplings)
            worst = max(worst, res)
            all_exact = all_exact and exact
        payload = {
            "identity": args.identity,
            "graph": g.name,
            "trials": args.random,
            "seed": args.seed,
            "max_residual_abs": worst,
            "exact": all_exact,
        }
        emit(payload, args)
        return
    if not args.couplings:
        raise TetraIsingError("provide --couplings or --random N")
    couplings = _couplings_arg(args.couplings, g)
    res, exact, extra = _one_check(args.identity, g, couplings)
    payload = {
        "identity": args.identity,
        "graph": g.name,
        "couplings": [_jsonable(couplings[e]) for e in g.edge_ids],
        "residual_abs": res,
        "exact": exact,
    }
    payload.update(extra)
    emit(payload, args)


def _zero_payload(z: geo.ZeroSet):
    residual = geo.verify_zero(z)
    edges = sorted(z.couplings)
    return {
        "graph": z.graph,
        "provenance": z.provenance,
        "epsilon": z.epsilon,
        "branch": z.branch,
        "Y": [[z.couplings[e].real, z.couplings[e].imag] for e in edges],
        "residual": residual,
    }, residual


def _zero_csv_row(lengths, z, residual):
    branch_sign = z.epsilon if z.epsilon is not None else (1 if z.branch == "+" else -1)
    row = [*(x if not isinstance(x, complex) else f"{x.real}+{x.imag}j" for x in lengths), branch_sign]
    for e in sorted(z.couplings):
        row.extend([z.couplings[e].real, z.couplings[e].imag])
    row.append(residual)
    return row


def cmd_zeros(args):
    rng = random.Random(args.seed)
    header = ["l1", "l2", "l3", "l4", "l5", "l6", "eps",
              "re_Y1", "im_Y1", "re_Y2", "im_Y2", "re_Y3", "im_Y3",
              "re_Y4", "im_Y4", "re_Y5", "im_Y5", "re_Y6", "im_Y6", "residual"]

    def one(lengths_or_points):
        if args.mode == "geometric":
            z = geo.geometric_zeros(geo.TetraLengths(lengths_or_points), args.eps)
        elif args.mode == "pregeometric":
            z = geo.pregeometric_zeros(geo.TetraLengths(lengths_or_points), args.branch)
        elif args.mode == "triangle":
            z = geo.triangle_zeros(geo.TriangleLengths(lengths_or_points), args.eps)
        else:
            a, b, c, o = lengths_or_points
            z = geo.cevian_zeros(a, b, c, o, phases=not args.no_phases)
        return z

    if args.sweep:
        rows = []
        payloads = []
        for _ in range(args.sweep):
            if args.mode == "geometric":
                lengths = sampling.euclidean_tetra(rng).l
            elif args.mode == "pregeometric":
                lengths = sampling.complex_tetra_lengths(rng).l
            elif args.mode == "triangle":
                lengths = _random_triangle_lengths(rng)
            else:
                lengths = sampling.random_triangle_with_point(rng)
            z = one(lengths)
            payload, residual = _zero_payload(z)
            payload["input"] = _jsonable(list(lengths))
            payloads.append(payload)
            if args.mode in ("geometric", "pregeometric"):
                rows.append(_zero_csv_row(lengths, z, residual))
        emit(payloads, args, csv_rows=rows, csv_header=header)
        return

    if args.mode == "cevian":
        if not args.points or len(args.points) != 8:
            raise TetraIsingError("cevian mode needs --points ax ay bx by cx cy ox oy")
        pts = [(args.points[0], args.points[1]), (args.points[2], args.points[3]),
               (args.points[4], args.points[5]), (args.points[6], args.points[7])]
        z = one(pts)
        payload, _ = _zero_payload(z)
        payload["points"] = args.points
        emit(payload, args)
        return

    need = 3 if args.mode == "triangle" else 6
    if not args.lengths or len(args.lengths) != need:
        raise TetraIsingError(f"{args.mode} mode needs --lengths with {need} entries")
    lengths = tuple(parse_length(v) for v in args.lengths)
    z = one(lengths)
    payload, residual = _zero_payload(z)
    payload["lengths"] = _jsonable(list(lengths))
    rows = [_zero_csv_row(lengths, z, residual)] if need == 6 else None
    emit(payload, args, csv_rows=rows, csv_header=header)


def _random_triangle_lengths(rng):
    while True:
        ls = tuple(rng.uniform(0.5, 2.0) for _ in range(3))
        s = sum(ls) / 2
        if all(s - x > 1e-3 for x in ls):
            return ls


def cmd_asymptotics(args):
    jmin, jmax = args.sweep
    if jmin < 1 or jmax < jmin:
        raise TetraIsingError("need 1 <= jmin <= jmax")
    rows = []
    payload = []
    for j in range(jmin, jmax + 1):
        t = (2 * j,) * 6
        exact = rec.sixj(t)
        est = asym.pr_estimate(t)
        env = asym.pr_envelope(t)
        abs_err = abs(est - exact)
        rows.append([j, exact, est, abs_err, abs_err / env])
        payload.append({"j": j, "exact": exact, "estimate": est,
                        "abs_err": abs_err, "rel_envelope_err": abs_err / env})
    emit(payload, args, csv_rows=rows,
         csv_header=["j", "exact", "estimate", "abs_err", "rel_envelope_err"])


def cmd_figurate(args):
    rows = []
    payload = []
    for p in range(1, args.pmax + 1):
        for q in range(1, args.qmax + 1):
            value = rec.figurate(p, q).value
            rows.append([p, q, value])
            payload.append({"p": p, "q": q, "T": str(value)})
    emit(payload, args, csv_rows=rows, csv_header=["p", "q", "T"])


def cmd_report(args):
    from . import report

    paths = report.render_all(args.outdir, seed=args.seed, jmax=args.jmax)
    emit({"written": paths}, args)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tetraising", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sixj", help="exact Racah weight and float 6j-symbol")
    p.add_argument("--spins", type=int, nargs=6, required=True, metavar="T",
                   help="six twice-integer spins")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_sixj)

    p = sub.add_parser("loop-poly", help="cycles of a built-in graph")
    p.add_argument("--graph", required=True, choices=BUILTIN_NAMES)
    p.add_argument("--eval", nargs="+", metavar="Y",
                   help="optional couplings to evaluate the polynomial at")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_loop_poly)

    p = sub.add_parser("ising", help="brute-force Ising partition function")
    p.add_argument("--graph", required=True, choices=BUILTIN_NAMES)
    p.add_argument("--couplings", nargs="+", required=True, metavar="Y",
                   help="edge couplings y_e (numbers or cosh:sinh pairs)")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_ising)

    p = sub.add_parser("genfun", help="generating-function partial sum")
    p.add_argument("--graph", required=True, choices=(TETRA, THETA, TRIANGLE))
    p.add_argument("--couplings", nargs="+", required=True, metavar="Y")
    p.add_argument("--cap", type=int, required=True,
                   help="largest twice-spin included")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("check", help="duality identity residuals")
    p.add_argument("--identity", required=True, choices=_IDENTITIES)
    p.add_argument("--graph", choices=BUILTIN_NAMES,
                   help="graph for westbury/hightemp/lowtemp (default TETRA)")
    p.add_argument("--couplings", nargs="+", metavar="Y")
    p.add_argument("--random", type=int, metavar="N",
                   help="run N random coupling sets instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("zeros", help="Fisher-zero parametrizations")
    p.add_argument("--mode", required=True,
                   choices=("geometric", "pregeometric", "triangle", "cevian"))
    p.add_argument("--lengths", nargs="+", metavar="L",
                   help="edge lengths (re,im pairs allowed in pregeometric/triangle)")
    p.add_argument("--points", nargs=8, type=float, metavar="X",
                   help="cevian mode: A B C O as x y pairs")
    p.add_argument("--eps", type=int, default=1, choices=(1, -1))
    p.add_argument("--branch", default="+", choices=("+", "-"))
    p.add_argument("--no-phases", action="store_true",
                   help="cevian mode: real variant without the angle phases")
    p.add_argument("--sweep", type=int, metavar="N", help="random sweep of N samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("asymptotics", help="exact 6j versus the large-spin estimate")
    p.add_argument("--sweep", type=int, nargs=2, required=True, metavar=("JMIN", "JMAX"))
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("figurate", help="figurate number table")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_figurate)

    p = sub.add_parser("report", help="render figures and CSV data files")
    p.add_argument("--outdir", default="reports")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jmax", type=int, default=40)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except TetraIsingError as exc:
        json.dump({"error": str(exc), "type": type(exc).__name__}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except (ValueError, KeyError) as exc:
        json.dump({"error": str(exc), "type": type(exc).__name__}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
