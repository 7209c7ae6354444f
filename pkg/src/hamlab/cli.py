"""Command-line entry point.

One executable, eight subcommands covering the full pipeline:

    hamlab gen        sample G(n, p) to an edge-list file
    hamlab verify-re  rotation-endpoint expansion certificate for a path
    hamlab solve      rotation-extension solver, JSON outcome
    hamlab attack     budgeted adversarial edge deletion
    hamlab verify     statistical pseudorandomness battery
    hamlab oracle     exact small-n Hamiltonicity decision
    hamlab sweep      Monte Carlo resilience sweep to CSV
    hamlab threshold  bisection estimate of the critical deletion fraction

Everything machine-readable goes to stdout (JSON or CSV); diagnostics go to
stderr.  Exit codes: 0 for success, 1 for well-formed negative answers
(solver failed, oracle says no, a verifier check failed), 2 for bad usage
or malformed inputs.
"""

import argparse
import json
import sys

from .adversary import (bipartition_attack, isolation_attack, random_attack,
                        uniform_budget)
from .edgelist import read_edgelist, write_edgelist
from .gnp import GnpParams, sample_gnp, sprinkle
from .graphs import VertexSet, subtract
from .harness import SweepConfig, estimate_threshold, run_sweep, rows_to_csv
from .oracle import exact_hamiltonian
from .rng import mix64
from .rotation import PathSeq, re_certificate
from .solver import SolveConfig, extend, hamilton, hamilton_split
from .statcheck import run_battery


def _fail(msg):
    print("error: %s" % msg, file=sys.stderr)
    raise SystemExit(2)


def _load_graph(path):
    try:
        return read_edgelist(path)
    except (OSError, ValueError) as exc:
        _fail("reading %s: %s" % (path, exc))


def _cmd_gen(args):
    g = sample_gnp(GnpParams(args.n, args.p, args.seed))
    write_edgelist(g, args.out)
    print("wrote %s: n=%d m=%d" % (args.out, g.n, g.m), file=sys.stderr)


def _default_path(g):
    # deterministic: greedy walk from vertex 0, then maximal extension
    from .solver import _greedy_path
    p = _greedy_path(g, 0)
    while (q := extend(g, p)) is not None:
        p = q
    return p


def _cmd_verify_re(args):
    g = _load_graph(args.graph)
    if args.path:
        try:
            verts = [int(tok) for tok in open(args.path).read().split()]
        except (OSError, ValueError) as exc:
            _fail("reading path file: %s" % exc)
        p = PathSeq(tuple(verts))
    else:
        p = _default_path(g)
    cert = re_certificate(g, p, args.delta, sample=args.sample)
    print(json.dumps(cert.to_json_dict(), indent=2))


def _cmd_solve(args):
    g = _load_graph(args.graph)
    cfg = SolveConfig(delta=args.delta, max_restarts=args.max_restarts,
                      seed=args.seed)
    if args.split:
        halves = sprinkle(g, args.delta, mix64(args.seed, 0x5B117))
        out = hamilton_split(halves.kept, halves.rest, cfg)
    else:
        out = hamilton(g, cfg)
    print(json.dumps(out.to_json_dict()))
    return 0 if out.status == "hamiltonian" else 1


def _cmd_attack(args):
    g = _load_graph(args.graph)
    p = args.p if args.p is not None else (
        2.0 * g.m / (g.n * (g.n - 1)) if g.n > 1 else 0.0)
    budget = uniform_budget(g.n, p, args.alpha)
    if args.strategy == "bipartition":
        half = VertexSet.from_members(g.n, range(g.n // 2))
        dg = bipartition_attack(g, (half, half.complement()), budget)
    elif args.strategy == "random":
        dg = random_attack(g, budget, args.seed)
    else:
        if args.target is None:
            _fail("--target is required for the isolate strategy")
        dg = isolation_attack(g, args.target, budget)
    write_edgelist(dg.h, args.out)
    print("deleted %d edges (budget %d per vertex)"
          % (dg.h.m, budget[0]), file=sys.stderr)
    if args.emit_remaining:
        write_edgelist(subtract(g, dg.h), args.emit_remaining)


def _cmd_verify(args):
    g = _load_graph(args.graph)
    if args.removed:
        g = subtract(g, _load_graph(args.removed))
    reports = run_battery(g, args.p, args.eps, samples=args.samples,
                          seed=args.seed)
    print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_oracle(args):
    g = _load_graph(args.graph)
    try:
        res = exact_hamiltonian(g, limit_n=args.limit)
    except ValueError as exc:
        _fail(str(exc))
    print(json.dumps(res.to_json_dict()))
    return 0 if res.hamiltonian else 1


def _load_config(path):
    try:
        with open(path) as fh:
            return SweepConfig.from_json_dict(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        _fail("bad sweep config %s: %s" % (path, exc))


def _cmd_sweep(args):
    cfg = _load_config(args.config)
    rows = run_sweep(cfg, workers=args.workers)
    text = rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print("wrote %s (%d rows)" % (args.out, len(rows)), file=sys.stderr)


def _cmd_threshold(args):
    cfg = _load_config(args.config)
    res = estimate_threshold(cfg, tol=args.tol, workers=args.workers)
    print(json.dumps(res.to_json_dict(), indent=2))


def build_parser():
    ap = argparse.ArgumentParser(prog="hamlab", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sample G(n,p) to an edge-list file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_gen)

    v = sub.add_parser("verify-re", help="endpoint-expansion certificate")
    v.add_argument("--graph", required=True)
    v.add_argument("--delta", type=float, required=True)
    v.add_argument("--path", help="whitespace-separated vertex ids; "
                                  "default: greedy maximal path from vertex 0")
    v.add_argument("--sample", type=int, default=8,
                   help="how many endpoints get the reverse audit")
    v.set_defaults(func=_cmd_verify_re)

    s = sub.add_parser("solve", help="rotation-extension solver")
    s.add_argument("--graph", required=True)
    s.add_argument("--split", action="store_true",
                   help="two-phase mode: sprinkle off a reserve, rotate in "
                        "the rest")
    s.add_argument("--delta", type=float, default=0.3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-restarts", type=int, default=20)
    s.add_argument("--json", action="store_true",
                   help="accepted for symmetry; output is always JSON")
    s.set_defaults(func=_cmd_solve)

    a = sub.add_parser("attack", help="budgeted adversarial deletion")
    a.add_argument("--graph", required=True)
    a.add_argument("--strategy", required=True,
                   choices=["bipartition", "random", "isolate"])
    a.add_argument("--alpha", type=float, required=True)
    a.add_argument("--p", type=float,
                   help="edge probability for the budget floor(alpha*n*p); "
                        "defaults to the graph's empirical density")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--target", type=int)
    a.add_argument("--out", required=True)
    a.add_argument("--emit-remaining", metavar="FILE")
    a.set_defaults(func=_cmd_attack)

    c = sub.add_parser("verify", help="statistical property battery")
    c.add_argument("--graph", required=True)
    c.add_argument("--p", type=float, required=True)
    c.add_argument("--eps", type=float, required=True)
    c.add_argument("--removed", help="edge list to subtract before checking")
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true",
                   help="accepted for symmetry; output is always JSON")
    c.set_defaults(func=_cmd_verify)

    o = sub.add_parser("oracle", help="exact small-n decision")
    o.add_argument("--graph", required=True)
    o.add_argument("--limit", type=int, default=24)
    o.add_argument("--json", action="store_true",
                   help="accepted for symmetry; output is always JSON")
    o.set_defaults(func=_cmd_oracle)

    w = sub.add_parser("sweep", help="Monte Carlo resilience sweep")
    w.add_argument("--config", required=True)
    w.add_argument("--out", required=True, help="CSV path, or - for stdout")
    w.add_argument("--workers", type=int)
    w.set_defaults(func=_cmd_sweep)

    t = sub.add_parser("threshold", help="bisect the critical alpha")
    t.add_argument("--config", required=True)
    t.add_argument("--tol", type=float, default=0.02)
    t.add_argument("--workers", type=int)
    t.set_defaults(func=_cmd_threshold)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
