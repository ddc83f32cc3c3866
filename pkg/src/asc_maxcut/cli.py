"""``asc-maxcut`` command line: run sweeps, verify counting, generate graphs.

Exit codes: 0 success, 1 usage or configuration error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import kernels, verify
from .config import ConfigError, build_config, derive_seed, read_config_file, TAG_GRAPH, TAG_MASTER
from .graphs import GraphError, NoiseModel, NoiseModelConfig, make_instance, make_master, write_graph

EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asc-maxcut", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="run an information-content sweep and write CSVs")
    run.add_argument("--config", type=Path, help="key = value config file")
    run.add_argument("--model", choices=[m.value for m in NoiseModel])
    run.add_argument("--n", type=int)
    run.add_argument("--trials", type=int)
    run.add_argument("--grid", help="comma-separated p (edge reversal) or sigma (gaussian) values")
    run.add_argument("--algos", help="comma-separated subset of D2Greedy,RDGreedy,SG,SG3,EC")
    run.add_argument("--seed", type=int)
    run.add_argument("--mode", choices=["meanlog", "logmean"])
    run.add_argument("--workers", type=int)
    run.add_argument("--out", type=Path)

    ver = sub.add_parser("verify", help="check closed-form counts against enumeration")
    ver.add_argument("--nmax", type=int, default=10)
    ver.add_argument("--trials", type=int, default=500)
    ver.add_argument("--seed", type=int, default=0)

    gen = sub.add_parser("gen", help="write a master graph and one noisy pair")
    gen.add_argument("--model", choices=[m.value for m in NoiseModel], default=NoiseModel.EDGE_REVERSAL.value)
    gen.add_argument("--n", type=int, default=100)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--p-m", type=float, default=0.2)
    gen.add_argument("--p", type=float, default=0.2, help="instance flip probability")
    gen.add_argument("--mu", type=float, default=600.0)
    gen.add_argument("--sigma-m", type=float, default=50.0)
    gen.add_argument("--sigma", type=float, default=125.0, help="instance noise std-dev")
    gen.add_argument("--out", type=Path, required=True)
    return p


def cmd_run(args) -> int:
    from .estimator import run_asc_experiment
    from .results import summary, write_results

    try:
        values = read_config_file(args.config) if args.config else {}
        for key in ("model", "n", "trials", "grid", "algos", "seed", "mode", "workers", "out"):
            value = getattr(args, key)
            if value is not None:
                values[key] = str(value)
        cfg = build_config(values)
    except (ConfigError, OSError) as e:
        print(f"asc-maxcut run: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.getLogger(__name__).info("kernel backend: %s", kernels.BACKEND)
    result = run_asc_experiment(cfg)
    try:
        curves, content = write_results(result, cfg.output_dir)
    except OSError as e:
        print(f"asc-maxcut run: cannot write results: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(summary(result))
    print(f"wrote {curves} and {content}")
    return 0


def cmd_verify(args) -> int:
    if not 3 <= args.nmax <= 16 or args.trials < 1:
        print("asc-maxcut verify: need 3 <= --nmax <= 16 and --trials >= 1", file=sys.stderr)
        return EXIT_USAGE
    suites = verify.run_all(args.nmax, args.trials, args.seed)
    for suite in suites:
        print(suite.line())
        for example in suite.examples[:3]:
            print(f"    e.g. {example}")
    return 0 if all(s.passed for s in suites) else EXIT_VERIFY


def cmd_gen(args) -> int:
    try:
        cfg = NoiseModelConfig(args.model, p_m=args.p_m, p=args.p, mu=args.mu,
                               sigma_m=args.sigma_m, sigma=args.sigma)
        master = make_master(cfg, args.n, derive_seed(args.seed, 0, 0, 0, TAG_MASTER))
        g1 = make_instance(master, cfg, derive_seed(args.seed, 0, 0, 0, TAG_GRAPH))
        g2 = make_instance(master, cfg, derive_seed(args.seed, 0, 0, 1, TAG_GRAPH))
    except GraphError as e:
        print(f"asc-maxcut gen: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args.out.mkdir(parents=True, exist_ok=True)
        for name, g in (("master", master), ("g1", g1), ("g2", g2)):
            write_graph(g, args.out / f"{name}.txt")
    except OSError as e:
        print(f"asc-maxcut gen: cannot write to {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote master.txt, g1.txt, g2.txt to {args.out}")
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return {"run": cmd_run, "verify": cmd_verify, "gen": cmd_gen}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
