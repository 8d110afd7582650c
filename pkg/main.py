import argparse
import json
import sys

import config
import harness
import inverse_engines as ie
import matrix as mx
import utils
from exceptions import GinvError, InputError
from logger import Logger
from star_context import MatrixStarContext

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

_KINDS = {
    "mp": ie.InverseTag.MP,
    "group": ie.InverseTag.GROUP,
    "core": ie.InverseTag.CORE,
    "dualcore": ie.InverseTag.DUAL_CORE,
    "along": ie.InverseTag.ALONG,
    "bc": ie.InverseTag.BC,
    "13": ie.InverseTag.ONE_THREE,
    "14": ie.InverseTag.ONE_FOUR,
}


class ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors exit 2 like every other input error, but through our handler
    def error(self, message):
        raise ArgumentError(message)


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = _Parser(prog="ginv", description="Exact (b,c)-inverses and verification of their theory")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a generalized inverse of a matrix")
    compute.add_argument("--kind", required=True, choices=sorted(_KINDS))
    compute.add_argument("--matrix", required=True, help="Matrix JSON file for a")
    compute.add_argument("--d", help="Matrix JSON file for d (kind along)")
    compute.add_argument("--b", help="Matrix JSON file for b (kind bc)")
    compute.add_argument("--c", help="Matrix JSON file for c (kind bc)")
    compute.add_argument("--involution", default="conjugate",
                         help="transpose or conjugate (default: conjugate)")

    verify = sub.add_parser("verify", help="verify registry statements on a structure")
    verify.add_argument("--theorem", required=True, help="a tag such as T3.9, or 'all'")
    verify.add_argument("--structure", required=True,
                        help="m2z2, m2z3, m2z5, mat:<k>:<p>, zmod:<n>, trivial, table:<file> "
                             "or matrix:[<n>:]gaussian|zmod<p>[:transpose|conjugate]")
    verify.add_argument("--k", default=config.DEFAULT_K_RANGE, help="k values, e.g. 1..3")
    verify.add_argument("--strategy", choices=[harness.EXHAUSTIVE, harness.SEEDED],
                        help="default: exhaustive on finite structures, seeded otherwise")
    verify.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    verify.add_argument("--count", type=int, help=f"seeded instance count (default: {config.DEFAULT_COUNT})")
    verify.add_argument("--workers", type=int, default=config.WORKERS)
    verify.add_argument("--report", help="write the report JSON here")
    verify.add_argument("--timings", action="store_true", help="include elapsed times in the report")
    verify.add_argument("--exploratory", action="store_true",
                        help="also run the ring-only T5.3/P5.7 clause pairs on *-monoids, as observations")
    verify.add_argument("--summary-csv", help="write the summary table as CSV")

    counterexample = sub.add_parser("counterexample", help="reproduce remark3.8 or remark4.3")
    counterexample.add_argument("name")

    validate = sub.add_parser("validate", help="check the axioms of a structure")
    validate.add_argument("structure", help="table:<file> or any structure specification")

    return parser.parse_args(argv)


class InverseToolkit:
    def __init__(self, logger=None):
        self.logger = logger

    def compute(self, args):
        involution = mx.InvolutionKind.parse(args.involution)
        a = mx.load_matrix(args.matrix)
        others = {}
        for role in ("d", "b", "c"):
            path = getattr(args, role)
            if path:
                m = mx.load_matrix(path)
                if m.field != a.field or m.n != a.n:
                    raise InputError(f"--{role} must match a in field and dimension")
                others[role] = m
        tag = _KINDS[args.kind]
        if tag is ie.InverseTag.ALONG:
            if "d" not in others:
                raise InputError("kind along needs --d")
            kind = ie.InverseKind.along(others["d"])
        elif tag is ie.InverseTag.BC:
            if "b" not in others or "c" not in others:
                raise InputError("kind bc needs --b and --c")
            kind = ie.InverseKind.bc(others["b"], others["c"])
        else:
            kind = ie.InverseKind(tag)
        ctx = MatrixStarContext(a.n, a.field, involution)
        result = ie.named_inverse(ctx, a, kind)
        if self.logger:
            self.logger.inverse(args.kind, result is not None, a.n)
        if result is None:
            print(f"no {args.kind} inverse exists", file=sys.stderr)
            return EXIT_FAILED
        print(json.dumps(result.to_json(), sort_keys=True))
        return EXIT_OK

    def verify(self, args):
        ctx = utils.parse_structure_spec(args.structure, logger=self.logger)
        k_range = utils.parse_k_range(args.k)
        kind = args.strategy or (harness.EXHAUSTIVE if ctx.enumerable and args.count is None else harness.SEEDED)
        strategy = harness.Strategy(kind, args.seed, args.count or config.DEFAULT_COUNT)
        if args.theorem.strip().lower() == "all":
            tags = None
        else:
            tags = [t for t in args.theorem.split(",") if t.strip()]
        if self.logger:
            self.logger.info(f"Verifying {args.theorem} on {ctx.describe()} ({strategy.describe()}, k={k_range})")
        reports = harness.verify_many(ctx, tags, strategy, k_range, args.workers, self.logger, args.exploratory)
        if not reports:
            raise InputError(f"no registry entry applies to {ctx.describe()}")
        if args.report:
            utils.write_report_json([r.to_dict(timings=args.timings) for r in reports], args.report)
        summary = utils.summary_frame(reports)
        print(summary.to_string(index=False))
        if args.summary_csv:
            summary.to_csv(args.summary_csv, index=False)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED

    def counterexample(self, args):
        report = harness.reproduce_counterexample(args.name, logger=self.logger)
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))
        return EXIT_OK

    def validate(self, args):
        structure = utils.parse_structure_spec(args.structure, logger=self.logger)
        size = len(structure.elements()) if structure.enumerable else "unbounded"
        print(f"{structure.describe()}: valid *-{structure.tier}, {size} elements")
        return EXIT_OK

    def run(self, args):
        handler = getattr(self, args.command)
        try:
            return handler(args)
        except GinvError as e:
            if self.logger:
                self.logger.log_error_with_context(e, {"command": args.command}, exc_info=False)
            print(f"error: {e}", file=sys.stderr)
            return e.exit_code


def main(argv=None):
    try:
        args = parse_arguments(argv)
    except ArgumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    logger = Logger(log_level=config.LOG_LEVEL)
    return InverseToolkit(logger=logger).run(args)


if __name__ == "__main__":
    sys.exit(main())
