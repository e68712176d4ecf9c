import argparse

from ..bounds import bound_sweep, verify_bound_on, zero_bounds
from ..errors import PreconditionError
from ..polyeval import SparsePolynomial
from ..utils import Envelope, ok
from . import add_input_arguments, field_of, load_config, seed_of


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("bounds", parents=parents, help="zero-count bounds, checks and sweeps")
    add_input_arguments(parser)
    parser.add_argument("--poly", help="polynomial to check, e.g. '1*t1 + 2*t2^2'")
    parser.add_argument("--samples", type=int, help="run a seeded sweep over this many random polynomials")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    if config.s is None:
        raise PreconditionError("bounds work on K^s and the torus, give --s")
    field = field_of(config)
    data = {}
    if config.d is not None:
        data["bounds"] = zero_bounds(config.d, field.q, config.s).model_dump()
    if args.poly:
        g = SparsePolynomial.parse(field, args.poly, config.s)
        data["check"] = verify_bound_on(g, field, config.cap_points).model_dump()
    if args.samples is not None:
        if args.samples < 0:
            raise PreconditionError(f"--samples must be nonnegative, got {args.samples}")
        data["sweep"] = bound_sweep(field.q, config.s, args.samples, seed_of(config.seed),
                                    config.cap_points).model_dump()
    if not data:
        raise PreconditionError("give --d, --poly or --samples")
    data["rows"] = [{"section": name, **values} for name, values in sorted(data.items())]
    return ok("Bounds hold", data)
