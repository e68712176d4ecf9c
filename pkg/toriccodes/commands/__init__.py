"""Subcommands of the command line; each module exposes add_parser(subparsers, parents) and run(args)."""
import argparse
import logging
from typing import List, Optional, Tuple

from pydantic import ValidationError

from ..config import get_settings
from ..errors import PreconditionError
from ..geometry import ToricSet, characteristic_vectors, load_clutter, projective_torus, toric_set_from_exponents
from ..gf import FiniteField, make_field
from ..interfaces import RunConfig

logger = logging.getLogger(__name__)


def common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--out", help="write the report to this file instead of stdout")
    parser.add_argument("--cap-points", type=int, help="cap on enumerated points and matrix cells")
    parser.add_argument("--cap-codewords", type=int, help="cap on enumerated codewords")
    parser.add_argument("--seed", type=int, help="seed of sampling sweeps")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    return parser


def add_input_arguments(parser: argparse.ArgumentParser, degrees: bool = True) -> None:
    parser.add_argument("--p", type=int, required=True, help="field characteristic")
    parser.add_argument("--m", type=int, default=1, help="extension degree")
    parser.add_argument("--s", type=int, help="projective torus in P^(s-1)")
    parser.add_argument("--clutter", help="clutter JSON file {n, edges}")
    if degrees:
        parser.add_argument("--d", type=int, help="single degree")
        parser.add_argument("--d-range", type=int, nargs=2, metavar=("LO", "HI"), help="inclusive degree range")


def load_config(args: argparse.Namespace) -> RunConfig:
    try:
        return RunConfig(
            p=args.p, m=args.m, s=args.s, clutter=args.clutter,
            d=getattr(args, "d", None), d_range=getattr(args, "d_range", None),
            cap_points=args.cap_points, cap_codewords=args.cap_codewords,
            format=args.format, seed=args.seed,
        )
    except ValidationError as e:
        raise PreconditionError("invalid run configuration", [err["msg"] for err in e.errors()])


def field_of(config: RunConfig) -> FiniteField:
    return make_field(config.p, config.m)


def build_toric_set(config: RunConfig) -> Tuple[ToricSet, Optional[Tuple[int, int]]]:
    """The toric set of the run and, for a complete bipartite clutter, its shape (k, l)."""
    field = field_of(config)
    if config.s is not None:
        return projective_torus(field, config.s, config.cap_points), None
    clutter = load_clutter(config.clutter)
    logger.info("loaded %r", clutter)
    x = toric_set_from_exponents(field, characteristic_vectors(clutter), config.cap_points)
    return x, clutter.bipartition()


def degree_list(config: RunConfig, x: ToricSet) -> List[int]:
    """--d, --d-range, or 1 .. (s-1)(q-2)+1 so the delta = 1 plateau shows."""
    if config.d is not None:
        return [config.d]
    if config.d_range is not None:
        return list(range(config.d_range[0], config.d_range[1] + 1))
    return list(range(1, (x.s - 1) * max(x.field.q - 2, 0) + 2))


def seed_of(config_seed: Optional[int]) -> int:
    return get_settings().seed if config_seed is None else config_seed
