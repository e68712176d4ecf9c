import argparse

from ..codes import code_params
from ..utils import Envelope, ok
from . import add_input_arguments, build_toric_set, degree_list, load_config

COLUMNS = ["q", "s", "d", "n", "k", "delta", "source", "mds", "singleton_defect", "rate", "relative_distance",
           "k_formula", "delta_formula", "delta_oracle"]


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("params", parents=parents, help="length, dimension and minimum distance per degree")
    add_input_arguments(parser)
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, shape = build_toric_set(config)
    rows = [code_params(x, d, config.cap_points, config.cap_codewords, bipartite_shape=shape).report()
            for d in degree_list(config, x)]
    return ok(f"Parameters of {len(rows)} codes", {"columns": COLUMNS, "rows": rows})
