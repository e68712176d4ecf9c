import argparse

from ..codes import code_params
from ..interfaces import TableRow
from ..utils import Envelope, ok
from . import add_input_arguments, build_toric_set, degree_list, load_config

COLUMNS = list(TableRow.model_fields)


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("table", parents=parents, help="parameter table over a degree range")
    add_input_arguments(parser)
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, shape = build_toric_set(config)
    rows = []
    for d in degree_list(config, x):
        params = code_params(x, d, config.cap_points, config.cap_codewords, bipartite_shape=shape)
        rows.append(TableRow(
            q=params.q, s=params.s, d=d, n=params.n, k=params.k,
            delta_formula=params.delta_formula, delta_oracle=params.delta_oracle,
            hilbert=params.k, singleton_defect=params.singleton_defect, mds=params.mds,
        ).model_dump())
    return ok(f"Table of {len(rows)} degrees", {"columns": COLUMNS, "rows": rows})
