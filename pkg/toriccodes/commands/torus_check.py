import argparse

from ..geometry import is_complete_intersection
from ..polyeval import torus_ideal_generators
from ..utils import Envelope, ok
from . import add_input_arguments, build_toric_set, load_config


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("torus-check", parents=parents,
                                   help="is X the whole projective torus (complete intersection)?")
    add_input_arguments(parser, degrees=False)
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, shape = build_toric_set(config)
    ci = is_complete_intersection(x)
    data = {
        "q": x.field.q, "s": x.s, "size": len(x), "torus_size": (x.field.q - 1) ** (x.s - 1),
        "ci": ci, "bipartite": list(shape) if shape else None,
        "generators": [g.to_text() for g in torus_ideal_generators(x.field, x.s)] if ci else [],
    }
    return ok("complete intersection" if ci else "not a complete intersection", data)
