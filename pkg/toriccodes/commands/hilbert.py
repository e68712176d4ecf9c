import argparse

from ..geometry import is_complete_intersection
from ..interfaces import HilbertProfile
from ..invariants import check_regularity_bound, ci_hilbert_series, hilbert_numerator
from ..utils import Envelope, ok
from . import add_input_arguments, build_toric_set, load_config


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("hilbert", parents=parents, help="Hilbert function profile and regularity")
    add_input_arguments(parser, degrees=False)
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, _ = build_toric_set(config)
    report = check_regularity_bound(x, config.cap_points)
    profile = HilbertProfile(q=report.q, s=report.s, values=report.values,
                             regularity=report.regularity, degree=report.size)
    data = report.model_dump()
    data["numerator"] = hilbert_numerator(profile)
    if is_complete_intersection(x):
        data["ci_numerator"] = ci_hilbert_series(x.field.q, x.s).numerator
    return ok(f"Regularity {report.regularity} (bound {report.bound})", data)
