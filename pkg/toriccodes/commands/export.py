"""genmat and kernel: the evaluation matrix of C_X(d) and a basis of I(X)_d."""
import argparse

from ..codes import evaluation_matrix, vanishing_forms_basis
from ..errors import PreconditionError
from ..interfaces import RunConfig
from ..utils import Envelope, ok
from . import add_input_arguments, build_toric_set, load_config


def add_parser(subparsers, parents) -> None:
    genmat = subparsers.add_parser("genmat", parents=parents, help="evaluation (generator) matrix export")
    add_input_arguments(genmat)
    genmat.set_defaults(run=run_genmat)
    kernel = subparsers.add_parser("kernel", parents=parents, help="basis of the forms vanishing on X")
    add_input_arguments(kernel)
    kernel.set_defaults(run=run_kernel)


def _degree(config: RunConfig) -> int:
    if config.d is None:
        raise PreconditionError("this export needs a single degree --d")
    return config.d


def run_genmat(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, _ = build_toric_set(config)
    m = evaluation_matrix(x, _degree(config), config.cap_points)
    data = m.to_json()
    data["columns"] = [f"c{j + 1}" for j in range(m.shape[1])]
    data["rows"] = [{f"c{j + 1}": int(v) for j, v in enumerate(row)} for row in m.entries]
    if config.format == "text":
        data["text"] = m.to_text()
    return ok(f"Evaluation matrix {m.shape[0]}x{m.shape[1]}", data)


def run_kernel(args: argparse.Namespace) -> Envelope:
    config = load_config(args)
    x, _ = build_toric_set(config)
    d = _degree(config)
    basis = vanishing_forms_basis(x, d, config.cap_points)
    data = {
        "q": x.field.q, "s": x.s, "d": d, "size": len(basis),
        "polynomials": [g.to_json() for g in basis],
        "columns": ["index", "polynomial"],
        "rows": [{"index": i, "polynomial": g.to_text()} for i, g in enumerate(basis)],
    }
    if config.format == "text":
        header = f"# kernel q={x.field.q} s={x.s} d={d} size={len(basis)}\n"
        data["text"] = header + "".join(g.to_text() + "\n" for g in basis)
    return ok(f"{len(basis)} vanishing forms of degree {d}", data)
