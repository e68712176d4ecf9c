import argparse

from pydantic import ValidationError

from ..errors import EXIT_DISCREPANCY, PreconditionError
from ..gf import field_for_order
from ..interfaces import VerifyConfig
from ..utils import Envelope, bad, ok
from ..verify import VerificationRunner
from ..verify.runner import DEFAULT_GRID_Q, DEFAULT_GRID_S
from . import seed_of


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="run every cross-check over a (q, s) grid")
    parser.add_argument("--grid-q", type=int, nargs="+", default=list(DEFAULT_GRID_Q))
    parser.add_argument("--grid-s", type=int, nargs="+", default=list(DEFAULT_GRID_S))
    parser.add_argument("--samples", type=int, help="random polynomials per bound-sweep cell")
    parser.add_argument("--workers", type=int, help="threads for grid cells")
    parser.add_argument("--inject-fault", action="store_true",
                        help="shift ell by one in the minimum-distance formula under test")
    parser.set_defaults(run=run)


def load_verify_config(args: argparse.Namespace) -> VerifyConfig:
    try:
        config = VerifyConfig(
            grid_q=args.grid_q, grid_s=args.grid_s, samples=args.samples, workers=args.workers,
            cap_points=args.cap_points, cap_codewords=args.cap_codewords, seed=args.seed,
            inject_fault=args.inject_fault,
        )
    except ValidationError as e:
        raise PreconditionError("invalid verify configuration", [err["msg"] for err in e.errors()])
    for q in config.grid_q:
        field_for_order(q)
    return config


def run(args: argparse.Namespace) -> Envelope:
    config = load_verify_config(args)
    runner = VerificationRunner(
        grid_q=config.grid_q, grid_s=config.grid_s, seed=seed_of(config.seed), samples=config.samples,
        cap_points=config.cap_points, cap_codewords=config.cap_codewords,
        workers=config.workers, inject_fault=config.inject_fault,
    )
    report = runner.run()
    data = report.model_dump()
    data["columns"] = ["check", "theorem", "params", "status", "reason"]
    data["rows"] = [
        {"check": c["check"], "theorem": c["theorem"], "params": c["params"], "status": c["status"],
         "reason": c["reason"]}
        for c in data["checks"]
    ]
    if report.failed:
        return bad(EXIT_DISCREPANCY, "CHECKS_FAILED", f"{report.failed} checks failed: {'; '.join(report.failures)}", data)
    return ok(f"{report.passed} checks passed, {report.skipped} skipped", data)
