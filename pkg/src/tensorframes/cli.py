"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 usage or parse error,
3 input is not a frame, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio, linalg
from .errors import NotAFrame, ParseError, ShapeMismatch, SizeCapExceeded
from .frames import (
    Frame,
    FrameBounds,
    analysis,
    canonical_dual,
    format_bound,
    frame_bounds,
    random_frame,
    random_tight_frame,
    synthesis,
)
from .tensor import OperatorFrame, op_canonical_dual, op_frame_bounds, tensor_frame
from .verify import DEFAULT_TRIALS, CheckRecord, build_instances, run_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_A_FRAME = 3
EXIT_SIZE_CAP = 4

PRODUCT_TOL = 1e-9
RECONSTRUCT_TOL = 1e-9


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path, kinds=("frame", "operator_frame")):
    obj = fileio.load(path)
    kind = "frame" if isinstance(obj, Frame) else "operator_frame" if isinstance(obj, OperatorFrame) else "vector"
    if kind not in kinds:
        raise ParseError(f"{path}: expected {' or '.join(kinds)}, got {kind}", field="kind")
    return obj


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bounds_dict(b: FrameBounds) -> dict:
    return {
        "lower": b.lower,
        "upper": b.upper,
        "is_frame": b.is_frame,
        "is_tight": b.is_tight,
        "is_normalized_tight": b.is_normalized_tight,
    }


def cmd_analyze(args) -> int:
    obj = _load(args.path)
    if isinstance(obj, OperatorFrame):
        b = op_frame_bounds(obj)
        info = {"kind": "operator_frame", "dim_h": obj.dim_h, "dim_k": obj.dim_k, "count": obj.count}
        dims = f"operator frame in C^{obj.dim_h} (x) C^{obj.dim_k}"
    else:
        b = frame_bounds(obj)
        info = {"kind": "frame", "dim": obj.dim, "count": obj.count}
        dims = f"frame in C^{obj.dim}"
    if args.format == "machine":
        print(json.dumps({**info, **_bounds_dict(b)}, sort_keys=True))
    else:
        print(f"{dims}, {obj.count} elements")
        print(b.describe())
    return EXIT_OK


def cmd_dual(args) -> int:
    obj = _load(args.path)
    if isinstance(obj, OperatorFrame):
        dual = op_canonical_dual(obj)
        b = op_frame_bounds(dual)
    else:
        dual = canonical_dual(obj)
        b = frame_bounds(dual)
    _emit(args, fileio.dumps(dual))
    log = sys.stdout if args.output else sys.stderr
    if args.format == "machine":
        print(json.dumps({"dual_bounds": _bounds_dict(b)}, sort_keys=True), file=log)
    else:
        print(f"dual bounds {format_bound(b.lower)} {format_bound(b.upper)}", file=log)
    return EXIT_OK


def cmd_tensor(args) -> int:
    if len(args.paths) < 2:
        raise _Fail(EXIT_USAGE, "tensor needs at least two frame files")
    frames = [_load(p, ("frame",)) for p in args.paths]
    product = tensor_frame(*frames)
    parts = [frame_bounds(f) for f in frames]
    expected_lo = float(np.prod([p.lower for p in parts]))
    expected_hi = float(np.prod([p.upper for p in parts]))
    b = frame_bounds(product)
    residual = max(
        abs(b.lower - expected_lo) / max(expected_lo, linalg.NORM_FLOOR),
        abs(b.upper - expected_hi) / max(expected_hi, linalg.NORM_FLOOR),
    )
    ok = residual <= PRODUCT_TOL
    _emit(args, fileio.dumps(product))
    log = sys.stdout if args.output else sys.stderr
    if args.format == "machine":
        msg = {"product_bounds": [expected_lo, expected_hi], "optimal": _bounds_dict(b), "residual": residual, "pass": ok}
        print(json.dumps(msg, sort_keys=True), file=log)
    else:
        print(f"product bounds {format_bound(expected_lo)} {format_bound(expected_hi)}", file=log)
        print(f"optimal bounds {format_bound(b.lower)} {format_bound(b.upper)} (residual {residual:.3e}, {'match' if ok else 'MISMATCH'})", file=log)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_reconstruct(args) -> int:
    obj = _load(args.frame_path)
    f = obj.flatten() if isinstance(obj, OperatorFrame) else obj
    x = _load(args.vector_path, ("vector",))
    if x.shape[0] != f.dim:
        raise ShapeMismatch(f"vector of dim {x.shape[0]} against a frame of dim {f.dim}")
    dual = canonical_dual(f)
    scale = max(float(np.linalg.norm(x)), linalg.NORM_FLOOR)
    r1 = float(np.linalg.norm(synthesis(f, analysis(dual, x)) - x)) / scale
    r2 = float(np.linalg.norm(synthesis(dual, analysis(f, x)) - x)) / scale
    ok = max(r1, r2) <= RECONSTRUCT_TOL
    if args.format == "machine":
        print(json.dumps({"residual_dual_coefficients": r1, "residual_dual_vectors": r2, "pass": ok}, sort_keys=True))
    else:
        print(f"residual sum <x, x'_n> x_n : {r1:.3e}")
        print(f"residual sum <x, x_n> x'_n : {r2:.3e}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_random(args) -> int:
    if args.dim <= 0 or args.count <= 0:
        raise _Fail(EXIT_USAGE, "--dim and --count must be positive")
    if args.tight and args.count < args.dim:
        raise _Fail(EXIT_USAGE, "--tight needs --count >= --dim")
    gen = random_tight_frame if args.tight else random_frame
    _emit(args, fileio.dumps(gen(args.dim, args.count, args.seed)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 0:
        raise _Fail(EXIT_USAGE, "--trials must be nonnegative")
    frames, parse_errors = [], []
    for path in args.paths:
        try:
            frames.append((path, _load(path)))
        except ParseError as exc:
            parse_errors.append(CheckRecord("parse_input", -1, path, float("inf"), 0.0, False, f"ParseError: {exc}"))
    if not frames and args.trials == 0 and not parse_errors:
        raise _Fail(EXIT_USAGE, "nothing to verify: --trials is 0 and no frame files were given")
    instances = build_instances(args.seed, args.trials, frames)
    report = run_checks(instances, args.seed)
    report.records[:0] = parse_errors
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json())
    sys.stdout.write(report.to_json() if args.format == "machine" else report.to_text())
    if parse_errors:
        return EXIT_USAGE
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=1, help="random seed (default 1)")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = argparse.ArgumentParser(prog="tensorframes", description="Finite frames, operator frames and their tensor products, with numerical verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="optimal frame bounds and classification")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", parents=[common], help="canonical dual frame")
    p.add_argument("path")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("tensor", parents=[common], help="tensor product of two or more frames")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("reconstruct", parents=[common], help="reconstruct a vector through the canonical dual")
    p.add_argument("frame_path")
    p.add_argument("vector_path")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("random", parents=[common], help="random (tight) frame")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--tight", action="store_true", help="normalized tight frame")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("paths", nargs="*", help="frame or operator-frame files to include as instances")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, ShapeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAFrame as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_FRAME
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP


if __name__ == "__main__":
    sys.exit(main())
