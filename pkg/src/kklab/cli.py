"""``kklab`` command line: verify suites, compute power-ring bases, subdivide."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .power import pointed_power, power
from .simplicial import SimplicialError, load_simplicial, subdivide_times
from .suites import SUITES, Options, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _nonneg(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _positive(value: str) -> int:
    n = _nonneg(value)
    if n == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kklab", description="Exact checks for simplicial rings, "
                                     "infinite matrices and the Toeplitz algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=["all"] + list(SUITES))
    v.add_argument("--degree", type=_nonneg, default=6)
    v.add_argument("--window", type=_positive, default=64)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--subdivisions", type=_nonneg, default=3)
    v.add_argument("--json", dest="json_path")
    v.add_argument("--timings", action="store_true", help="include wall times in the report")
    v.add_argument("--quiet", action="store_true", help="only print the summary line")

    p = sub.add_parser("power", help="graded HNF basis of ℤ^K up to a degree")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--basis", required=True, help="output JSON path")
    p.add_argument("--basepoint", nargs="?", const="", default=None,
                   help="compute the pointed ring; without a value, use the file's basepoint")

    s = sub.add_parser("subdivide", help="iterated barycentric subdivision")
    s.add_argument("--input", required=True)
    s.add_argument("--times", type=_nonneg, required=True)
    s.add_argument("--out", required=True)
    return parser


def _load(path: str):
    try:
        return load_simplicial(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except SimplicialError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write_json(path: str, data) -> None:
    try:
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True, ensure_ascii=False)
            fh.write("\n")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_verify(args) -> int:
    opt = Options(degree=args.degree, window=args.window, seed=args.seed, subdivisions=args.subdivisions)
    report = run_suite(args.suite, opt)
    if args.json_path:
        try:
            with open(args.json_path, "w") as fh:
                fh.write(report.dumps(args.timings))
        except OSError as exc:
            raise InputError(f"cannot write {args.json_path}: {exc.strerror}") from None
    text = report.text(args.timings)
    sys.stdout.write(text.splitlines()[-1] + "\n" if args.quiet else text)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_power(args) -> int:
    K = _load(args.input)
    try:
        if args.basepoint is None:
            R = power(K, args.degree)
        else:
            R = pointed_power(K, args.basepoint or None, args.degree)
    except SimplicialError as exc:
        raise InputError(str(exc)) from None
    data = {"degree": args.degree, "basepoint": R.basepoint, "ranks": list(R.ranks()),
            "basis": R.to_json()}
    _write_json(args.basis, data)
    print(f"rank {R.rank()} (per degree {list(R.ranks())})")
    return EXIT_OK


def cmd_subdivide(args) -> int:
    K = _load(args.input)
    K2, h = subdivide_times(K, args.times)
    _write_json(args.out, K2.to_json())
    print(f"counts {list(K2.counts())}; last-vertex map {'valid' if h.is_valid() else 'INVALID'}")
    return EXIT_OK if h.is_valid() else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handler = {"verify": cmd_verify, "power": cmd_power, "subdivide": cmd_subdivide}[args.command]
    try:
        return handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
