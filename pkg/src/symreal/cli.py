"""symreal command line: decide real emptiness of a symmetric system read from JSON.

Input document::

    {"vars": ["x1", "x2"], "polys": ["x1^2 + x2^2 - 1"], "name": "circle"}

Exit codes: 0 run completed, 2 input error, 3 condition (A) violation,
4 internal failure or an inconclusive empty verdict.
"""

import argparse
import json
import logging
import sys

from .algebra import PolySyntaxError, poly_parse
from .critsys import DEFAULT_BOUND
from .driver import ConditionAViolation, RunConfig, SymmetryError, real_emptiness
from .symmetry import Partition

EXIT_OK, EXIT_INPUT, EXIT_COND_A, EXIT_FAILURE = 0, 2, 3, 4


class InputError(ValueError):
    pass


def load_document(path):
    """Read and validate an input document; returns (name, vars, list of MultiPoly)."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("the input document must be a JSON object")
    vars_, polys = doc.get("vars"), doc.get("polys")
    if not isinstance(vars_, list) or not vars_ or not all(isinstance(v, str) for v in vars_):
        raise InputError("'vars' must be a non-empty list of names")
    if len(set(vars_)) != len(vars_):
        raise InputError("'vars' contains duplicates")
    if not isinstance(polys, list) or not polys or not all(isinstance(p, str) for p in polys):
        raise InputError("'polys' must be a non-empty list of strings")
    out = []
    for idx, text in enumerate(polys, start=1):
        try:
            out.append(poly_parse(text, vars_))
        except PolySyntaxError as exc:
            raise InputError(f"polynomial {idx} ({text!r}): {exc}") from exc
    return doc.get("name"), tuple(vars_), out


def build_parser():
    ap = argparse.ArgumentParser(prog="symreal", description=__doc__.splitlines()[0])
    ap.add_argument("--input", required=True, metavar="FILE", help="JSON input document")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                    help="bound on the random objective coefficients")
    ap.add_argument("--resamples", type=int, default=3, help="objective draws per partition")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--partition", action="append", metavar="SPEC",
                    help='restrict to a partition such as "2^2" or "1^2,2^1" (repeatable)')
    ap.add_argument("--check-a", action="store_true", help="probe the Jacobian rank condition")
    ap.add_argument("--witness", action="store_true", help="emit witness data for real points")
    ap.add_argument("--trace", action="store_true", help="per-partition detail")
    ap.add_argument("--workers", type=int, default=1)
    return ap


def _print_text(verdict, name, trace, out):
    head = f"{name}: " if name else ""
    if verdict.empty:
        print(f"{head}empty: true (no real solution)", file=out)
    else:
        where = f" at partition {verdict.decisive}" if verdict.decisive else ""
        print(f"{head}empty: false (real solution found{where})", file=out)
    if verdict.note:
        print(f"note: {verdict.note}", file=out)
    if verdict.unreliable:
        print("unreliable: inconclusive partitions " + " ".join(verdict.unreliable), file=out)
    if trace:
        for r in verdict.per_partition:
            t = sum(r.timings.values())
            print(f"  {r.partition:>12}  status={r.status:<10} deg_v={r.deg_v}  c_bound={r.c_bound}"
                  f"  decide={r.decide}  attempts={r.attempts}  {t:.3f}s", file=out)
    if verdict.witness:
        pt = ", ".join(f"{x:.12g}" for x in verdict.witness["point"])
        print(f"witness point (approximate): ({pt})", file=out)


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.trace:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    try:
        name, _, f = load_document(args.input)
        parts = [Partition.parse(p) for p in args.partition] if args.partition else None
        cfg = RunConfig(seed=args.seed, coefficient_bound=args.bound, max_resamples=args.resamples,
                        partition_filter=parts, check_condition_a=args.check_a,
                        emit_witness_data=args.witness, workers=args.workers)
        verdict = real_emptiness(f, cfg)
    except (InputError, SymmetryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConditionAViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COND_A
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.json:
        print(verdict.dumps(indent=2), file=out)
    else:
        _print_text(verdict, name, args.trace, out)
    if verdict.empty and verdict.unreliable:
        return EXIT_FAILURE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
