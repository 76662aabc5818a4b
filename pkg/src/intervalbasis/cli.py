"""Command line interface.

    intervalbasis decompose [--field F] [--threads N] module.json
    intervalbasis oracle module.json
    intervalbasis homology --degree k [--field F] filtration.json
    intervalbasis harmonic --degree k [--generators] filtration.json

Results go to stdout (or ``--output``).  Failures exit with status 1 and a
``{"error": {"kind": ..., "detail": ...}}`` object on stderr; misuse exits 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .decompose import pmd
from .errors import IntervalBasisError, ParseError
from .field import RealField, parse_field
from .harmonic import build_harmonic_module
from .homology import build_persistent_homology
from .oracle import barcode_oracle


def _field(args, default: str | None):
    text = args.field or default
    if text is None:
        return None
    return parse_field(text, args.tol)


def _write(args, payload: dict) -> None:
    text = jsonio.dumps(payload)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_decompose(args) -> None:
    module = jsonio.module_from_json(jsonio.load(args.input), _field(args, None))
    if args.tol is not None and isinstance(module.field, RealField) and args.field is None:
        module = module.with_field(RealField(args.tol))
    use_real = isinstance(module.field, RealField) and not args.no_real_path
    basis, pairs = pmd(module, use_real_path=use_real, threads=args.threads)
    _write(args, jsonio.decomposition_to_json(basis, pairs, args.essential_as_infinite))


def cmd_oracle(args) -> None:
    module = jsonio.module_from_json(jsonio.load(args.input), _field(args, None))
    pairs = barcode_oracle(module)
    _write(args, {"pairs": jsonio.pairs_to_json(pairs, module.n, args.essential_as_infinite)})


def cmd_homology(args) -> None:
    field = _field(args, "rational")
    tower, _ = jsonio.tower_from_json(jsonio.load(args.input), field)
    module = build_persistent_homology(tower, args.degree, threads=args.threads)
    _write(args, jsonio.module_to_json(module))


def cmd_harmonic(args) -> None:
    tol = 1e-9 if args.tol is None else args.tol
    real = RealField(tol)
    tower, filt = jsonio.tower_from_json(jsonio.load(args.input), real)
    module, steps = build_harmonic_module(tower, args.degree, threads=args.threads, tol=tol, return_steps=True)
    payload = jsonio.module_to_json(module)
    if args.generators:
        basis, pairs = pmd(module, use_real_path=True, threads=args.threads)
        chains = [jsonio.vector_to_json(steps[e.birth - 1].V @ e.vector, real) for e in basis]
        payload.update(jsonio.decomposition_to_json(basis, pairs, args.essential_as_infinite, chains))
        if filt is not None:
            payload["chain_bases"] = [
                [list(s) for s in step[args.degree]] if args.degree < len(step) else []
                for step in tower.bases
            ]
    _write(args, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intervalbasis",
                                     description="Interval-basis decomposition of persistence modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=True, degree=False):
        p.add_argument("input", help="input JSON file, or - for stdin")
        if field:
            p.add_argument("--field", help="zp:<p>, rational or real")
        p.add_argument("--tol", type=float, default=None, help="zero tolerance for the real field (default 1e-9)")
        p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
        p.add_argument("--essential-as-infinite", action="store_true",
                       help="report deaths at n+1 as \"inf\"")
        p.add_argument("--output", "-o", help="output file (default stdout)")
        if degree:
            p.add_argument("--degree", "-k", type=int, required=True, help="homology degree")

    p = sub.add_parser("decompose", help="interval basis and persistence pairs of a module")
    common(p)
    p.add_argument("--real-path", dest="no_real_path", action="store_false",
                   help="use the SVD-based decomposition for real modules (default)")
    p.add_argument("--no-real-path", dest="no_real_path", action="store_true",
                   help="use the generic decomposition even for real modules")
    p.set_defaults(func=cmd_decompose, no_real_path=False)

    p = sub.add_parser("oracle", help="persistence pairs from the rank function")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("homology", help="persistent homology module of a filtration or tower")
    common(p, degree=True)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("harmonic", help="harmonic persistence module (real field)")
    common(p, degree=True)
    p.add_argument("--generators", action="store_true",
                   help="also decompose and export harmonic representatives per pair")
    p.set_defaults(func=cmd_harmonic)
    return parser


def _fail(kind: str, detail: str) -> int:
    sys.stderr.write(json.dumps({"error": {"kind": kind, "detail": detail}}) + "\n")
    return 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if getattr(args, "degree", 0) < 0:
        parser.error("--degree must be nonnegative")
    if args.command == "harmonic" and args.field not in (None, "real"):
        parser.error("harmonic works over the real field only")
    if args.tol is not None and not args.tol > 0:
        parser.error("--tol must be positive")
    try:
        args.func(args)
    except IntervalBasisError as exc:
        return _fail(exc.kind, exc.detail)
    except (ValueError, TypeError) as exc:
        return _fail(ParseError.__name__, str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
