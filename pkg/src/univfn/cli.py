"""Command-line front end.

Exit codes: 0 ok, 1 verification found mismatches, 2 bad input,
3 a freshly synthesized construction failed its own verification.
"""
import argparse
import json
import sys

from . import combinators as cb
from .evaluators import DimN
from .pairing import pair, unpair
from .seqcodec import rho
from .serialize import (
    allow_big_decimals,
    bundle_from_json,
    bundle_to_json,
    dumps,
    parse_nat,
    to_decimal,
    table_from_json,
)
from .sigma import NonCoveringError, SigmaSpec, classify
from .tables import FinTable
from .verifier import carry_free, verify

OK, MISMATCH, USAGE, INTERNAL = 0, 1, 2, 3

KINDS = ("two", "single", "dim3", "dimn", "sigma", "s42", "s32", "product", "additive")


class UsageError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_table(path) -> FinTable:
    return table_from_json(_load_json(path))


def build(kind: str, G: FinTable, sigma: SigmaSpec | None = None, G2: FinTable | None = None):
    """Run the synthesis named ``kind``; returns ``(construction, target_table)``."""
    if kind == "two":
        return cb.two_construction(G), G
    if kind == "single":
        return cb.single_construction(G), G
    if kind == "dim3":
        g0, g1, h = cb.synth_dim3(G)
        maps = {"g0": g0, "g1": g1, "g2": h}
        return cb.Construction(DimN(3), maps, [(f"g{i}", (i,)) for i in range(3)]), G
    if kind == "dimn":
        return cb.synth_dim_n(G, single=True), G
    if kind == "sigma":
        if sigma is None:
            raise UsageError("synth sigma needs --sigma")
        return cb.synth_sigma(sigma, G), G
    if kind == "s42":
        return cb.synth_42_from_32(cb.synth_32, G), G
    if kind == "s32":
        return cb.synth_32_from_42(cb.synth_42, G), G
    if kind == "product":
        if G2 is None:
            raise UsageError("synth product needs --table2")
        return cb.product_universal(G, G2), cb.paired_table(G, G2)
    if kind == "additive":
        return cb.synth_additive(G), G
    raise UsageError(f"unknown kind {kind!r}")


def cmd_pair(args):
    print(to_decimal(pair(parse_nat(args.a), parse_nat(args.b))))
    return OK


def cmd_unpair(args):
    a, b = unpair(parse_nat(args.c))
    print(to_decimal(a), to_decimal(b))
    return OK


def cmd_rho(args):
    print(to_decimal(rho(parse_nat(args.alpha), parse_nat(args.i))))
    return OK


def cmd_synth(args):
    G = _load_table(args.table)
    G2 = _load_table(args.table2) if args.table2 else None
    sigma = SigmaSpec.from_json(_load_json(args.sigma)) if args.sigma else None
    try:
        c, target = build(args.kind, G, sigma, G2)
    except NonCoveringError as exc:
        print(dumps(exc.classification.to_json()))
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    report = verify(c, target)
    out = report.to_json()
    if args.kind == "additive":
        out["carry_free"] = carry_free(c.maps["u"], c.maps["v"])
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(bundle_to_json(c)) + "\n")
    print(dumps(out))
    if not report.ok or out.get("carry_free") is False:
        print("error: synthesized witnesses failed verification", file=sys.stderr)
        return INTERNAL
    return OK


def cmd_verify(args):
    G = _load_table(args.table)
    if args.table2:
        G = cb.paired_table(G, _load_table(args.table2))
    c = bundle_from_json(_load_json(args.witness))
    report = verify(c, G)
    print(dumps(report.to_json()))
    return OK if report.ok else MISMATCH


def cmd_classify(args):
    spec = SigmaSpec.from_json(_load_json(args.sigma))
    print(dumps(classify(spec).to_json()))
    return OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="univfn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pair", help="pair two naturals")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("unpair", help="split a natural into its pair")
    s.add_argument("c")
    s.set_defaults(func=cmd_unpair)

    s = sub.add_parser("rho", help="element i of the sequence numbered alpha (0 past the end)")
    s.add_argument("alpha")
    s.add_argument("i")
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("synth", help="synthesize and verify witnesses for a table")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("--table", required=True)
    s.add_argument("--table2", help="second table (product only)")
    s.add_argument("--sigma", help="pattern file (sigma only)")
    s.add_argument("--out", help="write the witness bundle here")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("verify", help="check a witness bundle against a table")
    s.add_argument("--table", required=True)
    s.add_argument("--table2", help="second table of a product bundle")
    s.add_argument("--witness", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", help="classify a pattern of inner witnesses")
    s.add_argument("--sigma", required=True)
    s.set_defaults(func=cmd_classify)
    return p


def main(argv=None) -> int:
    allow_big_decimals()
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # ShapeError and NonCoveringError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
