"""Command-line front end.

Subcommands: cells, distinguished, phi, order, hasse, count, collect, verify.
Masks are written with the leftmost character as position 1, '1' meaning the
letter is taken.  Windows are comma-separated signed integers, words are
comma-separated generator indices, and "e" names the identity.  All output
is byte-deterministic for fixed inputs.  The environment variable
DEODHAR_THREADS is accepted as a parallelism cap; the current implementation
runs sequentially, which trivially honors any cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cells as cells_mod
from . import chevalley, matrixgrp, search
from .weyl import context, parse_word


def _add_context_flags(parser, default_family="B"):
    parser.add_argument("--family", choices=["A", "B"], default=default_family)
    parser.add_argument("--rank", type=int, default=None)


def _resolve_context(args, letters=()):
    rank = args.rank
    if rank is None:
        rank = max(letters) if letters else 1
        if args.family == "B":
            rank = max(rank, 2)
    return context(args.family, rank)


def _parse_letters(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    letters = []
    for pos, part in enumerate(text.split(","), start=1):
        try:
            letters.append(int(part))
        except ValueError:
            raise ValueError(
                f"word token {part!r} at position {pos} is not an integer"
            ) from None
    return tuple(letters)


def _parse_mask(text: str) -> str:
    for pos, ch in enumerate(text, start=1):
        if ch not in "01":
            raise ValueError(
                f"mask character {ch!r} at position {pos} (expected 0 or 1)"
            )
    return text


def _threads() -> int:
    raw = os.environ.get("DEODHAR_THREADS", "")
    if not raw:
        return os.cpu_count() or 1
    value = int(raw)
    if value < 1:
        raise SystemExit("DEODHAR_THREADS must be a positive integer")
    return value


def _cmd_cells(args) -> int:
    letters = _parse_letters(args.word)
    ctx = _resolve_context(args, letters)
    word = parse_word(ctx, args.word)
    if args.end is not None:
        descriptors = cells_mod.cells_with_endpoint(word, ctx.parse_element(args.end))
    else:
        descriptors = [
            cells_mod.cell(sub)
            for sub in cells_mod.enumerate_subexpressions(word, distinguished_only=True)
        ]
    if args.json:
        print(json.dumps([cells_mod.cell_to_obj(d) for d in descriptors], sort_keys=True))
    else:
        for d in descriptors:
            print(
                f"mask={d.mask_string} end={d.endpoint.serialize()} "
                f"dim={d.dimension} affine={d.affine_rank} torus={d.torus_rank}"
            )
        if args.end is not None:
            poly = cells_mod.point_count_polynomial(word, ctx.parse_element(args.end))
            print(f"point count: {poly}")
    return 0


def _cmd_distinguished(args) -> int:
    letters = _parse_letters(args.word)
    ctx = _resolve_context(args, letters)
    word = parse_word(ctx, args.word)
    sub = cells_mod.subexpression(word, _parse_mask(args.mask))
    print("true" if cells_mod.is_distinguished(sub) else "false")
    return 0


def _cmd_phi(args) -> int:
    letters = _parse_letters(args.word)
    ctx = _resolve_context(args, letters)
    word = parse_word(ctx, args.word)
    sub = cells_mod.subexpression(word, _parse_mask(args.mask))
    entries = cells_mod.root_sequence(sub)
    if args.json:
        print(
            json.dumps(
                [
                    {"i": e.index, "root": list(e.root.coeffs), "free": e.free}
                    for e in entries
                ],
                sort_keys=True,
            )
        )
    else:
        for e in entries:
            print(f"i={e.index} root={e.root.serialize()} free={str(e.free).lower()}")
    return 0


def _cmd_order(args) -> int:
    letters = _parse_letters(args.word)
    ctx = _resolve_context(args, letters)
    word = parse_word(ctx, args.word)
    first = cells_mod.subexpression(word, _parse_mask(args.mask))
    second = cells_mod.subexpression(word, _parse_mask(args.mask2))
    print("true" if cells_mod.preceq(first, second) else "false")
    return 0


def _cmd_hasse(args) -> int:
    letters = _parse_letters(args.word)
    ctx = _resolve_context(args, letters)
    word = parse_word(ctx, args.word)
    text = cells_mod.hasse_dot(word)
    if args.dot == "-":
        sys.stdout.write(text)
    else:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


def _cmd_count(args) -> int:
    if args.family != "A" or (args.rank not in (None, 2)):
        raise SystemExit("matrix counting is implemented for --family A --rank 2")
    _threads()
    sys.stdout.write(matrixgrp.count_cells_csv(args.q))
    return 0


def _cmd_collect(args) -> int:
    if args.input == "-":
        payload = json.load(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as handle:
            payload = json.load(handle)
    if isinstance(payload, dict):
        family = payload.get("family", args.family)
        rank = payload.get("rank", args.rank)
        factors = payload["factors"]
    else:
        family = args.family
        rank = args.rank
        factors = payload
    if rank is None:
        if not factors:
            raise SystemExit("empty input and no --rank given")
        rank = len(factors[0]["root"])
    ctx = context(family, rank)
    word = chevalley.UnipotentWord.from_obj(ctx, factors)
    print(json.dumps(chevalley.collect(word).to_obj(), sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    if args.check == "closure":
        try:
            report = chevalley.verify_closure_witness(args.n)
        except chevalley.VerificationError as err:
            if err.report is not None:
                for line in err.report.lines():
                    print(line)
            print(f"FAIL: {err}")
            return 1
        for line in report.lines():
            print(line)
        print("PASS")
        return 0
    if args.check == "disjoint":
        name = search.DISJOINTNESS if args.n == 3 else search.DISJOINTNESS_EXTENDED
        entry = search.catalog(name, args.n)
        certificate = search.disjointness_certificate(entry.first, entry.second)
        if certificate is None:
            print("FAIL: no disjointness certificate found")
            return 1
        dim = cells_mod.cell(entry.first).dimension
        print(f"catalog {entry.name} n={entry.n} dimension={dim}")
        print(
            f"certificate root={certificate.root.serialize()} "
            f"witness_index={certificate.witness_index}"
        )
        print("PASS")
        return 0
    raise SystemExit(f"unknown verify check {args.check!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deodhar", description="Deodhar cell combinatorics toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells", help="list distinguished cells of a reduced word")
    _add_context_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--end", default=None, help="endpoint window or 'e'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cells)

    p = sub.add_parser("distinguished", help="test a mask for distinguishedness")
    _add_context_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--mask", required=True)
    p.set_defaults(func=_cmd_distinguished)

    p = sub.add_parser("phi", help="coordinate root sequence of a mask")
    _add_context_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("order", help="compare two masks in the closure order")
    _add_context_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("--mask2", required=True)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("hasse", help="DOT graph of the closure order")
    _add_context_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--dot", required=True, help="output path or '-'")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("count", help="finite-field double cell counts (CSV)")
    _add_context_flags(p, default_family="A")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("collect", help="collect a unipotent word (JSON in/out)")
    _add_context_flags(p)
    p.add_argument("--input", required=True, help="JSON file or '-'")
    p.set_defaults(func=_cmd_collect)

    p = sub.add_parser("verify", help="run a machine verification")
    p.add_argument("check", choices=["closure", "disjoint"])
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
