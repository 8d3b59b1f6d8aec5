"""Command-line front end.  Exit codes: 0 ok, 1 verification failure, 2 usage error."""
from __future__ import annotations

import argparse
import sys

from .action import character_direct
from .chars import (decompose, format_decomposition, partitions, stable_label,
                    type_character)
from .exterior import (bigraded_dims, canonical_signature, enumerate_types, type_block_dim)
from .homology import KrizComplex, poincare_string, table_tsv
from .ring import RingAxiomError, RingSpecError, format_ring, format_rational, load_ring
from .verify import SUITES


class UsageError(Exception):
    pass


def parse_type(ring, text):
    """``L=3,1,1;H=w,1,1`` into a canonical TypeSignature."""
    fields = {}
    for part in text.split(";"):
        key, sep, val = part.partition("=")
        if not sep:
            raise UsageError(f"bad --type field {part!r}")
        fields[key.strip().upper()] = [v.strip() for v in val.split(",") if v.strip()]
    if set(fields) != {"L", "H"}:
        raise UsageError("--type needs L=... and H=...")
    try:
        sizes = [int(v) for v in fields["L"]]
    except ValueError:
        raise UsageError("component sizes must be integers")
    if len(sizes) != len(fields["H"]) or any(s < 1 for s in sizes):
        raise UsageError("--type needs one positive size per mark")
    try:
        marks = [ring.index(h) for h in fields["H"]]
    except KeyError as exc:
        raise UsageError(str(exc))
    return canonical_signature(zip(sizes, marks))


def format_signature(ring, sig):
    return ("L=" + ",".join(map(str, sig.sizes)) + ";H="
            + ",".join(ring.symbols[h] for h in sig.marks))


def character_table(chars):
    """Aligned text: rows are cycle types, columns are named characters."""
    names = [name for name, _ in chars]
    n = chars[0][1].n
    rows = [["class"] + names]
    for ct in partitions(n):
        rows.append(["(" + ",".join(map(str, ct)) + ")"]
                    + [format_rational(chi(ct)) for _, chi in chars])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")


def _cell_character(ring, args):
    if args.type:
        sig = parse_type(ring, args.type)
        if sig.n != args.n:
            raise UsageError(f"type has {sig.n} points, --n is {args.n}")
        return character_direct(ring, args.n, sig.q,
                                sig.q * (ring.top_degree - 1) + sig.mark_degree(ring), sig), sig
    _need(args, "q", "k")
    if args.cohomology:
        return KrizComplex(ring, args.n).cohomology_character(args.q, args.k), None
    return character_direct(ring, args.n, args.q, args.k), None


def cmd_ring_check(ring, args, out):
    out.write(format_ring(ring))
    out.write("betti " + " ".join(map(str, ring.betti())) + "\n")
    out.write("axioms ok\n")
    return 0


def cmd_dims(ring, args, out):
    _need(args, "n")
    table = bigraded_dims(ring, args.n)
    if args.format == "tsv":
        out.write(table_tsv(table) + "\n")
    else:
        out.write(f"# dims of E(X,n), ring={ring.name}, n={args.n}\n")
        out.write(table_tsv(table) + "\n")
        out.write(f"total {sum(table.values())}\n")
    return 0


def cmd_betti(ring, args, out):
    _need(args, "n")
    table = KrizComplex(ring, args.n).betti_table()
    if args.format == "tsv":
        out.write(table_tsv(table) + "\n")
    else:
        out.write(poincare_string(table) + "\n")
    return 0


def cmd_poincare(ring, args, out):
    _need(args, "n")
    out.write(poincare_string(KrizComplex(ring, args.n).betti_table()) + "\n")
    return 0


def cmd_char(ring, args, out):
    _need(args, "n")
    chi, sig = _cell_character(ring, args)
    cols = [("direct", chi)]
    if sig is not None:
        cols.append(("induced", type_character(sig, ring)))
    out.write(character_table(cols) + "\n")
    return 0


def cmd_decompose(ring, args, out):
    _need(args, "n")
    chi, _ = _cell_character(ring, args)
    dec = decompose(chi)
    out.write(format_decomposition(dec) + "\n")
    if all(stable_label(lam) for lam, _ in dec):
        out.write("stable: " + format_decomposition(dec, stable=True) + "\n")
    return 0


def cmd_types(ring, args, out):
    _need(args, "n", "q", "k")
    for sig in enumerate_types(ring, args.n, args.q, args.k):
        out.write(f"{format_signature(ring, sig)}\t{type_block_dim(sig)}\n")
    return 0


def cmd_verify(ring, args, out):
    _need(args, "n")
    checks = SUITES[args.suite](ring, args.n)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.ok for c in checks) else 1


COMMANDS = {
    "ring-check": cmd_ring_check,
    "dims": cmd_dims,
    "betti": cmd_betti,
    "poincare": cmd_poincare,
    "char": cmd_char,
    "decompose": cmd_decompose,
    "types": cmd_types,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="krizmodel", description="Exact computations in the Kriz model E(X,n).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "verify":
            p.add_argument("suite", choices=sorted(SUITES))
        p.add_argument("--ring", default="cp:1", help="preset cp:M, curve:G, or a ring-spec file")
        p.add_argument("--n", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--type", help="type signature such as L=3,1,1;H=w,1,1")
        p.add_argument("--cohomology", action="store_true", help="use H_q^k instead of E_q^k")
        p.add_argument("--format", choices=["text", "tsv"], default="text")
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.n is not None and args.n < 1:
        err.write("error: --n must be at least 1\n")
        return 2
    try:
        ring = load_ring(args.ring)
    except RingAxiomError as exc:
        err.write(f"ring invariant failure: {exc}\n")
        return 1
    except (RingSpecError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    try:
        return COMMANDS[args.command](ring, args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
