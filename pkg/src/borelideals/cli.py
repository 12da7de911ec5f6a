"""Command-line front end: build a root system, analyse it, emit text/JSON/DOT.

Output is deterministic byte-for-byte for a fixed command line.  Text output
never contains ANSI colour codes, so NO_COLOR needs no special handling.
Exit statuses: 0 success, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Iterable

from .errors import CapacityError, InvalidInputError
from .ideals import (
    MonomialIdeal,
    brute_force_ideals,
    enumerate_nilradical_ideals,
    abelian_ideals,
    full_ideal_classification,
    ideal_ascii,
    ideal_sort_key,
    is_abelian,
    is_monomial_ideal,
    ZERO_IDEAL,
)
from .lattice import DotOptions, build_lattice, counts_by_dimension, export_dot
from .roots import (
    Root,
    RootSystem,
    dynkin_description,
    is_root,
    root_ascii,
    root_system,
)
from .subalgebras import (
    is_monomial_subalgebra,
    monomial_centralizer,
    monomial_normalizer,
    monomial_subalgebra,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CAPACITY = 3

_TERM_RE = re.compile(r"(\d*)a(\d+)")


def _split_top_level(literal: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in literal:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise InvalidInputError(f"unbalanced ']' in root set: {literal}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise InvalidInputError(f"unbalanced '[' in root set: {literal}")
    parts.append("".join(current))
    return parts


def _parse_term(term: str, rs: RootSystem) -> Root:
    if not term:
        raise InvalidInputError("empty term in root set")
    if term.startswith("["):
        if not term.endswith("]"):
            raise InvalidInputError(f"malformed vector term: {term}")
        entries = term[1:-1].split(",")
        try:
            vec = tuple(int(e) for e in entries)
        except ValueError:
            raise InvalidInputError(f"malformed vector term: {term}") from None
        if len(vec) != rs.rank:
            raise InvalidInputError(
                f"vector term {term} has length {len(vec)}, expected {rs.rank}"
            )
    else:
        coeffs = [0] * rs.rank
        for part in term.split("+"):
            m = _TERM_RE.fullmatch(part)
            if m is None:
                raise InvalidInputError(f"malformed term: {term}")
            index = int(m.group(2))
            if not 1 <= index <= rs.rank:
                raise InvalidInputError(
                    f"simple-root index out of range in term: {term}"
                )
            coeffs[index - 1] += int(m.group(1)) if m.group(1) else 1
        vec = tuple(coeffs)
    if not is_root(vec, rs):
        raise InvalidInputError(
            f"not a positive root of {rs.family}{rs.rank}: {term}"
        )
    return vec


def parse_root_set(literal: str, rs: RootSystem) -> frozenset[Root]:
    """Parse "a2, a1+2a2" or "[0,1], [1,2]" into a set of positive roots.

    Whitespace is ignored; every term must name a positive root of ``rs``.
    """
    compact = "".join(literal.split())
    if not compact:
        raise InvalidInputError("empty root set")
    return frozenset(_parse_term(term, rs) for term in _split_top_level(compact))


def _vectors(roots: Iterable[Root]) -> list[list[int]]:
    return [list(r) for r in roots]


def _counts_payload(ideals: Iterable[MonomialIdeal], rs: RootSystem) -> dict:
    counts = counts_by_dimension(ideals, rs)
    return {
        "by_dimension": {str(d): c for d, c in counts.by_dimension.items()},
        "nonzero_total": counts.nonzero_total,
        "with_zero_total": counts.with_zero_total,
        "abelian_total": counts.abelian_total,
    }


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _roots_line(roots: Iterable[Root], unicode_alpha: bool) -> str:
    return ", ".join(root_ascii(r, unicode_alpha) for r in roots)


def _cartan_combo_ascii(vec: Iterable[int], unicode_alpha: bool = False) -> str:
    sym = "α" if unicode_alpha else "a"
    out = ""
    for i, c in enumerate(vec):
        if c == 0:
            continue
        term = f"H[{sym}{i + 1}]" if abs(c) == 1 else f"{abs(c)}H[{sym}{i + 1}]"
        if not out:
            out = ("-" if c < 0 else "") + term
        else:
            out += ("-" if c < 0 else "+") + term
    return out or "0"


def _cmd_roots(args, rs: RootSystem) -> str:
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "dynkin_diagram": dynkin_description(rs),
                "cartan_matrix": [list(row) for row in rs.cartan],
                "simple_roots": _vectors(rs.simple_roots),
                "positive_roots": _vectors(rs.positive_roots),
                "highest_root": list(rs.highest_root),
                "counts": {"positive_roots": len(rs.positive_roots)},
            }
        )
    u = args.unicode
    lines = [
        dynkin_description(rs, u),
        f"positive roots ({len(rs.positive_roots)}): {_roots_line(rs.positive_roots, u)}",
        f"highest root: {root_ascii(rs.highest_root, u)}",
    ]
    return "\n".join(lines) + "\n"


def _ideal_entry(ideal: MonomialIdeal, rs: RootSystem) -> dict:
    return {
        "roots": _vectors(ideal.roots),
        "dimension": ideal.dimension,
        "abelian": is_abelian(ideal, rs),
    }


def _cmd_ideals(args, rs: RootSystem) -> str:
    found = brute_force_ideals(rs) if args.oracle else enumerate_nilradical_ideals(rs)
    ordered = sorted(found, key=ideal_sort_key)
    listed = ([ZERO_IDEAL] if args.include_zero else []) + ordered
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "positive_roots": _vectors(rs.positive_roots),
                "ideals": [_ideal_entry(j, rs) for j in listed],
                "counts": _counts_payload(ordered, rs),
            }
        )
    return "\n".join(ideal_ascii(j, args.unicode) for j in listed) + "\n"


def _cmd_abelian(args, rs: RootSystem) -> str:
    listed = abelian_ideals(rs)
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "positive_roots": _vectors(rs.positive_roots),
                "ideals": [_ideal_entry(j, rs) for j in listed],
                "counts": _counts_payload(enumerate_nilradical_ideals(rs), rs),
            }
        )
    return "\n".join(ideal_ascii(j, args.unicode) for j in listed) + "\n"


def _cmd_classify(args, rs: RootSystem) -> str:
    classification = full_ideal_classification(rs)
    nonzero = [e.ideal for e in classification.entries if e.ideal.dimension > 0]
    if args.format == "json":
        entries = []
        for e in classification.entries:
            entry = _ideal_entry(e.ideal, rs)
            entry["kernel_dimension"] = e.kernel_dimension
            entry["kernel_basis"] = [list(v) for v in e.kernel.vectors]
            entry["mixed"] = e.mixed
            entries.append(entry)
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "positive_roots": _vectors(rs.positive_roots),
                "note": classification.note,
                "ideals": entries,
                "counts": _counts_payload(nonzero, rs),
            }
        )
    u = args.unicode
    lines = [f"note: {classification.note}"]
    for e in classification.entries:
        basis = "; ".join(_cartan_combo_ascii(v, u) for v in e.kernel.vectors) or "-"
        line = f"{ideal_ascii(e.ideal, u)} | kernel dim {e.kernel_dimension} | kernel basis: {basis}"
        if e.mixed:
            line += " | mixed"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _cmd_lattice(args, rs: RootSystem) -> str:
    lattice = build_lattice(enumerate_nilradical_ideals(rs), rs)
    if args.format == "dot":
        return export_dot(lattice, DotOptions(unicode_alpha=args.unicode))
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "lattice": {
                    "nodes": [
                        {
                            "roots": _vectors(node.roots),
                            "dimension": node.dimension,
                            "abelian": lattice.abelian[i],
                        }
                        for i, node in enumerate(lattice.nodes)
                    ],
                    "edges": [list(edge) for edge in lattice.cover_edges],
                },
            }
        )
    u = args.unicode
    lines = [f"nodes ({len(lattice.nodes)}):"]
    lines += [f"{i}: {ideal_ascii(node, u)}" for i, node in enumerate(lattice.nodes)]
    lines.append(f"edges ({len(lattice.cover_edges)}):")
    lines += [f"{a} -> {b}" for a, b in lattice.cover_edges]
    return "\n".join(lines) + "\n"


def _set_ascii(roots: Iterable[Root], rs: RootSystem, unicode_alpha: bool) -> str:
    ordered = sorted(roots, key=lambda r: rs.index_of(r))
    if not ordered:
        return "0"
    return "[" + ", ".join(f"X[{root_ascii(r, unicode_alpha)}]" for r in ordered) + "]"


def _cmd_normalizer(args, rs: RootSystem) -> str:
    sub = monomial_subalgebra(parse_root_set(args.set, rs), rs)
    result = monomial_normalizer(sub, rs)
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "set": _vectors(sub.roots),
                "normalizer": _vectors(result.roots),
            }
        )
    return _set_ascii(result.roots, rs, args.unicode) + "\n"


def _cmd_centralizer(args, rs: RootSystem) -> str:
    sub = monomial_subalgebra(parse_root_set(args.set, rs), rs)
    result = sorted(monomial_centralizer(sub, rs), key=lambda r: rs.index_of(r))
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "set": _vectors(sub.roots),
                "centralizer": _vectors(result),
            }
        )
    return _set_ascii(result, rs, args.unicode) + "\n"


def _pairwise_sum_free(roots: frozenset[Root], rs: RootSystem) -> bool:
    indices = [rs.index_of(r) for r in roots]
    mask = 0
    for g in indices:
        mask |= 1 << g
    return all(rs._sum_masks[g] & mask == 0 for g in indices)


def _cmd_check(args, rs: RootSystem) -> str:
    roots = parse_root_set(args.set, rs)
    checks = {
        "is_monomial_ideal": is_monomial_ideal(roots, rs),
        "is_monomial_subalgebra": is_monomial_subalgebra(roots, rs),
        "is_abelian_set": _pairwise_sum_free(roots, rs),
    }
    if args.format == "json":
        return _json_text(
            {
                "family": rs.family,
                "rank": rs.rank,
                "set": _vectors(sorted(roots, key=lambda r: rs.index_of(r))),
                "checks": checks,
            }
        )
    lines = [f"set: {_set_ascii(roots, rs, args.unicode)}"]
    lines.append(f"monomial ideal: {'yes' if checks['is_monomial_ideal'] else 'no'}")
    lines.append(
        f"monomial subalgebra: {'yes' if checks['is_monomial_subalgebra'] else 'no'}"
    )
    lines.append(f"abelian set: {'yes' if checks['is_abelian_set'] else 'no'}")
    return "\n".join(lines) + "\n"


_HANDLERS = {
    "roots": _cmd_roots,
    "ideals": _cmd_ideals,
    "abelian": _cmd_abelian,
    "classify": _cmd_classify,
    "lattice": _cmd_lattice,
    "normalizer": _cmd_normalizer,
    "centralizer": _cmd_centralizer,
    "check": _cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelideals",
        description=(
            "Root systems of simple Lie algebras and the ideals of their Borel "
            "subalgebras."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, formats=("text", "json"), needs_set=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("family", help="family letter, one of A B C D E F G")
        sp.add_argument("rank", type=int, help="rank of the root system")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="PATH", help="write output to a file")
        sp.add_argument(
            "--jobs",
            type=int,
            default=1,
            metavar="N",
            help="cap on worker count (output is identical for any value)",
        )
        sp.add_argument(
            "--unicode", action="store_true", help="render alpha instead of 'a' in text"
        )
        if needs_set:
            sp.add_argument(
                "--set",
                required=True,
                metavar="ROOTS",
                help="root set literal, e.g. \"a2, a1+2a2\" or \"[0,1]\"",
            )
        return sp

    add("roots", "positive roots, highest root, Dynkin diagram description")
    sp = add("ideals", "nonzero monomial ideals of the nilradical")
    sp.add_argument(
        "--include-zero", action="store_true", help="list the zero ideal as well"
    )
    sp.add_argument(
        "--oracle",
        action="store_true",
        help="enumerate by brute-force subset filtering (capped; exit 3 beyond)",
    )
    add("abelian", "abelian monomial ideals, zero ideal included")
    add("classify", "monomial ideals with their admissible Cartan kernels")
    add("lattice", "inclusion lattice of the ideals", formats=("text", "json", "dot"))
    add("normalizer", "normalizer of a monomial subalgebra in the nilradical", needs_set=True)
    add("centralizer", "root vectors commuting with a monomial subalgebra", needs_set=True)
    add("check", "test a root set for ideal/subalgebra/abelian properties", needs_set=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and execute; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_INVALID_INPUT
    try:
        if args.jobs < 1:
            raise InvalidInputError(f"--jobs must be >= 1, got {args.jobs}")
        rs = root_system(args.family, args.rank)
        text = _HANDLERS[args.command](args, rs)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
