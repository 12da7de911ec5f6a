"""Inclusion lattice of the monomial ideals, with counts and DOT export."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInputError
from .ideals import (
    MonomialIdeal,
    ZERO_IDEAL,
    ideal_ascii,
    ideal_sort_key,
    is_abelian,
    is_monomial_ideal,
)
from .roots import RootSystem


@dataclass(frozen=True)
class IdealLattice:
    """Ideals ordered by inclusion; edges are covers (dimension gap one).

    ``nodes`` includes the zero ideal as the unique bottom and is sorted by
    (dimension, canonical order); ``cover_edges`` holds (smaller-index,
    larger-index) pairs; ``abelian`` flags each node.
    """

    nodes: tuple[MonomialIdeal, ...]
    cover_edges: tuple[tuple[int, int], ...]
    abelian: tuple[bool, ...]


def build_lattice(ideals: Iterable[MonomialIdeal], rs: RootSystem) -> IdealLattice:
    """Assemble the lattice from the complete set of nonzero monomial ideals.

    Covers are found by deleting one minimal root at a time: an ideal minus a
    root r stays an ideal exactly when no member sits one simple step below r,
    and every nested pair with dimension gap one arises this way.
    """
    nonzero = set(ideals)
    for ideal in nonzero:
        if not is_monomial_ideal(ideal.roots, rs):
            raise InvalidInputError(f"not a monomial ideal: {ideal_ascii(ideal)}")
    nodes = [ZERO_IDEAL] + sorted(nonzero - {ZERO_IDEAL}, key=ideal_sort_key)

    n = len(rs.positive_roots)
    down = [0] * n
    for g in range(n):
        rem = rs._up_masks[g]
        while rem:
            low = rem & -rem
            down[low.bit_length() - 1] |= 1 << g
            rem ^= low

    index_of_mask = {}
    masks = []
    for i, node in enumerate(nodes):
        mask = 0
        for r in node.roots:
            mask |= 1 << rs.index_of(r)
        masks.append(mask)
        index_of_mask[mask] = i

    edges = []
    for i, mask in enumerate(masks):
        rem = mask
        while rem:
            low = rem & -rem
            g = low.bit_length() - 1
            if down[g] & mask == 0:
                smaller = index_of_mask.get(mask ^ low)
                if smaller is not None:
                    edges.append((smaller, i))
            rem ^= low
    edges.sort()

    flags = tuple(is_abelian(node, rs) for node in nodes)
    return IdealLattice(nodes=tuple(nodes), cover_edges=tuple(edges), abelian=flags)


@dataclass(frozen=True)
class DimensionCounts:
    """Histogram of ideal dimensions plus the totals used in reports.

    ``by_dimension`` covers nonzero ideals only; ``abelian_total`` includes
    the zero ideal (which is abelian by convention).
    """

    by_dimension: dict[int, int]
    nonzero_total: int
    with_zero_total: int
    abelian_total: int


def counts_by_dimension(ideals: Iterable[MonomialIdeal], rs: RootSystem) -> DimensionCounts:
    """Count nonzero ideals per dimension, totals with/without zero, and abelian."""
    nonzero = {j for j in ideals if j.dimension > 0}
    histo: dict[int, int] = {}
    for j in nonzero:
        histo[j.dimension] = histo.get(j.dimension, 0) + 1
    abelian = 1 + sum(1 for j in nonzero if is_abelian(j, rs))
    return DimensionCounts(
        by_dimension=dict(sorted(histo.items())),
        nonzero_total=len(nonzero),
        with_zero_total=len(nonzero) + 1,
        abelian_total=abelian,
    )


@dataclass(frozen=True)
class DotOptions:
    """Rendering options for DOT export; defaults give the canonical ASCII form."""

    graph_name: str = "ideal_lattice"
    unicode_alpha: bool = False
    mark_abelian: bool = True


def export_dot(lattice: IdealLattice, options: DotOptions | None = None) -> str:
    """DOT digraph of the lattice, bottom to top, byte-stable per input."""
    opts = options or DotOptions()
    lines = [f"digraph {opts.graph_name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, node in enumerate(lattice.nodes):
        label = ideal_ascii(node, opts.unicode_alpha)
        attrs = f'label="{label}"'
        if opts.mark_abelian and lattice.abelian[i]:
            attrs += ', style=filled, fillcolor="lightgrey"'
        lines.append(f"  n{i} [{attrs}];")
    for smaller, larger in lattice.cover_edges:
        lines.append(f"  n{smaller} -> n{larger};")
    lines.append("}")
    return "\n".join(lines) + "\n"
