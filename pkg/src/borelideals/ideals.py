"""Enumeration and classification of the ideals of a Borel subalgebra.

A monomial ideal is a set of positive roots closed under addition of simple
roots (whenever the sum is again a root); it encodes the span of the
corresponding root vectors, which is an ideal of the Borel subalgebra
contained in the nilradical.  Enumeration proceeds breadth-first from the
one-dimensional ideals, adding one admissible root vector per step; a
brute-force subset filter doubles as an independent oracle on small systems.

General ideals are the monomial ones enriched by a Cartan part: for a fixed
root set, the admissible Cartan vectors are exactly those annihilated by
every root outside the set, computed here as an exact integer kernel.

Ideal sets are represented internally as bitmasks over the canonical root
order, which keeps the breadth-first search fast enough for E8.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import CapacityError, InvalidInputError
from .linalg import IntVector, kernel_basis
from .roots import Root, RootSystem, coroot_pairing, root_sort_key, root_ascii


@dataclass(frozen=True)
class MonomialIdeal:
    """Canonically sorted set of positive roots; the empty tuple is the zero ideal."""

    roots: tuple[Root, ...]

    @property
    def dimension(self) -> int:
        return len(self.roots)


ZERO_IDEAL = MonomialIdeal(())


def ideal_sort_key(ideal: MonomialIdeal) -> tuple:
    """Order ideals by dimension, then by their canonical root sequences."""
    return (len(ideal.roots), tuple(root_sort_key(r) for r in ideal.roots))


def ideal_ascii(ideal: MonomialIdeal, unicode_alpha: bool = False) -> str:
    """Render "[X[a1], X[a1+a2]]"; the zero ideal renders as "0"."""
    if not ideal.roots:
        return "0"
    return "[" + ", ".join(f"X[{root_ascii(r, unicode_alpha)}]" for r in ideal.roots) + "]"


def _mask_of(roots: Iterable[Root], rs: RootSystem) -> int:
    mask = 0
    for r in roots:
        mask |= 1 << rs.index_of(r)
    return mask


def _ideal_from_mask(mask: int, rs: RootSystem) -> MonomialIdeal:
    pos = rs.positive_roots
    picked = []
    while mask:
        low = mask & -mask
        picked.append(pos[low.bit_length() - 1])
        mask ^= low
    return MonomialIdeal(tuple(picked))


def _is_ideal_mask(mask: int, rs: RootSystem) -> bool:
    up = rs._up_masks
    rem = mask
    while rem:
        low = rem & -rem
        if up[low.bit_length() - 1] & ~mask:
            return False
        rem ^= low
    return True


def _checked_mask(ideal: MonomialIdeal, rs: RootSystem) -> int:
    mask = _mask_of(ideal.roots, rs)
    if not _is_ideal_mask(mask, rs):
        raise InvalidInputError(
            f"not a monomial ideal: {[root_ascii(r) for r in ideal.roots]}"
        )
    return mask


def is_monomial_ideal(roots: Iterable[Root], rs: RootSystem) -> bool:
    """Closure test: r + alpha_j in R+ implies r + alpha_j in the set."""
    return _is_ideal_mask(_mask_of(roots, rs), rs)


def one_dimensional_ideals(rs: RootSystem) -> frozenset[MonomialIdeal]:
    """All singleton ideals: roots r with r + alpha_j never a root.

    For an irreducible system this is exactly the highest root.
    """
    return frozenset(
        MonomialIdeal((r,))
        for g, r in enumerate(rs.positive_roots)
        if rs._up_masks[g] == 0
    )


def extension_candidates(ideal: MonomialIdeal, rs: RootSystem) -> frozenset[Root]:
    """Roots r outside the ideal with every r + alpha_j either not a root or inside.

    Adjoining any one candidate yields a monomial ideal of one higher dimension.
    """
    mask = _checked_mask(ideal, rs)
    up = rs._up_masks
    return frozenset(
        r
        for g, r in enumerate(rs.positive_roots)
        if not mask >> g & 1 and up[g] & ~mask == 0
    )


def enumerate_nilradical_ideals(rs: RootSystem) -> frozenset[MonomialIdeal]:
    """All nonzero monomial ideals, by breadth-first one-root extensions.

    Each round extends every ideal on the frontier by every admissible root
    and deduplicates on the bitmask, so an ideal reachable along several
    chains is produced once.  The zero ideal is not included.
    """
    n = len(rs.positive_roots)
    up = rs._up_masks
    frontier = [1 << g for g in range(n) if up[g] == 0]
    seen = set(frontier)
    while frontier:
        fresh = []
        for mask in frontier:
            inv = ~mask
            for g in range(n):
                if inv >> g & 1 and up[g] & inv == 0:
                    grown = mask | 1 << g
                    if grown not in seen:
                        seen.add(grown)
                        fresh.append(grown)
        frontier = fresh
    return frozenset(_ideal_from_mask(m, rs) for m in seen)


def brute_force_ideals(rs: RootSystem, max_positive_roots: int = 20) -> frozenset[MonomialIdeal]:
    """Filter all nonempty subsets of R+ by the closure test (oracle use only)."""
    n = len(rs.positive_roots)
    if n > max_positive_roots:
        raise CapacityError(
            f"{rs.family}{rs.rank} has {n} positive roots; brute force is capped at "
            f"{max_positive_roots} (2^{n} subsets)"
        )
    return frozenset(
        _ideal_from_mask(mask, rs)
        for mask in range(1, 1 << n)
        if _is_ideal_mask(mask, rs)
    )


def is_abelian(ideal: MonomialIdeal, rs: RootSystem) -> bool:
    """Whether no two member roots (repeats allowed) sum to a root."""
    mask = _mask_of(ideal.roots, rs)
    sums = rs._sum_masks
    rem = mask
    while rem:
        low = rem & -rem
        if sums[low.bit_length() - 1] & mask:
            return False
        rem ^= low
    return True


def abelian_ideals(rs: RootSystem) -> tuple[MonomialIdeal, ...]:
    """All abelian monomial ideals including the zero ideal, canonically sorted."""
    kept = [j for j in enumerate_nilradical_ideals(rs) if is_abelian(j, rs)]
    return (ZERO_IDEAL,) + tuple(sorted(kept, key=ideal_sort_key))


@dataclass(frozen=True)
class CartanKernelBasis:
    """Integer basis of the Cartan vectors annihilated by all roots outside an ideal.

    Each vector (c_1, ..., c_rank) stands for c_1 H[a1] + ... + c_rank H[a_rank];
    vectors are rows of a reduced row-echelon matrix cleared to coprime
    integers with positive leading entries.
    """

    vectors: tuple[IntVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _pairing_row(root: Root, rs: RootSystem) -> IntVector:
    return tuple(coroot_pairing(root, j, rs.cartan) for j in range(rs.rank))


def cartan_kernel(ideal: MonomialIdeal, rs: RootSystem) -> CartanKernelBasis:
    """Exact kernel of the pairing rows of all positive roots outside the ideal.

    An empty complement (the ideal is the whole nilradical) yields the full
    Cartan, i.e. the identity basis.
    """
    member = frozenset(ideal.roots)
    rows = [_pairing_row(r, rs) for r in rs.positive_roots if r not in member]
    return CartanKernelBasis(kernel_basis(rows, rs.rank))


NOTE_GENERAL_IDEALS = (
    "every ideal with the given root part is span(S) + span(X[r] for listed r), "
    "with S any subspace of the listed Cartan kernel; entries with a nonzero "
    "kernel and a proper root part are flagged as mixed"
)


@dataclass(frozen=True)
class ClassificationEntry:
    ideal: MonomialIdeal
    kernel: CartanKernelBasis
    mixed: bool

    @property
    def kernel_dimension(self) -> int:
        return self.kernel.dimension


@dataclass(frozen=True)
class IdealClassification:
    """Every monomial ideal (zero included) paired with its Cartan kernel."""

    entries: tuple[ClassificationEntry, ...]
    note: str = NOTE_GENERAL_IDEALS


def _echelon_or_full_rank(rows: Iterable[IntVector], width: int) -> list[list[int]] | None:
    """Integer row echelon of a row stream; None as soon as the rank hits width."""
    pivots: dict[int, list[int]] = {}
    for row in rows:
        r = list(row)
        for col in sorted(pivots):
            if r[col]:
                er = pivots[col]
                a, b = er[col], r[col]
                r = [x * a - y * b for x, y in zip(r, er)]
        g = 0
        for v in r:
            g = gcd(g, v)
        if g > 1:
            r = [v // g for v in r]
        lead = next((c for c, v in enumerate(r) if v), None)
        if lead is None:
            continue
        if r[lead] < 0:
            r = [-v for v in r]
        pivots[lead] = r
        if len(pivots) == width:
            return None
    return [pivots[c] for c in sorted(pivots)]


def full_ideal_classification(rs: RootSystem) -> IdealClassification:
    """Pair every monomial ideal with its Cartan kernel, smallest ideals first."""
    ideals = [ZERO_IDEAL] + sorted(enumerate_nilradical_ideals(rs), key=ideal_sort_key)
    pairing = [_pairing_row(r, rs) for r in rs.positive_roots]
    n = len(rs.positive_roots)
    full = rs.full_mask
    entries = []
    for ideal in ideals:
        comp = full ^ _mask_of(ideal.roots, rs)
        rows = _echelon_or_full_rank(
            (pairing[g] for g in range(n) if comp >> g & 1), rs.rank
        )
        kernel = (
            CartanKernelBasis(())
            if rows is None
            else CartanKernelBasis(kernel_basis(rows, rs.rank))
        )
        mixed = kernel.dimension > 0 and comp != 0
        entries.append(ClassificationEntry(ideal=ideal, kernel=kernel, mixed=mixed))
    return IdealClassification(entries=tuple(entries))
