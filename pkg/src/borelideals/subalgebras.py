"""Sign-free analysis of monomial subalgebras of the nilradical.

A monomial subalgebra is spanned by root vectors for a set of positive roots
closed under root addition.  Normalizers and centralizers are computed inside
the nilradical only, and only for monomial spans: whether [X_r, X_s] lands in
a monomial span depends only on whether r+s is a root, never on structure
constant signs.  Subalgebras spanned by generic linear combinations (with
free coefficients) are outside this module's scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInputError
from .roots import Root, RootSystem, root_ascii, root_sort_key


@dataclass(frozen=True)
class MonomialSubalgebra:
    """Canonically sorted set of positive roots spanning a bracket-closed space."""

    roots: tuple[Root, ...]

    @property
    def dimension(self) -> int:
        return len(self.roots)


def _mask_of(roots: Iterable[Root], rs: RootSystem) -> int:
    mask = 0
    for r in roots:
        mask |= 1 << rs.index_of(r)
    return mask


def _closed_under_sums(mask: int, rs: RootSystem) -> bool:
    sums = rs._sum_masks
    pos = rs.positive_roots
    index = rs.index_of
    rem = mask
    while rem:
        low = rem & -rem
        g = low.bit_length() - 1
        partners = sums[g] & mask
        while partners:
            plow = partners & -partners
            h = plow.bit_length() - 1
            s = tuple(a + b for a, b in zip(pos[g], pos[h]))
            if not mask >> index(s) & 1:
                return False
            partners ^= plow
        rem ^= low
    return True


def is_monomial_subalgebra(roots: Iterable[Root], rs: RootSystem) -> bool:
    """Closure test: r + s in R+ implies r + s in the set, for members r, s."""
    return _closed_under_sums(_mask_of(roots, rs), rs)


def monomial_subalgebra(roots: Iterable[Root], rs: RootSystem) -> MonomialSubalgebra:
    """Validate closure and canonicalize the root order."""
    unique = set(roots)
    if not is_monomial_subalgebra(unique, rs):
        raise InvalidInputError(
            f"not closed under root addition: {[root_ascii(r) for r in sorted(unique, key=root_sort_key)]}"
        )
    return MonomialSubalgebra(tuple(sorted(unique, key=root_sort_key)))


def monomial_normalizer(sub: MonomialSubalgebra, rs: RootSystem) -> MonomialSubalgebra:
    """Roots r with r + s either not a root or inside the span, for all members s.

    This is the normalizer of the span inside the nilradical; it always
    contains the input and is itself a monomial subalgebra.
    """
    mask = _mask_of(sub.roots, rs)
    sums = rs._sum_masks
    pos = rs.positive_roots
    index = rs.index_of
    picked = []
    for g, r in enumerate(pos):
        partners = sums[g] & mask
        ok = True
        while partners:
            plow = partners & -partners
            h = plow.bit_length() - 1
            s = tuple(a + b for a, b in zip(r, pos[h]))
            if not mask >> index(s) & 1:
                ok = False
                break
            partners ^= plow
        if ok:
            picked.append(r)
    return MonomialSubalgebra(tuple(picked))


def monomial_centralizer(sub: MonomialSubalgebra, rs: RootSystem) -> frozenset[Root]:
    """Roots r with r + s never a root, for all members s.

    These root vectors commute with every element of the span regardless of
    structure-constant signs.  Returned as a plain root set: the sign-free
    test cannot certify that the centralizer is bracket-closed, so callers
    wanting a subalgebra should run ``is_monomial_subalgebra`` on it.
    """
    mask = _mask_of(sub.roots, rs)
    sums = rs._sum_masks
    return frozenset(
        r for g, r in enumerate(rs.positive_roots) if sums[g] & mask == 0
    )
