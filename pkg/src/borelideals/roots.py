"""Root systems of the simple Lie algebras, built from their Cartan matrices.

A root is an integer coefficient vector over the simple roots.  Starting from
the simple roots (the unit vectors), the full set of positive roots is
generated by repeatedly applying simple reflections to roots that pair
negatively with a simple root.  Everything here is exact integer arithmetic on
immutable tuples; a constructed ``RootSystem`` is safe to share freely across
threads or workers.

Simple-root indices are 0-based throughout the API; renderings ("a1", "a2",
...) are 1-based to match the usual labelling of Dynkin diagram nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInputError, StructuralError

Root = tuple[int, ...]
CartanMatrix = tuple[tuple[int, ...], ...]

FAMILIES = "ABCDEFG"

# (family, minimum rank, maximum rank or None, extra note for diagnostics)
_RANK_RULES = {
    "A": (1, None, ""),
    "B": (2, None, ""),
    "C": (2, None, ""),
    "D": (3, None, " (D2 is reducible)"),
    "E": (6, 8, ""),
    "F": (4, 4, ""),
    "G": (2, 2, ""),
}


def validate_family_rank(family: str, rank: int) -> None:
    """Reject (family, rank) pairs that do not name a simple Lie algebra."""
    if family not in _RANK_RULES:
        raise InvalidInputError(
            f"unknown family {family!r}: expected one of {', '.join(FAMILIES)}"
        )
    lo, hi, note = _RANK_RULES[family]
    if rank < lo:
        raise InvalidInputError(f"family {family} requires rank >= {lo}, got {rank}{note}")
    if hi is not None and rank > hi:
        raise InvalidInputError(f"family {family} requires rank <= {hi}, got {rank}")


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def cartan_matrix(family: str, rank: int) -> CartanMatrix:
    """Cartan matrix with entry[i][j] = <alpha_i, alpha_j^v> = 2(a_i,a_j)/(a_j,a_j).

    The node numbering per family is fixed (Bourbaki) so that, e.g., B2 has
    alpha_1 long (highest root a1+2a2), G2 has alpha_1 short (highest root
    3a1+2a2) and F4 has highest root 2a1+3a2+4a3+2a4.
    """
    validate_family_rank(family, rank)
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        m[i][j] = ij
        m[j][i] = ji

    if family in ("A", "B", "C", "D"):
        for i, j in _chain_edges(rank if family != "D" else rank - 1):
            link(i, j)
        if family == "B":
            m[rank - 2][rank - 1] = -2  # alpha_rank is the short root
        elif family == "C":
            m[rank - 1][rank - 2] = -2  # alpha_rank is the long root
        elif family == "D":
            link(rank - 3, rank - 1)
    elif family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: rank - 2]:
            link(i, j)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, ij=-2)  # alpha_3, alpha_4 short
        link(2, 3)
    else:  # G
        link(0, 1, ji=-3)  # alpha_1 short
    return tuple(tuple(row) for row in m)


def _check_dimensions(root: Root, j: int, cartan: CartanMatrix) -> None:
    rank = len(cartan)
    if len(root) != rank:
        raise InvalidInputError(
            f"root has length {len(root)}, Cartan matrix has rank {rank}"
        )
    if not 0 <= j < rank:
        raise InvalidInputError(f"simple-root index {j} out of range 0..{rank - 1}")


def coroot_pairing(root: Root, j: int, cartan: CartanMatrix) -> int:
    """Pairing <root, alpha_j^v>, extended linearly from the Cartan matrix."""
    _check_dimensions(root, j, cartan)
    return sum(c * cartan[i][j] for i, c in enumerate(root))


def reflect_simple(root: Root, j: int, cartan: CartanMatrix) -> Root:
    """Simple reflection root - <root, alpha_j^v> * alpha_j.

    The result may have negative entries (e.g. reflecting alpha_j itself);
    callers that want positive roots filter on the pairing sign.
    """
    k = coroot_pairing(root, j, cartan)
    return tuple(c - k if i == j else c for i, c in enumerate(root))


def root_height(root: Root) -> int:
    """Sum of the coefficients over the simple roots."""
    return sum(root)


def root_sort_key(root: Root) -> tuple:
    """Canonical order: by height, then coefficient vectors in descending lex."""
    return (sum(root), tuple(-c for c in root))


def generate_positive_roots(cartan: CartanMatrix) -> tuple[Root, ...]:
    """All positive roots of the system with the given Cartan matrix.

    Starts from the simple roots and repeatedly reflects every newly found
    root r by each simple root it pairs negatively with; such a reflection
    adds a positive multiple of a simple root, so the procedure climbs in
    height and terminates.  The result is deduplicated and canonically
    sorted.
    """
    rank = len(cartan)
    for i, row in enumerate(cartan):
        if len(row) != rank or row[i] != 2:
            raise InvalidInputError("malformed Cartan matrix: bad shape or diagonal")
        for j, a in enumerate(row):
            if i != j and (a > 0 or a < -3 or (a == 0) != (cartan[j][i] == 0)):
                raise InvalidInputError("malformed Cartan matrix: bad off-diagonal entry")

    simple = [tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)]
    found: set[Root] = set(simple)
    frontier: list[Root] = list(simple)
    while frontier:
        fresh: list[Root] = []
        for r in frontier:
            for j in range(rank):
                if coroot_pairing(r, j, cartan) < 0:
                    s = reflect_simple(r, j, cartan)
                    if s not in found:
                        found.add(s)
                        fresh.append(s)
        frontier = fresh
    return tuple(sorted(found, key=root_sort_key))


def _add(left: Root, right: Root) -> Root:
    return tuple(a + b for a, b in zip(left, right))


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system together with lookup tables for fast queries.

    ``positive_roots`` is in canonical order; ``simple_roots`` are the unit
    vectors in index order.  The private fields are derived lookup structures:
    ``_position`` maps a root to its index in canonical order, ``_up_masks[g]``
    is the bitmask (over canonical indices) of roots of the form
    ``positive_roots[g] + alpha_j``, and ``_sum_masks[g]`` the bitmask of
    roots h with ``positive_roots[g] + positive_roots[h]`` again a root.
    """

    family: str
    rank: int
    cartan: CartanMatrix
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    _position: dict[Root, int] = field(compare=False, repr=False)
    _up_masks: tuple[int, ...] = field(compare=False, repr=False)
    _sum_masks: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.positive_roots)) - 1

    def index_of(self, root: Root) -> int:
        """Canonical index of a positive root; raises for non-roots."""
        try:
            return self._position[root]
        except KeyError:
            raise InvalidInputError(f"not a positive root of {self.family}{self.rank}: {root}") from None


def root_system(family: str, rank: int) -> RootSystem:
    """Build the root system for a simple type, validating its structure."""
    cm = cartan_matrix(family, rank)
    positive = generate_positive_roots(cm)
    simple = tuple(tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank))
    position = {r: g for g, r in enumerate(positive)}

    top_height = max(root_height(r) for r in positive)
    maximal = [r for r in positive if root_height(r) == top_height]
    unextendable = [
        r for r in positive if all(_add(r, a) not in position for a in simple)
    ]
    if len(maximal) != 1 or unextendable != maximal:
        raise StructuralError(
            f"{family}{rank}: highest root is not unique; generated system is not irreducible"
        )

    up_masks = []
    sum_masks = []
    for r in positive:
        up = 0
        for a in simple:
            s = position.get(_add(r, a))
            if s is not None:
                up |= 1 << s
        up_masks.append(up)
        total = 0
        for h, other in enumerate(positive):
            if _add(r, other) in position:
                total |= 1 << h
        sum_masks.append(total)

    return RootSystem(
        family=family,
        rank=rank,
        cartan=cm,
        simple_roots=simple,
        positive_roots=positive,
        highest_root=maximal[0],
        _position=position,
        _up_masks=tuple(up_masks),
        _sum_masks=tuple(sum_masks),
    )


def is_root(candidate: Root, rs: RootSystem) -> bool:
    """Whether ``candidate`` is a positive root of ``rs`` (O(1) lookup)."""
    if len(candidate) != rs.rank:
        raise InvalidInputError(
            f"root has length {len(candidate)}, system has rank {rs.rank}"
        )
    return candidate in rs._position


def root_ascii(root: Root, unicode_alpha: bool = False) -> str:
    """Render a coefficient vector as "a1+2a2" (coefficient 1 and zero terms elided)."""
    sym = "α" if unicode_alpha else "a"
    parts = []
    for i, c in enumerate(root):
        if c == 0:
            continue
        parts.append(f"{sym}{i + 1}" if c == 1 else f"{c}{sym}{i + 1}")
    return "+".join(parts) if parts else "0"


def root_vector_str(root: Root) -> str:
    """Render a coefficient vector in raw form, e.g. "[1,2]"."""
    return "[" + ",".join(str(c) for c in root) + "]"


def dynkin_description(rs: RootSystem, unicode_alpha: bool = False) -> str:
    """One-line description of the Dynkin diagram, e.g. "B2: a1=2>a2".

    Single edges render as "-"; double and triple edges as "=2>"/"=3>" with
    the arrow pointing at the short root.
    """
    sym = "α" if unicode_alpha else "a"
    edges = []
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            a_ij, a_ji = rs.cartan[i][j], rs.cartan[j][i]
            if a_ij == 0:
                continue
            m = max(-a_ij, -a_ji)
            if m == 1:
                link = "-"
            elif -a_ij == m:
                link = f"={m}>"  # alpha_j short
            else:
                link = f"<{m}="  # alpha_i short
            edges.append(f"{sym}{i + 1}{link}{sym}{j + 1}")
    label = f"{rs.family}{rs.rank}"
    if not edges:
        return f"{label}: {sym}1"
    return f"{label}: " + ", ".join(edges)
