"""Polygon dissections: parsing, cells, quiddities, dihedral action.

A dissection of a convex N-gon is a set of pairwise non-crossing
diagonals (chords).  Vertices are labeled 0..N-1 counterclockwise and
every chord is stored as a pair (i, j) with i < j, the chord list
sorted lexicographically, so equal dissections have equal
representations.

The quiddity of a dissection is the length-N vector whose i-th entry
counts the cells touching vertex i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DomainError(ValueError):
    """Invalid input to a library operation."""


class ParseError(DomainError):
    """Malformed dissection text."""


class ResourceLimitError(DomainError):
    """A computation was refused because it exceeds a configured cap."""


Chord = tuple[int, int]


def _chords_cross(a: Chord, b: Chord) -> bool:
    # Both chords have sorted endpoints.  Chords sharing an endpoint
    # never cross; otherwise they cross iff exactly one endpoint of b
    # lies strictly inside the span of a.
    (p, q), (r, s) = a, b
    if len({p, q, r, s}) < 4:
        return False
    return (p < r < q) != (p < s < q)


@dataclass(frozen=True)
class Dissection:
    """A convex polygon together with a non-crossing set of diagonals."""

    n_vertices: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        n = self.n_vertices
        if n < 3:
            raise DomainError(f"polygon needs at least 3 vertices, got {n}")
        normalized = []
        for i, j in self.chords:
            if i > j:
                i, j = j, i
            if not (0 <= i < j <= n - 1):
                raise DomainError(f"chord {i}-{j} out of range for an {n}-gon")
            if j - i < 2 or (i, j) == (0, n - 1):
                raise DomainError(f"chord {i}-{j} is a polygon edge, not a diagonal")
            normalized.append((i, j))
        normalized.sort()
        for k in range(1, len(normalized)):
            if normalized[k] == normalized[k - 1]:
                i, j = normalized[k]
                raise DomainError(f"duplicate chord {i}-{j}")
        for k, a in enumerate(normalized):
            for b in normalized[k + 1:]:
                if _chords_cross(a, b):
                    raise DomainError(
                        f"chords {a[0]}-{a[1]} and {b[0]}-{b[1]} cross"
                    )
        object.__setattr__(self, "chords", tuple(normalized))

    def __str__(self) -> str:
        return format_dissection(self)

    def chord_degree(self, vertex: int) -> int:
        return sum(1 for c in self.chords if vertex in c)


@dataclass(frozen=True)
class Cell:
    """One sub-polygon of a dissection.

    ``vertices`` is the counterclockwise boundary cycle, rotated to
    start at the smallest vertex label.
    """

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Boundary edges as directed pairs, in counterclockwise order."""
        v = self.vertices
        for k in range(len(v)):
            yield v[k], v[(k + 1) % len(v)]


@dataclass(frozen=True)
class CellList:
    """All cells of a dissection plus the dual-tree adjacency.

    ``dual_edges`` holds one entry per chord: the two cell indices on
    either side of it, with the shared chord.
    """

    cells: tuple[Cell, ...]
    dual_edges: tuple[tuple[int, int, Chord], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.cells)

    def neighbors(self) -> dict[int, list[tuple[int, Chord]]]:
        adj: dict[int, list[tuple[int, Chord]]] = {i: [] for i in range(len(self.cells))}
        for a, b, chord in self.dual_edges:
            adj[a].append((b, chord))
            adj[b].append((a, chord))
        return adj


@dataclass(frozen=True)
class Quiddity:
    """Cell-contact counts per vertex, as an N-tuple."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 1 for e in self.entries):
            raise DomainError("quiddity entries must be positive")

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_dissection(text: str) -> Dissection:
    """Parse ``N:i-j,k-l,...`` into a canonical :class:`Dissection`.

    Chord order (and endpoint order within a chord) in the input is
    irrelevant; the result is always canonical, so formatting a parsed
    string and re-parsing is the identity.
    """
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"missing ':' in dissection text {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad vertex count {head!r}") from None
    chords = []
    if rest:
        for token in rest.split(","):
            parts = token.split("-")
            if len(parts) != 2:
                raise ParseError(f"bad chord token {token!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"bad chord token {token!r}") from None
            chords.append((i, j))
    try:
        return Dissection(n, tuple(chords))
    except ParseError:
        raise
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_dissection(d: Dissection) -> str:
    """Canonical text form: ``N:`` plus lexicographically sorted chords."""
    return f"{d.n_vertices}:" + ",".join(f"{i}-{j}" for i, j in d.chords)


def _rotation_order(n: int, v: int, nbrs: list[int]) -> list[int]:
    # With vertices in convex position, the counterclockwise rotational
    # order of neighbors around v is by increasing (u - v) mod n.
    return sorted(nbrs, key=lambda u: (u - v) % n)


def cells(d: Dissection) -> CellList:
    """Extract all cells and the dual tree of a dissection.

    Walks the faces of the planar graph given by the polygon edges and
    chords.  With vertices in convex position the rotation system is
    purely combinatorial, so no geometry is needed: around vertex v the
    neighbors appear counterclockwise in order of (u - v) mod N.
    """
    n = d.n_vertices
    nbrs: dict[int, list[int]] = {v: [] for v in range(n)}
    for v in range(n):
        nbrs[v].append((v + 1) % n)
        nbrs[(v + 1) % n].append(v)
    for i, j in d.chords:
        nbrs[i].append(j)
        nbrs[j].append(i)
    order = {v: _rotation_order(n, v, us) for v, us in nbrs.items()}
    index = {v: {u: k for k, u in enumerate(us)} for v, us in order.items()}

    def successor(u: int, v: int) -> tuple[int, int]:
        # Next directed edge of the face lying left of u -> v: turn to
        # the counterclockwise predecessor of u around v.
        us = order[v]
        return v, us[index[v][u] - 1]

    seen: set[tuple[int, int]] = set()
    face_of_dart: dict[tuple[int, int], int] = {}
    raw_faces: list[list[int]] = []
    darts = [(u, v) for v, us in order.items() for u in us]
    for dart in darts:
        if dart in seen:
            continue
        cycle: list[int] = []
        cur = dart
        while cur not in seen:
            seen.add(cur)
            face_of_dart[cur] = len(raw_faces)
            cycle.append(cur[0])
            cur = successor(*cur)
        raw_faces.append(cycle)

    # The outer face traverses the polygon clockwise, so it is the one
    # containing the directed edge 0 -> (n-1).
    outer = face_of_dart[(0, n - 1)]

    keyed = []
    for idx, cycle in enumerate(raw_faces):
        if idx == outer:
            continue
        start = cycle.index(min(cycle))
        rotated = tuple(cycle[start:] + cycle[:start])
        keyed.append((rotated[0], len(rotated), rotated, idx))
    keyed.sort()
    cell_tuple = tuple(Cell(rot) for _, _, rot, _ in keyed)
    new_index = {old: new for new, (_, _, _, old) in enumerate(keyed)}

    dual = []
    for i, j in d.chords:
        a = new_index[face_of_dart[(i, j)]]
        b = new_index[face_of_dart[(j, i)]]
        dual.append((min(a, b), max(a, b), (i, j)))
    return CellList(cell_tuple, tuple(dual))


def quiddity(d: Dissection) -> Quiddity:
    """Cell-contact count of every vertex.

    Computed two independent ways (cell membership and chord degree)
    and cross-checked on every call; a mismatch means a bug in the cell
    extraction and raises immediately.
    """
    n = d.n_vertices
    by_membership = [0] * n
    for cell in cells(d).cells:
        for v in cell.vertices:
            by_membership[v] += 1
    by_degree = [1 + d.chord_degree(v) for v in range(n)]
    if by_membership != by_degree:
        raise AssertionError(
            f"quiddity self-check failed for {d}: {by_membership} vs {by_degree}"
        )
    return Quiddity(tuple(by_membership))


def cell_size_profile(d: Dissection) -> tuple[int, ...]:
    """Multiset of cell sizes, as a sorted tuple."""
    return tuple(sorted(cells(d).sizes()))


def is_ell_periodic(d: Dissection, ell: int) -> bool:
    """True iff every cell size is congruent to 3 mod ``ell``."""
    if ell < 1:
        raise DomainError(f"period must be at least 1, got {ell}")
    return all(s % ell == 3 % ell for s in cell_size_profile(d))


def is_size_restricted(d: Dissection, sizes: Iterable[int]) -> bool:
    """True iff every cell size belongs to ``sizes``."""
    allowed = set(sizes)
    return all(s in allowed for s in cell_size_profile(d))


def dihedral_transform(d: Dissection, rotation: int, reflected: bool = False) -> Dissection:
    """Relabel vertices by i -> i + rotation (mod N), optionally
    precomposed with the reflection i -> -i (mod N)."""
    n = d.n_vertices

    def image(v: int) -> int:
        return ((-v if reflected else v) + rotation) % n

    return Dissection(n, tuple((image(i), image(j)) for i, j in d.chords))


def dihedral_orbit(d: Dissection) -> set[Dissection]:
    """All 2N dihedral relabelings of a dissection (as a set)."""
    return {
        dihedral_transform(d, r, f)
        for r in range(d.n_vertices)
        for f in (False, True)
    }
