"""Incidence-structure data model for finite hypergraphs.

Vertices are the integers 0..n-1.  Edges are nonempty vertex sets, stored
as bitmasks so intersection and membership queries are single integer
operations (the supported capacity is n <= 128, m <= 512, but nothing
breaks beyond it).  Values are immutable after construction and every
function here is pure, so shared instances are safe across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateEdge, EmptyEdge, VertexOutOfRange


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Hypergraph:
    """A simple hypergraph on labelled vertices 0..n-1.

    Edge order is part of the representation but carries no meaning; two
    hypergraphs are equal iff they have the same n and the same edge set.
    Vertices outside every edge (degree 0) are legal.
    """

    __slots__ = ("n", "edge_masks", "_degrees")

    def __init__(self, n: int, edge_masks: Sequence[int]):
        self.n = n
        self.edge_masks = tuple(edge_masks)
        self._degrees = None

    @property
    def m(self) -> int:
        return len(self.edge_masks)

    @property
    def edges(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(vertices_of(e)) for e in self.edge_masks)

    def edge_lists(self) -> list[tuple[int, ...]]:
        return [vertices_of(e) for e in self.edge_masks]

    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            deg = [0] * self.n
            for e in self.edge_masks:
                for v in vertices_of(e):
                    deg[v] += 1
            self._degrees = tuple(deg)
        return self._degrees

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and sorted(self.edge_masks) == sorted(other.edge_masks)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.edge_masks))))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m})"


def make_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and build a hypergraph from explicit vertex sets.

    Raises EmptyEdge, VertexOutOfRange or DuplicateEdge on bad input.
    """
    masks = []
    seen = set()
    for i, edge in enumerate(edges):
        vs = set(edge)
        if not vs:
            raise EmptyEdge(f"edge {i} is empty")
        for v in vs:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"edge {i} uses vertex {v}, but n={n}")
        mk = mask_of(vs)
        if mk in seen:
            raise DuplicateEdge(f"edge {i} repeats an earlier edge {sorted(vs)}")
        seen.add(mk)
        masks.append(mk)
    return Hypergraph(n, masks)


def from_masks(n: int, masks: Sequence[int]) -> Hypergraph:
    """Fast unvalidated constructor for internal callers."""
    return Hypergraph(n, masks)


def is_uniform(h: Hypergraph, r: int) -> bool:
    """True iff every edge has exactly r vertices (vacuously true if m=0)."""
    return all(e.bit_count() == r for e in h.edge_masks)


def uniformity(h: Hypergraph) -> int | None:
    """Common edge size, or None if edges differ in size or there are none."""
    sizes = {e.bit_count() for e in h.edge_masks}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def is_t_intersecting(h: Hypergraph, t: int) -> bool:
    """True iff every unordered pair of distinct edges shares >= t vertices.

    t=1 is plain "intersecting".  Vacuously true with fewer than 2 edges.
    """
    ms = h.edge_masks
    for i in range(len(ms)):
        a = ms[i]
        for j in range(i + 1, len(ms)):
            if (a & ms[j]).bit_count() < t:
                return False
    return True


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex edge-membership counts."""

    degrees: tuple[int, ...]

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.degrees else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    @property
    def total(self) -> int:
        return sum(self.degrees)


def degree_profile(h: Hypergraph) -> DegreeProfile:
    return DegreeProfile(h.degrees())


@dataclass(frozen=True)
class IntersectionProfile:
    """Pairwise intersection sizes over all unordered edge pairs."""

    sizes: tuple[int, ...]  # pairs (i, j), i < j, in lexicographic order

    @property
    def t_min(self) -> int:
        return min(self.sizes) if self.sizes else 0

    @property
    def t_max(self) -> int:
        return max(self.sizes) if self.sizes else 0


def intersection_profile(h: Hypergraph) -> IntersectionProfile:
    ms = h.edge_masks
    sizes = []
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            sizes.append((ms[i] & ms[j]).bit_count())
    return IntersectionProfile(tuple(sizes))


def pair_count_feasible(profile: DegreeProfile, m: int, t: int) -> bool:
    """Double-counting test: sum_v d(d-1) >= t*m*(m-1).

    An ordered pair of distinct t-intersecting edges is counted at each of
    its >= t shared vertices, so the inequality is necessary for any
    t-intersecting hypergraph with these degrees.  Used to reject degree
    profiles and prune generation.
    """
    if m < 0 or t < 1:
        raise ValueError("need m >= 0 and t >= 1")
    return sum(d * (d - 1) for d in profile.degrees) >= t * m * (m - 1)


def degree_force_bound(r: int, m: int) -> int:
    """Smallest max-degree compatible with a 2-intersecting r-uniform
    hypergraph on m edges: k+2 for the largest k with (k/2)*r + 1 < m,
    or 2 when no such k >= 0 exists.

    Proof sketch: each of the other m-1 edges contributes >= 2 to the sum
    of degrees over a fixed edge, so r/2 extra edges raise the average
    degree on it by 1.
    """
    if r < 2 or m < 1:
        raise ValueError("need r >= 2 and m >= 1")
    # largest k with k*r < 2*(m-1), i.e. k*r <= 2m-3
    if 2 * m - 3 < 0:
        return 2
    k = (2 * m - 3) // r
    return max(2, k + 2)
