"""Simplicial complexes presented by their facet lists.

A complex is stored the way one writes it down: an ordered list of facets
F_1..F_q over named vertices, with 1-based facet indices used everywhere.
Vertex labels are opaque strings; no meaning is attached to subscripts.
Facets must be pairwise incomparable, so ``validate`` is the front door:
it either returns a well-formed :class:`Complex` or raises an error that
names the offending facet positions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateFacet,
    EmptyFacet,
    IndexOutOfRange,
    InvalidVertexLabel,
    NonMaximalFacet,
)

log = logging.getLogger(__name__)

Facet = frozenset[str]


@dataclass(frozen=True)
class Complex:
    """An ordered, pairwise-incomparable facet list.

    Instances are immutable and hashable; all queries are read-only, so a
    complex can be shared freely across concurrent tasks.
    """

    facets: tuple[Facet, ...]

    @property
    def q(self) -> int:
        return len(self.facets)

    @cached_property
    def vertex_universe(self) -> frozenset[str]:
        return frozenset().union(*self.facets)

    def facet(self, i: int) -> Facet:
        """Facet F_i, 1-based."""
        if not 1 <= i <= self.q:
            raise IndexOutOfRange(i, self.q)
        return self.facets[i - 1]

    def serialize(self) -> dict:
        """JSON-ready form; round-trips through :func:`validate`."""
        return {"facets": [sorted(f) for f in self.facets]}

    def subcollection(self, indices: Iterable[int]) -> "Subcollection":
        return Subcollection(self, frozenset(indices))

    def full_subcollection(self) -> "Subcollection":
        return Subcollection(self, frozenset(range(1, self.q + 1)))


@dataclass(frozen=True)
class Subcollection:
    """A nonempty subset of a complex's facets, referenced by index."""

    parent: Complex
    indices: frozenset[int]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("subcollection must contain at least one facet")
        for i in self.indices:
            if not 1 <= i <= self.parent.q:
                raise IndexOutOfRange(i, self.parent.q)

    def sorted_indices(self) -> list[int]:
        return sorted(self.indices)

    def facet_items(self) -> list[tuple[int, Facet]]:
        return [(i, self.parent.facet(i)) for i in self.sorted_indices()]

    def vertex_set(self) -> frozenset[str]:
        return frozenset().union(*(self.parent.facet(i) for i in self.indices))


def validate(
    raw_facets: Sequence[Sequence[str]], prune_nonmaximal: bool = False
) -> Complex:
    """Build a :class:`Complex` from raw facet lists, input order preserved.

    Repeated vertices inside one facet are collapsed (facets are sets).
    Identical facets raise :class:`DuplicateFacet` and a facet contained in
    another raises :class:`NonMaximalFacet`; with ``prune_nonmaximal`` both
    are dropped instead and a warning records the removed positions.
    """
    if not raw_facets:
        raise EmptyFacet(None)

    cleaned: list[Facet] = []
    for pos, raw in enumerate(raw_facets, start=1):
        if not raw:
            raise EmptyFacet(pos)
        for label in raw:
            if not isinstance(label, str) or not label:
                raise InvalidVertexLabel(label, pos)
        cleaned.append(frozenset(raw))

    keep = [True] * len(cleaned)
    for j, fj in enumerate(cleaned):
        for i, fi in enumerate(cleaned):
            if i == j or not keep[i]:
                continue
            if fj == fi:
                if i < j:
                    if prune_nonmaximal:
                        keep[j] = False
                    else:
                        raise DuplicateFacet(j + 1, i + 1)
            elif fj < fi:
                if prune_nonmaximal:
                    keep[j] = False
                else:
                    raise NonMaximalFacet(j + 1, i + 1)

    if prune_nonmaximal and not all(keep):
        dropped = [pos + 1 for pos, k in enumerate(keep) if not k]
        log.warning("pruned non-maximal or duplicate facets at positions %s", dropped)

    facets = tuple(f for f, k in zip(cleaned, keep) if k)
    if not facets:
        raise EmptyFacet(None)
    return Complex(facets)


def dimension(c: Complex) -> int:
    """Largest facet cardinality minus one."""
    return max(len(f) for f in c.facets) - 1


def intersection_graph(c: Complex, indices: Iterable[int]) -> dict[int, list[int]]:
    """Adjacency (sorted) among the given facet indices: F_i ~ F_j iff they meet."""
    idx = sorted(set(indices))
    adj: dict[int, list[int]] = {i: [] for i in idx}
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            if c.facet(i) & c.facet(j):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def is_connected(s: Subcollection | Complex) -> bool:
    """Connectivity of the facet-intersection graph of a subcollection."""
    if isinstance(s, Complex):
        s = s.full_subcollection()
    adj = intersection_graph(s.parent, s.indices)
    nodes = s.sorted_indices()
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(nodes)
