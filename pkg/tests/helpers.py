"""Shared oracles and builders for the test suite.

The oracles here are deliberately independent of the library internals:
union-find for connectivity, DFS path enumeration for simple cycles, and
brute-force order generation for the cycle taxonomy.
"""

from __future__ import annotations

import random
from itertools import permutations

from hypothesis import strategies as st

from reeswalk import families
from reeswalk.complexes import Complex, validate


def union_find_connected(c: Complex, indices) -> bool:
    idx = sorted(indices)
    parent = {i: i for i in idx}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in idx:
        for b in idx:
            if a < b and c.facet(a) & c.facet(b):
                parent[find(a)] = find(b)
    return len({find(a) for a in idx}) == 1


def brute_force_simple_cycles(adj: dict[int, list[int]]) -> list[list[int]]:
    """All simple cycles, one representative per rotation/reflection:
    smallest node first, second node smaller than the last."""
    cycles = []

    def extend(path: list[int]):
        last = path[-1]
        for nb in adj[last]:
            if nb == path[0] and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(list(path))
            elif nb > path[0] and nb not in path:
                path.append(nb)
                extend(path)
                path.pop()

    for start in sorted(adj):
        extend([start])
    return cycles


def brute_force_has_even_cycle(adj: dict[int, list[int]]) -> bool:
    return any(len(c) % 2 == 0 for c in brute_force_simple_cycles(adj))


def canonical_cycle_orders(indices):
    """Every cyclic order of the index set up to rotation and reflection."""
    idx = sorted(indices)
    first = idx[0]
    for perm in permutations(idx[1:]):
        if len(perm) < 2 or perm[0] < perm[-1]:
            yield (first,) + perm


def edge_adjacency(edges: list[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return {n: sorted(v) for n, v in adj.items()}


# hypothesis strategies ----------------------------------------------------

_POOL = ("a", "b", "c", "d", "e", "f", "g")


@st.composite
def small_complexes(draw, max_q: int = 5, max_size: int = 3):
    raw = draw(
        st.lists(
            st.sets(st.sampled_from(_POOL), min_size=1, max_size=max_size),
            min_size=1,
            max_size=max_q,
        )
    )
    keep: list[frozenset] = []
    for f in raw:
        fz = frozenset(f)
        if any(fz <= g or g <= fz for g in keep):
            continue
        keep.append(fz)
    return validate([sorted(f) for f in keep])


_VERTS = tuple(f"v{k}" for k in range(1, 7))
_ALL_EDGES = tuple(
    (_VERTS[a], _VERTS[b]) for a in range(len(_VERTS)) for b in range(a + 1, len(_VERTS))
)


@st.composite
def small_graphs(draw, min_edges: int = 2, max_edges: int = 8):
    edges = draw(
        st.lists(st.sampled_from(_ALL_EDGES), unique=True, min_size=min_edges, max_size=max_edges)
    )
    return families.graph_complex(edges)


# deterministic corpora ----------------------------------------------------


def named_family_corpus() -> list[Complex]:
    return [
        families.path_graph(3),
        families.path_graph(5),
        families.cycle_graph(3),
        families.cycle_graph(4),
        families.cycle_graph(5),
        families.cycle_graph(6),
        families.bowtie(),
        families.dumbbell(),
        families.triangle_necklace(),
        families.scrambled_even_cycle(),
    ]


def forest_corpus(n: int, seed: int = 11) -> list[Complex]:
    rng = random.Random(seed)
    return [families.random_forest(rng) for _ in range(n)]


def special_cycle_corpus(n: int, seed: int = 13) -> list[Complex]:
    rng = random.Random(seed)
    lengths = [4, 6, 8]
    return [families.random_special_cycle(rng, lengths[k % 3]) for k in range(n)]


def random_complex_corpus(n: int, seed: int = 17) -> list[Complex]:
    rng = random.Random(seed)
    return [families.random_complex(rng) for _ in range(n)]
