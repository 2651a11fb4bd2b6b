"""Ready-made complexes and seeded random generators.

Used by the test suite and the survey scripts.  Graphs are built as
1-dimensional complexes whose facets are the edges, in the order given.
"""

from __future__ import annotations

import random
from typing import Sequence

from .complexes import Complex, validate


def graph_complex(edges: Sequence[tuple[str, str]]) -> Complex:
    return validate([[a, b] for a, b in edges])


def path_graph(n_edges: int) -> Complex:
    """Edges v1-v2-...; a tree for every length."""
    return graph_complex([(f"v{k}", f"v{k+1}") for k in range(1, n_edges + 1)])


def cycle_graph(n: int) -> Complex:
    if n < 3:
        raise ValueError("cycles need at least three edges")
    edges = [(f"v{k}", f"v{k % n + 1}") for k in range(1, n + 1)]
    return graph_complex(edges)


def bowtie() -> Complex:
    """Two triangles sharing the single vertex v."""
    return graph_complex(
        [("a", "b"), ("b", "v"), ("v", "a"), ("v", "c"), ("c", "d"), ("d", "v")]
    )


def dumbbell() -> Complex:
    """Two triangles joined by a bridge edge; closed walks over both
    triangles must traverse the bridge twice."""
    return graph_complex(
        [
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "d"),
        ]
    )


def triangle_necklace() -> Complex:
    """Six triangles in a band; the alternating index pair
    (1,3,5)/(2,4,6) is an even walk of this complex."""
    return validate(
        [
            ["x4", "x7", "a3"],
            ["x4", "x5", "a1"],
            ["x5", "x6", "a2"],
            ["x2", "x3", "a2"],
            ["x1", "x2", "a1"],
            ["x6", "x7", "a1"],
        ]
    )


def cone_over_cycle(n: int) -> Complex:
    """Triangles z-v_k-v_{k+1} around a cycle: every facet contains z, so
    the facet monomials share the common factor z."""
    return validate(
        [["z", f"v{k}", f"v{k % n + 1}"] for k in range(1, n + 1)]
    )


def scrambled_even_cycle() -> Complex:
    """An eight-edge cycle with its facet numbering permuted so that the
    alternating pair (1,3,5,7)/(2,4,6,8) is an even walk while the listed
    order is not an extended trail (facets 4 and 5 are disjoint)."""
    g = [(f"v{k}", f"v{k % 8 + 1}") for k in range(1, 9)]
    order = [1, 2, 3, 4, 7, 6, 5, 8]
    return graph_complex([g[i - 1] for i in order])


def random_forest(rng: random.Random, max_facets: int = 7, max_size: int = 4) -> Complex:
    """Leaf-attachment growth with a rejection step.

    Every new facet meets the complex built so far inside a proper subset
    of one existing facet, plus fresh vertices.  Attachment alone does not
    rule out cycles (three leaves of one anchor can pairwise meet through
    different anchor vertices), so candidates containing a simplicial
    cycle are rebuilt."""
    from .structure import exists_simplicial_cycle

    counter = [0]

    def fresh() -> str:
        counter[0] += 1
        return f"w{counter[0]}"

    while True:
        first_size = rng.randint(1, max_size)
        facets: list[list[str]] = [[fresh() for _ in range(first_size)]]
        q = rng.randint(1, max_facets)
        while len(facets) < q:
            anchor = rng.choice(facets)
            overlap_max = min(len(anchor) - 1, max_size - 1)
            take = rng.randint(0, max(0, overlap_max))
            old_part = rng.sample(anchor, take)
            new_count = rng.randint(1, max_size - take)
            facets.append(old_part + [fresh() for _ in range(new_count)])
        c = validate(facets)
        if c.q < 3 or exists_simplicial_cycle(c, c.q) is None:
            return c


def random_special_cycle(
    rng: random.Random, length: int, max_size: int = 4
) -> Complex:
    """A facet cycle of the given (even) length where each consecutive pair
    shares a hinge vertex private to that pair; extra vertices may be
    shared across non-consecutive facets, which special cycles allow."""
    if length < 3:
        raise ValueError("cycles need at least three facets")
    hinges = [f"h{k}" for k in range(length)]
    shared_pool = [f"s{k}" for k in range(3)]
    while True:
        facets: list[list[str]] = []
        for k in range(length):
            facet = [hinges[k - 1], hinges[k]]
            room = max_size - len(facet)
            for _ in range(rng.randint(0, room)):
                if rng.random() < 0.3:
                    facet.append(rng.choice(shared_pool))
                else:
                    facet.append(f"p{k}_{rng.randint(0, 9)}")
            facets.append(sorted(set(facet)))
        # a pool vertex drawn into every facet would break the
        # empty-total-intersection requirement; redraw in that case
        if not frozenset.intersection(*(frozenset(f) for f in facets)):
            return validate(facets)


def random_complex(
    rng: random.Random, max_q: int = 5, n_vertices: int = 7, max_size: int = 3
) -> Complex:
    """Random incomparable facet family over a small vertex pool,
    normalized so that no vertex lies in every facet."""
    pool = [f"v{k}" for k in range(1, n_vertices + 1)]
    q = rng.randint(2, max_q)
    while True:
        facets: list[frozenset[str]] = []
        guard = 0
        while len(facets) < q and guard < 200:
            guard += 1
            size = rng.randint(1, max_size)
            cand = frozenset(rng.sample(pool, size))
            if any(cand <= f or f <= cand for f in facets):
                continue
            facets.append(cand)
        if len(facets) < q:
            continue
        if frozenset.intersection(*facets):
            continue
        return validate([sorted(f) for f in facets])


def random_graph(
    rng: random.Random, n_vertices: int = 6, max_edges: int = 8
) -> Complex:
    all_edges = [
        (f"v{a}", f"v{b}")
        for a in range(1, n_vertices + 1)
        for b in range(a + 1, n_vertices + 1)
    ]
    m = rng.randint(2, min(max_edges, len(all_edges)))
    return graph_complex(rng.sample(all_edges, m))
