"""Cycle taxonomy, forests, line graphs, and structural linear-type tests.

Ordered facet cycles come in three nested flavors: extended trails
(consecutive facets meet, all listed facets have empty common
intersection), special cycles (each consecutive intersection owns a
vertex private to that pair among the listed facets), and simplicial
cycles (non-consecutive facets are disjoint).  Complexes without a
simplicial cycle are forests; forests peel by good leaves.  The line
graph and its even cycles drive a cheap sufficient test for the facet
ideal being of linear type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import Complex, Subcollection, intersection_graph
from .walks import WalkPair, enumerate_even_walks

LINEAR_TYPE = "LINEAR_TYPE"
INCONCLUSIVE = "INCONCLUSIVE"

REASON_FOREST = "FOREST"
REASON_NO_EVEN_CYCLE = "NO_EVEN_CYCLE_IN_LINE_GRAPH"
REASON_NO_WALK_UP_TO = "NO_EVEN_WALK_UP_TO"
REASON_NONE = "NONE"


@dataclass(frozen=True)
class CycleOrder:
    """An ordered list of at least three distinct facet indices, read
    cyclically."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) < 3:
            raise ValueError("cycle orders need at least three facets")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("cycle orders may not repeat facets")

    def to_list(self) -> list[int]:
        return list(self.indices)


def _ordered_facets(c: Complex, o: CycleOrder):
    return [c.facet(i) for i in o.indices]


def is_extended_trail_order(c: Complex, o: CycleOrder) -> bool:
    """Consecutive facets (cyclically) intersect and the intersection of
    all listed facets is empty."""
    fs = _ordered_facets(c, o)
    if frozenset.intersection(*fs):
        return False
    n = len(fs)
    return all(fs[k] & fs[(k + 1) % n] for k in range(n))


def is_special_cycle_order(c: Complex, o: CycleOrder) -> bool:
    """Extended trail where each consecutive intersection has a vertex
    lying in no other listed facet."""
    if not is_extended_trail_order(c, o):
        return False
    fs = _ordered_facets(c, o)
    n = len(fs)
    for k in range(n):
        others = [fs[m] for m in range(n) if m not in (k, (k + 1) % n)]
        shared = fs[k] & fs[(k + 1) % n]
        if others and shared <= frozenset().union(*others):
            return False
    return True


def is_simplicial_cycle_order(c: Complex, o: CycleOrder) -> bool:
    """Extended trail where non-consecutive listed facets are disjoint."""
    if not is_extended_trail_order(c, o):
        return False
    fs = _ordered_facets(c, o)
    n = len(fs)
    for k in range(n):
        for m in range(k + 2, n):
            if k == 0 and m == n - 1:
                continue
            if fs[k] & fs[m]:
                return False
    return True


def exists_simplicial_cycle(
    target: Complex | Subcollection, max_support: int
) -> tuple[Subcollection, CycleOrder] | None:
    """Search supports of size 3..max_support, in colex order, for a
    subcollection whose intersection graph is a single cycle with empty
    total intersection.  The returned order starts at the smallest index
    and proceeds toward its smaller neighbor."""
    if max_support < 3:
        raise ValueError("max_support must be at least 3")
    sub = target if isinstance(target, Subcollection) else target.full_subcollection()
    c = sub.parent
    pool = sub.sorted_indices()
    for size in range(3, min(max_support, len(pool)) + 1):
        for combo in sorted(combinations(pool, size), key=lambda t: t[::-1]):
            adj = intersection_graph(c, combo)
            if any(len(adj[i]) != 2 for i in combo):
                continue
            order = _cycle_order_from_adjacency(adj, combo)
            if order is None:
                continue
            if frozenset.intersection(*(c.facet(i) for i in combo)):
                continue
            return c.subcollection(combo), CycleOrder(tuple(order))
    return None


def _cycle_order_from_adjacency(adj, combo) -> list[int] | None:
    start = min(combo)
    order = [start, min(adj[start])]
    while True:
        nxt = [n for n in adj[order[-1]] if n != order[-2]]
        if order[-1] == start and len(order) > 1:
            break
        order.append(nxt[0])
        if order[-1] == start:
            order.pop()
            break
        if len(order) > len(combo):
            return None
    return order if len(order) == len(combo) else None


def good_leaf(target: Complex | Subcollection) -> int | None:
    """Smallest facet index whose intersections with all facets of the
    collection form a chain under inclusion."""
    sub = target if isinstance(target, Subcollection) else target.full_subcollection()
    c = sub.parent
    idx = sub.sorted_indices()
    for i in idx:
        fi = c.facet(i)
        sections = {fi & c.facet(h) for h in idx}
        chain = sorted(sections, key=len)
        if all(a <= b for a, b in zip(chain, chain[1:])):
            return i
    return None


@dataclass(frozen=True)
class ForestCertificate:
    """Decision plus evidence: a simplicial cycle when not a forest, or a
    good-leaf peeling order when one exists.  ``peel_blocked_at`` records
    the leafless remainder in the anomalous case where the cycle search
    finds nothing but peeling still sticks (possible only when some
    subcollection's facets share a common vertex)."""

    is_forest: bool
    cycle: CycleOrder | None = None
    peeling: tuple[int, ...] | None = None
    peel_blocked_at: frozenset[int] | None = None


def is_forest(c: Complex) -> ForestCertificate:
    """Forest decision by exhaustive simplicial-cycle search; good-leaf
    peeling supplies the positive certificate."""
    found = exists_simplicial_cycle(c, c.q) if c.q >= 3 else None
    if found is not None:
        return ForestCertificate(False, cycle=found[1])
    order: list[int] = []
    remaining = set(range(1, c.q + 1))
    while remaining:
        leaf = good_leaf(c.subcollection(remaining))
        if leaf is None:
            return ForestCertificate(True, peel_blocked_at=frozenset(remaining))
        order.append(leaf)
        remaining.discard(leaf)
    return ForestCertificate(True, peeling=tuple(order))


@dataclass(frozen=True)
class LineGraph:
    """Facet indices as nodes, adjacency by nonempty intersection."""

    nodes: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {n: [] for n in self.nodes}
        for e in self.edges:
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        return {n: sorted(nbs) for n, nbs in adj.items()}


def line_graph(c: Complex) -> LineGraph:
    edges = set()
    for i in range(1, c.q + 1):
        for j in range(i + 1, c.q + 1):
            if c.facet(i) & c.facet(j):
                edges.add(frozenset((i, j)))
    return LineGraph(tuple(range(1, c.q + 1)), frozenset(edges))


def _biconnected_blocks(adj: dict[int, list[int]]) -> list[set[frozenset[int]]]:
    """Edge sets of the biconnected components, iterative lowlink DFS."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[set[frozenset[int]]] = []
    counter = 0
    edge_stack: list[frozenset[int]] = []
    for root in sorted(adj):
        if root in disc:
            continue
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        while stack:
            node, parent, ptr = stack.pop()
            if ptr == 0:
                disc[node] = low[node] = counter
                counter += 1
            advanced = False
            neighbors = adj[node]
            while ptr < len(neighbors):
                nb = neighbors[ptr]
                ptr += 1
                if nb not in disc:
                    edge_stack.append(frozenset((node, nb)))
                    stack.append((node, parent, ptr))
                    stack.append((nb, node, 0))
                    advanced = True
                    break
                if nb != parent and disc[nb] < disc[node]:
                    edge_stack.append(frozenset((node, nb)))
                    low[node] = min(low[node], disc[nb])
            if advanced:
                continue
            if parent is not None:
                low[parent] = min(low[parent], low[node])
                if low[node] >= disc[parent]:
                    block: set[frozenset[int]] = set()
                    pivot = frozenset((parent, node))
                    while edge_stack:
                        e = edge_stack.pop()
                        block.add(e)
                        if e == pivot:
                            break
                    if block:
                        blocks.append(block)
    return blocks


def _walk_simple_cycle(badj: dict[int, list[int]]) -> list[int]:
    start = min(badj)
    order = [start, min(badj[start])]
    while True:
        nxt = [n for n in badj[order[-1]] if n != order[-2]][0]
        if nxt == start:
            return order
        order.append(nxt)


def _dfs_find_cycle(badj: dict[int, list[int]]) -> list[int]:
    start = min(badj)
    parent: dict[int, int | None] = {start: None}
    stack = [start]
    order_seen = []
    while stack:
        node = stack.pop()
        order_seen.append(node)
        for nb in badj[node]:
            if nb not in parent:
                parent[nb] = node
                stack.append(nb)
            elif parent[node] != nb:
                # back or cross edge closes a cycle through common ancestry
                path_a, path_b = [node], [nb]
                seen_a = {node}
                cur = node
                while parent[cur] is not None:
                    cur = parent[cur]
                    path_a.append(cur)
                    seen_a.add(cur)
                cur = nb
                while cur not in seen_a:
                    cur = parent[cur]
                    path_b.append(cur)
                meet = path_b[-1]
                cyc = path_a[: path_a.index(meet) + 1] + path_b[-2::-1]
                if len(cyc) >= 3:
                    return cyc
    raise AssertionError("no cycle in a block with more edges than a tree")


def _find_ear(badj, cycle: list[int]) -> tuple[int, list[int]]:
    """A path u, w, ..., v with u, v distinct cycle nodes, the interior
    disjoint from the cycle, and the first edge outside the cycle."""
    on_cycle = set(cycle)
    n = len(cycle)
    cyc_edges = {frozenset((cycle[k], cycle[(k + 1) % n])) for k in range(n)}
    for u in cycle:
        for w in badj[u]:
            if frozenset((u, w)) in cyc_edges:
                continue
            if w in on_cycle:
                return u, [u, w]
            parent = {w: None}
            queue = [w]
            while queue:
                node = queue.pop(0)
                for nb in badj[node]:
                    if nb == u or nb in parent:
                        continue
                    if nb in on_cycle:
                        path = [nb, node]
                        cur = node
                        while parent[cur] is not None:
                            cur = parent[cur]
                            path.append(cur)
                        path.append(u)
                        return u, path[::-1]
                    parent[nb] = node
                    queue.append(nb)
    raise AssertionError("block is 2-connected and larger than its cycle; ear must exist")


def graph_has_even_cycle(g: LineGraph) -> list[int] | None:
    """An even cycle of the graph, or None.

    A graph has no even cycle exactly when every biconnected block is a
    single edge or an odd simple cycle.  In a violating block an even
    cycle is produced constructively: either the block is an even simple
    cycle, or an ear splits a cycle into three cycles whose lengths sum
    to an even number, so one of them is even.
    """
    adj = g.adjacency()
    for block in sorted(_biconnected_blocks(adj), key=lambda b: sorted(map(sorted, b))):
        if len(block) == 1:
            continue
        nodes = sorted({v for e in block for v in e})
        badj: dict[int, list[int]] = {v: [] for v in nodes}
        for e in block:
            a, b = sorted(e)
            badj[a].append(b)
            badj[b].append(a)
        badj = {v: sorted(nbs) for v, nbs in badj.items()}
        if all(len(nbs) == 2 for nbs in badj.values()):
            if len(block) % 2 == 0:
                return _walk_simple_cycle(badj)
            continue
        cycle = _dfs_find_cycle(badj)
        if len(cycle) % 2 == 0:
            return cycle
        u, ear = _find_ear(badj, cycle)
        v = ear[-1]
        p = len(ear) - 1
        pu, pv = cycle.index(u), cycle.index(v)
        arc_a = (pv - pu) % len(cycle)
        if (arc_a + p) % 2 == 0:
            arc = [cycle[(pu + k) % len(cycle)] for k in range(arc_a + 1)]
        else:
            arc = [cycle[(pv + k) % len(cycle)] for k in range(len(cycle) - arc_a + 1)]
            ear = ear[::-1]
        even_cycle = arc + ear[-2:0:-1]
        assert len(even_cycle) % 2 == 0 and len(set(even_cycle)) == len(even_cycle)
        return even_cycle
    return None


@dataclass(frozen=True)
class LinearTypeCertificate:
    """Outcome of the structural tests.

    LINEAR_TYPE is only issued for unconditionally sound reasons (a peeled
    forest, or a line graph without even cycles).  A walk search that comes
    back empty below ``s_max`` stays INCONCLUSIVE because longer walks may
    exist; a found walk is attached as evidence but is never a disproof.
    """

    verdict: str
    reason: str
    s_max: int | None = None
    evidence_walk: WalkPair | None = None
    evidence_cycle: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        if self.evidence_walk is not None:
            evidence = {"type": "even_walk", **self.evidence_walk.to_json()}
        elif self.evidence_cycle is not None:
            evidence = {"type": "line_graph_even_cycle", "nodes": list(self.evidence_cycle)}
        else:
            evidence = None
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "s_max": self.s_max,
            "evidence": evidence,
        }


def linear_type_structural(c: Complex, s_max: int) -> LinearTypeCertificate:
    """Apply the structural tests in cost order: forest, line-graph even
    cycles, then even-walk enumeration up to ``s_max``.

    The forest reason additionally requires the good-leaf peeling to have
    completed: a peeled complex can carry no even walk of any length (the
    first peeled walk facet would be a good leaf of the walk's own
    subcollection), whereas a bare cycle-free verdict can be fooled by
    collections whose facets share a vertex.
    """
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    fc = is_forest(c)
    if fc.is_forest and fc.peeling is not None:
        return LinearTypeCertificate(LINEAR_TYPE, REASON_FOREST)
    cyc = graph_has_even_cycle(line_graph(c))
    if cyc is None:
        return LinearTypeCertificate(LINEAR_TYPE, REASON_NO_EVEN_CYCLE)
    walks = enumerate_even_walks(c, s_max)
    if walks.walks:
        return LinearTypeCertificate(
            INCONCLUSIVE, REASON_NONE, s_max=s_max, evidence_walk=walks.walks[0]
        )
    return LinearTypeCertificate(
        INCONCLUSIVE, REASON_NO_WALK_UP_TO, s_max=s_max, evidence_cycle=tuple(cyc)
    )
