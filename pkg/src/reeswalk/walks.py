"""The simplicial even-walk predicate, enumeration, and graph specialization.

A walk pair (alpha, beta) of equal-length index tuples with disjoint
supports describes the alternating facet sequence
F_{i_1}, F_{j_1}, ..., F_{i_s}, F_{j_s}.  The pair is an even walk when no
difference set F_i \\ F_j is swallowed by the region where one side's
vertex degrees strictly dominate the other's.  Rejections carry a witness
(i, j, side) naming the first violated inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, combinations_with_replacement

from .complexes import Complex, Facet, is_connected
from .errors import (
    DisconnectedWalk,
    IndexOutOfRange,
    InvalidWalkPair,
    LimitExceeded,
    NotAGraph,
    NotAnEvenWalk,
)
from .monomials import IndexTuple, degree_table, tuple_monomial
from . import complexes


@dataclass(frozen=True)
class WalkPair:
    """Equal-length index tuples with disjoint supports, s >= 2."""

    alpha: IndexTuple
    beta: IndexTuple

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise InvalidWalkPair(
                f"tuple lengths differ: {len(self.alpha)} != {len(self.beta)}"
            )
        if len(self.alpha) < 2:
            raise InvalidWalkPair("walk pairs need length >= 2")
        overlap = self.alpha.support & self.beta.support
        if overlap:
            raise InvalidWalkPair(f"supports overlap at {sorted(overlap)}")

    @property
    def s(self) -> int:
        return len(self.alpha)

    def support_union(self) -> frozenset[int]:
        return self.alpha.support | self.beta.support

    def sequence(self) -> list[int]:
        """Interleaved facet indices i_1, j_1, ..., i_s, j_s."""
        out = []
        for a, b in zip(self.alpha.indices, self.beta.indices):
            out.extend((a, b))
        return out

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_list(), "beta": self.beta.to_list()}


class Side(Enum):
    ALPHA_SIDE = "ALPHA_SIDE"
    BETA_SIDE = "BETA_SIDE"


@dataclass(frozen=True)
class Witness:
    """First violated inclusion: ALPHA_SIDE means F_i \\ F_j lies inside the
    alpha-dominant region, BETA_SIDE means F_j \\ F_i lies inside the
    beta-dominant region."""

    i: int
    j: int
    side: Side

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "side": self.side.value}


@dataclass(frozen=True)
class WalkVerdict:
    is_even_walk: bool
    witness: Witness | None = None

    def __post_init__(self):
        assert (self.witness is None) == self.is_even_walk

    def __bool__(self) -> bool:
        return self.is_even_walk

    def to_json(self) -> dict:
        return {
            "is_even_walk": self.is_even_walk,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _find_violation(
    facets: dict[int, Facet],
    deg_a: dict[str, int],
    deg_b: dict[str, int],
    sup_a,
    sup_b,
) -> Witness | None:
    # First violating (i, j) in lexicographic order; per pair the alpha-side
    # inclusion is tested before the beta-side one.
    for i in sup_a:
        fi = facets[i]
        for j in sup_b:
            fj = facets[j]
            if all(deg_a.get(x, 0) > deg_b.get(x, 0) for x in fi - fj):
                return Witness(i, j, Side.ALPHA_SIDE)
            if all(deg_a.get(x, 0) < deg_b.get(x, 0) for x in fj - fi):
                return Witness(i, j, Side.BETA_SIDE)
    return None


def is_even_walk(c: Complex, w: WalkPair) -> WalkVerdict:
    """Decide the even-walk conditions for every (i, j) support pair."""
    for i in w.support_union():
        if not 1 <= i <= c.q:
            raise IndexOutOfRange(i, c.q)
    facets = {i: c.facet(i) for i in w.support_union()}
    deg_a = degree_table(c, w.alpha)
    deg_b = degree_table(c, w.beta)
    witness = _find_violation(
        facets, deg_a, deg_b, sorted(w.alpha.support), sorted(w.beta.support)
    )
    return WalkVerdict(witness is None, witness)


def support_neighbor_filter(c: Complex, w: WalkPair) -> bool:
    """Necessary condition: every alpha-facet meets at least two distinct
    beta-facets, and symmetrically.  Used as a cheap prefilter."""
    sup_a, sup_b = w.alpha.support, w.beta.support
    for i in sup_a:
        fi = c.facet(i)
        if sum(1 for j in sup_b if fi & c.facet(j)) < 2:
            return False
    for j in sup_b:
        fj = c.facet(j)
        if sum(1 for i in sup_a if fj & c.facet(i)) < 2:
            return False
    return True


@dataclass
class EnumerationResult:
    walks: list[WalkPair] = field(default_factory=list)
    truncated: bool = False

    def __iter__(self):
        return iter(self.walks)

    def __len__(self):
        return len(self.walks)


def enumerate_even_walks(
    c: Complex,
    s_max: int,
    *,
    connected_only: bool = False,
    distinct_facets_only: bool = False,
    limit: int | None = None,
) -> EnumerationResult:
    """All even walks with 2 <= s <= s_max, one representative per
    unordered pair: the side containing the smallest facet index is alpha.

    Results are ordered by (s, alpha, beta) lexicographically and the list
    is cut off at ``limit`` with the ``truncated`` flag set.
    """
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    if limit is not None and limit <= 0:
        raise LimitExceeded("limit must be positive when given")

    q = c.q
    facets = {i: c.facet(i) for i in range(1, q + 1)}
    meets = {
        (i, j): bool(facets[i] & facets[j])
        for i in range(1, q + 1)
        for j in range(1, q + 1)
    }
    conn_memo: dict[frozenset[int], bool] = {}
    result = EnumerationResult()

    for s in range(2, s_max + 1):
        gen = combinations if distinct_facets_only else combinations_with_replacement
        tuples = [tuple(t) for t in gen(range(1, q + 1), s)]
        info = []
        for t in tuples:
            sup = frozenset(t)
            deg: dict[str, int] = {}
            for i in t:
                for v in facets[i]:
                    deg[v] = deg.get(v, 0) + 1
            info.append((t, sup, deg))
        for ta, sup_a, deg_a in info:
            for tb, sup_b, deg_b in info:
                if sup_a & sup_b or min(sup_a) > min(sup_b):
                    continue
                ok = True
                for i in sup_a:
                    if sum(1 for j in sup_b if meets[i, j]) < 2:
                        ok = False
                        break
                if ok:
                    for j in sup_b:
                        if sum(1 for i in sup_a if meets[i, j]) < 2:
                            ok = False
                            break
                if not ok:
                    continue
                if connected_only:
                    union = sup_a | sup_b
                    if union not in conn_memo:
                        conn_memo[union] = is_connected(c.subcollection(union))
                    if not conn_memo[union]:
                        continue
                if _find_violation(facets, deg_a, deg_b, sorted(sup_a), sorted(sup_b)):
                    continue
                if limit is not None and len(result.walks) >= limit:
                    result.truncated = True
                    return result
                result.walks.append(WalkPair(IndexTuple(ta), IndexTuple(tb)))
    return result


def extract_even_extended_trail(c: Complex, w: WalkPair) -> list[int]:
    """Alternating facet sequence of even length >= 4 inside the walk:
    distinct indices, odd positions from alpha's support, even positions
    from beta's, cyclically consecutive facets intersecting.

    Built by the greedy alternating pick (smallest eligible index each
    step, cut at the first repetition), then canonicalized to the
    lexicographically least rotation/reflection that starts on the alpha
    side.
    """
    verdict = is_even_walk(c, w)
    if not verdict:
        raise NotAnEvenWalk(f"walk pair rejected with witness {verdict.witness}")

    facets = {i: c.facet(i) for i in w.support_union()}
    sup = {Side.ALPHA_SIDE: sorted(w.alpha.support), Side.BETA_SIDE: sorted(w.beta.support)}
    side_of = {i: Side.ALPHA_SIDE for i in w.alpha.support}
    side_of.update({j: Side.BETA_SIDE for j in w.beta.support})

    u1 = sup[Side.ALPHA_SIDE][0]
    neighbors = [j for j in sup[Side.BETA_SIDE] if facets[u1] & facets[j]]
    assert len(neighbors) >= 2, "neighbor guarantee failed on an even walk"
    seq = [neighbors[0], u1, neighbors[1]]
    while True:
        prev, cur = seq[-2], seq[-1]
        opposite = (
            sup[Side.BETA_SIDE] if side_of[cur] is Side.ALPHA_SIDE else sup[Side.ALPHA_SIDE]
        )
        nxt = None
        for cand in opposite:
            if cand != prev and facets[cur] & facets[cand]:
                nxt = cand
                break
        assert nxt is not None, "alternating pick got stuck on an even walk"
        if nxt in seq[:-1]:
            start = seq.index(nxt)
            cycle = seq[start:]
            break
        seq.append(nxt)

    assert len(cycle) % 2 == 0 and len(cycle) >= 4
    return _canonical_alternating(cycle, side_of)


def _canonical_alternating(cycle: list[int], side_of) -> list[int]:
    n = len(cycle)
    candidates = []
    for direction in (cycle, [cycle[0]] + cycle[:0:-1]):
        for off in range(n):
            rot = direction[off:] + direction[:off]
            if side_of[rot[0]] is Side.ALPHA_SIDE:
                candidates.append(rot)
    return min(candidates)


def is_minimal_even_walk(c: Complex, w: WalkPair, s_max: int | None = None) -> bool:
    """True when no proper sub-multiset pair (same side assignment) is
    itself an even walk.  ``s_max`` optionally caps the sub-walk length
    searched; by default every length down to 2 is tried."""
    if not is_even_walk(c, w):
        raise NotAnEvenWalk("minimality is only defined for even walks")
    top = min(w.s - 1, s_max) if s_max is not None else w.s - 1
    for s_sub in range(2, top + 1):
        subs_a = sorted({t for t in combinations(w.alpha.indices, s_sub)})
        subs_b = sorted({t for t in combinations(w.beta.indices, s_sub)})
        for ta in subs_a:
            for tb in subs_b:
                sub = WalkPair(IndexTuple(ta), IndexTuple(tb))
                if is_even_walk(c, sub):
                    return False
    return True


def graph_closed_even_walk_check(c: Complex, w: WalkPair) -> bool:
    """On 1-dimensional complexes a connected walk pair is an even walk
    exactly when the two edge products coincide; this evaluates the
    monomial-equality side of that equivalence."""
    if complexes.dimension(c) != 1:
        raise NotAGraph(complexes.dimension(c))
    if not is_connected(c.subcollection(w.support_union())):
        raise DisconnectedWalk(f"walk facets {sorted(w.support_union())} do not connect")
    return tuple_monomial(c, w.alpha) == tuple_monomial(c, w.beta)
