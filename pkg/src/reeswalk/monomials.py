"""Exact monomial arithmetic for facet ideals.

Monomials are sparse exponent maps over vertex labels.  The module covers
facet generators, products over index tuples, per-vertex degree counts,
the pure-difference binomials attached to a pair of index tuples, and the
normalization that divides all generators by their common factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import Complex
from .errors import IndexOutOfRange, LengthMismatch, UnknownVertex


@dataclass(frozen=True)
class Monomial:
    """Sparse exponent map; ``exps`` is label-sorted with exponents > 0."""

    exps: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        labels = [v for v, _ in self.exps]
        if labels != sorted(labels) or len(set(labels)) != len(labels):
            raise ValueError("exponent tuple must be sorted with unique labels")
        if any(e <= 0 for _, e in self.exps):
            raise ValueError("exponents must be positive")

    @staticmethod
    def unit() -> "Monomial":
        return Monomial(())

    @staticmethod
    def from_map(mapping: Mapping[str, int]) -> "Monomial":
        return Monomial(tuple(sorted((v, e) for v, e in mapping.items() if e)))

    @staticmethod
    def squarefree(labels: Iterable[str]) -> "Monomial":
        return Monomial(tuple((v, 1) for v in sorted(set(labels))))

    @staticmethod
    def product(factors: Iterable["Monomial"]) -> "Monomial":
        acc: dict[str, int] = {}
        for m in factors:
            for v, e in m.exps:
                acc[v] = acc.get(v, 0) + e
        return Monomial.from_map(acc)

    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    def exponent(self, label: str) -> int:
        return dict(self.exps).get(label, 0)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.exps)

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def is_unit(self) -> bool:
        return not self.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.product((self, other))

    def divides(self, other: "Monomial") -> bool:
        oth = dict(other.exps)
        return all(e <= oth.get(v, 0) for v, e in self.exps)

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """Exact quotient self / divisor; raises if not divisible."""
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        acc = dict(self.exps)
        for v, e in divisor.exps:
            acc[v] -= e
        return Monomial.from_map(acc)

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] = max(acc.get(v, 0), e)
        return Monomial.from_map(acc)

    def gcd(self, other: "Monomial") -> "Monomial":
        oth = dict(other.exps)
        return Monomial.from_map({v: min(e, oth.get(v, 0)) for v, e in self.exps})

    def coprime(self, other: "Monomial") -> bool:
        return not (self.support & other.support)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)


@dataclass(frozen=True)
class IndexTuple:
    """A nondecreasing tuple of 1-based facet indices (a multiset)."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("index tuple must be nonempty")
        if any(i < 1 for i in self.indices):
            raise ValueError("facet indices are 1-based")
        if any(a > b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be nondecreasing")

    @staticmethod
    def of(*indices: int) -> "IndexTuple":
        return IndexTuple(tuple(sorted(indices)))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.indices)

    def multiplicity(self, i: int) -> int:
        return self.indices.count(i)

    def without_one(self, value: int) -> "IndexTuple":
        """Drop one occurrence of ``value``."""
        pos = self.indices.index(value)
        return IndexTuple(self.indices[:pos] + self.indices[pos + 1 :])

    def replace_one(self, value: int, new: int) -> "IndexTuple":
        """Swap one occurrence of ``value`` for ``new`` (re-sorted)."""
        pos = self.indices.index(value)
        return IndexTuple.of(*(self.indices[:pos] + (new,) + self.indices[pos + 1 :]))

    def to_list(self) -> list[int]:
        return list(self.indices)


def facet_monomial(c: Complex, i: int) -> Monomial:
    """Squarefree generator of F_i: the product of its vertices."""
    return Monomial.squarefree(c.facet(i))


def _check_range(c: Complex, t: IndexTuple) -> None:
    for i in t.indices:
        if not 1 <= i <= c.q:
            raise IndexOutOfRange(i, c.q)


def tuple_monomial(c: Complex, t: IndexTuple) -> Monomial:
    """Product of facet monomials over the tuple, with multiplicity."""
    _check_range(c, t)
    return Monomial.product(facet_monomial(c, i) for i in t.indices)


def degree_table(c: Complex, t: IndexTuple) -> dict[str, int]:
    """Vertex -> number of facets of the tuple containing it (with multiplicity)."""
    _check_range(c, t)
    table: dict[str, int] = {}
    for i in t.indices:
        for v in c.facet(i):
            table[v] = table.get(v, 0) + 1
    return table


def alpha_degree(c: Complex, t: IndexTuple, x: str) -> int:
    """Exponent of vertex ``x`` in the tuple's monomial."""
    if x not in c.vertex_universe:
        raise UnknownVertex(x)
    return degree_table(c, t).get(x, 0)


@dataclass(frozen=True)
class TaylorBinomial:
    """The pure-difference binomial  coeff_alpha*T_alpha - coeff_beta*T_beta.

    The cofactors come from dividing the lcm of the two tuple monomials by
    each side, so they are always coprime.  When alpha == beta the binomial
    is identically zero as a polynomial but remains representable.
    """

    coeff_alpha: Monomial
    alpha: IndexTuple
    coeff_beta: Monomial
    beta: IndexTuple

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise LengthMismatch(len(self.alpha), len(self.beta))
        assert self.coeff_alpha.coprime(self.coeff_beta)

    @property
    def is_zero(self) -> bool:
        return self.alpha.indices == self.beta.indices

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        left = _term_text(self.coeff_alpha, self.alpha)
        right = _term_text(self.coeff_beta, self.beta)
        return f"{left} - {right}"


def _term_text(coeff: Monomial, t: IndexTuple) -> str:
    # x-part with larger labels first, then T-factors in index order
    parts = [v if e == 1 else f"{v}^{e}" for v, e in sorted(coeff.exps, reverse=True)]
    seen: list[int] = []
    for i in t.indices:
        if i not in seen:
            seen.append(i)
            e = t.multiplicity(i)
            parts.append(f"T{i}" if e == 1 else f"T{i}^{e}")
    return "*".join(parts) if parts else "1"


def taylor_binomial_gens(
    generators: Sequence[Monomial], alpha: IndexTuple, beta: IndexTuple
) -> TaylorBinomial:
    """Binomial of a pair of tuples over an explicit generator list."""
    if len(alpha) != len(beta):
        raise LengthMismatch(len(alpha), len(beta))
    q = len(generators)
    for i in list(alpha.indices) + list(beta.indices):
        if not 1 <= i <= q:
            raise IndexOutOfRange(i, q)
    f_alpha = Monomial.product(generators[i - 1] for i in alpha.indices)
    f_beta = Monomial.product(generators[i - 1] for i in beta.indices)
    big = f_alpha.lcm(f_beta)
    return TaylorBinomial(big.quotient(f_alpha), alpha, big.quotient(f_beta), beta)


def taylor_binomial(c: Complex, alpha: IndexTuple, beta: IndexTuple) -> TaylorBinomial:
    """Binomial of a tuple pair over the complex's facet generators.

    Computed as (lcm/f_alpha, lcm/f_beta); the equivalent per-vertex
    degree-difference form is evaluated too and the two must agree.
    """
    if len(alpha) != len(beta):
        raise LengthMismatch(len(alpha), len(beta))
    _check_range(c, alpha)
    _check_range(c, beta)
    tb = taylor_binomial_gens([facet_monomial(c, i) for i in range(1, c.q + 1)], alpha, beta)
    deg_a = degree_table(c, alpha)
    deg_b = degree_table(c, beta)
    by_degrees_a = Monomial.from_map(
        {v: deg_b[v] - deg_a.get(v, 0) for v in deg_b if deg_b[v] > deg_a.get(v, 0)}
    )
    by_degrees_b = Monomial.from_map(
        {v: deg_a[v] - deg_b.get(v, 0) for v in deg_a if deg_a[v] > deg_b.get(v, 0)}
    )
    assert (tb.coeff_alpha, tb.coeff_beta) == (by_degrees_a, by_degrees_b)
    return tb


def gcd_normalize(generators: Sequence[Monomial]) -> list[Monomial]:
    """Divide every generator by the gcd of the whole list.

    The binomials of any tuple pair are unchanged by this, so the ideal's
    defining equations survive the normalization intact.
    """
    if not generators:
        raise ValueError("generator list must be nonempty")
    common = generators[0]
    for g in generators[1:]:
        common = common.gcd(g)
    return [g.quotient(common) for g in generators]
