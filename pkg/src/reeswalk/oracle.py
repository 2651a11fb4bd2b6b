"""Exact symbolic layer: polynomials in the vertex variables and one
T-variable per facet, Buchberger bases, membership tests, and the
constructive rewriting of reducible relations.

Coefficients are exact rationals.  The monomial order is
degree-reverse-lexicographic over the combined variable list with every
T-variable greater than every x-variable; within the blocks T_1 > T_2 > ...
and x-variables follow sorted label order.  All inputs here are plus/minus
pure-difference binomials, and S-polynomials and reductions of binomials
stay binomial, which keeps the desk-scale runs quick.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .complexes import Complex
from .errors import (
    HypothesisNotMet,
    IdentityCheckFailed,
    InvalidWalkPair,
    IsAnEvenWalk,
    LengthMismatch,
    OrderMismatch,
    ResourceLimit,
)
from .monomials import (
    IndexTuple,
    Monomial,
    TaylorBinomial,
    facet_monomial,
    taylor_binomial,
    tuple_monomial,
)
from .walks import Side, WalkPair, Witness, is_even_walk

DEFAULT_MAX_PAIRS = 100_000
DEFAULT_MAX_DEGREE = 20


class ReesRing:
    """Variable bookkeeping: T_1..T_q first, then x-variables by label."""

    def __init__(self, q: int, labels: Iterable[str]):
        self.q = q
        self.labels = tuple(sorted(set(labels)))
        self.nvars = q + len(self.labels)
        self._label_pos = {v: q + k for k, v in enumerate(self.labels)}

    def __eq__(self, other):
        return (
            isinstance(other, ReesRing)
            and self.q == other.q
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.q, self.labels))

    @property
    def order_tag(self) -> str:
        return f"grevlex[T1..T{self.q} > x{list(self.labels)}]"

    def key(self, exps: tuple[int, ...]):
        # grevlex: higher total degree wins; ties go to whichever monomial
        # has the smaller exponent at the least significant end.
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def exps(self, x: Monomial = Monomial.unit(), t: Iterable[int] | Mapping[int, int] = ()) -> tuple[int, ...]:
        vec = [0] * self.nvars
        if isinstance(t, Mapping):
            items = t.items()
        else:
            counts: dict[int, int] = {}
            for i in t:
                counts[i] = counts.get(i, 0) + 1
            items = counts.items()
        for i, e in items:
            if not 1 <= i <= self.q:
                raise ValueError(f"T index {i} outside 1..{self.q}")
            vec[i - 1] += e
        for v, e in x.exps:
            if v not in self._label_pos:
                raise ValueError(f"unknown vertex label {v!r}")
            vec[self._label_pos[v]] += e
        return tuple(vec)

    def split(self, exps: tuple[int, ...]) -> "SymMonomial":
        t_part = tuple((i + 1, e) for i, e in enumerate(exps[: self.q]) if e)
        x_part = tuple(
            (self.labels[k], e) for k, e in enumerate(exps[self.q :]) if e
        )
        return SymMonomial(x_part, t_part)

    def zero(self) -> "SymPolynomial":
        return SymPolynomial(self, {})

    def term(
        self,
        x: Monomial = Monomial.unit(),
        t: Iterable[int] | Mapping[int, int] = (),
        scalar: int | Fraction = 1,
    ) -> "SymPolynomial":
        if scalar == 0:
            return self.zero()
        return SymPolynomial(self, {self.exps(x, t): Fraction(scalar)})


@dataclass(frozen=True)
class SymMonomial:
    """A single monomial split into its x-part and T-part."""

    x_exps: tuple[tuple[str, int], ...]
    t_exps: tuple[tuple[int, int], ...]

    @property
    def x_part(self) -> Monomial:
        return Monomial(self.x_exps)

    @property
    def t_part(self) -> dict[int, int]:
        return dict(self.t_exps)

    def __str__(self) -> str:
        parts = [v if e == 1 else f"{v}^{e}" for v, e in sorted(self.x_exps, reverse=True)]
        parts += [f"T{i}" if e == 1 else f"T{i}^{e}" for i, e in self.t_exps]
        return "*".join(parts) if parts else "1"


def _add_into(acc: dict, exps: tuple[int, ...], coeff: Fraction) -> None:
    new = acc.get(exps, Fraction(0)) + coeff
    if new:
        acc[exps] = new
    else:
        acc.pop(exps, None)


class SymPolynomial:
    """Sparse exact-coefficient polynomial; treat instances as immutable."""

    __slots__ = ("ring", "_terms", "_lead")

    def __init__(self, ring: ReesRing, terms: dict):
        self.ring = ring
        self._terms = {m: Fraction(c) for m, c in terms.items() if c}
        self._lead = None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def lead(self) -> tuple[tuple[int, ...], Fraction]:
        if self._lead is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self._terms, key=self.ring.key)
            self._lead = (m, self._terms[m])
        return self._lead

    def lead_degree(self) -> int:
        return sum(self.lead()[0])

    def monic(self) -> "SymPolynomial":
        lc = self.lead()[1]
        if lc == 1:
            return self
        return SymPolynomial(self.ring, {m: c / lc for m, c in self._terms.items()})

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _add_into(acc, m, c)
        return SymPolynomial(self.ring, acc)

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _add_into(acc, m, -c)
        return SymPolynomial(self.ring, acc)

    def __neg__(self) -> "SymPolynomial":
        return SymPolynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPolynomial(self.ring, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                _add_into(acc, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return SymPolynomial(self.ring, acc)

    __rmul__ = __mul__

    def mul_term(self, exps: tuple[int, ...], coeff: Fraction) -> "SymPolynomial":
        return SymPolynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, exps)): c * coeff for m, c in self._terms.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, SymPolynomial)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def canonical(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    def terms(self) -> list[tuple[SymMonomial, Fraction]]:
        """Terms in descending monomial order."""
        order = sorted(self._terms, key=self.ring.key, reverse=True)
        return [(self.ring.split(m), self._terms[m]) for m in order]

    def render(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self.terms():
            mag = abs(coeff)
            body = str(mono)
            if mag != 1:
                body = f"{mag}*{body}" if body != "1" else str(mag)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<SymPolynomial {self.render()}>"

    def _check(self, other: "SymPolynomial") -> None:
        if self.ring != other.ring:
            raise OrderMismatch("polynomials belong to different rings")


@lru_cache(maxsize=256)
def rees_ring(c: Complex) -> ReesRing:
    return ReesRing(c.q, c.vertex_universe)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _normal_form_terms(ring: ReesRing, terms: dict, basis: Sequence[SymPolynomial]) -> dict:
    leads = [(g.lead()[0], g) for g in basis]
    p = dict(terms)
    remainder: dict = {}
    while p:
        lm = max(p, key=ring.key)
        lc = p[lm]
        for glm, g in leads:
            if _divides(glm, lm):
                shift = _sub(lm, glm)
                for m, cg in g._terms.items():
                    _add_into(p, tuple(a + b for a, b in zip(m, shift)), -lc * cg)
                break
        else:
            remainder[lm] = lc
            del p[lm]
    return remainder


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic, inter-reduced generators sorted by leading
    monomial.  Reduced bases are unique for a fixed order, so equal ideals
    give byte-identical output."""

    ring: ReesRing
    generators: tuple[SymPolynomial, ...]
    order_tag: str

    def __len__(self):
        return len(self.generators)

    def self_check(self) -> bool:
        """Every S-polynomial of basis pairs reduces to zero."""
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                s = _s_polynomial(gens[i], gens[j])
                if _normal_form_terms(self.ring, s._terms, gens):
                    return False
        return True


def _s_polynomial(f: SymPolynomial, g: SymPolynomial) -> SymPolynomial:
    lf, cf = f.lead()
    lg, cg = g.lead()
    big = _lcm(lf, lg)
    return f.mul_term(_sub(big, lf), 1 / cf) - g.mul_term(_sub(big, lg), 1 / cg)


def groebner(
    gens: Sequence[SymPolynomial],
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> GroebnerBasis:
    """Buchberger with the normal (lowest lcm degree first) strategy and
    the coprime-leading-term criterion.  Exceeding the pair-queue or
    degree cap raises :class:`ResourceLimit` rather than guessing."""
    if not gens:
        raise ValueError("generator list must be nonempty")
    ring = gens[0].ring
    basis: list[SymPolynomial] = []
    seen = set()
    for g in gens:
        if g.ring != ring:
            raise OrderMismatch("mixed rings in generator list")
        if g.is_zero():
            continue
        gm = g.monic()
        key = gm.canonical()
        if key not in seen:
            seen.add(key)
            basis.append(gm)
    if not basis:
        return GroebnerBasis(ring, (), ring.order_tag)

    queue: list[tuple[int, int, int]] = []
    for i in range(len(basis)):
        for j in range(i):
            heapq.heappush(queue, (sum(_lcm(basis[i].lead()[0], basis[j].lead()[0])), j, i))

    while queue:
        if len(queue) > max_pairs:
            raise ResourceLimit("pair queue", max_pairs)
        _, i, j = heapq.heappop(queue)
        li, lj = basis[i].lead()[0], basis[j].lead()[0]
        if _lcm(li, lj) == tuple(a + b for a, b in zip(li, lj)):
            continue  # coprime leading terms always reduce to zero
        s = _s_polynomial(basis[i], basis[j])
        rem = _normal_form_terms(ring, s._terms, basis)
        if not rem:
            continue
        new = SymPolynomial(ring, rem).monic()
        if new.lead_degree() > max_degree:
            raise ResourceLimit("total degree", max_degree)
        basis.append(new)
        k = len(basis) - 1
        for idx in range(k):
            heapq.heappush(queue, (sum(_lcm(basis[idx].lead()[0], new.lead()[0])), idx, k))

    return GroebnerBasis(ring, tuple(_inter_reduce(ring, basis)), ring.order_tag)


def _inter_reduce(ring: ReesRing, basis: list[SymPolynomial]) -> list[SymPolynomial]:
    ordered = sorted(basis, key=lambda g: ring.key(g.lead()[0]))
    minimal: list[SymPolynomial] = []
    for g in ordered:
        if not any(_divides(h.lead()[0], g.lead()[0]) for h in minimal):
            minimal.append(g)
    while True:
        changed = False
        nxt: list[SymPolynomial] = []
        for k, g in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1 :]
            rem = _normal_form_terms(ring, g._terms, others) if others else dict(g._terms)
            red = SymPolynomial(ring, rem).monic()
            if red._terms != g._terms:
                changed = True
            nxt.append(red)
        minimal = sorted(nxt, key=lambda g: ring.key(g.lead()[0]))
        if not changed:
            return minimal


def normal_form(p: SymPolynomial, gb: GroebnerBasis) -> SymPolynomial:
    """Remainder of ``p`` modulo the basis; zero exactly on ideal members."""
    if p.ring != gb.ring:
        raise OrderMismatch("polynomial and basis use different rings")
    return SymPolynomial(p.ring, _normal_form_terms(p.ring, p._terms, gb.generators))


def expand_taylor(c: Complex, tb: TaylorBinomial) -> SymPolynomial:
    """Two-term polynomial (or zero) realizing the binomial in the ring."""
    ring = rees_ring(c)
    if tb.is_zero:
        return ring.zero()
    acc: dict = {}
    _add_into(acc, ring.exps(tb.coeff_alpha, tb.alpha.indices), Fraction(1))
    _add_into(acc, ring.exps(tb.coeff_beta, tb.beta.indices), Fraction(-1))
    return SymPolynomial(ring, acc)


def _disjoint_pairs(q: int, s: int):
    """Canonical disjoint-support tuple pairs of length s, lexicographic."""
    tuples = [tuple(t) for t in combinations_with_replacement(range(1, q + 1), s)]
    sups = [frozenset(t) for t in tuples]
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            if sups[a] & sups[b] or min(sups[a]) > min(sups[b]):
                continue
            yield ta, tb


def relation_generators(
    c: Complex, s: int, require_disjoint_support: bool = True
) -> list[SymPolynomial]:
    """Expanded binomials for the degree-s slice of the defining ideal,
    canonical orientation, deduplicated.

    By default only disjoint-support pairs are emitted; pairs sharing an
    index factor as a T-variable times a lower-degree relation and add
    nothing to the ideal.  Pass ``require_disjoint_support=False`` to get
    the unreduced slice."""
    if s < 1:
        raise ValueError("s must be at least 1")
    out: list[SymPolynomial] = []
    seen = set()
    if s == 1:
        pairs = (((i,), (j,)) for i, j in combinations(range(1, c.q + 1), 2))
    elif require_disjoint_support:
        pairs = _disjoint_pairs(c.q, s)
    else:
        tuples = [tuple(t) for t in combinations_with_replacement(range(1, c.q + 1), s)]
        pairs = combinations(tuples, 2)
    for ta, tb in pairs:
        p = expand_taylor(c, taylor_binomial(c, IndexTuple(ta), IndexTuple(tb)))
        if p.is_zero():
            continue
        key = p.canonical()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


@lru_cache(maxsize=64)
def _basis_up_to(c: Complex, upto: int, max_pairs: int, max_degree: int) -> GroebnerBasis:
    gens: list[SymPolynomial] = []
    for s in range(1, upto + 1):
        gens.extend(relation_generators(c, s))
    return groebner(gens, max_pairs=max_pairs, max_degree=max_degree)


def _validate_pair(alpha: IndexTuple, beta: IndexTuple) -> None:
    if len(alpha) != len(beta):
        raise LengthMismatch(len(alpha), len(beta))
    if len(alpha) < 2:
        raise InvalidWalkPair("need tuples of length >= 2")
    if alpha.support & beta.support:
        raise InvalidWalkPair("supports overlap")


def is_redundant(
    c: Complex,
    alpha: IndexTuple,
    beta: IndexTuple,
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> bool:
    """Membership of the pair's relation in the span of all strictly
    lower-degree relations."""
    _validate_pair(alpha, beta)
    gb = _basis_up_to(c, len(alpha) - 1, max_pairs, max_degree)
    return normal_form(expand_taylor(c, taylor_binomial(c, alpha, beta)), gb).is_zero()


@dataclass(frozen=True)
class LinearTypeVerification:
    ok: bool
    s_max: int
    counterexample: tuple[IndexTuple, IndexTuple] | None = None

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "alpha": self.counterexample[0].to_list(),
                "beta": self.counterexample[1].to_list(),
            }
        return {"max_degree": self.s_max, "linear_type_to_degree": self.ok, "counterexample": ce}


def linear_type_verify(
    c: Complex,
    s_max: int,
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> LinearTypeVerification:
    """Check that every degree-s relation, 2 <= s <= s_max, reduces to zero
    against the degree-1 basis.  A true answer is a verification up to
    s_max only, never a proof for all degrees."""
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    gb = _basis_up_to(c, 1, max_pairs, max_degree)
    for s in range(2, s_max + 1):
        for ta, tb in _disjoint_pairs(c.q, s):
            a, b = IndexTuple(ta), IndexTuple(tb)
            p = expand_taylor(c, taylor_binomial(c, a, b))
            if not normal_form(p, gb).is_zero():
                return LinearTypeVerification(False, s_max, (a, b))
    return LinearTypeVerification(True, s_max)


def vanishes_under_rees_map(c: Complex, p: SymPolynomial) -> bool:
    """Soundness check: substituting T_i -> f_i * t must kill the
    polynomial (all relations live in the kernel of that map)."""
    ring = rees_ring(c)
    if p.ring != ring:
        raise OrderMismatch("polynomial not over this complex's ring")
    facet_vecs = []
    for i in range(1, c.q + 1):
        vec = [0] * len(ring.labels)
        for v in c.facet(i):
            vec[ring.labels.index(v)] = 1
        facet_vecs.append(vec)
    acc: dict = {}
    for exps, coeff in p._terms.items():
        t_deg = sum(exps[: ring.q])
        img = list(exps[ring.q :])
        for i in range(ring.q):
            e = exps[i]
            if e:
                for k, fe in enumerate(facet_vecs[i]):
                    img[k] += e * fe
        _add_into(acc, (tuple(img), t_deg), coeff)
    return not acc


@dataclass(frozen=True)
class RelationSplit:
    """Cofactors of the two-term rewriting, with the side that was used:
    ALPHA means one alpha-entry was split off, BETA one beta-entry."""

    side: str
    lam: Monomial
    mu: Monomial


def split_through_facet(
    c: Complex,
    alpha: IndexTuple,
    beta: IndexTuple,
    t: int,
    h: int,
    side: str | None = None,
) -> RelationSplit:
    """Split the pair's relation through entry ``t`` (1-based position)
    and facet ``h``.

    On side ALPHA this realizes
    ``T = lam * That_alpha_t * T_(i_t),(h)  +  mu * T_(alpha_t(h)),beta``
    and requires lcm(f_alpha, f_beta) to be divisible by f_h * fhat;
    side BETA is the mirror image.  The identity is verified by full
    expansion before returning.
    """
    if len(alpha) != len(beta):
        raise LengthMismatch(len(alpha), len(beta))
    s = len(alpha)
    if not 1 <= t <= s:
        raise ValueError(f"position t={t} outside 1..{s}")
    if not 1 <= h <= c.q:
        raise ValueError(f"facet index h={h} outside 1..{c.q}")
    f_alpha = tuple_monomial(c, alpha)
    f_beta = tuple_monomial(c, beta)
    big = f_alpha.lcm(f_beta)
    f_h = facet_monomial(c, h)

    def try_side(which: str) -> RelationSplit | None:
        base, other = (alpha, beta) if which == "ALPHA" else (beta, alpha)
        f_base = f_alpha if which == "ALPHA" else f_beta
        pivot = base.indices[t - 1]
        fhat = f_base.quotient(facet_monomial(c, pivot))
        divisor = f_h * fhat
        if not divisor.divides(big):
            return None
        gamma = big.quotient(divisor)
        lam = (gamma * f_h).quotient(facet_monomial(c, pivot).lcm(f_h))
        replaced = base.replace_one(pivot, h) if h != pivot else base
        f_other = f_beta if which == "ALPHA" else f_alpha
        f_replaced = Monomial.product(facet_monomial(c, i) for i in replaced.indices)
        mu = big.quotient(f_replaced.lcm(f_other))

        ring = rees_ring(c)
        that = list(base.indices)
        that.remove(pivot)
        if which == "ALPHA":
            linear = taylor_binomial(c, IndexTuple.of(pivot), IndexTuple.of(h))
            rest = taylor_binomial(c, replaced, beta)
        else:
            linear = taylor_binomial(c, IndexTuple.of(h), IndexTuple.of(pivot))
            rest = taylor_binomial(c, alpha, replaced)
        total = ring.term(lam, that) * expand_taylor(c, linear) + ring.term(mu) * expand_taylor(c, rest)
        if total != expand_taylor(c, taylor_binomial(c, alpha, beta)):
            raise IdentityCheckFailed(
                f"decomposition through t={t}, h={h} does not expand back"
            )
        return RelationSplit(which, lam, mu)

    sides = [side] if side in ("ALPHA", "BETA") else ["ALPHA", "BETA"]
    for which in sides:
        res = try_side(which)
        if res is not None:
            return res
    raise HypothesisNotMet(
        f"lcm(f_alpha, f_beta) admits no split through position {t} and facet {h}"
    )


@dataclass(frozen=True)
class DecompositionCertificate:
    """Explicit two-term membership certificate for a rejected walk pair:

        T = lam * T[t_hat] * T_(i),(j)  +  mu * T_pivot * T[reduced pair]

    The first summand is a multiple of a degree-1 relation, the second a
    multiple of a relation one degree down."""

    witness: Witness
    lam: Monomial
    t_hat: IndexTuple
    linear_pair: tuple[int, int]
    mu: Monomial
    pivot: int
    reduced_alpha: IndexTuple
    reduced_beta: IndexTuple

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json(),
            "lambda": str(self.lam),
            "t_hat": self.t_hat.to_list(),
            "linear_pair": list(self.linear_pair),
            "mu": str(self.mu),
            "pivot": self.pivot,
            "reduced": {
                "alpha": self.reduced_alpha.to_list(),
                "beta": self.reduced_beta.to_list(),
            },
        }


def decomposition_polynomial(c: Complex, cert: DecompositionCertificate) -> SymPolynomial:
    """Expand the certificate back into the polynomial it rewrites."""
    ring = rees_ring(c)
    i, j = cert.linear_pair
    linear = expand_taylor(c, taylor_binomial(c, IndexTuple.of(i), IndexTuple.of(j)))
    lower = expand_taylor(c, taylor_binomial(c, cert.reduced_alpha, cert.reduced_beta))
    return ring.term(cert.lam, cert.t_hat.indices) * linear + ring.term(
        cert.mu, (cert.pivot,)
    ) * lower


def decompose_non_walk(
    c: Complex, alpha: IndexTuple, beta: IndexTuple
) -> DecompositionCertificate:
    """Turn the rejection witness of a non-even-walk pair into an explicit
    two-term certificate, verified by expansion."""
    pair = WalkPair(alpha, beta)
    verdict = is_even_walk(c, pair)
    if verdict:
        raise IsAnEvenWalk("the pair is an even walk; no certificate exists")
    wit = verdict.witness
    i, j = wit.i, wit.j
    if wit.side is Side.BETA_SIDE:
        # F_j \ F_i inside the beta-dominant region: split off an alpha entry.
        t = alpha.indices.index(i) + 1
        dec = split_through_facet(c, alpha, beta, t, j, side="ALPHA")
        t_hat = alpha.without_one(i)
        pivot = j
    else:
        # F_i \ F_j inside the alpha-dominant region: split off a beta entry.
        t = beta.indices.index(j) + 1
        dec = split_through_facet(c, alpha, beta, t, i, side="BETA")
        t_hat = beta.without_one(j)
        pivot = i
    cert = DecompositionCertificate(
        witness=wit,
        lam=dec.lam,
        t_hat=t_hat,
        linear_pair=(i, j),
        mu=dec.mu,
        pivot=pivot,
        reduced_alpha=alpha.without_one(i),
        reduced_beta=beta.without_one(j),
    )
    if decomposition_polynomial(c, cert) != expand_taylor(c, taylor_binomial(c, alpha, beta)):
        raise IdentityCheckFailed("certificate does not expand to the relation")
    return cert
