"""Normal forms, Buchberger's algorithm and quotient-ring dimensions.

The kernels work on raw ``{monomial: coefficient}`` dicts.  Reducers are
kept monic as ``(leading_monomial, tail)`` pairs sorted by leading monomial
ascending; the first divisor in that order is always the one used.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from operator import add, le, sub
from typing import Iterable, Sequence

from .poly import (DEGREVLEX_ORDER, Monomial, Polynomial, TermOrder, coprime,
                   divides, mono_lcm)


class NotZeroDimensionalError(ValueError):
    """The quotient ring is infinite dimensional."""


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple
    order: TermOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def is_unit(self) -> bool:
        """True when the basis generates the whole ring."""
        return any(g.is_constant() and g for g in self.polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def as_strings(self) -> list[str]:
        return [g.to_string(self.order) for g in self.polys]

    def same_as(self, other: "GroebnerBasis") -> bool:
        return set(self.polys) == set(other.polys)


def _make_reducers(polys: Iterable[Polynomial], order: TermOrder):
    """Monic ``(lm, tail)`` pairs sorted by leading monomial ascending."""
    key = order.key
    out = []
    for g in polys:
        if not g:
            continue
        terms = g.sorted_terms(order)
        lm, lc = terms[0]
        field = g.field
        p = field.modulus
        inv = field.inv(lc)
        if p is None:
            tail = [(m, c * inv) for m, c in terms[1:]]
        else:
            tail = [(m, c * inv % p) for m, c in terms[1:]]
        out.append((key(lm), lm, tail))
    out.sort(key=lambda r: r[0])
    return [(lm, tail) for _, lm, tail in out]


def _reduce(terms: dict, reducers: list, order: TermOrder, mod) -> dict:
    """Fully reduce ``terms``; the result dict is in descending order."""
    hk = order.heap_key
    p = dict(terms)
    heap = [(hk(m), m) for m in p]
    heapify(heap)
    rem = {}
    get = p.get
    while heap:
        m = heappop(heap)[1]
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, tail in reducers:
            if all(map(le, lm, m)):
                break
        else:
            rem[m] = c
            continue
        q = tuple(map(sub, m, lm))
        if mod is None:
            for t, a in tail:
                mm = tuple(map(add, t, q))
                old = get(mm)
                if old is None:
                    p[mm] = -c * a
                    heappush(heap, (hk(mm), mm))
                else:
                    v = old - c * a
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
        else:
            for t, a in tail:
                mm = tuple(map(add, t, q))
                old = get(mm)
                if old is None:
                    p[mm] = -c * a % mod
                    heappush(heap, (hk(mm), mm))
                else:
                    v = (old - c * a) % mod
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
    return rem


def normal_form(f: Polynomial, G: Sequence[Polynomial] | GroebnerBasis,
                order: TermOrder = DEGREVLEX_ORDER) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``."""
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.polys
    for g in G:
        f._check(g)
    reducers = _make_reducers(G, order)
    rem = _reduce(f.terms, reducers, order, f.field.modulus)
    return Polynomial._make(rem, f.n, f.field)


class _Buchberger:
    """Mutable state of one Buchberger run."""

    def __init__(self, n: int, field, order: TermOrder):
        self.n = n
        self.field = field
        self.mod = field.modulus
        self.order = order
        self.key = order.key
        self.lms: list[Monomial] = []
        self.tails: list[list] = []
        self.G: list[int] = []           # indices of the current basis
        self.pairs: list[tuple] = []     # (lcm, i, j)
        self.reducers: list = []         # (key(lm), lm, tail), ascending
        self.unit = False

    def _insert(self, lm, tail) -> int:
        idx = len(self.lms)
        self.lms.append(lm)
        self.tails.append(tail)
        return idx

    def _reducer_list(self):
        return [(lm, tail) for _, lm, tail in self.reducers]

    def _rebuild_reducers(self):
        key = self.key
        self.reducers = sorted(((key(self.lms[g]), self.lms[g], self.tails[g]) for g in self.G),
                               key=lambda r: r[0])

    def _monic(self, rem: dict):
        # rem is in descending order, so its first key is the leading monomial
        it = iter(rem.items())
        lm, lc = next(it)
        mod = self.mod
        if lc == 1:
            tail = list(it)
        else:
            inv = self.field.inv(lc)
            if mod is None:
                tail = [(m, c * inv) for m, c in it]
            else:
                tail = [(m, c * inv % mod) for m, c in it]
        return lm, tail

    def seed(self, basis: Iterable[Polynomial]):
        """Adopt polynomials already known to form a Groebner basis."""
        for g in basis:
            if not g:
                continue
            terms = g.sorted_terms(self.order)
            rem = dict(terms)
            lm, tail = self._monic(rem)
            if not any(lm):
                self.unit = True
                return
            self.G.append(self._insert(lm, tail))
        self._rebuild_reducers()

    def add(self, terms: dict) -> None:
        """Reduce a new generator and fold it in with the pair criteria."""
        if self.unit:
            return
        rem = _reduce(terms, self._reducer_list(), self.order, self.mod)
        if rem:
            self._update(*self._monic(rem))

    def _update(self, lm, tail):
        if not any(lm):
            self.unit = True
            return
        h = self._insert(lm, tail)
        lms = self.lms
        new = [(mono_lcm(lm, lms[g]), g) for g in self.G]
        kept = []
        while new:
            l1, g1 = new.pop()
            if coprime(lm, lms[g1]) or not (
                    any(divides(l2, l1) for l2, _ in new) or
                    any(divides(l2, l1) for l2, _ in kept)):
                kept.append((l1, g1))
        pairs = []
        for l, i, j in self.pairs:
            if divides(lm, l) and mono_lcm(lms[i], lm) != l and mono_lcm(lms[j], lm) != l:
                continue
            pairs.append((l, i, j))
        for l, g in kept:
            if not coprime(lm, lms[g]):
                pairs.append((l, g, h))
        self.pairs = pairs
        self.G = [g for g in self.G if not divides(lm, lms[g])] + [h]
        self._rebuild_reducers()

    def _spoly(self, l, i, j) -> dict:
        mod = self.mod
        d = {}
        qi = tuple(map(sub, l, self.lms[i]))
        for t, a in self.tails[i]:
            d[tuple(map(add, t, qi))] = a
        qj = tuple(map(sub, l, self.lms[j]))
        get = d.get
        for t, a in self.tails[j]:
            mm = tuple(map(add, t, qj))
            v = get(mm, 0) - a
            if mod is not None:
                v %= mod
            if v:
                d[mm] = v
            else:
                d.pop(mm, None)
        return d

    def run(self) -> None:
        key = self.key
        while self.pairs and not self.unit:
            # normal strategy: smallest lcm in the term order
            best = min(range(len(self.pairs)), key=lambda a: key(self.pairs[a][0]))
            l, i, j = self.pairs.pop(best)
            s = self._spoly(l, i, j)
            if s:
                self.add(s)

    def result(self) -> list[Polynomial]:
        """Reduced basis: minimal, inter-reduced, monic, ascending by lead."""
        n, field = self.n, self.field
        if self.unit:
            return [Polynomial.one(n, field)]
        lms = self.lms
        G = []
        for g in self.G:
            if any(divides(lms[o], lms[g]) and (lms[o] != lms[g] or o < g)
                   for o in self.G if o != g):
                continue
            G.append(g)
        self.G = G
        self._rebuild_reducers()
        reducers = self._reducer_list()
        out = []
        for _, lm, tail in self.reducers:
            rem = _reduce(dict(tail), reducers, self.order, self.mod)
            terms = {lm: field.one}
            terms.update(rem)
            out.append(Polynomial._make(terms, n, field))
        return out


def buchberger(gens: Sequence[Polynomial], order: TermOrder = DEGREVLEX_ORDER, *,
               basis: Sequence[Polynomial] | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``<basis> + <gens>``.

    ``basis``, if given, must already be a Groebner basis for ``order``; only
    S-pairs involving the new generators are then formed.  A nonzero
    constant appearing at any point ends the run with the basis ``{1}``.
    """
    polys = list(basis or ()) + list(gens)
    if not polys:
        raise ValueError("empty generator list")
    first = polys[0]
    for g in polys[1:]:
        first._check(g)
    state = _Buchberger(first.n, first.field, order)
    if basis:
        state.seed(basis)
    for g in gens:
        if g:
            state.add(g.terms)
    state.run()
    return GroebnerBasis(tuple(state.result()), order, reduced=True)


def extend_basis(G: GroebnerBasis, new: Sequence[Polynomial]) -> GroebnerBasis:
    """Groebner basis of ``<G> + <new>``, reusing ``G``."""
    if G.is_unit():
        return G
    return buchberger(new, G.order, basis=G.polys)


def reduce_basis(G: GroebnerBasis | Sequence[Polynomial],
                 order: TermOrder | None = None, *,
                 assume_groebner: bool = False) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal spanned by ``G``.

    Input that is not already a Groebner basis is completed first, so the
    answer is right either way.  Pass ``assume_groebner=True`` to skip that
    pass for sets known to be bases (e.g. universal ones).
    """
    if isinstance(G, GroebnerBasis):
        order = order or G.order
        polys = G.polys
    else:
        polys = list(G)
        order = order or DEGREVLEX_ORDER
    polys = [g for g in polys if g]
    if not polys:
        raise ValueError("empty basis")
    if not assume_groebner:
        return buchberger(polys, order)
    state = _Buchberger(polys[0].n, polys[0].field, order)
    state.seed(polys)
    return GroebnerBasis(tuple(state.result()), order, reduced=True)


def _zero_dim_setup(lms: list[Monomial], n: int):
    bounds = [None] * n
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        missing = [i + 1 for i, b in enumerate(bounds) if b is None]
        raise NotZeroDimensionalError(
            f"no pure power of x{missing[0]} among leading monomials")
    # leading monomials grouped by their last variable
    by_last = [[] for _ in range(n)]
    for m in lms:
        last = max(i for i, e in enumerate(m) if e)
        by_last[last].append(m)
    return bounds, by_last


def _standard(lms: list[Monomial], n: int, collect: bool):
    if any(not any(m) for m in lms):
        return [] if collect else 0
    if n == 0:
        return [()] if collect else 1
    bounds, by_last = _zero_dim_setup(lms, n)
    out = []
    count = 0
    partial = [0] * n

    def walk(i):
        nonlocal count
        checks = by_last[i]
        for e in range(bounds[i]):
            partial[i] = e
            if checks and any(all(map(le, m, partial)) for m in checks):
                break
            if i + 1 == n:
                if collect:
                    out.append(tuple(partial))
                else:
                    count += 1
            else:
                walk(i + 1)
        partial[i] = 0

    walk(0)
    return out if collect else count


def standard_monomials(G: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the initial ideal; raises if there are infinitely many."""
    if not G.polys:
        raise ValueError("empty basis")
    return _standard(G.leading_monomials(), G.polys[0].n, collect=True)


def count_standard_monomials(G: GroebnerBasis) -> int:
    if not G.polys:
        raise ValueError("empty basis")
    return _standard(G.leading_monomials(), G.polys[0].n, collect=False)


def quotient_dimension(gens: Sequence[Polynomial] | GroebnerBasis,
                       order: TermOrder = DEGREVLEX_ORDER) -> int:
    """``dim R/<gens>`` as the number of standard monomials."""
    G = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, order)
    return count_standard_monomials(G)


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder) -> bool:
    """Check every S-polynomial reduces to zero (no criteria; for testing)."""
    G = [g for g in G if g]
    reducers = _make_reducers(G, order)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            f, g = G[a], G[b]
            lf, lg = f.leading_monomial(order), g.leading_monomial(order)
            l = mono_lcm(lf, lg)
            fi = f.monic(order).mul_term(tuple(map(sub, l, lf)), f.field.one)
            gi = g.monic(order).mul_term(tuple(map(sub, l, lg)), g.field.one)
            s = fi - gi
            if _reduce(s.terms, reducers, order, f.field.modulus):
                return False
    return True
