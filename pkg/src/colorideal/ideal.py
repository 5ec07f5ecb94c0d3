"""Ideals with cached reduced Groebner bases, and ideal arithmetic.

Intersections use one auxiliary variable ``t`` placed before ``x1``:
``I ∩ J`` is the ``t``-free part of ``t*I + (1 - t)*J`` under an order that
eliminates ``t``.  Colon ideals reduce to intersections with principal ideals.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .field import QQ, FieldConfig
from .groebner import (GroebnerBasis, NotZeroDimensionalError, buchberger,
                       count_standard_monomials,
                       extend_basis, normal_form, reduce_basis)
from .poly import DEGREVLEX_ORDER, Polynomial, TermOrder


class Ideal:
    """Ideal of ``F[x1..xn]`` given by generators.

    ``universal=True`` records that the generators already form a Groebner
    basis for every term order, so no Buchberger pass is ever run.
    """

    def __init__(self, gens: Iterable[Polynomial], n: int | None = None,
                 field: FieldConfig | None = None, *, universal: bool = False):
        gens = tuple(g for g in gens if g)
        if gens:
            n = gens[0].n if n is None else n
            field = gens[0].field if field is None else field
            for g in gens:
                if g.n != n or g.field != field:
                    raise ValueError("generators live in different rings")
        elif n is None:
            raise ValueError("zero ideal needs an explicit variable count")
        self.gens = gens
        self.n = n
        self.field = field or QQ
        self.universal = universal
        self._cache: dict[TermOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, n: int, field: FieldConfig = QQ) -> "Ideal":
        one = Polynomial.one(n, field)
        return cls([one], n, field, universal=True)

    def is_zero(self) -> bool:
        return not self.gens

    def groebner_basis(self, order: TermOrder = DEGREVLEX_ORDER) -> GroebnerBasis:
        with self._lock:
            G = self._cache.get(order)
        if G is not None:
            return G
        if not self.gens:
            G = GroebnerBasis((), order, reduced=True)
        elif self.universal:
            G = reduce_basis(self.gens, order, assume_groebner=True)
        else:
            G = buchberger(self.gens, order)
        with self._lock:
            self._cache.setdefault(order, G)
        return G

    def seed(self, G: GroebnerBasis) -> None:
        """Record a reduced basis computed elsewhere."""
        if not G.reduced:
            G = reduce_basis(G, assume_groebner=True)
        with self._lock:
            self._cache[G.order] = G

    def cached(self, order: TermOrder) -> GroebnerBasis | None:
        with self._lock:
            return self._cache.get(order)

    def is_unit(self, order: TermOrder = DEGREVLEX_ORDER) -> bool:
        return self.groebner_basis(order).is_unit()

    def contains(self, f: Polynomial, order: TermOrder = DEGREVLEX_ORDER) -> bool:
        return contains(self, f, order)

    def dimension(self, order: TermOrder = DEGREVLEX_ORDER) -> int:
        """``dim F[x]/I``; raises NotZeroDimensionalError when infinite."""
        G = self.groebner_basis(order)
        if not G.polys:
            raise NotZeroDimensionalError("zero ideal")
        return count_standard_monomials(G)

    def extend(self, new: Sequence[Polynomial], order: TermOrder = DEGREVLEX_ORDER) -> "Ideal":
        """``self + <new>`` with its basis grown from this ideal's basis."""
        J = Ideal(self.gens + tuple(new), self.n, self.field)
        J.seed(extend_basis(self.groebner_basis(order), list(new)))
        return J

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = [other]
        gens = other.gens if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.gens + tuple(gens), self.n, self.field)

    def __repr__(self):
        shown = ", ".join(str(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal<{shown}{more}> in {self.n} vars over {self.field}"


def _check_same_ring(I: Ideal, J: Ideal):
    if I.n != J.n or I.field != J.field:
        raise ValueError("ideals live in different rings")


def contains(I: Ideal, f: Polynomial, order: TermOrder = DEGREVLEX_ORDER) -> bool:
    """Ideal membership via the normal form modulo a reduced basis."""
    if f.n != I.n or f.field != I.field:
        raise ValueError("polynomial and ideal live in different rings")
    if not f:
        return True
    G = I.groebner_basis(order)
    if not G.polys:
        return False
    return not normal_form(f, G)


def ideals_equal(I: Ideal, J: Ideal, order: TermOrder = DEGREVLEX_ORDER) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    _check_same_ring(I, J)
    return I.groebner_basis(order).same_as(J.groebner_basis(order))


def _basis_gens(I: Ideal, order: TermOrder):
    G = I.cached(order)
    return G.polys if G is not None else I.gens


def intersect(I: Ideal, J: Ideal, order: TermOrder = DEGREVLEX_ORDER) -> Ideal:
    """``I ∩ J`` by eliminating an auxiliary variable."""
    _check_same_ring(I, J)
    n, field = I.n, I.field
    if I.is_zero() or J.is_zero():
        return Ideal([], n, field)
    if I.is_unit(order):
        return J
    if J.is_unit(order):
        return I
    lifted = []
    for f in _basis_gens(I, order):
        lifted.append(f.lift(exps=(1,)))
    for g in _basis_gens(J, order):
        lifted.append(g.lift(exps=(0,)) - g.lift(exps=(1,)))
    eorder = order.with_elimination(1)
    G = buchberger(lifted, eorder)
    keep = tuple(g.drop(1) for g in G.polys if not g.leading_monomial(eorder)[0])
    result = Ideal(keep, n, field)
    # the t-free part of a reduced elimination basis is itself reduced
    result.seed(GroebnerBasis(keep, order, reduced=True))
    return result


def intersect_all(ideals: Sequence[Ideal], order: TermOrder = DEGREVLEX_ORDER) -> Ideal:
    """Intersection of a nonempty list, combined pairwise as a balanced tree."""
    if not ideals:
        raise ValueError("empty intersection")
    level = list(ideals)
    while len(level) > 1:
        nxt = [intersect(level[a], level[a + 1], order) for a in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def colon_principal(I: Ideal, g: Polynomial, order: TermOrder = DEGREVLEX_ORDER) -> Ideal:
    """``I : <g>`` as ``(I ∩ <g>) / g``."""
    if not g:
        raise ValueError("colon by the zero ideal")
    if contains(I, g, order):
        return Ideal.unit(I.n, I.field)
    K = intersect(I, Ideal([g]), order)
    quotients = [h.divide_exact(g, order) for h in K.gens]
    return Ideal(quotients, I.n, I.field)


def colon(I: Ideal, J: Ideal, order: TermOrder = DEGREVLEX_ORDER) -> Ideal:
    """``I : J``, the intersection of ``I : <g>`` over the generators of ``J``."""
    _check_same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.gens:
        single = colon_principal(I, g, order)
        if single.is_unit(order):
            continue
        result = single if result is None else intersect(result, single, order)
    return result if result is not None else Ideal.unit(I.n, I.field)
