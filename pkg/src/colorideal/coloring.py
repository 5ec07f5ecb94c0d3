"""The coloring ideals and their distinguished bases.

For a color partition with class maxima ``m_1 < ... < m_l = n`` the basis
``g_1..g_n`` has ``x_n^k - 1`` at ``m_l``, ``h^{k-l+j}`` over ``{m_j..m_l}`` at
``m_j`` and ``x_i - x_{max cl(i)}`` elsewhere.  Its leading monomials are
pairwise coprime under any order with ``x_n < ... < x_1``, so it is a
Groebner basis as given.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .field import QQ, FieldConfig
from .graph import ColorPartition, Graph
from .groebner import GroebnerBasis, reduce_basis
from .ideal import Ideal
from .poly import DEGREVLEX_ORDER, Polynomial, TermOrder, complete_homogeneous, linear_form

J_NK_MAX_K = 4


def root_poly(i: int, k: int, n: int, field: FieldConfig = QQ) -> Polynomial:
    """``x_i^k - 1``."""
    m = [0] * n
    m[i - 1] = k
    return Polynomial({tuple(m): 1, (0,) * n: -1}, n, field)


def edge_generator(i: int, j: int, k: int, n: int, field: FieldConfig = QQ) -> Polynomial:
    """``(x_i^k - x_j^k) / (x_i - x_j)``, i.e. ``h^{k-1}`` over ``{i, j}``."""
    return complete_homogeneous((i, j), k - 1, n, field)


def ideal_I_nk(n: int, k: int, field: FieldConfig = QQ) -> Ideal:
    """All k-colorings: ``<x_i^k - 1 : i = 1..n>``, a universal Groebner basis."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return Ideal([root_poly(i, k, n, field) for i in range(1, n + 1)], n, field,
                 universal=True)


def ideal_I_Gk(G: Graph, k: int, field: FieldConfig = QQ) -> Ideal:
    """Proper k-colorings of ``G``: ``I_{n,k}`` plus one edge generator per edge."""
    if k < 1:
        raise ValueError("k must be positive")
    base = ideal_I_nk(G.n, k, field)
    if not G.edges:
        return base
    gens = base.gens + tuple(edge_generator(i, j, k, G.n, field) for i, j in G.edge_list)
    return Ideal(gens, G.n, field)


def vandermonde(U, n: int, field: FieldConfig = QQ) -> Polynomial:
    """Expanded ``prod_{i<j in U} (x_i - x_j)``."""
    f = Polynomial.one(n, field)
    for i, j in itertools.combinations(sorted(U), 2):
        f = f * linear_form({i: 1, j: -1}, n, field)
    return f


def ideal_J_nk(n: int, k: int, field: FieldConfig = QQ, max_k: int = J_NK_MAX_K) -> Ideal:
    """Graph polynomials of all ``(k+1)``-cliques; a universal Groebner basis."""
    if k + 1 > n:
        raise ValueError(f"need k + 1 <= n, got n={n}, k={k}")
    if k > max_k:
        raise ValueError(f"J_(n,k) is limited to k <= {max_k}")
    gens = [vandermonde(U, n, field) for U in itertools.combinations(range(1, n + 1), k + 1)]
    return Ideal(gens, n, field, universal=True)


@dataclass(frozen=True)
class NuBasis:
    polys: tuple
    source: ColorPartition
    k: int
    reduced: bool

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i: int) -> Polynomial:
        """The polynomial indexed by vertex ``i`` (1-based)."""
        return self.polys[i - 1]

    def leading_monomials(self, order: TermOrder = DEGREVLEX_ORDER):
        return [g.leading_monomial(order) for g in self.polys]

    def to_json(self, order: TermOrder = DEGREVLEX_ORDER) -> str:
        return json.dumps({"partition": self.source.to_text(), "k": self.k,
                           "reduced": self.reduced,
                           "polys": [g.to_string(order) for g in self.polys]})


def nu_basis(p: ColorPartition, k: int, reduced: bool = False,
             field: FieldConfig = QQ) -> NuBasis:
    """The (reduced) nu-basis of a color partition, one polynomial per vertex."""
    l, n = p.l, p.n
    if l > k:
        raise ValueError(f"partition has {l} classes but only {k} colors")
    if reduced and l != k:
        raise ValueError("the reduced basis needs a partition into exactly k classes")
    maxima = p.maxima
    where = {m: j for j, m in enumerate(maxima, 1)}
    first = set(p.classes[0])
    polys = []
    for i in range(1, n + 1):
        j = where.get(i)
        if reduced and k == 1:
            # single class: every x_i equals the one color
            g = linear_form({i: 1}, n, field, constant=-1)
        elif j == l:
            g = root_poly(i, k, n, field)
        elif j is not None:
            deg = j if reduced else k - l + j
            g = complete_homogeneous(maxima[j - 1:], deg, n, field)
        elif reduced and i in first:
            g = complete_homogeneous((i,) + maxima[1:], 1, n, field)
        else:
            g = linear_form({i: 1, p.class_max(i): -1}, n, field)
        polys.append(g)
    return NuBasis(tuple(polys), p, k, reduced)


def coloring_ideal(p: ColorPartition, k: int, field: FieldConfig = QQ,
                   orders=()) -> Ideal:
    """``A_nu``; its reduced basis is cached for each order in ``orders``."""
    basis = nu_basis(p, k, field=field)
    A = Ideal(basis.polys, p.n, field)
    for order in orders:
        # already a Groebner basis for x_n < ... < x_1: one inter-reduction pass
        A.seed(reduce_basis(basis.polys, order, assume_groebner=True))
    return A


def recognize_nu_shape(G: GroebnerBasis | list, n: int, k: int) -> ColorPartition | None:
    """Read a coloring off a reduced basis of reduced-nu-basis shape.

    Returns the partition when rebuilding its reduced nu-basis gives exactly
    the polynomials of ``G``, otherwise ``None``.
    """
    polys = list(G.polys if isinstance(G, GroebnerBasis) else G)
    if len(polys) != n or not polys or k < 1:
        return None
    field = polys[0].field
    if any(g.n != n for g in polys):
        return None
    one, minus_one = field.one, field.convert(-1)
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    first_class = []
    for g in polys:
        if g.degree() != 1 or any(not any(m) for m in g.terms):
            continue
        vars_ = sorted(g.variables())
        coeffs = [g.terms[m] for m in sorted(g.terms, reverse=True)]
        if len(g) == 2 and coeffs[0] == one and coeffs[1] == minus_one:
            i, m = vars_
            parent[find(i)] = find(m)
        elif len(g) == k and all(c == one for c in coeffs) and k >= 2:
            first_class.append(vars_[0])
    for v in first_class[1:]:
        parent[find(v)] = find(first_class[0])
    groups = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v) if k > 1 else 0, []).append(v)
    if len(groups) != k:
        return None
    partition = ColorPartition(tuple(groups.values()))
    rebuilt = nu_basis(partition, k, reduced=True, field=field)
    if set(rebuilt.polys) != set(polys):
        return None
    return partition
