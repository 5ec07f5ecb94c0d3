"""Decision procedures for k-colorability and unique k-colorability."""

from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field as dc_field

from .coloring import (coloring_ideal, edge_generator, ideal_I_Gk, ideal_I_nk,
                       ideal_J_nk, nu_basis, recognize_nu_shape)
from .field import QQ, FieldConfig, validate_field
from .graph import (ColorPartition, Graph, edge_factor, enumerate_colorings,
                    expand_graph_polynomial, graph_poly_factors, parse_partition)
from .groebner import (GroebnerBasis, buchberger, count_standard_monomials,
                       extend_basis, normal_form)
from .ideal import Ideal, colon, ideals_equal, intersect_all
from .poly import DEGREVLEX_ORDER, Polynomial, TermOrder, term_order

JNK_MAX_N = 12
JNK_MAX_K = 3
DECOMPOSE_BUDGET = 8


class UnsupportedConfiguration(ValueError):
    """A valid request this build declines to run (size caps and the like)."""


class InvalidColoring(ValueError):
    pass


class ColorMethod(enum.Enum):
    QuotientDim = "dim"
    ReduceOne = "one"
    NfGraphPolyInk = "nf-ink"
    NfGraphPolyJnk = "nf-jnk"


class UniqueMethod(enum.Enum):
    NuBasisMembership = "nubasis"
    ColonMembership = "colon"
    QuotientDimFactorial = "dim"
    GbShape = "gb-shape"


@dataclass
class Verdict:
    answer: bool
    method: str
    order: str
    field: str
    certificate: object = None
    elapsed: float = 0.0
    dim: int | None = None
    partition: ColorPartition | None = None

    def to_dict(self) -> dict:
        d = {"answer": self.answer, "method": self.method, "order": self.order,
             "field": self.field}
        if self.dim is not None:
            d["dim"] = self.dim
        if self.partition is not None:
            d["partition"] = self.partition.to_text()
        d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        d = json.loads(text)
        part = parse_partition(d["partition"]) if "partition" in d else None
        return cls(answer=d["answer"], method=d["method"], order=d["order"],
                   field=d["field"], certificate=d.get("dim", part),
                   elapsed=d["elapsed_ms"] / 1000, dim=d.get("dim"), partition=part)


def graph_ideal_basis(G: Graph, k: int, order: TermOrder = DEGREVLEX_ORDER,
                      field: FieldConfig = QQ, incremental: bool = True) -> GroebnerBasis:
    """Reduced basis of ``I_{G,k}``.

    Incrementally, edges are added one at a time to the basis of
    ``I_{n,k}``; once the basis becomes ``{1}`` the remaining edges are skipped.
    """
    if not incremental:
        return buchberger(ideal_I_Gk(G, k, field).gens, order)
    B = ideal_I_nk(G.n, k, field).groebner_basis(order)
    for i, j in graph_poly_factors(G):
        B = extend_basis(B, [edge_generator(i, j, k, G.n, field)])
        if B.is_unit():
            break
    return B


def reduce_graph_polynomial(G: Graph, reducers, order: TermOrder,
                            field: FieldConfig = QQ, incremental: bool = True) -> Polynomial:
    """Normal form of the graph polynomial modulo ``reducers``.

    Incrementally the running residue is multiplied by one edge factor at a
    time and reduced again, so the full product is never expanded.
    """
    reducers = list(reducers)
    if not incremental:
        return normal_form(expand_graph_polynomial(G, field), reducers, order)
    f = Polynomial.one(G.n, field)
    for i, j in graph_poly_factors(G):
        f = normal_form(f * edge_factor(i, j, G.n, field), reducers, order)
        if not f:
            break
    return f


def _check_jnk(G: Graph, k: int, max_n: int, max_k: int):
    if k + 1 > G.n:
        raise UnsupportedConfiguration(f"the clique method needs k + 1 <= n (n={G.n}, k={k})")
    if G.n > max_n or k > max_k:
        raise UnsupportedConfiguration(
            f"the clique method is capped at n <= {max_n}, k <= {max_k}")


def is_k_colorable(G: Graph, k: int, method: ColorMethod | str = ColorMethod.ReduceOne,
                   order: TermOrder | str = DEGREVLEX_ORDER, field: FieldConfig = QQ, *,
                   incremental: bool = True, jnk_max_n: int = JNK_MAX_N,
                   jnk_max_k: int = JNK_MAX_K) -> Verdict:
    method = method if isinstance(method, ColorMethod) else ColorMethod(method)
    order = term_order(order)
    validate_field(field, k)
    if method is ColorMethod.NfGraphPolyJnk:
        _check_jnk(G, k, jnk_max_n, jnk_max_k)
    start = time.perf_counter()
    dim = None
    if method is ColorMethod.QuotientDim:
        B = graph_ideal_basis(G, k, order, field, incremental)
        dim = count_standard_monomials(B)
        answer, cert = dim != 0, dim
    elif method is ColorMethod.ReduceOne:
        B = graph_ideal_basis(G, k, order, field, incremental)
        cert = normal_form(Polynomial.one(G.n, field), B)
        answer = bool(cert)
    elif method is ColorMethod.NfGraphPolyInk:
        gens = ideal_I_nk(G.n, k, field).gens
        cert = reduce_graph_polynomial(G, gens, order, field, incremental)
        answer = bool(cert)
    else:
        gens = ideal_J_nk(G.n, k, field).gens
        cert = reduce_graph_polynomial(G, gens, order, field, incremental)
        answer = bool(cert)
    return Verdict(answer, method.name, order.kind, field.spec(), cert,
                   time.perf_counter() - start, dim=dim)


def _check_coloring(G: Graph, k: int, coloring: ColorPartition | None) -> ColorPartition:
    if coloring is None:
        raise InvalidColoring("this method needs a proper coloring using all k colors")
    if coloring.n != G.n or not coloring.is_proper_for(G):
        raise InvalidColoring(f"{coloring} is not a proper coloring of the graph")
    if coloring.l != k:
        raise InvalidColoring(f"{coloring} uses {coloring.l} colors, not all {k}")
    return coloring


def is_uniquely_k_colorable(G: Graph, k: int,
                            method: UniqueMethod | str = UniqueMethod.QuotientDimFactorial,
                            coloring: ColorPartition | None = None,
                            order: TermOrder | str = DEGREVLEX_ORDER,
                            field: FieldConfig = QQ, *, incremental: bool = True) -> Verdict:
    method = method if isinstance(method, UniqueMethod) else UniqueMethod(method)
    order = term_order(order)
    validate_field(field, k)
    if method in (UniqueMethod.NuBasisMembership, UniqueMethod.ColonMembership):
        coloring = _check_coloring(G, k, coloring)
    start = time.perf_counter()
    dim = partition = None
    if method is UniqueMethod.NuBasisMembership:
        B = graph_ideal_basis(G, k, order, field, incremental)
        basis = nu_basis(coloring, k, field=field)
        answer = all(not normal_form(g, B) for g in basis)
        cert = B
    elif method is UniqueMethod.ColonMembership:
        basis = nu_basis(coloring, k, field=field)
        C = colon(ideal_I_nk(G.n, k, field), Ideal(basis.polys, G.n, field), order)
        cert = reduce_graph_polynomial(G, C.groebner_basis(order).polys, order, field,
                                       incremental)
        answer = not cert
    elif method is UniqueMethod.QuotientDimFactorial:
        B = graph_ideal_basis(G, k, order, field, incremental)
        dim = count_standard_monomials(B)
        # below k vertices no coloring uses all k colors, although K_{k-1} has dim k!
        answer, cert = dim == math.factorial(k) and G.n >= k, dim
    else:
        B = graph_ideal_basis(G, k, order, field, incremental)
        partition = recognize_nu_shape(B, G.n, k)
        answer, cert = partition is not None, partition
    return Verdict(answer, method.name, order.kind, field.spec(), cert,
                   time.perf_counter() - start, dim=dim, partition=partition)


@dataclass
class Decomposition:
    ideal_ok: bool
    partitions: list = dc_field(default_factory=list)

    def __iter__(self):
        return iter((self.ideal_ok, self.partitions))


def decompose(G: Graph, k: int, order: TermOrder | str = DEGREVLEX_ORDER,
              field: FieldConfig = QQ, budget: int = DECOMPOSE_BUDGET) -> Decomposition:
    """Check that ``I_{G,k}`` is the intersection of the coloring ideals."""
    order = term_order(order)
    validate_field(field, k)
    oracle = enumerate_colorings(G, k, budget=budget)
    partitions = sorted(oracle.partitions, key=lambda p: p.classes)
    I = Ideal(ideal_I_Gk(G, k, field).gens, G.n, field)
    I.seed(graph_ideal_basis(G, k, order, field))
    if not partitions:
        target = Ideal.unit(G.n, field)
    else:
        target = intersect_all([coloring_ideal(p, k, field, orders=(order,))
                                for p in partitions], order)
    return Decomposition(ideals_equal(I, target, order), partitions)
