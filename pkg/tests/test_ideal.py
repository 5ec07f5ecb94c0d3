import threading

import pytest

from colorideal.coloring import coloring_ideal, ideal_I_Gk, ideal_I_nk
from colorideal.field import GF, QQ
from colorideal.graph import (Graph, all_graphs, complete_graph, count_colorings_bruteforce,
                              expand_graph_polynomial, parse_partition, path_graph)
from colorideal.ideal import (Ideal, colon, colon_principal, contains, ideals_equal,
                              intersect, intersect_all)
from colorideal.poly import ALL_ORDERS, LEX_ORDER, Polynomial, parse_polynomial


def P(text, n=2, field=QQ):
    return parse_polynomial(text, n, field)


def I(*texts, n=2, field=QQ):
    return Ideal([P(t, n, field) for t in texts], n, field)


def test_contains_examples(p3, k4):
    for o in ALL_ORDERS:
        assert contains(ideal_I_Gk(k4, 3), Polynomial.one(4), o)
        assert not contains(ideal_I_Gk(p3, 3), Polynomial.one(3), o)
        assert contains(I("x1"), P("x1*x2"), o)
        assert not contains(I("x1"), P("x2"), o)


def test_contains_zero_ideal():
    Z = Ideal([], 2)
    assert contains(Z, Polynomial.zero(2))
    assert not contains(Z, P("x1"))


def test_ring_mismatch_rejected():
    with pytest.raises(ValueError):
        contains(I("x1"), P("x1", 3))
    with pytest.raises(ValueError):
        ideals_equal(I("x1"), I("x1", field=GF(5)))


def test_ideals_equal_examples():
    assert ideals_equal(I("x1 - 1"), I("2*x1 - 2"))
    edge = Graph.from_edges(2, [(1, 2)])
    assert not ideals_equal(ideal_I_nk(2, 2), ideal_I_Gk(edge, 2))
    # dimensions 4 and 2, independently counted
    assert count_colorings_bruteforce(Graph(2, frozenset()), 2) == 4
    assert count_colorings_bruteforce(edge, 2) == 2


def test_intersect_points():
    for o in ALL_ORDERS:
        K = intersect(I("x1 - 1", n=1), I("x1 + 1", n=1), o)
        assert ideals_equal(K, I("x1^2 - 1", n=1), o)


def test_intersect_path_colorings(p3):
    A1 = coloring_ideal(parse_partition("1,3;2"), 3)
    A2 = coloring_ideal(parse_partition("1;2;3"), 3)
    for o in ALL_ORDERS:
        assert ideals_equal(intersect(A1, A2, o), ideal_I_Gk(p3, 3), o)


def test_intersect_idempotent_and_units():
    J = ideal_I_Gk(path_graph(3), 2)
    assert ideals_equal(intersect(J, J), J)
    assert ideals_equal(intersect(J, Ideal.unit(3)), J)
    assert intersect(J, Ideal([], 3)).is_zero()


def test_intersect_commutative_associative():
    A = I("x1^2 - 1", "x2 - 1")
    B = I("x1 - 1", "x2^2 - 1")
    C = I("x1 + x2", "x2^2 - 1")
    for o in ALL_ORDERS:
        assert ideals_equal(intersect(A, B, o), intersect(B, A, o), o)
        left = intersect(intersect(A, B, o), C, o)
        right = intersect(A, intersect(B, C, o), o)
        assert ideals_equal(left, right, o)
        assert ideals_equal(intersect_all([A, B, C], o), left, o)


def test_intersect_contains_both_products():
    A, B = I("x1 - 1"), I("x2 + 1")
    K = intersect(A, B)
    for f in A.gens:
        for g in B.gens:
            assert K.contains(f * g)
    assert not K.contains(P("x1 - 1"))


def test_colon_examples():
    x = I("x1^2 - 1", n=1)
    for o in ALL_ORDERS:
        assert ideals_equal(colon(x, I("x1 - 1", n=1), o), I("x1 + 1", n=1), o)
        J = ideal_I_nk(3, 2)
        assert ideals_equal(colon(J, Ideal.unit(3), o), J, o)


def test_colon_single_edge():
    edge = Graph.from_edges(2, [(1, 2)])
    R = colon(ideal_I_nk(2, 2), ideal_I_Gk(edge, 2))
    assert ideals_equal(R, I("x1^2 - 1", "x1 - x2"))


def test_colon_principal_member_gives_unit():
    assert colon_principal(I("x1"), P("x1*x2")).is_unit()


def test_colon_by_zero_rejected():
    with pytest.raises(ValueError):
        colon(I("x1"), Ideal([], 2))
    with pytest.raises(ValueError):
        colon_principal(I("x1"), Polynomial.zero(2))


@pytest.mark.parametrize("k", [2, 3])
def test_colon_identity_small_graphs(k):
    # I_{n,k} : I_{G,k} = I_{n,k} + <f_G>
    for n in (2, 3):
        for G in all_graphs(n):
            if not G.edges:
                continue
            lhs = colon(ideal_I_nk(n, k), ideal_I_Gk(G, k))
            rhs = ideal_I_nk(n, k) + expand_graph_polynomial(G)
            assert ideals_equal(lhs, rhs)


def test_contains_order_independent():
    G = complete_graph(3)
    A = ideal_I_Gk(G, 3)
    probes = [P("x1 + x2 + x3", 3), P("x1^3 - 1", 3), P("x1 - x2", 3),
              P("x1^2 + x1*x2 + x2^2", 3), P("x1*x2*x3 - 1", 3)]
    for f in probes:
        assert len({contains(A, f, o) for o in ALL_ORDERS}) == 1


def test_extend_reuses_basis():
    base = ideal_I_nk(3, 2)
    grown = base.extend([P("x1 + x2", 3)], LEX_ORDER)
    assert grown.cached(LEX_ORDER) is not None
    fresh = Ideal(base.gens + (P("x1 + x2", 3),), 3)
    assert ideals_equal(grown, fresh, LEX_ORDER)
    assert grown.dimension(LEX_ORDER) == 4


def test_dimension_and_zero_ideal():
    assert ideal_I_nk(2, 3).dimension() == 9
    with pytest.raises(ValueError):
        Ideal([], 2).dimension()


def test_cache_is_thread_safe():
    A = ideal_I_Gk(complete_graph(4), 3)
    results = []

    def work():
        results.append(A.groebner_basis().is_unit())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [True] * 4
