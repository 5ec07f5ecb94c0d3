import sys
import itertools

import pytest
import sympy

from colorideal import QQ, Polynomial
from colorideal.graph import Graph, complete_graph, cycle_graph, path_graph


def to_sympy(f: Polynomial, syms):
    """Independent expansion route: rebuild ``f`` as a sympy expression."""
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator)) if f.field == QQ else sympy.Integer(c)
        for s, e in zip(syms, m):
            term *= s ** e
        expr += term
    return sympy.expand(expr)


def symbols(n):
    return sympy.symbols(f"x1:{n + 1}")


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def twelve_partition():
    from colorideal import parse_partition
    return parse_partition("1,5,8,10;2,6,9,11;3,4,7,12")


TWELVE_VERTEX_BASIS = [
    "x12^3 - 1", "x7 - x12", "x4 - x12", "x3 - x12",
    "x11^2 + x11*x12 + x12^2", "x9 - x11", "x6 - x11", "x2 - x11",
    "x10 + x11 + x12", "x8 + x11 + x12", "x5 + x11 + x12", "x1 + x11 + x12",
]


def forced_graph(partition):
    """A uniquely colorable graph realizing ``partition`` with l = k >= 2.

    The class maxima form a clique and every other vertex is joined to the
    maxima of all classes but its own, which pins its color.
    """
    maxima = partition.maxima
    edges = set(itertools.combinations(maxima, 2))
    for v in range(1, partition.n + 1):
        own = partition.class_max(v)
        edges.update((min(v, m), max(v, m)) for m in maxima if m != own)
    return Graph.from_edges(partition.n, edges)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
