"""Simple graphs on vertices 1..n, color partitions and a coloring oracle."""

from __future__ import annotations

import itertools
import json
import math
import random
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .field import QQ, FieldConfig
from .poly import Polynomial, linear_form


class DimacsError(ValueError):
    pass


class DimacsWarning(UserWarning):
    pass


class OracleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {{{i},{j}}} outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def relabel(self, perm: Mapping[int, int]) -> "Graph":
        return Graph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges))

    def __len__(self):
        return self.n


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for b, p in enumerate(pairs) if mask >> b & 1))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, (e for e in itertools.combinations(range(1, n + 1), 2)
                                if rng.random() < p))


# DIMACS .col

def parse_dimacs(text: str) -> Graph:
    """Read the DIMACS edge format (``c``, ``p edge n m`` and ``e i j`` lines)."""
    n = declared = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed problem line {raw!r}")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed problem line {raw!r}") from None
            if n < 0 or declared < 0:
                raise DimacsError(f"line {lineno}: negative counts")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line {raw!r}")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge line {raw!r}") from None
            if i == j:
                raise DimacsError(f"line {lineno}: self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise DimacsError(f"line {lineno}: vertex out of range 1..{n}")
            edges.add((min(i, j), max(i, j)))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if declared != len(edges):
        warnings.warn(f"header declares {declared} edges, found {len(edges)} distinct",
                      DimacsWarning, stacklevel=2)
    return Graph(n, frozenset(edges))


def render_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = [f"c {c}" for c in (comment.splitlines() if comment else [])]
    lines.append(f"p edge {G.n} {len(G.edges)}")
    lines.extend(f"e {i} {j}" for i, j in G.edge_list)
    return "\n".join(lines) + "\n"


def read_dimacs(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


# color partitions

@dataclass(frozen=True)
class ColorPartition:
    """Color classes of a coloring, sorted by their maximum vertex.

    ``maxima`` are the class maxima ``m_1 < ... < m_l``; the last is ``n``.
    """

    classes: tuple

    def __post_init__(self):
        classes = tuple(sorted((tuple(sorted(set(c))) for c in self.classes),
                               key=lambda c: c[-1] if c else 0))
        if any(not c for c in classes):
            raise ValueError("empty color class")
        seen = [v for c in classes for v in c]
        if len(seen) != len(set(seen)):
            raise ValueError("color classes overlap")
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("color classes must cover 1..n exactly")
        object.__setattr__(self, "classes", classes)

    @classmethod
    def from_coloring(cls, colors: Mapping[int, object] | Sequence) -> "ColorPartition":
        """From ``{vertex: color}`` or a sequence whose item ``i`` colors vertex ``i + 1``."""
        if not isinstance(colors, Mapping):
            colors = {i + 1: c for i, c in enumerate(colors)}
        groups = {}
        for v, c in colors.items():
            groups.setdefault(c, []).append(v)
        return cls(tuple(groups.values()))

    @property
    def n(self) -> int:
        return self.classes[-1][-1]

    @property
    def l(self) -> int:
        return len(self.classes)

    @property
    def maxima(self) -> tuple[int, ...]:
        return tuple(c[-1] for c in self.classes)

    @cached_property
    def _owner(self) -> dict[int, int]:
        return {v: idx for idx, c in enumerate(self.classes) for v in c}

    def class_index(self, v: int) -> int:
        return self._owner[v]

    def class_max(self, v: int) -> int:
        return self.classes[self._owner[v]][-1]

    def is_proper_for(self, G: Graph) -> bool:
        if G.n != self.n:
            return False
        own = self._owner
        return all(own[i] != own[j] for i, j in G.edges)

    def to_text(self) -> str:
        return ";".join(",".join(map(str, c)) for c in self.classes)

    def to_list(self) -> list[list[int]]:
        return [list(c) for c in self.classes]

    def __str__(self):
        return self.to_text()


def parse_partition(text: str) -> ColorPartition:
    """Parse ``1,5,8,10;2,6,9,11;3,4,7,12``."""
    try:
        classes = [tuple(int(v) for v in part.split(",") if v.strip())
                   for part in text.strip().split(";")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return ColorPartition(tuple(classes))


# cliques, bounds, oracle

def has_clique(G: Graph, size: int) -> bool:
    """Backtracking search for ``size`` pairwise adjacent vertices."""
    if size < 1:
        raise ValueError("clique size must be positive")
    if size > G.n:
        return False
    adj = G.adjacency

    def grow(chosen: int, candidates: frozenset) -> bool:
        if chosen == size:
            return True
        if chosen + len(candidates) < size:
            return False
        for v in sorted(candidates):
            if grow(chosen + 1, candidates & {u for u in adj[v] if u > v}):
                return True
        return False

    return grow(0, frozenset(range(1, G.n + 1)))


def xu_bound_edges(n: int, k: int) -> int:
    """Minimum edge count ``(k-1)n - C(k,2)`` of a uniquely k-colorable graph."""
    if k < 1:
        raise ValueError("k must be positive")
    return (k - 1) * n - k * (k - 1) // 2


@dataclass(frozen=True)
class ColoringCount:
    count: int
    partitions: frozenset

    def to_json(self) -> str:
        parts = sorted(p.to_list() for p in self.partitions)
        return json.dumps({"count": self.count, "partitions": parts})

    @classmethod
    def from_json(cls, text: str) -> "ColoringCount":
        d = json.loads(text)
        return cls(d["count"], frozenset(ColorPartition(tuple(map(tuple, p)))
                                         for p in d["partitions"]))

    def surjective(self, k: int) -> list[ColorPartition]:
        """Partitions whose colorings use all ``k`` colors."""
        return sorted((p for p in self.partitions if p.l == k), key=lambda p: p.classes)


def enumerate_colorings(G: Graph, k: int, budget: int = 20) -> ColoringCount:
    """Count proper colorings with labels 1..k and collect their partitions.

    Each partition into ``l`` classes is generated once (new classes open in
    vertex order) and stands for ``k!/(k-l)!`` labeled colorings.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if G.n > budget:
        raise OracleBudgetError(f"{G.n} vertices exceeds the oracle budget of {budget}")
    n = G.n
    earlier = [[u for u in G.adjacency.get(v, ()) if u < v] for v in range(n + 1)]
    color = [0] * (n + 1)
    found: list[tuple] = []

    def place(v: int, used: int):
        if v > n:
            found.append((used, tuple(color[1:])))
            return
        banned = {color[u] for u in earlier[v]}
        for c in range(min(used + 1, k)):
            if c not in banned:
                color[v] = c
                place(v + 1, max(used, c + 1))

    if n == 0:
        return ColoringCount(1, frozenset())
    place(1, 0)
    count = sum(math.perm(k, used) for used, _ in found)
    parts = frozenset(ColorPartition.from_coloring(cols) for _, cols in found)
    return ColoringCount(count, parts)


def count_colorings_bruteforce(G: Graph, k: int) -> int:
    """Plain ``k^n`` enumeration, for cross-checking small cases."""
    return sum(all(c[i - 1] != c[j - 1] for i, j in G.edges)
               for c in itertools.product(range(k), repeat=G.n))


# graph polynomial

def graph_poly_factors(G: Graph) -> list[tuple[int, int]]:
    """Factors ``(i, j)``, ``i < j``, of the graph polynomial, one per edge."""
    return list(G.edge_list)


def edge_factor(i: int, j: int, n: int, field: FieldConfig = QQ) -> Polynomial:
    return linear_form({i: 1, j: -1}, n, field)


def expand_graph_polynomial(G: Graph, field: FieldConfig = QQ) -> Polynomial:
    """Fully expanded product of ``x_i - x_j`` over the edges."""
    f = Polynomial.one(G.n, field)
    for i, j in graph_poly_factors(G):
        f = f * edge_factor(i, j, G.n, field)
    return f
