"""Simple graphs, edge ideals, and the combinatorial v-number.

The v-number of an edge ideal is the minimum size of a stable set whose
neighborhood is a minimal vertex cover; closed forms cover paths, cycles,
1-clique sums and joins.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError, VnumError
from .monomials import Monomial, MonomialIdeal, minimalize

# 2^24 subsets is the worst-case enumeration we are willing to attempt.
MAX_VGRAPH_VERTICES = 24


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices 1..vertex_count."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise VnumError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise VnumError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.vertex_count):
                raise VnumError(f"edge ({u},{v}) out of range or unsorted")

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def from_edges(n: int, pairs) -> Graph:
    edges = set()
    for u, v in pairs:
        if u == v:
            raise VnumError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise VnumError(f"edge ({u},{v}) outside 1..{n}")
        edges.add(_edge(u, v))
    return Graph(n, frozenset(edges))


def path(n: int) -> Graph:
    if n < 2:
        raise VnumError("path needs at least 2 vertices")
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise VnumError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def clique_sum_1(g1: Graph, g2: Graph, v1: int = 1, v2: int = 1) -> Graph:
    """Glue g2 onto g1 by identifying vertex v2 of g2 with vertex v1 of g1.

    g1 keeps its indices; the remaining g2 vertices are appended in order.
    """
    if not 1 <= v1 <= g1.vertex_count:
        raise VnumError(f"vertex {v1} not in first operand")
    if not 1 <= v2 <= g2.vertex_count:
        raise VnumError(f"vertex {v2} not in second operand")
    remap = {}
    nxt = g1.vertex_count + 1
    for w in g2.vertices:
        if w == v2:
            remap[w] = v1
        else:
            remap[w] = nxt
            nxt += 1
    edges = set(g1.edges)
    edges.update(_edge(remap[u], remap[v]) for u, v in g2.edges)
    return Graph(g1.vertex_count + g2.vertex_count - 1, frozenset(edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    shift = g1.vertex_count
    edges = set(g1.edges)
    edges.update((u + shift, v + shift) for u, v in g2.edges)
    edges.update(
        _edge(u, v + shift) for u in g1.vertices for v in g2.vertices
    )
    return Graph(g1.vertex_count + g2.vertex_count, frozenset(edges))


def edge_ideal(g: Graph) -> MonomialIdeal:
    if not g.edges:
        raise VnumError("edge ideal of an edgeless graph is the zero ideal")
    n = g.vertex_count
    return minimalize(
        Monomial.variable(n, u).mul(Monomial.variable(n, v)) for u, v in g.edges
    )


def neighborhood(g: Graph, vertices) -> frozenset[int]:
    """Vertices completing an edge together with the given set."""
    vs = set(vertices)
    _check_vertices(g, vs)
    return frozenset(
        w
        for u, v in g.edges
        for w, other in ((u, v), (v, u))
        if other in vs
    )


def is_stable(g: Graph, vertices) -> bool:
    vs = set(vertices)
    _check_vertices(g, vs)
    return not any(u in vs and v in vs for u, v in g.edges)


def is_vertex_cover(g: Graph, cover) -> bool:
    cs = set(cover)
    _check_vertices(g, cs)
    return all(u in cs or v in cs for u, v in g.edges)


def is_minimal_vertex_cover(g: Graph, cover) -> bool:
    cs = set(cover)
    if not is_vertex_cover(g, cs):
        return False
    for c in cs:
        if is_vertex_cover(g, cs - {c}):
            return False
    return True


def _check_vertices(g: Graph, vs):
    for v in vs:
        if not 1 <= v <= g.vertex_count:
            raise VnumError(f"vertex {v} outside 1..{g.vertex_count}")


@dataclass(frozen=True)
class StableWitness:
    value: int
    stable_set: frozenset[int]


def v_graph(g: Graph) -> StableWitness:
    """Minimum stable set whose neighborhood is a minimal vertex cover.

    Subsets are enumerated cardinality-ascending (lex within a cardinality),
    so the first hit is minimum and deterministic.
    """
    if not g.edges:
        raise VnumError("v-number undefined for an edgeless graph")
    if g.vertex_count > MAX_VGRAPH_VERTICES:
        raise BudgetExceededError(2**g.vertex_count, 2**MAX_VGRAPH_VERTICES)
    for k in range(g.vertex_count + 1):
        for subset in itertools.combinations(g.vertices, k):
            a = frozenset(subset)
            if not is_stable(g, a):
                continue
            if is_minimal_vertex_cover(g, neighborhood(g, a)):
                return StableWitness(k, a)
    raise VnumError("internal error: no stable witness found")


def minimum_stable_witnesses(g: Graph) -> list[StableWitness]:
    """Every minimum-cardinality stable witness, in lex order."""
    first = v_graph(g)
    out = []
    for subset in itertools.combinations(g.vertices, first.value):
        a = frozenset(subset)
        if is_stable(g, a) and is_minimal_vertex_cover(g, neighborhood(g, a)):
            out.append(StableWitness(first.value, a))
    return out


def v_path_closed(n: int) -> int:
    """floor(n/4), plus 1 when n = 2 or 3 mod 4."""
    if n < 2:
        raise VnumError("path needs at least 2 vertices")
    return n // 4 + (1 if n % 4 in (2, 3) else 0)


def v_cycle_closed(n: int) -> int:
    """v(P_{n-3}) + 1 for n >= 5; triangles and squares have v = 1."""
    if n < 3:
        raise VnumError("cycle needs at least 3 vertices")
    if n in (3, 4):
        return 1
    return v_path_closed(n - 3) + 1


def v_join_closed(g1: Graph, g2: Graph) -> int:
    """min(v(G1), v(G2)); falls back to direct enumeration when an operand
    is edgeless (its own v-number is undefined)."""
    if not g1.edges or not g2.edges:
        return v_graph(join(g1, g2)).value
    return min(v_graph(g1).value, v_graph(g2).value)


def clique_sum_analysis(
    kind: str, cycle_n: int, other_m: int
) -> tuple[int, int, int | None]:
    """Bounds/formula for the v-number of a 1-clique sum.

    kind "cycle+path": C_n glued to P_m; returns the bracket
    [v(C_n)+v(P_{m-2})-1, v(C_n)+v(P_{m-2})], exact at the lower end when
    n = 1,2 mod 4 and m = 0 mod 4.
    kind "cycle+cycle": C_n glued to C_m; exact v(C_n)+v(C_m)-1.
    """
    if kind == "cycle+path":
        if cycle_n < 3:
            raise VnumError("cycle needs at least 3 vertices")
        if other_m < 4:
            raise VnumError("clique-sum path needs at least 4 vertices")
        base = v_cycle_closed(cycle_n) + v_path_closed(other_m - 2)
        exact = base - 1 if (cycle_n % 4 in (1, 2) and other_m % 4 == 0) else None
        return base - 1, base, exact
    if kind == "cycle+cycle":
        if cycle_n < 3 or other_m < 3:
            raise VnumError("cycle needs at least 3 vertices")
        exact = v_cycle_closed(cycle_n) + v_cycle_closed(other_m) - 1
        return exact, exact, exact
    raise VnumError(f"unknown clique-sum kind {kind!r}")
