"""Weighted acyclic digraphs, path generating functions, and the
vertex-disjoint path-family enumeration oracle.

Graphs are finite, multi-edges are allowed, and edge weights live in any
commutative ring (int, Fraction, QtPolynomial).  A family of paths is
nonintersecting when the paths are pairwise vertex-disjoint; a length-zero
path sitting at a vertex blocks that vertex.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .linalg import ExactMatrix, determinant, pfaffian, upper_twos
from .ring import parse_scalar, scalar_str

DEFAULT_ENUMERATION_CAP = 10_000_000


def enumeration_cap() -> int:
    """Current enumeration budget; TILING_REFLECT_BUDGET overrides the default."""
    value = os.environ.get("TILING_REFLECT_BUDGET")
    return int(value) if value else DEFAULT_ENUMERATION_CAP


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive enumeration exceeds its state budget."""


class Budget:
    """Mutable countdown shared across one enumeration call tree."""

    __slots__ = ("remaining", "limit")

    def __init__(self, limit: int | None = None):
        self.limit = limit if limit is not None else enumeration_cap()
        self.remaining = self.limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceeded(
                f"enumeration exceeded its budget of {self.limit} states; "
                "raise TILING_REFLECT_BUDGET or shrink the instance"
            )


class CycleError(ValueError):
    """The supplied edge set contains a directed cycle."""


class WeightedDag:
    """Finite acyclic directed graph with ring-valued edge weights."""

    def __init__(self, vertices, edges):
        self.vertices = list(vertices)
        index = {}
        for v in self.vertices:
            if v in index:
                raise ValueError(f"duplicate vertex id {v!r}")
            index[v] = len(index)
        self._index = index
        self.edges = []
        self._out: dict[object, list[tuple[object, object]]] = {v: [] for v in self.vertices}
        indegree = {v: 0 for v in self.vertices}
        for src, dst, weight in edges:
            if src not in index or dst not in index:
                raise ValueError(f"edge {src!r} -> {dst!r} uses an unknown vertex")
            self.edges.append((src, dst, weight))
            self._out[src].append((dst, weight))
            indegree[dst] += 1
        self._topo = self._toposort(indegree)

    def _toposort(self, indegree) -> list:
        order = []
        ready = [v for v in self.vertices if indegree[v] == 0]
        while ready:
            v = ready.pop()
            order.append(v)
            for w, _ in self._out[v]:
                indegree[w] -= 1
                if indegree[w] == 0:
                    ready.append(w)
        if len(order) != len(self.vertices):
            raise CycleError("graph has a directed cycle")
        return order

    def __contains__(self, vertex) -> bool:
        return vertex in self._index

    def out_edges(self, vertex):
        return self._out[vertex]

    def out_degree(self, vertex) -> int:
        return len(self._out[vertex])

    def topological_order(self) -> list:
        return list(self._topo)

    def to_json(self, starts=None, ends=None) -> dict:
        doc = {
            "vertices": [_json_id(v) for v in self.vertices],
            "edges": [
                {"from": _json_id(s), "to": _json_id(d), "w": scalar_str(w)}
                for s, d, w in self.edges
            ],
        }
        if starts is not None:
            doc["starts"] = [_json_id(v) for v in starts]
        if ends is not None:
            doc["ends"] = [_json_id(v) for v in ends]
        return doc

    @classmethod
    def from_json(cls, doc) -> tuple["WeightedDag", "EndpointSpec | None"]:
        g = cls(
            doc["vertices"],
            [(e["from"], e["to"], parse_scalar(str(e.get("w", "1")))) for e in doc["edges"]],
        )
        spec = None
        if doc.get("starts") and doc.get("ends"):
            spec = EndpointSpec(tuple(doc["starts"]), tuple(doc["ends"]))
        return g, spec


def _json_id(v):
    return v if isinstance(v, (str, int)) else str(v)


@dataclass(frozen=True)
class EndpointSpec:
    """Ordered start and end tuples; starts may not outnumber ends."""

    starts: tuple
    ends: tuple

    def __post_init__(self):
        if len(set(self.starts)) != len(self.starts):
            raise ValueError("start vertices must be distinct")
        if len(set(self.ends)) != len(self.ends):
            raise ValueError("end vertices must be distinct")
        if len(self.starts) > len(self.ends):
            raise ValueError("need at least as many ends as starts")

    def validate(self, graph: WeightedDag) -> None:
        for v in itertools.chain(self.starts, self.ends):
            if v not in graph:
                raise ValueError(f"vertex {v!r} not in graph")


def gf_from(graph: WeightedDag, source):
    """Generating function of all paths from source to every vertex."""
    if source not in graph:
        raise ValueError(f"vertex {source!r} not in graph")
    gf = {v: 0 for v in graph.vertices}
    gf[source] = 1
    for v in graph.topological_order():
        value = gf[v]
        if value == 0:
            continue
        for w, weight in graph.out_edges(v):
            gf[w] = gf[w] + value * weight
    return gf


def path_gf(graph: WeightedDag, a, b):
    """Sum of weights of all directed paths from a to b; 1 when a == b."""
    if b not in graph:
        raise ValueError(f"vertex {b!r} not in graph")
    return gf_from(graph, a)[b]


def path_matrix(graph: WeightedDag, spec: EndpointSpec) -> ExactMatrix:
    """Matrix of pairwise path generating functions, starts x ends."""
    spec.validate(graph)
    rows = []
    for u in spec.starts:
        gf = gf_from(graph, u)
        rows.append([gf[v] for v in spec.ends])
    return ExactMatrix.from_rows(rows)


def iter_path_vertex_sets(graph: WeightedDag, a, b, budget: Budget):
    """Yield (vertex frozenset, weight) for every directed path a -> b."""
    if a not in graph or b not in graph:
        raise ValueError("unknown vertex")

    def dfs(x, weight, seen):
        budget.spend()
        if x == b:
            yield frozenset(seen), weight
            return  # a DAG path cannot leave b and come back
        for y, w in graph.out_edges(x):
            if y not in seen:
                yield from dfs(y, weight * w, seen | {y})

    yield from dfs(a, 1, frozenset({a}))


def permutation_sign(perm) -> int:
    inversions = sum(
        1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def nonintersecting_gf(graph: WeightedDag, spec: EndpointSpec, perm=None, budget: Budget | None = None):
    """Weight sum over families of vertex-disjoint paths, by exhaustion.

    The k-th path runs from starts[perm[k]] to ends[j_k] for strictly
    increasing end indices j_1 < ... < j_m.  This is the oracle every formula
    in the package is checked against.
    """
    spec.validate(graph)
    m = len(spec.starts)
    n = len(spec.ends)
    if perm is None:
        perm = tuple(range(m))
    if sorted(perm) != list(range(m)):
        raise ValueError("perm must be a permutation of the start indices")
    if budget is None:
        budget = Budget()
    end_index = {v: j for j, v in enumerate(spec.ends)}

    def rec(k: int, min_j: int, blocked: frozenset):
        if k == m:
            return 1
        start = spec.starts[perm[k]]
        if start in blocked:
            return 0
        total = 0

        def dfs(x, weight, seen):
            nonlocal total
            budget.spend()
            j = end_index.get(x)
            if j is not None and j >= min_j:
                tail = rec(k + 1, j + 1, blocked | seen)
                if tail != 0:
                    total = total + weight * tail
            for y, w in graph.out_edges(x):
                if y not in blocked and y not in seen:
                    dfs(y, weight * w, seen | {y})

        dfs(start, 1, frozenset({start}))
        return total

    return rec(0, 0, frozenset())


def signed_path_sum(graph: WeightedDag, spec: EndpointSpec, budget: Budget | None = None):
    """Permutation-signed sum of nonintersecting-family generating functions."""
    m = len(spec.starts)
    if budget is None:
        budget = Budget()
    total = 0
    for perm in itertools.permutations(range(m)):
        value = nonintersecting_gf(graph, spec, perm, budget)
        if value != 0:
            total = total + permutation_sign(perm) * value
    return total


def is_compatible(graph: WeightedDag, spec: EndpointSpec, budget: Budget | None = None) -> bool:
    """Whether every crossing-indexed path pair is forced to share a vertex.

    Checked by exhaustive path-pair enumeration, so only suitable for small
    graphs.  Vacuously true for a single start.
    """
    spec.validate(graph)
    if budget is None:
        budget = Budget()
    m = len(spec.starts)
    n = len(spec.ends)
    cache: dict[tuple, list[frozenset]] = {}

    def vertex_sets(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = [vs for vs, _ in iter_path_vertex_sets(graph, a, b, budget)]
        return cache[key]

    for i, j in itertools.combinations(range(m), 2):
        for k, l in itertools.combinations(range(n), 2):
            upper = vertex_sets(spec.starts[i], spec.ends[l])
            if not upper:
                continue
            lower = vertex_sets(spec.starts[j], spec.ends[k])
            for p in upper:
                for s in lower:
                    budget.spend()
                    if not (p & s):
                        return False
    return True


def signed_sum_squared_dets(graph: WeightedDag, spec: EndpointSpec):
    """The two determinant evaluations of the squared signed path sum.

    Returns (det[M U M^T], det[M U^T M^T]) for the path matrix M; both equal
    the square of signed_path_sum regardless of compatibility.
    """
    m = path_matrix(graph, spec)
    u = upper_twos(m.cols)
    mt = m.transpose()
    return determinant(m * u * mt), determinant(m * u.transpose() * mt)


def unfixed_end_pfaffian(graph: WeightedDag, spec: EndpointSpec):
    """Pfaffian formula for path families with unfixed ending points.

    Builds the skew matrix Q with Q[i,j] = sum over end pairs s < t of the
    2x2 path-matrix minors, and returns Pf[Q].  For an odd number of starts
    the matrix is bordered by the path-matrix row sums (the phantom
    start-equals-end vertex), giving a Pfaffian of order m + 1.
    """
    m = path_matrix(graph, spec)
    rows, n = m.rows, m.cols
    if rows > n:
        raise ValueError("need at least as many ends as starts")
    q = [[0] * rows for _ in range(rows)]
    for i in range(rows):
        for j in range(i + 1, rows):
            acc = 0
            for s in range(n):
                for tt in range(s + 1, n):
                    acc = acc + m.entry(i, s) * m.entry(j, tt) - m.entry(i, tt) * m.entry(j, s)
            q[i][j] = acc
            q[j][i] = -acc
    if rows % 2:
        sums = [sum_row(m, i) for i in range(rows)]
        bord = [[0] + sums]
        for i in range(rows):
            bord.append([-sums[i]] + q[i])
        q = bord
    return pfaffian(ExactMatrix.from_rows(q))


def sum_row(matrix: ExactMatrix, i: int):
    acc = 0
    for x in matrix.row(i):
        acc = acc + x
    return acc


def grid_graph(width: int, height: int, weight=1) -> WeightedDag:
    """Up/right lattice on the vertex rectangle [0, width] x [0, height]."""
    vertices = [(x, y) for x in range(width + 1) for y in range(height + 1)]
    edges = []
    for x in range(width + 1):
        for y in range(height + 1):
            if x < width:
                edges.append(((x, y), (x + 1, y), weight))
            if y < height:
                edges.append(((x, y), (x, y + 1), weight))
    return WeightedDag(vertices, edges)
