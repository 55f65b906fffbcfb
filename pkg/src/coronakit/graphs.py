"""Simple undirected graphs and the two subdivision-based corona products.

Vertices are integers ``0..n-1``.  Edges are unordered pairs kept in a
canonical sorted order so that every derived object (matrices, products,
serialized edge lists) is reproducible bit for bit.

Both products start from a first factor ``G1`` on ``n1`` vertices and one
copy of the subdivision ``S(G2)`` of the second factor per vertex of ``G1``.
The vertex variant joins each vertex of ``G1`` to the original ``G2``
vertices of its copy; the edge variant joins it to the inserted subdivision
vertices instead.  Product vertices are numbered in three consecutive
blocks, subdivision vertices first, then copy vertices, then base vertices,
with the owning ``G1`` vertex varying fastest.  Under that numbering the
product Laplacian is a 3x3 block matrix of Kronecker lifts ``X (x) I_{n1}``
of small factor matrices, which is what the closed-form inverse assembly
relies on.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import EdgeListError, PreconditionError

SUBDIVISION = "subdivision"
COPY = "copy"
BASE = "base"

VERTEX_KIND = "vertex"
EDGE_KIND = "edge"

# (class name, local index, copy owner); base vertices carry owner == local.
Coord = tuple[str, int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    vertex_count : int
        Number of vertices, labeled ``0..vertex_count-1``.
    edges : iterable of (int, int)
        Unordered endpoint pairs.  Stored sorted with ``u < v``; self-loops,
        duplicates and out-of-range endpoints are rejected.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        n = self.vertex_count
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError("vertex_count must be an integer")
        n = int(n)
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        canon = []
        for pair in self.edges:
            u, v = pair
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise ValueError(f"duplicate edge {cur}")
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.vertex_count, dtype=np.int64)
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range")
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """Star with a center (vertex 0) and ``leaves`` pendant vertices."""
    if leaves < 0:
        raise ValueError("leaves must be non-negative")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees().astype(np.float64))


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-edge incidence matrix, shape (n, m), columns in the canonical edge order."""
    r = np.zeros((g.vertex_count, g.edge_count))
    for e, (u, v) in enumerate(g.edges):
        r[u, e] = 1.0
        r[v, e] = 1.0
    return r


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency_matrix(g)


def subdivision(g: Graph) -> Graph:
    """Subdivision S(g): one new vertex per edge, splitting it in two.

    Original vertices keep their labels; the vertex inserted into edge
    ``e`` (canonical order) gets label ``n + e``.
    """
    n = g.vertex_count
    edges = []
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))
    return Graph(n + g.edge_count, tuple(edges))


def line_graph(g: Graph) -> Graph:
    """Line graph: vertices are the edges of ``g``, adjacent when they share an endpoint."""
    m = g.edge_count
    edges = []
    for e in range(m):
        for f in range(e + 1, m):
            if set(g.edges[e]) & set(g.edges[f]):
                edges.append((e, f))
    return Graph(m, tuple(edges))


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability; graphs with at most one vertex count as connected."""
    n = g.vertex_count
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return bool(seen.all())


def is_regular(g: Graph) -> int | None:
    """Common degree if every vertex has one, else None.  None for the empty graph."""
    if g.vertex_count == 0:
        return None
    d = g.degrees()
    first = int(d[0])
    if np.all(d == first):
        return first
    return None


@dataclass(frozen=True)
class CoronaLayout:
    """A corona product together with its vertex numbering.

    Global indices come in three consecutive blocks:

    ======================  =========================  =====================
    block                   range                      index of member
    ======================  =========================  =====================
    subdivision vertices    ``[0, n1*m2)``             ``e*n1 + i``
    copy vertices           ``[n1*m2, n1*m2+n1*n2)``   ``n1*m2 + a*n1 + i``
    base vertices           ``[n1*m2+n1*n2, n)``       ``n1*m2 + n1*n2 + i``
    ======================  =========================  =====================

    where ``e`` is an edge of the second factor, ``a`` one of its vertices
    and ``i`` the owning first-factor vertex.
    """

    kind: str
    g1: Graph
    g2: Graph
    product: Graph

    # factor sizes, stored for convenience
    n1: int = field(init=False)
    m1: int = field(init=False)
    n2: int = field(init=False)
    m2: int = field(init=False)

    def __post_init__(self) -> None:
        if self.kind not in (VERTEX_KIND, EDGE_KIND):
            raise ValueError(f"unknown product kind {self.kind!r}")
        object.__setattr__(self, "n1", self.g1.vertex_count)
        object.__setattr__(self, "m1", self.g1.edge_count)
        object.__setattr__(self, "n2", self.g2.vertex_count)
        object.__setattr__(self, "m2", self.g2.edge_count)

    @property
    def subdivision_count(self) -> int:
        return self.n1 * self.m2

    @property
    def copy_count(self) -> int:
        return self.n1 * self.n2

    @property
    def base_count(self) -> int:
        return self.n1

    def subdivision_index(self, e: int, i: int) -> int:
        if not 0 <= e < self.m2:
            raise IndexError(f"second-factor edge {e} out of range")
        if not 0 <= i < self.n1:
            raise IndexError(f"first-factor vertex {i} out of range")
        return e * self.n1 + i

    def copy_index(self, a: int, i: int) -> int:
        if not 0 <= a < self.n2:
            raise IndexError(f"second-factor vertex {a} out of range")
        if not 0 <= i < self.n1:
            raise IndexError(f"first-factor vertex {i} out of range")
        return self.n1 * self.m2 + a * self.n1 + i

    def base_index(self, i: int) -> int:
        if not 0 <= i < self.n1:
            raise IndexError(f"first-factor vertex {i} out of range")
        return self.n1 * self.m2 + self.n1 * self.n2 + i

    def classify(self, v: int) -> Coord:
        """Inverse of the index maps: (class, local index, copy owner)."""
        if not 0 <= v < self.product.vertex_count:
            raise IndexError(f"vertex {v} out of range")
        if v < self.subdivision_count:
            return (SUBDIVISION, v // self.n1, v % self.n1)
        v -= self.subdivision_count
        if v < self.copy_count:
            return (COPY, v // self.n1, v % self.n1)
        v -= self.copy_count
        return (BASE, v, v)

    def global_index(self, coord: Coord) -> int:
        cls, local, owner = coord
        if cls == SUBDIVISION:
            return self.subdivision_index(local, owner)
        if cls == COPY:
            return self.copy_index(local, owner)
        if cls == BASE:
            if owner != local:
                raise ValueError("base coordinates carry owner == local")
            return self.base_index(local)
        raise ValueError(f"unknown vertex class {cls!r}")

    def block_slices(self) -> tuple[slice, slice, slice]:
        s = self.subdivision_count
        c = self.copy_count
        n = self.product.vertex_count
        return slice(0, s), slice(s, s + c), slice(s + c, n)


def _corona(g1: Graph, g2: Graph, kind: str) -> CoronaLayout:
    if g1.vertex_count == 0:
        raise PreconditionError("corona product needs a nonempty first factor")
    n1 = g1.vertex_count
    n2, m2 = g2.vertex_count, g2.edge_count
    total = n1 * (1 + n2 + m2)

    def sub(e: int, i: int) -> int:
        return e * n1 + i

    def cop(a: int, i: int) -> int:
        return n1 * m2 + a * n1 + i

    def base(i: int) -> int:
        return n1 * m2 + n1 * n2 + i

    edges: list[tuple[int, int]] = []
    for u, v in g1.edges:
        edges.append((base(u), base(v)))
    for i in range(n1):
        for e, (a, b) in enumerate(g2.edges):
            edges.append((sub(e, i), cop(a, i)))
            edges.append((sub(e, i), cop(b, i)))
        if kind == VERTEX_KIND:
            for a in range(n2):
                edges.append((base(i), cop(a, i)))
        else:
            for e in range(m2):
                edges.append((base(i), sub(e, i)))
    product = Graph(total, tuple(edges))
    return CoronaLayout(kind=kind, g1=g1, g2=g2, product=product)


def corona_vertex(g1: Graph, g2: Graph) -> CoronaLayout:
    """Corona-vertex product: base vertices joined to their copy's original vertices.

    The product has ``n1 (1 + n2 + m2)`` vertices and ``m1 + n1 n2 + 2 n1 m2``
    edges.  Raises ``PreconditionError`` when ``g1`` is empty.
    """
    return _corona(g1, g2, VERTEX_KIND)


def corona_edge(g1: Graph, g2: Graph) -> CoronaLayout:
    """Corona-edge product: base vertices joined to their copy's subdivision vertices.

    Same vertex count as the vertex variant, ``m1 + 3 n1 m2`` edges.
    Raises ``PreconditionError`` when ``g1`` is empty.
    """
    return _corona(g1, g2, EDGE_KIND)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    The first data line is ``n m``; the following ``m`` data lines are
    ``u v`` with 0-based endpoints.  Blank lines and anything after ``#``
    are ignored.  Raises ``EdgeListError`` carrying the offending line
    number on any malformed or inconsistent input.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(line_no, f"expected two fields, got {len(fields)}: {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(line_no, f"non-integer field in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(line_no, "header counts must be non-negative")
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise EdgeListError(line_no, f"more than the declared {m} edges")
        if a == b:
            raise EdgeListError(line_no, f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(line_no, f"edge ({a}, {b}) out of range for {n} vertices")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise EdgeListError(line_no, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListError(None, "missing 'n m' header line")
    if len(edges) != header[1]:
        raise EdgeListError(None, f"declared {header[1]} edges but found {len(edges)}")
    return Graph(header[0], tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
