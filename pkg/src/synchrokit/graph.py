"""Undirected simple graphs on ``0..n-1`` with exact clique and chromatic numbers.

Vertex sets are Python ints used as bitsets. Both solvers are branch-and-bound
and stop with :class:`SolverTimeout` (carrying their current bounds) when the
deadline passes.
"""
from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path
from typing import Iterable, Sequence

from .core import Transformation
from .errors import SolverTimeout

DEFAULT_TIMEOUT = 60.0


class Graph:
    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {(u, v)} out of range for {vertex_count} vertices")
            es.add((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = frozenset(es)
        adj = [0] * vertex_count
        for u, v in es:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def null(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_multipartite(cls, parts: Iterable[Iterable[int]]) -> "Graph":
        parts = [list(p) for p in parts]
        n = sum(len(p) for p in parts)
        where = {}
        for i, p in enumerate(parts):
            for x in p:
                where[x] = i
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if where[u] != where[v]))

    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        a = self._adj[v]
        return [u for u in range(self.vertex_count) if a >> u & 1]

    def is_null(self) -> bool:
        return not self.edges

    def is_complete(self) -> bool:
        n = self.vertex_count
        return len(self.edges) == n * (n - 1) // 2

    def complement(self) -> "Graph":
        n = self.vertex_count
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if not self.has_edge(u, v)))

    def union(self, other: "Graph") -> "Graph":
        if other.vertex_count != self.vertex_count:
            raise ValueError("vertex count mismatch")
        return Graph(self.vertex_count, self.edges | other.edges)

    def components(self) -> list[list[int]]:
        n = self.vertex_count
        left = (1 << n) - 1
        out = []
        while left:
            start = left & -left
            comp = start
            frontier = start
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self._adj[v] & ~comp
                comp |= new
                frontier |= new
            left &= ~comp
            out.append([v for v in range(n) if comp >> v & 1])
        return out

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def multipartite_parts(self) -> list[list[int]] | None:
        """Parts if the graph is complete multipartite (non-adjacency is an equivalence)."""
        parts = self.complement().components()
        where = {}
        for i, p in enumerate(parts):
            for x in p:
                where[x] = i
        for u in range(self.vertex_count):
            for v in range(u + 1, self.vertex_count):
                if self.has_edge(u, v) == (where[u] == where[v]):
                    return None
        return parts

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {sorted(self.edges)})"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.vertex_count, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["n"], (tuple(e) for e in data["edges"]))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.vertex_count)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        payload = json.dumps(self.to_json(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


# -- optional on-disk memo ---------------------------------------------------

def _cache_path(x: Graph) -> Path | None:
    root = os.environ.get("SYNCHROKIT_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"{x.digest()}.json"


def _cache_get(x: Graph, key: str) -> int | None:
    path = _cache_path(x)
    if path is None or not path.exists():
        return None
    try:
        return json.loads(path.read_text()).get(key)
    except (OSError, ValueError):
        return None


def _cache_put(x: Graph, key: str, value: int) -> None:
    path = _cache_path(x)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {}
    if path.exists():
        try:
            data = json.loads(path.read_text())
        except ValueError:
            data = {}
    data[key] = value
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(data))
    tmp.replace(path)


# -- clique number -----------------------------------------------------------

class _Deadline:
    __slots__ = ("limit", "ticks")

    def __init__(self, seconds: float | None):
        self.limit = None if seconds is None else time.monotonic() + seconds
        self.ticks = 0

    def expired(self) -> bool:
        self.ticks += 1
        if self.limit is None or self.ticks & 0x3FF:
            return False
        return time.monotonic() > self.limit


def _colour_sort(adj, P):
    # greedy sequential colouring of P; returns vertices with nondecreasing colour
    order, cols = [], []
    k = 0
    U = P
    while U:
        k += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            cols.append(k)
    return order, cols


def max_clique(x: Graph, timeout: float | None = DEFAULT_TIMEOUT) -> list[int]:
    """A maximum clique, as a sorted vertex list."""
    n = x.vertex_count
    if n == 0:
        return []
    adj = x.adjacency()
    deadline = _Deadline(timeout)
    best: list[int] = [0]
    current: list[int] = []

    def expand(P):
        order, cols = _colour_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + cols[i] <= len(best):
                return
            if deadline.expired():
                raise SolverTimeout("clique number", len(best), len(current) + cols[i])
            v = order[i]
            current.append(v)
            newP = P & adj[v]
            if newP:
                expand(newP)
            elif len(current) > len(best):
                best[:] = current
            current.pop()
            P &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(best)


def clique_number(x: Graph, timeout: float | None = DEFAULT_TIMEOUT) -> int:
    cached = _cache_get(x, "omega")
    if cached is not None:
        return cached
    value = len(max_clique(x, timeout))
    _cache_put(x, "omega", value)
    return value


# -- chromatic number --------------------------------------------------------

def _dsatur_greedy(x: Graph) -> list[int]:
    n = x.vertex_count
    adj = x.adjacency()
    colour = [-1] * n
    seen = [0] * n  # bitmask of neighbour colours
    degree = [bin(a).count("1") for a in adj]
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (bin(seen[u]).count("1"), degree[u], -u))
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colour[v] = c
        a = adj[v]
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            seen[u] |= 1 << c
    return colour


def _colourable(x: Graph, k: int, clique: list[int], deadline: _Deadline, lower: int, upper: int) -> list[int] | None:
    n = x.vertex_count
    adj = x.adjacency()
    colour = [-1] * n
    seen = [0] * n
    if len(clique) > k:
        return None

    def paint(v, c):
        colour[v] = c
        a = adj[v]
        touched = []
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            if not seen[u] >> c & 1:
                seen[u] |= 1 << c
                touched.append(u)
        return touched

    def unpaint(v, c, touched):
        colour[v] = -1
        for u in touched:
            seen[u] &= ~(1 << c)

    # a maximum clique takes colours 0..ω-1 up front; this breaks colour symmetry
    for i, v in enumerate(clique):
        paint(v, i)
    full = (1 << k) - 1

    def solve(used):
        if deadline.expired():
            raise SolverTimeout("chromatic number", lower, upper)
        v, sat = -1, -1
        for u in range(n):
            if colour[u] < 0:
                s = bin(seen[u]).count("1")
                if s > sat:
                    v, sat = u, s
        if v < 0:
            return True
        free = ~seen[v] & full
        for c in range(min(k, used + 1)):
            if not free >> c & 1:
                continue
            touched = paint(v, c)
            if solve(max(used, c + 1)):
                return True
            unpaint(v, c, touched)
        return False

    return list(colour) if solve(len(clique)) else None


def optimal_colouring(x: Graph, timeout: float | None = DEFAULT_TIMEOUT) -> list[int]:
    """A proper colouring with the fewest colours (colours ``0..χ-1``)."""
    n = x.vertex_count
    if n == 0:
        return []
    deadline = _Deadline(timeout)
    clique = max_clique(x, timeout)
    greedy = _dsatur_greedy(x)
    upper = max(greedy) + 1
    for k in range(len(clique), upper):
        found = _colourable(x, k, clique, deadline, k, upper)
        if found is not None:
            return found
    return greedy


def chromatic_number(x: Graph, timeout: float | None = DEFAULT_TIMEOUT) -> int:
    if x.vertex_count == 0:
        return 0
    cached = _cache_get(x, "chi")
    if cached is not None:
        return cached
    value = max(optimal_colouring(x, timeout)) + 1
    _cache_put(x, "chi", value)
    return value


# -- homomorphisms -----------------------------------------------------------

def is_endomorphism(x: Graph, f: Transformation) -> bool:
    if f.degree != x.vertex_count:
        raise ValueError("map degree does not match vertex count")
    im = f.images
    for u, v in x.edges:
        a, b = im[u], im[v]
        if a == b or not x.has_edge(a, b):
            return False
    return True


def find_homomorphism(x: Graph, y: Graph) -> list[int] | None:
    """Backtracking search for an edge-preserving vertex map from x to y."""
    n, m = x.vertex_count, y.vertex_count
    if n == 0:
        return []
    if m == 0:
        return None
    xa = x.adjacency()
    ya = y.adjacency()
    f = [-1] * n

    def place(v):
        if v == n:
            return True
        allowed = (1 << m) - 1
        for u in range(v):
            if xa[v] >> u & 1:
                allowed &= ya[f[u]]
        while allowed:
            w = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            f[v] = w
            if place(v + 1):
                return True
        f[v] = -1
        return False

    return list(f) if place(0) else None


def homomorphism_facts(x: Graph, r: int, timeout: float | None = DEFAULT_TIMEOUT) -> tuple[bool, bool]:
    """``(ω(X) >= r, χ(X) <= r)``, i.e. whether K_r -> X and X -> K_r exist."""
    if r < 1:
        raise ValueError("r must be positive")
    return clique_number(x, timeout) >= r, chromatic_number(x, timeout) <= r
