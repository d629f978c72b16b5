"""Undirected simple graph over a fixed vertex range [0, n)."""

from __future__ import annotations

from .errors import OutOfRange, SelfLoop


class DynamicGraph:
    """Adjacency-set graph; O(1) edge insert/delete/membership.

    Vertices are dense ints fixed at construction.  `adj` is readable by
    the forest code (hot loops index it directly) but must only be
    mutated through add_edge/remove_edge so the edge count stays true.
    """

    __slots__ = ("n", "m", "adj")

    def __init__(self, n: int):
        if n < 0:
            raise OutOfRange(f"vertex count {n} is negative")
        self.n = n
        self.m = 0
        self.adj: list[set[int]] = [set() for _ in range(n)]

    def _check_pair(self, u: int, v: int) -> None:
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self loop at {u}")

    def add_edge(self, u: int, v: int) -> bool:
        """Insert (u, v).  True if added, False if it was already present."""
        self._check_pair(u, v)
        a = self.adj[u]
        if v in a:
            return False
        a.add(v)
        self.adj[v].add(u)
        self.m += 1
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        """Delete (u, v).  True if removed, False if it was absent."""
        self._check_pair(u, v)
        a = self.adj[u]
        if v not in a:
            return False
        a.discard(v)
        self.adj[v].discard(u)
        self.m -= 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise OutOfRange(f"vertex {u} outside [0, {self.n})")
        return len(self.adj[u])

    def neighbors(self, u: int):
        """Iterate the current neighbors of u, each exactly once."""
        if not 0 <= u < self.n:
            raise OutOfRange(f"vertex {u} outside [0, {self.n})")
        return iter(self.adj[u])

    def edges(self):
        """Iterate all edges once, canonically oriented (u < v)."""
        for u, a in enumerate(self.adj):
            for v in a:
                if u < v:
                    yield (u, v)
