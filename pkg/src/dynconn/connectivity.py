"""Fully dynamic connectivity with constant-time queries.

Two structures run side by side over one graph: a spanning forest that
knows how to place and replace edges, and a disjoint-set forest that
answers queries in amortized O(1).  The coupling invariant is that each
component's spanning-tree root is also its set representative, so the
set forest can be patched in O(1) after any structural change instead
of being rebuilt:

* tree-edge insert: link the two set roots, mirroring the forest link;
* deletion that found a replacement: the component survives, only its
  root may have moved, so at most one reroot;
* deletion that split: the search already named every vertex of the
  smaller half, and each one is isolated and re-hung under the new
  small root one by one.
"""

from __future__ import annotations

from .disjoint_set import DisjointSetForest
from .errors import DuplicateEdge, EdgeAbsent, OutOfRange
from .graph import DynamicGraph
from .spanning_forest import DeleteKind, InsertKind, SpanningForest


class ConnectivityIndex:
    def __init__(self, n: int, validate: bool = False):
        self.graph = DynamicGraph(n)
        self.forest = SpanningForest(self.graph)
        self.dsets = DisjointSetForest(n)
        self._validate = validate
        # workload statistics, accumulated over tree-edge deletions
        self.tree_deletes = 0
        self.splits = 0
        self.split_visited_total = 0
        self.probe_total = 0

    def insert(self, u: int, v: int) -> InsertKind:
        if not self.graph.add_edge(u, v):
            raise DuplicateEdge(f"edge ({u}, {v}) already present")
        ds = self.dsets
        ru = ds.find(u)
        rv = ds.find(v)
        f = self.forest
        if ru == rv:
            kind, root = f.insert_nontree(u, v)
            if root != ru:
                ds.reroot(root)
            if self._validate:
                self._audit()
            return kind
        size = f.size
        if size[ru] > size[rv]:
            u, v, ru, rv = v, u, rv, ru
        f.reroot(u)
        ds.link(ru, rv)
        root = f.link(u, v, rv)
        if root != rv:
            ds.reroot(root)
        if self._validate:
            self._audit()
        return InsertKind.TREE_EDGE

    def delete(self, u: int, v: int) -> DeleteKind:
        if not self.graph.remove_edge(u, v):
            raise EdgeAbsent(f"edge ({u}, {v}) not present")
        out = self.forest.delete_edge(u, v)
        if out.kind is DeleteKind.NONTREE:
            return out.kind
        ds = self.dsets
        ds.reroot(out.big_root)
        self.tree_deletes += 1
        self.probe_total += out.probes
        if not out.replaced:
            self.splits += 1
            self.split_visited_total += len(out.visited)
            small = out.small_root
            ds.isolate(small)
            for w in out.visited:
                if w != small:
                    ds.isolate(w)
                    ds.link(w, small)
        if self._validate:
            self._audit()
        return out.kind

    def connected(self, u: int, v: int) -> bool:
        n = self.graph.n
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"query ({u}, {v})")
        return self.dsets.same_set(u, v)

    def tree_connected(self, u: int, v: int) -> bool:
        """Same answer as connected(), from the forest's root walks."""
        return self.forest.query(u, v)

    def component_stats(self) -> dict:
        f = self.forest
        roots = f.roots()
        return {
            "vertices": self.graph.n,
            "edges": self.graph.m,
            "components": len(roots),
            "largest_component": max((f.size[r] for r in roots), default=0),
            "avg_depth": f.average_depth(),
        }

    def _audit(self):
        # every spanning-tree root must be its own set representative
        for r in self.forest.roots():
            assert self.dsets.find(r) == r, f"root {r} lost set ownership"
