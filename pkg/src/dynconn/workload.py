"""Workload drivers: edge-list ingestion, benchmark protocols, fuzzing.

Everything here speaks plain-text edge lists ("u v" or "u v t" per
line, '#' or '%' starting a comment line) and emits flat CSV so runs
can be diffed or plotted without bespoke tooling.

CSV layout, in order: a `metric,value` section (graph shape first, then
the structure statistics, then event counts, then mean timings), and,
when the run produced per-window data, a second section headed
`window_pct,op,mean_ns,count` with one row per window and operation
kind.

All randomness flows through `random.Random(seed)` (the stdlib Mersenne
Twister), which is stable across platforms and Python versions, so any
report's counts replicate bit-for-bit from the seed.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .connectivity import ConnectivityIndex
from .errors import KTooLarge, MissingTimestamps, ParseError
from .oracle import (
    Partition,
    oracle_components,
    oracle_connected,
    oracle_rep,
    oracle_two_edge_components,
)
from .two_edge import TwoEdgeIndex


class EventKind(Enum):
    INSERT = "insert"
    DELETE = "delete"
    QUERY_CONN = "query_conn"
    QUERY_2EC = "query_2ec"


@dataclass
class WorkloadEvent:
    kind: EventKind
    u: int
    v: int
    t: int | None = None


@dataclass
class EdgeStream:
    """Parsed events in file order plus the dense vertex relabelling."""

    events: list
    n: int
    labels: list  # dense id -> original label
    mapping: dict  # original label -> dense id
    dropped_self_loops: int = 0

    @property
    def timestamped(self):
        return bool(self.events) and all(e.t is not None for e in self.events)


def parse_edge_stream(source):
    """Parse "u v [t]" rows into insert events with dense vertex ids.

    `source` is a binary or text file object, or any iterable of lines.
    Self loops are dropped from the event list (the indexes reject
    them) but their labels still claim vertex ids, keeping ids aligned
    with the dataset's own vocabulary.
    """
    mapping = {}
    labels = []
    events = []
    dropped = 0

    def vid(label):
        d = mapping.get(label)
        if d is None:
            d = len(labels)
            mapping[label] = d
            labels.append(label)
        return d

    for line_no, raw in enumerate(source, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8", "replace")
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v [t]', got {line!r}", line_no)
        try:
            a = int(parts[0])
            b = int(parts[1])
            t = int(parts[2]) if len(parts) == 3 else None
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line_no) from None
        du = vid(a)
        dv = vid(b)
        if du == dv:
            dropped += 1
            continue
        events.append(WorkloadEvent(EventKind.INSERT, du, dv, t))
    return EdgeStream(events, len(labels), labels, mapping, dropped)


def load_edge_file(path):
    with open(path, "rb") as fh:
        return parse_edge_stream(fh)


def random_edge_stream(n, m, seed=0, timestamps=False):
    """Seeded uniform simple graph as an insert stream.

    With `timestamps`, arrival times are strictly increasing integers
    with seeded gaps, so the stream is valid sliding-window input.
    """
    if m > n * (n - 1) // 2:
        raise ValueError(f"m={m} exceeds the simple-graph maximum for n={n}")
    rng = random.Random(seed)
    chosen = set()
    while len(chosen) < m:
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a != b:
            chosen.add((a, b) if a < b else (b, a))
    order = sorted(chosen)
    rng.shuffle(order)
    events = []
    t = 0
    for u, v in order:
        ts = None
        if timestamps:
            t += rng.randrange(1, 4)
            ts = t
        events.append(WorkloadEvent(EventKind.INSERT, u, v, ts))
    return EdgeStream(events, n, list(range(n)), {v: v for v in range(n)})


# -- reports -------------------------------------------------------------------


@dataclass
class MetricsReport:
    """Flat run statistics; every mean is absent (None) until sampled."""

    avg_depth_id: float | None = None
    avg_S: float | None = None
    avg_search: float | None = None
    avg_finds_len: float | None = None
    extras: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    timings_ns: dict = field(default_factory=dict)  # phase -> (mean_ns, count)
    window_rows: list = field(default_factory=list)  # (pct, op, mean_ns, count)

    _STATS = ("avg_depth_id", "avg_S", "avg_search", "avg_finds_len")

    def merge(self, other):
        """Fold another report in; scalar stats prefer the newcomer."""
        for name in self._STATS:
            val = getattr(other, name)
            if val is not None:
                setattr(self, name, val)
        self.extras.update(other.extras)
        for k, v in other.counts.items():
            self.counts[k] = self.counts.get(k, 0) + v
        self.timings_ns.update(other.timings_ns)
        self.window_rows.extend(other.window_rows)
        return self

    def write_csv(self, fh):
        fh.write("metric,value\n")
        for k, v in self.extras.items():
            fh.write(f"{k},{_fmt(v)}\n")
        for name in self._STATS:
            val = getattr(self, name)
            if val is not None:
                fh.write(f"{name},{_fmt(val)}\n")
        for k, v in self.counts.items():
            fh.write(f"count_{k},{v}\n")
        for k, (mean, _cnt) in self.timings_ns.items():
            fh.write(f"{k}_mean_ns,{_fmt(mean)}\n")
        if self.window_rows:
            fh.write("window_pct,op,mean_ns,count\n")
            for pct, op, mean, cnt in self.window_rows:
                fh.write(f"{pct},{op},{_fmt(mean)},{cnt}\n")


def _fmt(v):
    return f"{v:.6g}" if isinstance(v, float) else str(v)


# -- index plumbing ------------------------------------------------------------


def new_index(n, mode="conn"):
    if mode == "conn":
        return ConnectivityIndex(n)
    if mode == "2ec":
        return TwoEdgeIndex(n)
    raise ValueError(f"unknown mode {mode!r}")


def index_ops(idx):
    """(insert, delete, query) bound methods for either index flavour."""
    if isinstance(idx, TwoEdgeIndex):
        return idx.insert2, idx.delete2, idx.two_edge_connected
    return idx.insert, idx.delete, idx.connected


def build_index(stream, mode="conn"):
    """Replay a stream's inserts into a fresh index.

    Returns (index, duplicate event count); re-inserting a live edge is
    a no-op event, as temporal datasets repeat edges freely.
    """
    idx = new_index(stream.n, mode)
    ins, delete, _ = index_ops(idx)
    g = idx.graph
    dup = 0
    for ev in stream.events:
        if ev.kind is EventKind.INSERT:
            if g.has_edge(ev.u, ev.v):
                dup += 1
            else:
                ins(ev.u, ev.v)
        elif ev.kind is EventKind.DELETE and g.has_edge(ev.u, ev.v):
            delete(ev.u, ev.v)
    return idx, dup


def _partition_of(idx):
    if isinstance(idx, TwoEdgeIndex):
        sets = idx.csets
    else:
        sets = idx.dsets
    return Partition([sets.peek_root(v) for v in range(idx.graph.n)])


def _counter_snapshot(idx):
    if isinstance(idx, ConnectivityIndex):
        ds = idx.dsets
        return (idx.tree_deletes, idx.splits, idx.split_visited_total,
                idx.probe_total, ds.find_calls, ds.find_visits)
    ds = idx.csets
    return (0, 0, 0, 0, ds.find_calls, ds.find_visits)


def _apply_structure_stats(report, idx, snap):
    """Depth plus per-phase means derived from counter deltas."""
    report.avg_depth_id = idx.forest.average_depth()
    if isinstance(idx, ConnectivityIndex):
        ds = idx.dsets
        td = idx.tree_deletes - snap[0]
        sp = idx.splits - snap[1]
        vis = idx.split_visited_total - snap[2]
        pr = idx.probe_total - snap[3]
        if sp:
            report.avg_S = vis / sp
        if td:
            report.avg_search = pr / td
    else:
        ds = idx.csets
    fc = ds.find_calls - snap[4]
    fv = ds.find_visits - snap[5]
    if fc:
        report.avg_finds_len = fv / fc


# -- benchmark protocols -------------------------------------------------------


def run_random_cycle(idx, k, seed=0):
    """Delete k seeded-random live edges, then re-insert them in the same
    order, timing both phases.

    The connectivity (or 2-edge class) partition must come back exactly;
    on graphs up to 1000 vertices it is additionally compared against
    the BFS oracle.
    """
    g = idx.graph
    if k > g.m:
        raise KTooLarge(f"k={k} exceeds live edge count {g.m}")
    ins, delete, _ = index_ops(idx)
    rng = random.Random(seed)
    victims = rng.sample(sorted(g.edges()), k)

    before = _partition_of(idx)
    snap = _counter_snapshot(idx)
    t0 = time.perf_counter_ns()
    for u, v in victims:
        delete(u, v)
    t1 = time.perf_counter_ns()
    for u, v in victims:
        ins(u, v)
    t2 = time.perf_counter_ns()

    after = _partition_of(idx)
    if after != before:
        raise AssertionError("delete/re-insert cycle failed to restore the partition")
    if g.n <= 1000:
        if isinstance(idx, TwoEdgeIndex):
            truth = oracle_two_edge_components(g)
        else:
            truth = oracle_components(g)
        if after != truth:
            raise AssertionError("restored partition disagrees with the oracle")

    report = MetricsReport()
    report.extras["vertices"] = g.n
    report.extras["edges"] = g.m
    report.extras["cycle_k"] = k
    report.counts = {"delete": k, "insert": k}
    if k:
        report.timings_ns = {
            "delete": ((t1 - t0) / k, k),
            "insert": ((t2 - t1) / k, k),
        }
    _apply_structure_stats(report, idx, snap)
    return report


def run_sliding_window(stream, pct, mode="conn", queries=0, seed=0):
    """Temporal replay with eviction at one window size.

    After each arrival, edges older than pct% of the stream's time span
    are deleted, oldest first (strictly older: age * 100 > span * pct).
    A duplicate arrival of a live edge is a no-op and does not refresh
    the edge's age.  With `queries`, a seeded query batch runs against
    the final window.
    """
    events = [e for e in stream.events if e.kind is EventKind.INSERT]
    if any(e.t is None for e in events):
        raise MissingTimestamps("sliding windows need 'u v t' rows throughout")
    idx = new_index(stream.n, mode)
    ins, delete, query = index_ops(idx)
    g = idx.graph
    span = max(e.t for e in events) - min(e.t for e in events) if events else 0
    snap = _counter_snapshot(idx)

    window = deque()
    ins_ns = del_ns = 0
    ins_n = del_n = noop = 0
    for ev in events:
        if g.has_edge(ev.u, ev.v):
            noop += 1
        else:
            t0 = time.perf_counter_ns()
            ins(ev.u, ev.v)
            ins_ns += time.perf_counter_ns() - t0
            ins_n += 1
            window.append((ev.t, ev.u, ev.v))
        while window and (ev.t - window[0][0]) * 100 > span * pct:
            _, a, b = window.popleft()
            t0 = time.perf_counter_ns()
            delete(a, b)
            del_ns += time.perf_counter_ns() - t0
            del_n += 1

    q_ns = 0
    if queries:
        rng = random.Random(seed)
        n = stream.n
        t0 = time.perf_counter_ns()
        for _ in range(queries):
            query(rng.randrange(n), rng.randrange(n))
        q_ns = time.perf_counter_ns() - t0

    report = MetricsReport()
    report.extras["vertices"] = stream.n
    report.extras[f"final_edges_w{pct}"] = g.m
    report.counts = {"insert": ins_n, "delete": del_n, "noop": noop}
    rows = [
        (pct, "insert", ins_ns / ins_n if ins_n else 0.0, ins_n),
        (pct, "delete", del_ns / del_n if del_n else 0.0, del_n),
    ]
    if queries:
        report.counts["query"] = queries
        rows.append((pct, "query", q_ns / queries, queries))
    report.window_rows = rows
    _apply_structure_stats(report, idx, snap)
    return report


# -- differential fuzz ---------------------------------------------------------


@dataclass
class FuzzOutcome:
    ops: int
    queries: int
    checks: int
    violations: list
    violation_count: int
    elapsed_s: float
    find_calls: int = 0
    find_visits: int = 0
    root_violations: int = 0  # root-pairing audit failures, a subset of the count

    @property
    def ok(self):
        return self.violation_count == 0


class _LiveEdges:
    """Edge multiset with O(1) seeded uniform choice (swap-remove list)."""

    def __init__(self):
        self.items = []
        self.pos = {}

    def __len__(self):
        return len(self.items)

    def __contains__(self, e):
        return e in self.pos

    def add(self, e):
        self.pos[e] = len(self.items)
        self.items.append(e)

    def remove(self, e):
        i = self.pos.pop(e)
        last = self.items.pop()
        if last != e:
            self.items[i] = last
            self.pos[last] = i

    def choose(self, rng):
        return self.items[rng.randrange(len(self.items))]


def run_connectivity_fuzz(n=64, ops=50_000, seed=0, check_every=100,
                          tail_queries=0):
    """Random inserts/deletes/queries (40/40/20) with a BFS oracle watching.

    Every query is answered three ways (set forest, tree walk, oracle)
    and must agree.  After every op, each spanning tree root must be its
    own set representative (audited without compression so the walk
    stats stay honest).  Every `check_every`-th op, both full partitions
    are compared against the oracle.  `tail_queries` extra queries run
    afterwards to pile up find traffic for walk-length statistics; they
    are oracle-checked every 100th.
    """
    rng = random.Random(seed)
    idx = ConnectivityIndex(n)
    g = idx.graph
    forest = idx.forest
    sets = idx.dsets
    live = _LiveEdges()
    violations = []
    vcount = root_vcount = 0

    def note(msg, root=False):
        nonlocal vcount, root_vcount
        vcount += 1
        if root:
            root_vcount += 1
        if len(violations) < 20:
            violations.append(msg)

    full = n * (n - 1) // 2
    queries = checks = 0
    t_start = time.perf_counter()
    for step in range(ops):
        r = rng.random()
        if r < 0.8:
            # mutation; flipped when the graph is complete or empty
            inserting = r < 0.4
            if inserting and len(live) == full:
                inserting = False
            elif not inserting and not len(live):
                inserting = True
            if inserting:
                while True:
                    u = rng.randrange(n)
                    v = rng.randrange(n)
                    if u == v:
                        continue
                    e = (u, v) if u < v else (v, u)
                    if e not in live:
                        break
                idx.insert(*e)
                live.add(e)
            else:
                e = live.choose(rng)
                live.remove(e)
                idx.delete(*e)
        else:
            u = rng.randrange(n)
            v = rng.randrange(n)
            queries += 1
            a = idx.connected(u, v)
            b = idx.tree_connected(u, v)
            c = oracle_connected(g, u, v)
            if not (a == b == c):
                note(f"op {step}: query({u},{v}) sets={a} tree={b} oracle={c}")
        for rt in forest.roots():
            if sets.peek_root(rt) != rt:
                note(f"op {step}: tree root {rt} is not its set representative",
                     root=True)
                break
        if (step + 1) % check_every == 0:
            checks += 1
            truth = oracle_components(g)
            if Partition([sets.peek_root(v) for v in range(n)]) != truth:
                note(f"op {step}: set partition diverged from oracle")
            if Partition([forest._root(v) for v in range(n)]) != truth:
                note(f"op {step}: forest partition diverged from oracle")

    for i in range(tail_queries):
        u = rng.randrange(n)
        v = rng.randrange(n)
        queries += 1
        a = idx.connected(u, v)
        if a != idx.tree_connected(u, v):
            note(f"tail {i}: sets and tree walk disagree on ({u},{v})")
        if i % 100 == 0 and a != oracle_connected(g, u, v):
            note(f"tail {i}: oracle disagrees on ({u},{v})")

    return FuzzOutcome(
        ops=ops,
        queries=queries,
        checks=checks,
        violations=violations,
        violation_count=vcount,
        elapsed_s=time.perf_counter() - t_start,
        find_calls=sets.find_calls,
        find_visits=sets.find_visits,
        root_violations=root_vcount,
    )


def run_two_ec_fuzz(n=48, ops=20_000, seed=0, check_every=50):
    """Random 2-edge connectivity ops with bridge-oracle probes.

    Every query is answered by the class sets and by a counter walk and
    both compared against the oracle partition (cached between
    mutations).  Every `check_every`-th op, every stored cover count is
    re-derived from scratch and compared, along with both partitions.
    """
    rng = random.Random(seed)
    idx = TwoEdgeIndex(n)
    g = idx.graph
    forest = idx.forest
    live = _LiveEdges()
    violations = []
    vcount = 0

    def note(msg):
        nonlocal vcount
        vcount += 1
        if len(violations) < 20:
            violations.append(msg)

    def stored_rep_map():
        parent = forest.parent
        return {
            (x, p) if x < p else (p, x): forest.rep[x]
            for x in range(n)
            if (p := parent[x]) != -1
        }

    full = n * (n - 1) // 2
    queries = checks = 0
    cached = None
    t_start = time.perf_counter()
    for step in range(ops):
        r = rng.random()
        if r < 0.8:
            inserting = r < 0.4
            if inserting and len(live) == full:
                inserting = False
            elif not inserting and not len(live):
                inserting = True
            if inserting:
                while True:
                    u = rng.randrange(n)
                    v = rng.randrange(n)
                    if u == v:
                        continue
                    e = (u, v) if u < v else (v, u)
                    if e not in live:
                        break
                idx.insert2(*e)
                live.add(e)
            else:
                e = live.choose(rng)
                live.remove(e)
                idx.delete2(*e)
            cached = None
        else:
            u = rng.randrange(n)
            v = rng.randrange(n)
            queries += 1
            if cached is None:
                cached = oracle_two_edge_components(g)
            a = idx.two_edge_connected(u, v)
            b = forest.query2(u, v)
            c = cached.same_block(u, v)
            if not (a == b == c):
                note(f"op {step}: query2({u},{v}) sets={a} walk={b} oracle={c}")
        if (step + 1) % check_every == 0:
            checks += 1
            if stored_rep_map() != oracle_rep(g, forest.parent):
                note(f"op {step}: stored cover counts diverged from oracle")
            truth = oracle_two_edge_components(g)
            if Partition([idx.csets.peek_root(v) for v in range(n)]) != truth:
                note(f"op {step}: class partition diverged from oracle")
            if Partition([forest.ecc_root(v) for v in range(n)]) != truth:
                note(f"op {step}: counter-walk partition diverged from oracle")

    return FuzzOutcome(
        ops=ops,
        queries=queries,
        checks=checks,
        violations=violations,
        violation_count=vcount,
        elapsed_s=time.perf_counter() - t_start,
        find_calls=idx.csets.find_calls,
        find_visits=idx.csets.find_visits,
    )
