"""Core digraph value types and structural operations.

Vertices are dense integers 0..n-1.  Digraphs are simple: loops are
forbidden, multi-arcs cannot be represented, digons (a pair of opposite
arcs) are allowed.  Every type here is immutable after construction and
every operation is a pure function, so values can be shared freely
between concurrent tasks.

All tie-breaking is by smallest vertex id, which makes every operation
deterministic.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices 0..n-1 given by its arc set."""

    n: int
    arcs: frozenset[Arc] = frozenset()
    _out: tuple[frozenset[int], ...] = field(init=False, compare=False, repr=False)
    _in: tuple[frozenset[int], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        out: list[set[int]] = [set() for _ in range(self.n)]
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
            out[u].add(v)
            inn[v].add(u)
        object.__setattr__(self, "_out", tuple(frozenset(s) for s in out))
        object.__setattr__(self, "_in", tuple(frozenset(s) for s in inn))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbours(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_neighbours(self, v: int) -> frozenset[int]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])


class CyclicOrder:
    """Rotation-equivalence class of a sequence of the vertices 0..n-1.

    The stored representative is normalised to start at vertex 0, so two
    orders compare equal exactly when one sequence is a rotation of the
    other.  Cyclic intervals follow the bracket convention where, for
    x != y, [x, y] runs forward from x to y inclusive, and [x, x] wraps
    all the way around (so ]x, x[ is everything except x).
    """

    __slots__ = ("seq", "_pos")

    def __init__(self, seq: Iterable[int]):
        raw = tuple(int(v) for v in seq)
        if sorted(raw) != list(range(len(raw))):
            raise ValueError("sequence must be a permutation of 0..n-1")
        if raw:
            i = raw.index(0)
            raw = raw[i:] + raw[:i]
        self.seq = raw
        self._pos = {v: p for p, v in enumerate(raw)}

    def __len__(self):
        return len(self.seq)

    def __eq__(self, other):
        return isinstance(other, CyclicOrder) and self.seq == other.seq

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"CyclicOrder({self.seq})"

    def position(self, v: int) -> int:
        return self._pos[v]

    def successor(self, v: int) -> int:
        return self.seq[(self._pos[v] + 1) % len(self.seq)]

    def predecessor(self, v: int) -> int:
        return self.seq[(self._pos[v] - 1) % len(self.seq)]

    def rotated_to(self, v: int) -> tuple[int, ...]:
        """Linear representative starting at v."""
        i = self._pos[v]
        return self.seq[i:] + self.seq[:i]

    def interval(self, x: int, y: int) -> tuple[int, ...]:
        """Closed cyclic interval [x, y]."""
        i, j = self._pos[x], self._pos[y]
        if x == y:
            return self.rotated_to(x)
        if i < j:
            return self.seq[i : j + 1]
        return self.seq[i:] + self.seq[: j + 1]

    def open_interval(self, x: int, y: int) -> tuple[int, ...]:
        """Open cyclic interval ]x, y[."""
        t = self.interval(x, y)
        return t[1:] if x == y else t[1:-1]

    def reverse(self) -> "CyclicOrder":
        return CyclicOrder(tuple(reversed(self.seq)))


class Partition:
    """Ordered partition of 0..n-1 into disjoint non-empty parts."""

    __slots__ = ("parts", "n", "_part_of")

    def __init__(self, parts: Iterable[Iterable[int]]):
        norm = tuple(frozenset(int(v) for v in p) for p in parts)
        part_of: dict[int, int] = {}
        for i, p in enumerate(norm):
            if not p:
                raise ValueError("empty part")
            for v in p:
                if v in part_of:
                    raise ValueError(f"vertex {v} appears in two parts")
                part_of[v] = i
        n = len(part_of)
        if set(part_of) != set(range(n)):
            raise ValueError("parts must cover exactly 0..n-1")
        self.parts = norm
        self.n = n
        self._part_of = part_of

    def part_of(self, v: int) -> int:
        return self._part_of[v]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({[sorted(p) for p in self.parts]})"


def induced_subdigraph(d: Digraph, s: Iterable[int]) -> tuple[Digraph, dict[int, int], tuple[int, ...]]:
    """Subdigraph induced by the vertex set s.

    Returns (sub, to_sub, to_orig) where to_sub maps original ids to the
    dense ids 0..|s|-1 (assigned in increasing original order) and to_orig
    is the inverse.
    """
    members = sorted(set(int(v) for v in s))
    if members and not (0 <= members[0] and members[-1] < d.n):
        raise ValueError("vertex out of range in induced subset")
    to_sub = {v: i for i, v in enumerate(members)}
    arcs = [(to_sub[u], to_sub[v]) for (u, v) in d.arcs if u in to_sub and v in to_sub]
    return Digraph(len(members), arcs), to_sub, tuple(members)


def strong_components(d: Digraph) -> tuple[Partition, Digraph, tuple[int, ...]]:
    """Strongly connected components, their condensation, and a topological
    order of the condensation.

    Parts are listed by smallest contained vertex; the topological order
    breaks ties by smallest part id.
    """
    n = d.n
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(sorted(d.out_neighbours(root))))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(d.out_neighbours(w)))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))

    comps.sort(key=min)
    partition = Partition(comps)
    cond_arcs = set()
    for u, v in d.arcs:
        pu, pv = partition.part_of(u), partition.part_of(v)
        if pu != pv:
            cond_arcs.add((pu, pv))
    condensation = Digraph(len(comps), cond_arcs)
    topo = topological_order(condensation)
    if topo is None:  # cannot happen: condensations are acyclic
        raise AssertionError("condensation contained a cycle")
    return partition, condensation, topo


def is_strong(d: Digraph) -> bool:
    """True when d has at least one vertex and a single strong component."""
    if d.n == 0:
        return False
    return len(strong_components(d)[0]) == 1


def contract(d: Digraph, p: Partition) -> Digraph:
    """Contract every part of p to a single vertex.

    The quotient has one vertex per part; an arc i -> j (i != j) is present
    whenever some original arc runs from part i to part j.  Loops cannot
    arise; digons may, and are kept.
    """
    if p.n != d.n:
        raise ValueError("partition does not cover the digraph's vertices")
    arcs = set()
    for u, v in d.arcs:
        pu, pv = p.part_of(u), p.part_of(v)
        if pu != pv:
            arcs.add((pu, pv))
    return Digraph(len(p), arcs)


def shortest_cycle(d: Digraph) -> tuple[int, ...] | None:
    """A shortest directed cycle of d, or None when d is acyclic.

    Deterministic: anchored at the smallest vertex through which a cycle of
    minimum length passes, with BFS ties broken by smallest id.
    """
    best: tuple[int, ...] | None = None
    for s in range(d.n):
        if best is not None and len(best) == 2:
            break
        dist = {s: 0}
        parent: dict[int, int] = {}
        q = deque([s])
        found: list[int] | None = None
        while q and found is None:
            u = q.popleft()
            for w in sorted(d.out_neighbours(u)):
                if w == s:
                    path = [u]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    found = list(reversed(path))
                    break
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
        if found is not None and (best is None or len(found) < len(best)):
            best = tuple(found)
    return best


def girth(d: Digraph) -> int | None:
    """Length of a shortest directed cycle; None when d is acyclic.

    A digon counts as a cycle of length 2.
    """
    c = shortest_cycle(d)
    return None if c is None else len(c)


def reverse(d: Digraph) -> Digraph:
    """The digraph with every arc reversed."""
    return Digraph(d.n, ((v, u) for (u, v) in d.arcs))


def underlying_connected(d: Digraph) -> bool:
    """True when the underlying undirected graph is connected.

    The empty digraph and single vertices count as connected.
    """
    if d.n <= 1:
        return True
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        for w in d.out_neighbours(u) | d.in_neighbours(u):
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == d.n


def topological_order(d: Digraph) -> tuple[int, ...] | None:
    """A topological order of d, or None when d has a directed cycle.

    Deterministic: among available vertices the smallest id comes first.
    """
    indeg = [d.in_degree(v) for v in range(d.n)]
    ready = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in d.out_neighbours(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != d.n:
        return None
    return tuple(order)


def is_acyclic(d: Digraph) -> bool:
    return topological_order(d) is not None


def directed_cycle(k: int) -> Digraph:
    """The directed cycle on k >= 2 vertices (k = 2 gives the digon)."""
    if k < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph(k, ((i, (i + 1) % k) for i in range(k)))


def transitive_tournament(k: int) -> Digraph:
    """The acyclic tournament on k vertices with arcs i -> j for i < j."""
    return Digraph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))
