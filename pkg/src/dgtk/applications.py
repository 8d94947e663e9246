"""Minimum out-degree bounds for high-girth locally in-tournament oriented
graphs, and 2-king location in locally semicomplete digraphs.

The out-degree bound: a locally in-tournament oriented graph with no
directed cycle of length at most k (k >= 3) has a vertex of out-degree
below n/k.  The construction reduces to a terminal strong component,
decomposes it into hubs with an out-round quotient, picks a quotient part
by a weighted interval argument and recurses into it.

A 2-king reaches every other vertex by a directed path of length at most
two.  Semicomplete digraphs always have one (any vertex of maximum
out-degree); four-partition structures with a non-empty third set yield
one inside that set; the remaining cases fall back to a direct scan.
"""
from __future__ import annotations

from dataclasses import dataclass

from dgtk.digraph import (
    CyclicOrder,
    Digraph,
    girth,
    induced_subdigraph,
    is_strong,
    reverse,
    strong_components,
    underlying_connected,
)
from dgtk.decomposition import FourPartition, UniversalSemicomplete, decompose_lsc, maximal_hubs
from dgtk.errors import InternalCheckError, PreconditionError
from dgtk.orders import verify_order
from dgtk.recognition import check_class


@dataclass(frozen=True)
class WeightedQuotient:
    """Strong out-round oriented quotient with positive part weights."""

    quotient: Digraph
    order: CyclicOrder
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) != self.quotient.n:
            raise ValueError("one weight per quotient vertex required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if not is_strong(self.quotient):
            raise ValueError("quotient is not strong")
        ok, triple = verify_order(self.quotient, self.order, "out-round")
        if not ok:
            raise ValueError(f"order is not out-round (violating triple {triple})")

    @property
    def total(self) -> float:
        return sum(self.weights)


def select_low_outflow_part(wq: WeightedQuotient, k: int) -> int:
    """A quotient vertex u with k * outflow(u) + w(u) <= total weight,
    where outflow(u) is the weight of u's out-neighbourhood.

    Requires girth above k.  For each vertex x, f(x) is its last
    out-neighbour along the cyclic order; the out-neighbourhood is then
    exactly the half-open interval from x to f(x), so following f for k
    steps sweeps disjoint intervals without wrapping, and summing the
    resulting inequality around the cycle closed by f yields the bound
    for some vertex on that cycle.  All of these structural facts are
    asserted before selection.
    """
    q, order, w = wq.quotient, wq.order, wq.weights
    n = q.n
    g = girth(q)
    if g is not None and g <= k:
        raise PreconditionError(f"quotient girth {g} is not above k={k}")
    total = wq.total

    f = [0] * n
    outflow = [0.0] * n
    for x in range(n):
        plus = q.out_neighbours(x)
        if not plus:
            raise InternalCheckError(f"vertex {x} of a strong quotient has no out-arc")
        rotation = order.rotated_to(x)
        rank = {v: i for i, v in enumerate(rotation)}
        f[x] = max(plus, key=rank.__getitem__)
        outflow[x] = sum(w[y] for y in plus)
        half_open = set(order.open_interval(x, f[x])) | {f[x]}
        if plus != half_open:
            raise InternalCheckError(
                f"out-neighbourhood of {x} is not the interval up to its last out-neighbour"
            )

    for x in range(n):
        advance = 0
        intervals = []
        cur = x
        for _ in range(k):
            nxt = f[cur]
            advance += (order.position(nxt) - order.position(cur)) % n
            intervals.append(set(order.open_interval(cur, nxt)))
            cur = nxt
        if advance >= n:
            raise InternalCheckError(f"the {k}-step walk from {x} wraps the cyclic order")
        for i in range(k):
            for j in range(i + 1, k):
                if intervals[i] & intervals[j]:
                    raise InternalCheckError(f"overlapping walk intervals from {x}")
        swept = sum(outflow[cur] for cur in _walk(f, x, k))
        if swept > total - w[x] + 1e-9:
            raise InternalCheckError(f"interval sweep from {x} exceeds the available weight")

    cycle = _functional_cycle(f)
    best = min(cycle, key=lambda x: (k * outflow[x] + w[x], x))
    value = k * outflow[best] + w[best]
    if value > total + 1e-9:
        raise InternalCheckError(f"selected part misses the bound: {value} > {total}")
    return best


def _walk(f, x, k):
    cur = x
    for _ in range(k):
        yield cur
        cur = f[cur]


def _functional_cycle(f):
    walk = [0]
    seen = {0: 0}
    while True:
        nxt = f[walk[-1]]
        if nxt in seen:
            return walk[seen[nxt] :]
        seen[nxt] = len(walk)
        walk.append(nxt)


def ch_low_outdegree_vertex(d: Digraph, k: int) -> int:
    """A vertex of out-degree strictly below n/k in a locally in-tournament
    oriented graph whose girth exceeds k (k >= 3).

    The returned vertex satisfies k * outdeg < n as an exact integer
    inequality, which is asserted.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if d.n == 0:
        raise ValueError("empty digraph")
    ok, w = check_class(d, "locally-in-tournament")
    if not ok:
        raise PreconditionError(f"digraph is not locally in-tournament: {w.describe()}", witness=w)
    g = girth(d)
    if g is not None and g <= k:
        raise PreconditionError(f"girth {g} is not above k={k}")
    u = _low_outdegree(d, k)
    if k * d.out_degree(u) >= d.n:
        raise InternalCheckError(
            f"selected vertex {u} has out-degree {d.out_degree(u)}, not below {d.n}/{k}"
        )
    return u


def _low_outdegree(d, k):
    if not is_strong(d):
        parts, condensation, _ = strong_components(d)
        sinks = [i for i in range(len(parts)) if not condensation.out_neighbours(i)]
        terminal = min(sinks, key=lambda i: min(parts[i]))
        sub, _, to_orig = induced_subdigraph(d, parts[terminal])
        return to_orig[_low_outdegree(sub, k)]
    if d.n == 1:
        return 0
    hp = maximal_hubs(reverse(d))
    wq = WeightedQuotient(
        reverse(hp.quotient),
        hp.order.reverse(),
        tuple(len(p) for p in hp.parts),
    )
    part = select_low_outflow_part(wq, k)
    sub, _, to_orig = induced_subdigraph(d, hp.parts[part])
    return to_orig[_low_outdegree(sub, k)]


def is_2king(d: Digraph, v: int) -> bool:
    """True when every other vertex is at directed distance at most 2 from v."""
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range")
    reach = {v} | d.out_neighbours(v)
    for u in d.out_neighbours(v):
        reach |= d.out_neighbours(u)
    return len(reach) == d.n


def find_2king(d: Digraph) -> int | None:
    """A 2-king of a connected locally semicomplete digraph, or None.

    Semicomplete inputs take the maximum-out-degree vertex.  A
    four-partition with non-empty third set takes a 2-king of that set
    (it is semicomplete): the third set dominates the fourth, which
    dominates the first completely, and the neighbour condition carries
    the remaining hops.  Round blow-ups and four-partitions with an empty
    third set fall back to a direct scan, which may report None.
    """
    ok, w = check_class(d, "locally-semicomplete")
    if not ok:
        raise PreconditionError(f"digraph is not locally semicomplete: {w.describe()}", witness=w)
    if not underlying_connected(d):
        raise PreconditionError("digraph is not connected")
    if d.n == 0:
        return None

    ok, _ = check_class(d, "semicomplete")
    if ok:
        king = _max_outdegree_vertex(d, range(d.n))
        if not is_2king(d, king):
            raise InternalCheckError(f"maximum out-degree vertex {king} is not a 2-king")
        return king

    structure = decompose_lsc(d)
    if isinstance(structure, UniversalSemicomplete):  # caught by the semicomplete path
        raise InternalCheckError("universal case reached past the semicomplete check")
    if isinstance(structure, FourPartition) and structure.g:
        sub, _, to_orig = induced_subdigraph(d, structure.g)
        king = to_orig[_max_outdegree_vertex(sub, range(sub.n))]
        if not is_2king(d, king):
            raise InternalCheckError(f"structural 2-king {king} failed verification")
        return king
    for v in range(d.n):
        if is_2king(d, v):
            return v
    return None


def _max_outdegree_vertex(d, vertices):
    return max(vertices, key=lambda v: (d.out_degree(v), -v))
