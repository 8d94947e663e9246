"""Verification and construction of round, in-round and out-round orders.

A cyclic order is in-round when for every arc x -> y each vertex z
strictly inside the interval ]x, y[ sends an arc to y; out-round when x
sends an arc to every such z; round when both hold.  Equivalently each
vertex's in-neighbourhood (out-neighbourhood, both) is the cyclic
interval ending just before it (starting just after it).

Structural input errors (digons, wrong vertex set, missing strongness or
connectivity) raise ValueError.  A digraph that is simply not in the
searched class yields an OrderSearchFailure value carrying the witness.
"""
from __future__ import annotations

from dataclasses import dataclass

from dgtk.digraph import (
    CyclicOrder,
    Digraph,
    is_strong,
    reverse,
    underlying_connected,
)
from dgtk.errors import InternalCheckError, UnsupportedSizeError
from dgtk.recognition import Witness, check_class

ORDER_KINDS = ("round", "in-round", "out-round")

#: largest non-strong input for which find_round_order will search
#: exhaustively over cyclic orders
ROUND_SEARCH_LIMIT = 9


@dataclass(frozen=True)
class OrderSearchFailure:
    """Outcome of an order search on a digraph outside the class.

    reason is one of "class-violation", "cycle-not-hamiltonian" or
    "order-not-verified"; witness or detail carries the evidence.
    """

    reason: str
    witness: Witness | None = None
    detail: tuple | None = None

    def describe(self) -> str:
        extra = ""
        if self.witness is not None:
            extra = f" ({self.witness.describe()})"
        elif self.detail is not None:
            extra = f" {self.detail}"
        return self.reason + extra


def verify_order(d: Digraph, o: CyclicOrder, kind: str) -> tuple[bool, tuple[int, int, int] | None]:
    """Check the order property of the given kind; violating triple on failure.

    The triple (x, y, z) names an arc x -> y and a vertex z inside ]x, y[
    for which the required arc is absent.  Arcs are scanned in sorted
    order, so the first triple under that scan is returned.
    """
    if kind not in ORDER_KINDS:
        raise ValueError(f"unknown order kind {kind!r}")
    for u, v in d.arcs:
        if d.has_arc(v, u):
            raise ValueError(f"digon between {min(u, v)} and {max(u, v)}: not an oriented graph")
    if len(o) != d.n:
        raise ValueError("order does not cover the digraph's vertices")
    need_tail = kind in ("round", "out-round")  # x -> z required
    need_head = kind in ("round", "in-round")  # z -> y required
    for x, y in sorted(d.arcs):
        for z in o.open_interval(x, y):
            if need_tail and not d.has_arc(x, z):
                return False, (x, y, z)
            if need_head and not d.has_arc(z, y):
                return False, (x, y, z)
    return True, None


def find_in_round_order(d: Digraph) -> CyclicOrder | OrderSearchFailure:
    """Construct an in-round cyclic order of a strong oriented graph.

    Requires every out-neighbourhood to induce a tournament and every
    in-neighbourhood to induce an acyclic digraph; otherwise the witness
    is returned as a failure value.  The construction picks, for each
    vertex x, the sink f(x) of the acyclic digraph induced by x's
    in-neighbourhood (smallest id among sinks); the arcs f(x) -> x then
    close into a single Hamiltonian cycle, which is the order.
    """
    if d.n == 0:
        raise ValueError("the empty digraph has no cyclic order")
    _require_oriented(d)
    if not is_strong(d):
        raise ValueError("digraph is not strong")
    if d.n == 1:
        return CyclicOrder((0,))
    ok, w = check_class(d, "out-tournament-in-acyclic")
    if not ok:
        return OrderSearchFailure("class-violation", witness=w)

    f = [0] * d.n
    for x in range(d.n):
        minus = d.in_neighbours(x)
        sinks = [y for y in minus if not (d.out_neighbours(y) & minus)]
        if not sinks:  # impossible: the in-neighbourhood is non-empty and acyclic
            raise InternalCheckError(f"no sink in the in-neighbourhood of {x}")
        f[x] = min(sinks)

    walk = [0]
    seen = {0: 0}
    while True:
        nxt = f[walk[-1]]
        if nxt in seen:
            cycle = walk[seen[nxt] :]
            break
        seen[nxt] = len(walk)
        walk.append(nxt)
    if len(cycle) != d.n:
        return OrderSearchFailure("cycle-not-hamiltonian", detail=tuple(cycle))
    order = CyclicOrder(tuple(reversed(cycle)))
    ok, triple = verify_order(d, order, "in-round")
    if not ok:
        return OrderSearchFailure("order-not-verified", detail=triple)
    return order


def find_out_round_order(d: Digraph) -> CyclicOrder | OrderSearchFailure:
    """Construct an out-round order: the in-round construction on the
    reversed digraph, with the resulting order reversed."""
    res = find_in_round_order(reverse(d))
    if isinstance(res, OrderSearchFailure):
        return res
    order = res.reverse()
    ok, triple = verify_order(d, order, "out-round")
    if not ok:
        raise InternalCheckError(f"reversed order failed out-round verification at {triple}")
    return order


def find_round_order(d: Digraph) -> CyclicOrder | OrderSearchFailure:
    """Construct a round cyclic order of a connected oriented graph.

    Requires every out- and in-neighbourhood to induce a transitive
    tournament; the witness is returned as a failure value otherwise.
    Strong inputs reuse the in-round construction (whose sink choice is
    then forced) and verify roundness.  Non-strong inputs fall back to an
    exhaustive search over cyclic orders, which is limited to
    ROUND_SEARCH_LIMIT vertices; beyond that UnsupportedSizeError is
    raised.
    """
    _require_oriented(d)
    if not underlying_connected(d):
        raise ValueError("digraph is not connected")
    if d.n == 0:
        return CyclicOrder(())
    ok_out, w = check_class(d, "locally-out-transitive")
    if not ok_out:
        return OrderSearchFailure("class-violation", witness=w)
    ok_in, w = check_class(reverse(d), "locally-out-transitive")
    if not ok_in:
        return OrderSearchFailure("class-violation", witness=w)

    if is_strong(d):
        res = find_in_round_order(d)
        if isinstance(res, OrderSearchFailure):
            raise InternalCheckError(f"in-round construction failed on a locally transitive strong input: {res.describe()}")
        ok, _ = verify_order(d, res, "round")
        if ok:
            return res
        # Not expected to happen (the sink choice is unique here); search.
    if d.n > ROUND_SEARCH_LIMIT:
        raise UnsupportedSizeError(
            f"exhaustive round-order search supports at most {ROUND_SEARCH_LIMIT} vertices"
        )
    found = _round_order_backtrack(d)
    if found is None:
        raise InternalCheckError("no round order found although the local condition holds")
    return found


def _round_order_backtrack(d: Digraph) -> CyclicOrder | None:
    """Lexicographically first cyclic order (vertex 0 leading) that is round.

    Explores linear extensions in lexicographic order; a placement is
    pruned when an arc between already-placed vertices, read forward along
    the prefix, misses one of its required interval arcs.  Pruning only
    discards prefixes no completion can repair, so the first accepted
    order equals the one exhaustive enumeration would return.
    """
    if d.n == 0:
        return CyclicOrder(())
    seq = [0]
    used = [False] * d.n
    used[0] = True

    def prefix_ok():
        y = seq[-1]
        for a in range(len(seq) - 1):
            x = seq[a]
            if d.has_arc(x, y):
                for b in range(a + 1, len(seq) - 1):
                    z = seq[b]
                    if not (d.has_arc(x, z) and d.has_arc(z, y)):
                        return False
        return True

    def extend():
        if len(seq) == d.n:
            o = CyclicOrder(tuple(seq))
            return o if verify_order(d, o, "round")[0] else None
        for v in range(1, d.n):
            if used[v]:
                continue
            seq.append(v)
            used[v] = True
            result = extend() if prefix_ok() else None
            seq.pop()
            used[v] = False
            if result is not None:
                return result
        return None

    return extend()


def _require_oriented(d: Digraph) -> None:
    for u, v in d.arcs:
        if d.has_arc(v, u):
            raise ValueError(f"digon between {min(u, v)} and {max(u, v)}: not an oriented graph")
