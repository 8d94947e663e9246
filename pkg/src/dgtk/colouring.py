"""Acyclic colourings: validity checking, the exact brute-force dichromatic
number, and three constructive colouring schemes.

A dicolouring is valid when every colour class induces an acyclic
subdigraph.  The constructive schemes cover strong in-round oriented
graphs (2 colours, with any chosen vertex and its out-neighbourhood
monochromatic), locally out-transitive oriented graphs (2 colours, with a
prescribed transitive tournament monochromatic), and locally tournament
oriented graphs (doubling the palette of any tournament colourer).
Every constructed colouring is re-verified before being returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from dgtk.digraph import (
    Digraph,
    induced_subdigraph,
    is_strong,
    reverse,
    shortest_cycle,
    strong_components,
)
from dgtk.errors import InternalCheckError, PreconditionError, UnsupportedSizeError
from dgtk.orders import OrderSearchFailure, find_in_round_order
from dgtk.recognition import check_class

#: default cap for the exact dichromatic-number search
ORACLE_SIZE_LIMIT = 12


@dataclass(frozen=True)
class Colouring:
    """Vertex colouring with colours 1..palette."""

    colours: tuple[int, ...]
    palette: int

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.palette:
                raise ValueError(f"colour {c} of vertex {v} outside 1..{self.palette}")

    def of(self, v: int) -> int:
        return self.colours[v]

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.colours):
            out.setdefault(c, set()).add(v)
        return {c: frozenset(s) for c, s in out.items()}

    def used(self) -> int:
        return len(set(self.colours))


def _as_colour_tuple(d: Digraph, c) -> tuple[int, ...]:
    if isinstance(c, Colouring):
        colours = c.colours
    elif isinstance(c, Mapping):
        try:
            colours = tuple(c[v] for v in range(d.n))
        except KeyError as e:
            raise ValueError(f"vertex {e.args[0]} is uncoloured") from None
    else:
        colours = tuple(c)
    if len(colours) != d.n:
        raise ValueError("colouring does not cover every vertex")
    return colours


def is_valid_dicolouring(d: Digraph, c) -> tuple[bool, tuple[int, ...] | None]:
    """True when every colour class induces an acyclic subdigraph.

    On failure returns a shortest monochromatic directed cycle (ties broken
    by smaller colour).  Accepts a Colouring, a mapping or a sequence.
    """
    colours = _as_colour_tuple(d, c)
    best: tuple[int, ...] | None = None
    for colour in sorted(set(colours)):
        members = [v for v in range(d.n) if colours[v] == colour]
        sub, _, to_orig = induced_subdigraph(d, members)
        cyc = shortest_cycle(sub)
        if cyc is not None:
            lifted = tuple(to_orig[v] for v in cyc)
            if best is None or len(lifted) < len(best):
                best = lifted
    return (best is None), best


# --- exact oracle ---------------------------------------------------------


def dichromatic_number(d: Digraph, max_n: int = ORACLE_SIZE_LIMIT) -> int:
    """Exact dichromatic number by branch and bound (oracle use only)."""
    return minimum_dicolouring(d, max_n).palette


def minimum_dicolouring(d: Digraph, max_n: int = ORACLE_SIZE_LIMIT) -> Colouring:
    """A minimum dicolouring, found by increasing the palette until the
    backtracking search succeeds.

    Deterministic: vertices are coloured in id order and colours tried in
    increasing value, so the lexicographically first optimal assignment is
    returned.  Inputs larger than max_n are refused.
    """
    if d.n > max_n:
        raise UnsupportedSizeError(f"exact search limited to {max_n} vertices (got {d.n})")
    if d.n == 0:
        return Colouring((), 1)
    k = 1
    while True:
        assignment = _search_k(d, k)
        if assignment is not None:
            return Colouring(assignment, k)
        k += 1


def _search_k(d, k):
    colours = [0] * d.n

    def closes_cycle(v, colour):
        # does v lie on a cycle within its colour class?
        stack = [w for w in d.out_neighbours(v) if colours[w] == colour]
        seen = set(stack)
        while stack:
            u = stack.pop()
            if u == v:
                return True
            for w in d.out_neighbours(u):
                if w == v:
                    return True
                if colours[w] == colour and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def rec(v, used):
        if v == d.n:
            return True
        for colour in range(1, min(used + 1, k) + 1):
            colours[v] = colour
            if not closes_cycle(v, colour) and rec(v + 1, max(used, colour)):
                return True
            colours[v] = 0
        return False

    return tuple(colours) if rec(0, 0) else None


# --- constructive schemes -------------------------------------------------


def dicolour_in_round(d: Digraph, x: int) -> Colouring:
    """2-dicolouring of a strong in-round oriented graph with {x} and the
    out-neighbourhood of x in one class.

    Along the in-round order, the interval from x to the far end y of x's
    longest arc is one class and the remainder the other: everything in
    [x, y) sends an arc to y, so that interval is acyclic, and all arcs
    inside the remainder point forward.
    """
    if not 0 <= x < d.n:
        raise ValueError(f"vertex {x} out of range")
    try:
        order = find_in_round_order(d)
    except ValueError as e:
        raise PreconditionError(f"digraph is not a strong in-round oriented graph: {e}") from None
    if isinstance(order, OrderSearchFailure):
        raise PreconditionError(
            f"digraph is not a strong in-round oriented graph: {order.describe()}",
            witness=order.witness,
        )
    if d.n == 1:
        return Colouring((1,), 2)
    rotation = order.rotated_to(x)
    rank = {v: i for i, v in enumerate(rotation)}
    y = max(d.out_neighbours(x), key=rank.__getitem__)
    colours = [2] * d.n
    for v in order.interval(x, y):
        colours[v] = 1
    result = Colouring(tuple(colours), 2)
    _check_valid(d, result)
    if any(result.of(v) != 1 for v in d.out_neighbours(x) | {x}):
        raise InternalCheckError("anchor class is not monochromatic")
    return result


def dicolour_out_transitive(d: Digraph, t: Iterable[int] = ()) -> Colouring:
    """2-dicolouring of a locally out-transitive oriented graph with the
    transitive tournament t monochromatic.

    Strong components are coloured independently (any directed cycle lives
    inside one), each forcing its slice of t into the first colour class;
    an empty t is replaced by the smallest vertex.  Within a strong
    component the hub decomposition directs the construction: the quotient
    is coloured in-round-style so that the hub holding t's source and its
    out-neighbour hubs share a colour, and each hub is coloured
    recursively with its boundary set forced to its quotient colour.
    """
    _require(d, "oriented")
    _require(d, "locally-out-transitive")
    tset = frozenset(int(v) for v in t)
    if tset and not all(0 <= v < d.n for v in tset):
        raise ValueError("t contains an out-of-range vertex")
    _require_transitive_subset(d, tset)
    if d.n == 0:
        return Colouring((), 2)
    if not tset:
        tset = frozenset((0,))

    parts, _, _ = strong_components(d)
    colours = [0] * d.n
    for part in parts:
        sub, to_sub, to_orig = induced_subdigraph(d, part)
        local_t = frozenset(to_sub[v] for v in tset if v in part)
        if not local_t:
            local_t = frozenset((0,))
        local = _colour_strong(sub, local_t)
        for i, c in enumerate(local):
            colours[to_orig[i]] = c

    result = Colouring(tuple(colours), 2)
    _check_valid(d, result)
    first = result.of(min(tset))
    if any(result.of(v) != first for v in tset):
        raise InternalCheckError("t is not monochromatic")
    return result


def _colour_strong(d, tset):
    """Colours a strong locally out-transitive oriented graph with the
    transitive set tset in class 1.  Returns a list indexed by vertex."""
    from dgtk.decomposition import boundary_sets, maximal_hubs

    if d.n == 1:
        return [1]
    hp = maximal_hubs(d)
    source = _tournament_source(d, tset)
    anchor = hp.parts.part_of(source)
    quotient_colours = dicolour_in_round(hp.quotient, anchor)

    t_parts = {hp.parts.part_of(v) for v in tset}
    allowed = hp.quotient.out_neighbours(anchor) | {anchor}
    if not t_parts <= allowed:
        raise InternalCheckError("t spreads beyond the anchor hub's out-reach")
    if any(quotient_colours.of(i) != 1 for i in t_parts):
        raise InternalCheckError("a hub holding part of t missed the anchor colour")

    boundaries = boundary_sets(hp, d)
    colours = [0] * d.n
    for i, part in enumerate(hp.parts):
        if i == anchor:
            constraint = tset & part
        else:
            constraint = boundaries[i]
        sub, to_sub, to_orig = induced_subdigraph(d, part)
        local_constraint = frozenset(to_sub[v] for v in constraint)
        if not local_constraint:
            local_constraint = frozenset((0,))
        local = _colour_strong(sub, local_constraint)
        flip = quotient_colours.of(i) == 2
        for j, c in enumerate(local):
            colours[to_orig[j]] = (3 - c) if flip else c
    return colours


def _tournament_source(d, tset):
    """Source of the transitive tournament induced by tset."""
    for v in tset:
        if tset - {v} <= d.out_neighbours(v):
            return v
    raise InternalCheckError("transitive set has no source")


def dicolour_locally_tournament(
    d: Digraph,
    tournament_colourer: Callable[[Digraph], Colouring],
    k: int | None = None,
) -> Colouring:
    """Dicolouring of a locally tournament oriented graph using at most
    twice the colours the callback needs on any tournament it is given.

    Peeling the smallest vertex x, its in-neighbourhood is coloured with
    the lower half of the palette, its out-neighbourhood with the upper
    half, x itself gets colour 1, and the non-neighbours are handled the
    same way independently: no arc runs from the in-side to the
    non-neighbours nor from the non-neighbours to the out-side, so the
    halves never close a cycle.

    When k is None it is inferred as the largest number of colours the
    callback actually used; when given, any callback result using more
    than k colours is an error.
    """
    _require(d, "oriented")
    _require(d, "locally-in-tournament")
    ok, w = check_class(reverse(d), "locally-in-tournament")
    if not ok:
        raise PreconditionError(
            f"digraph is not locally tournament: {w.describe()} in the reverse", witness=w
        )

    levels = []
    current = set(range(d.n))
    while current:
        x = min(current)
        plus = d.out_neighbours(x) & current
        minus = d.in_neighbours(x) & current
        levels.append((x, plus, minus))
        current -= {x} | plus | minus

    sides = []
    max_used = 1
    for x, plus, minus in levels:
        coloured_sides = []
        for side in (minus, plus):
            if side:
                sub, _, to_orig = induced_subdigraph(d, side)
                col = tournament_colourer(sub)
                ok, cyc = is_valid_dicolouring(sub, col)
                if not ok:
                    raise ValueError(f"tournament colourer returned an invalid colouring (cycle {cyc})")
                used = max(col.colours)
                if k is not None and used > k:
                    raise ValueError(f"tournament colourer used {used} colours, above the promised {k}")
                max_used = max(max_used, used)
                coloured_sides.append((to_orig, col))
            else:
                coloured_sides.append(None)
        sides.append(coloured_sides)

    bound = k if k is not None else max_used
    colours = [0] * d.n
    for (x, plus, minus), (minus_side, plus_side) in zip(levels, sides):
        colours[x] = 1
        if minus_side is not None:
            to_orig, col = minus_side
            for i, c in enumerate(col.colours):
                colours[to_orig[i]] = c
        if plus_side is not None:
            to_orig, col = plus_side
            for i, c in enumerate(col.colours):
                colours[to_orig[i]] = bound + c

    result = Colouring(tuple(colours), 2 * bound)
    _check_valid(d, result)
    return result


def _check_valid(d, colouring):
    ok, cyc = is_valid_dicolouring(d, colouring)
    if not ok:
        raise InternalCheckError(f"constructed colouring has a monochromatic cycle {cyc}")


def _require(d, cls):
    ok, w = check_class(d, cls)
    if not ok:
        raise PreconditionError(f"digraph is not {cls}: {w.describe()}", witness=w)


def _require_transitive_subset(d, tset):
    if not tset:
        return
    sub, _, _ = induced_subdigraph(d, tset)
    ok, w = check_class(sub, "transitive-tournament")
    if not ok:
        raise PreconditionError(
            f"t does not induce a transitive tournament: {w.describe()}", witness=w
        )
