"""Hub decompositions and the three-case structure of locally semicomplete digraphs.

A hub of an oriented graph is a vertex set inducing a strong subdigraph
all of whose members send an arc to one common outside vertex.  In a
strong locally out-transitive oriented graph the maximal hubs partition
the vertices and contracting them leaves a strong in-round quotient; the
arcs between two hubs, when present, all run from the whole of one hub
onto a subset of the other that induces a transitive tournament.

For locally semicomplete digraphs (digons allowed) the right notion is a
weak hub: a strong set strictly in- or out-dominated by some outside
vertex.  A connected locally semicomplete digraph is either semicomplete
with a universal vertex, or a blow-up of a round oriented graph along its
maximal weak hubs, or splits into four sets E, F, G, H with a cyclic
complete-domination pattern.

Every constructive operation here re-verifies its output against the raw
digraph before returning and raises InternalCheckError on any mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from dgtk.digraph import (
    CyclicOrder,
    Digraph,
    Partition,
    contract,
    induced_subdigraph,
    is_strong,
    reverse,
    strong_components,
    underlying_connected,
)
from dgtk.errors import InternalCheckError, PreconditionError, UnsupportedSizeError
from dgtk.orders import (
    OrderSearchFailure,
    find_in_round_order,
    find_round_order,
    verify_order,
)
from dgtk.recognition import check_class


@dataclass(frozen=True)
class HubPartition:
    """Maximal hubs of a strong locally out-transitive oriented graph.

    quotient is the contraction of the parts (an oriented graph) and
    order an in-round cyclic order of it.  Part ids follow the parts
    tuple, which is sorted by smallest contained vertex.
    """

    parts: Partition
    quotient: Digraph
    order: CyclicOrder


@dataclass(frozen=True)
class WeakHub:
    """A strong vertex set strictly dominated from outside.

    direction "strictly-in" means the dominator strictly in-dominates the
    members (every member sends to it, none receives); "strictly-out" the
    reverse.  mixed records whether some outside vertex has arcs both to
    and from the set.
    """

    members: frozenset[int]
    dominator: int
    direction: str
    mixed: bool


@dataclass(frozen=True)
class UniversalSemicomplete:
    """Semicomplete digraph together with its smallest universal vertex."""

    vertex: int


@dataclass(frozen=True)
class RoundBlowup:
    """Partition into strong semicomplete parts whose contraction is a
    round oriented graph.

    order is a round cyclic order of the quotient when one was
    constructed; None when the quotient is non-strong and too large for
    the exhaustive search (roundness is still certified by the local
    transitive-tournament condition).
    """

    parts: Partition
    quotient: Digraph
    order: CyclicOrder | None


@dataclass(frozen=True)
class FourPartition:
    """Four sets with the cyclic domination pattern.

    e strictly out-dominates f, f strictly out-dominates g, g out-dominates
    h, h out-dominates e; each set induces a semicomplete digraph; f and h
    are non-empty and so is e together with g; every vertex of g has both
    an out- and an in-neighbour in e.
    """

    e: frozenset[int]
    f: frozenset[int]
    g: frozenset[int]
    h: frozenset[int]


LscStructure = Union[UniversalSemicomplete, RoundBlowup, FourPartition]


# --- maximal hubs (oriented, locally out-transitive, strong) -------------


def maximal_hubs(d: Digraph) -> HubPartition:
    """Partition a strong locally out-transitive oriented graph into its
    maximal hubs and contract them to a strong in-round quotient.

    Hubs are seeded by the strong components of every in-neighbourhood
    (each is in-dominated by the neighbourhood's vertex) plus all
    singletons; overlapping hubs merge, and the classes of that merge are
    exactly the maximal hubs.
    """
    _require(d, "oriented")
    _require(d, "locally-out-transitive")
    if not is_strong(d):
        raise PreconditionError("digraph is not strong")
    if d.n == 1:
        parts = Partition([{0}])
        return HubPartition(parts, contract(d, parts), CyclicOrder((0,)))

    seeds = {frozenset((v,)) for v in range(d.n)}
    for x in range(d.n):
        sub, _, to_orig = induced_subdigraph(d, d.in_neighbours(x))
        comps, _, _ = strong_components(sub)
        for comp in comps:
            seeds.add(frozenset(to_orig[i] for i in comp))

    uf = list(range(d.n))

    def find(a):
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    for seed in seeds:
        it = iter(seed)
        first = find(next(it))
        for v in it:
            uf[find(v)] = first

    classes: dict[int, set[int]] = {}
    for v in range(d.n):
        classes.setdefault(find(v), set()).add(v)
    parts = Partition(sorted(classes.values(), key=min))

    quotient = contract(d, parts)
    order = find_in_round_order(quotient)
    if isinstance(order, OrderSearchFailure):
        raise InternalCheckError(f"hub quotient is not in-round: {order.describe()}")
    hp = HubPartition(parts, quotient, order)
    _verify_hub_partition(d, hp)
    return hp


def _verify_hub_partition(d: Digraph, hp: HubPartition) -> None:
    for part in hp.parts:
        sub, _, _ = induced_subdigraph(d, part)
        if not is_strong(sub):
            raise InternalCheckError(f"hub {sorted(part)} does not induce a strong subdigraph")
    for u, v in hp.quotient.arcs:
        if hp.quotient.has_arc(v, u):
            raise InternalCheckError(f"digon between hubs {u} and {v} in the quotient")
    ok, triple = verify_order(hp.quotient, hp.order, "in-round")
    if not ok:
        raise InternalCheckError(f"quotient order is not in-round at {triple}")
    k = len(hp.parts)
    for i in range(k):
        for j in range(i + 1, k):
            _check_cross_arcs(d, hp.parts[i], hp.parts[j])


def _check_cross_arcs(d: Digraph, a: frozenset[int], b: frozenset[int]) -> None:
    """Between two maximal hubs: either no arc, or all arcs from the whole
    of one onto a transitive-tournament subset of the other."""
    ab = {(u, v) for (u, v) in d.arcs if u in a and v in b}
    ba = {(u, v) for (u, v) in d.arcs if u in b and v in a}
    if ab and ba:
        raise InternalCheckError(f"arcs in both directions between hubs {sorted(a)} and {sorted(b)}")
    arcs, src, dst = (ab, a, b) if ab else (ba, b, a)
    if not arcs:
        return
    heads = {v for (_, v) in arcs}
    if arcs != {(u, v) for u in src for v in heads}:
        raise InternalCheckError(
            f"cross arcs from {sorted(src)} are not complete onto {sorted(heads)}"
        )
    sub, _, _ = induced_subdigraph(d, heads)
    ok, w = check_class(sub, "transitive-tournament")
    if not ok:
        raise InternalCheckError(
            f"arc heads {sorted(heads)} do not induce a transitive tournament: {w.describe()}"
        )


def boundary_sets(hp: HubPartition, d: Digraph) -> tuple[frozenset[int], ...]:
    """For each hub, its vertices with an in-neighbour outside the hub.

    In a hub partition these sets equal x+ intersected with the hub for
    every x in the predecessor hub on the quotient order, and each induces
    a transitive tournament; both facts are re-verified here.
    """
    if hp.parts.n != d.n or contract(d, hp.parts) != hp.quotient:
        raise ValueError("hub partition does not match the digraph")
    out = []
    for i, part in enumerate(hp.parts):
        t = frozenset(v for v in part if d.in_neighbours(v) - part)
        out.append(t)
    if len(hp.parts) >= 2:
        for i, t in enumerate(out):
            pred = hp.order.predecessor(i)
            if not hp.quotient.has_arc(pred, i):
                raise InternalCheckError(f"no quotient arc from predecessor hub {pred} to hub {i}")
            for x in hp.parts[pred]:
                if (d.out_neighbours(x) & hp.parts[i]) != t:
                    raise InternalCheckError(
                        f"boundary of hub {i} differs from the out-reach of vertex {x}"
                    )
            sub, _, _ = induced_subdigraph(d, t)
            ok, w = check_class(sub, "transitive-tournament")
            if not ok:
                raise InternalCheckError(f"boundary of hub {i} is not a transitive tournament")
    return tuple(out)


# --- weak hubs and the locally semicomplete structure ---------------------


def find_weak_hubs(d: Digraph) -> list[WeakHub]:
    """Inclusion-maximal weak hubs of a locally semicomplete digraph.

    Every weak hub has a strict dominator v and therefore sits inside one
    strong component of the dominated neighbourhood side (out minus in or
    in minus out of v); those components are themselves weak hubs, so the
    maximal weak hubs are found among them.  Seeds are these components
    plus all valid singletons; the inclusion-maximal frontier is then
    tightened by merge and single-vertex extension moves until a fixed
    point (a safety net in case a hub escaped the seed family, which the
    containment argument rules out).  Vertices joined to all their
    neighbours by digons belong to no weak hub and are absent from the
    result.
    """
    _require(d, "locally-semicomplete")
    if d.n == 0:
        return []

    cands: set[frozenset[int]] = set()
    for x in range(d.n):
        for side in (
            d.out_neighbours(x) - d.in_neighbours(x),
            d.in_neighbours(x) - d.out_neighbours(x),
        ):
            if not side:
                continue
            sub, _, to_orig = induced_subdigraph(d, side)
            comps, _, _ = strong_components(sub)
            for comp in comps:
                cands.add(frozenset(to_orig[i] for i in comp))
    for v in range(d.n):
        single = frozenset((v,))
        if _dominator(d, single) is not None:
            cands.add(single)
    cands = _maximal_only(cands)

    changed = True
    while changed:
        changed = False
        additions: set[frozenset[int]] = set()
        listed = sorted(cands, key=sorted)
        for i, a in enumerate(listed):
            for b in listed[i + 1 :]:
                if a & b:
                    u = a | b
                    if not _absorbed(u, cands) and _is_weak_hub(d, u):
                        additions.add(u)
            for v in range(d.n):
                if v not in a:
                    u = a | {v}
                    if not _absorbed(u, cands) and _is_weak_hub(d, u):
                        additions.add(u)
        if additions:
            cands = _maximal_only(cands | additions)
            changed = True

    hubs = []
    for members in sorted(cands, key=sorted):
        dom = _dominator(d, members)
        assert dom is not None
        hubs.append(WeakHub(members, dom[0], dom[1], _is_mixed(d, members)))
    return hubs


def _maximal_only(sets):
    return {s for s in sets if not any(s < t for t in sets)}


def _absorbed(u, cands):
    return any(u <= c for c in cands)


def _dominator(d, members):
    """Smallest outside vertex strictly dominating the set, with direction."""
    for v in range(d.n):
        if v in members:
            continue
        if members <= d.in_neighbours(v) - d.out_neighbours(v):
            return v, "strictly-in"
        if members <= d.out_neighbours(v) - d.in_neighbours(v):
            return v, "strictly-out"
    return None


def _is_weak_hub(d, members):
    if not members or _dominator(d, members) is None:
        return False
    sub, _, _ = induced_subdigraph(d, members)
    return is_strong(sub)


def _is_mixed(d, members):
    for z in range(d.n):
        if z in members:
            continue
        if (d.out_neighbours(z) & members) and (d.in_neighbours(z) & members):
            return True
    return False


def decompose_lsc(d: Digraph) -> LscStructure:
    """Structure of a connected locally semicomplete digraph: exactly one of
    a universal-vertex semicomplete, a round blow-up, or a four-partition.

    Every invariant of the returned case is re-verified against the raw
    digraph before returning.
    """
    _require(d, "locally-semicomplete")
    if not underlying_connected(d):
        raise PreconditionError("digraph is not connected")
    if d.n == 0:
        raise ValueError("the empty digraph has no decomposition case")

    full = frozenset(range(d.n))
    for v in range(d.n):
        if d.out_neighbours(v) == d.in_neighbours(v) == full - {v}:
            ok, w = check_class(d, "semicomplete")
            if not ok:
                raise InternalCheckError(
                    f"universal vertex {v} in a non-semicomplete digraph: {w.describe()}"
                )
            return UniversalSemicomplete(v)

    hubs = find_weak_hubs(d)
    mixed = [h for h in hubs if h.mixed]
    if mixed:
        return _four_partition(d, mixed)
    return _round_blowup(d, hubs)


def _four_partition(d, mixed_hubs):
    """Build a verified four-partition from a mixed maximal weak hub.

    With x = the hub, the derived sets are x_in (senders into the hub),
    x_out (receivers only) and x_mixed (both); vertices seeing none of the
    hub cannot exist in a connected digraph.  The natural assignment
    (x_in, hub, x_out, x_mixed) can fail the neighbour condition between
    the third and first sets, so all four rotations of the cyclic pattern
    are tried and the first fully verified one is returned.
    """
    failures = []
    for hub in mixed_hubs:
        x = hub.members
        x_mixed = frozenset(
            u
            for u in range(d.n)
            if u not in x and (d.out_neighbours(u) & x) and (d.in_neighbours(u) & x)
        )
        x_in = frozenset(
            u for u in range(d.n) if u not in x and (d.out_neighbours(u) & x)
        ) - x_mixed
        x_out = frozenset(
            u for u in range(d.n) if u not in x and (d.in_neighbours(u) & x)
        ) - x_mixed
        x_no = frozenset(range(d.n)) - x - x_in - x_out - x_mixed
        if x_no:
            raise InternalCheckError(
                f"vertices {sorted(x_no)} see nothing of the mixed hub {sorted(x)} "
                "although the digraph is connected"
            )
        ring = (x_in, x, x_out, x_mixed)
        for shift in range(4):
            e, f, g, h = (ring[(i + shift) % 4] for i in range(4))
            fp = FourPartition(e, f, g, h)
            problems = _four_partition_problems(d, fp)
            if not problems:
                return fp
            failures.append((sorted(f), problems[0]))
    raise InternalCheckError(f"no rotation of a mixed weak hub verified: {failures}")


def _four_partition_problems(d, fp):
    """All violated four-partition invariants (empty list when valid)."""
    problems = []
    e, f, g, h = fp.e, fp.f, fp.g, fp.h
    sets = (e, f, g, h)
    if set().union(*sets) != set(range(d.n)) or sum(len(s) for s in sets) != d.n:
        problems.append("sets do not partition the vertices")
    if not f:
        problems.append("f is empty")
    if not h:
        problems.append("h is empty")
    if not e and not g:
        problems.append("e and g are both empty")
    for name, s in zip("efgh", sets):
        sub, _, _ = induced_subdigraph(d, s)
        ok, _ = check_class(sub, "semicomplete")
        if not ok:
            problems.append(f"{name} is not semicomplete")
    if not _strictly_out_dominates(d, e, f):
        problems.append("e does not strictly out-dominate f")
    if not _strictly_out_dominates(d, f, g):
        problems.append("f does not strictly out-dominate g")
    if not _out_dominates(d, g, h):
        problems.append("g does not out-dominate h")
    if not _out_dominates(d, h, e):
        problems.append("h does not out-dominate e")
    for x in g:
        if not (d.out_neighbours(x) & e) or not (d.in_neighbours(x) & e):
            problems.append(f"vertex {x} of g lacks a neighbour in e")
            break
    return problems


def _out_dominates(d, a, b):
    return all(b <= d.out_neighbours(x) for x in a)


def _strictly_out_dominates(d, a, b):
    return all(b <= d.out_neighbours(x) - d.in_neighbours(x) for x in a)


def _round_blowup(d, hubs):
    members = [h.members for h in hubs]
    covered: set[int] = set()
    for m in members:
        if covered & m:
            raise InternalCheckError("maximal weak hubs overlap")
        covered |= m
    if covered != set(range(d.n)):
        raise InternalCheckError(
            f"vertices {sorted(set(range(d.n)) - covered)} belong to no maximal weak hub"
        )
    if len(members) < 2:
        raise InternalCheckError("fewer than two parts in a round blow-up")
    parts = Partition(sorted(members, key=min))
    for part in parts:
        sub, _, _ = induced_subdigraph(d, part)
        if not is_strong(sub):
            raise InternalCheckError(f"part {sorted(part)} is not strong")
        ok, _ = check_class(sub, "semicomplete")
        if not ok:
            raise InternalCheckError(f"part {sorted(part)} is not semicomplete")
    quotient = contract(d, parts)
    k = len(parts)
    for i in range(k):
        for j in range(i + 1, k):
            _check_blowup_cross(d, quotient, parts, i, j)
    ok, _ = check_class(quotient, "locally-out-transitive")
    ok2, _ = check_class(reverse(quotient), "locally-out-transitive")
    if not ok or not ok2:
        raise InternalCheckError("blow-up quotient fails the round local condition")
    order: CyclicOrder | None
    try:
        res = find_round_order(quotient)
    except UnsupportedSizeError:
        order = None
    else:
        if isinstance(res, OrderSearchFailure):
            raise InternalCheckError(f"blow-up quotient has no round order: {res.describe()}")
        order = res
    return RoundBlowup(parts, quotient, order)


def _check_blowup_cross(d, quotient, parts, i, j):
    """Between distinct maximal weak hubs: no arc, or complete strict
    domination one way."""
    ij, ji = quotient.has_arc(i, j), quotient.has_arc(j, i)
    if ij and ji:
        raise InternalCheckError(f"digon between parts {i} and {j} in the blow-up quotient")
    if not ij and not ji:
        return
    src, dst = (i, j) if ij else (j, i)
    if not _strictly_out_dominates(d, parts[src], parts[dst]):
        raise InternalCheckError(
            f"part {src} does not strictly out-dominate part {dst} despite the quotient arc"
        )


def _require(d: Digraph, cls: str) -> None:
    ok, w = check_class(d, cls)
    if not ok:
        raise PreconditionError(f"digraph is not {cls}: {w.describe()}", witness=w)
