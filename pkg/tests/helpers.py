"""Independent brute-force oracles used to cross-check the library.

Everything here recomputes properties from first principles (exhaustive
search, direct quantifier evaluation) so that the constructive code paths
in dgtk are checked against an independent route.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from dgtk import CyclicOrder, Digraph, transitive_tournament


# --- reachability and cycles -------------------------------------------------


def brute_reachable(d: Digraph, start: int, within=None) -> set[int]:
    allowed = set(range(d.n)) if within is None else set(within)
    seen = {start}
    q = deque([start])
    while q:
        u = q.popleft()
        for w in d.out_neighbours(u):
            if w in allowed and w not in seen:
                seen.add(w)
                q.append(w)
    return seen


def brute_strong_subset(d: Digraph, members) -> bool:
    members = set(members)
    if not members:
        return False
    return all(members <= brute_reachable(d, v, members) for v in members)


def brute_is_strong(d: Digraph) -> bool:
    return d.n >= 1 and brute_strong_subset(d, range(d.n))


def all_simple_cycles(d: Digraph):
    """Every directed simple cycle, as a tuple anchored at its smallest vertex."""
    cycles = []

    def extend(path, on_path):
        u = path[-1]
        for w in sorted(d.out_neighbours(u)):
            if w == path[0]:
                cycles.append(tuple(path))
            elif w > path[0] and w not in on_path:
                extend(path + [w], on_path | {w})

    for s in range(d.n):
        extend([s], {s})
    return cycles


def brute_girth(d: Digraph) -> int | None:
    cycles = all_simple_cycles(d)
    return min((len(c) for c in cycles), default=None)


# --- cyclic orders ------------------------------------------------------------


def all_cyclic_orders(n: int):
    """One representative per rotation class, lexicographic with vertex 0 first."""
    if n == 0:
        yield CyclicOrder(())
        return
    for rest in permutations(range(1, n)):
        yield CyclicOrder((0,) + rest)


def brute_order_holds(d: Digraph, o: CyclicOrder, kind: str) -> bool:
    """Direct evaluation of the interval quantifier, independent of verify_order."""
    for x, y in d.arcs:
        rot = o.rotated_to(x)
        j = rot.index(y)
        for z in rot[1:j]:
            if kind in ("round", "out-round") and (x, z) not in d.arcs:
                return False
            if kind in ("round", "in-round") and (z, y) not in d.arcs:
                return False
    return True


def brute_some_order(d: Digraph, kind: str) -> bool:
    return any(brute_order_holds(d, o, kind) for o in all_cyclic_orders(d.n))


# --- canonical forms and tournament enumeration --------------------------------


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64)


def canon_key(d: Digraph):
    """Canonical form under vertex relabelling (usable up to n = 7)."""
    n = d.n
    if n == 0:
        return (0, 0)
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in d.arcs:
        a[u, v] = 1
    p = _perms(n)
    b = a[p[:, :, None], p[:, None, :]]
    weights = (np.int64(1) << np.arange(n * n, dtype=np.int64)).reshape(n, n)
    return (n, int((b * weights).sum(axis=(1, 2)).min()))


def all_tournaments(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in product((0, 1), repeat=len(pairs)):
        yield Digraph(n, ((u, v) if b else (v, u) for (u, v), b in zip(pairs, bits)))


def tournament_iso_reps(max_n: int) -> dict[int, list[Digraph]]:
    """One representative per isomorphism class, built by vertex extension."""
    reps = {1: [Digraph(1)]}
    for n in range(2, max_n + 1):
        seen = set()
        out = []
        for t in reps[n - 1]:
            for bits in range(1 << (n - 1)):
                arcs = set(t.arcs)
                for v in range(n - 1):
                    arcs.add((v, n - 1) if bits >> v & 1 else (n - 1, v))
                d = Digraph(n, arcs)
                key = canon_key(d)
                if key not in seen:
                    seen.add(key)
                    out.append(d)
        reps[n] = out
    return reps


# --- hero oracle ----------------------------------------------------------------


def _compose_join(a: Digraph, b: Digraph) -> Digraph:
    arcs = set(a.arcs)
    arcs.update((a.n + u, a.n + v) for u, v in b.arcs)
    arcs.update((u, a.n + v) for u in range(a.n) for v in range(b.n))
    return Digraph(a.n + b.n, arcs)


def _compose_c3(p1: Digraph, p2: Digraph) -> Digraph:
    apex = p1.n + p2.n
    arcs = set(p1.arcs)
    arcs.update((p1.n + u, p1.n + v) for u, v in p2.arcs)
    arcs.update((u, p1.n + v) for u in range(p1.n) for v in range(p2.n))
    arcs.update((p1.n + u, apex) for u in range(p2.n))
    arcs.update((apex, u) for u in range(p1.n))
    return Digraph(apex + 1, arcs)


def hero_canon_sets(max_n: int):
    """All heroes up to isomorphism by size, generated forward from the rules."""
    k1 = Digraph(1)
    reps: dict = {canon_key(k1): k1}
    by_n: dict[int, set] = {1: {canon_key(k1)}}
    for n in range(2, max_n + 1):
        found = set()
        for a in range(1, n):
            for ka in by_n[a]:
                for kb in by_n[n - a]:
                    d = _compose_join(reps[ka], reps[kb])
                    key = canon_key(d)
                    found.add(key)
                    reps.setdefault(key, d)
        for h in range(1, n - 1):
            tt = transitive_tournament(n - 1 - h)
            for kh in by_n[h]:
                for d in (_compose_c3(reps[kh], tt), _compose_c3(tt, reps[kh])):
                    key = canon_key(d)
                    found.add(key)
                    reps.setdefault(key, d)
        by_n[n] = found
    return by_n, reps


def induced(d: Digraph, members):
    members = sorted(members)
    idx = {v: i for i, v in enumerate(members)}
    return Digraph(len(members), ((idx[u], idx[v]) for u, v in d.arcs if u in idx and v in idx))


def is_tt_subset(d: Digraph, members) -> bool:
    members = sorted(members)
    if not members:
        return False
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if d.has_arc(u, v) == d.has_arc(v, u):
                return False
    return brute_girth(induced(d, members)) is None


def hero_by_tripartition(t: Digraph, memo=None) -> bool:
    """Hero recognition with an unrestricted search over C3 splits."""
    if memo is None:
        memo = {}
    key = canon_key(t)
    if key in memo:
        return memo[key]
    if t.n == 1:
        memo[key] = True
        return True
    result = False
    components = _strong_partition(t)
    if len(components) > 1:
        result = all(hero_by_tripartition(induced(t, c), memo) for c in components)
    else:
        for v in range(t.n):
            others = [u for u in range(t.n) if u != v]
            for mask in range(1, (1 << len(others)) - 1):
                a = {others[i] for i in range(len(others)) if mask >> i & 1}
                b = set(others) - a
                if not all(t.has_arc(x, y) for x in a for y in b):
                    continue
                if not all(t.has_arc(y, v) for y in b):
                    continue
                if not all(t.has_arc(v, x) for x in a):
                    continue
                if is_tt_subset(t, b) and hero_by_tripartition(induced(t, a), memo):
                    result = True
                    break
                if is_tt_subset(t, a) and hero_by_tripartition(induced(t, b), memo):
                    result = True
                    break
            if result:
                break
    memo[key] = result
    return result


def _strong_partition(d: Digraph):
    remaining = set(range(d.n))
    parts = []
    while remaining:
        v = min(remaining)
        comp = {u for u in remaining if u in brute_reachable(d, v, remaining) and v in brute_reachable(d, u, remaining)}
        parts.append(frozenset(comp))
        remaining -= comp
    return parts


# --- hubs ------------------------------------------------------------------------


def exhaustive_maximal_hubs(d: Digraph) -> set[frozenset[int]]:
    """Inclusion-maximal hubs by full subset enumeration (oriented inputs).

    A single vertex has no outside dominator, so no hub exists there; the
    decomposition still uses the trivial partition by convention.
    """
    if d.n == 1:
        return {frozenset({0})}
    hubs = []
    for r in range(1, d.n + 1):
        for sub in combinations(range(d.n), r):
            s = frozenset(sub)
            if not brute_strong_subset(d, s):
                continue
            if any(s <= d.in_neighbours(x) for x in range(d.n) if x not in s):
                hubs.append(s)
    return {h for h in hubs if not any(h < g for g in hubs)}


def exhaustive_maximal_weak_hubs(d: Digraph) -> set[frozenset[int]]:
    hubs = []
    for r in range(1, d.n + 1):
        for sub in combinations(range(d.n), r):
            s = frozenset(sub)
            if not brute_strong_subset(d, s):
                continue
            for x in range(d.n):
                if x in s:
                    continue
                if s <= d.in_neighbours(x) - d.out_neighbours(x) or s <= d.out_neighbours(x) - d.in_neighbours(x):
                    hubs.append(s)
                    break
    return {h for h in hubs if not any(h < g for g in hubs)}


# --- colourings ------------------------------------------------------------------


def brute_valid_dicolouring(d: Digraph, colours) -> bool:
    colours = list(colours)
    for colour in set(colours):
        members = [v for v in range(d.n) if colours[v] == colour]
        if brute_girth(induced(d, members)) is not None:
            return False
    return True


def brute_dichromatic(d: Digraph) -> int:
    if d.n == 0:
        return 1
    for k in range(1, d.n + 1):
        for assignment in product(range(k), repeat=d.n):
            if brute_valid_dicolouring(d, assignment):
                return k
    raise AssertionError("unreachable")


# --- four-partition re-verification ------------------------------------------------


def out_dominates(d: Digraph, a, b) -> bool:
    return all(set(b) <= d.out_neighbours(x) for x in a)


def strictly_out_dominates(d: Digraph, a, b) -> bool:
    return all(set(b) <= d.out_neighbours(x) - d.in_neighbours(x) for x in a)


def is_semicomplete_subset(d: Digraph, members) -> bool:
    members = sorted(members)
    return all(
        d.has_arc(u, v) or d.has_arc(v, u)
        for i, u in enumerate(members)
        for v in members[i + 1 :]
    )


def verify_lsc_structure(d: Digraph, structure) -> None:
    """Re-derive every case invariant of a decomposition result from scratch."""
    from dgtk import check_class, contract, reverse, verify_order
    from dgtk.decomposition import FourPartition, RoundBlowup, UniversalSemicomplete

    full = set(range(d.n))
    if isinstance(structure, UniversalSemicomplete):
        v = structure.vertex
        assert d.out_neighbours(v) == d.in_neighbours(v) == frozenset(full - {v})
        assert is_semicomplete_subset(d, full)
    elif isinstance(structure, RoundBlowup):
        assert len(structure.parts) >= 2
        for part in structure.parts:
            assert brute_strong_subset(d, part)
            assert is_semicomplete_subset(d, part)
        assert contract(d, structure.parts) == structure.quotient
        q = structure.quotient
        assert check_class(q, "oriented")[0]
        assert check_class(q, "locally-out-transitive")[0]
        assert check_class(reverse(q), "locally-out-transitive")[0]
        if structure.order is not None:
            assert verify_order(q, structure.order, "round")[0]
    else:
        assert isinstance(structure, FourPartition)
        e, f, g, h = structure.e, structure.f, structure.g, structure.h
        assert f and h and (e or g)
        assert e | f | g | h == full
        assert len(e) + len(f) + len(g) + len(h) == d.n
        for s in (e, f, g, h):
            assert is_semicomplete_subset(d, s)
        assert strictly_out_dominates(d, e, f)
        assert strictly_out_dominates(d, f, g)
        assert out_dominates(d, g, h)
        assert out_dominates(d, h, e)
        for x in g:
            assert d.out_neighbours(x) & e
            assert d.in_neighbours(x) & e


def rederive_four_partition_sets(d: Digraph, f):
    """The sender/receiver/mixed/untouched sets around f, from first principles."""
    mixed = {
        u
        for u in range(d.n)
        if u not in f and (d.out_neighbours(u) & f) and (d.in_neighbours(u) & f)
    }
    senders = {u for u in range(d.n) if u not in f and d.out_neighbours(u) & f} - mixed
    receivers = {u for u in range(d.n) if u not in f and d.in_neighbours(u) & f} - mixed
    untouched = set(range(d.n)) - set(f) - senders - receivers - mixed
    return senders, receivers, mixed, untouched
