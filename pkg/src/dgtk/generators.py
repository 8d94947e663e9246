"""Class-respecting random generators and exhaustive small-instance enumeration.

Every generator verifies its output with the recognizers before returning
and retries with a derived seed on failure, so a returned digraph is
guaranteed to belong to the requested class.  Identical specs produce
identical digraphs.

Strongly-connected-only tags ("in-round", "round", "locally-out-transitive")
report n = 2 as unsatisfiable, since no strong oriented graph on two
vertices exists.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from dgtk.digraph import (
    Digraph,
    girth,
    induced_subdigraph,
    is_strong,
    reverse,
    transitive_tournament,
)
from dgtk.errors import UnsupportedSizeError
from dgtk.orders import OrderSearchFailure, find_in_round_order, find_round_order
from dgtk.recognition import CLASSES, check_class, is_hero

GENERATOR_CLASSES = CLASSES + ("in-round", "round", "hero", "locally-tournament")

ENUMERATION_LIMIT = 5
_ATTEMPTS = 64


class GenerationError(RuntimeError):
    """No instance of the requested spec could be produced."""


class _Unsatisfiable(Exception):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic description of a random instance.

    girth_floor, when set, requires every directed cycle to be longer than
    the floor; it is honoured by the in-round, round, locally-out-transitive
    and locally-in-tournament generators.
    """

    kind: str
    n: int
    seed: int
    girth_floor: int | None = None

    def __post_init__(self):
        if self.kind not in GENERATOR_CLASSES:
            raise ValueError(f"unknown generator class {self.kind!r}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.girth_floor is not None and self.girth_floor < 2:
            raise ValueError("girth floor must be at least 2")


def generate(spec: GeneratorSpec) -> Digraph:
    """Produce a digraph in the requested class, verified before returning."""
    master = random.Random(spec.seed)
    last = "no attempt verified"
    for _ in range(_ATTEMPTS):
        rng = random.Random(master.getrandbits(64))
        try:
            d = _build(spec, rng)
        except _Unsatisfiable as e:
            raise GenerationError(f"{spec} is unsatisfiable: {e}") from None
        if _verify(spec, d):
            return d
        last = "candidate failed verification"
    raise GenerationError(f"no instance for {spec} after {_ATTEMPTS} attempts ({last})")


def enumerate_all(n: int, oriented_only: bool) -> Iterator[Digraph]:
    """Every labelled digraph (or oriented graph) on n vertices, exactly once.

    Pairs are taken in lexicographic order and the state of the last pair
    varies fastest; per pair the states are none, forward, backward and
    (unless oriented_only) digon.
    """
    if n > ENUMERATION_LIMIT:
        raise UnsupportedSizeError(f"enumeration limited to {ENUMERATION_LIMIT} vertices")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    states = 3 if oriented_only else 4
    for combo in product(range(states), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, combo):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
            elif s == 3:
                arcs.append((u, v))
                arcs.append((v, u))
        yield Digraph(n, arcs)


# --- dispatch --------------------------------------------------------------


def _build(spec, rng):
    kind, n, floor = spec.kind, spec.n, spec.girth_floor
    if kind == "oriented":
        return _random_oriented(n, rng)
    if kind == "acyclic":
        return _random_acyclic(n, rng)
    if kind == "semicomplete":
        return _random_semicomplete(n, rng)
    if kind == "tournament":
        return _random_tournament(n, rng)
    if kind == "transitive-tournament":
        return _relabel(transitive_tournament(n), rng)
    if kind == "in-round":
        return _in_round(n, rng, floor)
    if kind == "round":
        return _round(n, rng, floor)
    if kind == "hero":
        return _hero(n, rng)
    if kind == "locally-out-transitive":
        return _lot_strong(n, rng, floor)
    if kind == "out-tournament-in-acyclic":
        if n == 2 or rng.random() < 0.3:
            return _relabel(transitive_tournament(n), rng)
        return _in_round(n, rng, floor)
    if kind == "locally-in-tournament":
        return _locally_in_tournament(n, rng, floor)
    if kind == "locally-out-semicomplete":
        return _locally_out_semicomplete(n, rng)
    if kind == "locally-in-semicomplete":
        return reverse(_locally_out_semicomplete(n, rng))
    if kind == "locally-semicomplete":
        return _locally_semicomplete(n, rng)
    if kind == "locally-tournament":
        return _locally_tournament(n, rng)
    raise AssertionError(kind)


def _verify(spec, d):
    if d.n != spec.n:
        return False
    if spec.girth_floor is not None:
        g = girth(d)
        if g is not None and g <= spec.girth_floor:
            return False
    kind = spec.kind
    try:
        if kind == "in-round":
            return (
                check_class(d, "oriented")[0]
                and is_strong(d)
                and not isinstance(find_in_round_order(d), OrderSearchFailure)
            )
        if kind == "round":
            return is_strong(d) and not isinstance(find_round_order(d), OrderSearchFailure)
        if kind == "hero":
            return is_hero(d)[0]
        if kind == "locally-tournament":
            return (
                check_class(d, "oriented")[0]
                and check_class(d, "locally-in-tournament")[0]
                and check_class(reverse(d), "locally-in-tournament")[0]
            )
        if kind == "locally-out-transitive":
            return check_class(d, "oriented")[0] and is_strong(d) and check_class(d, kind)[0]
        return check_class(d, kind)[0]
    except ValueError:
        return False


# --- plain random families --------------------------------------------------


def _random_oriented(n, rng):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            s = rng.randrange(3)
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
    return Digraph(n, arcs)


def _random_acyclic(n, rng):
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                arcs.append((perm[i], perm[j]))
    return Digraph(n, arcs)


def _random_semicomplete(n, rng):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            s = rng.randrange(3)
            if s != 1:
                arcs.append((u, v))
            if s != 0:
                arcs.append((v, u))
    return Digraph(n, arcs)


def _random_tournament(n, rng):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def _strong_tournament(n, rng):
    """Random tournament forced strong by a Hamiltonian cycle (n != 2)."""
    if n == 1:
        return Digraph(1)
    if n == 2:
        raise _Unsatisfiable("no strong tournament on 2 vertices")
    arcs = {(i, (i + 1) % n) for i in range(n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in arcs or (v, u) in arcs:
                continue
            arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def _strong_semicomplete(n, rng):
    """Random semicomplete digraph forced strong by a Hamiltonian cycle."""
    if n == 1:
        return Digraph(1)
    arcs = {(i, (i + 1) % n) for i in range(n)}
    for u in range(n):
        for v in range(u + 1, n):
            s = rng.randrange(3)
            if s != 1:
                arcs.add((u, v))
            if s != 0:
                arcs.add((v, u))
    return Digraph(n, arcs)


def _relabel(d, rng):
    perm = list(range(d.n))
    rng.shuffle(perm)
    return Digraph(d.n, ((perm[u], perm[v]) for u, v in d.arcs))


# --- interval-based strong families ------------------------------------------


def _in_round(n, rng, floor):
    """Strong in-round oriented graph: random cyclic order, each vertex an
    in-interval of random length ending just before it.  Digons are ruled
    out by keeping the two largest interval lengths below n; a girth floor
    k caps lengths at (n-1)//k so every cycle needs more than k arcs to
    wind around."""
    if n == 0:
        raise _Unsatisfiable("strong instances need at least one vertex")
    if n == 1:
        return Digraph(1)
    if n == 2:
        raise _Unsatisfiable("no strong oriented graph on 2 vertices")
    cap = n - 2
    if floor is not None:
        if n <= floor:
            raise _Unsatisfiable(f"strong instances on {n} vertices have girth at most {n} <= {floor}")
        cap = min(cap, max(1, (n - 1) // floor))
    seq = list(range(n))
    rng.shuffle(seq)
    lengths = [rng.randint(1, cap) for _ in range(n)]
    while True:
        ranked = sorted(range(n), key=lambda i: -lengths[i])
        a, b = ranked[0], ranked[1]
        if lengths[a] + lengths[b] <= n - 1:
            break
        lengths[b] = max(1, n - 1 - lengths[a])
        if lengths[a] + lengths[b] > n - 1:
            lengths[a] = n - 2
    arcs = set()
    for p in range(n):
        for s in range(1, lengths[p] + 1):
            arcs.add((seq[(p - s) % n], seq[p]))
    return Digraph(n, arcs)


def _round(n, rng, floor):
    """Strong round oriented graph: out-interval lengths smoothed so that a
    length can drop by at most one per forward step, which makes every
    in-neighbourhood an interval as well."""
    if n == 0:
        raise _Unsatisfiable("strong instances need at least one vertex")
    if n == 1:
        return Digraph(1)
    if n == 2:
        raise _Unsatisfiable("no strong oriented graph on 2 vertices")
    cap = max(1, (n - 1) // 2)
    if floor is not None:
        if n <= floor:
            raise _Unsatisfiable(f"strong instances on {n} vertices have girth at most {n} <= {floor}")
        cap = min(cap, max(1, (n - 1) // floor))
    seq = list(range(n))
    rng.shuffle(seq)
    lengths = [rng.randint(1, cap) for _ in range(n)]
    changed = True
    while changed:
        changed = False
        for p in range(n - 1, -1, -1):
            limit = lengths[(p + 1) % n] + 1
            if lengths[p] > limit:
                lengths[p] = limit
                changed = True
    arcs = set()
    for p in range(n):
        for s in range(1, lengths[p] + 1):
            arcs.add((seq[p], seq[(p + s) % n]))
    return Digraph(n, arcs)


# --- locally out-transitive (strong) ------------------------------------------


def _lot_strong(n, rng, floor):
    """Strong locally out-transitive oriented graph: a strong in-round
    quotient with each vertex substituted by a recursively generated
    instance; every quotient arc is routed from the whole source part onto
    a transitive-tournament subset of the target part."""
    small_min = max(3, floor + 1) if floor is not None else 3
    if n == 0:
        raise _Unsatisfiable("strong instances need at least one vertex")
    if n == 1:
        return Digraph(1)
    if n < small_min:
        raise _Unsatisfiable(f"no strong instance with girth above {floor} on {n} vertices")
    if n == small_min or rng.random() < 0.35:
        return _in_round(n, rng, floor)
    q = rng.randint(small_min, n)
    sizes = _part_sizes(n, q, rng, small_min)
    if sizes is None:
        return _in_round(n, rng, floor)
    quotient = _in_round(q, rng, floor)
    parts = [_lot_strong(m, rng, floor) for m in sizes]
    offsets = []
    base = 0
    for m in sizes:
        offsets.append(base)
        base += m
    arcs = set()
    for i, part in enumerate(parts):
        arcs.update((offsets[i] + u, offsets[i] + v) for u, v in part.arcs)
    for qi, qj in quotient.arcs:
        target = _transitive_subset(parts[qj], rng)
        arcs.update(
            (offsets[qi] + u, offsets[qj] + t) for u in range(sizes[qi]) for t in target
        )
    return _relabel(Digraph(n, arcs), rng)


def _part_sizes(n, q, rng, small_min):
    """q part sizes summing to n, each either 1 or at least small_min."""
    sizes = [1] * q
    extra = n - q
    for _ in range(200):
        if extra == 0:
            return sizes
        i = rng.randrange(q)
        if sizes[i] == 1:
            need = small_min - 1
            if extra >= need:
                sizes[i] = small_min
                extra -= need
        else:
            add = rng.randint(1, extra)
            sizes[i] += add
            extra -= add
    grown = [i for i in range(q) if sizes[i] > 1]
    if extra and not grown:
        return None
    if extra:
        sizes[rng.choice(grown)] += extra
    return sizes


def _transitive_subset(pd, rng):
    """Non-empty subset of pd's vertices inducing a transitive tournament."""
    chosen = [rng.randrange(pd.n)]
    while rng.random() < 0.5:
        cands = []
        for u in range(pd.n):
            if u in chosen:
                continue
            if all(pd.has_arc(u, x) != pd.has_arc(x, u) for x in chosen):
                sub, _, _ = induced_subdigraph(pd, chosen + [u])
                if check_class(sub, "transitive-tournament")[0]:
                    cands.append(u)
        if not cands:
            break
        chosen.append(rng.choice(cands))
    return frozenset(chosen)


# --- locally in-tournament -----------------------------------------------------


def _locally_in_tournament(n, rng, floor):
    if n == 0:
        return Digraph(0)
    modes = ["arborescence"]
    if n == 1 or n >= (max(3, floor + 1) if floor is not None else 3):
        modes.append("reversed-out-transitive")
    if floor is None:
        modes.append("tournament")
    if n >= 2:
        modes.append("union")
    mode = rng.choice(modes)
    if mode == "reversed-out-transitive":
        return reverse(_lot_strong(n, rng, floor))
    if mode == "tournament":
        return _random_tournament(n, rng)
    if mode == "arborescence":
        return _arborescence(n, rng)
    a = rng.randint(1, n - 1)
    left = _locally_in_tournament(a, rng, floor)
    right = _locally_in_tournament(n - a, rng, floor)
    arcs = set(left.arcs)
    arcs.update((a + u, a + v) for u, v in right.arcs)
    return Digraph(n, arcs)


def _arborescence(n, rng):
    arcs = [(rng.randrange(i), i) for i in range(1, n)]
    return _relabel(Digraph(n, arcs), rng)


# --- locally semicomplete families ---------------------------------------------


def _locally_out_semicomplete(n, rng):
    mode = rng.choice(["semicomplete", "out-transitive", "in-round"])
    if mode == "out-transitive" and (n == 1 or n >= 3):
        return _lot_strong(n, rng, None)
    if mode == "in-round" and (n == 1 or n >= 3):
        return _in_round(n, rng, None)
    return _random_semicomplete(n, rng)


def _locally_semicomplete(n, rng):
    if n == 0:
        return Digraph(0)
    modes = ["universal", "blowup"]
    if n >= 4:
        modes.append("mixed")
    mode = rng.choice(modes)
    if mode == "universal":
        d = _random_semicomplete(n, rng)
        arcs = set(d.arcs)
        arcs.update((0, v) for v in range(1, n))
        arcs.update((v, 0) for v in range(1, n))
        return Digraph(n, arcs)
    if mode == "blowup":
        return _blowup(n, rng, _strong_semicomplete)
    return _mixed_template(n, rng)


def _locally_tournament(n, rng):
    if n == 0:
        return Digraph(0)
    if rng.random() < 0.3:
        return _random_tournament(n, rng)
    return _blowup(n, rng, _tournament_part)


def _tournament_part(m, rng):
    return _random_tournament(m, rng)


def _blowup(n, rng, part_builder):
    """Substitute generated parts into a round oriented quotient, routing
    every quotient arc as all cross arcs."""
    q = rng.randint(1, n)
    sizes = _any_sizes(n, q, rng)
    quotient = _round_quotient(q, rng)
    parts = [part_builder(m, rng) for m in sizes]
    offsets = []
    base = 0
    for m in sizes:
        offsets.append(base)
        base += m
    arcs = set()
    for i, part in enumerate(parts):
        arcs.update((offsets[i] + u, offsets[i] + v) for u, v in part.arcs)
    for qi, qj in quotient.arcs:
        arcs.update(
            (offsets[qi] + u, offsets[qj] + v)
            for u in range(sizes[qi])
            for v in range(sizes[qj])
        )
    return _relabel(Digraph(n, arcs), rng)


def _any_sizes(n, q, rng):
    sizes = [1] * q
    for _ in range(n - q):
        sizes[rng.randrange(q)] += 1
    return sizes


def _round_quotient(q, rng):
    """A connected round oriented graph on q vertices (strong or transitive)."""
    if q == 1:
        return Digraph(1)
    if q == 2 or rng.random() < 0.4:
        return transitive_tournament(q)
    return _round(q, rng, None)


def _mixed_template(n, rng):
    """Locally semicomplete digraph built around a strong semicomplete core F
    with senders E, receivers G and two-way contacts H.

    E -> F, F -> G, G -> H and H -> E are complete one-way; E and G are
    joined by digons; each vertex of H splits F into a non-trivial sending
    and receiving side.  n >= 4 required (F needs two vertices, H one, and
    one of E, G one)."""
    if n < 4:
        raise _Unsatisfiable("mixed template needs at least 4 vertices")
    f = rng.randint(2, n - 2)
    h = rng.randint(1, n - f - 1)
    rest = n - f - h
    e = rng.randint(0, rest)
    g = rest - e

    ids = list(range(n))
    f_ids = ids[:f]
    h_ids = ids[f : f + h]
    e_ids = ids[f + h : f + h + e]
    g_ids = ids[f + h + e :]

    core = _strong_semicomplete(f, rng)
    arcs = {(f_ids[u], f_ids[v]) for u, v in core.arcs}
    for block, members in ((h_ids, h_ids), (e_ids, e_ids), (g_ids, g_ids)):
        if len(members) > 1:
            inner = _random_semicomplete(len(members), rng)
            arcs.update((members[u], members[v]) for u, v in inner.arcs)
    arcs.update((a, b) for a in e_ids for b in f_ids)
    arcs.update((a, b) for a in f_ids for b in g_ids)
    arcs.update((a, b) for a in g_ids for b in h_ids)
    arcs.update((a, b) for a in h_ids for b in e_ids)
    for a in e_ids:
        for b in g_ids:
            arcs.add((a, b))
            arcs.add((b, a))
    for b in h_ids:
        cut = rng.randint(1, f - 1)
        senders = rng.sample(f_ids, cut)
        for a in f_ids:
            if a in senders:
                arcs.add((a, b))
            else:
                arcs.add((b, a))
    return _relabel(Digraph(n, arcs), rng)


def _hero(n, rng):
    """A random derivation in the hero grammar, randomly relabelled."""
    if n < 1:
        raise _Unsatisfiable("heroes have at least one vertex")
    return _relabel(_hero_rec(n, rng), rng)


def _hero_rec(n, rng):
    if n == 1:
        return Digraph(1)
    ops = ["join"]
    if n >= 3:
        ops.append("triangle")
    if rng.choice(ops) == "join":
        a = rng.randint(1, n - 1)
        return _join(_hero_rec(a, rng), _hero_rec(n - a, rng))
    h = rng.randint(1, n - 2)
    k = n - 1 - h
    hero = _hero_rec(h, rng)
    tt = transitive_tournament(k)
    if rng.random() < 0.5:
        return _c3(hero, tt)
    return _c3(tt, hero)


def _join(a, b):
    arcs = set(a.arcs)
    arcs.update((a.n + u, a.n + v) for u, v in b.arcs)
    arcs.update((u, a.n + v) for u in range(a.n) for v in range(b.n))
    return Digraph(a.n + b.n, arcs)


def _c3(p1, p2):
    """C3 composition of p1, p2 and a single apex vertex."""
    n1, n2 = p1.n, p2.n
    apex = n1 + n2
    arcs = set(p1.arcs)
    arcs.update((n1 + u, n1 + v) for u, v in p2.arcs)
    arcs.update((u, n1 + v) for u in range(n1) for v in range(n2))
    arcs.update((n1 + u, apex) for u in range(n2))
    arcs.update((apex, u) for u in range(n1))
    return Digraph(apex + 1, arcs)
