"""Digraph-class predicates with witness extraction, and the hero recognizer.

A witness pinpoints the vertices that violate a class condition.  For a
local class the anchor vertex whose neighbourhood is at fault comes first
in the witness tuple.  Witnesses are chosen deterministically: anchors are
scanned in increasing id and violating pairs/triples in lexicographic
order, so the smallest violating tuple under that scan is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from dgtk.digraph import (
    Digraph,
    induced_subdigraph,
    shortest_cycle,
    strong_components,
    topological_order,
)
from dgtk.errors import PreconditionError

CLASSES = (
    "oriented",
    "acyclic",
    "semicomplete",
    "tournament",
    "transitive-tournament",
    "locally-out-semicomplete",
    "locally-in-semicomplete",
    "locally-semicomplete",
    "locally-out-transitive",
    "locally-in-tournament",
    "out-tournament-in-acyclic",
)

WITNESS_KINDS = (
    "digon",
    "loopless-violation",
    "missing-arc-in-neighbourhood",
    "cycle-in-neighbourhood",
    "non-transitive-triple",
)


@dataclass(frozen=True)
class Witness:
    """Vertices realizing a class violation.

    kinds:
      digon                        -- (u, v) or (anchor, u, v): opposite arcs
      missing-arc-in-neighbourhood -- (u, v) or (anchor, u, v): no arc at all
      non-transitive-triple        -- (a, b, c) or (anchor, a, b, c): the
                                      directed triangle a -> b -> c -> a
      cycle-in-neighbourhood       -- the vertices of a directed cycle, with
                                      the anchor prepended for local checks
      loopless-violation           -- reserved; Digraph cannot hold loops
    """

    kind: str
    vertices: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.kind} {self.vertices}"


def _pair_violation(d, members, anchor, forbid_digon, require_arc):
    """Lexicographically first bad pair among the sorted members."""
    prefix = () if anchor is None else (anchor,)
    ordered = sorted(members)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1 :]:
            uv, vu = d.has_arc(u, v), d.has_arc(v, u)
            if forbid_digon and uv and vu:
                return Witness("digon", prefix + (u, v))
            if require_arc and not uv and not vu:
                return Witness("missing-arc-in-neighbourhood", prefix + (u, v))
    return None


def _triangle_violation(d, members, anchor):
    """First directed triangle within members (assumed to induce a tournament)."""
    prefix = () if anchor is None else (anchor,)
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for j in range(i + 1, len(ordered)):
            for k in range(j + 1, len(ordered)):
                b, c = ordered[j], ordered[k]
                if d.has_arc(a, b) and d.has_arc(b, c) and d.has_arc(c, a):
                    return Witness("non-transitive-triple", prefix + (a, b, c))
                if d.has_arc(a, c) and d.has_arc(c, b) and d.has_arc(b, a):
                    return Witness("non-transitive-triple", prefix + (a, c, b))
    return None


def _cycle_violation(d, members, anchor):
    """Shortest directed cycle within members, as a witness."""
    sub, _, to_orig = induced_subdigraph(d, members)
    cyc = shortest_cycle(sub)
    if cyc is None:
        return None
    prefix = () if anchor is None else (anchor,)
    return Witness("cycle-in-neighbourhood", prefix + tuple(to_orig[v] for v in cyc))


def _tournament_violation(d, members, anchor):
    return _pair_violation(d, members, anchor, forbid_digon=True, require_arc=True)


def check_class(d: Digraph, cls: str) -> tuple[bool, Witness | None]:
    """Decide membership of d in the named class; witness on failure.

    Digraphs on at most one vertex belong to every class (all conditions
    are vacuous there).
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown digraph class {cls!r}")
    if d.n <= 1:
        return True, None
    w = _class_violation(d, cls)
    return (w is None), w


def _class_violation(d, cls):
    everyone = range(d.n)
    if cls == "oriented":
        return _pair_violation(d, everyone, None, True, False)
    if cls == "acyclic":
        return _cycle_violation(d, everyone, None)
    if cls == "semicomplete":
        return _pair_violation(d, everyone, None, False, True)
    if cls == "tournament":
        return _tournament_violation(d, everyone, None)
    if cls == "transitive-tournament":
        w = _tournament_violation(d, everyone, None)
        return w or _triangle_violation(d, everyone, None)
    if cls == "locally-out-semicomplete":
        return _local(d, lambda x: _pair_violation(d, d.out_neighbours(x), x, False, True))
    if cls == "locally-in-semicomplete":
        return _local(d, lambda x: _pair_violation(d, d.in_neighbours(x), x, False, True))
    if cls == "locally-semicomplete":
        return _local(
            d,
            lambda x: _pair_violation(d, d.out_neighbours(x), x, False, True)
            or _pair_violation(d, d.in_neighbours(x), x, False, True),
        )
    if cls == "locally-out-transitive":
        return _local(
            d,
            lambda x: _tournament_violation(d, d.out_neighbours(x), x)
            or _triangle_violation(d, d.out_neighbours(x), x),
        )
    if cls == "locally-in-tournament":
        return _local(d, lambda x: _tournament_violation(d, d.in_neighbours(x), x))
    if cls == "out-tournament-in-acyclic":
        return _local(
            d,
            lambda x: _tournament_violation(d, d.out_neighbours(x), x)
            or _cycle_violation(d, d.in_neighbours(x), x),
        )
    raise AssertionError(cls)


def _local(d, check_one):
    for x in range(d.n):
        w = check_one(x)
        if w is not None:
            return w
    return None


def find_forbidden_witness(d: Digraph, cls: str) -> Witness | None:
    """The witness check_class would report, or None when d is in the class."""
    return check_class(d, cls)[1]


# --- hero recognition ---------------------------------------------------
#
# Heroes are the tournaments generated by: the single vertex; H1 => H2
# (all arcs from one hero to another); and, for a hero H and k >= 1, the
# cyclic compositions C3(H, TT_k, K1) and C3(TT_k, H, K1).


@dataclass(frozen=True)
class SingleVertex:
    vertex: int

    def describe(self) -> str:
        return f"K1({self.vertex})"


@dataclass(frozen=True)
class DominationChain:
    """Blocks joined left to right by all-forward arcs."""

    blocks: tuple["HeroDerivation", ...]

    def describe(self) -> str:
        return " => ".join(b.describe() for b in self.blocks)


@dataclass(frozen=True)
class TriangleComposition:
    """One C3 composition step with the apex as the K1 part.

    pattern "hero-tt": C3(hero_part, transitive_part, apex)
    pattern "tt-hero": C3(transitive_part, hero_part, apex)
    """

    pattern: str
    apex: int
    transitive_part: tuple[int, ...]
    hero_part: "HeroDerivation"

    def describe(self) -> str:
        tt = "TT(" + ",".join(str(v) for v in self.transitive_part) + ")"
        hero = self.hero_part.describe()
        if self.pattern == "hero-tt":
            return f"C3({hero}, {tt}, K1({self.apex}))"
        return f"C3({tt}, {hero}, K1({self.apex}))"


HeroDerivation = Union[SingleVertex, DominationChain, TriangleComposition]


def is_hero(t: Digraph) -> tuple[bool, HeroDerivation | None]:
    """Decide whether the tournament t is a hero; derivation tree on success.

    A non-strong tournament splits along its strong components, which are
    totally ordered with all arcs forward; it is a hero exactly when every
    component is.  For a strong tournament the apex vertex v of a C3
    composition forces the other two parts to be v's out-set and in-set,
    so only n candidate splits need checking.  The empty tournament is not
    generated and is rejected.
    """
    ok, w = check_class(t, "tournament")
    if not ok:
        raise PreconditionError("input is not a tournament", witness=w)
    if t.n == 0:
        return False, None
    memo: dict[frozenset[int], HeroDerivation | None] = {}
    deriv = _hero_rec(t, tuple(range(t.n)), memo)
    return (deriv is not None), deriv


def _hero_rec(sub, ids, memo):
    key = frozenset(ids)
    if key in memo:
        return memo[key]
    result = _hero_search(sub, ids, memo)
    memo[key] = result
    return result


def _hero_search(sub, ids, memo):
    if sub.n == 1:
        return SingleVertex(ids[0])
    parts, _, topo = strong_components(sub)
    if len(parts) > 1:
        blocks = []
        for pid in topo:
            block, _, back = induced_subdigraph(sub, parts[pid])
            deriv = _hero_rec(block, tuple(ids[i] for i in back), memo)
            if deriv is None:
                return None
            blocks.append(deriv)
        return DominationChain(tuple(blocks))
    for v in range(sub.n):
        plus = sub.out_neighbours(v)
        minus = sub.in_neighbours(v)
        if any(sub.out_neighbours(m) & plus for m in minus):
            continue  # some arc runs against the required plus -> minus direction
        for pattern, tt_side, hero_side in (
            ("hero-tt", minus, plus),
            ("tt-hero", plus, minus),
        ):
            if not _induces_transitive_tournament(sub, tt_side):
                continue
            hero_sub, _, back = induced_subdigraph(sub, hero_side)
            deriv = _hero_rec(hero_sub, tuple(ids[i] for i in back), memo)
            if deriv is None:
                continue
            tt_sub, _, tt_back = induced_subdigraph(sub, tt_side)
            tt_order = topological_order(tt_sub)
            assert tt_order is not None
            return TriangleComposition(
                pattern,
                ids[v],
                tuple(ids[tt_back[i]] for i in tt_order),
                deriv,
            )
    return None


def _induces_transitive_tournament(d, members):
    if len(members) <= 1:
        return bool(members)  # k >= 1 is required of the transitive part
    return (
        _tournament_violation(d, members, None) is None
        and _triangle_violation(d, members, None) is None
    )
