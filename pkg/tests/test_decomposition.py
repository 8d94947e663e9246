import pytest

from dgtk import (
    Digraph,
    FourPartition,
    Partition,
    PreconditionError,
    RoundBlowup,
    UniversalSemicomplete,
    boundary_sets,
    check_class,
    contract,
    decompose_lsc,
    directed_cycle,
    find_weak_hubs,
    generate,
    GeneratorSpec,
    maximal_hubs,
    reverse,
    transitive_tournament,
    verify_order,
)
from helpers import (
    brute_strong_subset,
    exhaustive_maximal_hubs,
    exhaustive_maximal_weak_hubs,
    is_tt_subset,
    verify_lsc_structure,
)

# directed triangle {0,1,2} dominated into vertex 3, with 3 -> 4 -> 0
HUB_EXAMPLE = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (3, 4), (4, 0)])
# four-partition example: triangle {0,1,2}, sender 3, two-way contact 4
MIXED_EXAMPLE = Digraph(5, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (0, 4), (4, 1), (4, 3)])


class TestMaximalHubs:
    def test_c3_trivial_hubs(self):
        hp = maximal_hubs(directed_cycle(3))
        assert hp.parts == Partition([{0}, {1}, {2}])
        assert hp.quotient == directed_cycle(3)

    def test_hub_example(self):
        hp = maximal_hubs(HUB_EXAMPLE)
        assert set(hp.parts) == {frozenset({0, 1, 2}), frozenset({3}), frozenset({4})}
        assert hp.quotient == directed_cycle(3)
        # oracle: exhaustive hub enumeration over all subsets
        assert set(hp.parts) == exhaustive_maximal_hubs(HUB_EXAMPLE)

    def test_in_round_graph_has_trivial_hubs(self):
        for seed in range(8):
            d = generate(GeneratorSpec("in-round", 8, seed))
            hp = maximal_hubs(d)
            assert all(len(p) == 1 for p in hp.parts)
            assert hp.quotient == d
            assert set(hp.parts) == exhaustive_maximal_hubs(d)

    def test_matches_exhaustive_enumeration(self):
        for seed in range(12):
            d = generate(GeneratorSpec("locally-out-transitive", 9, seed))
            assert set(maximal_hubs(d).parts) == exhaustive_maximal_hubs(d)

    def test_invariants_reverify(self):
        hp = maximal_hubs(HUB_EXAMPLE)
        for part in hp.parts:
            assert brute_strong_subset(HUB_EXAMPLE, part)
        assert contract(HUB_EXAMPLE, hp.parts) == hp.quotient
        assert verify_order(hp.quotient, hp.order, "in-round")[0]

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            maximal_hubs(Digraph(2, [(0, 1), (1, 0)]))  # digon
        with pytest.raises(PreconditionError):
            maximal_hubs(transitive_tournament(3))  # not strong
        with pytest.raises(PreconditionError):
            # strong but an out-neighbourhood induces a directed triangle
            d = Digraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1), (1, 0)])
            maximal_hubs(d)

    def test_single_vertex(self):
        hp = maximal_hubs(Digraph(1))
        assert hp.parts == Partition([{0}])


class TestBoundarySets:
    def test_singleton_hubs(self):
        hp = maximal_hubs(directed_cycle(3))
        assert boundary_sets(hp, directed_cycle(3)) == (frozenset({0}), frozenset({1}), frozenset({2}))

    def test_hub_example_boundary(self):
        hp = maximal_hubs(HUB_EXAMPLE)
        ts = boundary_sets(hp, HUB_EXAMPLE)
        by_part = dict(zip(hp.parts, ts))
        assert by_part[frozenset({0, 1, 2})] == frozenset({0})  # only 4 -> 0 enters
        assert by_part[frozenset({3})] == frozenset({3})
        assert by_part[frozenset({4})] == frozenset({4})

    def test_generated_boundaries_nonempty_and_transitive(self):
        for seed in range(10):
            d = generate(GeneratorSpec("locally-out-transitive", 12, seed))
            hp = maximal_hubs(d)
            ts = boundary_sets(hp, d)
            if len(hp.parts) >= 2:
                for t in ts:
                    assert t
                    assert is_tt_subset(d, t)

    def test_mismatched_inputs_rejected(self):
        hp = maximal_hubs(directed_cycle(3))
        with pytest.raises(ValueError):
            boundary_sets(hp, directed_cycle(4))


class TestFindWeakHubs:
    def test_c3_singletons(self):
        hubs = find_weak_hubs(directed_cycle(3))
        assert [sorted(h.members) for h in hubs] == [[0], [1], [2]]
        assert not any(h.mixed for h in hubs)

    def test_mixed_example_contains_triangle_hub(self):
        hubs = find_weak_hubs(MIXED_EXAMPLE)
        members = {h.members for h in hubs}
        assert frozenset({0, 1, 2}) in members
        triangle = next(h for h in hubs if h.members == frozenset({0, 1, 2}))
        assert triangle.mixed
        # oracle: exhaustive subset enumeration confirms inclusion-maximality
        assert members == exhaustive_maximal_weak_hubs(MIXED_EXAMPLE)

    def test_digon_has_no_weak_hubs(self):
        assert find_weak_hubs(Digraph(2, [(0, 1), (1, 0)])) == []

    def test_dominator_direction_recorded(self):
        for h in find_weak_hubs(MIXED_EXAMPLE):
            d = MIXED_EXAMPLE
            dom, direction = h.dominator, h.direction
            if direction == "strictly-in":
                assert h.members <= d.in_neighbours(dom) - d.out_neighbours(dom)
            else:
                assert h.members <= d.out_neighbours(dom) - d.in_neighbours(dom)

    def test_matches_exhaustive_on_generated(self):
        for seed in range(10):
            d = generate(GeneratorSpec("locally-semicomplete", 8, seed))
            got = {h.members for h in find_weak_hubs(d)}
            assert got == exhaustive_maximal_weak_hubs(d)

    def test_matches_exhaustive_up_to_twelve(self):
        for n, seed in ((10, 0), (11, 1), (12, 2), (12, 3), (12, 4)):
            d = generate(GeneratorSpec("locally-semicomplete", n, 500 + seed))
            got = {h.members for h in find_weak_hubs(d)}
            assert got == exhaustive_maximal_weak_hubs(d)


assert_lsc_structure_valid = verify_lsc_structure


class TestDecomposeLsc:
    def test_digon_universal(self):
        assert decompose_lsc(Digraph(2, [(0, 1), (1, 0)])) == UniversalSemicomplete(0)

    def test_single_vertex_universal(self):
        assert decompose_lsc(Digraph(1)) == UniversalSemicomplete(0)

    def test_c3_round_blowup(self):
        structure = decompose_lsc(directed_cycle(3))
        assert isinstance(structure, RoundBlowup)
        assert structure.parts == Partition([{0}, {1}, {2}])
        assert structure.quotient == directed_cycle(3)
        assert_lsc_structure_valid(directed_cycle(3), structure)

    def test_mixed_example_natural_assignment(self):
        structure = decompose_lsc(MIXED_EXAMPLE)
        assert structure == FourPartition(
            e=frozenset({3}), f=frozenset({0, 1, 2}), g=frozenset(), h=frozenset({4})
        )
        assert_lsc_structure_valid(MIXED_EXAMPLE, structure)

    def test_rotation_needed_six_vertices(self):
        # the natural assignment from the mixed hub violates the third-to-first
        # neighbour condition; a rotated assignment is returned instead
        d = Digraph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1),
             (1, 4), (2, 4), (3, 4), (4, 5), (5, 0), (1, 5), (5, 2)],
        )
        structure = decompose_lsc(d)
        assert isinstance(structure, FourPartition)
        assert_lsc_structure_valid(d, structure)

    def test_rotation_needed_five_vertices(self):
        d = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (3, 4), (4, 1), (0, 4)])
        structure = decompose_lsc(d)
        assert isinstance(structure, FourPartition)
        assert_lsc_structure_valid(d, structure)

    def test_tt3_round_blowup(self):
        structure = decompose_lsc(transitive_tournament(3))
        assert isinstance(structure, RoundBlowup)
        assert structure.order is not None
        assert_lsc_structure_valid(transitive_tournament(3), structure)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            decompose_lsc(Digraph(4, [(0, 1), (2, 3)]))  # not connected
        with pytest.raises(PreconditionError):
            decompose_lsc(Digraph(3, [(0, 1), (0, 2)]))  # out-set not semicomplete
        with pytest.raises(ValueError):
            decompose_lsc(Digraph(0))

    def test_generated_instances(self):
        for seed in range(30):
            d = generate(GeneratorSpec("locally-semicomplete", 10, seed))
            structure = decompose_lsc(d)
            assert_lsc_structure_valid(d, structure)
