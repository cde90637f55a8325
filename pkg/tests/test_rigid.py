"""Enumeration and wing-structure tests for maximal rigid objects."""

import itertools
from math import comb

import networkx as nx
import pytest

from tubecat.rigid import (
    RigidObject,
    enumerate_maximal_rigid,
    from_summands,
    from_tilting,
    is_maximal_rigid,
    maximal_rigid_objects,
    quasisimple_map,
    subwing_decomposition,
    tau_rigid,
    tilting_intervals,
)
from tubecat.tube import (
    Indec,
    in_wing,
    is_compatible,
    rigid_indecomposables,
    wing_members,
)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


class TestEnumeration:
    def test_rank_two(self):
        objects = enumerate_maximal_rigid(2)
        assert [t.summands for t in objects] == [
            (Indec(2, 1, 1),),
            (Indec(2, 2, 1),),
        ]

    @pytest.mark.parametrize("n", range(2, 7))
    def test_counts_and_route_agreement(self, n):
        structured = enumerate_maximal_rigid(n, "structured")
        brute = enumerate_maximal_rigid(n, "brute")
        assert structured == brute
        assert len(structured) == n * catalan(n - 1)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_against_literal_subset_filter(self, n):
        """Independent route: filter every (n-1)-subset of the rigid
        indecomposables by pairwise compatibility and maximality."""
        rigids = rigid_indecomposables(n)
        found = []
        for subset in itertools.combinations(rigids, n - 1):
            if all(is_compatible(x, y) for x, y in itertools.combinations(subset, 2)):
                if is_maximal_rigid(n, subset):
                    found.append(from_summands(n, subset))
        assert sorted(found) == sorted(enumerate_maximal_rigid(n))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_every_maximal_clique_has_full_size(self, n):
        graph = nx.Graph()
        rigids = rigid_indecomposables(n)
        graph.add_nodes_from(rigids)
        for x, y in itertools.combinations(rigids, 2):
            if is_compatible(x, y):
                graph.add_edge(x, y)
        for clique in nx.find_cliques(graph):
            assert len(clique) == n - 1

    def test_deterministic_order(self):
        objects = enumerate_maximal_rigid(4)
        assert objects == sorted(
            objects, key=lambda t: (t.top.orbit, tuple((s.orbit, s.ql) for s in t.summands))
        )
        assert objects == enumerate_maximal_rigid(4)

    def test_invalid_rank(self):
        with pytest.raises(ValueError):
            enumerate_maximal_rigid(1)
        with pytest.raises(ValueError):
            enumerate_maximal_rigid(3, "magic")


class TestValidation:
    def test_examples(self):
        assert is_maximal_rigid(3, [Indec(3, 1, 2), Indec(3, 1, 1)])
        assert not is_maximal_rigid(3, [Indec(3, 1, 1)])
        assert not is_maximal_rigid(3, [Indec(3, 1, 3), Indec(3, 1, 1)])

    def test_constructor_rejects_bad_input(self):
        with pytest.raises(ValueError):
            from_summands(3, [Indec(3, 1, 1), Indec(3, 2, 1)])  # no top
        with pytest.raises(ValueError):
            from_summands(3, [Indec(3, 1, 2), Indec(3, 3, 1)])  # incompatible
        with pytest.raises(ValueError):
            from_summands(3, [Indec(3, 1, 2), Indec(3, 1, 2)])  # duplicate

    def test_top_is_first_summand(self):
        for t in maximal_rigid_objects(4):
            assert t.top.ql == 3
            assert all(s.ql <= t.top.ql for s in t.summands)
            assert all(in_wing(s, t.top) for s in t.summands)

    def test_json_roundtrip(self):
        t = from_summands(4, [Indec(4, 2, 3), Indec(4, 2, 1), Indec(4, 4, 1)])
        assert RigidObject.from_json(t.to_json()) == t


class TestSubwingTriples:
    def test_rank_three_ladder(self):
        t = from_summands(3, [Indec(3, 1, 2), Indec(3, 1, 1)])
        triples = subwing_decomposition(t)
        assert set(triples) == {Indec(3, 1, 2)}
        triple = triples[Indec(3, 1, 2)]
        assert triple.left == Indec(3, 1, 1)
        assert triple.right is None
        assert triple.degenerate

    def test_rank_four_nondegenerate(self):
        t = from_summands(4, [Indec(4, 1, 3), Indec(4, 1, 1), Indec(4, 3, 1)])
        triple = subwing_decomposition(t)[Indec(4, 1, 3)]
        assert triple.left == Indec(4, 1, 1)
        assert triple.right == Indec(4, 3, 1)
        assert not triple.degenerate

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_ladder_is_all_left_degenerate(self, n):
        t = from_summands(n, [Indec(n, 1, b) for b in range(1, n)])
        for triple in subwing_decomposition(t).values():
            assert triple.right is None
            assert triple.left == Indec(n, 1, triple.top.ql - 1)

    def test_nondegenerate_coordinates(self):
        """Non-degenerate triples follow (a,c) / (a+c+1, b-c-1)."""
        for n in (4, 5, 6):
            for t in maximal_rigid_objects(n):
                for triple in subwing_decomposition(t).values():
                    if triple.degenerate:
                        continue
                    a, b = triple.top.orbit, triple.top.ql
                    c = triple.left.ql
                    assert 1 <= c <= b - 2
                    assert triple.left == Indec(n, a, c)
                    assert triple.right == Indec(n, a + c + 1, b - c - 1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_partition_counts(self, n):
        """Each summand of quasilength q holds exactly q summands in its
        wing; triples split the count as ql(left) + ql(right) + 1."""
        for t in maximal_rigid_objects(n):
            for s in t.summands:
                inside = [u for u in t.summands if in_wing(u, s)]
                assert len(inside) == s.ql
            for triple in subwing_decomposition(t).values():
                left = triple.left.ql if triple.left else 0
                right = triple.right.ql if triple.right else 0
                assert left + right + 1 == triple.top.ql


class TestWingStructure:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_containment_trichotomy(self, n):
        for t in maximal_rigid_objects(n):
            for x, y in itertools.combinations(t.summands, 2):
                x_in_y = in_wing(x, y)
                y_in_x = in_wing(y, x)
                if x_in_y or y_in_x:
                    continue
                wx = set(wing_members(x))
                wy = set(wing_members(y))
                assert not (wx & wy), (x, y)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_compatible_sets_in_wings(self, n):
        """Inside a wing of height h: compatible sets have at most h
        members, and the maximal ones contain the summit."""
        for a in range(1, n + 1):
            for h in range(1, n):
                summit = Indec(n, a, h)
                members = wing_members(summit)
                best = 0
                for size in range(1, len(members) + 1):
                    for subset in itertools.combinations(members, size):
                        if all(
                            is_compatible(x, y)
                            for x, y in itertools.combinations(subset, 2)
                        ) and all(is_compatible(x, x) for x in subset):
                            best = max(best, size)
                            if size == h:
                                assert summit in subset
                assert best == h

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_quasisimple_map_bijection(self, n):
        for t in maximal_rigid_objects(n):
            mapping = quasisimple_map(t)
            assert len(mapping) == n - 1
            assert set(mapping.values()) == set(t.summands)

    def test_quasisimple_map_example(self):
        t = from_summands(3, [Indec(3, 1, 2), Indec(3, 1, 1)])
        mapping = quasisimple_map(t)
        assert mapping[Indec(3, 1, 1)] == Indec(3, 1, 1)
        assert mapping[Indec(3, 2, 1)] == Indec(3, 1, 2)
        t2 = from_summands(2, [Indec(2, 1, 1)])
        assert quasisimple_map(t2) == {Indec(2, 1, 1): Indec(2, 1, 1)}


class TestTiltingEncoding:
    def test_intervals(self):
        t = from_summands(4, [Indec(4, 1, 3), Indec(4, 1, 1), Indec(4, 3, 1)])
        assert tilting_intervals(t) == ((1, 3), (1, 1), (3, 3))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_roundtrip_and_bijection(self, n):
        """Objects correspond to (top orbit, interval set) pairs, with
        Catalan-many interval sets per orbit."""
        seen = {}
        for t in maximal_rigid_objects(n):
            key = (t.top.orbit, frozenset(tilting_intervals(t)))
            assert key not in seen
            seen[key] = t
            assert from_tilting(n, t.top.orbit, tilting_intervals(t)) == t
        per_orbit = {}
        for orbit, intervals in seen:
            per_orbit.setdefault(orbit, set()).add(intervals)
        assert all(len(v) == catalan(n - 1) for v in per_orbit.values())
        interval_families = set(per_orbit[1])
        assert all(set(fam) == interval_families for fam in per_orbit.values())

    def test_from_tilting_validation(self):
        with pytest.raises(ValueError):
            from_tilting(4, 1, [(1, 3), (1, 1), (4, 4)])  # out of range
        with pytest.raises(ValueError):
            from_tilting(4, 1, [(1, 3), (1, 1), (2, 2)])  # incompatible


class TestTauAction:
    def test_orbit_of_objects(self):
        t = from_summands(3, [Indec(3, 1, 2), Indec(3, 1, 1)])
        r = tau_rigid(t, 1)
        assert r.summands == (Indec(3, 3, 2), Indec(3, 3, 1))
        assert tau_rigid(t, 3) == t

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_translate_permutes_objects(self, n):
        objects = set(maximal_rigid_objects(n))
        assert {tau_rigid(t, 1) for t in objects} == objects
