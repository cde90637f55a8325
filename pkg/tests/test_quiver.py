"""Tests for quivers with quadratic monomial relations."""

import numpy as np
import pytest

from tubecat.quiver import (
    Arrow,
    DivergentPathsError,
    Presentation,
    Quiver,
    SizeLimitError,
    connecting_vertices,
    count_paths,
    find_isomorphism,
    gorenstein_bound,
    is_cluster_tilted_A,
    is_gentle,
    is_special_biserial,
    oriented_triangles,
    presentation,
    quivers_isomorphic,
    to_dot,
    total_dimension,
)

DUAL_NUMBERS = presentation([1], [("w", 1, 1, "loop")], [("w", "w")])
RANK3_ALGEBRA = presentation(
    [1, 2], [("w", 1, 1, "loop"), ("a", 1, 2, "T")], [("w", "w")]
)
CYCLE3 = Quiver((1, 2, 3), (Arrow("a", 1, 2), Arrow("b", 2, 3), Arrow("c", 3, 1)))


class TestConstruction:
    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError):
            Quiver((1, 2), (Arrow("a", 1, 2), Arrow("a", 2, 1)))

    def test_dangling_arrow_rejected(self):
        with pytest.raises(ValueError):
            Quiver((1,), (Arrow("a", 1, 2),))

    def test_noncomposable_relation_rejected(self):
        with pytest.raises(ValueError):
            presentation([1, 2, 3], [("a", 1, 2), ("b", 1, 3)], [("b", "a")])

    def test_json_roundtrip(self):
        p = RANK3_ALGEBRA
        assert Presentation.from_json(p.to_json()) == p


class TestCountPaths:
    def test_dual_numbers(self):
        assert count_paths(DUAL_NUMBERS) == {(1, 1): 2}

    def test_rank3_algebra(self):
        paths = count_paths(RANK3_ALGEBRA)
        assert paths == {(1, 1): 2, (1, 2): 2, (2, 1): 0, (2, 2): 1}
        assert total_dimension(RANK3_ALGEBRA) == 5

    def test_no_arrows_gives_identity(self):
        paths = count_paths(presentation([1, 2, 3], []))
        for u in (1, 2, 3):
            for v in (1, 2, 3):
                assert paths[(u, v)] == (1 if u == v else 0)

    def test_divergence_detected(self):
        with pytest.raises(DivergentPathsError):
            count_paths(presentation([1], [("w", 1, 1)]))
        with pytest.raises(DivergentPathsError):
            count_paths(
                presentation([1, 2], [("a", 1, 2), ("b", 2, 1)])
            )

    def test_against_matrix_powers(self):
        """On a relation-free acyclic quiver the path count is the geometric
        series of the adjacency matrix."""
        p = presentation(
            [1, 2, 3, 4],
            [("a", 1, 2), ("b", 2, 3), ("c", 2, 4), ("d", 3, 4), ("e", 1, 3)],
        )
        verts = p.quiver.vertices
        adj = np.zeros((4, 4), dtype=int)
        for arrow in p.quiver.arrows:
            adj[verts.index(arrow.src), verts.index(arrow.tgt)] += 1
        series = np.eye(4, dtype=int)
        power = np.eye(4, dtype=int)
        for _ in range(4):
            power = power @ adj
            series += power
        paths = count_paths(p)
        for i, u in enumerate(verts):
            for j, v in enumerate(verts):
                assert paths[(u, v)] == series[i, j]


class TestSpecialBiserial:
    def test_family_examples(self):
        assert is_special_biserial(DUAL_NUMBERS)
        assert is_special_biserial(RANK3_ALGEBRA)

    def test_three_parallel_arrows(self):
        p = presentation([1, 2], [("a", 1, 2), ("b", 1, 2), ("c", 1, 2)])
        result = is_special_biserial(p)
        assert not result
        assert "vertex 1" in result.witness

    def test_two_loops_no_relations(self):
        result = is_special_biserial(presentation([1], [("x", 1, 1), ("y", 1, 1)]))
        assert not result
        assert "without relation" in result.witness


class TestGentle:
    def test_family_and_path_algebra(self):
        assert is_gentle(RANK3_ALGEBRA)
        assert is_gentle(presentation([1, 2, 3], [("a", 1, 2), ("b", 2, 3)]))

    def test_shared_relation_target_fails(self):
        p = presentation(
            [1, 2, 3],
            [("u", 1, 2), ("v", 1, 2), ("w2", 2, 3)],
            [("w2", "u"), ("w2", "v")],
        )
        assert is_special_biserial(p)
        result = is_gentle(p)
        assert not result
        assert "w2" in result.witness

    def test_gentle_implies_special_biserial(self):
        from tubecat.endo import cached_endomorphism_algebra
        from tubecat.rigid import maximal_rigid_objects

        for n in (2, 3, 4, 5):
            for t in maximal_rigid_objects(n):
                lam = cached_endomorphism_algebra(t)
                assert is_gentle(lam)
                assert is_special_biserial(lam)


class TestGorenstein:
    def test_dual_numbers_dimension_zero(self):
        report = gorenstein_bound(DUAL_NUMBERS)
        assert report.n_g == 0
        assert report.dimension == 0

    def test_rank3_algebra(self):
        report = gorenstein_bound(RANK3_ALGEBRA)
        assert report.n_g == 1
        assert report.dimension == 1
        assert "a" in report.gentle_arrows

    def test_linear_quiver(self):
        report = gorenstein_bound(presentation([1, 2], [("a", 1, 2)]))
        assert report.n_g == 1
        assert report.critical_path == ("a",)

    def test_bound_by_arrow_count(self):
        p = presentation(
            [1, 2, 3, 4],
            [("a", 1, 2), ("b", 2, 3), ("c", 3, 4)],
            [("b", "a"), ("c", "b")],
        )
        report = gorenstein_bound(p)
        assert report.n_g == 3
        assert report.n_g <= len(p.quiver.arrows)

    def test_unresolved_interval(self):
        # one oriented 3-cycle with all compositions zero: no gentle arrows
        p = presentation(
            [1, 2, 3],
            [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)],
            [("b", "a"), ("c", "b"), ("a", "c")],
        )
        report = gorenstein_bound(p)
        assert report.n_g == 0
        assert report.dimension is None
        assert report.upper_bound == 1
        sharpened = gorenstein_bound(p, not_self_injective=True)
        assert sharpened.dimension == 1

    def test_rejects_non_gentle(self):
        with pytest.raises(ValueError):
            gorenstein_bound(presentation([1], [("x", 1, 1), ("y", 1, 1)]))


class TestClusterTiltedRecognition:
    def test_examples(self):
        assert is_cluster_tilted_A(CYCLE3)
        linear = Quiver((1, 2, 3, 4), tuple(Arrow(f"a{i}", i, i + 1) for i in (1, 2, 3)))
        assert is_cluster_tilted_A(linear)

    def test_oriented_four_cycle_rejected(self):
        q = Quiver(
            (1, 2, 3, 4),
            (Arrow("a", 1, 2), Arrow("b", 2, 3), Arrow("c", 3, 4), Arrow("d", 4, 1)),
        )
        result = is_cluster_tilted_A(q)
        assert not result
        assert "length 4" in result.witness

    def test_unoriented_triangle_rejected(self):
        q = Quiver((1, 2, 3), (Arrow("a", 1, 2), Arrow("b", 2, 3), Arrow("c", 1, 3)))
        assert not is_cluster_tilted_A(q)

    def test_loops_and_double_arrows_rejected(self):
        assert not is_cluster_tilted_A(Quiver((1,), (Arrow("w", 1, 1),)))
        assert not is_cluster_tilted_A(
            Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 2, 1)))
        )

    def test_disconnected_rejected(self):
        q = Quiver((1, 2, 3, 4), (Arrow("a", 1, 2), Arrow("b", 3, 4)))
        assert not is_cluster_tilted_A(q)

    def test_triangle_listing(self):
        assert len(oriented_triangles(CYCLE3)) == 1

    def test_two_triangles_sharing_a_vertex(self):
        q = Quiver(
            (1, 2, 3, 4, 5),
            (
                Arrow("a", 1, 2),
                Arrow("b", 2, 3),
                Arrow("c", 3, 1),
                Arrow("d", 3, 4),
                Arrow("e", 4, 5),
                Arrow("f", 5, 3),
            ),
        )
        assert is_cluster_tilted_A(q)
        assert sorted(connecting_vertices(q)) == [1, 2, 4, 5]


class TestConnectingVertices:
    def test_linear_ends(self):
        q = Quiver((1, 2, 3), (Arrow("a", 1, 2), Arrow("b", 2, 3)))
        assert connecting_vertices(q) == frozenset({1, 3})

    def test_cycle_all_three(self):
        assert connecting_vertices(CYCLE3) == frozenset({1, 2, 3})

    def test_attached_cycle(self):
        q = Quiver(
            (1, 2, 3, 4),
            (Arrow("a", 1, 2), Arrow("b", 2, 3), Arrow("c", 3, 4), Arrow("d", 4, 2)),
        )
        assert connecting_vertices(q) == frozenset({1, 3, 4})

    def test_single_vertex(self):
        assert connecting_vertices(Quiver((1,), ())) == frozenset({1})

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            connecting_vertices(Quiver((1,), (Arrow("w", 1, 1),)))


class TestIsomorphism:
    def test_identity_and_negative(self):
        assert quivers_isomorphic(CYCLE3, CYCLE3)
        linear = Quiver((1, 2, 3), (Arrow("x", 1, 2), Arrow("y", 2, 3)))
        assert not quivers_isomorphic(CYCLE3, linear)

    def test_relabelled(self):
        other = Quiver((7, 8, 9), (Arrow("p", 9, 7), Arrow("q", 7, 8), Arrow("r", 8, 9)))
        iso = find_isomorphism(CYCLE3, other)
        assert iso is not None
        assert quivers_isomorphic(CYCLE3, other, pin=(1, 9))
        assert quivers_isomorphic(CYCLE3, other, pin=(1, 7))

    def test_pin_to_wrong_orbit(self):
        a3 = Quiver((1, 2, 3), (Arrow("x", 1, 2), Arrow("y", 2, 3)))
        b3 = Quiver((4, 5, 6), (Arrow("u", 4, 5), Arrow("v", 5, 6)))
        assert quivers_isomorphic(a3, b3, pin=(1, 4))
        assert not quivers_isomorphic(a3, b3, pin=(1, 5))

    def test_relations_respected(self):
        p1 = presentation([1, 2, 3], [("a", 1, 2), ("b", 2, 3)], [("b", "a")])
        p2 = presentation([4, 5, 6], [("u", 4, 5), ("v", 5, 6)], [("v", "u")])
        bare = presentation([4, 5, 6], [("u", 4, 5), ("v", 5, 6)])
        assert quivers_isomorphic(p1, p2)
        assert not quivers_isomorphic(p1, bare)

    def test_multiplicity_aware(self):
        double = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 1, 2)))
        split = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 2, 1)))
        assert not quivers_isomorphic(double, split)
        assert quivers_isomorphic(double, double)

    def test_size_limit(self):
        big = Quiver(tuple(range(13)), ())
        with pytest.raises(SizeLimitError):
            quivers_isomorphic(big, big)


class TestEmission:
    def test_dot_styles(self):
        p = presentation(
            [1, 2, 3],
            [("a", 1, 2, "T"), ("b", 2, 3, "D"), ("w", 1, 1, "loop")],
            [("b", "a"), ("w", "w")],
        )
        dot = to_dot(p, "lam")
        assert "digraph lam" in dot
        assert '1 -> 2 [label="a"];' in dot
        assert '2 -> 3 [label="b", style=bold];' in dot
        assert "style=dashed" in dot

    def test_json_relations_sorted(self):
        p = RANK3_ALGEBRA
        data = p.to_json()
        assert data["relations"] == [["w", "w"]]
        assert {a["kind"] for a in data["arrows"]} == {"loop", "T"}
