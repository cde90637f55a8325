"""Endomorphism presentations of maximal rigid objects.

Builds the tilted presentation from the subwing triples, completes relation
paths to 3-cycles, and adjoins the squared-zero loop at the top vertex.
The Cartan check validates the result against cluster-Hom dimensions
computed independently, entry by entry.

Arrow direction follows the opposite-algebra convention throughout: a map
from summand j to summand i yields the arrow i -> j, so paths i -> j pair
with Hom(T_j, T_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from tubecat.quiver import (
    Arrow,
    Presentation,
    Quiver,
    SizeLimitError,
    connecting_vertices,
    count_paths,
    find_isomorphism,
    is_cluster_tilted_A,
    to_dot,
)
from tubecat.rigid import RigidObject, maximal_rigid_objects, subwing_decomposition, tau_rigid
from tubecat.tube import hom_cluster

LOOP_ID = "w"


def _t_arrow(i: int, j: int) -> Arrow:
    return Arrow(f"a{i}_{j}", i, j, "T")


def tilted_algebra(t: RigidObject) -> Presentation:
    """Quiver with relations on the summand vertices, from the triples.

    A non-degenerate triple at vertex i with left child j and right child k
    contributes arrows i -> j and k -> i and the zero relation of their
    composition; a degenerate triple contributes its single arrow.
    """
    n = t.rank
    vertices = tuple(range(1, n))
    arrows: list[Arrow] = []
    relations: set[tuple[str, str]] = set()
    for summand, triple in sorted(
        subwing_decomposition(t).items(), key=lambda kv: t.vertex_of(kv[0])
    ):
        i = t.vertex_of(summand)
        left = t.vertex_of(triple.left) if triple.left is not None else None
        right = t.vertex_of(triple.right) if triple.right is not None else None
        if left is not None:
            arrows.append(_t_arrow(i, left))
        if right is not None:
            arrows.append(_t_arrow(right, i))
        if left is not None and right is not None:
            relations.add((f"a{i}_{left}", f"a{right}_{i}"))
    return Presentation(Quiver(vertices, tuple(arrows)), frozenset(relations))


def cluster_tilted_completion(g: Presentation) -> Presentation:
    """Insert one arrow from the end to the start of every relation path and
    replace the relations by all consecutive pairs around the new 3-cycles."""
    arrows = list(g.quiver.arrows)
    relations: set[tuple[str, str]] = set()
    for second, first in sorted(g.relations):
        start = g.quiver.arrow(first).src
        end = g.quiver.arrow(second).tgt
        new = Arrow(f"b{end}_{start}", end, start, "D")
        arrows.append(new)
        relations.add((second, first))
        relations.add((new.id, second))
        relations.add((first, new.id))
    return Presentation(Quiver(g.quiver.vertices, tuple(arrows)), frozenset(relations))


def endomorphism_algebra(t: RigidObject) -> Presentation:
    """Completion of the tilted presentation plus a squared-zero loop at the
    top vertex. Arrow kinds: "T" from triples, "D" from completion, "loop"."""
    completed = cluster_tilted_completion(tilted_algebra(t))
    top = t.vertex_of(t.top)
    arrows = completed.quiver.arrows + (Arrow(LOOP_ID, top, top, "loop"),)
    relations = completed.relations | {(LOOP_ID, LOOP_ID)}
    return Presentation(Quiver(completed.quiver.vertices, arrows), frozenset(relations))


@lru_cache(maxsize=None)
def cached_endomorphism_algebra(t: RigidObject) -> Presentation:
    return endomorphism_algebra(t)


def loopless_quiver(p: Presentation) -> tuple[Quiver, int]:
    """The quiver with the loop removed, and the loop vertex."""
    loops = [a for a in p.quiver.arrows if a.kind == "loop"]
    if len(loops) != 1:
        raise ValueError("expected exactly one loop arrow")
    arrows = tuple(a for a in p.quiver.arrows if a.kind != "loop")
    return Quiver(p.quiver.vertices, arrows), loops[0].src


# --- Cartan check -----------------------------------------------------------

@dataclass(frozen=True)
class CartanReport:
    ok: bool
    mismatches: tuple[tuple[int, int, int, int], ...]  # (i, j, paths, hom)
    total_paths: int
    total_hom: int


def cartan_check(t: RigidObject, p: Presentation | None = None) -> CartanReport:
    """Path counts i -> j must equal cluster-Hom dimensions Hom(T_j, T_i),
    for every ordered vertex pair; totals must agree as well."""
    if p is None:
        p = cached_endomorphism_algebra(t)
    paths = count_paths(p)
    mismatches = []
    total_paths = 0
    total_hom = 0
    for i in p.quiver.vertices:
        for j in p.quiver.vertices:
            n_paths = paths[(i, j)]
            n_hom = hom_cluster(t.summand(j), t.summand(i)).total
            total_paths += n_paths
            total_hom += n_hom
            if n_paths != n_hom:
                mismatches.append((i, j, n_paths, n_hom))
    return CartanReport(not mismatches, tuple(mismatches), total_paths, total_hom)


# --- realization of a prescribed quiver --------------------------------------

_REALIZE_LIMIT = 8


def realize_quiver(q: Quiver, c: int, limit: int = _REALIZE_LIMIT) -> RigidObject | None:
    """A maximal rigid object whose loopless endomorphism quiver is
    isomorphic to q with the loop vertex landing on c, or None."""
    check = is_cluster_tilted_A(q)
    if not check:
        raise ValueError(f"not a type-A cluster-tilted quiver: {check.witness}")
    if c not in connecting_vertices(q):
        raise ValueError(f"vertex {c} is not connecting")
    if len(q.vertices) > limit:
        raise SizeLimitError(f"realization search limited to {limit} vertices")
    n = len(q.vertices) + 1
    for t in maximal_rigid_objects(n):
        bare, loop_vertex = loopless_quiver(cached_endomorphism_algebra(t))
        if find_isomorphism(bare, q, pin=(loop_vertex, c)) is not None:
            return t
    return None


def realizing_objects(q: Quiver, c: int, limit: int = _REALIZE_LIMIT) -> list[RigidObject]:
    first = realize_quiver(q, c, limit)
    if first is None:
        return []
    n = len(q.vertices) + 1
    out = []
    for t in maximal_rigid_objects(n):
        bare, loop_vertex = loopless_quiver(cached_endomorphism_algebra(t))
        if find_isomorphism(bare, q, pin=(loop_vertex, c)) is not None:
            out.append(t)
    return out


def tau_orbit_count(q: Quiver, c: int, limit: int = _REALIZE_LIMIT) -> int:
    """Number of realizing objects; asserts they form one translate orbit of
    full length n."""
    witnesses = realizing_objects(q, c, limit)
    n = len(q.vertices) + 1
    if len(witnesses) != n:
        raise AssertionError(
            f"expected {n} realizing objects, found {len(witnesses)}"
        )
    orbit = set()
    current = witnesses[0]
    for _ in range(n):
        orbit.add(current)
        current = tau_rigid(current, 1)
    if orbit != set(witnesses):
        raise AssertionError("realizing objects do not form a single orbit")
    return len(witnesses)


# --- emission -----------------------------------------------------------------

def bundle(t: RigidObject) -> dict[str, Presentation]:
    """The tilted, cluster-tilted and endomorphism presentations of t."""
    tilted = tilted_algebra(t)
    return {
        "tilted": tilted,
        "cluster_tilted": cluster_tilted_completion(tilted),
        "endomorphism": endomorphism_algebra(t),
    }


def bundle_json(t: RigidObject) -> dict:
    from tubecat.rigid import tilting_intervals

    out: dict = t.to_json()
    out["tilting_intervals"] = [f"{lo}-{hi}" for lo, hi in tilting_intervals(t)]
    for name, pres in bundle(t).items():
        out[name] = pres.to_json()
    return out


def bundle_dot(t: RigidObject) -> dict[str, str]:
    return {name: to_dot(pres, name) for name, pres in bundle(t).items()}
