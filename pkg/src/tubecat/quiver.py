"""Quivers with quadratic monomial relations.

Path counting, the special biserial and gentle conditions, the critical-path
bound on the Gorenstein dimension, recognition of type-A cluster-tilted
quivers, connecting vertices, and small-scale isomorphism testing.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class DivergentPathsError(ValueError):
    """A relation-free cycle makes the path count infinite."""


class SizeLimitError(ValueError):
    """Input exceeds the exhaustive-search size limit."""


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    src: int
    tgt: int
    kind: str | None = field(default=None, compare=False)

    def __str__(self):
        return f"{self.id}:{self.src}->{self.tgt}"


@dataclass(frozen=True)
class Quiver:
    """Finite quiver; loops and parallel arrows permitted, arrow ids unique."""

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("arrow ids must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.src not in vs or a.tgt not in vs:
                raise ValueError(f"arrow {a} has endpoint outside the vertex set")

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.tgt == v]

    def valency(self, v: int) -> int:
        """Number of arrow endpoints at v; a loop counts twice."""
        return sum((a.src == v) + (a.tgt == v) for a in self.arrows)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"id": a.id, "src": a.src, "tgt": a.tgt, "kind": a.kind}
                for a in self.arrows
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Quiver":
        return cls(
            tuple(data["vertices"]),
            tuple(
                Arrow(d["id"], d["src"], d["tgt"], d.get("kind"))
                for d in data["arrows"]
            ),
        )


@dataclass(frozen=True)
class Presentation:
    """Quiver plus quadratic monomial relations.

    A relation is an ordered pair (b, a) of arrow ids with src(b) == tgt(a),
    read right to left: the path "b after a" is zero.
    """

    quiver: Quiver
    relations: frozenset[tuple[str, str]]

    def __post_init__(self):
        for b, a in self.relations:
            if self.quiver.arrow(b).src != self.quiver.arrow(a).tgt:
                raise ValueError(f"relation ({b}, {a}) is not composable")

    def is_relation(self, second: str, first: str) -> bool:
        return (second, first) in self.relations

    def to_json(self) -> dict:
        data = self.quiver.to_json()
        data["relations"] = sorted([b, a] for b, a in self.relations)
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "Presentation":
        return cls(
            Quiver.from_json(data),
            frozenset((b, a) for b, a in data.get("relations", ())),
        )


def presentation(vertices: Sequence[int], arrows: Iterable[tuple], relations: Iterable[tuple[str, str]] = ()) -> Presentation:
    """Convenience constructor; arrows are (id, src, tgt[, kind]) tuples."""
    return Presentation(
        Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows)),
        frozenset(relations),
    )


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict with the first violation found, if any."""

    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


# --- path counting ---------------------------------------------------------

def count_paths(p: Presentation) -> dict[tuple[int, int], int]:
    """Number of relation-free paths between every vertex pair.

    Trivial paths are included on the diagonal. Raises DivergentPathsError
    when a relation-free cycle makes the count infinite.
    """
    arrows = p.quiver.arrows
    successors = {
        a.id: [b.id for b in arrows if b.src == a.tgt and not p.is_relation(b.id, a.id)]
        for a in arrows
    }
    by_id = {a.id: a for a in arrows}

    # paths ending with a given arrow, keyed by their start vertex
    memo: dict[str, dict[int, int]] = {}
    on_stack: set[str] = set()

    def ending_with(aid: str) -> dict[int, int]:
        if aid in memo:
            return memo[aid]
        if aid in on_stack:
            raise DivergentPathsError(
                f"relation-free cycle through arrow {aid!r}; path count diverges"
            )
        on_stack.add(aid)
        counts = {by_id[aid].src: 1}
        for prev in arrows:
            if aid in successors[prev.id]:
                for start, c in ending_with(prev.id).items():
                    counts[start] = counts.get(start, 0) + c
        on_stack.discard(aid)
        memo[aid] = counts
        return counts

    totals = {(u, v): 0 for u in p.quiver.vertices for v in p.quiver.vertices}
    for v in p.quiver.vertices:
        totals[(v, v)] = 1
    for a in arrows:
        for start, c in ending_with(a.id).items():
            totals[(start, a.tgt)] += c
    return totals


def total_dimension(p: Presentation) -> int:
    return sum(count_paths(p).values())


# --- special biserial and gentle conditions ---------------------------------

def is_special_biserial(p: Presentation) -> CheckResult:
    """At most two arrows in and out of each vertex, and each arrow has at
    most one relation-free continuation and one relation-free predecessor."""
    q = p.quiver
    for v in q.vertices:
        if len(q.arrows_from(v)) > 2:
            return CheckResult(False, f"more than two arrows start at vertex {v}")
        if len(q.arrows_into(v)) > 2:
            return CheckResult(False, f"more than two arrows end at vertex {v}")
    for b in q.arrows:
        before = [a for a in q.arrows_into(b.src) if not p.is_relation(b.id, a.id)]
        if len(before) > 1:
            return CheckResult(
                False, f"arrow {b.id} continues {len(before)} arrows without relation"
            )
        after = [g for g in q.arrows_from(b.tgt) if not p.is_relation(g.id, b.id)]
        if len(after) > 1:
            return CheckResult(
                False, f"arrow {b.id} is continued by {len(after)} arrows without relation"
            )
    return CheckResult(True)


def is_gentle(p: Presentation) -> CheckResult:
    """Special biserial with the dual uniqueness condition on zero
    compositions. Relations are quadratic monomials by construction."""
    sb = is_special_biserial(p)
    if not sb:
        return sb
    q = p.quiver
    for b in q.arrows:
        killed_in = [a for a in q.arrows_into(b.src) if p.is_relation(b.id, a.id)]
        if len(killed_in) > 1:
            return CheckResult(
                False, f"arrow {b.id} kills {len(killed_in)} incoming compositions"
            )
        killed_out = [g for g in q.arrows_from(b.tgt) if p.is_relation(g.id, b.id)]
        if len(killed_out) > 1:
            return CheckResult(
                False, f"arrow {b.id} is killed by {len(killed_out)} outgoing arrows"
            )
    return CheckResult(True)


# --- Gorenstein bound -------------------------------------------------------

@dataclass(frozen=True)
class GorensteinReport:
    """Critical-path bound on the Gorenstein dimension of a gentle algebra.

    n_g is the longest critical path starting with a gentle arrow (0 when
    no gentle arrow exists). dimension is the exact value when determined:
    n_g when positive, 0 for the one-vertex loop algebra with a squared-zero
    loop, 1 when n_g == 0 but some projective is provably not injective.
    Otherwise only the bound dimension <= 1 is reported.
    """

    n_g: int
    gentle_arrows: tuple[str, ...]
    critical_path: tuple[str, ...]
    dimension: int | None
    note: str

    @property
    def upper_bound(self) -> int:
        return self.n_g if self.n_g > 0 else 1


def gorenstein_bound(p: Presentation, not_self_injective: bool | None = None) -> GorensteinReport:
    """Evaluate the critical-path bound; rejects non-gentle input.

    `not_self_injective` may supply external evidence (for example a
    projective/injective mismatch) to sharpen the n_g == 0 case.
    """
    gentle = is_gentle(p)
    if not gentle:
        raise ValueError(f"presentation is not gentle: {gentle.witness}")
    q = p.quiver
    seconds = {b for b, _ in p.relations}
    gentle_arrows = tuple(a.id for a in q.arrows if a.id not in seconds)

    # relation successors are unique for gentle algebras
    def successor(aid: str) -> str | None:
        for b, a in p.relations:
            if a == aid:
                return b
        return None

    n_g = 0
    best: tuple[str, ...] = ()
    for start in gentle_arrows:
        path = [start]
        seen = {start}
        nxt = successor(start)
        while nxt is not None:
            if nxt in seen:
                raise ValueError("critical cycle reached from a gentle arrow")
            path.append(nxt)
            seen.add(nxt)
            nxt = successor(nxt)
        if len(path) > n_g:
            n_g = len(path)
            best = tuple(path)
    if n_g > len(q.arrows):
        raise AssertionError("critical-path bound exceeded the arrow count")

    if n_g > 0:
        return GorensteinReport(
            n_g, gentle_arrows, best, n_g, f"dimension = n_g = {n_g}"
        )
    if _is_dual_number_algebra(p):
        return GorensteinReport(
            0, gentle_arrows, (), 0,
            "self-injective one-vertex loop algebra; dimension 0",
        )
    if not_self_injective:
        return GorensteinReport(
            0, gentle_arrows, (), 1,
            "no gentle arrows; not self-injective, so dimension 1",
        )
    return GorensteinReport(
        0, gentle_arrows, (), None, "no gentle arrows; dimension at most 1"
    )


def _is_dual_number_algebra(p: Presentation) -> bool:
    """One vertex, one loop, loop squared zero."""
    q = p.quiver
    if len(q.vertices) != 1 or len(q.arrows) != 1:
        return False
    a = q.arrows[0]
    return a.src == a.tgt and p.relations == frozenset({(a.id, a.id)})


# --- type-A cluster-tilted quiver recognition --------------------------------

def _underlying_edges(q: Quiver) -> dict[frozenset[int], list[Arrow]]:
    edges: dict[frozenset[int], list[Arrow]] = {}
    for a in q.arrows:
        edges.setdefault(frozenset((a.src, a.tgt)), []).append(a)
    return edges


def _is_connected(q: Quiver) -> bool:
    if not q.vertices:
        return False
    seen = {q.vertices[0]}
    frontier = [q.vertices[0]]
    while frontier:
        v = frontier.pop()
        for a in q.arrows:
            for w in (a.tgt, a.src):
                if v in (a.src, a.tgt) and w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return len(seen) == len(q.vertices)


def oriented_triangles(q: Quiver) -> list[tuple[Arrow, Arrow, Arrow]]:
    """All oriented 3-cycles, as arrow triples starting at the least vertex."""
    out = []
    for a in q.arrows:
        for b in q.arrows_from(a.tgt):
            if b.tgt == a.src:
                continue
            for c in q.arrows_from(b.tgt):
                if c.tgt == a.src and a.src < min(a.tgt, b.tgt):
                    out.append((a, b, c))
    return out


def is_cluster_tilted_A(q: Quiver) -> CheckResult:
    """Recognize quivers of type-A cluster-tilted algebras.

    Chordless cycles of the underlying graph must be oriented 3-cycles,
    valencies are at most four, and the arrows at valency-3 and valency-4
    vertices split over 3-cycles as 2+1 and 2+2. The underlying graph must
    also be connected (type A algebras are connected).
    """
    if not q.vertices:
        return CheckResult(False, "empty vertex set")
    if not _is_connected(q):
        return CheckResult(False, "underlying graph is not connected")
    for a in q.arrows:
        if a.src == a.tgt:
            return CheckResult(False, f"loop {a.id} is a length-1 cycle")
    edges = _underlying_edges(q)
    for pair, multi in edges.items():
        if len(multi) > 1:
            u, v = sorted(pair)
            return CheckResult(False, f"length-2 cycle between {u} and {v}")

    triangles = oriented_triangles(q)
    triangle_vertex_sets = {frozenset((a.src, b.src, c.src)) for a, b, c in triangles}

    # chordless cycles: vertex subsets whose induced simple graph is a cycle
    simple = {pair for pair in edges}
    for size in range(3, len(q.vertices) + 1):
        for subset in itertools.combinations(q.vertices, size):
            sub = set(subset)
            degs = {
                v: sum(1 for e in simple if v in e and e <= sub) for v in subset
            }
            if any(d != 2 for d in degs.values()):
                continue
            if not _is_connected_subset(simple, sub):
                continue
            if size != 3:
                return CheckResult(False, f"chordless cycle of length {size}: {subset}")
            if frozenset(subset) not in triangle_vertex_sets:
                return CheckResult(False, f"unoriented 3-cycle on {subset}")

    arrows_on_triangles = {
        a.id for tri in triangles for a in tri
    }
    for v in q.vertices:
        val = q.valency(v)
        if val > 4:
            return CheckResult(False, f"vertex {v} has valency {val}")
        incident = [a for a in q.arrows if v in (a.src, a.tgt)]
        on_cycle = [a for a in incident if a.id in arrows_on_triangles]
        if val == 4:
            tris_at_v = [t for t in triangles if v in {t[0].src, t[1].src, t[2].src}]
            if len(on_cycle) != 4 or len(tris_at_v) != 2:
                return CheckResult(
                    False, f"valency-4 vertex {v} does not split 2+2 over two 3-cycles"
                )
        if val == 3 and len(on_cycle) != 2:
            return CheckResult(
                False, f"valency-3 vertex {v} does not split 2+1 over a 3-cycle"
            )
    return CheckResult(True)


def _is_connected_subset(simple_edges: set[frozenset[int]], sub: set[int]) -> bool:
    start = next(iter(sub))
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for e in simple_edges:
            if v in e and e <= sub:
                (w,) = e - {v} if len(e) == 2 else (v,)
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return seen == sub


def connecting_vertices(q: Quiver) -> frozenset[int]:
    """Vertices of valency one, or of valency two traversed by a 3-cycle.

    For the one-vertex quiver the lone vertex is connecting. Rejects
    quivers that fail the type-A recognition.
    """
    check = is_cluster_tilted_A(q)
    if not check:
        raise ValueError(f"not a type-A cluster-tilted quiver: {check.witness}")
    if len(q.vertices) == 1:
        return frozenset(q.vertices)
    triangle_vertices = {
        v for a, b, c in oriented_triangles(q) for v in (a.src, b.src, c.src)
    }
    out = set()
    for v in q.vertices:
        val = q.valency(v)
        if val == 1 or (val == 2 and v in triangle_vertices):
            out.add(v)
    return frozenset(out)


# --- isomorphism ------------------------------------------------------------

_ISO_LIMIT = 12


def find_isomorphism(
    a: Quiver | Presentation,
    b: Quiver | Presentation,
    pin: tuple[int, int] | None = None,
) -> dict[int, int] | None:
    """Vertex bijection mapping arrows bijectively with multiplicity, and
    relations onto relations when presentations are given. `pin` fixes the
    image of one vertex. Exhaustive with degree pruning; limited size."""
    pa, pb = _as_presentation(a), _as_presentation(b)
    qa, qb = pa.quiver, pb.quiver
    if len(qa.vertices) != len(qb.vertices) or len(qa.arrows) != len(qb.arrows):
        return None
    if len(pa.relations) != len(pb.relations):
        return None
    if len(qa.vertices) > _ISO_LIMIT:
        raise SizeLimitError(
            f"isomorphism search limited to {_ISO_LIMIT} vertices"
        )

    def degree_key(q: Quiver, rel: frozenset[tuple[str, str]], v: int):
        outs = len(q.arrows_from(v))
        ins = len(q.arrows_into(v))
        loops = sum(1 for x in q.arrows if x.src == x.tgt == v)
        return (outs, ins, loops)

    keys_a = {v: degree_key(qa, pa.relations, v) for v in qa.vertices}
    keys_b = {v: degree_key(qb, pb.relations, v) for v in qb.vertices}
    if sorted(keys_a.values()) != sorted(keys_b.values()):
        return None

    verts_a = sorted(qa.vertices)
    used: set[int] = set()
    mapping: dict[int, int] = {}

    def arrow_mult(q: Quiver, u: int, v: int) -> int:
        return sum(1 for x in q.arrows if x.src == u and x.tgt == v)

    def consistent(v: int, w: int) -> bool:
        if keys_a[v] != keys_b[w]:
            return False
        for u, img in mapping.items():
            if arrow_mult(qa, v, u) != arrow_mult(qb, w, img):
                return False
            if arrow_mult(qa, u, v) != arrow_mult(qb, img, w):
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(verts_a):
            return _relations_match(pa, pb, mapping)
        v = verts_a[i]
        candidates = [pin[1]] if pin and pin[0] == v else qb.vertices
        for w in candidates:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if pin and (pin[0] not in qa.vertices or pin[1] not in qb.vertices):
        return None
    return dict(mapping) if backtrack(0) else None


def quivers_isomorphic(
    a: Quiver | Presentation,
    b: Quiver | Presentation,
    pin: tuple[int, int] | None = None,
) -> bool:
    return find_isomorphism(a, b, pin) is not None


def _as_presentation(x: Quiver | Presentation) -> Presentation:
    if isinstance(x, Presentation):
        return x
    return Presentation(x, frozenset())


def _relations_match(pa: Presentation, pb: Presentation, mapping: dict[int, int]) -> bool:
    """The vertex map must carry relation paths onto relation paths."""
    if not pa.relations and not pb.relations:
        return True

    def arrow_images(q_from: Quiver, q_to: Quiver, arrow: Arrow) -> list[Arrow]:
        return [
            x
            for x in q_to.arrows
            if x.src == mapping[arrow.src] and x.tgt == mapping[arrow.tgt]
        ]

    qa, qb = pa.quiver, pb.quiver
    for second, first in pa.relations:
        sa, fa = qa.arrow(second), qa.arrow(first)
        found = any(
            pb.is_relation(sx.id, fx.id)
            for sx in arrow_images(qa, qb, sa)
            for fx in arrow_images(qa, qb, fa)
        )
        if not found:
            return False
    return True


# --- emission ----------------------------------------------------------------

def to_dot(p: Presentation | Quiver, name: str = "quiver") -> str:
    """DOT text: solid tube-map arrows, bold shifted-part arrows, dashed
    overlay edges for relations."""
    pres = _as_presentation(p)
    q = pres.quiver
    lines = [f"digraph {name} {{"]
    for v in q.vertices:
        lines.append(f"  {v};")
    for a in q.arrows:
        style = ""
        if a.kind in ("D", "loop"):
            style = ", style=bold"
        lines.append(f'  {a.src} -> {a.tgt} [label="{a.id}"{style}];')
    for second, first in sorted(pres.relations):
        u = q.arrow(first).src
        w = q.arrow(second).tgt
        lines.append(f"  {u} -> {w} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_str(p: Presentation | Quiver) -> str:
    return json.dumps(_as_presentation(p).to_json(), indent=2, sort_keys=True)
