"""String and band combinatorics for quadratic monomial presentations.

A string is a reduced walk of arrows and inverse arrows that avoids the
relations in both readings. Words are stored in walk order (first letter
applied first) and displayed right to left, matching path composition.
Canonical forms identify a word with its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from tubecat.quiver import Presentation, is_special_biserial

Letter = tuple[str, int]  # (arrow id, +1 direct / -1 inverse)


class InfiniteTypeError(ValueError):
    """Band modules exist; the indecomposables cannot be counted."""

    def __init__(self, bands):
        super().__init__(f"presentation has band modules: {bands}")
        self.bands = bands


@dataclass(frozen=True, order=True)
class StringWord:
    """A string: a walk ("word"), a single vertex ("trivial"), or the unique
    zero string of length -1."""

    kind: str  # "zero" | "trivial" | "word"
    letters: tuple[Letter, ...] = ()
    vertex: int | None = None

    def __post_init__(self):
        if self.kind not in ("zero", "trivial", "word"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "word" and not self.letters:
            raise ValueError("word strings need at least one letter")
        if self.kind == "trivial" and self.vertex is None:
            raise ValueError("trivial strings need a vertex")

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    def __len__(self) -> int:
        if self.kind == "zero":
            return 0
        return len(self.letters)

    @property
    def length(self) -> int:
        """Word length; the zero string has length -1 by convention."""
        if self.kind == "zero":
            return -1
        return len(self.letters)

    def inverse(self) -> "StringWord":
        if self.kind != "word":
            return self
        return StringWord(
            "word", tuple((aid, -d) for aid, d in reversed(self.letters))
        )

    def canonical(self) -> "StringWord":
        if self.kind != "word":
            return self
        inv = self.inverse()
        return self if _letter_keys(self) <= _letter_keys(inv) else inv

    def to_json(self) -> list | None:
        """Right-to-left display order, inverse letters suffixed with ^-1."""
        if self.kind == "zero":
            return None
        if self.kind == "trivial":
            return [f"e{self.vertex}"]
        return [
            aid if d > 0 else f"{aid}^-1" for aid, d in reversed(self.letters)
        ]

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "trivial":
            return f"e{self.vertex}"
        return "*".join(self.to_json())


ZERO_STRING = StringWord("zero")


def trivial(vertex: int) -> StringWord:
    return StringWord("trivial", (), vertex)


def word(letters) -> StringWord:
    return StringWord("word", tuple(letters))


def _letter_keys(w: StringWord):
    return tuple((aid, 0 if d > 0 else 1) for aid, d in w.letters)


def letter_source(p: Presentation, letter: Letter) -> int:
    a = p.quiver.arrow(letter[0])
    return a.src if letter[1] > 0 else a.tgt


def letter_target(p: Presentation, letter: Letter) -> int:
    a = p.quiver.arrow(letter[0])
    return a.tgt if letter[1] > 0 else a.src


def start_vertex(p: Presentation, w: StringWord) -> int:
    if w.kind == "trivial":
        return w.vertex
    if w.kind == "word":
        return letter_source(p, w.letters[0])
    raise ValueError("the zero string has no endpoints")


def end_vertex(p: Presentation, w: StringWord) -> int:
    if w.kind == "trivial":
        return w.vertex
    if w.kind == "word":
        return letter_target(p, w.letters[-1])
    raise ValueError("the zero string has no endpoints")


def traversed_vertices(p: Presentation, w: StringWord) -> list[int]:
    """Vertices visited by the walk, with multiplicity; length + 1 entries."""
    if w.kind == "zero":
        return []
    if w.kind == "trivial":
        return [w.vertex]
    out = [letter_source(p, w.letters[0])]
    for letter in w.letters:
        out.append(letter_target(p, letter))
    return out


def letters_composable(p: Presentation, x: Letter, y: Letter) -> bool:
    """May y follow x in a string?"""
    if letter_target(p, x) != letter_source(p, y):
        return False
    if x[0] == y[0] and x[1] == -y[1]:
        return False
    if x[1] > 0 and y[1] > 0 and p.is_relation(y[0], x[0]):
        return False
    if x[1] < 0 and y[1] < 0 and p.is_relation(x[0], y[0]):
        return False
    return True


def is_string(p: Presentation, w: StringWord) -> bool:
    if w.kind == "zero":
        return True
    if w.kind == "trivial":
        return w.vertex in p.quiver.vertices
    for letter in w.letters:
        if letter[0] not in {a.id for a in p.quiver.arrows}:
            return False
    return all(
        letters_composable(p, x, y) for x, y in zip(w.letters, w.letters[1:])
    )


def concatenate(p: Presentation, *parts: StringWord) -> StringWord:
    """Join strings end to start; the result must again be a string."""
    letters: list[Letter] = []
    for part in parts:
        if part.kind == "zero":
            raise ValueError("cannot concatenate the zero string")
        letters.extend(part.letters)
    if not letters:
        verts = {part.vertex for part in parts if part.kind == "trivial"}
        if len(verts) != 1:
            raise ValueError("trivial concatenation at incoherent vertices")
        return trivial(verts.pop())
    out = word(letters)
    if not is_string(p, out):
        raise ValueError(f"concatenation is not a string: {out}")
    return out


# --- enumeration -------------------------------------------------------------

@dataclass(frozen=True)
class StringEnumeration:
    """Canonical strings; bands discovered while walking, if any.

    `complete` is False only when bands forced a length cap; `strings` then
    holds every string up to `cap` letters.
    """

    strings: tuple[StringWord, ...]
    bands: tuple[StringWord, ...]
    complete: bool
    cap: int


def default_cap(p: Presentation) -> int:
    return 4 * max(1, len(p.quiver.arrows)) * max(1, len(p.quiver.vertices))


def enumerate_strings(p: Presentation, cap: int | None = None) -> StringEnumeration:
    """Depth-first letter-by-letter extension from every trivial string.

    A letter repeating along one growing branch closes a cycle of valid
    transitions, which is exactly a band; bands are recorded and the walk
    is cut at the cap. Without bands the walk terminates by itself.
    """
    sb = is_special_biserial(p)
    if not sb:
        raise ValueError(f"presentation is not special biserial: {sb.witness}")
    if cap is None:
        cap = default_cap(p)

    all_letters: list[Letter] = []
    for a in sorted(p.quiver.arrows, key=lambda a: a.id):
        all_letters.append((a.id, 1))
        all_letters.append((a.id, -1))
    by_source: dict[int, list[Letter]] = {}
    for letter in all_letters:
        by_source.setdefault(letter_source(p, letter), []).append(letter)

    found: set[StringWord] = {trivial(v) for v in p.quiver.vertices}
    bands: set[StringWord] = set()
    capped = False
    budget = 1_000_000

    def extend(letters: list[Letter], first_seen: dict[Letter, int]):
        nonlocal capped, budget
        budget -= 1
        if budget < 0:
            raise RuntimeError(
                f"string walk exceeded the node budget at cap {cap}"
            )
        found.add(word(letters).canonical())
        if len(letters) >= cap:
            capped = True
            return
        last = letters[-1]
        for nxt in by_source.get(letter_target(p, last), ()):
            if not letters_composable(p, last, nxt):
                continue
            fresh = nxt not in first_seen
            if fresh:
                first_seen[nxt] = len(letters)
            else:
                bands.add(_canonical_band(letters[first_seen[nxt]:]))
            letters.append(nxt)
            extend(letters, first_seen)
            letters.pop()
            if fresh:
                del first_seen[nxt]

    for first in all_letters:
        extend([first], {first: 0})

    if capped and not bands:
        raise RuntimeError(
            f"string walk exceeded cap {cap} without finding a band"
        )
    return StringEnumeration(
        tuple(sorted(found)), tuple(sorted(bands)), not bands, cap
    )


def _canonical_band(cycle: list[Letter]) -> StringWord:
    """Primitive root of the cyclic word, in its least rotation over both
    orientations."""
    forward = tuple(cycle)
    for period in range(1, len(forward) + 1):
        if len(forward) % period == 0 and forward == forward[:period] * (
            len(forward) // period
        ):
            forward = forward[:period]
            break

    def rotations(ls: tuple[Letter, ...]):
        return [ls[i:] + ls[:i] for i in range(len(ls))]

    backward = tuple((aid, -d) for aid, d in reversed(forward))
    best = min(
        rotations(forward) + rotations(backward),
        key=lambda ls: _letter_keys(word(ls)),
    )
    return word(best)


def count_indecomposables(p: Presentation) -> int:
    """Number of canonical strings, trivial ones included, zero excluded."""
    enum = enumerate_strings(p)
    if enum.bands:
        raise InfiniteTypeError(enum.bands)
    return len(enum.strings)


# --- string modules ------------------------------------------------------------

@dataclass(frozen=True)
class StringModule:
    """Dimension vector plus 0/1 arrow actions on vertex-graded basis slots.

    Each action is stored with its (target dim, source dim) shape so that
    empty matrices keep their meaning.
    """

    dims: tuple[tuple[int, int], ...]  # (vertex, dimension), sorted
    actions: tuple[tuple[str, tuple[int, int], tuple[int, ...]], ...]

    def dim(self, vertex: int) -> int:
        return dict(self.dims).get(vertex, 0)

    @property
    def total_dim(self) -> int:
        return sum(d for _, d in self.dims)

    def action(self, arrow_id: str) -> np.ndarray:
        for aid, shape, entries in self.actions:
            if aid == arrow_id:
                return np.array(entries, dtype=np.int8).reshape(shape)
        raise KeyError(arrow_id)

    def to_json(self) -> dict:
        return {
            "dims": {str(v): d for v, d in self.dims},
            "actions": {
                aid: [list(row) for row in self.action(aid)]
                for aid, _, _ in self.actions
            },
        }


def string_module(p: Presentation, w: StringWord) -> StringModule:
    """The standard module of a string: one basis slot per traversed vertex,
    identity arrow actions along the word. The zero string yields the zero
    module."""
    if not is_string(p, w):
        raise ValueError(f"not a string of this presentation: {w}")
    if w.kind == "zero":
        return zero_module()
    verts = traversed_vertices(p, w)
    dims: dict[int, int] = {v: 0 for v in p.quiver.vertices}
    slot: list[int] = []
    for v in verts:
        slot.append(dims[v])
        dims[v] += 1

    mats = {
        a.id: np.zeros((dims[a.tgt], dims[a.src]), dtype=np.int8)
        for a in p.quiver.arrows
    }
    if w.kind == "word":
        for i, (aid, d) in enumerate(w.letters):
            if d > 0:
                mats[aid][slot[i + 1], slot[i]] = 1
            else:
                mats[aid][slot[i], slot[i + 1]] = 1

    for second, first in p.relations:
        prod = mats[second] @ mats[first]
        if prod.any():
            raise AssertionError(f"relation ({second}, {first}) acts nonzero")

    return StringModule(
        tuple(sorted((v, d) for v, d in dims.items() if d)),
        tuple(
            (aid, mat.shape, tuple(int(x) for x in mat.reshape(-1)))
            for aid, mat in sorted(mats.items())
        ),
    )


def zero_module() -> StringModule:
    return StringModule((), ())


def module_dims(modules) -> dict[int, int]:
    """Summed dimension vector of a family of modules."""
    out: dict[int, int] = {}
    for m in modules:
        for v, d in m.dims:
            out[v] = out.get(v, 0) + d
    return out


# --- projective and injective strings --------------------------------------------

def _maximal_paths_from(p: Presentation, v: int) -> list[list[str]]:
    """Maximal relation-free paths out of v, as arrow id lists; at most two
    for special biserial presentations."""
    out = []
    for first in p.quiver.arrows_from(v):
        path = [first.id]
        while True:
            cur = path[-1]
            nxt = [
                g.id
                for g in p.quiver.arrows_from(p.quiver.arrow(cur).tgt)
                if not p.is_relation(g.id, cur)
            ]
            if not nxt:
                break
            if len(nxt) > 1:
                raise ValueError("not special biserial")
            if nxt[0] in path:
                raise ValueError("relation-free cycle; projectives are infinite")
            path.append(nxt[0])
        out.append(path)
    return out


def _maximal_paths_into(p: Presentation, v: int) -> list[list[str]]:
    out = []
    for last in p.quiver.arrows_into(v):
        path = [last.id]
        while True:
            cur = path[0]
            prev = [
                a.id
                for a in p.quiver.arrows_into(p.quiver.arrow(cur).src)
                if not p.is_relation(cur, a.id)
            ]
            if not prev:
                break
            if len(prev) > 1:
                raise ValueError("not special biserial")
            if prev[0] in path:
                raise ValueError("relation-free cycle; injectives are infinite")
            path.insert(0, prev[0])
        out.append(path)
    return out


def projective_string(p: Presentation, v: int) -> StringWord:
    """String of the indecomposable projective at v: walk backwards along one
    maximal relation-free path out of v, then forwards along the other."""
    branches = _maximal_paths_from(p, v)
    if not branches:
        return trivial(v)
    if len(branches) == 1:
        u, w_branch = branches[0], []
    else:
        u, w_branch = branches
    letters = [(aid, -1) for aid in reversed(u)] + [(aid, 1) for aid in w_branch]
    return word(letters) if letters else trivial(v)


def injective_string(p: Presentation, v: int) -> StringWord:
    """String of the indecomposable injective at v, dually."""
    branches = _maximal_paths_into(p, v)
    if not branches:
        return trivial(v)
    if len(branches) == 1:
        u, w_branch = branches[0], []
    else:
        u, w_branch = branches
    letters = [(aid, 1) for aid in u] + [(aid, -1) for aid in reversed(w_branch)]
    return word(letters) if letters else trivial(v)


def projectives_match_injectives(p: Presentation) -> bool:
    """Whether the projective and injective string multisets coincide.

    A mismatch certifies that some projective is not injective, hence the
    algebra is not self-injective; a match certifies nothing.
    """
    projs = sorted(projective_string(p, v).canonical() for v in p.quiver.vertices)
    injs = sorted(injective_string(p, v).canonical() for v in p.quiver.vertices)
    return projs == injs
