"""Maximal rigid objects of the cluster tube and their wing structure.

A maximal rigid object is stored as its n-1 pairwise-compatible summands in
a canonical order: the top summand first, then by descending quasilength,
ties broken by orbit lifted into the top's window. Two independent
enumeration routes are provided and cross-checked by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from tubecat import kernel
from tubecat.tube import Indec, in_wing, is_compatible, is_rigid, lift_orbit, tau


@dataclass(frozen=True, order=True)
class RigidObject:
    """A maximal rigid object; summands are canonically ordered, top first."""

    rank: int
    summands: tuple[Indec, ...]

    @property
    def top(self) -> Indec:
        return self.summands[0]

    def vertex_of(self, s: Indec) -> int:
        """Quiver vertex (1-based) of a summand, in canonical order."""
        return self.summands.index(s) + 1

    def summand(self, vertex: int) -> Indec:
        return self.summands[vertex - 1]

    def to_json(self) -> dict:
        return {"rank": self.rank, "summands": [s.to_json() for s in self.summands]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RigidObject":
        n = int(data["rank"])
        return from_summands(n, [Indec.from_json(n, s) for s in data["summands"]])

    def __str__(self):
        return "+".join(str(s) for s in self.summands)


def canonical_order(n: int, summands: Iterable[Indec]) -> tuple[Indec, ...]:
    xs = list(summands)
    top = max(xs, key=lambda s: s.ql)
    xs.sort(key=lambda s: (-s.ql, lift_orbit(n, s.orbit, top.orbit)))
    return tuple(xs)


def from_summands(n: int, summands: Iterable[Indec]) -> RigidObject:
    """Build a maximal rigid object from its summand set, validating it."""
    xs = canonical_order(n, summands)
    if len(set(xs)) != n - 1:
        raise ValueError(f"expected {n - 1} distinct summands, got {xs}")
    for s in xs:
        if s.rank != n:
            raise ValueError(f"summand {s} has rank {s.rank}, expected {n}")
        if not is_rigid(s):
            raise ValueError(f"summand {s} is not rigid")
    top = xs[0]
    if top.ql != n - 1:
        raise ValueError(f"top summand {top} must have quasilength {n - 1}")
    if sum(1 for s in xs if s.ql == n - 1) != 1:
        raise ValueError("top summand must be unique")
    for i, s in enumerate(xs):
        if not in_wing(s, top):
            raise ValueError(f"summand {s} lies outside the wing of {top}")
        for t in xs[i + 1:]:
            if not is_compatible(s, t):
                raise ValueError(f"summands {s} and {t} are incompatible")
    return RigidObject(n, xs)


def tau_rigid(t: RigidObject, k: int = 1) -> RigidObject:
    """Apply the translate to every summand."""
    return from_summands(t.rank, [tau(s, k) for s in t.summands])


def is_maximal_rigid(n: int, summands: Iterable[Indec]) -> bool:
    """True iff the set is pairwise compatible (self-extensions included)
    and no rigid indecomposable outside it is compatible with every member."""
    xs = list(dict.fromkeys(summands))
    for i, s in enumerate(xs):
        if s.rank != n or not is_rigid(s):
            return False
        for t in xs[i:]:
            if not is_compatible(s, t):
                return False
    chosen = set(xs)
    for a in range(1, n + 1):
        for b in range(1, n):
            cand = Indec(n, a, b)
            if cand in chosen:
                continue
            if all(is_compatible(cand, s) for s in xs):
                return False
    return True


# --- enumeration ----------------------------------------------------------

def enumerate_maximal_rigid(n: int, method: str = "structured") -> list[RigidObject]:
    """All maximal rigid objects, each once, deterministically ordered.

    method="brute": subset search over the n(n-1) rigid indecomposables,
    filtered by pairwise compatibility and maximality.
    method="structured": choose the top orbit, then fill its wing by
    recursive subwing splits.
    """
    if n < 2:
        raise ValueError("rank must be >= 2")
    if method == "brute":
        objects = _enumerate_brute(n)
    elif method == "structured":
        objects = _enumerate_structured(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    objects.sort(key=_sort_key)
    return objects


def _sort_key(t: RigidObject):
    return (t.top.orbit, tuple((s.orbit, s.ql) for s in t.summands))


def _enumerate_brute(n: int) -> list[RigidObject]:
    masks = kernel.compat_masks(n)
    out = []
    for subset in kernel.compatible_subsets(masks, n - 1):
        chosen = 0
        for i in subset:
            chosen |= 1 << i
        # maximality: no outside candidate compatible with all members
        common = (1 << len(masks)) - 1
        for i in subset:
            common &= masks[i]
        if common & ~chosen:
            continue
        summands = [Indec(n, *kernel.rigid_coords(n, i)) for i in subset]
        out.append(from_summands(n, summands))
    return out


def _enumerate_structured(n: int) -> list[RigidObject]:
    out = []
    for a in range(1, n + 1):
        for filling in _wing_fillings(n, a, n - 1):
            out.append(from_summands(n, filling))
    return out


def _wing_fillings(n: int, orbit: int, height: int) -> list[tuple[Indec, ...]]:
    """All ways to place `height` pairwise-compatible summands in the wing
    with summit (orbit, height), summit included: split below the summit
    into a left subwing of height c and a right subwing of height
    height - 1 - c."""
    summit = Indec(n, orbit, height)
    if height == 1:
        return [(summit,)]
    out = []
    for c in range(height):
        left = _wing_fillings(n, orbit, c) if c else [()]
        right = _wing_fillings(n, orbit + c + 1, height - 1 - c) if c < height - 1 else [()]
        for fl in left:
            for fr in right:
                out.append((summit,) + fl + fr)
    return out


@lru_cache(maxsize=32)
def _enumerated(n: int) -> tuple[RigidObject, ...]:
    return tuple(enumerate_maximal_rigid(n))


def maximal_rigid_objects(n: int) -> tuple[RigidObject, ...]:
    """Cached structured enumeration, for the verification sweeps."""
    return _enumerated(n)


# --- subwing triples -------------------------------------------------------

@dataclass(frozen=True)
class SubwingTriple:
    """Summit with its left/right sub-summits; a missing side is None.

    Non-degenerate: top (a, b), left (a, c), right (a+c+1, b-c-1) with
    1 <= c <= b-2. Degenerate: exactly one side present, of quasilength b-1.
    """

    top: Indec
    left: Indec | None
    right: Indec | None

    @property
    def degenerate(self) -> bool:
        return self.left is None or self.right is None


def subwing_decomposition(t: RigidObject) -> dict[Indec, SubwingTriple]:
    """The subwing triple of every summand of quasilength > 1.

    For each such summand the left member is the summand of largest
    quasilength sharing its ray, if any; the right member is then forced.
    Both members must themselves be summands or absent.
    """
    n = t.rank
    chosen = set(t.summands)
    out = {}
    for x in t.summands:
        if x.ql == 1:
            continue
        left_candidates = [
            s for s in t.summands
            if s is not x and s.orbit == x.orbit and s.ql < x.ql
        ]
        if not left_candidates:
            right = Indec(n, x.orbit + 1, x.ql - 1)
            if right not in chosen:
                raise ValueError(f"no subwing triple for {x}: {right} missing")
            out[x] = SubwingTriple(x, None, right)
            continue
        left = max(left_candidates, key=lambda s: s.ql)
        c = left.ql
        if c == x.ql - 1:
            out[x] = SubwingTriple(x, left, None)
            continue
        right = Indec(n, x.orbit + c + 1, x.ql - c - 1)
        if right not in chosen:
            raise ValueError(f"no subwing triple for {x}: {right} missing")
        out[x] = SubwingTriple(x, left, right)
    return out


def quasisimple_map(t: RigidObject) -> dict[Indec, Indec]:
    """Send each quasisimple in the top wing to the summand of smallest
    quasilength whose wing contains it; a bijection onto the summands."""
    top = t.top
    out = {}
    for i in range(top.ql):
        q = Indec(t.rank, top.orbit + i, 1)
        best = min(
            (s for s in t.summands if in_wing(q, s)),
            key=lambda s: s.ql,
        )
        out[q] = best
    return out


# --- tilting-interval encoding ---------------------------------------------

def tilting_intervals(t: RigidObject) -> tuple[tuple[int, int], ...]:
    """Summands as intervals of the linear quiver inside the top wing:
    (a', b') maps to [a'-a+1, a'-a+b'] with a' lifted past the seam."""
    a = t.top.orbit
    out = []
    for s in t.summands:
        lo = lift_orbit(t.rank, s.orbit, a) - a + 1
        out.append((lo, lo + s.ql - 1))
    return tuple(out)


def from_tilting(n: int, top_orbit: int, intervals: Iterable[tuple[int, int]]) -> RigidObject:
    """Inverse of `tilting_intervals` for a chosen top orbit."""
    summands = []
    for lo, hi in intervals:
        if not 1 <= lo <= hi <= n - 1:
            raise ValueError(f"interval {lo}-{hi} out of range 1..{n - 1}")
        summands.append(Indec(n, top_orbit + lo - 1, hi - lo + 1))
    return from_summands(n, summands)
