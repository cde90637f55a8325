"""Coordinates and Hom/Ext combinatorics of the rank-n tube and cluster tube.

Indecomposables are points (orbit, ql) on an infinite cylinder of width n.
The closed-form Hom count lives in the kernel backend; `hom_tube_oracle`
recomputes the same dimension from an explicit nilpotent-representation
model and is the ground truth the closed form is validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from tubecat import kernel


@dataclass(frozen=True, order=True)
class Indec:
    """An indecomposable object: orbit coordinate (mod rank) and quasilength."""

    rank: int
    orbit: int
    ql: int

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError(f"rank must be >= 2, got {self.rank}")
        if self.ql < 1:
            raise ValueError(f"quasilength must be >= 1, got {self.ql}")
        orb = (self.orbit - 1) % self.rank + 1
        if orb != self.orbit:
            object.__setattr__(self, "orbit", orb)

    def to_json(self) -> list[int]:
        return [self.orbit, self.ql]

    @classmethod
    def from_json(cls, rank: int, data) -> "Indec":
        a, b = data
        return cls(rank, int(a), int(b))

    def __str__(self):
        return f"({self.orbit},{self.ql})"


class HomDims(NamedTuple):
    """Dimensions of the two summands of a cluster-category Hom space."""

    t_dim: int
    d_dim: int

    @property
    def total(self) -> int:
        return self.t_dim + self.d_dim


def _same_rank(x: Indec, y: Indec) -> int:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} != {y.rank}")
    return x.rank


def tau(x: Indec, k: int = 1) -> Indec:
    """k-th power of the translate: (a, b) -> (a - k, b). Negative k allowed."""
    return Indec(x.rank, (x.orbit - k - 1) % x.rank + 1, x.ql)


def hom_tube(x: Indec, y: Indec) -> int:
    """dim Hom(x, y) in the tube, by the closed-form count."""
    n = _same_rank(x, y)
    return kernel.hom_tube_dim(n, x.orbit, x.ql, y.orbit, y.ql)


def hom_cluster(x: Indec, y: Indec) -> HomDims:
    """Cluster-category Hom dimensions: tube maps plus shifted-part maps.

    The shifted part has the dimension of the tube Hom from y to the second
    translate of x.
    """
    n = _same_rank(x, y)
    return HomDims(*kernel.cluster_dims(n, x.orbit, x.ql, y.orbit, y.ql))


def ext1_cluster(x: Indec, y: Indec) -> int:
    """dim Ext^1 in the cluster tube; equals the total Hom from y to tau(x)."""
    n = _same_rank(x, y)
    return kernel.ext1_dim(n, x.orbit, x.ql, y.orbit, y.ql)


def is_compatible(x: Indec, y: Indec) -> bool:
    """True iff Ext^1 vanishes in both directions."""
    n = _same_rank(x, y)
    return kernel.pair_compatible(n, x.orbit, x.ql, y.orbit, y.ql)


def has_D_endomorphism(x: Indec) -> bool:
    """True iff x admits a shifted-part endomorphism; equivalent to ql >= n - 1."""
    return hom_tube(x, tau(x, 2)) > 0


def is_rigid(x: Indec) -> bool:
    return x.ql <= x.rank - 1


def rigid_indecomposables(n: int) -> list[Indec]:
    """The n*(n-1) rigid indecomposables, in the kernel's fixed index order."""
    return [Indec(n, a, b) for a in range(1, n + 1) for b in range(1, n)]


def quasisimples(n: int) -> list[Indec]:
    return [Indec(n, a, 1) for a in range(1, n + 1)]


# --- wings ---------------------------------------------------------------

def lift_orbit(n: int, orbit: int, base: int) -> int:
    """Representative of `orbit` in the integer window [base, base + n - 1]."""
    return base + (orbit - base) % n


def in_wing(x: Indec, summit: Indec) -> bool:
    """Wing membership, with the orbit of x lifted across the mod-n seam.

    Wings are only defined below summits of quasilength <= n - 1, so the
    lift into a window of width n is unambiguous.
    """
    n = _same_rank(x, summit)
    if summit.ql > n - 1:
        raise ValueError(f"wing summit must have quasilength <= {n - 1}")
    a = lift_orbit(n, x.orbit, summit.orbit)
    return a + x.ql <= summit.orbit + summit.ql


def wing_members(summit: Indec) -> list[Indec]:
    """All indecomposables in the wing of `summit`, top-down, left-right."""
    n = summit.rank
    out = []
    for b in range(summit.ql, 0, -1):
        for a in range(summit.orbit, summit.orbit + summit.ql - b + 1):
            out.append(Indec(n, a, b))
    return out


# --- independent linear-algebra oracle -----------------------------------

def hom_tube_oracle(x: Indec, y: Indec) -> int:
    """dim Hom(x, y) computed from explicit nilpotent representations.

    Models (a, b) as the uniserial representation of the cyclic quiver with
    arrows q -> q-1 whose socle sits at vertex a: basis e_0, ..., e_{b-1}
    graded by vertices a+b-1, ..., a, with the arrow action shifting the
    grading down. The Hom dimension is the nullity of the linear system of
    commutation equations. Depends on the input only through (b, d, c - a
    mod n), which the cache key exploits.
    """
    n = _same_rank(x, y)
    return _oracle_dim(n, x.ql, y.ql, (y.orbit - x.orbit) % n)


@lru_cache(maxsize=None)
def _oracle_dim(n: int, b: int, d: int, shift: int) -> int:
    vx = [(b - 1 - i) % n for i in range(b)]        # vertex of e^X_i, orbit a = 0
    vy = [(shift + d - 1 - j) % n for j in range(d)]  # vertex of e^Y_j

    unknowns = {}
    for i in range(b):
        for j in range(d):
            if vx[i] == vy[j]:
                unknowns[(i, j)] = len(unknowns)
    if not unknowns:
        return 0

    rows = []
    for i in range(b):
        target = (vx[i] - 1) % n
        for m in range(d):
            if vy[m] != target:
                continue
            row = [0] * len(unknowns)
            used = False
            if i + 1 < b:
                row[unknowns[(i + 1, m)]] += 1
                used = True
            if m - 1 >= 0 and (i, m - 1) in unknowns:
                row[unknowns[(i, m - 1)]] -= 1
                used = True
            if used:
                rows.append(row)

    if not rows:
        return len(unknowns)
    matrix = np.array(rows, dtype=np.int64)
    return len(unknowns) - _rank_mod_p(matrix)


_PRIME = 2_147_483_647


def _rank_mod_p(matrix: np.ndarray) -> int:
    """Exact rank over GF(p) for a large prime p.

    The commutation systems have at most one +1 and one -1 per row, hence
    are totally unimodular; their rank over GF(p) equals the rank over the
    rationals for any p.
    """
    m = matrix % _PRIME
    n_rows, n_cols = m.shape
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, n_rows):
            if m[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), _PRIME - 2, _PRIME)
        m[rank] = m[rank] * inv % _PRIME
        below = m[rank + 1:, col].nonzero()[0]
        if below.size:
            rows = below + rank + 1
            m[rows] = (m[rows] - np.outer(m[rows, col], m[rank])) % _PRIME
        rank += 1
        if rank == n_rows:
            break
    return rank


def hom_cluster_oracle(x: Indec, y: Indec) -> HomDims:
    """Cluster Hom dimensions with both parts taken from the oracle."""
    return HomDims(hom_tube_oracle(x, y), hom_tube_oracle(y, tau(x, 2)))


def indecomposables_up_to(n: int, ql_cap: int) -> Iterator[Indec]:
    for a in range(1, n + 1):
        for b in range(1, ql_cap + 1):
            yield Indec(n, a, b)
