"""Image of indecomposables under Hom from a maximal rigid object.

Every indecomposable x determines two chains of summands (those with tube
maps to x and those with shifted-part maps to x), a string for each chain,
and, inside the fundamental domain, a single string obtained by joining the
two through a connecting arrow. The predicted string modules are verified
against cluster-Hom dimensions computed by the independent linear-algebra
oracle, vertex by vertex.

Coordinates are normalized so the top summand is (1, n-1); the vanishing
locus outside the fundamental domain is stated in those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from tubecat import strings as st
from tubecat.endo import LOOP_ID, cached_endomorphism_algebra
from tubecat.quiver import Presentation
from tubecat.rigid import RigidObject, subwing_decomposition, tau_rigid
from tubecat.strings import StringModule, StringWord, ZERO_STRING
from tubecat.tube import Indec, hom_cluster_oracle, hom_tube, in_wing, tau


@dataclass(frozen=True)
class FundamentalDomain:
    """The rigid region plus the triangle above it, of size 3n(n-1)/2."""

    rank: int
    members: frozenset[Indec]

    def __contains__(self, x: Indec) -> bool:
        if x.ql <= self.rank - 1:
            return True
        return x in self.members

    def sorted_members(self) -> list[Indec]:
        return sorted(self.members, key=lambda x: (x.ql, x.orbit))


@lru_cache(maxsize=64)
def fundamental_domain(n: int) -> FundamentalDomain:
    """Membership: ql <= n-1, or orbit + ql <= 2n-1 with the orbit in 1..n."""
    members = set()
    for a in range(1, n + 1):
        for b in range(1, 2 * n):
            if b <= n - 1 or a + b <= 2 * n - 1:
                members.add(Indec(n, a, b))
    return FundamentalDomain(n, frozenset(members))


def normalize_rotation(t: RigidObject) -> int:
    """Translate power moving the top summand to orbit 1."""
    return t.top.orbit - 1


def in_fundamental_domain(t: RigidObject, x: Indec) -> bool:
    return tau(x, normalize_rotation(t)) in fundamental_domain(t.rank)


def in_add_tau(t: RigidObject, x: Indec) -> bool:
    return any(tau(s, 1) == x for s in t.summands)


def on_vanishing_locus(t: RigidObject, x: Indec) -> bool:
    """Outside the fundamental domain, Hom vanishes exactly on the objects
    (n, kn - 1), k >= 2, in top-normalized coordinates."""
    n = t.rank
    xn = tau(x, normalize_rotation(t))
    if xn in fundamental_domain(n):
        return False
    return xn.orbit == n and (xn.ql + 1) % n == 0 and xn.ql >= 2 * n - 1


# --- reverse hammocks and their strings --------------------------------------

def reverse_hammock(t: RigidObject, x: Indec, kind: str) -> list[Indec]:
    """Summands with tube maps to x (kind "T") or shifted-part maps to x
    (kind "D"), by ascending quasilength; a wing-nested chain."""
    if kind == "T":
        members = [s for s in t.summands if hom_tube(s, x) > 0]
    elif kind == "D":
        members = [s for s in t.summands if hom_tube(x, tau(s, 2)) > 0]
    else:
        raise ValueError(f"kind must be 'T' or 'D', got {kind!r}")
    members.sort(key=lambda s: s.ql)
    return members


@lru_cache(maxsize=None)
def _triples_by_vertex(t: RigidObject) -> dict[int, tuple[int | None, int | None]]:
    out = {}
    for summand, triple in subwing_decomposition(t).items():
        left = t.vertex_of(triple.left) if triple.left is not None else None
        right = t.vertex_of(triple.right) if triple.right is not None else None
        out[t.vertex_of(summand)] = (left, right)
    return out


def sigma_string(t: RigidObject, x: Indec, kind: str) -> StringWord:
    """The unique string traversing the reverse-hammock chain once each,
    without shifted-part arrows, ending at the highest-quasilength vertex.
    The zero string when the chain is empty."""
    chain = reverse_hammock(t, x, kind)
    if not chain:
        return ZERO_STRING
    vertices = [t.vertex_of(s) for s in chain]
    if len(vertices) == 1:
        return st.trivial(vertices[0])
    triples = _triples_by_vertex(t)
    letters: list[st.Letter] = []
    for low, high in zip(chain, chain[1:]):
        if not in_wing(low, high):
            raise AssertionError(f"hammock chain not wing-nested at {low}, {high}")
        v_low, v_high = t.vertex_of(low), t.vertex_of(high)
        left, right = triples.get(v_high, (None, None))
        if left == v_low:
            letters.append((f"a{v_high}_{v_low}", -1))
        elif right == v_low:
            letters.append((f"a{v_low}_{v_high}", 1))
        else:
            raise AssertionError(
                f"chain members {low}, {high} are not triple-related"
            )
    word = st.word(letters)
    lam = cached_endomorphism_algebra(t)
    if not st.is_string(lam, word):
        raise AssertionError(f"constructed chain word is not a string: {word}")
    return word


def beta_arrow(t: RigidObject, x: Indec) -> str | None:
    """Connecting arrow from the end of the tube-side string to the end of
    the shifted-side string; None when either string is zero."""
    lam = cached_endomorphism_algebra(t)
    sig_t = sigma_string(t, x, "T")
    sig_d = sigma_string(t, x, "D")
    if sig_t.is_zero or sig_d.is_zero:
        return None
    end_t = st.end_vertex(lam, sig_t)
    end_d = st.end_vertex(lam, sig_d)
    if end_t == end_d:
        top_vertex = t.vertex_of(t.top)
        if end_t != top_vertex:
            raise AssertionError(
                f"both chains end at non-top vertex {end_t} for {x}"
            )
        return LOOP_ID
    for a in lam.quiver.arrows:
        if a.kind == "D" and a.src == end_t and a.tgt == end_d:
            return a.id
    raise AssertionError(
        f"no connecting arrow {end_t} -> {end_d} exists for {x}"
    )


def sigma(t: RigidObject, x: Indec) -> StringWord:
    """The string assigned to x in the fundamental domain: one chain string
    if the other is zero, else both joined through the connecting arrow."""
    if in_add_tau(t, x):
        raise ValueError(f"{x} is a translate of a summand; no string assigned")
    if not in_fundamental_domain(t, x):
        raise ValueError(f"{x} is outside the fundamental domain")
    lam = cached_endomorphism_algebra(t)
    sig_t = sigma_string(t, x, "T")
    sig_d = sigma_string(t, x, "D")
    if sig_t.is_zero and sig_d.is_zero:
        raise AssertionError(f"both chain strings vanish for {x} in the domain")
    if sig_d.is_zero:
        return sig_t
    if sig_t.is_zero:
        return sig_d
    beta = beta_arrow(t, x)
    parts = [p for p in (sig_t, st.word([(beta, 1)]), sig_d.inverse()) if p.kind == "word"]
    return st.concatenate(lam, *parts)


# --- predictions ---------------------------------------------------------------

def predicted_module(t: RigidObject, x: Indec) -> tuple[StringModule, ...]:
    """Predicted image of x: nothing for translates of summands, the single
    string module inside the fundamental domain, and the direct sum of the
    two chain modules outside it (empty exactly on the vanishing locus)."""
    lam = cached_endomorphism_algebra(t)
    if in_add_tau(t, x):
        return ()
    if in_fundamental_domain(t, x):
        return (st.string_module(lam, sigma(t, x)),)
    parts = []
    for kind in ("T", "D"):
        sig = sigma_string(t, x, kind)
        if not sig.is_zero:
            parts.append(st.string_module(lam, sig))
    return tuple(parts)


def predicted_dims(t: RigidObject, x: Indec) -> dict[int, int]:
    return st.module_dims(predicted_module(t, x))


def oracle_dims(t: RigidObject, x: Indec) -> dict[int, int]:
    """Per-vertex cluster-Hom dimensions from the linear-algebra oracle."""
    out = {}
    for i, s in enumerate(t.summands, start=1):
        total = hom_cluster_oracle(s, x).total
        if total:
            out[i] = total
    return out


# --- verification ---------------------------------------------------------------

@dataclass(frozen=True)
class HomFunctorReport:
    rank: int
    rigid_object: RigidObject
    records: tuple[dict, ...]
    dimension_failures: tuple[dict, ...]
    bijection_ok: bool
    domain_size_ok: bool
    locus_failures: tuple[str, ...]
    expected_count: int

    @property
    def ok(self) -> bool:
        return (
            not self.dimension_failures
            and self.bijection_ok
            and self.domain_size_ok
            and not self.locus_failures
        )

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "rigid_object": self.rigid_object.to_json(),
            "ok": self.ok,
            "bijection_ok": self.bijection_ok,
            "domain_size_ok": self.domain_size_ok,
            "locus_failures": list(self.locus_failures),
            "expected_count": self.expected_count,
            "records": list(self.records),
        }


def verify_hom_functor(t: RigidObject, ql_cap: int | None = None) -> HomFunctorReport:
    """Check the predicted modules against the oracle for every x up to the
    quasilength cap, the string bijection on the fundamental domain, its
    cardinality, and the outside vanishing locus."""
    n = t.rank
    if ql_cap is None:
        ql_cap = 3 * n
    lam = cached_endomorphism_algebra(t)

    records = []
    failures = []
    locus_failures = []
    assigned: dict[StringWord, Indec] = {}

    sweep = [Indec(n, a, b) for b in range(1, ql_cap + 1) for a in range(1, n + 1)]
    for x in sweep:
        in_f = in_fundamental_domain(t, x)
        is_tau = in_add_tau(t, x)
        sig_t = sigma_string(t, x, "T")
        sig_d = sigma_string(t, x, "D")
        beta = beta_arrow(t, x) if in_f and not is_tau and not sig_t.is_zero and not sig_d.is_zero else None
        pred = predicted_dims(t, x)
        orac = oracle_dims(t, x)
        ok = pred == orac
        records.append(
            {
                "x": x.to_json(),
                "in_F": in_f,
                "in_add_tau": is_tau,
                "sigmaT": sig_t.to_json(),
                "sigmaD": sig_d.to_json(),
                "beta": beta,
                "predicted_dims": {str(v): d for v, d in sorted(pred.items())},
                "oracle_dims": {str(v): d for v, d in sorted(orac.items())},
                "ok": ok,
            }
        )
        if not ok:
            failures.append(records[-1])
        if in_f and not is_tau:
            assigned[sigma(t, x).canonical()] = x
        if not in_f:
            vanishes = not orac
            if vanishes != on_vanishing_locus(t, x):
                locus_failures.append(
                    f"{x}: oracle {'vanishes' if vanishes else 'is nonzero'} "
                    f"off pattern"
                )

    domain = fundamental_domain(n)
    domain_count = sum(1 for x in domain.members if not in_add_tau(t, tau(x, -normalize_rotation(t))))
    expected = (3 * n * n - 5 * n + 2) // 2
    size_ok = domain_count == expected and len(assigned) == expected

    enum = st.enumerate_strings(lam)
    bijection_ok = (
        not enum.bands
        and set(assigned) == set(enum.strings)
        and len(assigned) == len(enum.strings)
    )

    return HomFunctorReport(
        rank=n,
        rigid_object=t,
        records=tuple(records),
        dimension_failures=tuple(failures),
        bijection_ok=bijection_ok,
        domain_size_ok=size_ok,
        locus_failures=tuple(locus_failures),
        expected_count=expected,
    )
