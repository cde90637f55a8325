"""Verification suite: every structural claim, checked per rank and object.

Each check emits outcome records that the command line prints or serializes;
a record is one (check, rank[, object]) verdict with a short detail string.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from tubecat import strings as st
from tubecat.endo import (
    cached_endomorphism_algebra,
    cartan_check,
    loopless_quiver,
)
from tubecat.homfunctor import verify_hom_functor
from tubecat.quiver import (
    connecting_vertices,
    find_isomorphism,
    gorenstein_bound,
    is_cluster_tilted_A,
    is_gentle,
)
from tubecat.rigid import enumerate_maximal_rigid, maximal_rigid_objects, tau_rigid
from tubecat.tube import (
    Indec,
    ext1_cluster,
    has_D_endomorphism,
    hom_tube,
    hom_tube_oracle,
    indecomposables_up_to,
    tau,
)

CHECK_NAMES = (
    "oracle",
    "rigid",
    "endo",
    "gentle",
    "strings",
    "hom-functor",
    "converse",
)


@dataclass(frozen=True)
class Outcome:
    check: str
    rank: int
    ok: bool
    detail: str
    subject: str | None = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        subject = f" T={self.subject}" if self.subject else ""
        return f"{status} n={self.rank} {self.check}{subject}: {self.detail}"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "rank": self.rank,
            "ok": self.ok,
            "detail": self.detail,
            "subject": self.subject,
            "seconds": round(self.seconds, 4),
        }


@dataclass
class SuiteReport:
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def extend(self, outcomes):
        self.outcomes.extend(outcomes)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [o.to_json() for o in self.outcomes],
        }


def _timed(check, rank, detail_ok, predicate, subject=None):
    start = time.perf_counter()
    try:
        ok, detail = predicate()
    except Exception as exc:  # surfaced as a failing outcome, not a crash
        ok, detail = False, f"error: {exc}"
    if ok and detail is None:
        detail = detail_ok
    return Outcome(check, rank, ok, detail, subject, time.perf_counter() - start)


# --- individual checks -------------------------------------------------------


def check_oracle(n: int, ql_cap: int | None = None, seed: int = 0) -> list[Outcome]:
    """Closed-form Hom counts against the linear-algebra oracle, plus the
    calibration contracts and the boundary facts they pin down."""
    cap = ql_cap or 3 * n

    def agreement():
        xs = list(indecomposables_up_to(n, cap))
        bad = 0
        first = ""
        for x in xs:
            for y in xs:
                if hom_tube(x, y) != hom_tube_oracle(x, y):
                    bad += 1
                    if not first:
                        first = f"{x}->{y}"
        pairs = len(xs) ** 2
        if bad:
            return False, f"{bad}/{pairs} disagreements, first at {first}"
        return True, f"{pairs} pairs agree exactly"

    def calibration():
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                x = Indec(n, a, b)
                if hom_tube_oracle(x, Indec(n, a, b + 1)) != 1:
                    return False, f"ray map at {x}"
                if b >= 2 and hom_tube_oracle(x, Indec(n, a + 1, b - 1)) != 1:
                    return False, f"coray map at {x}"
                if b <= n - 1 and hom_tube_oracle(x, Indec(n, a - 1, b)) != 0:
                    return False, f"translate of {x} receives a map"
        return True, "ray, coray and translate contracts hold"

    def boundary():
        for x in indecomposables_up_to(n, cap):
            rigid = hom_tube(x, tau(x, 1)) == 0
            if rigid != (x.ql <= n - 1):
                return False, f"rigidity boundary fails at {x}"
            if has_D_endomorphism(x) != (x.ql >= n - 1):
                return False, f"shifted-endomorphism boundary fails at {x}"
            if x.ql <= n:
                for y in indecomposables_up_to(n, n):
                    if hom_tube(x, y) > 1:
                        return False, f"multi-dimensional Hom at {x}->{y}"
        return True, "rigidity and endomorphism boundaries match quasilength"

    def symmetry():
        rng = random.Random(seed)
        for _ in range(100):
            x = Indec(n, rng.randint(1, n), rng.randint(1, cap))
            y = Indec(n, rng.randint(1, n), rng.randint(1, cap))
            if ext1_cluster(x, y) != ext1_cluster(y, x):
                return False, f"asymmetric extension space at {x}, {y}"
        return True, "100 sampled extension spaces are symmetric"

    return [
        _timed("oracle", n, "", agreement),
        _timed("oracle", n, "", calibration),
        _timed("oracle", n, "", boundary),
        _timed("oracle", n, "", symmetry),
    ]


def check_rigid(n: int) -> list[Outcome]:
    def count():
        structured = enumerate_maximal_rigid(n, "structured")
        brute = enumerate_maximal_rigid(n, "brute")
        expected = n * comb(2 * (n - 1), n - 1) // n
        if structured != brute:
            return False, "enumeration routes disagree"
        if len(structured) != expected:
            return False, f"{len(structured)} objects, expected {expected}"
        return True, f"{expected} objects, both routes identical"

    return [_timed("rigid", n, "", count)]


def check_endo(n: int) -> list[Outcome]:
    out = []
    for t in maximal_rigid_objects(n):
        def one(t=t):
            lam = cached_endomorphism_algebra(t)
            rep = cartan_check(t, lam)
            if not rep.ok:
                return False, f"path/Hom mismatch at {rep.mismatches[:3]}"
            bare, loop_vertex = loopless_quiver(lam)
            rec = is_cluster_tilted_A(bare)
            if not rec:
                return False, f"recognizer: {rec.witness}"
            if loop_vertex not in connecting_vertices(bare):
                return False, f"loop at non-connecting vertex {loop_vertex}"
            return True, f"dimension {rep.total_paths}, loop at {loop_vertex}"

        out.append(_timed("endo", n, "", one, subject=str(t)))
    return out


def check_gentle(n: int) -> list[Outcome]:
    out = []
    for t in maximal_rigid_objects(n):
        def one(t=t):
            lam = cached_endomorphism_algebra(t)
            g = is_gentle(lam)
            if not g:
                return False, f"not gentle: {g.witness}"
            mismatch = not st.projectives_match_injectives(lam)
            rep = gorenstein_bound(lam, not_self_injective=mismatch)
            expected = 0 if n == 2 else 1
            if rep.dimension != expected:
                return False, f"dimension {rep.dimension}, expected {expected}"
            if n >= 3 and rep.gentle_arrows and rep.n_g != 1:
                return False, f"critical bound {rep.n_g} with gentle arrows"
            return True, f"gentle, dimension {rep.dimension} (n_g={rep.n_g})"

        out.append(_timed("gentle", n, "", one, subject=str(t)))
    return out


def check_strings(n: int) -> list[Outcome]:
    expected = (3 * n * n - 5 * n + 2) // 2
    out = []
    for t in maximal_rigid_objects(n):
        def one(t=t):
            lam = cached_endomorphism_algebra(t)
            enum = st.enumerate_strings(lam)
            if enum.bands:
                return False, f"band detected: {enum.bands[0]}"
            if len(enum.strings) != expected:
                return False, f"{len(enum.strings)} strings, expected {expected}"
            return True, f"count={len(enum.strings)}, no bands"

        out.append(_timed("strings", n, "", one, subject=str(t)))
    return out


def check_hom_functor(n: int, ql_cap: int | None = None) -> list[Outcome]:
    out = []
    for t in maximal_rigid_objects(n):
        def one(t=t):
            rep = verify_hom_functor(t, ql_cap)
            if not rep.ok:
                issues = []
                if rep.dimension_failures:
                    issues.append(f"{len(rep.dimension_failures)} dimension mismatches")
                if not rep.bijection_ok:
                    issues.append("string bijection fails")
                if not rep.domain_size_ok:
                    issues.append("domain count off")
                if rep.locus_failures:
                    issues.append(f"vanishing locus: {rep.locus_failures[0]}")
                return False, "; ".join(issues)
            return True, f"bijection onto {rep.expected_count} strings, dimensions match"

        out.append(_timed("hom-functor", n, "", one, subject=str(t)))
    return out


def check_converse(n: int) -> list[Outcome]:
    """Group objects by the isomorphism class of (loopless quiver, loop
    vertex); every class must contain exactly n objects forming one
    translate orbit, and every connecting vertex of every class quiver must
    be realized by some class."""

    def run():
        classes: list[tuple] = []  # (quiver, loop vertex, members)
        for t in maximal_rigid_objects(n):
            bare, lv = loopless_quiver(cached_endomorphism_algebra(t))
            for quiver, vertex, members in classes:
                if find_isomorphism(bare, quiver, pin=(lv, vertex)) is not None:
                    members.append(t)
                    break
            else:
                classes.append((bare, lv, [t]))

        for quiver, vertex, members in classes:
            if len(members) != n:
                return False, f"class at vertex {vertex} has {len(members)} objects"
            orbit = set()
            current = members[0]
            for _ in range(n):
                orbit.add(current)
                current = tau_rigid(current, 1)
            if orbit != set(members):
                return False, f"class at vertex {vertex} is not one translate orbit"

        # every connecting vertex of every arising quiver is realized
        for quiver, _, _ in classes:
            for c in connecting_vertices(quiver):
                if not any(
                    find_isomorphism(quiver, q2, pin=(c, v2)) is not None
                    for q2, v2, _ in classes
                ):
                    return False, f"connecting vertex {c} of a class quiver unrealized"
        return True, f"{len(classes)} classes, each a full translate orbit"

    return [_timed("converse", n, "", run)]


_CHECK_FUNCTIONS = {
    "oracle": lambda n, cap, seed: check_oracle(n, cap, seed),
    "rigid": lambda n, cap, seed: check_rigid(n),
    "endo": lambda n, cap, seed: check_endo(n),
    "gentle": lambda n, cap, seed: check_gentle(n),
    "strings": lambda n, cap, seed: check_strings(n),
    "hom-functor": lambda n, cap, seed: check_hom_functor(n, cap),
    "converse": lambda n, cap, seed: check_converse(n),
}


def run_suite(
    ranks,
    only: str | None = None,
    ql_cap: int | None = None,
    seed: int = 0,
) -> SuiteReport:
    names = [only] if only else list(CHECK_NAMES)
    for name in names:
        if name not in _CHECK_FUNCTIONS:
            raise ValueError(f"unknown check {name!r}; choose from {CHECK_NAMES}")
    report = SuiteReport()
    for n in ranks:
        for name in names:
            report.extend(_CHECK_FUNCTIONS[name](n, ql_cap, seed))
    return report
