"""Shipped coordinate fixtures and their self-verification.

Two master drawings realize the parent complexes in the plane with exactly
one crossing each, found by randomized search and verified exactly:

* the complete graph on a0..a4 with its single crossing between edges a0a1
  and a2a3;
* the complete bipartite 3+3 join with its single crossing between edges
  a0^0 a0^1 and a1^0 a1^1.

Restricting a master drawing to N1, N2 or N3 removes the crossing edge, so
the restriction is an embedding, and the surviving crossing partner forces
exactly one linked sphere pair.  Deleting one more maximal simplex kills
that pair, which is what the minimality cases check.  A convex-position
drawing of the complete graph on five vertices (five crossings) rounds out
the set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import remove_top_simplices, skeleton_complex, standard_complex
from .errors import DegeneracyError
from .geometry import PointConfig, double_point_set, in_general_position
from .spheres import canonical_pairs
from .verify import extension_crosscheck, linking_parity_audit, linkless_verify

K5_ONE_CROSSING = (
    ("a0", (5, -5)),
    ("a1", (4, -8)),
    ("a2", (2, 4)),
    ("a3", (5, -6)),
    ("a4", (8, -3)),
)

K33_ONE_CROSSING = (
    ("a0^0", (-8, 9)),
    ("a1^0", (1, -5)),
    ("a2^0", (6, 5)),
    ("a0^1", (-1, 0)),
    ("a1^1", (-4, 6)),
    ("a2^1", (1, -6)),
)

K5_PENTAGON = (
    ("a0", (1, 8)),
    ("a1", (-9, 2)),
    ("a2", (-2, -5)),
    ("a3", (5, -6)),
    ("a4", (8, 2)),
)

FIXTURE_FILES = {
    "k5_one_crossing.pts": K5_ONE_CROSSING,
    "k33_one_crossing.pts": K33_ONE_CROSSING,
    "k5_pentagon.pts": K5_PENTAGON,
}


def k5_one_crossing():
    return PointConfig(2, K5_ONE_CROSSING)


def k33_one_crossing():
    return PointConfig(2, K33_ONE_CROSSING)


def pentagon():
    return PointConfig(2, K5_PENTAGON)


def audit_fixture(name):
    """The shipped embedding fixture for N1, N2 or N3 at n = 1."""
    if name in ("N1", "N3"):
        return k5_one_crossing()
    if name == "N2":
        return k33_one_crossing()
    raise ValueError(f"no audit fixture for {name!r}")


@dataclass(frozen=True)
class MinimalityCase:
    """One maximal proper subcomplex together with its link-trivial drawing."""

    name: str
    parent: str
    deleted: tuple
    config: PointConfig

    def complex(self):
        K = standard_complex(self.parent, 1)
        return remove_top_simplices(K, [self.deleted])


def minimality_cases():
    """The deletion cases under which the restricted master drawings become
    link-trivial: the isolated vertex or the crossing-partner edge for N1 and
    N2, and either edge of the surviving linked triangle for N3."""
    k5 = k5_one_crossing()
    k33 = k33_one_crossing()
    return (
        MinimalityCase("N1-minus-a0", "N1", ("a0",), k5),
        MinimalityCase("N1-minus-a2a3", "N1", ("a2", "a3"), k5),
        MinimalityCase("N2-minus-a0^0", "N2", ("a0^0",), k33),
        MinimalityCase("N2-minus-a1^0a1^1", "N2", ("a1^0", "a1^1"), k33),
        MinimalityCase("N3-minus-a3a4", "N3", ("a3", "a4"), k5),
        MinimalityCase("N3-minus-a2a3", "N3", ("a2", "a3"), k5),
    )


_EXPECTED_CROSSING = {
    "k5": (("a0", "a1"), ("a2", "a3")),
    "k33": (("a0^0", "a0^1"), ("a1^0", "a1^1")),
}

_LINKED_ZERO_SPHERE = {"N1": ("a0", "a1"), "N3": ("a0", "a1"), "N2": ("a0^0", "a0^1")}


def expected_link_index(name):
    """Index, within canonical_pairs(name, 1), of the one pair the master
    drawing links: the pair whose small sphere is the crossing edge's
    boundary."""
    tops = tuple((v,) for v in _LINKED_ZERO_SPHERE[name])
    for i, pair in enumerate(canonical_pairs(name, 1)):
        if pair.gamma.key()[1] == tops:
            return i
    raise AssertionError(f"canonical pair list for {name} lacks the master link")


def _check(checks, name, ok, detail=""):
    checks.append((name, bool(ok), detail))


def selftest():
    """Re-verify every shipped fixture property; returns (all_ok, checks)."""
    checks = []
    k5 = k5_one_crossing()
    k33 = k33_one_crossing()
    pent = pentagon()

    for label, cfg in [("k5", k5), ("k33", k33), ("pentagon", pent)]:
        ok, bad = in_general_position(cfg)
        _check(checks, f"{label} general position", ok, detail=str(bad or ""))

    K5 = skeleton_complex(4, 1)
    K33 = standard_complex("JOIN3", 1)
    for label, K, cfg in [("k5", K5, k5), ("k33", K33, k33)]:
        try:
            crossings = [(s, t) for s, t, _ in double_point_set(K, cfg)]
            ok = crossings == [_EXPECTED_CROSSING[label]]
            _check(checks, f"{label} single crossing", ok, detail=str(crossings))
        except DegeneracyError as exc:
            _check(checks, f"{label} single crossing", False, detail=str(exc))

    try:
        crossings = double_point_set(K5, pent)
        _check(
            checks,
            "pentagon five crossings",
            len(crossings) == 5,
            detail=f"{len(crossings)} crossings",
        )
    except DegeneracyError as exc:
        _check(checks, "pentagon five crossings", False, detail=str(exc))

    for name in ("N1", "N2", "N3"):
        cfg = audit_fixture(name)
        try:
            rep = linking_parity_audit(name, 1, cfg, seed=11)
            pairs = canonical_pairs(name, 1)
            ok = (
                rep.status == "PASS"
                and rep.witnesses == [expected_link_index(name)]
                and len(rep.pairs) == len(pairs)
            )
            _check(
                checks,
                f"{name} audit single witness",
                ok,
                detail=f"status={rep.status} witnesses={rep.witnesses}",
            )
            _check(
                checks,
                f"{name} extension crosscheck",
                extension_crosscheck(name, 1, cfg, seed=3),
            )
        except DegeneracyError as exc:
            _check(checks, f"{name} audit single witness", False, detail=str(exc))

    for case in minimality_cases():
        ok = linkless_verify(case.complex(), 1, case.config, seed=5)
        _check(checks, f"{case.name} link-trivial", ok)

    for name in ("N1", "N2", "N3"):
        K = standard_complex(name, 1)
        ok = not linkless_verify(K, 1, audit_fixture(name), seed=5)
        _check(checks, f"{name} full complex not link-trivial", ok)

    all_ok = all(ok for _, ok, _ in checks)
    return all_ok, checks
