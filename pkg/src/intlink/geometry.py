"""Exact linear geometry over the rationals.

A vertex-linear map into R^d is nothing but an assignment of coordinates to
vertex labels; simplices map to convex hulls of their vertex images.  Every
predicate below is decided exactly: coordinates are `fractions.Fraction`
values, and linear systems are solved by fraction-free (Bareiss) elimination
on integer matrices obtained by clearing denominators row by row.  There is
no floating-point code path and no epsilon anywhere.

Degenerate configurations (singular systems, intersections on simplex
boundaries) are reported as such and left to the caller to resample; they are
never perturbed.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DegeneracyError, PreconditionError, SamplingError

_M64 = (1 << 64) - 1


def mix_seed(*parts):
    """Stable integer seed mixer (independent of PYTHONHASHSEED)."""
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h ^= (int(p) & _M64) + 0x9E3779B97F4A7C15 + ((h << 6) & _M64) + (h >> 2)
        h &= _M64
    return h


# -- integer fraction-free elimination --------------------------------------


def _cleared_rows(rows):
    """Scale each row of fractions by a positive integer to make it integral."""
    out = []
    for row in rows:
        scale = 1
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def _bareiss_rank(mat):
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            fi = m[i][col]
            row_i = m[i]
            row_r = m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * pivot - fi * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _bareiss_solve(mat, rhs):
    """Solve a square integer system exactly; None if the matrix is singular."""
    n = len(mat)
    m = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    prev = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pivot = m[col][col]
        for i in range(col + 1, n):
            fi = m[i][col]
            row_i = m[i]
            row_c = m[col]
            for j in range(col + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - fi * row_c[j]) // prev
            row_i[col] = 0
        prev = pivot
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * sol[j]
        sol[i] = acc / m[i][i]
    return sol


def affine_rank(points):
    """Rank of the homogenized point matrix: affine-hull dimension plus one."""
    pts = list(points)
    if not pts:
        raise ValueError("empty point list")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    rows = _cleared_rows([[Fraction(1)] + [Fraction(x) for x in p] for p in pts])
    return _bareiss_rank(rows)


def _affinely_independent(points):
    return affine_rank(points) == len(points)


# -- point configurations ----------------------------------------------------


class PointConfig:
    """Exact rational coordinates for labelled vertices: a vertex-linear map.

    Immutable; label order is preserved for deterministic serialization.
    `seed` records how the configuration was produced (None means manual),
    which ends up in report fingerprints.
    """

    __slots__ = ("d", "labels", "_coords", "seed")

    def __init__(self, d, items, seed=None):
        self.d = int(d)
        labels = []
        coords = {}
        for label, point in items:
            pt = tuple(Fraction(x) for x in point)
            if len(pt) != self.d:
                raise ValueError(f"point for {label} has length {len(pt)}, not {self.d}")
            if label in coords:
                raise ValueError(f"duplicate label {label}")
            labels.append(label)
            coords[label] = pt
        self.labels = tuple(labels)
        self._coords = coords
        self.seed = seed

    def point(self, label):
        return self._coords[label]

    def points(self, labels):
        return [self._coords[lab] for lab in labels]

    def has(self, label):
        return label in self._coords

    def items(self):
        return [(lab, self._coords[lab]) for lab in self.labels]

    def restrict(self, labels):
        return PointConfig(self.d, [(lab, self._coords[lab]) for lab in labels], seed=self.seed)

    def serialize(self):
        seed = "manual" if self.seed is None else str(self.seed)
        lines = [f"config d={self.d} seed={seed}"]
        for lab in self.labels:
            lines.append(lab + " " + " ".join(str(x) for x in self._coords[lab]))
        return "\n".join(lines) + "\n"

    def fingerprint(self):
        return hashlib.sha256(self.serialize().encode("utf-8")).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, PointConfig):
            return NotImplemented
        return (
            self.d == other.d
            and self.labels == other.labels
            and self._coords == other._coords
            and self.seed == other.seed
        )

    def __hash__(self):
        return hash((self.d, self.labels, tuple(self._coords[k] for k in self.labels)))

    def __repr__(self):
        return f"PointConfig(d={self.d}, {len(self.labels)} points, seed={self.seed})"


def parse_config(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("config "):
        raise ValueError("missing 'config d=<d> seed=<seed>' header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    d = int(fields["d"])
    seed = None if fields.get("seed", "manual") == "manual" else int(fields["seed"])
    items = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != d + 1:
            raise ValueError(f"expected label plus {d} coordinates: {ln!r}")
        items.append((toks[0], tuple(Fraction(t) for t in toks[1:])))
    return PointConfig(d, items, seed=seed)


def write_config(cfg, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cfg.serialize())


def read_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


# -- general position --------------------------------------------------------


def in_general_position(cfg, labels=None):
    """Check that every subset of at most d+1 configured points is affinely
    independent.  Returns (True, None) or (False, first violating subset),
    scanning subsets in (size, lexicographic) order so the reported violation
    is minimal.
    """
    labels = list(labels if labels is not None else cfg.labels)
    pts = cfg.points(labels)
    top = min(cfg.d + 1, len(pts))
    for size in range(2, top + 1):
        for combo in combinations(range(len(pts)), size):
            if not _affinely_independent([pts[i] for i in combo]):
                return False, tuple(labels[i] for i in combo)
    return True, None


def _gp_fast(points, d):
    """Boolean-only general position test.

    Checking all (d+1)-subsets suffices: an affinely dependent small subset
    stays dependent inside any superset.
    """
    n = len(points)
    size = min(d + 1, n)
    if size < 2:
        return True
    for combo in combinations(range(n), size):
        if not _affinely_independent([points[i] for i in combo]):
            return False
    return True


def sample_config(seed, d, labels, bound):
    """Deterministic integer coordinates in [-bound, bound], resampled wholesale
    until the configuration is in general position (budget 1024 attempts)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    labels = list(labels)
    rng = random.Random(seed)
    for _ in range(1024):
        pts = [
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
            for _ in labels
        ]
        if _gp_fast(pts, d):
            return PointConfig(d, zip(labels, pts), seed=seed)
    raise SamplingError(
        f"no general-position sample in 1024 attempts (d={d}, {len(labels)} points, "
        f"bound={bound}); try a larger bound"
    )


# -- simplex-pair intersection ------------------------------------------------


@dataclass(frozen=True)
class IntersectionResult:
    """Outcome of intersecting two simplex images of complementary dimension.

    kind "interior": unique transversal point in both open simplices, with
    strictly positive barycentric coordinates on each side.
    kind "empty": the closed simplices are disjoint.
    kind "degenerate": singular system or boundary contact; not generic.
    """

    kind: str
    bary_first: tuple = None
    bary_second: tuple = None
    point: tuple = None
    reason: str = None

    @property
    def is_interior(self):
        return self.kind == "interior"


def intersect_point_simplices(pts_first, pts_second):
    """Intersect conv(pts_first) with conv(pts_second), dims summing to d.

    Solves sum(l_i u_i) = sum(m_j v_j), sum(l) = sum(m) = 1 exactly.  A unique
    solution with a negative coordinate means the affine hulls meet outside
    one of the simplices (empty); a zero coordinate or a singular system is a
    degeneracy.
    """
    d = len(pts_first[0])
    p1 = len(pts_first)
    p2 = len(pts_second)
    if (p1 - 1) + (p2 - 1) != d:
        raise ValueError(f"dimensions {p1 - 1} + {p2 - 1} do not sum to d={d}")
    rows = []
    rhs = []
    for r in range(d):
        rows.append([u[r] for u in pts_first] + [-v[r] for v in pts_second])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * p1 + [Fraction(0)] * p2)
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * p1 + [Fraction(1)] * p2)
    rhs.append(Fraction(1))
    cleared = _cleared_rows([row + [rhs[i]] for i, row in enumerate(rows)])
    sol = _bareiss_solve([row[:-1] for row in cleared], [row[-1] for row in cleared])
    if sol is None:
        return IntersectionResult("degenerate", reason="singular system")
    lam = tuple(sol[:p1])
    mu = tuple(sol[p1:])
    if any(x < 0 for x in sol):
        return IntersectionResult("empty")
    if any(x == 0 for x in sol):
        return IntersectionResult("degenerate", reason="boundary contact")
    point = tuple(
        sum(lam[i] * pts_first[i][r] for i in range(p1)) for r in range(d)
    )
    check = tuple(
        sum(mu[j] * pts_second[j][r] for j in range(p2)) for r in range(d)
    )
    assert point == check
    return IntersectionResult("interior", bary_first=lam, bary_second=mu, point=point)


def pair_intersection(s_labels, t_labels, cfg):
    """Intersection of two vertex-disjoint simplex images under cfg."""
    s_labels = tuple(s_labels)
    t_labels = tuple(t_labels)
    if set(s_labels) & set(t_labels):
        raise ValueError(f"simplices share vertices: {s_labels} vs {t_labels}")
    return intersect_point_simplices(cfg.points(s_labels), cfg.points(t_labels))


def iter_complementary_pairs(K, cfg):
    """All unordered vertex-disjoint simplex pairs with dims summing to cfg.d,
    in lexicographic order, with their intersection results."""
    d = cfg.d
    for p in range(d // 2 + 1):
        q = d - p
        if q > K.dim or p > K.dim:
            continue
        if p == q:
            pairs = combinations(K.simplices(p), 2)
        else:
            pairs = ((s, t) for s in K.simplices(p) for t in K.simplices(q))
        for s, t in pairs:
            if set(s) & set(t):
                continue
            res = pair_intersection(K.to_labels(s), K.to_labels(t), cfg)
            yield K.to_labels(s), K.to_labels(t), res


def double_point_set(K, cfg):
    """All vertex-disjoint top-pair crossings of the vertex-linear image.

    Requires cfg in general position over K's vertices (checked by callers);
    under general position every pair meets in at most one interior point.
    Raises DegeneracyError naming the first degenerate pair, if any.
    """
    out = []
    for s, t, res in iter_complementary_pairs(K, cfg):
        if res.kind == "degenerate":
            raise DegeneracyError(
                f"degenerate intersection ({res.reason}) between {s} and {t}",
                context=(s, t),
            )
        if res.is_interior:
            out.append((s, t, res))
    return out


def is_linear_embedding(K, cfg):
    """True iff the vertex-linear map has no double points at all.

    Under general position any two simplices with at most d+1 distinct
    vertices between them have affinely independent images and meet exactly
    in their shared face, so only vertex-disjoint pairs of complementary
    dimension can cross; those are exactly what double_point_set checks.
    """
    if 2 * K.dim > cfg.d:
        raise ValueError(f"complex of dimension {K.dim} needs ambient d >= {2 * K.dim}")
    if not _gp_fast(cfg.points(K.labels), cfg.d):
        raise PreconditionError("configuration is not in general position")
    return not double_point_set(K, cfg)


# -- Z2-linking via coning -----------------------------------------------------


def _apex_bound(points):
    m = 0
    for pt in points:
        for x in pt:
            m = max(m, math.ceil(abs(x)))
    return 2 * m + 3


def _cone_parity(apex, tops_first, tops_second):
    """Parity of intersections between the cone over the first sphere and the
    top simplices of the second; None on any degeneracy."""
    total = 0
    for pts_s in tops_first:
        if apex in pts_s:
            # The cone facet through a vertex the apex sits on is flat
            # (affine hull of fewer than d/2+1 points) and, in general
            # position, misses every disjoint simplex; skip it.
            continue
        cone = [apex] + pts_s
        for pts_t in tops_second:
            res = intersect_point_simplices(cone, pts_t)
            if res.kind == "degenerate":
                return None
            total ^= 1 if res.is_interior else 0
    return total


def lk2(gamma, gamma_prime, cfg, apex=None, apex_seed=0, budget=64):
    """Z2-linking number of two disjoint sphere images, dims p + q = d - 1.

    Cones the first sphere from an apex point: the cone is a (p+1)-disk
    bounded by the sphere, and the parity of its transversal intersections
    with the second sphere is the linking number.  The apex is sampled
    deterministically from `apex_seed` and resampled on degeneracy, up to
    `budget` attempts; a supplied apex is never resampled.
    """
    g = getattr(gamma, "subcomplex", gamma)
    h = getattr(gamma_prime, "subcomplex", gamma_prime)
    p, q, d = g.dim, h.dim, cfg.d
    if p + q != d - 1:
        raise ValueError(f"sphere dimensions {p} + {q} must sum to d-1 = {d - 1}")
    shared = set(g.labels) & set(h.labels)
    if shared:
        raise ValueError(f"spheres share vertices: {sorted(shared)}")
    tops_g = [cfg.points(g.to_labels(s)) for s in g.simplices(p)]
    tops_h = [cfg.points(h.to_labels(t)) for t in h.simplices(q)]
    if apex is not None:
        apex = tuple(Fraction(x) for x in apex)
        bit = _cone_parity(apex, tops_g, tops_h)
        if bit is None:
            raise DegeneracyError("supplied apex gives a degenerate cone", context=apex)
        return bit
    rng = random.Random(apex_seed)
    bound = _apex_bound(cfg.points(list(g.labels) + list(h.labels)))
    for _ in range(budget):
        candidate = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
        bit = _cone_parity(candidate, tops_g, tops_h)
        if bit is not None:
            return bit
    raise DegeneracyError(f"no generic apex found in {budget} attempts")
