"""Sphere subcomplexes and disjoint sphere pairs.

Spheres of dimension 0, 1, 2 are recognized combinatorially (two points; a
single cycle; a closed surface with Euler characteristic 2).  Above dimension
2 no recognition is attempted: higher spheres enter only through certified
shapes, either the boundary of a simplex or a join of 2-point factors, whose
structure is validated directly.

Two enumeration routes exist on purpose.  `canonical_families` builds the
structured families attached to the N1/N2/N3 constructions, while
`enumerate_sphere_pairs` searches all subcomplexes blindly; agreement of the
two routes at small n is one of the package's acceptance checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .complexes import SimplicialComplex, boundary_complex, label_sort_key
from .errors import UnsupportedDimensionError, UnsupportedSizeError

ENUMERATION_BUDGET = 1 << 25


# -- witness shapes ----------------------------------------------------------


@dataclass(frozen=True)
class BoundaryOfSimplex:
    """The sphere is the boundary of the full simplex on `simplex`."""

    simplex: tuple

    def __str__(self):
        return "bd(" + " ".join(self.simplex) + ")"


@dataclass(frozen=True)
class JoinOfPointPairs:
    """The sphere is the join of the listed 2-point factors."""

    pairs: tuple

    def __str__(self):
        return "join(" + " | ".join(" ".join(p) for p in self.pairs) + ")"


@dataclass(frozen=True)
class Recognized:
    """Recognized combinatorially, with no more specific structure."""

    def __str__(self):
        return "recognized"


def join_of_pairs_complex(pairs):
    """Join of 2-point factors: simplices pick at most one vertex per factor."""
    labels = sorted((v for pair in pairs for v in pair), key=label_sort_key)
    maximal = product(*[list(p) for p in pairs])
    return SimplicialComplex(labels, maximal)


@dataclass(frozen=True)
class SphereWitness:
    """A subcomplex certified to be a sphere of the stated dimension."""

    subcomplex: SimplicialComplex
    dim: int
    shape: object

    def __post_init__(self):
        if isinstance(self.shape, BoundaryOfSimplex):
            if self.subcomplex != boundary_complex(self.shape.simplex):
                raise ValueError("subcomplex does not match its boundary-of-simplex shape")
        elif isinstance(self.shape, JoinOfPointPairs):
            if self.subcomplex != join_of_pairs_complex(self.shape.pairs):
                raise ValueError("subcomplex does not match its join-of-pairs shape")
        elif self.dim <= 2:
            if not recognize_sphere(self.subcomplex, self.dim):
                raise ValueError(f"subcomplex is not a {self.dim}-sphere")
        else:
            raise ValueError("spheres above dimension 2 need a certified shape")

    def key(self):
        tops = tuple(
            sorted(self.subcomplex.to_labels(s) for s in self.subcomplex.simplices(self.dim))
        )
        return (self.dim, tops)

    def facet_strings(self):
        return [" ".join(self.subcomplex.to_labels(s))
                for s in self.subcomplex.simplices(self.dim)]

    def __str__(self):
        return "{" + "; ".join(self.facet_strings()) + "}"


@dataclass(frozen=True)
class LinkPair:
    """An unordered pair of vertex-disjoint sphere subcomplexes."""

    gamma: SphereWitness
    gamma_prime: SphereWitness

    def __post_init__(self):
        if set(self.gamma.subcomplex.labels) & set(self.gamma_prime.subcomplex.labels):
            raise ValueError("sphere pair is not vertex-disjoint")

    def key(self):
        return tuple(sorted((self.gamma.key(), self.gamma_prime.key())))


# -- recognition ---------------------------------------------------------------


def recognize_sphere(C, d):
    """Combinatorial sphere test for d in {0, 1, 2}.

    d=0: exactly two isolated vertices.
    d=1: a single cycle (pure 1-dimensional, connected, all degrees 2).
    d=2: a closed surface (pure 2-dimensional, every edge in exactly two
         triangles, every vertex link a single cycle, connected) with Euler
         characteristic 2.
    """
    if d not in (0, 1, 2):
        raise UnsupportedDimensionError(f"sphere recognition implemented for d <= 2, got {d}")
    if C.num_vertices() == 0:
        raise ValueError("empty complex")
    if d == 0:
        return C.f_vector() == (2,)
    if C.dim != d:
        return False
    if d == 1:
        verts = range(C.num_vertices())
        deg = {v: 0 for v in verts}
        for e in C.simplices(1):
            deg[e[0]] += 1
            deg[e[1]] += 1
        if any(deg[v] != 2 for v in verts):
            return False
        return _connected(C.num_vertices(), C.simplices(1))
    # d == 2
    edge_tris = {}
    for t in C.simplices(2):
        for e in combinations(t, 2):
            edge_tris.setdefault(e, []).append(t)
    if set(edge_tris) != set(C.simplices(1)):
        return False
    if any(len(ts) != 2 for ts in edge_tris.values()):
        return False
    for v in range(C.num_vertices()):
        link_edges = [tuple(x for x in t if x != v) for t in C.simplices(2) if v in t]
        if not link_edges:
            return False
        link_verts = {x for e in link_edges for x in e}
        deg = {x: 0 for x in link_verts}
        for e in link_edges:
            deg[e[0]] += 1
            deg[e[1]] += 1
        if any(c != 2 for c in deg.values()):
            return False
        if not _connected_on(link_verts, link_edges):
            return False
    fv = C.f_vector()
    if fv[0] - fv[1] + fv[2] != 2:
        return False
    return _connected(C.num_vertices(), C.simplices(1))


def _connected(n, edges):
    return _connected_on(range(n), edges)


def _connected_on(verts, edges):
    verts = set(verts)
    if not verts:
        return False
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    stack = [next(iter(sorted(verts)))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v] - seen)
    return seen == verts


# -- canonical families ---------------------------------------------------------


def _boundary_witness(simplex_labels):
    labels = tuple(sorted(simplex_labels, key=label_sort_key))
    return SphereWitness(
        subcomplex=boundary_complex(labels),
        dim=len(labels) - 2,
        shape=BoundaryOfSimplex(labels),
    )


def _join_witness(pairs):
    pairs = tuple(tuple(sorted(p, key=label_sort_key)) for p in pairs)
    return SphereWitness(
        subcomplex=join_of_pairs_complex(pairs),
        dim=len(pairs) - 1,
        shape=JoinOfPointPairs(pairs),
    )


def canonical_families(name, n):
    """The structured ((n-1)-sphere family, n-sphere family) for N1/N2/N3.

    N1: boundaries of the deleted n-simplices through a0, and boundaries of
        (n+1)-simplices avoiding a0.
    N2: boundaries of the deleted n-simplices through a0^0, and joins of one
        2-point set per factor with factor 0 fixed to {a1^0, a2^0}.
    N3: boundaries of the n-simplices inside |a0 .. a{n+1}|, and boundaries
        of (n+1)-simplices meeting |a0 .. a{n+1}| in a single vertex.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if name == "N1":
        others = [f"a{i}" for i in range(1, 2 * n + 3)]
        low = [tuple(sorted(["a0"] + list(c), key=label_sort_key))
               for c in combinations(others, n)]
        high = list(combinations(others, n + 2))
    elif name == "N2":
        factors = [[f"a{j}^{i}" for j in range(3)] for i in range(n + 1)]
        low = [
            tuple(["a0^0"] + list(pick))
            for pick in product(*factors[1:])
        ]
        joins = [
            (("a1^0", "a2^0"),) + tuple(pairs)
            for pairs in product(*[list(combinations(f, 2)) for f in factors[1:]])
        ]
    elif name == "N3":
        lowverts = [f"a{i}" for i in range(n + 2)]
        highverts = [f"a{i}" for i in range(n + 2, 2 * n + 3)]
        low = list(combinations(lowverts, n + 1))
        high = [tuple(sorted([v] + highverts, key=label_sort_key)) for v in lowverts]
    else:
        raise ValueError(f"canonical families exist for N1, N2, N3; got {name!r}")
    gammas = sorted((_boundary_witness(s) for s in low), key=SphereWitness.key)
    if name == "N2":
        gammas_prime = sorted((_join_witness(ps) for ps in joins), key=SphereWitness.key)
    else:
        gammas_prime = sorted((_boundary_witness(t) for t in high), key=SphereWitness.key)
    return tuple(gammas), tuple(gammas_prime)


def canonical_pairs(name, n):
    """All vertex-disjoint pairs between the two canonical families.

    For N1 and N2 this is the whole set of disjoint ((n-1)-sphere, n-sphere)
    pairs of the complex; for N3 it is the distinguished subfamily that the
    parity audit sums over.
    """
    gammas, gammas_prime = canonical_families(name, n)
    pairs = []
    for g in gammas:
        gv = set(g.subcomplex.labels)
        for h in gammas_prime:
            if gv & set(h.subcomplex.labels):
                continue
            pairs.append(LinkPair(gamma=g, gamma_prime=h))
    return tuple(sorted(pairs, key=LinkPair.key))


# -- blind enumeration ----------------------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise UnsupportedSizeError(
                f"sphere-pair enumeration exceeded {ENUMERATION_BUDGET} search nodes"
            )


def _classify(sub, d):
    verts = sub.labels
    tops = set(sub.simplices(d))
    if len(verts) == d + 2 and len(tops) == d + 2:
        return BoundaryOfSimplex(tuple(verts))
    if len(verts) == 2 * (d + 1):
        # Factor pairs are the unique non-cofaced vertex pairs.
        cofaced = set()
        for t in tops:
            cofaced.update(combinations(t, 2))
        partner = {}
        idx = range(len(verts))
        for v in idx:
            mates = [w for w in idx if w != v and tuple(sorted((v, w))) not in cofaced]
            if len(mates) != 1:
                return Recognized()
            partner[v] = mates[0]
        pairs = sorted({tuple(sorted((v, partner[v]))) for v in idx})
        if len(pairs) == d + 1 and len(tops) == 2 ** (d + 1):
            expected = {
                tuple(sorted(pick)) for pick in product(*[list(p) for p in pairs])
            }
            if expected == tops:
                label_pairs = tuple(
                    (verts[a], verts[b]) for a, b in pairs
                )
                return JoinOfPointPairs(label_pairs)
        return Recognized()
    return Recognized()


def _sphere_witness(sub, d):
    return SphereWitness(subcomplex=sub, dim=d, shape=_classify(sub, d))


def _zero_spheres(K):
    out = []
    for u, v in combinations(K.labels, 2):
        sub = SimplicialComplex([u, v], [(u,), (v,)])
        out.append(_sphere_witness(sub, 0))
    return out


def _cycles(K, max_vertices, budget):
    edges = K.simplices(1)
    n = K.num_vertices()
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    found = []
    path = []

    def dfs(v, start):
        budget.spend()
        for w in adj[v]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > start and w not in path and len(path) < max_vertices:
                path.append(w)
                dfs(w, start)
                path.pop()

    if max_vertices >= 3:
        for s in range(n):
            path[:] = [s]
            dfs(s, s)
    out = []
    for cyc in found:
        labels = [K.labels[v] for v in cyc]
        cyc_edges = [
            (labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels))
        ]
        sub = SimplicialComplex(sorted(labels, key=label_sort_key), cyc_edges)
        out.append(_sphere_witness(sub, 1))
    return out


def _closed_surfaces(K, max_vertices, budget):
    tris_all = K.simplices(2)
    out = []
    n = K.num_vertices()
    for size in range(4, max_vertices + 1):
        for W in combinations(range(n), size):
            Wset = set(W)
            tris = [t for t in tris_all if set(t) <= Wset]
            if len(tris) < size:
                continue
            per_vertex = {v: sum(1 for t in tris if v in t) for v in W}
            if any(c < 3 for c in per_vertex.values()):
                continue
            by_edge = {}
            for ti, t in enumerate(tris):
                for e in combinations(t, 2):
                    by_edge.setdefault(e, []).append(ti)
            out.extend(_surface_dfs(K, W, tris, by_edge, budget))
    return out


def _surface_dfs(K, W, tris, by_edge, budget):
    """All 2-sphere subcomplexes with vertex set exactly W, each found once
    (indexed from its lexicographically least triangle)."""
    results = []
    nt = len(tris)
    for start in range(nt):
        chosen = [start]
        counts = {e: 1 for e in combinations(tris[start], 2)}

        def open_edge():
            best = None
            for e, c in counts.items():
                if c == 1 and (best is None or e < best):
                    best = e
            return best

        def rec():
            budget.spend()
            e = open_edge()
            if e is None:
                verts = {v for ti in chosen for v in tris[ti]}
                if verts == set(W):
                    maximal = [K.to_labels(tris[ti]) for ti in chosen]
                    labels = sorted((K.labels[v] for v in verts), key=label_sort_key)
                    sub = SimplicialComplex(labels, maximal)
                    if recognize_sphere(sub, 2):
                        results.append(_sphere_witness(sub, 2))
                return
            for ti in by_edge.get(e, ()):
                if ti <= start or ti in chosen:
                    continue
                t_edges = list(combinations(tris[ti], 2))
                if any(counts.get(x, 0) >= 2 for x in t_edges):
                    continue
                chosen.append(ti)
                for x in t_edges:
                    counts[x] = counts.get(x, 0) + 1
                rec()
                chosen.pop()
                for x in t_edges:
                    counts[x] -= 1
                    if counts[x] == 0:
                        del counts[x]

        rec()
    return results


def enumerate_spheres(K, d, max_vertices=None, budget=None):
    """Every subcomplex of K homeomorphic to S^d on at most max_vertices
    vertices, for d in {0, 1, 2}."""
    if d not in (0, 1, 2):
        raise UnsupportedDimensionError(f"sphere enumeration implemented for d <= 2, got {d}")
    if budget is None:
        budget = _Budget(ENUMERATION_BUDGET)
    if max_vertices is None:
        max_vertices = K.num_vertices()
    if d == 0:
        return _zero_spheres(K)
    if d == 1:
        return _cycles(K, max_vertices, budget)
    return _closed_surfaces(K, max_vertices, budget)


def enumerate_sphere_pairs(K, p, q):
    """All unordered pairs of vertex-disjoint subcomplexes homeomorphic to
    S^p and S^q, by blind search; deterministic sorted order."""
    if p > q:
        p, q = q, p
    budget = _Budget(ENUMERATION_BUDGET)
    nv = K.num_vertices()
    spheres_p = enumerate_spheres(K, p, max_vertices=nv - (q + 2), budget=budget)
    spheres_q = enumerate_spheres(K, q, max_vertices=nv - (p + 2), budget=budget)
    pairs = []
    seen = set()
    for g in spheres_p:
        gv = set(g.subcomplex.labels)
        for h in spheres_q:
            if gv & set(h.subcomplex.labels):
                continue
            if p == q:
                pk = tuple(sorted((g.key(), h.key())))
                if pk in seen:
                    continue
                seen.add(pk)
                a, b = sorted((g, h), key=SphereWitness.key)
                pairs.append(LinkPair(gamma=a, gamma_prime=b))
            else:
                pairs.append(LinkPair(gamma=g, gamma_prime=h))
    return tuple(sorted(pairs, key=LinkPair.key))
