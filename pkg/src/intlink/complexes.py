"""Finite simplicial complexes with explicit simplex storage.

Complexes here are tiny (a dozen vertices at most), so every simplex of every
dimension is stored explicitly as a sorted tuple of vertex indices.  That
keeps enumeration, deletion and file round-trips trivial at no real cost.

Vertex labels follow two canonical grammars: "a0", "a1", ... for skeleta of a
single simplex, and "a{j}^{i}" for the j-th point of the i-th join factor.
Labels sort factor-major so that construction order, file order and report
order all agree.
"""

from __future__ import annotations

import re
from itertools import combinations, product

from .errors import InvalidDeletionError, UnsupportedSizeError

_CANONICAL_LABEL = re.compile(r"^a(\d+)(?:\^(\d+))?$")

STANDARD_NAMES = ("N1", "N2", "N3", "SIGMA", "JOIN3")


def label_sort_key(label):
    """Canonical vertex order: "a0".."am" first, then join labels factor-major."""
    m = _CANONICAL_LABEL.match(label)
    if m:
        j, i = m.group(1), m.group(2)
        if i is None:
            return (0, 0, int(j))
        return (1, int(i), int(j))
    return (2, 0, 0, label)


class SimplicialComplex:
    """An immutable, downward-closed family of simplices on labelled vertices.

    Simplices are stored as strictly increasing tuples of vertex indices; the
    index order is the label order given at construction.  Every instance is
    closed under taking faces and never mutated afterwards, so values are safe
    to share across threads.
    """

    __slots__ = ("name", "labels", "_index", "_by_dim", "_set")

    def __init__(self, labels, maximal, name=None):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        self.name = name
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        closed = set((i,) for i in range(len(labels)))
        for simplex in maximal:
            idx = tuple(sorted(self._index[v] for v in simplex))
            if len(set(idx)) != len(idx):
                raise ValueError(f"repeated vertex in simplex {tuple(simplex)}")
            if not idx:
                raise ValueError("empty simplex")
            for r in range(1, len(idx) + 1):
                closed.update(combinations(idx, r))
        by_dim = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = tuple(
            tuple(sorted(by_dim.get(d, ()))) for d in range(max(by_dim) + 1)
        )
        self._set = frozenset(closed)

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self):
        return len(self._by_dim) - 1

    def num_vertices(self):
        return len(self.labels)

    def simplices(self, dim):
        """All simplices of one dimension, as sorted index tuples."""
        if dim < 0 or dim > self.dim:
            return ()
        return self._by_dim[dim]

    def all_simplices(self):
        for d in range(self.dim + 1):
            yield from self._by_dim[d]

    def __contains__(self, simplex):
        return tuple(simplex) in self._set

    def has_labels(self, simplex_labels):
        try:
            idx = tuple(sorted(self._index[v] for v in simplex_labels))
        except KeyError:
            return False
        return idx in self._set

    def to_labels(self, simplex):
        return tuple(self.labels[i] for i in simplex)

    def to_indices(self, simplex_labels):
        return tuple(sorted(self._index[v] for v in simplex_labels))

    def maximal_simplices(self):
        """Simplices that are not proper faces of other simplices."""
        out = []
        for d in range(self.dim + 1):
            uppers = self._by_dim[d + 1] if d + 1 <= self.dim else ()
            upper_faces = set()
            for u in uppers:
                upper_faces.update(combinations(u, d + 1))
            out.extend(s for s in self._by_dim[d] if s not in upper_faces)
        return tuple(out)

    def f_vector(self):
        return tuple(len(self._by_dim[d]) for d in range(self.dim + 1))

    def vertex_profile(self, v):
        """Per-dimension incidence counts of vertex index v (isomorphism pruning)."""
        return tuple(
            sum(1 for s in self._by_dim[d] if v in s) for d in range(self.dim + 1)
        )

    def is_downward_closed(self):
        for d in range(1, self.dim + 1):
            for s in self._by_dim[d]:
                for f in combinations(s, d):
                    if f not in self._set:
                        return False
        return True

    def relabel(self, mapping, name=None):
        """New complex with vertices renamed by `mapping` (label -> label)."""
        new_labels = sorted((mapping[v] for v in self.labels), key=label_sort_key)
        maximal = [
            tuple(mapping[v] for v in self.to_labels(s))
            for s in self.maximal_simplices()
        ]
        return SimplicialComplex(new_labels, maximal, name=name or self.name)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self._set == other._set

    def __hash__(self):
        return hash((self.labels, self._set))

    def __repr__(self):
        fv = ",".join(str(c) for c in self.f_vector())
        return f"SimplicialComplex({self.name or '?'}, f=({fv}))"


# -- constructors ---------------------------------------------------------


def skeleton_complex(m, k):
    """The k-skeleton of an m-simplex on vertices a0..am."""
    if k < 0 or k > m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    labels = [f"a{i}" for i in range(m + 1)]
    maximal = combinations(labels, k + 1)
    return SimplicialComplex(labels, maximal, name=f"skel_{m}_{k}")


def multi_join(k, m):
    """The m-fold join of k points: one vertex a{j}^{i} per point j of factor i.

    Simplices take at most one vertex from each factor; the top dimension is
    m - 1 (one vertex from every factor).
    """
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    labels = [f"a{j}^{i}" for i in range(m) for j in range(k)]
    maximal = product(*[[f"a{j}^{i}" for j in range(k)] for i in range(m)])
    return SimplicialComplex(labels, maximal, name=f"join_{k}_{m}")


def remove_top_simplices(complex_, simplices):
    """Delete maximal simplices (given as label tuples); faces are kept.

    Deleting a non-maximal simplex would silently break downward closure, so
    it is rejected instead of cascading.
    """
    doomed = set()
    for simplex in simplices:
        labels = tuple(simplex)
        if not complex_.has_labels(labels):
            raise KeyError(f"simplex {labels} not in complex")
        idx = complex_.to_indices(labels)
        d = len(idx) - 1
        for upper in complex_.simplices(d + 1):
            if set(idx) <= set(upper):
                raise InvalidDeletionError(
                    f"simplex {labels} is a proper face of {complex_.to_labels(upper)}"
                )
        doomed.add(idx)
    # Result simplices are exactly the old ones minus the deleted set; a
    # deleted isolated vertex leaves the vertex table too.
    doomed_vertices = {s[0] for s in doomed if len(s) == 1}
    labels = [
        lab for i, lab in enumerate(complex_.labels) if i not in doomed_vertices
    ]
    remaining = [
        complex_.to_labels(s)
        for d in range(complex_.dim + 1)
        for s in complex_.simplices(d)
        if s not in doomed
    ]
    return SimplicialComplex(labels, remaining, name=complex_.name)


def _renamed(complex_, name):
    maximal = [complex_.to_labels(s) for s in complex_.maximal_simplices()]
    return SimplicialComplex(complex_.labels, maximal, name=name)


def standard_complex(name, n):
    """Named constructions over a0..a{2n+2} or the (n+1)-fold join of 3 points.

    SIGMA  - the n-skeleton of the (2n+2)-simplex
    JOIN3  - the (n+1)-fold join of 3 points
    N1     - SIGMA minus every n-simplex containing a0
    N2     - JOIN3 minus every n-simplex containing a0^0
    N3     - SIGMA minus every n-simplex inside |a0 ... a{n+1}|
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if name == "SIGMA":
        return _renamed(skeleton_complex(2 * n + 2, n), f"sigma_{2*n+2}^{n}")
    if name == "JOIN3":
        return _renamed(multi_join(3, n + 1), f"join3^{n+1}")
    if name == "N1":
        K = skeleton_complex(2 * n + 2, n)
        gone = [s for s in K.simplices(n) if 0 in s]
        out = remove_top_simplices(K, [K.to_labels(s) for s in gone])
        return _renamed(out, f"N1({n})")
    if name == "N2":
        K = multi_join(3, n + 1)
        a00 = K.to_indices(("a0^0",))[0]
        gone = [s for s in K.simplices(n) if a00 in s]
        out = remove_top_simplices(K, [K.to_labels(s) for s in gone])
        return _renamed(out, f"N2({n})")
    if name == "N3":
        K = skeleton_complex(2 * n + 2, n)
        low = set(range(n + 2))
        gone = [s for s in K.simplices(n) if set(s) <= low]
        out = remove_top_simplices(K, [K.to_labels(s) for s in gone])
        return _renamed(out, f"N3({n})")
    raise ValueError(f"unknown complex name {name!r}; expected one of {STANDARD_NAMES}")


def boundary_complex(simplex_labels):
    """All proper faces of one simplex: a combinatorial (dim-1)-sphere."""
    labels = sorted(simplex_labels, key=label_sort_key)
    if len(labels) < 2:
        raise ValueError("boundary of a vertex is empty")
    maximal = combinations(labels, len(labels) - 1)
    return SimplicialComplex(labels, maximal)


def f_vector(complex_):
    return complex_.f_vector()


# -- small named graphs (1-complexes) used throughout the tests ------------


def complete_graph(labels):
    labels = list(labels)
    return SimplicialComplex(labels, combinations(labels, 2), name=f"K{len(labels)}")


def complete_multipartite(parts):
    """Complete multipartite graph; `parts` is a list of label lists."""
    labels = [v for part in parts for v in part]
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1:]
        for u in p
        for v in q
    ]
    name = "K" + ",".join(str(len(p)) for p in parts)
    return SimplicialComplex(labels, edges, name=name)


def disjoint_union(first, second, name=None):
    if set(first.labels) & set(second.labels):
        raise ValueError("label sets overlap")
    labels = list(first.labels) + list(second.labels)
    maximal = [first.to_labels(s) for s in first.maximal_simplices()] + [
        second.to_labels(s) for s in second.maximal_simplices()
    ]
    return SimplicialComplex(labels, maximal, name=name)


# -- isomorphism -----------------------------------------------------------

_ISO_VERTEX_BOUND = 12


def isomorphic(first, second):
    """Simplex-preserving vertex bijection between two complexes, or None.

    Plain backtracking with f-vector and per-vertex incidence-profile pruning;
    both complexes must have at most 12 vertices.
    """
    for c in (first, second):
        if c.num_vertices() > _ISO_VERTEX_BOUND:
            raise UnsupportedSizeError(
                f"isomorphism search limited to {_ISO_VERTEX_BOUND} vertices"
            )
    if first.f_vector() != second.f_vector():
        return None
    n = first.num_vertices()
    prof1 = [first.vertex_profile(v) for v in range(n)]
    prof2 = [second.vertex_profile(v) for v in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    # Assign the most constrained (rarest-profile) vertices first.
    rarity = {p: prof1.count(p) for p in set(prof1)}
    order = sorted(range(n), key=lambda v: (rarity[prof1[v]], prof1[v], v))
    simplices2 = second._set
    assignment = {}
    used = [False] * n

    def extend(pos):
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(n):
            if used[w] or prof1[v] != prof2[w]:
                continue
            assignment[v] = w
            used[w] = True
            if _consistent(first, v, assignment, simplices2) and extend(pos + 1):
                return True
            del assignment[v]
            used[w] = False
        return False

    if not extend(0):
        return None
    return {first.labels[v]: second.labels[w] for v, w in assignment.items()}


def _consistent(first, v, assignment, simplices2):
    # Every simplex of `first` newly completed by assigning v must map into
    # `second`; equal f-vectors then force the map to be a bijection on
    # simplices once total.
    dom = set(assignment)
    for d in range(first.dim + 1):
        for s in first.simplices(d):
            if v in s and set(s) <= dom:
                img = tuple(sorted(assignment[u] for u in s))
                if img not in simplices2:
                    return False
    return True


# -- text format -----------------------------------------------------------


def serialize_complex(complex_):
    """Line-oriented text form: header, then one maximal simplex per line."""
    lines = [f"complex {complex_.name or 'unnamed'} dim={complex_.dim}"]
    for s in complex_.maximal_simplices():
        lines.append(" ".join(complex_.to_labels(s)))
    return "\n".join(lines) + "\n"


def parse_complex(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("complex "):
        raise ValueError("missing 'complex <name> dim=<d>' header")
    header = lines[0].split()
    if len(header) != 3 or not header[2].startswith("dim="):
        raise ValueError(f"malformed header {lines[0]!r}")
    name = header[1]
    dim = int(header[2][4:])
    maximal = [tuple(ln.split()) for ln in lines[1:]]
    labels = sorted({v for s in maximal for v in s}, key=label_sort_key)
    out = SimplicialComplex(labels, maximal, name=name)
    if out.dim != dim:
        raise ValueError(f"header says dim={dim} but simplices give dim={out.dim}")
    return out


def write_complex(complex_, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_complex(complex_))


def read_complex(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())
