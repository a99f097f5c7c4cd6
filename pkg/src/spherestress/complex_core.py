"""Immutable simplicial complexes and their combinatorial operations.

A complex is stored by its inclusion-maximal faces (facets) over integer
vertex labels; all other faces are derived on demand and memoized per
dimension.  Every operation returns a new value, nothing is mutated.

The distinguished complex ``EMPTY`` is {∅}: the complex whose only face
is the empty face.  It shows up as the link of a facet and as the
(-1)-dimensional sphere; ``from_facets`` never produces it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .linalg import gf2_rank


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex-labeled simplicial complex given by its facets.

    Invariants: facets are pairwise incomparable, every vertex occurs in
    some facet, and face membership is closed under subsets by
    construction.  ``dim`` is max facet size minus one.
    """

    vertices: tuple[int, ...]
    facets: frozenset[frozenset[int]]
    dim: int

    @cached_property
    def faces_by_dim(self) -> dict[int, frozenset[frozenset[int]]]:
        """All faces grouped by dimension, including the empty face at -1."""
        seen: set[frozenset[int]] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                seen.update(frozenset(c) for c in combinations(fl, k))
        out: dict[int, set] = {}
        for s in seen:
            out.setdefault(len(s) - 1, set()).add(s)
        return {d: frozenset(fs) for d, fs in sorted(out.items())}

    def faces(self, k: int) -> frozenset[frozenset[int]]:
        """The k-dimensional faces (k = -1 gives {∅})."""
        return self.faces_by_dim.get(k, frozenset())

    def is_face(self, tau) -> bool:
        t = frozenset(tau)
        return any(t <= f for f in self.facets)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return self.faces(1)

    def __repr__(self):
        return f"SimplicialComplex(f0={len(self.vertices)}, dim={self.dim}, facets={len(self.facets)})"


EMPTY = SimplicialComplex(vertices=(), facets=frozenset({frozenset()}), dim=-1)


def _maximalize(sets: list[frozenset[int]]) -> frozenset[frozenset[int]]:
    uniq = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(s < k for k in kept):
            kept.append(s)
    return frozenset(kept)


def _make(facet_sets) -> SimplicialComplex:
    facets = _maximalize([frozenset(f) for f in facet_sets])
    if facets == frozenset({frozenset()}):
        return EMPTY
    verts: set[int] = set()
    for f in facets:
        verts.update(f)
    dim = max(len(f) for f in facets) - 1
    return SimplicialComplex(tuple(sorted(verts)), facets, dim)


def from_facets(facets) -> SimplicialComplex:
    """Build a complex from a family of facets (any iterables of ints).

    Non-maximal input faces are absorbed.  Raises ValueError on empty
    input, an empty facet, or a repeated vertex inside one facet.
    """
    facets = list(facets)
    if not facets:
        raise ValueError("need at least one facet")
    sets = []
    for f in facets:
        fl = list(f)
        if not fl:
            raise ValueError("facets must be nonempty")
        fs = frozenset(fl)
        if len(fs) != len(fl):
            raise ValueError(f"facet {sorted(fl)} repeats a vertex")
        sets.append(fs)
    return _make(sets)


def point(label: int) -> SimplicialComplex:
    return _make([{label}])


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary complex of a d-simplex on labels 1..d+1 (a (d-1)-sphere)."""
    if d <= 0:
        raise ValueError("boundary_simplex needs d >= 1")
    verts = range(1, d + 2)
    return _make([set(verts) - {v} for v in verts])


def cycle(n: int) -> SimplicialComplex:
    """The n-cycle 1-2-...-n-1 (a 1-sphere)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _make([{i, i % n + 1} for i in range(1, n + 1)])


def join(a: SimplicialComplex, b: SimplicialComplex, *rest) -> SimplicialComplex:
    """Join of complexes: faces are unions of faces, one from each factor.

    Vertex labels of the right factor are shifted when the label sets
    overlap, so the join is always defined.
    """
    if rest:
        return join(join(a, b), *rest)
    if a is EMPTY or not a.vertices:
        return b
    if b is EMPTY or not b.vertices:
        return a
    if set(a.vertices) & set(b.vertices):
        offset = max(a.vertices) + 1 - min(b.vertices)
        b = relabel(b, {v: v + offset for v in b.vertices})
    return _make([fa | fb for fa in a.facets for fb in b.facets])


def cone(a: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        apex = (max(a.vertices) if a.vertices else 0) + 1
    if apex in a.vertices:
        raise ValueError(f"apex {apex} already a vertex")
    return _make([f | {apex} for f in a.facets])


def suspension(a: SimplicialComplex) -> SimplicialComplex:
    return join(a, boundary_simplex(1))


def relabel(a: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("relabeling must be injective")
    return _make([{mapping[v] for v in f} for f in a.facets])


def link(c: SimplicialComplex, tau) -> SimplicialComplex:
    """Link of a face: all faces disjoint from tau whose union with tau is a face."""
    t = frozenset(tau)
    if not t:
        return c
    if not c.is_face(t):
        raise ValueError(f"{sorted(t)} is not a face")
    return _make([f - t for f in c.facets if t <= f])


def star(c: SimplicialComplex, tau) -> SimplicialComplex:
    t = frozenset(tau)
    if not c.is_face(t):
        raise ValueError(f"{sorted(t)} is not a face")
    return _make([f for f in c.facets if t <= f])


def antistar(c: SimplicialComplex, v: int) -> SimplicialComplex:
    if not c.is_face({v}):
        raise ValueError(f"{v} is not a vertex")
    return _make([f - {v} for f in c.facets])


def skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    if not 0 <= k <= c.dim:
        raise ValueError(f"skeleton dimension {k} out of range 0..{c.dim}")
    small = [f for f in c.facets if len(f) <= k]
    return _make(list(c.faces(k)) + small)


def induced(c: SimplicialComplex, w) -> SimplicialComplex:
    """Induced subcomplex on the vertex subset w."""
    ws = frozenset(w)
    if not ws:
        raise ValueError("induced subcomplex needs a nonempty vertex set")
    if not ws <= set(c.vertices):
        raise ValueError("vertex set must be contained in the complex")
    return _make([f & ws for f in c.facets if f & ws])


@dataclass(frozen=True)
class MissingFace:
    """A non-face all of whose proper subsets are faces."""

    vertex_set: frozenset[int]

    @property
    def dim(self) -> int:
        return len(self.vertex_set) - 1

    def __repr__(self):
        return f"MissingFace({sorted(self.vertex_set)})"


def missing_faces(c: SimplicialComplex) -> list[MissingFace]:
    """All missing faces, sorted by (dimension, vertex labels)."""
    out: list[frozenset[int]] = []
    for u, v in combinations(c.vertices, 2):
        if not c.is_face({u, v}):
            out.append(frozenset({u, v}))
    size = 3
    while True:
        lower = c.faces(size - 2)
        if not lower:
            break
        cands = {f | {v} for f in lower for v in c.vertices if v not in f}
        for s in sorted(cands, key=sorted):
            if c.is_face(s):
                continue
            if all(c.is_face(s - {v}) for v in s):
                out.append(s)
        size += 1
    out.sort(key=lambda s: (len(s), sorted(s)))
    return [MissingFace(s) for s in out]


def missing_face_counts(c: SimplicialComplex) -> dict[int, int]:
    """m_i = number of missing i-faces, as a dict over occurring dimensions."""
    counts: dict[int, int] = {}
    for mf in missing_faces(c):
        counts[mf.dim] = counts.get(mf.dim, 0) + 1
    return counts


def max_missing_dim(c: SimplicialComplex) -> int:
    mf = missing_faces(c)
    return max(m.dim for m in mf) if mf else 0


def in_class_S(c: SimplicialComplex, j: int) -> bool:
    """True when no missing face has dimension larger than j."""
    return max_missing_dim(c) <= j


def is_flag(c: SimplicialComplex) -> bool:
    return in_class_S(c, 1)


class InadmissibleContraction(ValueError):
    """Raised when an edge to contract lies in a missing face."""

    def __init__(self, edge, witness):
        self.edge = frozenset(edge)
        self.witness = witness
        super().__init__(
            f"edge {sorted(self.edge)} lies in the missing face {sorted(witness)}"
        )


def contract_edge(c: SimplicialComplex, u: int, v: int) -> SimplicialComplex:
    """Contract the edge uv to a fresh vertex.

    Requires lk(uv) = lk(u) ∩ lk(v), equivalently that uv lies in no
    missing face; otherwise InadmissibleContraction is raised carrying a
    witness missing face.  The new vertex gets label max(vertices)+1.
    The result is not checked for sphere-ness; callers validate.
    """
    e = frozenset({u, v})
    if not c.is_face(e):
        raise ValueError(f"{sorted(e)} is not an edge")
    for mf in missing_faces(c):
        if e <= mf.vertex_set:
            raise InadmissibleContraction(e, mf.vertex_set)
    w = max(c.vertices) + 1
    return _make([(f - e) | {w} if f & e else f for f in c.facets])


# ---------------------------------------------------------------------------
# Homology over the two-element field
# ---------------------------------------------------------------------------

def z2_reduced_betti(c: SimplicialComplex) -> list[int]:
    """Reduced Betti numbers over GF(2), indexed from dimension -1.

    Ranks of the boundary maps are computed by bit-mask elimination; the
    augmentation map to the empty face is included, so the result for a
    k-sphere is 1 in position k+1 and 0 elsewhere.
    """
    if c is EMPTY:
        return [1]
    fbd = c.faces_by_dim
    index = {d: {f: i for i, f in enumerate(sorted(fs, key=sorted))}
             for d, fs in fbd.items()}
    ranks: dict[int, int] = {}
    for d in range(0, c.dim + 1):
        below = index[d - 1]
        rows = []
        for f in index[d]:
            mask = 0
            for v in f:
                mask |= 1 << below[f - {v}]
            rows.append(mask)
        ranks[d] = gf2_rank(rows)
    betti = []
    for d in range(-1, c.dim + 1):
        n_d = len(fbd.get(d, ()))
        betti.append(n_d - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return betti


def is_z2_homology_sphere(c: SimplicialComplex) -> bool:
    """True when every face link (including the empty face) has the
    reduced GF(2) homology of a sphere of the matching dimension."""
    if c is EMPTY:
        return True
    if not c.is_pure():
        raise ValueError("homology sphere test needs a pure complex")
    d = c.dim + 1
    for fdim, faces in c.faces_by_dim.items():
        for f in faces:
            lk = link(c, f)
            k = d - 2 - fdim  # dimension of the expected sphere
            betti = z2_reduced_betti(lk)
            expected = [1 if i == k + 1 else 0 for i in range(len(betti))]
            if betti != expected:
                return False
    return True


# ---------------------------------------------------------------------------
# Isomorphism testing (small complexes)
# ---------------------------------------------------------------------------

def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Backtracking isomorphism test, fine for desk-scale complexes."""
    if a.dim != b.dim or len(a.vertices) != len(b.vertices):
        return False
    if sorted(len(f) for f in a.facets) != sorted(len(f) for f in b.facets):
        return False

    def profile(c, v):
        deg = sum(1 for e in c.faces(1) if v in e)
        in_facets = sorted(len(f) for f in c.facets if v in f)
        return (deg, tuple(in_facets))

    prof_a = {v: profile(a, v) for v in a.vertices}
    prof_b = {v: profile(b, v) for v in b.vertices}
    if sorted(prof_a.values()) != sorted(prof_b.values()):
        return False

    adj_a = {v: {u for e in a.faces(1) if v in e for u in e if u != v} for v in a.vertices}
    adj_b = {v: {u for e in b.faces(1) if v in e for u in e if u != v} for v in b.vertices}
    order = sorted(a.vertices, key=lambda v: (prof_a[v], v))

    def extend(i, mapping, used):
        if i == len(order):
            mapped = frozenset(frozenset(mapping[v] for v in f) for f in a.facets)
            return mapped == b.facets
        v = order[i]
        for w in b.vertices:
            if w in used or prof_b[w] != prof_a[v]:
                continue
            ok = True
            for v2, w2 in mapping.items():
                if (v2 in adj_a[v]) != (w2 in adj_b[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1, mapping, used):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0, {}, set())


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def complex_to_json(c: SimplicialComplex, name: str = "",
                    coordinates: dict[int, tuple[Fraction, ...]] | None = None) -> str:
    doc: dict = {
        "name": name,
        "facets": sorted([sorted(f) for f in c.facets]),
    }
    if coordinates is not None:
        doc["coordinates"] = {
            str(v): [f"{q.numerator}/{q.denominator}" for q in coords]
            for v, coords in sorted(coordinates.items())
        }
    return json.dumps(doc, sort_keys=True)


def complex_from_json(text: str):
    """Parse the interchange schema; returns (complex, name, coordinates)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ValueError("complex document needs a 'facets' list")
    c = from_facets(doc["facets"])
    name = doc.get("name", "")
    coords = None
    if "coordinates" in doc:
        coords = {}
        for v, vals in doc["coordinates"].items():
            coords[int(v)] = tuple(Fraction(s) for s in vals)
        if set(coords) != set(c.vertices):
            raise ValueError("coordinates must cover exactly the vertices")
    return c, name, coords
