"""Simplicial complexes as facet antichains of bitmasks.

A complex stores an ordered vertex label list and its facets as masks over
that list. The void complex (no faces) and the empty complex {emptyset}
are distinct: facets () versus (0,). Faces are enumerated on demand from
the facets, which keeps 16-vertex ambient complexes tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import NeuralCode, bits_of, iter_submasks
from .errors import UnitIdealError
from .ideal import SquarefreeIdeal, monomial_from_vertex_mask

MAX_NONFACE_VERTICES = 20


def _prune_to_maximal(masks):
    """Antichain of maximal masks under containment."""
    distinct = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    kept = []
    for m in distinct:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: tuple

    def __post_init__(self):
        full = (1 << len(self.vertices)) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet uses a vertex outside the label list")
        object.__setattr__(self, "facets", _prune_to_maximal(self.facets))

    @property
    def is_void(self):
        return not self.facets

    @property
    def is_empty_complex(self):
        return self.facets == (0,)

    @property
    def vertex_mask(self):
        """Mask of labels that are actual vertices (i.e. singleton faces)."""
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    @property
    def num_vertices(self):
        return self.vertex_mask.bit_count()

    @property
    def dim(self):
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def contains_face(self, mask):
        return any(mask & ~f == 0 for f in self.facets)

    def faces(self):
        """All faces as a set of masks (includes 0 unless void)."""
        seen = set()
        for f in self.facets:
            if f in seen:
                continue
            for sub in iter_submasks(f):
                if sub in seen:
                    continue
                seen.add(sub)
        return seen

    def faces_by_dim(self):
        """Nonempty faces grouped by dimension, each list sorted ascending."""
        groups = {}
        for mask in self.faces():
            if mask:
                groups.setdefault(mask.bit_count() - 1, []).append(mask)
        return [sorted(groups[d]) for d in range(len(groups))]

    def label_face(self, mask):
        return tuple(self.vertices[i] for i in bits_of(mask))


def induced(complex_, wmask):
    """Induced subcomplex on the vertex subset wmask (same label list)."""
    full = (1 << len(complex_.vertices)) - 1
    if wmask & ~full:
        raise ValueError("W is not a subset of the ambient vertices")
    if complex_.is_void:
        return complex_
    return SimplicialComplex(complex_.vertices, tuple(f & wmask for f in complex_.facets))


def polar_labels(n):
    return tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(n))


def stanley_reisner_complex(ideal):
    """Complex on the 2n ambient labels whose minimal nonfaces are the generators.

    Labels that are degree-1 generators are not vertices of the complex but
    stay in the ambient label list. Variables dividing no generator are cone
    points: they belong to every facet.
    """
    labels = polar_labels(ideal.n)
    ambient = (1 << len(labels)) - 1
    gen_masks = [g.vertex_mask for g in ideal.gens]
    if not gen_masks:
        return SimplicialComplex(labels, (ambient,))
    support = 0
    for g in gen_masks:
        support |= g
    cone = ambient & ~support
    inner = []
    for sub in iter_submasks(support):
        if not any(g & ~sub == 0 for g in gen_masks):
            inner.append(sub)
    return SimplicialComplex(labels, tuple(f | cone for f in _prune_to_maximal(inner)))


def minimal_nonfaces(complex_):
    """Minimal subsets of the ambient label list that are not faces."""
    if complex_.is_void:
        raise ValueError("the void complex has no nonfaces")
    nv = len(complex_.vertices)
    if nv > MAX_NONFACE_VERTICES:
        raise ValueError(f"nonface enumeration is capped at {MAX_NONFACE_VERTICES} vertices")
    vmask = complex_.vertex_mask
    ambient = (1 << nv) - 1
    out = [1 << i for i in bits_of(ambient & ~vmask)]
    for size in range(2, vmask.bit_count() + 1):
        for combo in combinations(bits_of(vmask), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if complex_.contains_face(mask):
                continue
            if all(complex_.contains_face(mask ^ (1 << i)) for i in combo):
                out.append(mask)
    return sorted(out)


def ideal_from_complex(complex_, n):
    """Stanley-Reisner ideal of a complex living on the 2n polar labels."""
    gens = [monomial_from_vertex_mask(n, m) for m in minimal_nonfaces(complex_)]
    if any(g.degree == 0 for g in gens):
        raise UnitIdealError("the void complex corresponds to the unit ideal")
    return SquarefreeIdeal(n, tuple(gens))


def is_connected(complex_):
    """Connectivity of the 1-skeleton on the actual vertices."""
    if complex_.is_void or complex_.is_empty_complex:
        raise ValueError("connectivity is undefined without vertices")
    verts = bits_of(complex_.vertex_mask)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in complex_.facets:
        fb = bits_of(f)
        for a, b in zip(fb, fb[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    roots = {find(v) for v in verts}
    return len(roots) == 1


def boundary_sphere(r):
    """Boundary of the (r-1)-simplex on labels 1..r; an (r-2)-sphere."""
    if r < 2:
        raise ValueError("boundary_sphere needs r >= 2")
    full = (1 << r) - 1
    return SimplicialComplex(
        tuple(range(1, r + 1)), tuple(full ^ (1 << i) for i in range(r))
    )


def stacked_sphere(d, m, stacking=None):
    """Stacked d-sphere on labels 1..m.

    Starts from the boundary of a (d+1)-simplex and repeatedly subdivides a
    facet with a new vertex. By default the smallest current facet in colex
    order (equivalently, smallest as a bitmask integer: highest vertex
    label compared first) is subdivided each time; an explicit stacking
    sequence of facets (as vertex-label tuples) may be supplied instead.
    """
    if m < d + 2:
        raise ValueError("a stacked d-sphere needs at least d + 2 vertices")
    base = boundary_sphere(d + 2)
    facets = set(base.facets)
    for step, new_vertex in enumerate(range(d + 3, m + 1)):
        if stacking is None:
            target = min(facets)
        else:
            want = 0
            for label in stacking[step]:
                want |= 1 << (label - 1)
            if want not in facets:
                raise ValueError(f"{stacking[step]} is not a facet at step {step}")
            target = want
        facets.remove(target)
        nv = 1 << (new_vertex - 1)
        for i in bits_of(target):
            facets.add((target ^ (1 << i)) | nv)
    return SimplicialComplex(tuple(range(1, m + 1)), tuple(sorted(facets)))


def simplicial_code(complex_):
    """Code on m neurons whose words are exactly the faces of the complex."""
    m = len(complex_.vertices)
    if complex_.vertices != tuple(range(1, m + 1)):
        raise ValueError("simplicial codes need vertex labels 1..m")
    if complex_.is_void:
        raise ValueError("the void complex has no associated code")
    return NeuralCode(m, tuple(complex_.faces()))
