"""Reduced simplicial homology over prime fields via boundary-matrix ranks."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Prime coefficient field for homology and Betti computations."""

    characteristic: int = 2

    def __post_init__(self):
        p = self.characteristic
        if not (isinstance(p, int) and p < 2**31 and _is_prime(p)):
            raise ValueError(f"characteristic must be a prime below 2^31, got {p}")


GF2 = FieldSpec(2)


@dataclass(frozen=True)
class HomologyProfile:
    """Sparse map degree -> dim of reduced homology; zeros omitted.

    The empty complex {emptyset} has {-1: 1}; the void complex has nothing.
    """

    dims: dict = field(default_factory=dict)

    def dim(self, d):
        return self.dims.get(d, 0)

    @property
    def total(self):
        return sum(self.dims.values())


def matrix_rank(rows, fieldspec=GF2):
    """Row-echelon rank of a dense matrix (list of row lists) over the field."""
    p = fieldspec.characteristic
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if p == 2:
        packed = []
        for r in rows:
            bitrow = 0
            for j, a in enumerate(r):
                if a % 2:
                    bitrow |= 1 << j
            packed.append(bitrow)
        return kernels.rank_gf2_rows(packed, len(rows[0]))
    return kernels.rank_gfp(rows, p)


def profile_from_face_masks(masks, p):
    """Reduced homology dims from the full face-mask set of a complex.

    masks must be downward closed; 0 represents the empty face. The
    augmented chain complex is used, so a lone empty face gives {-1: 1}.
    """
    masks = set(masks)
    if not masks:
        return HomologyProfile({})
    if masks == {0}:
        return HomologyProfile({-1: 1})
    groups = {}
    for m in masks:
        if m:
            groups.setdefault(m.bit_count() - 1, []).append(m)
    top = max(groups)
    faces_by_dim = [sorted(groups.get(d, ())) for d in range(top + 1)]
    counts = [len(fs) for fs in faces_by_dim]
    ranks = [1] + kernels.chain_ranks(faces_by_dim, p)  # rank of the augmentation is 1
    dims = {}
    for d in range(top + 1):
        upper = ranks[d + 1] if d + 1 <= top else 0
        h = counts[d] - ranks[d] - upper
        if h:
            dims[d] = h
    return HomologyProfile(dims)


def reduced_homology(complex_, fieldspec=GF2):
    """HomologyProfile of a complex; void and {emptyset} follow the conventions."""
    return profile_from_face_masks(complex_.faces(), fieldspec.characteristic)
