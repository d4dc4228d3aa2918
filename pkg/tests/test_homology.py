"""Reduced homology conventions, classic spaces, and chain-level properties."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from polarcodex.complexes import SimplicialComplex, boundary_sphere, stacked_sphere
from polarcodex.homology import (
    FieldSpec,
    profile_from_face_masks,
    reduced_homology,
)


def complex_on(labels, *facets):
    masks = []
    for facet in facets:
        m = 0
        for v in facet:
            m |= 1 << labels.index(v)
        masks.append(m)
    return SimplicialComplex(tuple(labels), tuple(masks))


def test_conventions_void_and_empty():
    void = SimplicialComplex((1,), ())
    assert reduced_homology(void).dims == {}
    empty = SimplicialComplex((1,), (0,))
    assert reduced_homology(empty).dims == {-1: 1}


def test_point_and_two_points():
    point = complex_on([1], (1,))
    assert reduced_homology(point).dims == {}
    two = complex_on([1, 2], (1,), (2,))
    assert reduced_homology(two).dims == {0: 1}


def test_hollow_triangle_is_a_circle():
    circle = complex_on([1, 2, 3], (1, 2), (2, 3), (1, 3))
    assert reduced_homology(circle).dims == {1: 1}


def test_spheres():
    assert reduced_homology(boundary_sphere(4)).dims == {2: 1}
    assert reduced_homology(stacked_sphere(2, 7)).dims == {2: 1}


def test_four_cycle():
    cycle = complex_on([1, 2, 3, 4], (1, 2), (2, 3), (3, 4), (1, 4))
    for p in (2, 3, 5):
        assert reduced_homology(cycle, FieldSpec(p)).dims == {1: 1}


def test_projective_plane_detects_the_characteristic():
    # Minimal 6-vertex triangulation of the real projective plane: torsion
    # makes the dims characteristic-dependent, exercising the signed ranks.
    rp2 = complex_on(
        [1, 2, 3, 4, 5, 6],
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
    )
    assert reduced_homology(rp2, FieldSpec(2)).dims == {1: 1, 2: 1}
    assert reduced_homology(rp2, FieldSpec(3)).dims == {}
    assert reduced_homology(rp2, FieldSpec(7)).dims == {}


def _random_downward_closed(rng, max_vertices=8):
    nverts = rng.randint(1, max_vertices)
    facets = tuple(
        rng.randrange(1, 1 << nverts) for _ in range(rng.randint(1, 6))
    )
    return SimplicialComplex(tuple(range(1, nverts + 1)), facets)


def test_euler_poincare_random_complexes():
    rng = random.Random(31337)
    for _ in range(40):
        complex_ = _random_downward_closed(rng)
        faces = [m for m in complex_.faces() if m]
        chi = sum((-1) ** (m.bit_count() - 1) for m in faces) - 1
        for p in (2, 3):
            profile = reduced_homology(complex_, FieldSpec(p))
            alt = sum((-1) ** d * v for d, v in profile.dims.items() if d >= 0)
            assert alt == chi, (complex_.facets, p)


def test_cones_are_acyclic():
    rng = random.Random(2718)
    for _ in range(40):
        nverts = rng.randint(1, 6)
        apex = 1 << nverts
        facets = tuple(
            rng.randrange(0, 1 << nverts) | apex for _ in range(rng.randint(1, 5))
        )
        cone = SimplicialComplex(tuple(range(1, nverts + 2)), facets)
        assert reduced_homology(cone).dims == {}
        assert reduced_homology(cone, FieldSpec(3)).dims == {}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**30))
def test_disjoint_union_adds_components(na, nb, seed):
    rng = random.Random(seed)
    a = SimplicialComplex(
        tuple(range(1, na + 1)),
        tuple(rng.randrange(1, 1 << na) for _ in range(rng.randint(1, 3))),
    )
    b_shift = na
    b = SimplicialComplex(
        tuple(range(1, nb + 1)),
        tuple(rng.randrange(1, 1 << nb) for _ in range(rng.randint(1, 3))),
    )
    union = SimplicialComplex(
        tuple(range(1, na + nb + 1)),
        a.facets + tuple(f << b_shift for f in b.facets),
    )
    h0 = lambda cx: reduced_homology(cx).dim(0)
    assert h0(union) == h0(a) + h0(b) + 1


def test_profile_from_face_masks_matches_reduced_homology():
    rng = random.Random(11)
    for _ in range(20):
        complex_ = _random_downward_closed(rng, 6)
        assert (
            profile_from_face_masks(complex_.faces(), 2).dims
            == reduced_homology(complex_).dims
        )
