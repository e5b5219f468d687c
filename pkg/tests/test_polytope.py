from fractions import Fraction

import pytest

from orbicoh.errors import NotSimpleError
from orbicoh.lattice import IntMatrix
from orbicoh.polytope import (
    LabeledPolytope,
    ensure_valid,
    enumerate_vertices,
    face_complex,
    validate,
    weight_matrix,
)

from helpers import recession_ray_brute_force


def triangle(labels=(1, 1, 1)):
    return LabeledPolytope(
        dim=2,
        normals=((0, 1), (-2, -1), (1, 0)),
        labels=labels,
        offsets=(0, 2, 0),
    )


def test_validate_p112(p112):
    report = validate(p112)
    assert report.ok
    assert report.num_vertices == 3


def test_validate_all_bundled_examples(p124, square12, cp2):
    for p in (p124, square12, cp2):
        assert validate(p).ok


def test_validate_slab_unbounded():
    slab = LabeledPolytope(
        dim=2,
        normals=((0, 1), (0, -1), (1, 0)),
        labels=(1, 1, 1),
        offsets=(0, 2, 0),
    )
    report = validate(slab)
    assert not report.ok
    assert report.condition == "UnboundedPolytope"


def test_validate_duplicated_facet_redundant(unit_square):
    doubled = LabeledPolytope(
        dim=2,
        normals=unit_square.normals + ((1, 0),),
        labels=unit_square.labels + (1,),
        offsets=unit_square.offsets + (Fraction(0),),
    )
    report = validate(doubled)
    assert not report.ok
    assert report.condition == "RedundantFacet"


def test_validate_loose_redundant_inequality(unit_square):
    # x >= -1 never touches the unit square
    loose = LabeledPolytope(
        dim=2,
        normals=unit_square.normals + ((1, 0),),
        labels=unit_square.labels + (1,),
        offsets=unit_square.offsets + (Fraction(1),),
    )
    report = validate(loose)
    assert not report.ok
    assert report.condition == "RedundantFacet"


def test_validate_square_pyramid_not_simple():
    pyramid = LabeledPolytope(
        dim=3,
        normals=((0, 0, 1), (-1, 0, -1), (1, 0, -1), (0, -1, -1), (0, 1, -1)),
        labels=(1, 1, 1, 1, 1),
        offsets=(0, 1, 1, 1, 1),
    )
    report = validate(pyramid)
    assert not report.ok
    assert report.condition == "NotSimple"
    with pytest.raises(NotSimpleError):
        ensure_valid(pyramid)


def test_validate_nonprimitive_normal():
    bad = LabeledPolytope(
        dim=2,
        normals=((0, 2), (-2, -1), (1, 0)),
        labels=(1, 1, 1),
        offsets=(0, 2, 0),
    )
    report = validate(bad)
    assert not report.ok
    assert report.condition == "NonPrimitiveNormal"


def test_validate_torsion_cokernel():
    # product of two copies of a label-2 segment: weight matrix 2x diag(2,-2,...)
    p = LabeledPolytope(
        dim=2,
        normals=((1, 0), (-1, 0), (0, 1), (0, -1)),
        labels=(2, 2, 2, 2),
        offsets=(0, 1, 0, 1),
    )
    report = validate(p)
    assert not report.ok
    assert report.condition == "TorsionCokernel"


def test_boundedness_matches_brute_force_recession_ray():
    cases = [
        triangle(),
        LabeledPolytope(2, ((0, 1), (0, -1), (1, 0)), (1, 1, 1), (0, 2, 0)),
        LabeledPolytope(2, ((1, 0), (0, 1)), (1, 1), (0, 0)),
        LabeledPolytope(1, ((1,), (-1,)), (1, 1), (0, 1)),
        LabeledPolytope(1, ((1,),), (1,), (0,)),
        LabeledPolytope(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)),
                        (1, 1, 1, 1), (0, 0, 0, 1)),
    ]
    for p in cases:
        ray = recession_ray_brute_force(p.normals, p.dim)
        report = validate(p)
        if ray is None:
            assert report.condition != "UnboundedPolytope"
        else:
            assert not report.ok and report.condition == "UnboundedPolytope"


def test_enumerate_vertices_p112(p112):
    vertices = enumerate_vertices(p112)
    got = [(v.point, v.facet_set) for v in vertices]
    assert got == [
        ((Fraction(0), Fraction(0)), frozenset({0, 2})),
        ((Fraction(0), Fraction(2)), frozenset({1, 2})),
        ((Fraction(1), Fraction(0)), frozenset({0, 1})),
    ]


def test_enumerate_vertices_standard_simplex(cp2):
    vertices = enumerate_vertices(cp2)
    points = [v.point for v in vertices]
    assert points == [
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
    ]


def test_p124_has_same_combinatorics(p112, p124):
    sets112 = [v.facet_set for v in enumerate_vertices(p112)]
    sets124 = [v.facet_set for v in enumerate_vertices(p124)]
    assert sets112 == sets124


def test_vertices_simple_on_validated_input(p112, p124, square12, cp2):
    for p in (p112, p124, square12, cp2):
        for v in enumerate_vertices(p):
            assert len(v.facet_set) == p.dim


def test_weight_matrix_values(p112, p124, unit_square):
    assert weight_matrix(p112) == IntMatrix([[0, -2, 1], [1, -1, 0]])
    assert weight_matrix(p124) == IntMatrix([[0, -2, 1], [2, -1, 0]])
    assert weight_matrix(unit_square) == IntMatrix([[1, -1, 0, 0], [0, 0, 1, -1]])


def test_face_complex_triangle(p112):
    fc = face_complex(p112)
    assert fc.minimal_nonfaces == (frozenset({0, 1, 2}),)
    assert len(fc.edges) == 3
    # vertex order: (0,0) {0,2}; (0,2) {1,2}; (1,0) {0,1}
    by_pair = {(e.v, e.w): (e.facet_v, e.facet_w) for e in fc.edges}
    assert by_pair[(0, 1)] == (0, 1)  # shared facet 2
    assert by_pair[(0, 2)] == (2, 1)  # shared facet 0
    assert by_pair[(1, 2)] == (2, 0)  # shared facet 1


def test_face_complex_square(unit_square):
    fc = face_complex(unit_square)
    assert set(fc.minimal_nonfaces) == {frozenset({0, 1}), frozenset({2, 3})}
    assert len(fc.edges) == 4


def test_is_face_consistent_with_minimal_nonfaces(p112, unit_square, square12):
    import itertools

    for p in (p112, unit_square, square12):
        fc = face_complex(p)
        m, n = p.num_facets, p.dim
        for size in range(n + 1):
            for sigma in itertools.combinations(range(m), size):
                s = frozenset(sigma)
                expected = not any(nf <= s for nf in fc.minimal_nonfaces)
                assert fc.is_face(s) == expected


def test_edges_share_exactly_dim_minus_one_facets(square12, cp2):
    for p in (square12, cp2):
        fc = face_complex(p)
        for e in fc.edges:
            shared = fc.vertices[e.v].facet_set & fc.vertices[e.w].facet_set
            assert len(shared) == p.dim - 1
            assert fc.vertices[e.v].facet_set - fc.vertices[e.w].facet_set == {e.facet_v}
            assert fc.vertices[e.w].facet_set - fc.vertices[e.v].facet_set == {e.facet_w}


def test_rational_offsets_allowed():
    p = LabeledPolytope(
        dim=1,
        normals=((1,), (-1,)),
        labels=(1, 3),
        offsets=(Fraction(1, 3), Fraction(5, 7)),
    )
    assert validate(p).ok
    vertices = enumerate_vertices(p)
    assert vertices[0].point == (Fraction(-1, 3),)
    assert vertices[1].point == (Fraction(5, 21),)


def test_labeled_polytope_rejects_bad_input():
    with pytest.raises(ValueError):
        LabeledPolytope(2, ((1, 0),), (0,), (0,))  # nonpositive label
    with pytest.raises(ValueError):
        LabeledPolytope(2, ((1,),), (1,), (0,))  # wrong normal length
