import itertools
import random

import pytest

from orbicoh.errors import NotAFaceInclusionError, ShapeMismatchError
from orbicoh.lattice import rational_rank
from orbicoh.polynomial import Polynomial, mono_support, monomials_up_to_degree
from orbicoh.polytope import face_complex
from orbicoh.stanley_reisner import (
    PWTuple,
    SRPresentation,
    face_pullback,
    face_pushforward,
    gkm_membership,
    sr_to_pw,
    vertex_restrict,
)

from helpers import random_class  # noqa: F401  (fixture helpers live here)


@pytest.fixture(scope="module")
def fc(p112):
    return face_complex(p112)


@pytest.fixture(scope="module")
def sr(fc):
    return SRPresentation(fc)


def variables(m):
    return [Polynomial.variable(m, i) for i in range(m)]


def test_reduce_kills_nonface_monomial(sr):
    x1, x2, x3 = variables(3)
    assert sr.reduce(x1 * x2 * x3) == Polynomial.zero(3)
    assert sr.reduce(x1 * x2) == x1 * x2


def test_reduce_with_shift_set(fc):
    x1, x2, x3 = variables(3)
    shifted = SRPresentation(fc, frozenset({0, 1}))
    assert shifted.reduce(x1 ** 2 * x2) == x1 ** 2 * x2
    assert shifted.reduce(x3) == Polynomial.zero(3)
    # the sector ideal of the shift set {1} (0-based {0}) is <x2*x3>
    single = SRPresentation(fc, frozenset({0}))
    assert single.reduce(x2 * x3 + 5 * x1) == 5 * x1
    assert single.ideal_generators() == (frozenset({1, 2}),)


def test_reduce_requires_face_shift(fc):
    with pytest.raises(ValueError):
        SRPresentation(fc, frozenset({0, 1, 2}))


def test_reduce_is_idempotent_ring_morphism(sr):
    rng = random.Random(3)
    monos = monomials_up_to_degree(3, 3)

    def rand_poly():
        return Polynomial(
            3,
            [(monos[rng.randrange(len(monos))], rng.randint(-4, 4)) for _ in range(3)],
        )

    for _ in range(100):
        p, q = rand_poly(), rand_poly()
        rp = sr.reduce(p)
        assert sr.reduce(rp) == rp
        assert sr.reduce(p * q) == sr.reduce(sr.reduce(p) * sr.reduce(q))


def test_vertex_restrict_examples(fc):
    x1, x2, x3 = variables(3)
    v12 = next(v for v in fc.vertices if v.facet_set == {0, 1})
    assert vertex_restrict(x1 * x2 + x3, v12) == x1 * x2
    assert vertex_restrict(x3, v12) == Polynomial.zero(3)
    v13 = next(v for v in fc.vertices if v.facet_set == {0, 2})
    assert vertex_restrict(x1, v13) == x1


def test_sr_to_pw_examples(fc):
    x1, x2, x3 = variables(3)
    # canonical vertex order: {0,2}, {1,2}, {0,1}
    t = sr_to_pw(x1, fc)
    assert t.components == (x1, Polynomial.zero(3), x1)
    assert sr_to_pw(x1 * x2 * x3, fc).components == tuple([Polynomial.zero(3)] * 3)
    for v, comp in zip(fc.vertices, sr_to_pw(x2 + x3 ** 2, fc).components):
        assert comp == vertex_restrict(x2 + x3 ** 2, v)


def test_sr_to_pw_multiplicative(fc, sr):
    rng = random.Random(5)
    monos = monomials_up_to_degree(3, 2)

    def rand_poly():
        return Polynomial(
            3,
            [(monos[rng.randrange(len(monos))], rng.randint(-4, 4)) for _ in range(3)],
        )

    for _ in range(50):
        p, q = rand_poly(), rand_poly()
        left = sr_to_pw(sr.reduce(p * q), fc)
        right = sr_to_pw(p, fc) * sr_to_pw(q, fc)
        assert left.components == right.components


def test_gkm_membership(fc):
    x1 = Polynomial.variable(3, 0)
    assert gkm_membership(sr_to_pw(x1, fc), fc)
    assert gkm_membership(sr_to_pw(Polynomial.zero(3), fc), fc)
    lopsided = PWTuple(
        (Polynomial.one(3), Polynomial.zero(3), Polynomial.zero(3)))
    assert not gkm_membership(lopsided, fc)


def test_gkm_membership_shape_errors(fc):
    x2 = Polynomial.variable(3, 1)
    with pytest.raises(ShapeMismatchError):
        # first vertex has facets {0,2}; variable x2 is forbidden there
        gkm_membership(PWTuple((x2, Polynomial.zero(3), Polynomial.zero(3))), fc)
    with pytest.raises(ShapeMismatchError):
        gkm_membership(PWTuple((Polynomial.zero(3),)), fc)


def test_image_of_reduced_polynomials_satisfies_gkm(fc, sr):
    for e in monomials_up_to_degree(3, 4):
        p = sr.reduce(Polynomial.monomial(3, e))
        assert gkm_membership(sr_to_pw(p, fc), fc)


def test_face_pullback(fc):
    x1, x2, x3 = variables(3)
    small = SRPresentation(fc, frozenset({0}))
    big = SRPresentation(fc, frozenset({0, 1}))
    assert face_pullback(x2 * x3, small, big) == Polynomial.zero(3)
    assert face_pullback(x1, small, big) == x1
    assert face_pullback(x2 * x3 + x1, small, small) == small.reduce(x2 * x3 + x1)
    with pytest.raises(NotAFaceInclusionError):
        face_pullback(x1, big, small)


def test_face_pushforward(fc):
    x1, x2, x3 = variables(3)
    whole = SRPresentation(fc)
    small = SRPresentation(fc, frozenset({0}))
    big = SRPresentation(fc, frozenset({0, 1}))
    assert face_pushforward(Polynomial.one(3), big, whole) == x1 * x2
    assert face_pushforward(Polynomial.one(3), big, small) == x2
    assert face_pushforward(x3, big, big) == big.reduce(x3)
    with pytest.raises(NotAFaceInclusionError):
        face_pushforward(x1, whole, big)


def test_projection_formula(fc):
    # pushforward(pullback(q) * p) == q * pushforward(p) for nested faces
    rng = random.Random(9)
    monos = monomials_up_to_degree(3, 2)
    small = SRPresentation(fc, frozenset({0}))
    big = SRPresentation(fc, frozenset({0, 1}))

    def rand_poly():
        return Polynomial(
            3,
            [(monos[rng.randrange(len(monos))], rng.randint(-3, 3)) for _ in range(2)],
        )

    for _ in range(50):
        q = small.reduce(rand_poly())
        p = big.reduce(rand_poly())
        lhs = face_pushforward(face_pullback(q, small, big) * p, big, small)
        rhs = small.reduce(q * face_pushforward(p, big, small))
        assert lhs == rhs


def _restriction_matrix(fc, degree):
    """Rows: (vertex, local monomial); columns: face-supported monomials."""
    columns = [
        e for e in monomials_up_to_degree(fc.num_facets, degree)
        if fc.is_face(mono_support(e))
    ]
    rows = {}
    for vi, v in enumerate(fc.vertices):
        for e in monomials_up_to_degree(fc.num_facets, degree):
            if mono_support(e) <= v.facet_set:
                rows[(vi, e)] = len(rows)
    matrix = [[0] * len(columns) for _ in rows]
    for col, e in enumerate(columns):
        for vi, v in enumerate(fc.vertices):
            if mono_support(e) <= v.facet_set:
                matrix[rows[(vi, e)]][col] = 1
    return matrix, columns


@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_vertex_restriction_injective_up_to_degree(p112, p124, unit_square, degree):
    for p in (p112, p124, unit_square):
        fc = face_complex(p)
        matrix, columns = _restriction_matrix(fc, degree)
        assert rational_rank(matrix) == len(columns)


def test_ideal_generators_unit_square(unit_square):
    pres = SRPresentation(face_complex(unit_square))
    assert set(pres.ideal_generators()) == {frozenset({0, 1}), frozenset({2, 3})}
