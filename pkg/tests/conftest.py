import pytest

from orbicoh import ChenRuanRing, LabeledPolytope, load_bundled


@pytest.fixture(scope="session")
def p112():
    return load_bundled("p2_112")


@pytest.fixture(scope="session")
def p124():
    return load_bundled("p2_124")


@pytest.fixture(scope="session")
def square12():
    return load_bundled("square_12")


@pytest.fixture(scope="session")
def cp2():
    return load_bundled("cp2")


@pytest.fixture(scope="session")
def unit_square():
    return LabeledPolytope(
        dim=2,
        normals=((1, 0), (-1, 0), (0, 1), (0, -1)),
        labels=(1, 1, 1, 1),
        offsets=(0, 1, 0, 1),
    )


@pytest.fixture(scope="session")
def ring112(p112):
    return ChenRuanRing.from_polytope(p112)


@pytest.fixture(scope="session")
def ring124(p124):
    return ChenRuanRing.from_polytope(p124)


@pytest.fixture(scope="session")
def ring_square(square12):
    return ChenRuanRing.from_polytope(square12)


@pytest.fixture(scope="session")
def ring_cp2(cp2):
    return ChenRuanRing.from_polytope(cp2)
