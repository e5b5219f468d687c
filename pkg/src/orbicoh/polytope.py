"""Labeled polytopes: validation, vertex enumeration, and the face complex.

A labeled polytope is a simple rational polytope
Delta = { v : <b_i rho_i, v> + eta_i >= 0 } with primitive integer facet
normals rho_i, positive integer facet labels b_i and rational offsets
eta_i.  Facet indices are 0-based throughout this module; command-line and
file formats convert to the 1-based convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import lattice
from .errors import (
    NonPrimitiveNormalError,
    NotSimpleError,
    RedundantFacetError,
    TorsionCokernelError,
    UnboundedPolytopeError,
)
from .lattice import IntMatrix
from .lp import positively_spans


@dataclass(frozen=True)
class LabeledPolytope:
    """The sole input datum: normals, labels and offsets, one per facet."""

    dim: int
    normals: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    offsets: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "normals", tuple(tuple(int(x) for x in row) for row in self.normals))
        object.__setattr__(self, "labels", tuple(int(b) for b in self.labels))
        object.__setattr__(self, "offsets", tuple(Fraction(e) for e in self.offsets))
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not (len(self.normals) == len(self.labels) == len(self.offsets)):
            raise ValueError("normals, labels and offsets must have equal length")
        if any(len(row) != self.dim for row in self.normals):
            raise ValueError("normal vectors must have length dim")
        if any(b <= 0 for b in self.labels):
            raise ValueError("facet labels must be positive integers")

    @property
    def num_facets(self) -> int:
        return len(self.normals)

    def scaled_normal(self, i) -> tuple[int, ...]:
        """The i-th column b_i * rho_i of the weight matrix."""
        return tuple(self.labels[i] * x for x in self.normals[i])

    def facet_value(self, i, point) -> Fraction:
        """<b_i rho_i, point> + eta_i, exactly."""
        return sum(
            (Fraction(c) * Fraction(x) for c, x in zip(self.scaled_normal(i), point)),
            self.offsets[i],
        )


@dataclass(frozen=True)
class VertexData:
    """A vertex point together with the set of facets tight at it."""

    point: tuple[Fraction, ...]
    facet_set: frozenset[int]


@dataclass(frozen=True)
class Edge:
    """An edge of the polytope between vertices ``v`` and ``w`` (indices into
    the vertex list), annotated with the unique facet through each endpoint
    that misses the other."""

    v: int
    w: int
    facet_v: int
    facet_w: int


def weight_matrix(p: LabeledPolytope) -> IntMatrix:
    """The dim x num_facets matrix whose columns are b_i * rho_i."""
    return IntMatrix.from_columns([p.scaled_normal(i) for i in range(p.num_facets)], nrows=p.dim)


def enumerate_vertices(p: LabeledPolytope) -> list[VertexData]:
    """All vertices of the polytope, by brute force over facet subsets.

    Every n-subset of facets with a nonsingular normal matrix is solved
    exactly; solutions violating some inequality are discarded, duplicates
    merged, and the full tight set recorded per point.  Vertices are sorted
    by coordinates, which fixes the canonical vertex order used everywhere
    downstream.
    """
    m, n = p.num_facets, p.dim
    found = {}
    for subset in itertools.combinations(range(m), n):
        rows = [p.scaled_normal(i) for i in subset]
        rhs = [-p.offsets[i] for i in subset]
        sol = lattice.rational_solve(rows, rhs)
        if sol is None:
            continue
        point = tuple(sol)
        if point in found:
            continue
        values = [p.facet_value(i, point) for i in range(m)]
        if any(val < 0 for val in values):
            continue
        found[point] = frozenset(i for i, val in enumerate(values) if val == 0)
    return [VertexData(pt, found[pt]) for pt in sorted(found)]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: str | None
    message: str
    num_vertices: int | None = None


def validate(p: LabeledPolytope) -> ValidationReport:
    """Check the construction preconditions, reporting the first violation.

    In order: (a) primitive normals, (b) boundedness, (c) irredundancy of
    every facet (each inequality uniquely tight somewhere, which also forces
    full dimension and nonemptiness), (d) simplicity, (e) free cokernel of
    the transposed weight matrix.
    """
    n = p.dim
    for i, rho in enumerate(p.normals):
        g = 0
        for x in rho:
            g = gcd(g, abs(x))
        if g != 1:
            return ValidationReport(
                False, "NonPrimitiveNormal",
                "facet %d: normal %r has entry gcd %d" % (i + 1, list(rho), g))

    if not positively_spans(p.normals, n):
        return ValidationReport(
            False, "UnboundedPolytope",
            "the recession cone of the inequality system is nontrivial")

    vertices = enumerate_vertices(p)

    for i in range(p.num_facets):
        on_facet = [v for v in vertices if i in v.facet_set]
        if not on_facet:
            return ValidationReport(
                False, "RedundantFacet",
                "facet %d is tight at no vertex (redundant or empty polytope)" % (i + 1))
        count = len(on_facet)
        barycenter = tuple(
            sum((v.point[k] for v in on_facet), Fraction(0)) / count for k in range(n)
        )
        tight = frozenset(
            j for j in range(p.num_facets) if p.facet_value(j, barycenter) == 0
        )
        if tight != frozenset([i]):
            others = sorted(j + 1 for j in tight if j != i)
            return ValidationReport(
                False, "RedundantFacet",
                "facet %d is nowhere uniquely tight (its relative interior "
                "also lies on facets %r)" % (i + 1, others))

    for idx, v in enumerate(vertices):
        if len(v.facet_set) != n:
            return ValidationReport(
                False, "NotSimple",
                "vertex %d at %s lies on %d facets, expected %d"
                % (idx + 1, tuple(map(str, v.point)), len(v.facet_set), n))

    if not lattice.is_free_cokernel(weight_matrix(p).transpose()):
        return ValidationReport(
            False, "TorsionCokernel",
            "the transposed weight matrix has a nonfree cokernel")

    return ValidationReport(True, None, "ok", num_vertices=len(vertices))


_ERROR_BY_CONDITION = {
    "NonPrimitiveNormal": NonPrimitiveNormalError,
    "UnboundedPolytope": UnboundedPolytopeError,
    "RedundantFacet": RedundantFacetError,
    "NotSimple": NotSimpleError,
    "TorsionCokernel": TorsionCokernelError,
}


def ensure_valid(p: LabeledPolytope) -> None:
    """Raise the typed error for the first violated validation condition."""
    report = validate(p)
    if not report.ok:
        raise _ERROR_BY_CONDITION[report.condition](report.message)


class FaceComplex:
    """The simplicial complex on facet indices induced by the vertices.

    A subset of facets is a face exactly when it is contained in the tight
    set of some vertex.  The complex also carries the inclusion-minimal
    non-faces (generators of the non-face ideal) and the edge graph with its
    distinguished facet annotations.
    """

    def __init__(self, polytope: LabeledPolytope):
        self.polytope = polytope
        self.num_facets = polytope.num_facets
        self.dim = polytope.dim
        self.vertices = tuple(enumerate_vertices(polytope))
        self._facet_sets = tuple(v.facet_set for v in self.vertices)
        self.minimal_nonfaces = self._find_minimal_nonfaces()
        self.edges = self._find_edges()

    def is_face(self, sigma) -> bool:
        sigma = frozenset(sigma)
        return any(sigma <= fs for fs in self._facet_sets)

    def _find_minimal_nonfaces(self):
        # Increasing cardinality with superset pruning; any subset larger
        # than dim+1 facets contains a smaller non-face, so the search stops
        # there.
        found = []
        for size in range(1, self.dim + 2):
            for sigma in itertools.combinations(range(self.num_facets), size):
                s = frozenset(sigma)
                if any(nf <= s for nf in found):
                    continue
                if not self.is_face(s):
                    found.append(s)
        return tuple(found)

    def _find_edges(self):
        edges = []
        n = self.dim
        for a, b in itertools.combinations(range(len(self.vertices)), 2):
            fa, fb = self._facet_sets[a], self._facet_sets[b]
            if len(fa & fb) != n - 1:
                continue
            only_a = fa - fb
            only_b = fb - fa
            if len(only_a) == 1 and len(only_b) == 1:
                edges.append(Edge(a, b, next(iter(only_a)), next(iter(only_b))))
        return tuple(edges)


def face_complex(p: LabeledPolytope) -> FaceComplex:
    """Build the face complex of a (validated) labeled polytope."""
    return FaceComplex(p)
