"""Restriction of orbifold cohomology classes to fixed orbifold points.

The restriction ring collects, for every sector g and every vertex on its
fixed face, a polynomial in that vertex's facet variables.  Its star
product mirrors the orbifold product through local isotropy data only: the
u-component of a product of sector blocks (g, h) is the product of the two
u-components times the same virtual/Euler monomial that appears in the
orbifold structure constants, and it vanishes unless the combined support
of g and h lies on the vertex u.  Restriction is a graded ring
homomorphism onto its image, and injective at desk scale; the rank check
makes the latter an explicit computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .chen_ruan import ChenRuanRing, CRClass
from .errors import ShapeMismatchError
from .polynomial import Polynomial, mono_support, monomials_up_to_degree
from .sectors import SectorElement
from .stanley_reisner import vertex_restrict


class NHClass:
    """Finite map (sector, vertex index) -> polynomial on vertex variables.

    Zero components are absent, which makes equality of restriction values
    a plain dictionary comparison.
    """

    __slots__ = ("_components",)

    def __init__(self, components):
        data = {}
        for key, p in (components.items() if hasattr(components, "items") else components):
            if p:
                if key in data:
                    raise ValueError("duplicate component")
                data[key] = p
        object.__setattr__(self, "_components", data)

    def __setattr__(self, name, value):
        raise AttributeError("NHClass is immutable")

    def items(self):
        return sorted(self._components.items(), key=lambda kv: (kv[0][0].coords, kv[0][1]))

    def component(self, g: SectorElement, vertex_index: int) -> Polynomial | None:
        return self._components.get((g, vertex_index))

    def __bool__(self):
        return bool(self._components)

    def __eq__(self, other):
        return isinstance(other, NHClass) and dict(self.items()) == dict(other.items())

    __hash__ = None

    def __add__(self, other):
        out = dict(self._components)
        for key, p in other._components.items():
            s = out[key] + p if key in out else p
            if s:
                out[key] = s
            else:
                del out[key]
        return NHClass(out)

    def __str__(self):
        if not self._components:
            return "0"
        return " + ".join(
            "(%s)@(sector %s, vertex %d)" % (p, g, v + 1) for (g, v), p in self.items()
        )


def restrict(ring: ChenRuanRing, a: CRClass) -> NHClass:
    """Restrict every component to the vertices of its fixed face."""
    out = {}
    for g, p in a.items():
        for v_index in ring.sectors.fixed_face_vertices(g):
            q = vertex_restrict(p, ring.complex.vertices[v_index])
            if q:
                out[(g, v_index)] = q
    return NHClass(out)


def _check_shape(ring: ChenRuanRing, a: NHClass):
    for (g, v_index), p in a.items():
        ring.sectors.index_of(g)
        vertex = ring.complex.vertices[v_index]
        if not g.support <= vertex.facet_set:
            raise ShapeMismatchError(
                "vertex %d is not on the fixed face of sector %s" % (v_index + 1, g))
        stray = p.support() - vertex.facet_set
        if stray:
            raise ShapeMismatchError(
                "component at vertex %d uses variables %r outside the vertex"
                % (v_index + 1, sorted(i + 1 for i in stray)))


def nh_multiply(ring: ChenRuanRing, a: NHClass, b: NHClass) -> NHClass:
    """Star product, bilinear over sector blocks.

    For sector blocks g of ``a`` and h of ``b`` with combined support U, the
    component of the product at a vertex u of the target's fixed face is
    a_(g,u) * b_(h,u) * (virtual and Euler monomial) when U lies on u, and
    zero otherwise.  Vertices that miss a monomial variable cannot satisfy
    U on u, so the truncation is automatic.
    """
    _check_shape(ring, a)
    _check_shape(ring, b)
    by_sector_a = {}
    for (g, v), p in a.items():
        by_sector_a.setdefault(g, {})[v] = p
    by_sector_b = {}
    for (h, w), q in b.items():
        by_sector_b.setdefault(h, {})[w] = q

    acc = {}
    for g, a_parts in by_sector_a.items():
        for h, b_parts in by_sector_b.items():
            union = g.support | h.support
            if not ring.complex.is_face(union):
                continue  # no vertex carries the combined support
            target = g.compose(h)
            inv = target.inverse()
            virtual = frozenset(
                i for i in union if g.coords[i] + h.coords[i] + inv.coords[i] == 2
            )
            euler = union - target.support
            exps = [0] * ring.num_vars
            for i in virtual:
                exps[i] += 1
            for i in euler:
                exps[i] += 1
            factor = Polynomial.monomial(ring.num_vars, exps)
            for u in ring.sectors.fixed_face_vertices(target):
                if not union <= ring.complex.vertices[u].facet_set:
                    continue
                pu = a_parts.get(u)
                qu = b_parts.get(u)
                if pu is None or qu is None:
                    continue
                term = pu * qu * factor
                if not term:
                    continue
                key = (target, u)
                if key in acc:
                    acc[key] = acc[key] + term
                else:
                    acc[key] = term
    return NHClass({k: p for k, p in acc.items() if p})


def check_homomorphism(ring: ChenRuanRing, a: CRClass, b: CRClass) -> bool:
    """Whether restriction intertwines the two products on this input."""
    lhs = restrict(ring, ring.multiply(a, b))
    rhs = nh_multiply(ring, restrict(ring, a), restrict(ring, b))
    return lhs == rhs


@dataclass(frozen=True)
class SectorInjectivity:
    """Rank data for the restriction of one sector module up to a degree."""

    sector: SectorElement
    domain_dimension: int
    rank: int
    injective: bool
    kernel_witness: tuple | None
    elementary_divisors: tuple | None  # only in strict mode


def injectivity_rank_check(ring: ChenRuanRing, degree_bound: int, strict_z: bool = False):
    """Per-sector rank check of the restriction map on monomial bases.

    For every sector, the monomials of its module up to the polynomial
    degree bound are mapped to the per-vertex monomial basis and the rank
    of the resulting integer matrix is computed over the rationals.  In
    strict mode the Smith form is computed as well and all elementary
    divisors are reported (all equal to 1 means the map is split injective
    over the integers).
    """
    reports = []
    for g in ring.sectors:
        tau = g.support
        columns = [
            e
            for e in monomials_up_to_degree(ring.num_vars, degree_bound)
            if ring.complex.is_face(mono_support(e) | tau)
        ]
        vertices = ring.sectors.fixed_face_vertices(g)
        row_index = {}
        for v in vertices:
            allowed = ring.complex.vertices[v].facet_set
            for e in monomials_up_to_degree(ring.num_vars, degree_bound):
                if mono_support(e) <= allowed:
                    row_index[(v, e)] = len(row_index)
        matrix = [[0] * len(columns) for _ in range(len(row_index))]
        for col, e in enumerate(columns):
            for v in vertices:
                if mono_support(e) <= ring.complex.vertices[v].facet_set:
                    matrix[row_index[(v, e)]][col] = 1
        rank = lattice.rational_rank(matrix) if matrix else 0
        injective = rank == len(columns)
        witness = None
        if not injective and columns:
            kernel = lattice.rational_kernel(matrix, ncols=len(columns))
            if kernel:
                witness = tuple(kernel[0])
        divisors = None
        if strict_z:
            if matrix and columns:
                divisors = lattice.snf(lattice.IntMatrix(matrix)).elementary_divisors()
            else:
                divisors = ()
        reports.append(
            SectorInjectivity(g, len(columns), rank, injective, witness, divisors)
        )
    return reports
