"""The equivariant Chen-Ruan orbifold cohomology ring of a toric orbifold.

A class is a finite sum of per-sector polynomials, each stored in normal
form for its sector's presentation.  The product of two sector identities
is a single monomial in the target sector: the product of the virtual-class
variables (indices where the three-way fractional weight sum of g, h and
the inverse of gh equals 2) and the normal-bundle Euler variables (indices
in the combined support that leave the support of gh).  Everything else
follows by bilinearity, since each sector summand is generated by its
identity over the polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial
from .polytope import FaceComplex, LabeledPolytope, ensure_valid, face_complex
from .sectors import SectorElement, SectorTable, enumerate_sectors


class CRClass:
    """Finite map from sectors to polynomials; zero components absent.

    Build instances through :meth:`ChenRuanRing.cr_class` so the
    polynomials are reduced to normal form; equality is exact equality of
    the reduced components.
    """

    __slots__ = ("_components",)

    def __init__(self, components):
        data = {}
        for g, p in (components.items() if hasattr(components, "items") else components):
            if p:
                if g in data:
                    raise ValueError("duplicate sector component")
                data[g] = p
        object.__setattr__(self, "_components", data)

    def __setattr__(self, name, value):
        raise AttributeError("CRClass is immutable")

    def items(self):
        return sorted(self._components.items(), key=lambda kv: kv[0].coords)

    def component(self, g: SectorElement) -> Polynomial | None:
        return self._components.get(g)

    def sectors(self):
        return sorted(self._components, key=lambda g: g.coords)

    def __bool__(self):
        return bool(self._components)

    def __eq__(self, other):
        return isinstance(other, CRClass) and dict(self.items()) == dict(other.items())

    __hash__ = None

    def __add__(self, other):
        out = dict(self._components)
        for g, p in other._components.items():
            s = out[g] + p if g in out else p
            if s:
                out[g] = s
            else:
                del out[g]
        return CRClass(out)

    def __neg__(self):
        return CRClass({g: -p for g, p in self._components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        return CRClass({g: scalar * p for g, p in self._components.items()})

    def __str__(self):
        if not self._components:
            return "0"
        return " + ".join("(%s)*1_[%s]" % (p, g) for g, p in self.items())


@dataclass(frozen=True)
class StructureConstant:
    """The monomial factor carried by a product of two sector identities.

    ``is_zero`` flags the degenerate case where the supports of g and h do
    not lie on a common face, so the product vanishes outright.  Otherwise
    the factor is the product of the virtual-class and Euler-class
    variables, with multiplicity for an index in both sets.
    """

    g: SectorElement
    h: SectorElement
    target: SectorElement | None
    virtual_indices: frozenset[int]
    euler_indices: frozenset[int]
    is_zero: bool

    def monomial_exponents(self, num_vars) -> tuple[int, ...]:
        exps = [0] * num_vars
        for i in self.virtual_indices:
            exps[i] += 1
        for i in self.euler_indices:
            exps[i] += 1
        return tuple(exps)


@dataclass(frozen=True)
class MultiplicationTable:
    """All pairwise products of sector identities, in factored form."""

    sectors: tuple[SectorElement, ...]
    entries: dict  # (row index, col index) -> StructureConstant


class ChenRuanRing:
    """Orbifold cohomology ring attached to a validated labeled polytope."""

    def __init__(self, complex: FaceComplex, sectors: SectorTable):
        self.complex = complex
        self.sectors = sectors
        self.num_vars = complex.num_facets

    @classmethod
    def from_polytope(cls, p: LabeledPolytope) -> "ChenRuanRing":
        ensure_valid(p)
        fc = face_complex(p)
        return cls(fc, enumerate_sectors(p, fc))

    @property
    def polytope(self) -> LabeledPolytope:
        return self.complex.polytope

    # -- class constructors --------------------------------------------

    def cr_class(self, components) -> CRClass:
        """Build a class, reducing every component in its presentation."""
        reduced = {}
        for g, p in (components.items() if hasattr(components, "items") else components):
            q = self.sectors.module(g).reduce(p)
            if q:
                total = reduced[g] + q if g in reduced else q
                if total:
                    reduced[g] = total
                elif g in reduced:
                    del reduced[g]
        return CRClass(reduced)

    def identity_class(self, g: SectorElement) -> CRClass:
        self.sectors.index_of(g)
        return CRClass({g: Polynomial.one(self.num_vars)})

    def zero_class(self) -> CRClass:
        return CRClass({})

    # -- the product -----------------------------------------------------

    def structure_constant(self, g: SectorElement, h: SectorElement) -> StructureConstant:
        """Factorized product of the identities of two listed sectors."""
        self.sectors.index_of(g)
        self.sectors.index_of(h)
        union = g.support | h.support
        if not self.complex.is_face(union):
            return StructureConstant(g, h, None, frozenset(), frozenset(), True)
        target = g.compose(h)
        # support(target) is contained in the face `union`, so it is listed
        self.sectors.index_of(target)
        inv = target.inverse()
        virtual = frozenset(
            i for i in union if g.coords[i] + h.coords[i] + inv.coords[i] == 2
        )
        euler = union - target.support
        return StructureConstant(g, h, target, virtual, euler, False)

    def multiply(self, a: CRClass, b: CRClass) -> CRClass:
        """Bilinear extension of the identity products."""
        acc: dict[SectorElement, Polynomial] = {}
        for g, p in a.items():
            for h, q in b.items():
                sc = self.structure_constant(g, h)
                if sc.is_zero:
                    continue
                factor = Polynomial.monomial(self.num_vars, sc.monomial_exponents(self.num_vars))
                term = self.sectors.module(sc.target).reduce(p * q * factor)
                if not term:
                    continue
                if sc.target in acc:
                    acc[sc.target] = acc[sc.target] + term
                else:
                    acc[sc.target] = term
        return CRClass({g: p for g, p in acc.items() if p})

    # -- grading -----------------------------------------------------------

    def rational_degree(self, a: CRClass) -> Fraction | None:
        """Common rational degree of all components, or None.

        A component with polynomial part homogeneous of degree d in a
        sector g sits in degree 2*d + 2*age(g).  Mixed-sector classes whose
        degrees coincide accidentally still count as homogeneous.  The zero
        class has no degree.
        """
        degrees = set()
        for g, p in a.items():
            d = p.homogeneous_degree()
            if d is None:
                return None
            degrees.add(2 * d + 2 * g.age())
        if len(degrees) == 1:
            return degrees.pop()
        return None

    # -- tables ------------------------------------------------------------

    def multiplication_table(self) -> MultiplicationTable:
        entries = {}
        for i, g in enumerate(self.sectors):
            for j, h in enumerate(self.sectors):
                entries[(i, j)] = self.structure_constant(g, h)
        return MultiplicationTable(tuple(self.sectors), entries)
