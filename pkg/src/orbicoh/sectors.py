"""Twisted sectors of a toric orbifold, enumerated from vertex local groups.

A sector is a fractional weight vector a in [0,1)^m whose image under the
weight matrix is integral; its support must be a face of the complex (the
fixed locus is the corresponding face of the polytope).  Every such sector
is visible in the local group of some vertex, because every nonempty face
of a compact polytope contains a vertex, so enumerating the vertex groups
and deduplicating finds them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .errors import UnlistedSectorError
from .lattice import IntMatrix
from .polytope import FaceComplex, LabeledPolytope
from .stanley_reisner import SRPresentation


def _mod1(x: Fraction) -> Fraction:
    return x % 1


def unit_circle_label(a: Fraction) -> str:
    """Exact label for exp(2*pi*i*a): 1, -1, i, -i, or e(p/q)."""
    if a == 0:
        return "1"
    if a == Fraction(1, 2):
        return "-1"
    if a == Fraction(1, 4):
        return "i"
    if a == Fraction(3, 4):
        return "-i"
    return "e(%d/%d)" % (a.numerator, a.denominator)


@dataclass(frozen=True)
class SectorElement:
    """Fractional weights of a finite-order torus element, one per facet."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if any(not (0 <= c < 1) for c in coords):
            raise ValueError("sector coordinates must lie in [0, 1)")
        object.__setattr__(self, "coords", coords)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c)

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)

    def age(self) -> Fraction:
        """Sum of the fractional weights; twice this is the degree shift."""
        return sum(self.coords, Fraction(0))

    def compose(self, other: "SectorElement") -> "SectorElement":
        """Componentwise addition mod 1.

        The result automatically satisfies the integrality condition, but
        its support need not be a face; callers must check before treating
        it as a listed sector.
        """
        return SectorElement(tuple(_mod1(a + b) for a, b in zip(self.coords, other.coords)))

    def inverse(self) -> "SectorElement":
        return SectorElement(tuple(_mod1(-a) for a in self.coords))

    def unit_circle_labels(self) -> tuple[str, ...]:
        return tuple(unit_circle_label(a) for a in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class SectorTable:
    """Canonical list of the sectors with nonempty fixed locus.

    Sectors are ordered lexicographically by coordinate vector, which puts
    the untwisted sector first and reproduces the orderings of the bundled
    worked examples.
    """

    def __init__(self, sectors, complex: FaceComplex):
        self.sectors = tuple(sectors)
        self.complex = complex
        self._index = {g.coords: k for k, g in enumerate(self.sectors)}

    def __len__(self):
        return len(self.sectors)

    def __iter__(self):
        return iter(self.sectors)

    def __getitem__(self, k) -> SectorElement:
        return self.sectors[k]

    @property
    def identity(self) -> SectorElement:
        return self.sectors[0]

    def contains(self, g: SectorElement) -> bool:
        return g.coords in self._index

    def index_of(self, g: SectorElement) -> int:
        try:
            return self._index[g.coords]
        except KeyError:
            raise UnlistedSectorError("sector %s is not in the table" % (g,)) from None

    def module(self, g: SectorElement) -> SRPresentation:
        """The presentation of the sector's summand: shift set = support."""
        self.index_of(g)
        return SRPresentation(self.complex, g.support)

    def fixed_face_vertices(self, g: SectorElement) -> tuple[int, ...]:
        """Indices of the vertices lying on the sector's fixed face."""
        self.index_of(g)
        return tuple(
            k for k, v in enumerate(self.complex.vertices) if g.support <= v.facet_set
        )


def enumerate_sectors(p: LabeledPolytope, fc: FaceComplex) -> SectorTable:
    """Enumerate sectors via the congruence group of every vertex.

    For a vertex with tight facets H, the local group consists of the
    solutions of B_H * a integral with a in [0,1)^H, where B_H stacks the
    scaled normals of the tight facets; each local solution is lifted to all
    m facet slots by zero padding, and duplicates across vertices merged.
    """
    m = p.num_facets
    seen = set()
    for v in fc.vertices:
        tight = sorted(v.facet_set)
        bv = IntMatrix.from_columns([p.scaled_normal(i) for i in tight], nrows=p.dim)
        for local in lattice.solve_congruence_group(bv):
            coords = [Fraction(0)] * m
            for slot, facet in enumerate(tight):
                coords[facet] = local[slot]
            seen.add(tuple(coords))
    return SectorTable([SectorElement(c) for c in sorted(seen)], fc)
