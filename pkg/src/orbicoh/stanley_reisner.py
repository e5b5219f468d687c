"""Stanley-Reisner presentations and the piecewise-polynomial vertex model.

``SRPresentation`` with an empty shift set presents the face ring of the
polytope: the polynomial ring on one variable per facet modulo the
squarefree monomials of non-faces.  A nonempty shift set tau (a face)
presents the analogous ring of the face cut out by tau, with the tau
variables kept polynomial.  Because the ideals are squarefree monomial
ideals, the normal form is a pure support test: a term survives exactly
when its support together with tau is a face.

The piecewise model assigns to every vertex the polynomial ring on its own
facet variables; a tuple of such polynomials belongs to the model when the
two restrictions agree across every edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAFaceInclusionError, ShapeMismatchError
from .polynomial import Polynomial, mono_support
from .polytope import FaceComplex, VertexData


@dataclass(frozen=True)
class SRPresentation:
    """Quotient presentation Z[x_1..x_m] / < x^sigma : sigma + tau not a face >."""

    complex: FaceComplex
    tau: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "tau", frozenset(self.tau))
        if self.tau and not self.complex.is_face(self.tau):
            raise ValueError("shift set must be a face of the complex")

    @property
    def num_vars(self) -> int:
        return self.complex.num_facets

    def reduce(self, p: Polynomial) -> Polynomial:
        """Canonical normal form: drop every term whose support, together
        with the shift set, is not a face.

        This is complete for squarefree monomial ideals: a term is killed
        exactly when some ideal generator divides it.
        """
        if p.num_vars != self.num_vars:
            raise ValueError("polynomial has the wrong number of variables")
        return Polynomial(
            p.num_vars,
            {e: c for e, c in p.items() if self.complex.is_face(mono_support(e) | self.tau)},
        )

    def ideal_generators(self) -> tuple[frozenset[int], ...]:
        """Supports of the minimal squarefree generators of the ideal.

        These are the inclusion-minimal sets among N - tau for N a minimal
        non-face of the complex.
        """
        candidates = {nf - self.tau for nf in self.complex.minimal_nonfaces}
        minimal = [
            s for s in candidates if not any(t < s for t in candidates)
        ]
        return tuple(sorted(minimal, key=lambda s: (len(s), sorted(s))))

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.num_vars)

    def one(self) -> Polynomial:
        return Polynomial.one(self.num_vars)


def vertex_restrict(p: Polynomial, v: VertexData) -> Polynomial:
    """Substitute x_i = 0 for every facet i not through the vertex."""
    allowed = v.facet_set
    return p.substitute_zero(i for i in range(p.num_vars) if i not in allowed)


@dataclass(frozen=True)
class PWTuple:
    """One polynomial per vertex, each on that vertex's facet variables."""

    components: tuple[Polynomial, ...]

    def __mul__(self, other):
        return PWTuple(tuple(a * b for a, b in zip(self.components, other.components)))

    def __add__(self, other):
        return PWTuple(tuple(a + b for a, b in zip(self.components, other.components)))


def sr_to_pw(p: Polynomial, fc: FaceComplex) -> PWTuple:
    """Restrict a polynomial to every vertex at once.

    On normal forms this realizes the isomorphism between the face ring and
    the piecewise-polynomial model.
    """
    return PWTuple(tuple(vertex_restrict(p, v) for v in fc.vertices))


def gkm_membership(t: PWTuple, fc: FaceComplex) -> bool:
    """Whether a per-vertex tuple satisfies every edge matching condition.

    For an edge between vertices v and w with distinguished facets j (on v
    only) and i (on w only), the components must agree after setting x_j = 0
    on the v side and x_i = 0 on the w side.
    """
    if len(t.components) != len(fc.vertices):
        raise ShapeMismatchError(
            "expected %d components, got %d" % (len(fc.vertices), len(t.components)))
    for idx, (component, vertex) in enumerate(zip(t.components, fc.vertices)):
        stray = component.support() - vertex.facet_set
        if stray:
            raise ShapeMismatchError(
                "component %d uses variables %r outside its vertex"
                % (idx + 1, sorted(i + 1 for i in stray)))
    for edge in fc.edges:
        left = t.components[edge.v].substitute_zero([edge.facet_v])
        right = t.components[edge.w].substitute_zero([edge.facet_w])
        if left != right:
            return False
    return True


def _require_same_complex(frm: SRPresentation, to: SRPresentation):
    if frm.complex is not to.complex:
        raise ValueError("presentations built on different face complexes")


def face_pullback(p: Polynomial, frm: SRPresentation, to: SRPresentation) -> Polynomial:
    """Restriction to a smaller face: identity on variables, then normal
    form in the target presentation.  Requires frm.tau <= to.tau."""
    _require_same_complex(frm, to)
    if not frm.tau <= to.tau:
        raise NotAFaceInclusionError(
            "pullback requires the source shift set to be contained in the target")
    return to.reduce(p)


def face_pushforward(p: Polynomial, frm: SRPresentation, to: SRPresentation) -> Polynomial:
    """Wrong-way map to a larger face, determined by 1 |-> x^(frm.tau - to.tau)."""
    _require_same_complex(frm, to)
    if not to.tau <= frm.tau:
        raise NotAFaceInclusionError(
            "pushforward requires the target shift set to be contained in the source")
    factor = Polynomial.squarefree(p.num_vars, frm.tau - to.tau)
    return to.reduce(p * factor)
