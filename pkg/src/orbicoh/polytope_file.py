"""Line-oriented text format for labeled polytopes.

Grammar (one record per line; ``#`` starts a comment, blank lines are
ignored; facet indices in files and messages are 1-based)::

    file   := dim-line facet-line+
    dim    := "dim" INT
    facet  := "facet" "normal" INT{dim} "label" POSINT "offset" RATIONAL

A RATIONAL is an integer or "p/q" with nonzero q.  The first
non-comment line must be the dim line, and every facet line must carry
exactly the keywords shown, in that order.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .polytope import LabeledPolytope


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("not a rational number: %r" % token) from None


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError("%s must be an integer, got %r" % (what, token), line) from None


def parse_polytope(text: str) -> LabeledPolytope:
    """Parse the file format, raising :class:`ParseError` with a line number
    on the first malformed record."""
    dim = None
    normals, labels, offsets = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if dim is None:
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError("expected 'dim <n>' as the first record", lineno)
            dim = _parse_int(tokens[1], lineno, "dimension")
            if dim < 1:
                raise ParseError("dimension must be positive", lineno)
            continue
        if tokens[0] != "facet":
            raise ParseError("expected a 'facet' record, got %r" % tokens[0], lineno)
        expected = 1 + 1 + dim + 2 + 2  # facet, normal, components, label x, offset y
        if len(tokens) != expected or tokens[1] != "normal":
            raise ParseError(
                "facet record must read 'facet normal %s label <b> offset <r>'"
                % " ".join(["<n%d>" % (k + 1) for k in range(dim)]), lineno)
        normal = tuple(_parse_int(t, lineno, "normal component") for t in tokens[2:2 + dim])
        if tokens[2 + dim] != "label":
            raise ParseError("expected 'label' keyword", lineno)
        label = _parse_int(tokens[3 + dim], lineno, "label")
        if label <= 0:
            raise ParseError("label must be a positive integer", lineno)
        if tokens[4 + dim] != "offset":
            raise ParseError("expected 'offset' keyword", lineno)
        try:
            offset = parse_rational(tokens[5 + dim])
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        normals.append(normal)
        labels.append(label)
        offsets.append(offset)
    if dim is None:
        raise ParseError("empty input: missing 'dim' record")
    if not normals:
        raise ParseError("no facet records found")
    return LabeledPolytope(dim, tuple(normals), tuple(labels), tuple(offsets))


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
