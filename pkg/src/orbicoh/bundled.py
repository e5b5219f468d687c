"""Access to the polytope files shipped with the package."""

from __future__ import annotations

from importlib import resources

from .polytope import LabeledPolytope
from .polytope_file import parse_polytope

BUNDLED_NAMES = ("p2_112", "p2_124", "cp1", "cp2", "cp3", "square_12")


def bundled_text(name: str) -> str:
    if name not in BUNDLED_NAMES:
        raise KeyError("unknown bundled polytope %r; available: %s" % (name, ", ".join(BUNDLED_NAMES)))
    return resources.files("orbicoh").joinpath("data", name + ".poly").read_text(encoding="utf-8")


def load_bundled(name: str) -> LabeledPolytope:
    return parse_polytope(bundled_text(name))
