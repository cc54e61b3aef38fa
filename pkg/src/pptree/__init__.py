"""Primitive Pythagorean triples via Fibonacci boxes.

Submodules: :mod:`boxcore` (boxes, half-angle tangents, radii, families),
:mod:`forest` (Barning-Hall and half-angle-tangent trees), :mod:`egypt`,
:mod:`circlegeom` and :mod:`cli`.
"""

from .boxcore import (
    FibBox,
    Hat,
    PptTriple,
    Radii,
    box_from_hat,
    box_from_triple,
    triple_from_box,
)
from .errors import InvariantViolation, PptError
from .forest import TreeKind, enumerate_level, locate, navigate

__version__ = "0.1.0"
